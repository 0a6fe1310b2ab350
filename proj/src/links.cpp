#include "coverkit/links.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace coverkit {

namespace {

// Union-find over arc ids, used by the braid closure.
struct ArcUnion {
  std::map<int, int> parent;

  int find(int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    return it->second = find(it->second);
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller id as representative
    parent[b] = a;
  }
};

}  // namespace

LinkDiagram LinkDiagram::build(std::vector<Crossing> crossings, std::vector<int> circles,
                               std::optional<BraidData> braid, std::string name) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.braid_ = std::move(braid);
  d.name_ = std::move(name);

  std::set<int> arc_set(circles.begin(), circles.end());
  if (arc_set.size() != circles.size())
    throw InconsistentOrientation("diagram: repeated split circle id");
  std::map<int, int> in_count, out_count;
  for (const auto& c : d.crossings_) {
    for (int a : {c.over, c.under_in, c.under_out}) {
      if (a < 1) throw InconsistentOrientation("diagram: arc ids must be positive");
      arc_set.insert(a);
    }
    if (c.sign != 1 && c.sign != -1)
      throw InconsistentOrientation("diagram: crossing sign must be +1 or -1");
    ++in_count[c.under_in];
    ++out_count[c.under_out];
  }
  for (int a : circles)
    if (in_count.count(a) || out_count.count(a) ||
        std::any_of(d.crossings_.begin(), d.crossings_.end(),
                    [&](const Crossing& c) { return c.over == a; }))
      throw InconsistentOrientation("diagram: split circle " + std::to_string(a) +
                                    " appears in a crossing");

  // Every arc either runs between two undercrossings or is a closed circle
  // (possibly passing over crossings, never under).
  for (int a : arc_set) {
    int i = in_count.count(a) ? in_count[a] : 0;
    int o = out_count.count(a) ? out_count[a] : 0;
    if (!((i == 1 && o == 1) || (i == 0 && o == 0)))
      throw InconsistentOrientation("diagram: arc " + std::to_string(a) +
                                    " has " + std::to_string(i) + " undercrossing entries and " +
                                    std::to_string(o) + " exits");
  }

  d.arcs_.assign(arc_set.begin(), arc_set.end());

  // Components: follow under_in -> under_out; arcs with no undercrossing
  // close up on themselves.
  std::map<int, int> next;
  for (const auto& c : d.crossings_) next[c.under_in] = c.under_out;
  std::set<int> seen;
  for (int a : d.arcs_) {
    if (seen.count(a)) continue;
    std::vector<int> comp;
    int cur = a;
    do {
      comp.push_back(cur);
      seen.insert(cur);
      auto it = next.find(cur);
      cur = it == next.end() ? a : it->second;
    } while (cur != a);
    d.components_.push_back(std::move(comp));
  }
  // Outer loop visits arcs in increasing order, so each component starts at
  // its smallest arc and components are ordered by that arc.
  for (std::size_t i = 0; i < d.components_.size(); ++i)
    for (int arc : d.components_[i]) d.comp_of_[arc] = static_cast<int>(i);
  return d;
}

int LinkDiagram::component_of(int arc) const {
  auto it = comp_of_.find(arc);
  if (it == comp_of_.end())
    throw UnknownComponent("diagram: no arc " + std::to_string(arc));
  return it->second;
}

int LinkDiagram::meridian_arc(int component) const {
  if (component < 0 || component >= num_components())
    throw UnknownComponent("diagram: no component " + std::to_string(component));
  return components_[component][0];
}

std::vector<int> LinkDiagram::split_circles() const {
  std::set<int> used;
  for (const auto& c : crossings_) {
    used.insert(c.over);
    used.insert(c.under_in);
    used.insert(c.under_out);
  }
  std::vector<int> out;
  for (int a : arcs_)
    if (!used.count(a)) out.push_back(a);
  return out;
}

LinkDiagram parse_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) throw ParseError("braid: need at least one strand");
  for (int letter : word)
    if (letter == 0 || std::abs(letter) >= strands)
      throw ParseError("braid: letter " + std::to_string(letter) + " out of range for " +
                       std::to_string(strands) + " strands");

  std::vector<int> pos(strands);
  std::iota(pos.begin(), pos.end(), 1);
  int next_arc = strands + 1;
  std::vector<Crossing> crossings;
  for (int letter : word) {
    int i = std::abs(letter) - 1;  // 0-based position
    Crossing c;
    if (letter > 0) {
      c = Crossing{pos[i], pos[i + 1], next_arc, +1};
      pos[i + 1] = pos[i];
      pos[i] = next_arc;
    } else {
      c = Crossing{pos[i + 1], pos[i], next_arc, -1};
      pos[i] = pos[i + 1];
      pos[i + 1] = next_arc;
    }
    ++next_arc;
    crossings.push_back(c);
  }

  // Closure: the arc leaving position p at the bottom is the arc that
  // entered it at the top.
  ArcUnion uf;
  for (int p = 0; p < strands; ++p) uf.unite(pos[p], p + 1);
  std::map<int, int> compact;
  for (int a = 1; a < next_arc; ++a) {
    int rep = uf.find(a);
    if (!compact.count(rep)) compact[rep] = static_cast<int>(compact.size()) + 1;
  }
  auto rename = [&](int a) { return compact[uf.find(a)]; };
  std::set<int> used;
  for (auto& c : crossings) {
    c.over = rename(c.over);
    c.under_in = rename(c.under_in);
    c.under_out = rename(c.under_out);
    used.insert(c.over);
    used.insert(c.under_in);
    used.insert(c.under_out);
  }
  std::vector<int> circles;
  for (const auto& [rep, id] : compact)
    if (!used.count(id)) circles.push_back(id);

  return LinkDiagram::build(std::move(crossings), std::move(circles),
                            BraidData{word, strands});
}

LinkDiagram parse_braid_text(const std::string& word_text, int strands) {
  std::vector<int> word;
  std::istringstream is(word_text);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      word.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("braid: bad letter \"" + tok + "\"");
    }
  }
  return parse_braid(word, strands);
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<Crossing> crossings;
  std::vector<int> circles;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("pd line " + std::to_string(lineno) + ": " + why);
    };
    if (head.size() >= 2 && head[0] == 'O') {
      int a = 0;
      if (std::sscanf(head.c_str(), "O[%d]", &a) != 1 || a < 1)
        throw fail("expected O[arc]");
      std::string rest;
      if (ls >> rest) throw fail("unexpected trailing text");
      circles.push_back(a);
      continue;
    }
    if (head.size() >= 2 && head[0] == 'X') {
      int a = 0, b = 0, c = 0, e = 0;
      if (std::sscanf(head.c_str(), "X[%d,%d,%d,%d]", &a, &b, &c, &e) != 4)
        throw fail("expected X[under_in,over,under_out,over]");
      std::string sign_tok;
      if (!(ls >> sign_tok) || (sign_tok != "+1" && sign_tok != "-1" && sign_tok != "1"))
        throw fail("expected sign +1 or -1");
      std::string rest;
      if (ls >> rest) throw fail("unexpected trailing text");
      if (b != e)
        throw InconsistentOrientation("pd line " + std::to_string(lineno) +
                                      ": over slots disagree (" + std::to_string(b) + " vs " +
                                      std::to_string(e) + ")");
      crossings.push_back(Crossing{b, a, c, sign_tok == "-1" ? -1 : +1});
      continue;
    }
    throw fail("expected X[...] or O[...]");
  }
  return LinkDiagram::build(std::move(crossings), std::move(circles));
}

std::string pd_str(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& c : d.crossings())
    os << "X[" << c.under_in << ',' << c.over << ',' << c.under_out << ',' << c.over << "] "
       << (c.sign > 0 ? "+1" : "-1") << '\n';
  for (int a : d.split_circles()) os << "O[" << a << "]\n";
  return os.str();
}

LinkDiagram builtin_diagram(const std::string& name) {
  LinkDiagram d;
  if (name == "unknot")
    d = parse_braid({}, 1);
  else if (name == "hopf")
    d = parse_braid({1, 1}, 2);
  else if (name == "trefoil")
    d = parse_braid({1, 1, 1}, 2);
  else if (name == "figure8")
    d = parse_braid({1, -2, 1, -2}, 3);
  else if (name == "whitehead")
    d = parse_braid({1, -2, 1, -2, 1}, 3);
  else
    throw Error("unknown built-in diagram \"" + name + "\"");
  return LinkDiagram::build(d.crossings(), d.split_circles(), d.braid(), name);
}

LinkDiagram whitehead_diagram() { return builtin_diagram("whitehead"); }

std::string component_label(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.num_components())
    throw UnknownComponent("no component " + std::to_string(component));
  const char* prefix = d.name() == "whitehead" ? "W" : "C";
  return prefix + std::to_string(component + 1);
}

int linking_number(const LinkDiagram& d, int c1, int c2) {
  if (c1 < 0 || c1 >= d.num_components() || c2 < 0 || c2 >= d.num_components() || c1 == c2)
    throw UnknownComponent("linking_number: bad component pair");
  int sum = 0;
  for (const auto& c : d.crossings()) {
    int co = d.component_of(c.over), cu = d.component_of(c.under_in);
    if ((co == c1 && cu == c2) || (co == c2 && cu == c1)) sum += c.sign;
  }
  if (sum % 2 != 0)
    throw InconsistentOrientation("linking_number: odd signed crossing count");
  return sum / 2;
}

WirtingerData wirtinger(const LinkDiagram& d) {
  WirtingerData w;
  w.arc_of_gen = d.arcs();
  for (std::size_t i = 0; i < w.arc_of_gen.size(); ++i) {
    w.gen_of_arc[w.arc_of_gen[i]] = static_cast<int>(i) + 1;
    w.group.generators.push_back("a" + std::to_string(w.arc_of_gen[i]));
  }
  for (const auto& c : d.crossings()) {
    int over = w.gen_of_arc.at(c.over);
    int in = w.gen_of_arc.at(c.under_in);
    int out = w.gen_of_arc.at(c.under_out);
    Word r = c.sign > 0 ? Word{-out, -over, in, over} : Word{-out, over, in, -over};
    w.group.relators.push_back(free_reduce(std::move(r)));
  }
  for (int comp = 0; comp < d.num_components(); ++comp)
    w.meridian_letters.push_back(w.gen_of_arc.at(d.meridian_arc(comp)));
  w.group.validate();
  return w;
}

}  // namespace coverkit
