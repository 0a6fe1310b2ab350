#include "coverkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace coverkit {

CycleType::CycleType(std::vector<int> ls) : lengths(std::move(ls)) {
  for (int l : lengths)
    if (l < 1) throw Error("CycleType: lengths must be positive");
  std::sort(lengths.begin(), lengths.end());
}

int CycleType::sum() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

bool CycleType::within(const std::set<int>& allowed) const {
  return std::all_of(lengths.begin(), lengths.end(),
                     [&](int l) { return allowed.count(l) > 0; });
}

std::string CycleType::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ',';
    os << lengths[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycleType& t) {
  return os << t.str();
}

Permutation::Permutation(std::vector<int> images) : imgs_(std::move(images)) {
  if (imgs_.empty()) throw Error("Permutation: degree must be positive");
  std::vector<char> seen(imgs_.size(), 0);
  for (int v : imgs_) {
    if (v < 1 || v > degree())
      throw Error("Permutation: image " + std::to_string(v) + " out of range 1.." +
                  std::to_string(degree()));
    if (seen[v - 1]) throw Error("Permutation: image " + std::to_string(v) + " repeated");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw Error("Permutation: degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > degree)
        throw Error("from_cycles: point " + std::to_string(a) + " out of range");
      if (used[a - 1]) throw Error("from_cycles: point " + std::to_string(a) + " repeated");
      used[a - 1] = 1;
      p.imgs_[a - 1] = b;
    }
  }
  std::vector<char> seen(degree, 0);
  for (int v : p.imgs_) {
    if (seen[v - 1]) throw Error("from_cycles: cycles are not disjoint");
    seen[v - 1] = 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (imgs_[i - 1] != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 1; i <= degree(); ++i)
    if (imgs_[i - 1] != i) ++moved;
  return moved == 2;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(degree());
  for (int i = 1; i <= degree(); ++i) im[imgs_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

long long Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) {
    long long k = static_cast<long long>(c.size());
    long long g = std::gcd(ord, k);
    if (ord / g > std::numeric_limits<long long>::max() / k)
      throw Error("order: overflow");
    ord = ord / g * k;
  }
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> c;
    int j = i;
    do {
      c.push_back(j);
      seen[j - 1] = 1;
      j = imgs_[j - 1];
    } while (j != i);
    out.push_back(std::move(c));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> ls;
  for (const auto& c : cycles()) ls.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(ls));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()) + " differ");
  std::vector<int> im(p.degree());
  for (int i = 1; i <= p.degree(); ++i) im[i - 1] = p(q(i));
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(b, a);
}

Permutation conjugate(const Permutation& x, const Permutation& c) {
  if (x.degree() != c.degree()) throw DegreeMismatch("conjugate: degrees differ");
  std::vector<int> im(x.degree());
  for (int i = 1; i <= x.degree(); ++i) im[c(i) - 1] = c(x(i));
  return Permutation(std::move(im));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  if (k < 0) k = -k;
  Permutation acc = Permutation::identity(p.degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Permutation extended(const Permutation& p, int degree) {
  if (degree < p.degree()) throw Error("extended: new degree smaller than old");
  std::vector<int> im = p.images();
  for (int i = p.degree() + 1; i <= degree; ++i) im.push_back(i);
  return Permutation(std::move(im));
}

Permutation restricted(const Permutation& p, int degree) {
  if (degree > p.degree() || degree < 1)
    throw Error("restricted: bad degree");
  std::vector<int> im(p.images().begin(), p.images().begin() + degree);
  for (int v : im)
    if (v > degree) throw Error("restricted: permutation moves points across the boundary");
  for (int i = degree + 1; i <= p.degree(); ++i)
    if (p(i) != i && p(i) <= degree)
      throw Error("restricted: permutation moves points across the boundary");
  return Permutation(std::move(im));
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int read_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start)
    throw Error("parse: expected integer at position " + std::to_string(start) +
                " in \"" + s + "\"");
  return std::stoi(s.substr(start, i - start));
}

}  // namespace

Permutation parse_one_line(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[')
    throw Error("parse_one_line: expected '[' in \"" + text + "\"");
  ++i;
  std::vector<int> im;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      im.push_back(read_int(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw Error("parse_one_line: expected ',' or ']' at position " + std::to_string(i) +
                  " in \"" + text + "\"");
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw Error("parse_one_line: trailing characters in \"" + text + "\"");
  return Permutation(std::move(im));
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw Error("parse_cycles: empty input");
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error("parse_cycles: expected '(' at position " + std::to_string(i) +
                  " in \"" + text + "\"");
    ++i;
    std::vector<int> c;
    while (true) {
      skip_ws(text, i);
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      c.push_back(read_int(text, i));
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_ws(text, i);
  }
  return Permutation::from_cycles(degree, cycles);
}

Permutation parse_permutation(const std::string& text, int degree) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw Error("parse_permutation: empty input");
  if (text[i] == '[') {
    Permutation p = parse_one_line(text);
    if (degree > 0 && p.degree() != degree)
      throw DegreeMismatch("parse_permutation: expected degree " + std::to_string(degree) +
                           ", got " + std::to_string(p.degree()));
    return p;
  }
  if (text[i] == '(') {
    if (degree < 1)
      throw Error("parse_permutation: cycle notation needs an explicit degree");
    return parse_cycles(text, degree);
  }
  throw Error("parse_permutation: expected '[' or '(' in \"" + text + "\"");
}

std::string one_line_str(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  os << ']';
  return os.str();
}

std::string cycle_str(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : p.cycles()) {
    if (c.size() == 1) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << cycle_str(p);
}

int GroupTable::index_of(const Permutation& p) const {
  auto it = index.find(p.images());
  if (it == index.end()) throw Error("GroupTable: element not in group");
  return it->second;
}

bool GroupTable::contains(const Permutation& p) const {
  return index.count(p.images()) > 0;
}

GroupTable generate_group(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw Error("generate_group: no generators");
  int t = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != t) throw DegreeMismatch("generate_group: mixed degrees");

  // Finite bijections: closure under right products already contains all
  // inverses, so a plain frontier walk from the identity suffices.
  std::vector<Permutation> elems;
  std::map<std::vector<int>, int> seen;
  elems.push_back(Permutation::identity(t));
  seen.emplace(elems[0].images(), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Permutation cur = elems[head];
    for (const auto& g : generators) {
      Permutation nxt = cur * g;
      if (seen.count(nxt.images())) continue;
      if (elems.size() >= cap)
        throw CapExceeded("generate_group: closure exceeds cap " + std::to_string(cap));
      seen.emplace(nxt.images(), 0);
      elems.push_back(std::move(nxt));
    }
  }
  std::sort(elems.begin(), elems.end());
  GroupTable table;
  table.elements = std::move(elems);
  for (std::size_t i = 0; i < table.elements.size(); ++i)
    table.index.emplace(table.elements[i].images(), static_cast<int>(i));
  return table;
}

bool is_transitive(const std::vector<Permutation>& generators, int t) {
  if (t < 1) throw Error("is_transitive: degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != t) throw DegreeMismatch("is_transitive: degree mismatch");
  std::vector<char> in_orbit(t, 0);
  std::vector<int> stack = {1};
  in_orbit[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int q = g(p);
      if (!in_orbit[q - 1]) {
        in_orbit[q - 1] = 1;
        ++found;
        stack.push_back(q);
      }
    }
  }
  return found == t;
}

Permutation regular_representation(const GroupTable& g, const Permutation& y) {
  int r = g.order();
  if (!g.contains(y)) throw Error("regular_representation: element not in group");
  std::vector<int> im(r);
  for (int i = 0; i < r; ++i) im[i] = g.index_of(g.at(i) * y) + 1;
  return Permutation(std::move(im));
}

std::vector<Permutation> centralizer_elements(const Permutation& p, std::size_t cap) {
  int t = p.degree();
  auto cs = p.cycles();
  std::map<std::size_t, std::vector<std::vector<int>>> by_len;
  for (auto& c : cs) by_len[c.size()].push_back(c);

  std::vector<Permutation> gens;
  for (const auto& [len, group] : by_len) {
    if (len > 1)
      for (const auto& c : group) gens.push_back(Permutation::from_cycles(t, {c}));
    // Aligned swap of two equal-length cycles commutes with p.
    for (std::size_t i = 0; i + 1 < group.size(); ++i) {
      std::vector<int> im(t);
      std::iota(im.begin(), im.end(), 1);
      for (std::size_t j = 0; j < len; ++j) {
        im[group[i][j] - 1] = group[i + 1][j];
        im[group[i + 1][j] - 1] = group[i][j];
      }
      gens.push_back(Permutation(std::move(im)));
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(t));
  return generate_group(gens, cap).elements;
}

Permutation canonical_of_type(const CycleType& type) {
  int t = type.sum();
  if (t < 1) throw Error("canonical_of_type: empty type");
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : type.lengths) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(t, cycles);
}

namespace {

struct TypeEnum {
  int t;
  const std::function<void(const Permutation&)>& fn;
  std::vector<int> images;
  std::vector<char> used;
  std::map<int, int> remaining;  // length -> count

  // Each recursion roots a cycle at the smallest unused point, so every
  // permutation of the type comes out exactly once.
  void run(int placed) {
    if (placed == t) {
      fn(Permutation(images));
      return;
    }
    int leader = 0;
    for (int i = 1; i <= t; ++i)
      if (!used[i - 1]) {
        leader = i;
        break;
      }
    for (auto& [len, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[leader - 1] = 1;
      if (len == 1) {
        images[leader - 1] = leader;
        run(placed + 1);
      } else {
        std::vector<int> cyc = {leader};
        extend_cycle(leader, len, cyc, placed);
      }
      used[leader - 1] = 0;
      ++count;
    }
  }

  void extend_cycle(int leader, int len, std::vector<int>& cyc, int placed) {
    if (static_cast<int>(cyc.size()) == len) {
      for (std::size_t i = 0; i < cyc.size(); ++i)
        images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      run(placed + len);
      return;
    }
    for (int i = leader + 1; i <= t; ++i) {
      if (used[i - 1]) continue;
      used[i - 1] = 1;
      cyc.push_back(i);
      extend_cycle(leader, len, cyc, placed);
      cyc.pop_back();
      used[i - 1] = 0;
    }
  }
};

}  // namespace

void for_each_of_type(int t, const CycleType& type,
                      const std::function<void(const Permutation&)>& fn) {
  if (type.sum() != t)
    throw Error("for_each_of_type: type sums to " + std::to_string(type.sum()) +
                ", degree is " + std::to_string(t));
  TypeEnum e{t, fn, std::vector<int>(t, 0), std::vector<char>(t, 0), {}};
  for (int len : type.lengths) ++e.remaining[len];
  e.run(0);
}

}  // namespace coverkit
