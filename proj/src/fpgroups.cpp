#include "coverkit/fpgroups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace coverkit {

int CosetTable::act(int coset, int letter) const {
  if (letter == 0 || std::abs(letter) > rank())
    throw Error("coset table letter out of range");
  if (coset < 1 || coset > n) throw Error("coset out of range");
  const Permutation& p = action[static_cast<std::size_t>(std::abs(letter)) - 1];
  if (letter > 0) return p(coset);
  for (int i = 1; i <= n; ++i)
    if (p(i) == coset) return i;
  throw Error("coset table action is not a bijection");
}

CosetTable coset_table_from_monodromy(const Monodromy& m) {
  CoverReport report = validate(m);
  if (!report.transitive)
    throw NotTransitive("cover is not connected; coset table needs a transitive action");
  CosetTable table;
  table.n = m.degree;
  for (int arc : m.diagram.arcs()) table.action.push_back(m.at(arc));
  return table;
}

SchreierSystem::SchreierSystem(const FpGroup& parent, const CosetTable& table)
    : parent_(parent), table_(table) {
  if (parent_.rank() != table_.rank())
    throw IncompleteTable("coset table has " + std::to_string(table_.rank()) +
                          " generator actions, presentation has " +
                          std::to_string(parent_.rank()));
  const int n = table_.n;
  const int r = table_.rank();
  reps_.assign(static_cast<std::size_t>(n), Word{});
  gen_id_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(r), -1));

  // Breadth-first Schreier transversal; tree edges get gen id 0.
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::deque<int> queue{1};
  seen[1] = true;
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (int k = 1; k <= r; ++k) {
      for (int dir : {+1, -1}) {
        int t = table_.act(j, dir * k);
        if (seen[static_cast<std::size_t>(t)]) continue;
        seen[static_cast<std::size_t>(t)] = true;
        reps_[static_cast<std::size_t>(t) - 1] = reps_[static_cast<std::size_t>(j) - 1];
        reps_[static_cast<std::size_t>(t) - 1].push_back(dir * k);
        // The positive-direction edge of this tree step rewrites trivially.
        if (dir > 0)
          gen_id_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(k) - 1] = 0;
        else
          gen_id_[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(k) - 1] = 0;
        queue.push_back(t);
      }
    }
  }
  for (int j = 1; j <= n; ++j)
    if (!seen[static_cast<std::size_t>(j)])
      throw NotTransitive("coset table action is not transitive");

  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= r; ++k) {
      int& id = gen_id_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(k) - 1];
      if (id < 0) id = ++num_sub_gens_;
    }
}

Word SchreierSystem::rewrite(const Word& parent_word, int start) const {
  Word out;
  int cur = start;
  for (int letter : parent_word) {
    int k = std::abs(letter);
    if (k < 1 || k > parent_.rank()) throw Error("letter out of range in rewrite");
    if (letter > 0) {
      int id = gen_id_[static_cast<std::size_t>(cur) - 1][static_cast<std::size_t>(k) - 1];
      if (id != 0) out.push_back(id);
      cur = table_.act(cur, letter);
    } else {
      int prev = table_.act(cur, letter);
      int id = gen_id_[static_cast<std::size_t>(prev) - 1][static_cast<std::size_t>(k) - 1];
      if (id != 0) out.push_back(-id);
      cur = prev;
    }
  }
  if (cur != start)
    throw Error("word does not stabilize the starting coset; cannot rewrite");
  return free_reduce(out);
}

FpGroup SchreierSystem::presentation() const {
  FpGroup sub;
  for (int i = 1; i <= num_sub_gens_; ++i) sub.generators.push_back("s" + std::to_string(i));
  for (const Word& rel : parent_.relators)
    for (int j = 1; j <= table_.n; ++j) {
      Word w = rewrite(rel, j);
      if (!w.empty()) sub.relators.push_back(w);
    }
  return sub;
}

namespace {

// Drops generator `g` (1-based), shifting higher letters down. Words must not
// mention g any more.
void drop_generator(FpGroup& p, int g) {
  p.generators.erase(p.generators.begin() + (g - 1));
  for (Word& w : p.relators)
    for (int& letter : w) {
      int k = std::abs(letter);
      if (k == g) throw Error("internal: dropped generator still occurs");
      if (k > g) letter = letter > 0 ? letter - 1 : letter + 1;
    }
}

// Replaces every occurrence of generator g by `image` (word standing for +g).
void substitute(FpGroup& p, int g, const Word& image) {
  Word neg = invert_word(image);
  for (Word& w : p.relators) {
    Word out;
    for (int letter : w) {
      if (letter == g)
        out.insert(out.end(), image.begin(), image.end());
      else if (letter == -g)
        out.insert(out.end(), neg.begin(), neg.end());
      else
        out.push_back(letter);
    }
    w = free_reduce(out);
  }
}

void reduce_relators(FpGroup& p) {
  for (Word& w : p.relators) w = cyclic_reduce(free_reduce(w));
  p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   p.relators.end());
  std::set<Word> seen;
  std::vector<Word> kept;
  for (const Word& w : p.relators) {
    Word alt = invert_word(w);
    if (seen.count(w) || seen.count(alt)) continue;
    seen.insert(w);
    kept.push_back(w);
  }
  p.relators = kept;
}

}  // namespace

FpGroup tietze_simplify(const FpGroup& g, int max_passes) {
  FpGroup p = g;
  for (int pass = 0; pass < max_passes; ++pass) {
    reduce_relators(p);
    bool changed = false;

    // A length-1 relator kills its generator outright.
    for (std::size_t i = 0; i < p.relators.size() && !changed; ++i) {
      if (p.relators[i].size() != 1) continue;
      int dead = std::abs(p.relators[i][0]);
      p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(i));
      substitute(p, dead, Word{});
      drop_generator(p, dead);
      changed = true;
    }
    if (changed) continue;

    // A length-2 relator on two distinct generators identifies them.
    for (std::size_t i = 0; i < p.relators.size() && !changed; ++i) {
      const Word& w = p.relators[i];
      if (w.size() != 2 || std::abs(w[0]) == std::abs(w[1])) continue;
      int a = w[0], b = w[1];
      // Eliminate the higher-numbered generator to keep naming stable.
      if (std::abs(a) < std::abs(b)) std::swap(a, b);
      // Relator reads a b = 1, so a = b^-1.
      Word image = invert_word(Word{b});
      if (a < 0) image = invert_word(image);
      int dead = std::abs(a);
      p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(i));
      substitute(p, dead, image);
      drop_generator(p, dead);
      changed = true;
    }
    if (changed) continue;

    // A generator occurring exactly once overall is expressible from the
    // others; its relator carries no further information.
    std::vector<int> count(static_cast<std::size_t>(p.rank()) + 1, 0);
    for (const Word& w : p.relators)
      for (int letter : w) ++count[static_cast<std::size_t>(std::abs(letter))];
    for (int gen = 1; gen <= p.rank() && !changed; ++gen) {
      if (count[static_cast<std::size_t>(gen)] != 1) continue;
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        bool here = false;
        for (int letter : p.relators[i])
          if (std::abs(letter) == gen) here = true;
        if (!here) continue;
        p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(i));
        substitute(p, gen, Word{});  // no other occurrences exist
        drop_generator(p, gen);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  return p;
}

FpGroup reidemeister_schreier(const FpGroup& g, const CosetTable& table) {
  SchreierSystem system(g, table);
  return tietze_simplify(system.presentation());
}

FpGroup branched_cover_pi1(const Monodromy& m) {
  WirtingerData w = wirtinger(m.diagram);
  CosetTable table = coset_table_from_monodromy(m);
  SchreierSystem system(w.group, table);
  FpGroup sub = system.presentation();
  for (int c = 0; c < m.diagram.num_components(); ++c) {
    int letter = w.meridian_letters[static_cast<std::size_t>(c)];
    Permutation image = m.at(m.diagram.meridian_arc(c));
    for (const std::vector<int>& cycle : image.cycles()) {
      Word power(cycle.size(), letter);
      Word rel = system.rewrite(power, cycle.front());
      if (!rel.empty()) sub.relators.push_back(rel);
    }
  }
  return tietze_simplify(sub);
}

FpGroup orbifold_group(const OrbifoldGroupSpec& spec) {
  if (static_cast<int>(spec.orders.size()) != spec.diagram.num_components())
    throw Error("need one branching order per component");
  for (int order : spec.orders)
    if (order < 1) throw Error("branching orders must be positive");
  WirtingerData w = wirtinger(spec.diagram);
  FpGroup g = w.group;
  for (int c = 0; c < spec.diagram.num_components(); ++c) {
    int letter = w.meridian_letters[static_cast<std::size_t>(c)];
    g.relators.push_back(Word(static_cast<std::size_t>(spec.orders[static_cast<std::size_t>(c)]),
                              letter));
  }
  return g;
}

AbelianInvariants abelianization(const FpGroup& g) {
  IntMat mat;
  for (const Word& w : g.relators) {
    std::vector<Int> row(static_cast<std::size_t>(g.rank()), 0);
    for (int letter : w) row[static_cast<std::size_t>(std::abs(letter)) - 1] += letter > 0 ? 1 : -1;
    mat.push_back(row);
  }
  return abelian_invariants_of_matrix(mat, g.rank());
}

AbelianInvariants cover_h1(const Monodromy& m) { return abelianization(branched_cover_pi1(m)); }

CoverReport full_report(const Monodromy& m) {
  CoverReport report = validate(m);
  if (report.transitive) report.h1 = cover_h1(m);
  return report;
}

std::string triviality_name(Triviality t) {
  switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::NonTrivial: return "nontrivial";
    case Triviality::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// All of S_n in lexicographic image order.
std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool quotient_search(const FpGroup& g, int n, std::string* witness) {
  std::vector<Permutation> elems = symmetric_group(n);
  int r = g.rank();
  // Relators become checkable once their highest generator is assigned.
  std::vector<std::vector<const Word*>> due(static_cast<std::size_t>(r) + 1);
  for (const Word& w : g.relators) {
    int top = 0;
    for (int letter : w) top = std::max(top, std::abs(letter));
    due[static_cast<std::size_t>(top)].push_back(&w);
  }
  std::vector<Permutation> images(static_cast<std::size_t>(r), Permutation::identity(n));

  std::function<bool(int)> assign = [&](int gen) -> bool {
    if (gen > r) {
      bool all_id = true;
      for (const Permutation& p : images)
        if (!p.is_identity()) all_id = false;
      if (all_id) return false;
      GroupTable image = generate_group(images, kGroupCap);
      std::ostringstream os;
      os << "maps onto a subgroup of S" << n << " of order " << image.order();
      *witness = os.str();
      return true;
    }
    for (const Permutation& candidate : elems) {
      images[static_cast<std::size_t>(gen) - 1] = candidate;
      bool ok = true;
      for (const Word* w : due[static_cast<std::size_t>(gen)])
        if (!evaluate_word(*w, images, n).is_identity()) {
          ok = false;
          break;
        }
      if (ok && assign(gen + 1)) return true;
    }
    return false;
  };
  return assign(1);
}

}  // namespace

TrivialityReport try_trivialize(const FpGroup& g, int max_quotient_order,
                                int max_generators_for_quotients) {
  FpGroup t = tietze_simplify(g);
  if (t.rank() == 0) return {Triviality::Trivial, ""};
  AbelianInvariants ab = abelianization(t);
  if (!ab.trivial()) return {Triviality::NonTrivial, "abelianization is " + ab.str()};
  if (t.rank() <= max_generators_for_quotients) {
    std::string witness;
    long long factorial = 1;
    for (int n = 2; n <= 8; ++n) {
      factorial *= n;
      if (factorial > max_quotient_order) break;
      if (quotient_search(t, n, &witness)) return {Triviality::NonTrivial, witness};
    }
  }
  return {Triviality::Unknown, ""};
}

}  // namespace coverkit
