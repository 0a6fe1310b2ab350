#pragma once

#include <optional>

#include "coverkit/links.hpp"
#include "coverkit/perm.hpp"
#include "coverkit/snf.hpp"

namespace coverkit {

struct RelationViolated : Error {
  using Error::Error;
};
struct WrongDiagram : Error {
  using Error::Error;
};
struct NotTransitive : Error {
  using Error::Error;
};

// An assignment of permutations to the arcs of a diagram. Equivalently, a
// degree-t branched covering of the 3-sphere over the underlying link.
struct Monodromy {
  LinkDiagram diagram;
  int degree = 0;
  std::map<int, Permutation> assignment;

  const Permutation& at(int arc) const;
  std::vector<Permutation> arc_images() const;  // in diagram.arcs() order
};

// Checks totality and uniform degree, not the crossing relations.
Monodromy make_monodromy(LinkDiagram diagram, int degree,
                         std::map<int, Permutation> assignment);

// What the under strand's permutation becomes past a crossing: conjugation
// by the over arc, direction given by the crossing sign.
Permutation conjugate_through(const Permutation& under_in, const Permutation& over, int sign);

struct ComponentReport {
  std::string label;
  CycleType indices;           // cycle type of the meridian image
  int preimage_components = 0; // number of cycles
};

struct CoverReport {
  int degree = 0;
  bool transitive = false;
  bool simple = false;
  std::vector<ComponentReport> components;
  std::optional<AbelianInvariants> h1;  // filled by the homology pipeline
};

// Crossing relation check at every crossing plus the report. Throws
// RelationViolated on a bad crossing; non-transitivity is only flagged.
CoverReport validate(const Monodromy& m);

CycleType branching_indices(const Monodromy& m, int component);
int preimage_components(const Monodromy& m, int component);

// True iff every arc image is a transposition.
bool is_simple(const Monodromy& m);

// The index-shape check for covers over the built-in Whitehead diagram:
// cycle lengths of the W1 meridian within {1,2,4} and of the W2 meridian
// within {4,8}. Throws WrongDiagram elsewhere.
bool whitehead_shape_check(const Monodromy& m);

inline constexpr int kSearchDegreeCapExhaustive = 12;
inline constexpr int kSearchDegreeCapRandom = 16;
inline constexpr std::size_t kCentralizerCap = 20000;

struct SearchOptions {
  int degree = 1;
  // Per-component filters, keyed by component index. A meridian image must
  // have all cycle lengths inside allowed_lengths and exact order
  // meridian_order where those are present.
  std::map<int, std::set<int>> allowed_lengths;
  std::map<int, long long> meridian_order;
  std::size_t limit = static_cast<std::size_t>(-1);
  bool random = false;
  unsigned long seed = 0;
  std::size_t random_attempts = 1000000;
  int jobs = 1;
};

// Enumerates valid transitive monodromies over d matching the filters.
// Exhaustive mode seeds the meridians, propagates everything else through
// the crossing relations, and reduces by simultaneous conjugacy when the
// diagram is seeded by exactly two meridians (the second seed is pinned to
// canonical cycle-type representatives, the first reduced by its
// centralizer). Output order is canonical and independent of jobs.
std::vector<Monodromy> search_monodromies(const LinkDiagram& d, const SearchOptions& opts);

// The arcs whose images determine all others by propagation, chosen
// deterministically: component meridians first, then lowest missing arcs.
std::vector<int> propagation_seeds(const LinkDiagram& d);

}  // namespace coverkit
