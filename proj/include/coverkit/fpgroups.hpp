#pragma once

#include "coverkit/fpgroup.hpp"
#include "coverkit/links.hpp"
#include "coverkit/monodromy.hpp"
#include "coverkit/snf.hpp"

namespace coverkit {

struct IncompleteTable : Error {
  using Error::Error;
};

// Action of the parent group's generators on cosets 1..n. Tables here always
// come from permutation actions, so they are complete by construction.
struct CosetTable {
  int n = 0;
  std::vector<Permutation> action;  // one permutation of {1..n} per generator

  int act(int coset, int letter) const;  // letter is +-k
  int rank() const { return static_cast<int>(action.size()); }
};

// Cosets are the sheets: the action of generator (arc) a is just the arc's
// image permutation. Coset 1 is the stabilizer of sheet 1.
CosetTable coset_table_from_monodromy(const Monodromy& m);

// Schreier transversal plus generator bookkeeping for one subgroup. Exposed
// so branched relators can be rewritten with the same apparatus that built
// the subgroup presentation.
class SchreierSystem {
 public:
  SchreierSystem(const FpGroup& parent, const CosetTable& table);

  int cosets() const { return table_.n; }
  int sub_rank() const { return num_sub_gens_; }
  const Word& rep(int coset) const { return reps_[coset - 1]; }

  // Rewrites a parent word tracing cosets from `start`; the word must return
  // to `start` (i.e. represent a subgroup element conjugated by the rep).
  Word rewrite(const Word& parent_word, int start) const;

  // Raw subgroup presentation: every parent relator rewritten at every coset.
  FpGroup presentation() const;

 private:
  FpGroup parent_;
  CosetTable table_;
  std::vector<Word> reps_;
  std::vector<std::vector<int>> gen_id_;  // [coset-1][gen-1]: 0 = tree edge
  int num_sub_gens_ = 0;
};

// Deterministic, capped simplification: drops empty relators, eliminates
// generators pinned by length-1 and length-2 relators and generators that
// occur exactly once overall.
FpGroup tietze_simplify(const FpGroup& g, int max_passes = 200);

// Subgroup presentation on Schreier generators, cleaned up.
FpGroup reidemeister_schreier(const FpGroup& g, const CosetTable& table);

// Presentation of the fundamental group of the covering manifold: subgroup
// presentation of the sheet-1 stabilizer plus, for every cycle of every
// meridian image, the rewritten meridian power along that cycle.
FpGroup branched_cover_pi1(const Monodromy& m);

struct OrbifoldGroupSpec {
  LinkDiagram diagram;
  std::vector<int> orders;  // one per component, each >= 1
};

// Wirtinger presentation plus one relator meridian^order per component.
FpGroup orbifold_group(const OrbifoldGroupSpec& spec);

AbelianInvariants abelianization(const FpGroup& g);

// H1 of the covering manifold, and a full report carrying it.
AbelianInvariants cover_h1(const Monodromy& m);
CoverReport full_report(const Monodromy& m);

enum class Triviality { Trivial, NonTrivial, Unknown };

struct TrivialityReport {
  Triviality verdict = Triviality::Unknown;
  std::string witness;  // set for NonTrivial
};

std::string triviality_name(Triviality t);

// Three-valued and never wrong: Trivial only on an empty simplified
// presentation, NonTrivial with a witness (abelianization or a small
// nontrivial permutation quotient), Unknown otherwise.
TrivialityReport try_trivialize(const FpGroup& g, int max_quotient_order = 120,
                                int max_generators_for_quotients = 3);

}  // namespace coverkit
