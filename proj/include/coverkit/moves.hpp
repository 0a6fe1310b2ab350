#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverkit/monodromy.hpp"
#include "coverkit/snf.hpp"

namespace coverkit {

struct NotApplicable : Error {
  using Error::Error;
};
struct RepeatedTarget : Error {
  using Error::Error;
};
struct TargetOutOfRange : Error {
  using Error::Error;
};
struct AxisNotSplit : Error {
  using Error::Error;
};
struct NotAnnular : Error {
  using Error::Error;
};

enum class MoveKind {
  AddTrivialSheets,
  MakeDisjoint,
  PosToNeg,
  CrossingToAnnulus,
  OverToUnderDistinct,
  OverToUnderEqual,
  CyclicBranchSplit,
};

std::string move_kind_name(MoveKind kind);
MoveKind move_kind_from_name(const std::string& name);

struct Move {
  MoveKind kind = MoveKind::AddTrivialSheets;
  // Crossing number (1-based) for crossing moves; component number (1-based)
  // for CyclicBranchSplit; ignored for AddTrivialSheets.
  int site = 0;
  std::vector<int> targets;  // sheets to pair with the new ones
};

// Every application records what happened to the branched cover. For the
// move kinds proper, H1 before and after must agree; a mismatch is an
// implementation bug and raises an error. H1 is omitted when a side is
// disconnected (and always for compose_cyclic, which changes it by design).
struct MoveCertificate {
  std::string operation;
  int old_degree = 0;
  int new_degree = 0;
  std::vector<std::pair<std::string, CycleType>> indices_before;
  std::vector<std::pair<std::string, CycleType>> indices_after;
  std::optional<AbelianInvariants> h1_before;
  std::optional<AbelianInvariants> h1_after;
};

struct MoveResult {
  Monodromy monodromy;
  MoveCertificate certificate;
};

MoveResult apply_move(const Monodromy& m, const Move& move);

MoveResult add_trivial_sheets(const Monodromy& m, const std::vector<int>& targets);

// Composes with the l-fold cyclic cover branched over a split unknotted
// component whose image is the identity. Degree becomes l times the old
// degree; homology genuinely changes, so the certificate carries no claim.
MoveResult compose_cyclic(const Monodromy& m, int axis_component, int l);

}  // namespace coverkit
