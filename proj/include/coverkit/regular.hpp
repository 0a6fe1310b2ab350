#pragma once

#include "coverkit/monodromy.hpp"

namespace coverkit {

struct UniformIndexViolation : Error {
  using Error::Error;
};

inline constexpr std::size_t kRegularGroupCap = 20000;

// The regular cover associated with a monodromy: the same diagram, degree
// |G| where G is the image group, each arc acting by right translation.
struct RegularCoverData {
  Monodromy source;
  GroupTable image_group;
  Monodromy regular;
};

RegularCoverData associated_regular(const Monodromy& m, std::size_t cap = kRegularGroupCap);

struct RegularComponentIndices {
  std::string label;
  int index = 1;      // common branching index over this component
  int sheets = 1;     // number of branch-cover preimages, |G| / index
};

struct RegularIndexReport {
  long long group_order = 0;
  std::vector<RegularComponentIndices> components;
};

// Checks, arc by arc, that the regular cover branches with the single index
// ord(omega(arc)) repeated |G|/ord times, and summarizes per component.
// A violation means the construction itself is broken, so it throws.
RegularIndexReport verify_regular_indices(const RegularCoverData& data);

// True when every point stabilizer of the image group is the same subgroup.
bool is_regular(const Monodromy& m, std::size_t cap = kRegularGroupCap);

}  // namespace coverkit
