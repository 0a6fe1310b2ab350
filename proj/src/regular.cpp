#include "coverkit/regular.hpp"

#include <algorithm>
#include <set>

namespace coverkit {

RegularCoverData associated_regular(const Monodromy& m, std::size_t cap) {
  if (!validate(m).transitive)
    throw NotTransitive("associated regular cover needs a connected source cover");
  GroupTable group = generate_group(m.arc_images(), cap);
  Monodromy rho;
  rho.diagram = m.diagram;
  rho.degree = static_cast<int>(group.order());
  for (int arc : m.diagram.arcs())
    rho.assignment.emplace(arc, regular_representation(group, m.at(arc)));
  // Right translation is a homomorphism for the word product, so the
  // crossing relations transfer; check anyway, this is cheap.
  validate(rho);
  return RegularCoverData{m, group, rho};
}

RegularIndexReport verify_regular_indices(const RegularCoverData& data) {
  const long long r = data.image_group.order();
  RegularIndexReport report;
  report.group_order = r;
  for (int arc : data.source.diagram.arcs()) {
    long long k = data.source.at(arc).order();
    CycleType type = data.regular.at(arc).cycle_type();
    bool uniform = true;
    for (int len : type.lengths)
      if (len != k) uniform = false;
    if (!uniform || static_cast<long long>(type.lengths.size()) * k != r)
      throw UniformIndexViolation("arc " + std::to_string(arc) +
                                  ": regular cover indices " + type.str() +
                                  " are not uniformly " + std::to_string(k));
  }
  for (int c = 0; c < data.source.diagram.num_components(); ++c) {
    RegularComponentIndices entry;
    entry.label = component_label(data.source.diagram, c);
    entry.index = static_cast<int>(data.source.at(data.source.diagram.meridian_arc(c)).order());
    entry.sheets = static_cast<int>(r / entry.index);
    report.components.push_back(entry);
  }
  return report;
}

bool is_regular(const Monodromy& m, std::size_t cap) {
  CoverReport report = validate(m);
  if (!report.transitive) throw NotTransitive("regularity is defined for connected covers");
  GroupTable group = generate_group(m.arc_images(), cap);
  std::set<int> stab_one;
  for (int i = 0; i < group.order(); ++i)
    if (group.at(static_cast<std::size_t>(i))(1) == 1) stab_one.insert(i);
  for (int point = 2; point <= m.degree; ++point) {
    std::set<int> stab;
    for (int i = 0; i < group.order(); ++i)
      if (group.at(static_cast<std::size_t>(i))(point) == point) stab.insert(i);
    if (stab != stab_one) return false;
  }
  return true;
}

}  // namespace coverkit
