#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coverkit/fpgroup.hpp"

namespace coverkit {

struct ParseError : Error {
  using Error::Error;
};
struct InconsistentOrientation : Error {
  using Error::Error;
};
struct UnknownComponent : Error {
  using Error::Error;
};

// One crossing of an oriented diagram. The over strand is never cut at its
// own crossing, so a single arc id serves both over slots. Arcs are cut
// exactly at their undercrossings: under_in ends here, under_out starts here.
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 0;  // +1 or -1

  bool operator==(const Crossing&) const = default;
};

// Kept when a diagram came from a braid closure; the Goeritz oracle needs
// the planar face structure only a concrete embedding provides.
struct BraidData {
  std::vector<int> word;
  int strands = 0;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Assembles a diagram from crossings plus any crossing-free circles,
  // validates the arc structure and derives components.
  static LinkDiagram build(std::vector<Crossing> crossings, std::vector<int> circles,
                           std::optional<BraidData> braid = std::nullopt,
                           std::string name = "");

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& arcs() const { return arcs_; }
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::optional<BraidData>& braid() const { return braid_; }
  const std::string& name() const { return name_; }

  int num_components() const { return static_cast<int>(components_.size()); }
  int component_of(int arc) const;
  // Meridian of a component: its smallest arc.
  int meridian_arc(int component) const;
  // Arcs appearing in no crossing at all.
  std::vector<int> split_circles() const;
  bool has_arc(int arc) const { return comp_of_.count(arc) > 0; }

  // Structural equality; braid provenance and name do not participate.
  bool operator==(const LinkDiagram& o) const {
    return crossings_ == o.crossings_ && arcs_ == o.arcs_ && components_ == o.components_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> arcs_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> comp_of_;
  std::optional<BraidData> braid_;
  std::string name_;
};

// Closure of a braid word on the given number of strands. Letter +i crosses
// the strand at position i over the strand at position i+1 (a positive
// crossing); -i is the mirror. Text form is whitespace-separated letters.
LinkDiagram parse_braid(const std::vector<int>& word, int strands);
LinkDiagram parse_braid_text(const std::string& word_text, int strands);

// PD text: one crossing per line, "X[a,b,c,d] sign" with a = under_in,
// b = d = over, c = under_out, plus "O[a]" lines for split circles.
// Blank lines and # comments are ignored.
LinkDiagram parse_pd(const std::string& text);
std::string pd_str(const LinkDiagram& d);

// Built-in diagrams, all braid closures: unknot, hopf, trefoil, figure8,
// whitehead. The Whitehead link is the closure of "1 -2 1 -2 1" on three
// strands; component W1 = {arcs 1,5}, W2 = {arcs 2,3,4}, meridians 1 and 2.
// One chirality is fixed here once and for all.
LinkDiagram builtin_diagram(const std::string& name);
LinkDiagram whitehead_diagram();

// Component display labels: W1, W2 on the built-in Whitehead diagram,
// C1, C2, ... elsewhere.
std::string component_label(const LinkDiagram& d, int component);

// Half the signed count of crossings between two distinct components.
int linking_number(const LinkDiagram& d, int c1, int c2);

// Wirtinger presentation: one generator per arc, one relator per crossing.
// At a positive crossing, out = over^-1 in over (words read left to right);
// a negative crossing conjugates the other way.
struct WirtingerData {
  FpGroup group;
  std::vector<int> arc_of_gen;        // generator index -> arc id
  std::map<int, int> gen_of_arc;      // arc id -> 1-based letter
  std::vector<int> meridian_letters;  // per component, 1-based letter
};

WirtingerData wirtinger(const LinkDiagram& d);

}  // namespace coverkit
