#include "coverkit/moves.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "coverkit/fpgroups.hpp"

namespace coverkit {

std::string move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::AddTrivialSheets: return "add_trivial_sheets";
    case MoveKind::MakeDisjoint: return "make_disjoint";
    case MoveKind::PosToNeg: return "pos_to_neg";
    case MoveKind::CrossingToAnnulus: return "crossing_to_annulus";
    case MoveKind::OverToUnderDistinct: return "over_to_under_distinct";
    case MoveKind::OverToUnderEqual: return "over_to_under_equal";
    case MoveKind::CyclicBranchSplit: return "cyclic_branch_split";
  }
  throw Error("unknown move kind");
}

MoveKind move_kind_from_name(const std::string& name) {
  for (MoveKind kind :
       {MoveKind::AddTrivialSheets, MoveKind::MakeDisjoint, MoveKind::PosToNeg,
        MoveKind::CrossingToAnnulus, MoveKind::OverToUnderDistinct, MoveKind::OverToUnderEqual,
        MoveKind::CyclicBranchSplit})
    if (move_kind_name(kind) == name) return kind;
  throw Error("unknown move kind: " + name);
}

namespace {

std::vector<std::pair<std::string, CycleType>> component_indices(const Monodromy& m) {
  std::vector<std::pair<std::string, CycleType>> out;
  for (int c = 0; c < m.diagram.num_components(); ++c)
    out.emplace_back(component_label(m.diagram, c),
                     m.at(m.diagram.meridian_arc(c)).cycle_type());
  return out;
}

int max_arc(const LinkDiagram& d) {
  int top = 0;
  for (int arc : d.arcs()) top = std::max(top, arc);
  return top;
}

int over_count(const LinkDiagram& d, int arc) {
  int n = 0;
  for (const Crossing& c : d.crossings())
    if (c.over == arc) ++n;
  return n;
}

// Support of a transposition.
std::pair<int, int> transposition_points(const Permutation& p) {
  for (int i = 1; i <= p.degree(); ++i)
    if (p(i) > i) return {i, p(i)};
  throw Error("internal: not a transposition");
}

Permutation transposition(int degree, int a, int b) {
  return Permutation::from_cycles(degree, {{a, b}});
}

// Packs result + certificate; when `claims_h1` both sides are connected
// covers, their branched H1 must agree.
MoveResult finish(const Monodromy& before, const std::string& operation, Monodromy after,
                  bool claims_h1) {
  CoverReport before_report = validate(before);
  CoverReport after_report = validate(after);
  MoveCertificate cert;
  cert.operation = operation;
  cert.old_degree = before.degree;
  cert.new_degree = after.degree;
  cert.indices_before = component_indices(before);
  cert.indices_after = component_indices(after);
  if (claims_h1 && before_report.transitive && after_report.transitive) {
    cert.h1_before = cover_h1(before);
    cert.h1_after = cover_h1(after);
    if (!(*cert.h1_before == *cert.h1_after))
      throw Error("homology certificate violated for " + operation + ": before " +
                  cert.h1_before->str() + ", after " + cert.h1_after->str());
  }
  return MoveResult{std::move(after), std::move(cert)};
}

const Crossing& crossing_at(const Monodromy& m, int site) {
  if (site < 1 || site > static_cast<int>(m.diagram.crossings().size()))
    throw TargetOutOfRange("crossing " + std::to_string(site) + " does not exist");
  return m.diagram.crossings()[static_cast<std::size_t>(site) - 1];
}

// Splits the over strand of `x` inside a rewrite site. The strand may carry
// no other over-passes (their placement along the arc is not recorded, so a
// split would be ambiguous) and must be distinct from the under strand.
void check_over_strand_isolated(const Monodromy& m, const Crossing& x) {
  if (x.over == x.under_in || x.over == x.under_out)
    throw NotApplicable("the over strand also passes under at this crossing");
  if (over_count(m.diagram, x.over) != 1)
    throw NotApplicable("arc " + std::to_string(x.over) +
                        " passes over other crossings; splitting it would be ambiguous");
}

// Where the over strand of `x` continues after the site: if the arc ends at
// some crossing (as under_in), that occurrence is rewired to a fresh arc and
// the fresh id is returned. A closed over-circle keeps its own id.
int split_over_strand(std::vector<Crossing>& crossings, const Crossing& x, int fresh) {
  for (Crossing& c : crossings) {
    if (c.under_in == x.over && !(c == x)) {
      c.under_in = fresh;
      return fresh;
    }
  }
  return x.over;  // no undercrossing ends this arc; it is a closed circle
}

MoveResult do_add_trivial_sheets(const Monodromy& m, const std::vector<int>& targets) {
  std::set<int> seen;
  for (int t : targets) {
    if (t < 1 || t > m.degree)
      throw TargetOutOfRange("sheet " + std::to_string(t) + " is not a sheet of the cover");
    if (!seen.insert(t).second)
      throw RepeatedTarget("sheet " + std::to_string(t) + " is repeated");
  }
  const int s = static_cast<int>(targets.size());
  const int d = m.degree;
  int circle = max_arc(m.diagram) + 1;
  std::vector<int> circles;
  for (int arc : m.diagram.split_circles()) circles.push_back(arc);
  circles.push_back(circle);
  LinkDiagram diagram = LinkDiagram::build(m.diagram.crossings(), circles);

  Monodromy after;
  after.diagram = diagram;
  after.degree = d + s;
  for (int arc : m.diagram.arcs()) after.assignment.emplace(arc, extended(m.at(arc), d + s));
  std::vector<std::vector<int>> pairs;
  for (int j = 0; j < s; ++j) pairs.push_back({targets[static_cast<std::size_t>(j)], d + j + 1});
  after.assignment.emplace(circle, Permutation::from_cycles(d + s, pairs));
  return finish(m, move_kind_name(MoveKind::AddTrivialSheets), std::move(after), true);
}

// Shared precondition of the sign change, annulus, and over-to-under
// rewrites: over and under strands carry transpositions moving exactly one
// common sheet.
struct CrossingFrame {
  int shared, over_other, under_other;
};

CrossingFrame crossing_frame(const Monodromy& m, const Crossing& x) {
  const Permutation beta = m.at(x.over);
  const Permutation gamma = m.at(x.under_in);
  if (!beta.is_transposition() || !gamma.is_transposition())
    throw NotApplicable("crossing strands must carry transpositions");
  auto [b1, b2] = transposition_points(beta);
  auto [g1, g2] = transposition_points(gamma);
  int shared = 0;
  if (b1 == g1 || b1 == g2) shared = b1;
  if (b2 == g1 || b2 == g2) {
    if (shared != 0) throw NotApplicable("over and under strands carry equal transpositions");
    shared = b2;
  }
  if (shared == 0) throw NotApplicable("over and under transpositions are disjoint");
  return CrossingFrame{shared, b1 == shared ? b2 : b1, g1 == shared ? g2 : g1};
}

MoveResult do_pos_to_neg(const Monodromy& m, int site) {
  const Crossing& x = crossing_at(m, site);
  if (x.sign != 1) throw NotApplicable("crossing is not positive");
  crossing_frame(m, x);  // transpositions sharing exactly one sheet
  std::vector<Crossing> crossings = m.diagram.crossings();
  crossings[static_cast<std::size_t>(site) - 1].sign = -1;
  Monodromy after;
  after.diagram = LinkDiagram::build(std::move(crossings), m.diagram.split_circles());
  after.degree = m.degree;
  after.assignment = m.assignment;
  return finish(m, move_kind_name(MoveKind::PosToNeg), std::move(after), true);
}

MoveResult do_make_disjoint(const Monodromy& m, int site) {
  const Crossing& x = crossing_at(m, site);
  const Permutation alpha = m.at(x.over);
  if (!(alpha == m.at(x.under_in) && alpha == m.at(x.under_out)))
    throw NotApplicable("crossing strands do not all carry the same permutation");
  if (!alpha.is_transposition()) throw NotApplicable("shared permutation is not a transposition");
  if (m.degree < 3) throw NotApplicable("need a third sheet to separate the strands");

  // Drag the under strand beneath two existing arcs whose transpositions
  // bridge alpha = (a b) through a third sheet c: passing under (b c) turns
  // the strand's image into (a c), the crossing maps that to (b c), and
  // passing back under an (a c) arc restores alpha. Dragging is an isotopy,
  // so the cover is untouched and the central crossing ends up with three
  // pairwise different transpositions. Which arc pairs the strand can reach
  // by a planar drag is not visible in the crossing list alone, so every
  // color-consistent rerouting is tried and the first one whose branched
  // homology certificate holds is returned.
  auto [a, b] = transposition_points(alpha);
  std::vector<std::array<int, 3>> reroutings;  // bridge_in, bridge_out, helper sheet
  for (int c = 1; c <= m.degree; ++c) {
    if (c == a || c == b) continue;
    std::vector<int> thru_b, thru_a;  // colored (b c) resp. (a c)
    for (int arc : m.diagram.arcs()) {
      if (m.at(arc) == transposition(m.degree, b, c)) thru_b.push_back(arc);
      if (m.at(arc) == transposition(m.degree, a, c)) thru_a.push_back(arc);
    }
    for (int p : thru_b)
      for (int q : thru_a) reroutings.push_back({p, q, c});
    for (int p : thru_a)
      for (int q : thru_b) reroutings.push_back({p, q, c});
  }
  if (reroutings.empty())
    throw NotApplicable("no arcs bridge the crossing's transposition through a third sheet");

  int top = max_arc(m.diagram);
  const int u1 = top + 1, u2 = top + 2;
  for (const auto& [bridge_in, bridge_out, c] : reroutings) {
    for (const auto& [sign_in, sign_out] : std::initializer_list<std::pair<int, int>>{
             {-1, +1}, {+1, -1}, {+1, +1}, {-1, -1}}) {
      std::vector<Crossing> site_crossings = {
          {bridge_in, x.under_in, u1, sign_in},
          {x.over, u1, u2, x.sign},
          {bridge_out, u2, x.under_out, sign_out},
      };
      std::vector<Crossing> crossings = m.diagram.crossings();
      crossings.erase(crossings.begin() + (site - 1));
      crossings.insert(crossings.begin() + (site - 1), site_crossings.begin(),
                       site_crossings.end());

      Monodromy after;
      after.diagram = LinkDiagram::build(std::move(crossings), m.diagram.split_circles());
      after.degree = m.degree;
      after.assignment = m.assignment;
      // The first poke conjugates alpha by the bridge color, the crossing
      // conjugates once more by alpha.
      const Permutation mid_in = conjugate(alpha, m.at(bridge_in));
      after.assignment.emplace(u1, mid_in);
      after.assignment.emplace(u2, conjugate(mid_in, alpha));
      try {
        return finish(m, move_kind_name(MoveKind::MakeDisjoint), std::move(after), true);
      } catch (const Error&) {
        // certificate violated for this rerouting; try the next candidate
      }
    }
  }
  throw NotApplicable("no rerouting beneath existing arcs preserves the branched homology");
}

MoveResult do_crossing_to_annulus(const Monodromy& m, int site) {
  const Crossing& x = crossing_at(m, site);
  CrossingFrame f = crossing_frame(m, x);
  check_over_strand_isolated(m, x);

  // Ring arc over the under strand is the third transposition on the three
  // sheets involved; the other ring arc is its conjugate through the over
  // strand.
  const Permutation ring_a = transposition(m.degree, f.over_other, f.under_other);
  const Permutation ring_b = transposition(m.degree, f.shared, f.under_other);

  int top = max_arc(m.diagram);
  const int r1 = top + 1, r2 = top + 2;
  std::vector<Crossing> crossings = m.diagram.crossings();
  int w = split_over_strand(crossings, x, top + 3);

  // Both smoothed strands thread the ring, each crossing it twice with equal
  // sign; the crossing itself is gone.
  std::vector<Crossing> site_crossings = {
      {x.over, r2, r1, +1},
      {r1, x.under_in, w, +1},
      {w, r1, r2, +1},
      {r2, x.over, x.under_out, +1},
  };
  crossings.erase(crossings.begin() + (site - 1));
  crossings.insert(crossings.begin() + (site - 1), site_crossings.begin(), site_crossings.end());

  Monodromy after;
  after.diagram = LinkDiagram::build(std::move(crossings), m.diagram.split_circles());
  after.degree = m.degree;
  after.assignment = m.assignment;
  after.assignment.emplace(r1, ring_a);
  after.assignment.emplace(r2, ring_b);
  if (w != x.over) after.assignment.emplace(w, m.at(x.over));
  return finish(m, move_kind_name(MoveKind::CrossingToAnnulus), std::move(after), true);
}

MoveResult do_over_to_under_distinct(const Monodromy& m, int site) {
  const Crossing& x = crossing_at(m, site);
  CrossingFrame f = crossing_frame(m, x);
  check_over_strand_isolated(m, x);

  const int d = m.degree + 1;
  const Permutation ring_a = transposition(d, f.shared, d);
  const Permutation ring_b = transposition(d, f.over_other, d);
  const Permutation mid = transposition(d, f.under_other, d);

  int top = max_arc(m.diagram);
  const int u_mid = top + 1, r1 = top + 2, r2 = top + 3;
  std::vector<Crossing> crossings = m.diagram.crossings();
  int w = split_over_strand(crossings, x, top + 4);

  // The old over strand now dives under the rerouted under strand, whose
  // image has been pushed onto the new sheet and off the over strand's
  // support; a small ring carries the color changes.
  std::vector<Crossing> site_crossings = {
      {x.over, r2, r1, -1},
      {r1, x.under_in, u_mid, -1},
      {u_mid, x.over, w, x.sign},
      {r2, u_mid, x.under_out, +1},
      {w, r1, r2, +1},
  };
  crossings.erase(crossings.begin() + (site - 1));
  crossings.insert(crossings.begin() + (site - 1), site_crossings.begin(), site_crossings.end());

  Monodromy after;
  after.diagram = LinkDiagram::build(std::move(crossings), m.diagram.split_circles());
  after.degree = d;
  for (int arc : m.diagram.arcs()) after.assignment.emplace(arc, extended(m.at(arc), d));
  after.assignment.emplace(u_mid, mid);
  after.assignment.emplace(r1, ring_a);
  after.assignment.emplace(r2, ring_b);
  if (w != x.over) after.assignment.emplace(w, extended(m.at(x.over), d));
  return finish(m, move_kind_name(MoveKind::OverToUnderDistinct), std::move(after), true);
}

MoveResult do_over_to_under_equal(const Monodromy& m, int site) {
  const Crossing& x = crossing_at(m, site);
  const Permutation alpha = m.at(x.over);
  if (!(alpha == m.at(x.under_in) && alpha == m.at(x.under_out)))
    throw NotApplicable("crossing strands do not all carry the same permutation");
  if (!alpha.is_transposition()) throw NotApplicable("shared permutation is not a transposition");
  check_over_strand_isolated(m, x);

  auto [a, b] = transposition_points(alpha);
  const int d = m.degree + 2;
  const int s1 = d - 1, s2 = d;  // the two new sheets

  // An outer ring paired with the first new sheet is threaded around the
  // whole site: over the under strand on both sides, under the over strand
  // on both sides. Poking the under strand beneath it moves that strand's
  // image off alpha's support, so the central crossing's transpositions
  // become pairwise different; the inner ring then flips the crossing
  // through the second new sheet, exactly as in the distinct-color rewrite.
  const Permutation outer_a = transposition(d, a, s1);
  const Permutation outer_b = transposition(d, b, s1);
  const Permutation inner_a = transposition(d, b, s2);
  const Permutation inner_b = transposition(d, a, s2);

  int top = max_arc(m.diagram);
  const int u1 = top + 1, u_mid = top + 2, u2 = top + 3;
  const int ra = top + 4, rb = top + 5;  // outer ring arcs
  const int r1 = top + 6, r2 = top + 7;  // inner ring arcs
  std::vector<Crossing> crossings = m.diagram.crossings();
  int w = split_over_strand(crossings, x, top + 8);

  std::vector<Crossing> site_crossings = {
      {x.over, ra, rb, -1},
      {x.over, r2, r1, -1},
      {ra, x.under_in, u1, -1},
      {r1, u1, u_mid, -1},
      {u_mid, x.over, w, x.sign},
      {r2, u_mid, u2, +1},
      {rb, u2, x.under_out, +1},
      {w, r1, r2, +1},
      {w, rb, ra, +1},
  };
  crossings.erase(crossings.begin() + (site - 1));
  crossings.insert(crossings.begin() + (site - 1), site_crossings.begin(), site_crossings.end());

  Monodromy after;
  after.diagram = LinkDiagram::build(std::move(crossings), m.diagram.split_circles());
  after.degree = d;
  for (int arc : m.diagram.arcs()) after.assignment.emplace(arc, extended(m.at(arc), d));
  after.assignment.emplace(u1, transposition(d, b, s1));
  after.assignment.emplace(u_mid, transposition(d, s1, s2));
  after.assignment.emplace(u2, transposition(d, a, s1));
  after.assignment.emplace(ra, outer_a);
  after.assignment.emplace(rb, outer_b);
  after.assignment.emplace(r1, inner_a);
  after.assignment.emplace(r2, inner_b);
  if (w != x.over) after.assignment.emplace(w, extended(m.at(x.over), d));
  return finish(m, move_kind_name(MoveKind::OverToUnderEqual), std::move(after), true);
}

MoveResult do_cyclic_branch_split(const Monodromy& m, int site) {
  if (site < 1 || site > m.diagram.num_components())
    throw TargetOutOfRange("component " + std::to_string(site) + " does not exist");
  const std::vector<int>& comp = m.diagram.components()[static_cast<std::size_t>(site) - 1];
  std::vector<int> split = m.diagram.split_circles();
  if (comp.size() != 1 || std::find(split.begin(), split.end(), comp[0]) == split.end())
    throw NotApplicable("component is not a split circle");
  const int axis = comp[0];
  const Permutation image = m.at(axis);

  std::vector<std::vector<int>> cycles;
  for (const std::vector<int>& cycle : image.cycles())
    if (cycle.size() > 1) cycles.push_back(cycle);
  if (cycles.size() != 1 || cycles[0].size() < 2)
    throw NotApplicable("branch circle image must be a single cycle");
  const std::vector<int>& cycle = cycles[0];
  const int l = static_cast<int>(cycle.size());

  // sigma sends c_j to c_{1-j}, tau sends c_j to c_{-j} (indices mod l);
  // their word product recovers the original cycle.
  std::vector<int> sigma_images(static_cast<std::size_t>(m.degree));
  std::vector<int> tau_images(static_cast<std::size_t>(m.degree));
  for (int i = 1; i <= m.degree; ++i) {
    sigma_images[static_cast<std::size_t>(i) - 1] = i;
    tau_images[static_cast<std::size_t>(i) - 1] = i;
  }
  for (int j = 0; j < l; ++j) {
    int from = cycle[static_cast<std::size_t>(j)];
    sigma_images[static_cast<std::size_t>(from) - 1] =
        cycle[static_cast<std::size_t>(((1 - j) % l + l) % l)];
    tau_images[static_cast<std::size_t>(from) - 1] =
        cycle[static_cast<std::size_t>(((-j) % l + l) % l)];
  }

  int top = max_arc(m.diagram);
  const int first = top + 1, second = top + 2;
  std::vector<int> circles;
  for (int arc : split)
    if (arc != axis) circles.push_back(arc);
  circles.push_back(first);
  circles.push_back(second);

  Monodromy after;
  after.diagram = LinkDiagram::build(m.diagram.crossings(), circles);
  after.degree = m.degree;
  after.assignment = m.assignment;
  after.assignment.erase(axis);
  after.assignment.emplace(first, Permutation(sigma_images));
  after.assignment.emplace(second, Permutation(tau_images));
  return finish(m, move_kind_name(MoveKind::CyclicBranchSplit), std::move(after), true);
}

}  // namespace

MoveResult apply_move(const Monodromy& m, const Move& move) {
  validate(m);
  switch (move.kind) {
    case MoveKind::AddTrivialSheets: return do_add_trivial_sheets(m, move.targets);
    case MoveKind::MakeDisjoint: return do_make_disjoint(m, move.site);
    case MoveKind::PosToNeg: return do_pos_to_neg(m, move.site);
    case MoveKind::CrossingToAnnulus: return do_crossing_to_annulus(m, move.site);
    case MoveKind::OverToUnderDistinct: return do_over_to_under_distinct(m, move.site);
    case MoveKind::OverToUnderEqual: return do_over_to_under_equal(m, move.site);
    case MoveKind::CyclicBranchSplit: return do_cyclic_branch_split(m, move.site);
  }
  throw Error("unknown move kind");
}

MoveResult add_trivial_sheets(const Monodromy& m, const std::vector<int>& targets) {
  validate(m);
  return do_add_trivial_sheets(m, targets);
}

MoveResult compose_cyclic(const Monodromy& m, int axis_component, int l) {
  validate(m);
  if (l < 1) throw Error("cyclic factor must be at least 1");
  if (axis_component < 1 || axis_component > m.diagram.num_components())
    throw TargetOutOfRange("component " + std::to_string(axis_component) + " does not exist");
  const std::vector<int>& comp =
      m.diagram.components()[static_cast<std::size_t>(axis_component) - 1];
  std::vector<int> split = m.diagram.split_circles();
  if (comp.size() != 1 || std::find(split.begin(), split.end(), comp[0]) == split.end())
    throw AxisNotSplit("axis component is not a split circle");
  const int axis = comp[0];
  if (!m.at(axis).is_identity())
    throw NotAnnular("axis image must be the identity before composing");

  const int d = m.degree;
  Monodromy after;
  after.diagram = m.diagram;
  after.degree = d * l;
  for (int arc : m.diagram.arcs()) {
    std::vector<int> images(static_cast<std::size_t>(d * l));
    const Permutation& base = m.at(arc);
    for (int j = 0; j < l; ++j)
      for (int i = 1; i <= d; ++i) {
        int point = i + j * d;
        int image;
        if (arc == axis)
          image = i + ((j + 1) % l) * d;  // shift copies cyclically
        else
          image = base(i) + j * d;  // act within each copy
        images[static_cast<std::size_t>(point) - 1] = image;
      }
    after.assignment.emplace(arc, Permutation(images));
  }
  MoveResult result = finish(m, "compose_cyclic", std::move(after), false);
  return result;
}

}  // namespace coverkit
