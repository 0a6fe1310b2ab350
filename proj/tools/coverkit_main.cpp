// coverkit: branched covers of S^3 over links, on the command line.
//
// Subcommands wrap the library pipeline one stage at a time so that runs are
// reproducible and scriptable: validate, indices, regular, homology, pi1,
// search, orbifold, move, oracle. JSON output is canonical (fixed key order,
// fixed formatting), so identical inputs give byte-identical bytes; text
// output is for eyeballs only.
//
// Exit codes: 0 success, 1 usage, 2 validation or input failure, 3 cap
// exceeded. In --json mode errors also land on stderr as one-line JSON.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coverkit/fpgroups.hpp"
#include "coverkit/json_io.hpp"
#include "coverkit/moves.hpp"
#include "coverkit/oracles.hpp"
#include "coverkit/regular.hpp"

namespace {

using namespace coverkit;

enum class OutMode { Text, Json };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

Monodromy load_monodromy(const std::string& path) {
  return monodromy_from_json(read_json_file(path));
}

// A diagram argument is a built-in name, a JSON file, or a PD text file.
LinkDiagram load_diagram(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return builtin_diagram(arg);
  std::string text = read_file(arg);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == '{' || text[i] == '"'))
    return diagram_from_json(parse_json_text(text, arg));
  return parse_pd(text);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string error_slug(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return "cap_exceeded";
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const InconsistentOrientation*>(&e)) return "inconsistent_orientation";
  if (dynamic_cast<const UnknownComponent*>(&e)) return "unknown_component";
  if (dynamic_cast<const DegreeMismatch*>(&e)) return "degree_mismatch";
  if (dynamic_cast<const RelationViolated*>(&e)) return "relation_violated";
  if (dynamic_cast<const WrongDiagram*>(&e)) return "wrong_diagram";
  if (dynamic_cast<const NotTransitive*>(&e)) return "not_transitive";
  if (dynamic_cast<const NotApplicable*>(&e)) return "not_applicable";
  if (dynamic_cast<const RepeatedTarget*>(&e)) return "repeated_target";
  if (dynamic_cast<const TargetOutOfRange*>(&e)) return "target_out_of_range";
  if (dynamic_cast<const AxisNotSplit*>(&e)) return "axis_not_split";
  if (dynamic_cast<const NotAnnular*>(&e)) return "not_annular";
  if (dynamic_cast<const UniformIndexViolation*>(&e)) return "uniform_index_violation";
  if (dynamic_cast<const IncompleteTable*>(&e)) return "incomplete_table";
  if (dynamic_cast<const NotAKnot*>(&e)) return "not_a_knot";
  if (dynamic_cast<const coverkit::Error*>(&e)) return "error";
  return "internal";
}

void report_error(OutMode mode, const std::exception& e) {
  if (mode == OutMode::Json)
    std::cerr << Json{{"error", error_slug(e)}, {"message", e.what()}}.dump() << "\n";
  else
    std::cerr << "error: " << e.what() << "\n";
}

std::string indices_brace(const std::vector<int>& lengths) {
  return CycleType(lengths).str();
}

// ---- validate ----------------------------------------------------------

void run_validate(OutMode mode, const std::string& path) {
  Monodromy m = load_monodromy(path);
  CoverReport r = validate(m);
  if (mode == OutMode::Json) {
    print_json(report_to_json(r));
    return;
  }
  std::cout << "degree " << r.degree << (r.transitive ? ", transitive" : ", NOT transitive")
            << (r.simple ? ", simple" : "") << "\n";
  for (const auto& c : r.components)
    std::cout << c.label << ": indices " << c.indices.str() << ", " << c.preimage_components
              << " preimage component(s)\n";
}

// ---- indices -----------------------------------------------------------

void run_indices(OutMode mode, const std::string& path) {
  Monodromy m = load_monodromy(path);
  validate(m);
  Json j = Json::object();
  for (int c = 0; c < m.diagram.num_components(); ++c)
    j[component_label(m.diagram, c)] = branching_indices(m, c).lengths;
  if (mode == OutMode::Json) {
    print_json(j);
    return;
  }
  for (const auto& [label, lengths] : j.items())
    std::cout << label << ": " << indices_brace(lengths.get<std::vector<int>>()) << "\n";
}

// ---- regular -----------------------------------------------------------

void run_regular(OutMode mode, const std::string& path) {
  Monodromy m = load_monodromy(path);
  validate(m);
  RegularCoverData data = associated_regular(m);
  RegularIndexReport rep = verify_regular_indices(data);
  if (mode == OutMode::Json) {
    Json comps = Json::array();
    for (const auto& c : rep.components)
      comps.push_back(Json{{"component", c.label}, {"index", c.index}, {"sheets", c.sheets}});
    Json j;
    j["source_degree"] = m.degree;
    j["group_order"] = rep.group_order;
    j["components"] = std::move(comps);
    j["regular_cover"] = monodromy_to_json(data.regular);
    print_json(j);
    return;
  }
  std::cout << "image group order " << rep.group_order << "; regular cover degree "
            << data.regular.degree << "\n";
  for (const auto& c : rep.components)
    std::cout << c.label << ": uniform index " << c.index << " on " << c.sheets
              << " preimage component(s)\n";
}

// ---- homology ----------------------------------------------------------

void run_homology(OutMode mode, const std::string& path) {
  Monodromy m = load_monodromy(path);
  AbelianInvariants ab = cover_h1(m);
  if (mode == OutMode::Json)
    print_json(abelian_to_json(ab));
  else
    std::cout << "H1 = " << ab.str() << "\n";
}

// ---- pi1 ---------------------------------------------------------------

void run_pi1(OutMode mode, const std::string& path, bool trivialize) {
  Monodromy m = load_monodromy(path);
  FpGroup g = branched_cover_pi1(m);
  if (mode == OutMode::Json) {
    Json j;
    j["group"] = fpgroup_to_json(g);
    if (trivialize) j["triviality"] = triviality_to_json(try_trivialize(g));
    print_json(j);
    return;
  }
  std::cout << fpgroup_str(g) << "\n";
  if (trivialize) {
    TrivialityReport t = try_trivialize(g);
    std::cout << "triviality: " << triviality_name(t.verdict);
    if (!t.witness.empty()) std::cout << " (witness: " << t.witness << ")";
    std::cout << "\n";
  }
}

// ---- search ------------------------------------------------------------

struct SearchArgs {
  std::string diagram;
  int degree = 1;
  bool whitehead_shape = false;
  std::vector<long long> orders;  // one per component, 0 = unconstrained
  std::size_t limit = static_cast<std::size_t>(-1);
  bool random = false;
  unsigned long seed = 0;
  std::size_t attempts = 1000000;
  int jobs = 1;
};

void run_search(OutMode mode, const SearchArgs& args) {
  LinkDiagram d = load_diagram(args.diagram);
  SearchOptions opts;
  opts.degree = args.degree;
  opts.limit = args.limit;
  opts.random = args.random;
  opts.seed = args.seed;
  opts.random_attempts = args.attempts;
  opts.jobs = args.jobs;
  if (args.whitehead_shape) {
    if (d.name() != "whitehead")
      throw WrongDiagram("--whitehead-shape applies to the built-in whitehead diagram only");
    opts.allowed_lengths = {{0, {1, 2, 4}}, {1, {4, 8}}};
  }
  if (!args.orders.empty()) {
    if (static_cast<int>(args.orders.size()) != d.num_components())
      throw ParseError("--orders needs one entry per component (" +
                       std::to_string(d.num_components()) + " here); 0 leaves one free");
    for (int c = 0; c < d.num_components(); ++c)
      if (args.orders[static_cast<std::size_t>(c)] != 0)
        opts.meridian_order[c] = args.orders[static_cast<std::size_t>(c)];
  }
  std::vector<Monodromy> hits = search_monodromies(d, opts);
  if (mode == OutMode::Json) {
    for (const Monodromy& m : hits) std::cout << monodromy_to_json(m).dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::cout << "hit " << (i + 1) << ":";
    for (int arc : hits[i].diagram.arcs()) std::cout << " " << arc << ":" << cycle_str(hits[i].at(arc));
    std::cout << "\n";
  }
  std::cout << hits.size() << " monodrom" << (hits.size() == 1 ? "y" : "ies") << " of degree "
            << args.degree << "\n";
}

// ---- orbifold ----------------------------------------------------------

void run_orbifold(OutMode mode, const std::string& diagram_arg, const std::vector<int>& orders) {
  LinkDiagram d = load_diagram(diagram_arg);
  if (static_cast<int>(orders.size()) != d.num_components())
    throw ParseError("--indices needs one entry per component (" +
                     std::to_string(d.num_components()) + " here)");
  FpGroup g = orbifold_group(OrbifoldGroupSpec{d, orders});
  AbelianInvariants ab = abelianization(g);
  if (mode == OutMode::Json) {
    Json j;
    j["group"] = fpgroup_to_json(g);
    j["abelianization"] = abelian_to_json(ab);
    print_json(j);
    return;
  }
  std::cout << fpgroup_str(g) << "\n";
  std::cout << "abelianization: " << ab.str() << "\n";
}

// ---- move --------------------------------------------------------------

// A script is a JSON array of steps applied in order. Each step names a
// kind: one of the crossing/component moves (with "site" and, for the
// sheet-adding kinds, "targets"), or "compose_cyclic" with "site" (the axis
// component) and "l".
void run_move(OutMode mode, const std::string& monodromy_path, const std::string& script_path) {
  Monodromy m = load_monodromy(monodromy_path);
  Json script = read_json_file(script_path);
  if (!script.is_array()) throw ParseError(script_path + ": move script must be a JSON array");
  Json certs = Json::array();
  for (const Json& step : script) {
    if (!step.is_object() || !step.contains("kind"))
      throw ParseError(script_path + ": each step needs a \"kind\"");
    std::string kind = step.at("kind").get<std::string>();
    MoveResult res;
    if (kind == "compose_cyclic") {
      res = compose_cyclic(m, step.value("site", 0), step.value("l", 0));
    } else {
      Move mv;
      mv.kind = move_kind_from_name(kind);
      mv.site = step.value("site", 0);
      mv.targets = step.value("targets", std::vector<int>{});
      res = apply_move(m, mv);
    }
    m = std::move(res.monodromy);
    certs.push_back(certificate_to_json(res.certificate));
  }
  if (mode == OutMode::Json) {
    Json j;
    j["monodromy"] = monodromy_to_json(m);
    j["certificates"] = std::move(certs);
    print_json(j);
    return;
  }
  for (const Json& c : certs) {
    std::cout << c["operation"].get<std::string>() << ": degree " << c["old_degree"] << " -> "
              << c["new_degree"];
    if (!c["h1_before"].is_null() && !c["h1_after"].is_null())
      std::cout << ", H1 " << c["h1_before"]["pretty"].get<std::string>() << " -> "
                << c["h1_after"]["pretty"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << "final degree " << m.degree << ", " << m.diagram.crossings().size()
            << " crossing(s)\n";
}

// ---- oracle ------------------------------------------------------------

Json int_to_json(const Int& v) {
  if (v <= Int(std::numeric_limits<long long>::max()) &&
      v >= Int(std::numeric_limits<long long>::min()))
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

void run_oracle(OutMode mode, const std::string& which, const std::string& diagram_arg,
                const std::vector<int>& ns) {
  LinkDiagram d = load_diagram(diagram_arg);
  if (which == "alexander") {
    LaurentPoly p = alexander_polynomial(d);
    if (mode == OutMode::Json) {
      Json coeffs = Json::object();
      for (const auto& [exp, c] : p.coeffs()) coeffs[std::to_string(exp)] = int_to_json(c);
      print_json(Json{{"alexander", p.str()}, {"coefficients", std::move(coeffs)}});
    } else {
      std::cout << "alexander: " << p.str() << "\n";
    }
    return;
  }
  if (which == "cyclic") {
    LaurentPoly p = alexander_polynomial(d);
    Json orders = Json::object();
    for (int n : ns) {
      if (n < 2) throw ParseError("cyclic cover order must be at least 2");
      orders[std::to_string(n)] = int_to_json(cyclic_cover_h1_order(d, n));
    }
    if (mode == OutMode::Json) {
      print_json(Json{{"alexander", p.str()}, {"h1_orders", std::move(orders)}});
    } else {
      std::cout << "alexander: " << p.str() << "\n";
      for (const auto& [n, o] : orders.items())
        std::cout << "n=" << n << ": |H1| = "
                  << (o.is_number() && o.get<long long>() == 0 ? std::string("infinite")
                                                               : o.dump())
                  << "\n";
    }
    return;
  }
  AbelianInvariants ab = goeritz_h1_double_cover(d);
  if (mode == OutMode::Json)
    print_json(Json{{"h1", abelian_to_json(ab)}});
  else
    std::cout << "double cover H1 = " << ab.str() << "\n";
}

bool json_flag_in_argv(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branched covers of the 3-sphere over links"};
  app.require_subcommand(1);
  bool json_mode = false;
  bool text_mode = false;
  app.add_flag("--json", json_mode, "canonical machine-readable output");
  app.add_flag("--text", text_mode, "human-readable output (default)");

  std::function<void(OutMode)> action;

  std::string mono_path;
  auto* v = app.add_subcommand("validate", "check a monodromy and report the cover");
  v->fallthrough();
  v->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  v->callback([&] { action = [&](OutMode mode) { run_validate(mode, mono_path); }; });

  auto* ix = app.add_subcommand("indices", "branching indices per component");
  ix->fallthrough();
  ix->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  ix->callback([&] { action = [&](OutMode mode) { run_indices(mode, mono_path); }; });

  auto* rg = app.add_subcommand("regular", "associated regular cover and its uniform indices");
  rg->fallthrough();
  rg->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  rg->callback([&] { action = [&](OutMode mode) { run_regular(mode, mono_path); }; });

  auto* hm = app.add_subcommand("homology", "H1 of the branched cover");
  hm->fallthrough();
  hm->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  hm->callback([&] { action = [&](OutMode mode) { run_homology(mode, mono_path); }; });

  bool trivialize = false;
  auto* p1 = app.add_subcommand("pi1", "fundamental group presentation of the cover");
  p1->fallthrough();
  p1->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  p1->add_flag("--try-trivialize", trivialize, "also attempt a three-valued triviality verdict");
  p1->callback([&] { action = [&](OutMode mode) { run_pi1(mode, mono_path, trivialize); }; });

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "enumerate transitive monodromies of a given degree");
  se->fallthrough();
  se->add_option("diagram", sa.diagram, "built-in name, diagram JSON, or PD file")->required();
  se->add_option("--degree", sa.degree, "covering degree")->required()->check(CLI::PositiveNumber);
  se->add_flag("--whitehead-shape", sa.whitehead_shape,
               "keep only cycle types over {1,2,4} and {4,8} (whitehead diagram)");
  se->add_option("--orders", sa.orders, "meridian image orders, one per component, 0 = free")
      ->delimiter(',');
  se->add_option("--limit", sa.limit, "stop after this many hits");
  auto* rnd = se->add_flag("--random", sa.random, "sample instead of exhausting");
  auto* seed = se->add_option("--seed", sa.seed, "seed for random mode");
  rnd->needs(seed);
  se->add_option("--attempts", sa.attempts, "random mode attempt budget");
  se->add_option("--jobs", sa.jobs, "worker threads (output order unchanged)")
      ->check(CLI::PositiveNumber);
  se->callback([&] { action = [&](OutMode mode) { run_search(mode, sa); }; });

  std::string orb_diagram;
  std::vector<int> orb_orders;
  auto* ob = app.add_subcommand("orbifold", "link group modulo meridian powers");
  ob->fallthrough();
  ob->add_option("diagram", orb_diagram, "built-in name, diagram JSON, or PD file")->required();
  ob->add_option("--indices", orb_orders, "isotropy orders, one per component")
      ->required()
      ->delimiter(',');
  ob->callback([&] { action = [&](OutMode mode) { run_orbifold(mode, orb_diagram, orb_orders); }; });

  std::string script_path;
  auto* mv = app.add_subcommand("move", "apply a move script, certifying H1 at each step");
  mv->fallthrough();
  mv->add_option("monodromy", mono_path, "monodromy JSON file")->required();
  mv->add_option("script", script_path, "JSON array of move steps")->required();
  mv->callback([&] { action = [&](OutMode mode) { run_move(mode, mono_path, script_path); }; });

  std::string oracle_which;
  std::string oracle_diagram;
  std::vector<int> oracle_ns = {2, 3, 4, 5, 6};
  auto* oc = app.add_subcommand("oracle", "independent invariants from diagram combinatorics");
  oc->fallthrough();
  oc->add_option("which", oracle_which, "alexander | cyclic | goeritz")
      ->required()
      ->check(CLI::IsMember({"alexander", "cyclic", "goeritz"}));
  oc->add_option("diagram", oracle_diagram, "built-in name, diagram JSON, or PD file")->required();
  oc->add_option("--n", oracle_ns, "cyclic cover orders to report")->delimiter(',');
  oc->callback(
      [&] { action = [&](OutMode mode) { run_oracle(mode, oracle_which, oracle_diagram, oracle_ns); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (json_flag_in_argv(argc, argv))
      std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  OutMode mode = json_mode && !text_mode ? OutMode::Json : OutMode::Text;
  try {
    action(mode);
  } catch (const CapExceeded& e) {
    report_error(mode, e);
    return 3;
  } catch (const std::exception& e) {
    report_error(mode, e);
    return 2;
  }
  return 0;
}
