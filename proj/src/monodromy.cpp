#include "coverkit/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

namespace coverkit {

const Permutation& Monodromy::at(int arc) const {
  auto it = assignment.find(arc);
  if (it == assignment.end())
    throw Error("monodromy: no image for arc " + std::to_string(arc));
  return it->second;
}

std::vector<Permutation> Monodromy::arc_images() const {
  std::vector<Permutation> out;
  out.reserve(diagram.arcs().size());
  for (int a : diagram.arcs()) out.push_back(at(a));
  return out;
}

Monodromy make_monodromy(LinkDiagram diagram, int degree,
                         std::map<int, Permutation> assignment) {
  if (degree < 1) throw Error("monodromy: degree must be positive");
  for (const auto& [arc, img] : assignment) {
    if (!diagram.has_arc(arc))
      throw Error("monodromy: assignment names unknown arc " + std::to_string(arc));
    if (img.degree() != degree)
      throw DegreeMismatch("monodromy: arc " + std::to_string(arc) + " has degree " +
                           std::to_string(img.degree()) + ", expected " +
                           std::to_string(degree));
  }
  for (int a : diagram.arcs())
    if (!assignment.count(a))
      throw Error("monodromy: arc " + std::to_string(a) + " has no image");
  return Monodromy{std::move(diagram), degree, std::move(assignment)};
}

Permutation conjugate_through(const Permutation& under_in, const Permutation& over, int sign) {
  return sign > 0 ? conjugate(under_in, over) : conjugate(under_in, over.inverse());
}

CoverReport validate(const Monodromy& m) {
  const auto& d = m.diagram;
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& c = d.crossings()[i];
    if (!(conjugate_through(m.at(c.under_in), m.at(c.over), c.sign) == m.at(c.under_out)))
      throw RelationViolated("crossing " + std::to_string(i + 1) + " (over " +
                             std::to_string(c.over) + ", under " + std::to_string(c.under_in) +
                             " -> " + std::to_string(c.under_out) + "): relation fails");
  }
  CoverReport r;
  r.degree = m.degree;
  r.transitive = is_transitive(m.arc_images(), m.degree);
  r.simple = is_simple(m);
  for (int comp = 0; comp < d.num_components(); ++comp) {
    CycleType ct = m.at(d.meridian_arc(comp)).cycle_type();
    int cycles = static_cast<int>(ct.lengths.size());
    r.components.push_back(ComponentReport{component_label(d, comp), std::move(ct), cycles});
  }
  return r;
}

CycleType branching_indices(const Monodromy& m, int component) {
  return m.at(m.diagram.meridian_arc(component)).cycle_type();
}

int preimage_components(const Monodromy& m, int component) {
  return static_cast<int>(branching_indices(m, component).lengths.size());
}

bool is_simple(const Monodromy& m) {
  return std::all_of(m.diagram.arcs().begin(), m.diagram.arcs().end(),
                     [&](int a) { return m.at(a).is_transposition(); });
}

bool whitehead_shape_check(const Monodromy& m) {
  if (m.diagram.name() != "whitehead" || m.diagram.num_components() != 2)
    throw WrongDiagram("shape check applies to the built-in Whitehead diagram only");
  return branching_indices(m, 0).within({1, 2, 4}) &&
         branching_indices(m, 1).within({4, 8});
}

std::vector<int> propagation_seeds(const LinkDiagram& d) {
  std::vector<int> candidates;
  for (int c = 0; c < d.num_components(); ++c) candidates.push_back(d.meridian_arc(c));
  for (int a : d.arcs()) candidates.push_back(a);

  std::set<int> known;
  auto closure = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& x : d.crossings()) {
        if (!known.count(x.over)) continue;
        bool in = known.count(x.under_in) > 0, out = known.count(x.under_out) > 0;
        if (in != out) {
          known.insert(in ? x.under_out : x.under_in);
          changed = true;
        }
      }
    }
  };
  std::vector<int> seeds;
  for (int a : candidates) {
    closure();
    if (known.size() == d.arcs().size()) break;
    if (known.count(a)) continue;
    seeds.push_back(a);
    known.insert(a);
  }
  return seeds;
}

namespace {

// Fixpoint over the crossing relations. Returns false on a clash. The final
// quiet pass checks every crossing whose images are all present, so a
// complete assignment that survives is fully validated.
bool propagate(const LinkDiagram& d, std::map<int, Permutation>& images) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : d.crossings()) {
      auto over = images.find(c.over);
      if (over == images.end()) continue;
      auto in = images.find(c.under_in);
      auto out = images.find(c.under_out);
      if (in != images.end() && out == images.end()) {
        images.emplace(c.under_out, conjugate_through(in->second, over->second, c.sign));
        changed = true;
      } else if (out != images.end() && in == images.end()) {
        images.emplace(c.under_in, conjugate_through(out->second, over->second, -c.sign));
        changed = true;
      } else if (in != images.end() && out != images.end()) {
        if (!(conjugate_through(in->second, over->second, c.sign) == out->second)) return false;
      }
    }
  }
  return images.size() == d.arcs().size();
}

void partitions_rec(int remaining, int min_part, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (remaining == 0) {
    fn(cur);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, fn);
    cur.pop_back();
  }
}

// Cycle types of degree t compatible with the given component filters.
std::vector<CycleType> filtered_types(int t, const std::set<int>* allowed,
                                      const long long* order) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  partitions_rec(t, 1, cur, [&](const std::vector<int>& parts) {
    if (allowed &&
        !std::all_of(parts.begin(), parts.end(), [&](int p) { return allowed->count(p) > 0; }))
      return;
    if (order) {
      long long l = 1;
      for (int p : parts) l = std::lcm(l, static_cast<long long>(p));
      if (l != *order) return;
    }
    out.push_back(CycleType(parts));
  });
  return out;
}

Int count_of_type(int t, const CycleType& type) {
  Int count = 1;
  for (int k = 2; k <= t; ++k) count *= k;  // t!
  std::map<int, int> mult;
  for (int l : type.lengths) {
    count /= l;
    ++mult[l];
  }
  for (const auto& [l, m] : mult)
    for (int k = 2; k <= m; ++k) count /= k;
  return count;
}

constexpr std::size_t kCandidateCap = 2000000;

struct SeedPlan {
  int arc = 0;
  int comp = 0;
  std::vector<Permutation> candidates;
};

}  // namespace

std::vector<Monodromy> search_monodromies(const LinkDiagram& d, const SearchOptions& opts) {
  int t = opts.degree;
  if (t < 1) throw Error("search: degree must be positive");
  if (!opts.random && t > kSearchDegreeCapExhaustive)
    throw CapExceeded("search: exhaustive degree cap is " +
                      std::to_string(kSearchDegreeCapExhaustive));
  if (opts.random && t > kSearchDegreeCapRandom)
    throw CapExceeded("search: random degree cap is " + std::to_string(kSearchDegreeCapRandom));
  for (const auto& [comp, s] : opts.allowed_lengths) {
    (void)s;
    if (comp < 0 || comp >= d.num_components())
      throw UnknownComponent("search: no component " + std::to_string(comp));
  }
  for (const auto& [comp, o] : opts.meridian_order) {
    (void)o;
    if (comp < 0 || comp >= d.num_components())
      throw UnknownComponent("search: no component " + std::to_string(comp));
  }

  std::vector<int> seeds = propagation_seeds(d);

  auto filters_for = [&](int comp) {
    const std::set<int>* allowed = nullptr;
    const long long* order = nullptr;
    auto ai = opts.allowed_lengths.find(comp);
    if (ai != opts.allowed_lengths.end()) allowed = &ai->second;
    auto oi = opts.meridian_order.find(comp);
    if (oi != opts.meridian_order.end()) order = &oi->second;
    return std::pair(allowed, order);
  };

  auto component_ok = [&](int comp, const Permutation& img) {
    auto [allowed, order] = filters_for(comp);
    if (allowed && !img.cycle_type().within(*allowed)) return false;
    if (order && img.order() != *order) return false;
    return true;
  };

  // Completes a seed assignment into a monodromy, or rejects it.
  auto finish = [&](std::map<int, Permutation> images) -> std::optional<Monodromy> {
    if (!propagate(d, images)) return std::nullopt;
    std::vector<Permutation> gens;
    gens.reserve(images.size());
    for (const auto& [arc, img] : images) gens.push_back(img);
    if (!is_transitive(gens, t)) return std::nullopt;
    for (int comp = 0; comp < d.num_components(); ++comp)
      if (!component_ok(comp, images.at(d.meridian_arc(comp)))) return std::nullopt;
    return Monodromy{d, t, std::move(images)};
  };

  std::vector<Monodromy> results;

  if (opts.random) {
    std::mt19937_64 rng(opts.seed);
    std::set<std::vector<std::vector<int>>> seen;
    for (std::size_t attempt = 0;
         attempt < opts.random_attempts && results.size() < opts.limit; ++attempt) {
      std::map<int, Permutation> images;
      bool ok = true;
      for (int s : seeds) {
        std::vector<int> im(t);
        std::iota(im.begin(), im.end(), 1);
        std::shuffle(im.begin(), im.end(), rng);
        Permutation p(std::move(im));
        if (!component_ok(d.component_of(s), p)) {
          ok = false;
          break;
        }
        images.emplace(s, std::move(p));
      }
      if (!ok) continue;
      auto m = finish(std::move(images));
      if (!m) continue;
      std::vector<std::vector<int>> key;
      for (const auto& [arc, img] : m->assignment) key.push_back(img.images());
      if (seen.insert(std::move(key)).second) results.push_back(std::move(*m));
    }
    return results;
  }

  // Exhaustive: materialize candidate lists per seed.
  std::vector<SeedPlan> plan;
  bool canonical_mode = seeds.size() == 2 && d.num_components() >= 2 &&
                        seeds[0] == d.meridian_arc(0) && seeds[1] == d.meridian_arc(1);
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    SeedPlan sp;
    sp.arc = seeds[si];
    sp.comp = d.component_of(sp.arc);
    auto [allowed, order] = filters_for(sp.comp);
    std::vector<CycleType> types = filtered_types(t, allowed, order);
    if (canonical_mode && si == 1) {
      // Sheets may be relabeled freely, so the second meridian is pinned to
      // one representative per type.
      for (const auto& ty : types) sp.candidates.push_back(canonical_of_type(ty));
    } else {
      Int total = 0;
      for (const auto& ty : types) total += count_of_type(t, ty);
      if (total > kCandidateCap)
        throw CapExceeded("search: " + total.str() + " candidates for arc " +
                          std::to_string(sp.arc) + "; add cycle-type or order filters");
      for (const auto& ty : types)
        for_each_of_type(t, ty, [&](const Permutation& p) { sp.candidates.push_back(p); });
    }
    plan.push_back(std::move(sp));
  }
  if (plan.empty()) return results;  // no arcs at all cannot happen: diagrams have arcs

  // Remaining relabeling freedom in canonical mode is the centralizer of the
  // pinned seed; the first seed keeps only its lex-least conjugate.
  std::map<std::vector<int>, std::vector<Permutation>> centralizers;
  if (canonical_mode) {
    for (const auto& y : plan[1].candidates) {
      try {
        centralizers.emplace(y.images(), centralizer_elements(y, kCentralizerCap));
      } catch (const CapExceeded&) {
        centralizers.emplace(y.images(), std::vector<Permutation>{});  // too big: no reduction
      }
    }
  }

  auto run_range = [&](std::size_t begin, std::size_t end, std::vector<Monodromy>& out) {
    // Depth-first product over candidate lists, outermost index in [begin,end).
    std::function<void(std::size_t, std::map<int, Permutation>&)> rec =
        [&](std::size_t depth, std::map<int, Permutation>& images) {
          if (out.size() >= opts.limit) return;
          if (depth == plan.size()) {
            if (canonical_mode) {
              const auto& x = images.at(plan[0].arc);
              const auto& y = images.at(plan[1].arc);
              for (const auto& c : centralizers.at(y.images())) {
                if (conjugate(x, c).images() < x.images()) return;
              }
            }
            if (auto m = finish(images)) out.push_back(std::move(*m));
            return;
          }
          std::size_t lo = depth == 0 ? begin : 0;
          std::size_t hi = depth == 0 ? end : plan[depth].candidates.size();
          for (std::size_t i = lo; i < hi && out.size() < opts.limit; ++i) {
            images.emplace(plan[depth].arc, plan[depth].candidates[i]);
            rec(depth + 1, images);
            images.erase(plan[depth].arc);
          }
        };
    std::map<int, Permutation> images;
    rec(0, images);
  };

  std::size_t n0 = plan[0].candidates.size();
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || n0 < 2) {
    run_range(0, n0, results);
  } else {
    std::size_t chunk = (n0 + jobs - 1) / jobs;
    std::vector<std::vector<Monodromy>> parts((n0 + chunk - 1) / chunk);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < parts.size(); ++w) {
      std::size_t lo = w * chunk, hi = std::min(n0, lo + chunk);
      workers.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[w]); });
    }
    for (auto& th : workers) th.join();
    for (auto& part : parts) {
      for (auto& m : part) {
        if (results.size() >= opts.limit) break;
        results.push_back(std::move(m));
      }
    }
  }
  return results;
}

}  // namespace coverkit
