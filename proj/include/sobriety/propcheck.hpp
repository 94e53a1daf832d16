#pragma once

// Hypothesis ⇒ conclusion checks for the positive results, run over corpus
// spaces and generated instances.  A run either finds a counterexample or
// reports how many instances satisfied the hypothesis; it never claims a
// proof.

#include "sobriety/corpus.hpp"

#include <random>

namespace sobriety {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct Instance {
  std::string name;
  Space space;
};

struct PropositionResult {
  std::string id;
  std::string statement;
  bool expect_counterexample = false;
  std::size_t instances = 0;
  std::size_t hypothesis_held = 0;
  std::size_t skipped = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return expect_counterexample == counterexample.has_value(); }
};

/// ω spaces from the replication corpus, plus the finite-carrier ones
/// reachable from them.
inline std::vector<Instance> corpus_instances() {
  std::vector<Instance> out{
      {"ex2.4 L", spaces::example_2_4()},
      {"ex2.6 X", spaces::cofinite()},
      {"ex3.1 L", spaces::two_tops()},
      {"ex3.1 L'", spaces::one_top()},
      {"ex3.4 L", spaces::chain_beside_antichain()},
      {"ex3.6 N", spaces::omega_chain()},
      {"ex3.8 L", spaces::two_tops_and_top()},
      {"weak Scott L", Space::weak_scott(catalog::chain_with_two_tops(), "L")},
      {"weak Scott L'", Space::weak_scott(catalog::chain_with_one_top(), "L'")},
      {"upper L", Space::upper(catalog::chain_with_two_tops(), "L")},
  };
  out.push_back({"ex3.13 Ps(L)", smyth_power_space(spaces::two_tops()).space});
  return out;
}

namespace propcheck_detail {

inline FinitePoset random_poset(std::size_t n, std::mt19937_64& rng, double density = 0.35) {
  std::bernoulli_distribution edge(density);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) gens.emplace_back(i, j);
  return FinitePoset(std::move(names), gens);
}

}  // namespace propcheck_detail

/// Random finite spaces on 1..max_size points: order topologies over random
/// posets and topologies generated by random subbases (possibly not T0).
inline std::vector<Instance> random_finite_instances(std::size_t count, std::uint64_t seed = kDefaultSeed,
                                                     std::size_t max_size = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> kind(0, 4);
  std::vector<Instance> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = size(rng);
    auto p = propcheck_detail::random_poset(n, rng);
    const std::string name = "random#" + std::to_string(k);
    switch (kind(rng)) {
      case 0: out.push_back({name, Space::alexandroff(OmegaPoset(p), name)}); break;
      case 1: out.push_back({name, Space::upper(OmegaPoset(p), name)}); break;
      case 2: out.push_back({name, Space::lower(OmegaPoset(p), name)}); break;
      case 3: out.push_back({name, Space::weak_scott(OmegaPoset(p), name)}); break;
      default: {
        std::uniform_int_distribution<unsigned long> mask(0, (1ul << n) - 1);
        std::vector<Subset> subbasis;
        for (std::size_t i = 0; i < n; ++i) subbasis.emplace_back(n, mask(rng));
        out.push_back({name, Space::explicit_finite(OmegaPoset(FinitePoset::antichain(p.names())), subbasis, name)});
      }
    }
  }
  return out;
}

/// Random small ω presentations: up to three finite points, one or two
/// families and random declared relations, under the Alexandroff, upper or
/// weak Scott topology.  Invalid presentations are redrawn.
inline std::vector<Instance> random_omega_instances(std::size_t count, std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> fsize(0, 3), fams(1, 2), rel(0, 4), kind(0, 2);
  std::bernoulli_distribution chain(0.7);
  std::vector<Instance> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    auto base = propcheck_detail::random_poset(fsize(rng), rng, 0.4);
    std::vector<Family> families;
    const std::size_t m = fams(rng);
    for (std::size_t f = 0; f < m; ++f) families.push_back({f == 0 ? "N" : "M", chain(rng) ? FamilyKind::chain : FamilyKind::antichain});
    std::map<std::pair<std::size_t, std::size_t>, CrossRelation> cross;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t f = 0; f < m; ++f) switch (rel(rng)) {
          case 1: cross[{i, f}] = {CrossKind::above_all}; break;
          case 2: cross[{i, f}] = {CrossKind::below_all}; break;
          case 3: cross[{i, f}] = {CrossKind::above_prefix, 1 + rng() % 2}; break;
          default: break;
        }
    const std::string name = "omega#" + std::to_string(out.size());
    try {
      OmegaPoset p(base, families, cross);
      switch (kind(rng)) {
        case 0: out.push_back({name, Space::alexandroff(p, name)}); break;
        case 1: out.push_back({name, Space::upper(p, name)}); break;
        default: out.push_back({name, Space::weak_scott(p, name)}); break;
      }
    } catch (const std::invalid_argument&) {
    } catch (const UnsupportedTopology&) {
    }
  }
  return out;
}

namespace propcheck_detail {

/// Nonempty subsets of the support, all of them for finite spaces and the
/// bounded universe otherwise.
inline std::vector<FPSet> candidate_subsets(const Space& x) {
  std::vector<FPSet> out;
  if (x.is_finite()) {
    const auto pts = x.points();
    for (unsigned mask = 1; mask < (1u << pts.size()); ++mask) {
      FPSet s = x.empty_set();
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask & (1u << i)) s = s | x.singleton(pts[i]);
      out.push_back(s);
    }
    return out;
  }
  for (auto& s : bounded_universe(x.carrier(), x.support(), x.index_bound() + 1))
    if (!s.empty()) out.push_back(std::move(s));
  return out;
}

/// Continuous kernel operators: all endomaps of finite spaces up to five
/// points; on ω carriers the maps fixing every family member and moving
/// finite points among finite points.
inline std::vector<ContinuousMap> kernel_operators(const Space& x) {
  std::vector<ContinuousMap> out;
  const auto pts = x.is_finite() ? x.points() : [&] {
    std::vector<Point> f;
    for (const auto& p : x.points())
      if (p.is_finite()) f.push_back(p);
    return f;
  }();
  if (x.is_finite() && pts.size() > 5) return out;
  const std::size_t n = pts.size();
  std::vector<std::size_t> choice(n, 0);
  for (bool more = n > 0; more;) {
    std::vector<std::pair<Point, Point>> table;
    for (std::size_t i = 0; i < n; ++i) table.emplace_back(pts[i], pts[choice[i]]);
    ContinuousMap p{x, x, [table](const Point& a) {
                      for (const auto& [from, to] : table)
                        if (from == a) return to;
                      return a;
                    },
                    "p"};
    bool below = true;
    for (std::size_t i = 0; i < n && below; ++i) below = x.specialization_leq(pts[choice[i]], pts[i]);
    if (below) {
      const auto kind = operator_kind(p).kind;
      if ((kind == OperatorKind::kernel || kind == OperatorKind::identity) && is_continuous(p)) out.push_back(std::move(p));
    }
    std::size_t k = 0;
    while (k < n && ++choice[k] == n) choice[k++] = 0;
    more = k < n;
  }
  return out;
}

}  // namespace propcheck_detail

struct PropositionSpec {
  std::string id;
  std::string statement;
  bool expect_counterexample = false;
  // One (conclusion holds, where) entry per derived instance whose
  // hypothesis held.
  std::function<std::vector<std::pair<bool, std::string>>(const Instance&)> evaluate;
};

namespace propcheck_detail {

using Outcomes = std::vector<std::pair<bool, std::string>>;

template <class Hyp, class Concl>
Outcomes over_subspaces(const Instance& inst, Hyp&& space_hyp, std::function<bool(const Space&, const FPSet&)> subset_ok,
                        Concl&& conclusion) {
  Outcomes out;
  if (!space_hyp(inst.space)) return out;
  for (const auto& s : candidate_subsets(inst.space)) {
    if (!subset_ok(inst.space, s)) continue;
    const auto sub = inst.space.restricted_to(s);
    out.emplace_back(conclusion(sub), inst.name + " on " + inst.space.describe(s));
  }
  return out;
}

inline bool ws(const Space& x) { return x.is_t0() && is_weakly_sober(x).holds; }
inline bool qs(const Space& x) { return x.is_t0() && is_quasisober(x).holds; }
inline bool cut(const Space& x) { return is_cut_space(x).holds; }

inline bool sup_semilattice(const Space& x) {
  const auto pts = x.points();
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (!x.least_upper_bound(x.singleton(a) | x.singleton(b))) return false;
  return true;
}

template <class Concl>
Outcomes over_kernels(const Instance& inst, std::function<bool(const Space&)> hyp, Concl&& conclusion) {
  Outcomes out;
  if (!hyp(inst.space)) return out;
  for (const auto& p : kernel_operators(inst.space))
    out.emplace_back(conclusion(image_subspace(p)), inst.name + " image " + inst.space.describe(p.image()));
  return out;
}

template <class Hyp, class Concl>
Outcomes over_smyth(const Instance& inst, Hyp&& hyp, Concl&& conclusion) {
  Outcomes out;
  if (inst.space.is_finite() && inst.space.points().size() > 5) return out;
  SmythSpace ps;
  try {
    ps = smyth_power_space(inst.space);
  } catch (const UnsupportedTopology&) {
    return out;
  }
  if (!hyp(inst.space, ps.space)) return out;
  out.emplace_back(conclusion(inst.space), inst.name);
  return out;
}

}  // namespace propcheck_detail

inline const std::vector<PropositionSpec>& propositions() {
  using namespace propcheck_detail;
  auto saturated = [](const Space& x, const FPSet& s) { return x.is_saturated(s); };
  auto open = [](const Space& x, const FPSet& s) { return x.is_open(s); };
  auto closed = [](const Space& x, const FPSet& s) { return x.is_closed(s); };
  static const std::vector<PropositionSpec> specs{
      {"prop3.2", "saturated subspace of a cut space is a cut space", false,
       [=](const Instance& i) { return over_subspaces(i, cut, saturated, cut); }},
      {"prop3.3", "saturated subspace of a weakly sober space is weakly sober", false,
       [=](const Instance& i) { return over_subspaces(i, ws, saturated, ws); }},
      {"prop3.5", "open subspace of a quasisober space is quasisober", false,
       [=](const Instance& i) { return over_subspaces(i, qs, open, qs); }},
      {"prop3.9", "kernel-operator image of a cut space is a cut space", false,
       [](const Instance& i) { return over_kernels(i, cut, cut); }},
      {"prop3.10", "kernel-operator image of a weakly sober space is weakly sober", false,
       [](const Instance& i) { return over_kernels(i, ws, ws); }},
      {"prop3.11", "kernel-operator image of a quasisober space is quasisober", false,
       [](const Instance& i) { return over_kernels(i, qs, qs); }},
      {"thm3.14", "Ps(X) cut implies X cut", false,
       [](const Instance& i) { return over_smyth(i, [](const Space&, const Space& ps) { return cut(ps); }, cut); }},
      {"thm3.15", "Ps(X) weakly sober and X T0 imply X weakly sober", false,
       [](const Instance& i) {
         return over_smyth(i, [](const Space& x, const Space& ps) { return x.is_t0() && ws(ps); }, ws);
       }},
      {"thm3.17wf", "Ps(X) quasisober and X T0 well-filtered imply X quasisober", false,
       [](const Instance& i) {
         return over_smyth(
             i, [](const Space& x, const Space& ps) {
               return x.is_t0() && qs(ps) && is_well_filtered(x).first == Verdict::yes;
             }, qs);
       }},
      {"thm3.17sup", "Ps(X) quasisober and X T0 with a sup-semilattice order imply X quasisober", false,
       [](const Instance& i) {
         return over_smyth(i, [](const Space& x, const Space& ps) { return x.is_t0() && qs(ps) && sup_semilattice(x); }, qs);
       }},
      {"neg-closed-cut", "closed subspace of a cut space is a cut space (false in general)", true,
       [=](const Instance& i) { return over_subspaces(i, cut, closed, cut); }},
      {"neg-saturated-qs", "saturated subspace of a quasisober space is quasisober (false in general)", true,
       [=](const Instance& i) { return over_subspaces(i, qs, saturated, qs); }},
  };
  return specs;
}

inline PropositionResult run_proposition(const PropositionSpec& spec, const std::vector<Instance>& instances) {
  PropositionResult r;
  r.id = spec.id;
  r.statement = spec.statement;
  r.expect_counterexample = spec.expect_counterexample;
  for (const auto& inst : instances) {
    ++r.instances;
    std::vector<std::pair<bool, std::string>> outcomes;
    try {
      outcomes = spec.evaluate(inst);
    } catch (const std::length_error&) {
      ++r.skipped;
      continue;
    }
    for (const auto& [holds, where] : outcomes) {
      ++r.hypothesis_held;
      if (!holds && !r.counterexample) r.counterexample = where;
    }
  }
  return r;
}

inline PropositionResult run_proposition(const std::string& id, const std::vector<Instance>& instances) {
  for (const auto& spec : propositions())
    if (spec.id == id) return run_proposition(spec, instances);
  throw std::out_of_range("unknown proposition id: " + id);
}

}  // namespace sobriety
