#pragma once

// Space constructions: subspaces, products, continuous maps, retracts,
// closure and kernel operators, Smyth power spaces and pointwise function
// spaces.

#include "sobriety/chain_product.hpp"
#include "sobriety/classify.hpp"

namespace sobriety {

class UnsupportedProduct : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteFunctionSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Space subspace(const Space& x, const FPSet& s, std::string name = {}) { return x.restricted_to(s, std::move(name)); }

namespace detail {

inline std::vector<std::size_t> positions(const Subset& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline std::string brace(const std::vector<std::string>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + "}";
}

}  // namespace detail

/// Finite product with the topology generated by U × Y and X × V.
inline Space product(const Space& x, const Space& y, std::string name = {}) {
  if (!x.is_finite() || !y.is_finite())
    throw UnsupportedProduct("products need two finite spaces; use chain_product for N x N");
  const auto xs = detail::positions(x.support().finite), ys = detail::positions(y.support().finite);
  std::vector<std::string> names;
  for (auto a : xs)
    for (auto b : ys) names.push_back("(" + x.carrier().finite_part().name(a) + "," + y.carrier().finite_part().name(b) + ")");
  const std::size_t n = names.size();
  std::vector<Subset> subbasis;
  for (const auto& u : x.open_sets()) {
    Subset s(n);
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (u.finite[xs[i]])
        for (std::size_t j = 0; j < ys.size(); ++j) s.set(i * ys.size() + j);
    subbasis.push_back(s);
  }
  for (const auto& v : y.open_sets()) {
    Subset s(n);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (v.finite[ys[j]]) s.set(i * ys.size() + j);
    subbasis.push_back(s);
  }
  if (name.empty()) name = x.name() + "x" + y.name();
  return Space::explicit_finite(OmegaPoset(FinitePoset::antichain(std::move(names))), subbasis, std::move(name));
}

/// N × N from two Alexandroff chains without finite points.
inline ChainProductSpace chain_product(const Space& x, const Space& y) {
  auto is_bare_chain = [](const Space& s) {
    const auto& c = s.carrier();
    return s.kind() == TopologyKind::alexandroff && c.finite_size() == 0 && c.family_count() == 1 &&
           c.family(0).kind == FamilyKind::chain && s.extra_opens().empty() && s.support() == c.full_set();
  };
  if (!is_bare_chain(x) || !is_bare_chain(y))
    throw UnsupportedProduct("chain_product needs two Alexandroff chains N with no other points");
  return ChainProductSpace(x.name() + "x" + y.name());
}

/// A map between spaces given by a rule on points.  On ω carriers the rule
/// must treat members beyond the index bounds uniformly.
struct ContinuousMap {
  Space source;
  Space target;
  std::function<Point(const Point&)> rule;
  std::string name = "f";

  Point operator()(const Point& x) const { return rule(x); }

  std::size_t index_bound() const { return std::max(source.index_bound(), target.index_bound()) + 1; }

  FPSet preimage(const FPSet& u) const {
    const std::size_t b = std::max(index_bound(), u.max_index());
    return tabulate(source.carrier(), b, [&](const Point& p) { return source.support().contains(p) && u.contains(rule(p)); });
  }

  /// Sample of the image; on ω carriers every image point with index beyond
  /// the bound is matched by a generic member.
  FPSet image() const {
    const auto pts = source.points(index_bound() + 2);
    return tabulate(target.carrier(), index_bound(), [&](const Point& y) {
      return std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return rule(p) == y; });
    });
  }
};

/// Every open of the target (its full open family when finite, the bounded
/// family otherwise) has an open preimage, and points land in the target.
inline bool is_continuous(const ContinuousMap& f) {
  for (const auto& p : f.source.points(f.index_bound() + 2))
    if (!f.target.support().contains(f(p))) return false;
  for (const auto& u : f.target.open_sets())
    if (!f.source.is_open(f.preimage(u))) return false;
  return true;
}

inline ContinuousMap make_map(Space source, Space target, std::function<Point(const Point&)> rule, std::string name = "f") {
  ContinuousMap f{std::move(source), std::move(target), std::move(rule), std::move(name)};
  if (!is_continuous(f)) throw std::invalid_argument("map " + f.name + " is not continuous");
  return f;
}

inline ContinuousMap identity_map(const Space& x) {
  return ContinuousMap{x, x, [](const Point& p) { return p; }, "id"};
}

/// f ∘ g = 1_Y for f: X → Y and g: Y → X.
inline bool is_retraction(const ContinuousMap& f, const ContinuousMap& g) {
  if (!(f.source.carrier() == g.target.carrier()) || !(f.target.carrier() == g.source.carrier()))
    throw std::invalid_argument("maps do not compose");
  for (const auto& y : g.source.points(std::max(f.index_bound(), g.index_bound()) + 2))
    if (f(g(y)) != y) return false;
  return true;
}

enum class OperatorKind { closure, kernel, identity, projection, none };

inline std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::closure: return "closure";
    case OperatorKind::kernel: return "kernel";
    case OperatorKind::identity: return "closure+kernel";
    case OperatorKind::projection: return "projection";
    case OperatorKind::none: return "none";
  }
  return "?";
}

struct OperatorReport {
  bool monotone = true;
  bool idempotent = true;
  bool above_identity = true;
  bool below_identity = true;
  OperatorKind kind = OperatorKind::none;
};

/// Monotone and idempotent with respect to specialization, compared with the identity.
inline OperatorReport operator_kind(const ContinuousMap& p) {
  if (!(p.source.carrier() == p.target.carrier())) throw std::invalid_argument("operator_kind needs an endomap");
  const Space& x = p.source;
  OperatorReport r;
  const auto pts = x.points(p.index_bound() + 2);
  for (const auto& a : pts) {
    const Point pa = p(a);
    if (p(pa) != pa) r.idempotent = false;
    if (!x.specialization_leq(a, pa)) r.above_identity = false;
    if (!x.specialization_leq(pa, a)) r.below_identity = false;
    for (const auto& b : pts)
      if (x.specialization_leq(a, b) && !x.specialization_leq(pa, p(b))) r.monotone = false;
  }
  if (!r.monotone || !r.idempotent) r.kind = OperatorKind::none;
  else if (r.above_identity && r.below_identity) r.kind = OperatorKind::identity;
  else if (r.above_identity) r.kind = OperatorKind::closure;
  else if (r.below_identity) r.kind = OperatorKind::kernel;
  else r.kind = OperatorKind::projection;
  return r;
}

/// (p(X), O(X)|p(X))
inline Space image_subspace(const ContinuousMap& p, std::string name = {}) {
  return p.target.restricted_to(p.image() & p.target.support(), name.empty() ? p.name + "(" + p.source.name() + ")" : std::move(name));
}

/// K(X) with the upper Vietoris topology.  `elements[k]` is the compact
/// saturated subset of X behind point k of the space (for ω carriers,
/// `element` computes it from a point of the presentation).
struct SmythSpace {
  Space space;
  Space base;
  std::function<FPSet(const Point&)> element;

  /// ◊A = {Q : Q ∩ A ≠ ∅}
  FPSet diamond(const FPSet& a) const {
    return tabulate(space.carrier(), std::max(space.index_bound(), a.max_index()) + 1,
                    [&](const Point& q) { return !(element(q) & a).empty(); });
  }
  /// □U = {Q : Q ⊆ U}
  FPSet box(const FPSet& u) const {
    return tabulate(space.carrier(), std::max(space.index_bound(), u.max_index()) + 1,
                    [&](const Point& q) { return subset_of(element(q), u); });
  }
  /// j(x) = ↑x
  Point embed(const Point& x) const {
    const FPSet target = base.saturation(base.singleton(x));
    for (const auto& q : space.points(x.family_index() + 1))
      if (element(q) == target) return q;
    throw std::logic_error("principal filter missing from K(X)");
  }
  /// j(A) = {↑x : x ∈ A}; tabulated so that infinite A map to infinite sets.
  FPSet embed(const FPSet& a) const {
    return tabulate(space.carrier(), std::max(space.index_bound(), a.max_index()) + 1, [&](const Point& q) {
      const FPSet k = element(q);
      const auto xs = base.members(k & a);
      return std::any_of(xs.begin(), xs.end(), [&](const Point& x) { return base.saturation(base.singleton(x)) == k; });
    });
  }
};

namespace detail {

inline SmythSpace finite_smyth(const Space& x) {
  const auto pts = positions(x.support().finite);
  if (pts.size() > 10) throw std::length_error("finite Smyth space refused above 10 points");
  const std::size_t n = x.carrier().finite_size();
  std::vector<Subset> elements;
  for (unsigned mask = 1; mask < (1u << pts.size()); ++mask) {
    FPSet s = x.empty_set();
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask & (1u << i)) s.finite.set(pts[i]);
    if (x.saturation(s) == s) elements.push_back(s.finite);
  }
  std::sort(elements.begin(), elements.end(), [](const Subset& a, const Subset& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  const std::size_t m = elements.size();
  std::vector<std::string> names;
  std::vector<Subset> up(m, Subset(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::string> parts;
    for (auto p : positions(elements[i])) parts.push_back(x.carrier().finite_part().name(p));
    names.push_back(brace(parts));
    for (std::size_t j = 0; j < m; ++j)
      if (elements[j].is_subset_of(elements[i])) up[i].set(j);
  }
  std::vector<Subset> subbasis;
  for (const auto& u : x.open_sets()) {
    Subset box(m);
    for (std::size_t k = 0; k < m; ++k)
      if (elements[k].is_subset_of(u.finite)) box.set(k);
    subbasis.push_back(box);
  }
  OmegaPoset carrier(FinitePoset::from_up_sets(std::move(names), std::move(up)));
  auto space = Space::explicit_finite(std::move(carrier), subbasis, "Ps(" + x.name() + ")");
  auto el = std::make_shared<std::vector<Subset>>(std::move(elements));
  return SmythSpace{std::move(space), x, [el, n, fc = x.carrier().family_count()](const Point& q) {
                      FPSet s{(*el)[q.index], std::vector<IndexSet>(fc, IndexSet::none())};
                      s.finite.resize(n);
                      return s;
                    }};
}

// Alexandroff over an ω-poset whose families are chains and where every
// finite point lies above all or below all of each chain.  Then the compact
// saturated sets are ↑A for finite antichains A, an antichain meeting a
// chain is a singleton {c_n}, and K(X) is again finitely presented: finite
// part = antichains of finite points, one chain family ↑c_n per family.
inline SmythSpace omega_smyth(const Space& x) {
  const OmegaPoset& c = x.carrier();
  if (x.kind() != TopologyKind::alexandroff || !x.extra_opens().empty() || !(x.support() == c.full_set()))
    throw UnsupportedTopology("Smyth spaces on ω carriers need a plain Alexandroff space");
  for (std::size_t f = 0; f < c.family_count(); ++f) {
    if (c.family(f).kind != FamilyKind::chain) throw UnsupportedTopology("Smyth space over an antichain family");
    for (std::size_t i = 0; i < c.finite_size(); ++i)
      if (!c.below_all(i, f) && c.above_prefix(i, f) != OmegaPoset::kAll)
        throw UnsupportedTopology("finite point " + c.finite_part().name(i) + " is not comparable with all of " +
                                  c.family(f).name);
    for (std::size_t g = 0; g < c.family_count(); ++g)
      if (g != f)
        for (std::size_t i = 0; i < c.finite_size(); ++i)
          if (c.above_prefix(i, f) == OmegaPoset::kAll && c.below_all(i, g))
            throw UnsupportedTopology("chain families linked through a finite point");
  }
  const FinitePoset& fp = c.finite_part();
  std::vector<Subset> antichains;
  for_each_subset(fp.size(), [&](const Subset& s) {
    if (s.any() && maximal_points(fp, s) == s && minimal_points(fp, s) == s) antichains.push_back(s);
  });
  std::sort(antichains.begin(), antichains.end(), [](const Subset& a, const Subset& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  const std::size_t m = antichains.size();
  std::vector<std::string> names;
  std::vector<Subset> up(m, Subset(m));
  auto up_of = [&](const Subset& a) { return up_closure(fp, a); };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::string> parts;
    for (auto p : positions(antichains[i])) parts.push_back(fp.name(p));
    names.push_back(parts.size() == 1 ? "^" + parts[0] : "^" + brace(parts));
    for (std::size_t j = 0; j < m; ++j)
      if (antichains[j].is_subset_of(up_of(antichains[i]))) up[i].set(j);
  }
  std::vector<Family> fams;
  std::map<std::pair<std::size_t, std::size_t>, CrossRelation> cross;
  for (std::size_t f = 0; f < c.family_count(); ++f) {
    fams.push_back({"^" + c.family(f).name, FamilyKind::chain});
    for (std::size_t i = 0; i < m; ++i) {
      const auto pts = positions(antichains[i]);
      // ↑A ≤ ↑c_n iff c_n ∈ ↑A; ↑c_n ≤ ↑A iff A ⊆ ↑c_n.
      const bool below = std::any_of(pts.begin(), pts.end(), [&](std::size_t a) { return c.below_all(a, f); });
      const bool above = std::all_of(pts.begin(), pts.end(), [&](std::size_t a) { return c.above_prefix(a, f) == OmegaPoset::kAll; });
      if (below) cross[{i, f}] = {CrossKind::below_all, 0};
      else if (above) cross[{i, f}] = {CrossKind::above_all, 0};
    }
  }
  OmegaPoset carrier(FinitePoset::from_up_sets(std::move(names), std::move(up)), std::move(fams), cross);
  auto space = Space::alexandroff(carrier, "Ps(" + x.name() + ")");
  auto el = std::make_shared<std::vector<Subset>>(std::move(antichains));
  return SmythSpace{std::move(space), x, [el, c](const Point& q) {
                      if (q.is_finite()) {
                        FPSet s = c.empty_set();
                        s.finite = (*el)[q.index];
                        return fp_up_closure(c, s);
                      }
                      return fp_up_closure(c, c.singleton(Point::member(q.family, q.index)));
                    }};
}

}  // namespace detail

/// P^s(X).  Finite X: all nonempty saturated sets are compact.  Alexandroff
/// over a supported ω-poset: every ↑A is open, so each □↑A = ↑_{K(X)} ↑A is
/// open and the result is Alexandroff over reverse inclusion.
inline SmythSpace smyth_power_space(const Space& x) {
  return x.is_finite() ? detail::finite_smyth(x) : detail::omega_smyth(x);
}

/// K ⊆ ∪Ui implies K ⊆ Uk; in these spaces exactly the principal filters ↑x.
inline bool is_supercompact(const FPSet& k, const Space& x) {
  if (k.empty()) return false;
  const auto cands = x.members(k);
  return std::any_of(cands.begin(), cands.end(), [&](const Point& p) { return x.saturation(x.singleton(p)) == x.saturation(k); }) &&
         x.is_saturated(k);
}

/// Continuous maps X → Y with the topology of pointwise convergence,
/// generated by S(x, U) = {f : f(x) ∈ U}.  `maps[k]` lists the image of each
/// support point of X, in support order.
struct FunctionSpace {
  Space space;
  std::vector<std::vector<std::size_t>> maps;
};

inline FunctionSpace function_space(const Space& x, const Space& y, std::size_t max_maps = 4096) {
  if (!x.is_finite() || !y.is_finite()) throw InfiniteFunctionSpace("function spaces need finite spaces");
  const auto xs = detail::positions(x.support().finite), ys = detail::positions(y.support().finite);
  const auto x_opens = x.open_sets();
  const auto y_opens = y.open_sets();
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> choice(xs.size(), 0);
  const double total = std::pow(static_cast<double>(ys.size()), static_cast<double>(xs.size()));
  if (total > 65536.0) throw std::length_error("too many candidate maps");
  for (bool more = !ys.empty() || xs.empty(); more;) {
    std::vector<std::size_t> image(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) image[i] = ys[choice[i]];
    bool continuous = true;
    for (const auto& v : y_opens) {
      FPSet pre = x.empty_set();
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (v.finite[image[i]]) pre.finite.set(xs[i]);
      if (!x.is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) maps.push_back(image);
    if (maps.size() > max_maps) throw std::length_error("function space larger than the requested maximum");
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == ys.size()) choice[k++] = 0;
    more = k < choice.size();
  }
  std::vector<std::string> names;
  for (const auto& f : maps) {
    std::vector<std::string> parts;
    for (auto v : f) parts.push_back(y.carrier().finite_part().name(v));
    names.push_back("[" + [&] {
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
      return s;
    }() + "]");
  }
  std::vector<Subset> subbasis;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& v : y_opens) {
      Subset s(maps.size());
      for (std::size_t k = 0; k < maps.size(); ++k)
        if (v.finite[maps[k][i]]) s.set(k);
      subbasis.push_back(s);
    }
  auto space = Space::explicit_finite(OmegaPoset(FinitePoset::antichain(std::move(names))), subbasis,
                                      "[" + x.name() + "->" + y.name() + "]");
  return {std::move(space), std::move(maps)};
}

}  // namespace sobriety
