#pragma once

// Topologies over finite and finitely presented posets.
//
// A Space couples a carrier with a topology kind, optional extra open sets
// and a support (the carrier of a subspace).  Every question about the
// topology is answered through `closure`, which is exact for each kind:
//
//   alexandroff  cl S = ↓S
//   weak_scott   least down-set containing S that contains φ^δ whenever it
//                contains a chain family φ (chain families represent all
//                directed sets without a maximum)
//   upper        y ∉ cl S  iff  S ⊆ ↓F for a finite F missing ↑y
//   lower        dual of upper (finite carriers only)
//   explicit     y ∈ cl S  iff  every basic open around y meets S
//
// With extra opens E1..Em the basic neighbourhoods of y are V ∩ E_J where
// J ⊆ {j : y ∈ Ej}; the smallest J-intersection decides membership.  For a
// subspace T, cl_T S = cl S ∩ T.

#include "sobriety/omega.hpp"

#include <cmath>
#include <memory>

namespace sobriety {

enum class TopologyKind { alexandroff, upper, lower, weak_scott, explicit_finite };

inline std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::alexandroff: return "alexandroff";
    case TopologyKind::upper: return "upper";
    case TopologyKind::lower: return "lower";
    case TopologyKind::weak_scott: return "weakscott";
    case TopologyKind::explicit_finite: return "explicit";
  }
  return "?";
}

class UnsupportedTopology : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonempty compactly described family of closed sets.  `exhaustive` is
/// false when members are representatives up to shifting generic indices.
template <class Set>
struct BasicClosedFamily {
  std::vector<Set> members;
  bool exhaustive = true;
  std::size_t index_bound = 0;
};
using ClosedFamily = BasicClosedFamily<FPSet>;

/// All FPSets inside `support` whose listed indices are at most `bound`.
inline std::vector<FPSet> bounded_universe(const OmegaPoset& p, const FPSet& support, std::size_t bound) {
  std::vector<std::size_t> finite_members;
  for (auto i = support.finite.find_first(); i != Subset::npos; i = support.finite.find_next(i))
    finite_members.push_back(i);
  constexpr double kLimit = 65536.0;
  auto too_large = [] { return std::length_error("bounded universe too large for enumeration"); };
  double total = std::pow(2.0, static_cast<double>(finite_members.size()));
  if (total > kLimit) throw too_large();
  std::vector<std::vector<IndexSet>> choices(p.family_count());
  for (std::size_t f = 0; f < p.family_count(); ++f) {
    std::set<IndexSet> seen;
    for (unsigned long long mask = 0; mask < (1ULL << bound); ++mask) {
      std::set<std::size_t> idx;
      for (std::size_t i = 0; i < bound; ++i)
        if (mask & (1ULL << i)) idx.insert(i + 1);
      for (const auto& s : {IndexSet::finite(idx), IndexSet::cofinite(idx)}) {
        auto r = s.intersect(support.families[f]);
        if (seen.insert(r).second) choices[f].push_back(r);
      }
      if (total * static_cast<double>(choices[f].size()) > kLimit) throw too_large();
    }
    total *= static_cast<double>(choices[f].size());
  }

  std::vector<FPSet> out;
  const std::size_t fcount = finite_members.size();
  for (unsigned long long mask = 0; mask < (1ULL << fcount); ++mask) {
    FPSet base = p.empty_set();
    for (std::size_t i = 0; i < fcount; ++i)
      if (mask & (1ULL << i)) base.finite.set(finite_members[i]);
    std::vector<FPSet> partial{base};
    for (std::size_t f = 0; f < p.family_count(); ++f) {
      std::vector<FPSet> next;
      for (const auto& s : partial)
        for (const auto& c : choices[f]) {
          FPSet t = s;
          t.families[f] = c;
          next.push_back(std::move(t));
        }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

class Space {
 public:
  using set_type = FPSet;
  using point_type = Point;

  Space() = default;

  static Space alexandroff(OmegaPoset p, std::string name = "X") {
    return make(std::move(p), TopologyKind::alexandroff, std::move(name));
  }
  static Space upper(OmegaPoset p, std::string name = "X") {
    return make(std::move(p), TopologyKind::upper, std::move(name));
  }
  static Space lower(OmegaPoset p, std::string name = "X") {
    if (p.has_families()) throw UnsupportedTopology("lower topology is supported on finite carriers only");
    return make(std::move(p), TopologyKind::lower, std::move(name));
  }
  static Space weak_scott(OmegaPoset p, std::string name = "X") {
    return make(std::move(p), TopologyKind::weak_scott, std::move(name));
  }

  /// Topology generated by `subbasis` on a finite carrier.  The carrier's
  /// order is only used for naming; the specialization order comes from the
  /// topology.
  static Space explicit_finite(OmegaPoset p, const std::vector<Subset>& subbasis, std::string name = "X") {
    if (p.has_families()) throw UnsupportedTopology("explicit topologies need a finite carrier");
    Space s;
    s.carrier_ = std::move(p);
    s.kind_ = TopologyKind::explicit_finite;
    s.name_ = std::move(name);
    s.support_ = s.carrier_.full_set();
    s.basis_ = std::make_shared<std::vector<Subset>>(intersection_closure(s.carrier_.finite_part().full_set(), subbasis));
    s.finalize();
    return s;
  }

  /// Checks that `opens` already is a topology (contains ∅ and the carrier,
  /// closed under binary union and intersection).
  static Space from_open_family(OmegaPoset p, const std::vector<Subset>& opens, std::string name = "X") {
    const std::size_t n = p.finite_size();
    std::set<Subset> family(opens.begin(), opens.end());
    if (!family.count(Subset(n)) || !family.count(Subset(n).set()))
      throw std::invalid_argument("open family must contain the empty set and the carrier");
    for (const auto& a : family)
      for (const auto& b : family)
        if (!family.count(a & b) || !family.count(a | b))
          throw std::invalid_argument("open family is not closed under union and intersection");
    return explicit_finite(std::move(p), opens, std::move(name));
  }

  /// Adds finitely many open sets; each must be an upper set of the carrier
  /// order (explicit topologies accept any subset).
  Space with_extra_opens(const std::vector<FPSet>& extras) const {
    Space s = *this;
    for (const auto& e : extras) {
      if (kind_ == TopologyKind::explicit_finite) {
        s.basis_ = std::make_shared<std::vector<Subset>>(*s.basis_);
        s.basis_->push_back(e.finite);
        *s.basis_ = intersection_closure(carrier_.finite_part().full_set(), *s.basis_);
        continue;
      }
      if (!fp_is_upper_set(carrier_, e)) throw std::invalid_argument("extra open is not an upper set: " + carrier_.format(e));
      s.extras_.push_back(e);
    }
    s.finalize();
    return s;
  }

  /// Subspace on `t`, which must lie inside the current support.
  Space restricted_to(const FPSet& t, std::string name = {}) const {
    if (!subset_of(t, support_)) throw std::invalid_argument("subspace set is not inside the space");
    Space s = *this;
    s.support_ = t;
    s.name_ = name.empty() ? name_ + "|" + carrier_.format(t) : std::move(name);
    s.finalize();
    return s;
  }

  Space renamed(std::string name) const {
    Space s = *this;
    s.name_ = std::move(name);
    return s;
  }

  const std::string& name() const { return name_; }
  const OmegaPoset& carrier() const { return carrier_; }
  TopologyKind kind() const { return kind_; }
  const FPSet& support() const { return support_; }
  const std::vector<FPSet>& extra_opens() const { return extras_; }
  bool is_finite() const { return !carrier_.has_families(); }
  const std::vector<Subset>& basis() const { return *basis_; }

  /// Largest index any defining datum mentions; larger indices are generic.
  std::size_t index_bound() const {
    std::size_t b = carrier_.prefix_bound();
    b = std::max(b, support_.max_index());
    for (const auto& e : extras_) b = std::max(b, e.max_index());
    return b;
  }

  FPSet empty_set() const { return carrier_.empty_set(); }
  FPSet singleton(const Point& p) const { return carrier_.singleton(p); }
  std::string describe(const FPSet& s) const { return carrier_.format(s); }
  std::string describe(const Point& p) const { return carrier_.name(p); }

  FPSet closure(const FPSet& input) const {
    const FPSet s = input & support_;
    if (extras_.empty()) return base_closure(s) & support_;
    FPSet result = carrier_.empty_set();
    const std::size_t m = extras_.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      FPSet inside = carrier_.full_set(), region = carrier_.full_set();
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (1u << j)) {
          inside = inside & extras_[j];
          region = region & extras_[j];
        } else {
          region = region & complement(extras_[j]);
        }
      }
      if (region.empty()) continue;
      result = result | (region & base_closure(s & inside));
    }
    return result & support_;
  }

  bool is_closed(const FPSet& c) const { return subset_of(c, support_) && closure(c) == c; }
  bool is_open(const FPSet& u) const { return subset_of(u, support_) && is_closed(difference(support_, u)); }
  FPSet interior(const FPSet& s) const { return difference(support_, closure(difference(support_, s))); }

  FPSet point_closure(const Point& y) const { return closure(carrier_.singleton(y)); }

  /// x ≤ y iff x ∈ cl{y}.
  bool specialization_leq(const Point& x, const Point& y) const {
    if (is_finite()) return spec_->down[y.index][x.index];
    return carrier_.leq(x, y);
  }

  bool is_t0() const {
    if (!is_finite()) return true;
    for (auto i = support_.finite.find_first(); i != Subset::npos; i = support_.finite.find_next(i))
      for (auto j = support_.finite.find_next(i); j != Subset::npos; j = support_.finite.find_next(j))
        if (spec_->down[i][j] && spec_->down[j][i]) return false;
    return true;
  }

  /// ↑S in the specialization order.
  FPSet saturation(const FPSet& input) const {
    const FPSet s = input & support_;
    if (!is_finite()) return fp_up_closure(carrier_, s) & support_;
    FPSet r = carrier_.empty_set();
    for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) r.finite |= spec_->up[i];
    return r & support_;
  }
  bool is_saturated(const FPSet& s) const { return saturation(s) == (s & support_) && subset_of(s, support_); }

  FPSet down_set(const FPSet& input) const {
    const FPSet s = input & support_;
    if (!is_finite()) return fp_down_closure(carrier_, s) & support_;
    FPSet r = carrier_.empty_set();
    for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) r.finite |= spec_->down[i];
    return r & support_;
  }

  /// Upper bounds inside the support, in the specialization order.
  FPSet upper_bounds(const FPSet& input) const {
    const FPSet s = input & support_;
    if (!is_finite()) return fp_upper_bounds(carrier_, s) & support_;
    FPSet r = support_;
    for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) r.finite &= spec_->up[i];
    return r;
  }

  FPSet lower_bounds(const FPSet& input) const {
    const FPSet s = input & support_;
    if (!is_finite()) return fp_lower_bounds(carrier_, s) & support_;
    FPSet r = support_;
    for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) r.finite &= spec_->down[i];
    return r;
  }

  /// Cut closure relative to the support: (S^↑_T)^↓_T.
  FPSet cut_closure(const FPSet& s) const { return lower_bounds(upper_bounds(s)); }

  std::optional<Point> least_upper_bound(const FPSet& s) const {
    const FPSet ub = upper_bounds(s);
    if (!is_finite()) return fp_least(carrier_, ub);
    for (auto i = ub.finite.find_first(); i != Subset::npos; i = ub.finite.find_next(i))
      if (ub.finite.is_subset_of(spec_->up[i])) return Point::finite(i);
    return std::nullopt;
  }

  /// Support points with index at most max(bound, index_bound()) + 1.
  std::vector<Point> points(std::size_t bound = 0) const {
    std::vector<Point> pts;
    for (const auto& p : carrier_.sample_points(std::max(bound, index_bound()) + 1))
      if (support_.contains(p)) pts.push_back(p);
    return pts;
  }

  /// Members of S with listed indices, plus a generic member per infinite component.
  std::vector<Point> members(const FPSet& s) const {
    return sample_members(carrier_, s & support_, sobriety::index_bound(carrier_, {&s}, index_bound()));
  }

  std::vector<FPSet> directed_representatives(std::size_t bound = 0) const {
    if (is_finite()) {
      std::vector<FPSet> reps;
      for (const auto& p : points()) reps.push_back(singleton(p));
      return reps;
    }
    return sobriety::directed_representatives(carrier_, support_, std::max(bound, index_bound()));
  }

  /// Closed sets: every one for finite carriers (up to 16 points), otherwise
  /// closures of the bounded universe two indices past index_bound().
  ClosedFamily closed_sets() const {
    ClosedFamily fam;
    std::set<FPSet> seen;
    if (is_finite()) {
      std::vector<std::size_t> members;
      for (auto i = support_.finite.find_first(); i != Subset::npos; i = support_.finite.find_next(i)) members.push_back(i);
      if (members.size() > 16) throw std::length_error("closed-set enumeration refused above 16 points");
      for (unsigned long long mask = 0; mask < (1ULL << members.size()); ++mask) {
        FPSet s = carrier_.empty_set();
        for (std::size_t i = 0; i < members.size(); ++i)
          if (mask & (1ULL << i)) s.finite.set(members[i]);
        if (closure(s) == s) seen.insert(s);
      }
      fam.members.assign(seen.begin(), seen.end());
      return fam;
    }
    fam.exhaustive = false;
    fam.index_bound = index_bound() + 2;
    for (const auto& s : bounded_universe(carrier_, support_, fam.index_bound)) seen.insert(closure(s));
    fam.members.assign(seen.begin(), seen.end());
    return fam;
  }

  std::vector<FPSet> open_sets() const {
    std::vector<FPSet> opens;
    for (const auto& c : closed_sets().members) opens.push_back(difference(support_, c));
    return opens;
  }

 private:
  struct Specialization {
    std::vector<Subset> down;  // down[y] = cl{y}
    std::vector<Subset> up;
  };

  static Space make(OmegaPoset p, TopologyKind kind, std::string name) {
    Space s;
    s.carrier_ = std::move(p);
    s.kind_ = kind;
    s.name_ = std::move(name);
    s.support_ = s.carrier_.full_set();
    s.finalize();
    return s;
  }

  static std::vector<Subset> intersection_closure(const Subset& full, const std::vector<Subset>& gens) {
    std::vector<Subset> out{full};
    std::set<Subset> seen{full};
    for (const auto& g : gens)
      if (seen.insert(g).second) out.push_back(g);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Subset m = out[i] & out[j];
        if (seen.insert(m).second) out.push_back(m);
      }
    return out;
  }

  void finalize() {
    if (is_finite()) {
      const std::size_t n = carrier_.finite_size();
      auto spec = std::make_shared<Specialization>();
      spec->down.assign(n, Subset(n));
      spec->up.assign(n, Subset(n));
      for (auto y = support_.finite.find_first(); y != Subset::npos; y = support_.finite.find_next(y))
        spec->down[y] = point_closure(Point::finite(y)).finite;
      for (std::size_t y = 0; y < n; ++y)
        for (auto x = spec->down[y].find_first(); x != Subset::npos; x = spec->down[y].find_next(x)) spec->up[x].set(y);
      spec_ = std::move(spec);
      return;
    }
    // On ω carriers the supported kinds have the carrier order as
    // specialization order; confirm it on the sample points.
    const auto pts = points();
    for (const auto& y : pts) {
      const FPSet cl = point_closure(y);
      for (const auto& x : pts)
        if (cl.contains(x) != carrier_.leq(x, y))
          throw UnsupportedTopology("specialization order differs from the carrier order in " + name_);
    }
  }

  FPSet base_closure(const FPSet& s) const {
    switch (kind_) {
      case TopologyKind::alexandroff: return fp_down_closure(carrier_, s);
      case TopologyKind::weak_scott: return weak_scott_closure(s);
      case TopologyKind::upper: return upper_closure(s);
      case TopologyKind::lower: return lower_closure(s);
      case TopologyKind::explicit_finite: return explicit_closure(s);
    }
    return s;
  }

  FPSet weak_scott_closure(const FPSet& s) const {
    FPSet c = fp_down_closure(carrier_, s);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t f = 0; f < carrier_.family_count(); ++f) {
        if (carrier_.family(f).kind != FamilyKind::chain || !c.families[f].is_all()) continue;
        FPSet grown = fp_down_closure(carrier_, c | fp_cut_closure(carrier_, carrier_.family_set(f)));
        if (grown != c) {
          c = grown;
          changed = true;
        }
      }
    }
    return c;
  }

  // y ∉ cl S iff finitely many points outside ↑y cover S from above.  A
  // point outside family φ covers infinitely many members of φ only if it
  // lies above all of them, which a member with a generic index decides.
  FPSet upper_closure(const FPSet& s) const {
    const std::size_t bound = sobriety::index_bound(carrier_, {&s});
    return tabulate(carrier_, bound, [&](const Point& y) {
      const FPSet outside = complement(fp_up_closure(carrier_, carrier_.singleton(y)));
      const std::size_t floor = std::max(bound, y.family_index()) + 1;
      const bool members_covered = all_members(carrier_, s, floor, [&](const Point& x) {
        return any_member(carrier_, outside, floor, [&](const Point& w) { return carrier_.leq(x, w); });
      });
      if (!members_covered) return true;
      for (std::size_t f = 0; f < carrier_.family_count(); ++f) {
        if (!s.families[f].is_cofinite()) continue;
        const std::size_t generic = floor + 2;
        const bool tail_covered = any_member(carrier_, outside, generic, [&](const Point& w) {
          return w.family != f && carrier_.leq(Point::member(f, generic), w);
        });
        if (!tail_covered) return true;
      }
      return false;
    });
  }

  FPSet lower_closure(const FPSet& s) const {
    const FinitePoset& p = carrier_.finite_part();
    FPSet r = carrier_.empty_set();
    for (std::size_t y = 0; y < p.size(); ++y) {
      Subset outside = ~p.down(y);
      if (!s.finite.is_subset_of(up_closure(p, outside))) r.finite.set(y);
    }
    return r;
  }

  FPSet explicit_closure(const FPSet& s) const {
    FPSet r = carrier_.empty_set();
    for (std::size_t y = 0; y < carrier_.finite_size(); ++y) {
      bool inside = true;
      for (const auto& b : *basis_)
        if (b[y] && !(b & s.finite).any()) {
          inside = false;
          break;
        }
      if (inside) r.finite.set(y);
    }
    return r;
  }

  OmegaPoset carrier_;
  TopologyKind kind_ = TopologyKind::alexandroff;
  std::string name_;
  FPSet support_;
  std::vector<FPSet> extras_;
  std::shared_ptr<std::vector<Subset>> basis_ = std::make_shared<std::vector<Subset>>();
  std::shared_ptr<const Specialization> spec_;
};

/// σ₂(P): upper sets U with D ∩ U = ∅ ⇒ D^δ ∩ U = ∅ for every directed D.
inline Space weak_scott(OmegaPoset p, std::string name = "X") { return Space::weak_scott(std::move(p), std::move(name)); }

inline bool specialization_leq(const Space& x, const Point& a, const Point& b) { return x.specialization_leq(a, b); }
inline FPSet closure(const Space& x, const FPSet& s) { return x.closure(s); }
inline ClosedFamily closed_sets(const Space& x) { return x.closed_sets(); }

}  // namespace sobriety
