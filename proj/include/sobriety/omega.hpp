#pragma once

// Finitely presented infinite posets.
//
// An OmegaPoset is a finite poset F together with ω-indexed families, each
// either a chain c1 < c2 < ... or an antichain.  Each (finite point, family)
// pair carries one declared relation: above all members, below all members,
// above the first k members, or incomparable.  Families are never related to
// each other directly.
//
// Subsets are FPSets: a subset of F plus, per family, a finite or cofinite
// index set.  Set-valued operations are evaluated pointwise on the finite
// part, on explicit indices up to a bound B, and on a generic index beyond B;
// past the largest index mentioned by the presentation and the arguments,
// every relation is independent of the index, so the generic value decides
// the whole tail.  `tabulate` double-checks this on two generic indices.

#include "sobriety/poset.hpp"

#include <compare>
#include <limits>
#include <sstream>

namespace sobriety {

enum class FamilyKind { chain, antichain };

struct Family {
  std::string name;
  FamilyKind kind = FamilyKind::chain;
};

enum class CrossKind { incomparable, above_all, below_all, above_prefix };

struct CrossRelation {
  CrossKind kind = CrossKind::incomparable;
  std::size_t prefix = 0;  // only for above_prefix
};

struct Point {
  static constexpr std::size_t kFinite = std::numeric_limits<std::size_t>::max();

  std::size_t family = kFinite;
  std::size_t index = 0;  // finite-part position, or 1-based family index

  static Point finite(std::size_t i) { return {kFinite, i}; }
  static Point member(std::size_t fam, std::size_t idx) { return {fam, idx}; }
  bool is_finite() const { return family == kFinite; }
  /// Family index, or 0 for finite-part points.
  std::size_t family_index() const { return is_finite() ? 0 : index; }

  auto operator<=>(const Point&) const = default;
};

/// Finite or cofinite set of positive indices.
class IndexSet {
 public:
  static IndexSet none() { return {}; }
  static IndexSet all() { return IndexSet(true, {}); }
  static IndexSet finite(std::set<std::size_t> members) { return IndexSet(false, std::move(members)); }
  static IndexSet cofinite(std::set<std::size_t> excluded) { return IndexSet(true, std::move(excluded)); }

  bool contains(std::size_t i) const { return i >= 1 && (cofinite_ != (listed_.count(i) > 0)); }
  bool is_cofinite() const { return cofinite_; }
  bool is_finite() const { return !cofinite_; }
  bool empty() const { return !cofinite_ && listed_.empty(); }
  bool is_all() const { return cofinite_ && listed_.empty(); }
  const std::set<std::size_t>& listed() const { return listed_; }
  std::size_t max_listed() const { return listed_.empty() ? 0 : *listed_.rbegin(); }

  IndexSet complement() const { return IndexSet(!cofinite_, listed_); }

  IndexSet unite(const IndexSet& o) const {
    if (!cofinite_ && !o.cofinite_) return finite(set_union(listed_, o.listed_));
    if (cofinite_ && o.cofinite_) return cofinite(set_intersection(listed_, o.listed_));
    const IndexSet& c = cofinite_ ? *this : o;
    const IndexSet& f = cofinite_ ? o : *this;
    return cofinite(set_difference(c.listed_, f.listed_));
  }

  IndexSet intersect(const IndexSet& o) const {
    if (!cofinite_ && !o.cofinite_) return finite(set_intersection(listed_, o.listed_));
    if (cofinite_ && o.cofinite_) return cofinite(set_union(listed_, o.listed_));
    const IndexSet& c = cofinite_ ? *this : o;
    const IndexSet& f = cofinite_ ? o : *this;
    return finite(set_difference(f.listed_, c.listed_));
  }

  bool subset_of(const IndexSet& o) const { return intersect(o.complement()).empty(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.cofinite_ <=> b.cofinite_; c != 0) return c;
    return a.listed_ <=> b.listed_;
  }

 private:
  IndexSet() = default;
  IndexSet(bool cofinite, std::set<std::size_t> listed) : cofinite_(cofinite), listed_(std::move(listed)) {
    listed_.erase(0);
  }

  static std::set<std::size_t> set_union(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    std::set<std::size_t> r = a;
    r.insert(b.begin(), b.end());
    return r;
  }
  static std::set<std::size_t> set_intersection(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    std::set<std::size_t> r;
    for (auto x : a)
      if (b.count(x)) r.insert(x);
    return r;
  }
  static std::set<std::size_t> set_difference(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    std::set<std::size_t> r;
    for (auto x : a)
      if (!b.count(x)) r.insert(x);
    return r;
  }

  bool cofinite_ = false;
  std::set<std::size_t> listed_;
};

/// Finitely presented subset of an OmegaPoset.
struct FPSet {
  Subset finite;
  std::vector<IndexSet> families;

  bool contains(const Point& p) const {
    return p.is_finite() ? finite[p.index] : families[p.family].contains(p.index);
  }
  bool empty() const {
    if (finite.any()) return false;
    return std::all_of(families.begin(), families.end(), [](const IndexSet& s) { return s.empty(); });
  }
  bool is_finite() const {
    return std::all_of(families.begin(), families.end(), [](const IndexSet& s) { return s.is_finite(); });
  }
  std::size_t max_index() const {
    std::size_t m = 0;
    for (const auto& s : families) m = std::max(m, s.max_listed());
    return m;
  }

  friend bool operator==(const FPSet&, const FPSet&) = default;
  friend bool operator<(const FPSet& a, const FPSet& b) {
    if (a.finite != b.finite) return a.finite < b.finite;
    return a.families < b.families;
  }
};

inline FPSet operator|(const FPSet& a, const FPSet& b) {
  FPSet r{a.finite | b.finite, {}};
  for (std::size_t i = 0; i < a.families.size(); ++i) r.families.push_back(a.families[i].unite(b.families[i]));
  return r;
}

inline FPSet operator&(const FPSet& a, const FPSet& b) {
  FPSet r{a.finite & b.finite, {}};
  for (std::size_t i = 0; i < a.families.size(); ++i) r.families.push_back(a.families[i].intersect(b.families[i]));
  return r;
}

inline FPSet complement(const FPSet& a) {
  FPSet r{~a.finite, {}};
  for (const auto& s : a.families) r.families.push_back(s.complement());
  return r;
}

inline FPSet difference(const FPSet& a, const FPSet& b) { return a & complement(b); }

inline bool subset_of(const FPSet& a, const FPSet& b) { return difference(a, b).empty(); }

class OmegaPoset {
 public:
  /// Sentinel for `above_prefix`: above every member.
  static constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

  OmegaPoset() = default;

  explicit OmegaPoset(FinitePoset finite_part) : finite_(std::move(finite_part)) {}

  /// `cross` maps (finite position, family position) to the declared relation.
  OmegaPoset(FinitePoset base, std::vector<Family> families,
             const std::map<std::pair<std::size_t, std::size_t>, CrossRelation>& cross)
      : families_(std::move(families)) {
    const std::size_t n = base.size(), m = families_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (base.find(families_[i].name)) throw std::invalid_argument("family name clashes with a point: " + families_[i].name);
      for (std::size_t j = 0; j < i; ++j)
        if (families_[i].name == families_[j].name) throw std::invalid_argument("duplicate family name: " + families_[i].name);
    }
    below_all_.assign(n, std::vector<bool>(m, false));
    above_.assign(n, std::vector<std::size_t>(m, 0));
    for (const auto& [key, rel] : cross) {
      auto [f, fam] = key;
      if (f >= n || fam >= m) throw std::out_of_range("cross relation index out of range");
      switch (rel.kind) {
        case CrossKind::incomparable: break;
        case CrossKind::above_all: above_[f][fam] = kAll; break;
        case CrossKind::below_all: below_all_[f][fam] = true; break;
        case CrossKind::above_prefix: above_[f][fam] = std::max(above_[f][fam], rel.prefix); break;
      }
    }

    std::vector<Subset> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = base.up(i);
    // Bridges through families, transitive closure and propagation of the
    // cross relations along the finite order, until nothing changes.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
          for (std::size_t fam = 0; fam < m; ++fam)
            if (below_all_[f][fam] && above_[g][fam] >= 1 && !up[f][g]) {
              up[f].set(g);
              changed = true;
            }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          if (up[i][k] && !up[k].is_subset_of(up[i])) {
            up[i] |= up[k];
            changed = true;
          }
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
          if (!up[f][g]) continue;
          for (std::size_t fam = 0; fam < m; ++fam) {
            if (below_all_[g][fam] && !below_all_[f][fam]) {
              below_all_[f][fam] = true;
              changed = true;
            }
            if (above_[f][fam] > above_[g][fam]) {
              above_[g][fam] = above_[f][fam];
              changed = true;
            }
          }
        }
    }
    finite_ = FinitePoset::from_up_sets(base.names(), std::move(up));
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t fam = 0; fam < m; ++fam) {
        if (below_all_[f][fam] && above_[f][fam] >= 1)
          throw OrderError("antisymmetry violated between " + finite_.name(f) + " and " + families_[fam].name + "[1]",
                           finite_.name(f), families_[fam].name + "[1]");
        if (above_[f][fam] != kAll) prefix_bound_ = std::max(prefix_bound_, above_[f][fam]);
      }
  }

  const FinitePoset& finite_part() const { return finite_; }
  std::size_t finite_size() const { return finite_.size(); }
  std::size_t family_count() const { return families_.size(); }
  const Family& family(std::size_t i) const { return families_.at(i); }
  const std::vector<Family>& families() const { return families_; }
  bool has_families() const { return !families_.empty(); }

  /// Largest k among above-prefix relations; indices beyond it are generic.
  std::size_t prefix_bound() const { return prefix_bound_; }

  bool below_all(std::size_t f, std::size_t fam) const { return below_all_[f][fam]; }
  /// Number of leading family members below f (kAll for every member).
  std::size_t above_prefix(std::size_t f, std::size_t fam) const { return above_[f][fam]; }

  bool leq(const Point& x, const Point& y) const {
    if (x.is_finite() && y.is_finite()) return finite_.leq(x.index, y.index);
    if (x.is_finite()) return below_all_[x.index][y.family];
    if (y.is_finite()) return above_[y.index][x.family] >= x.index;
    if (x.family == y.family)
      return families_[x.family].kind == FamilyKind::chain ? x.index <= y.index : x.index == y.index;
    for (std::size_t f = 0; f < finite_.size(); ++f)
      if (above_[f][x.family] >= x.index && below_all_[f][y.family]) return true;
    return false;
  }

  std::string name(const Point& p) const {
    if (p.is_finite()) return finite_.name(p.index);
    return families_[p.family].name + "[" + std::to_string(p.index) + "]";
  }

  std::optional<Point> find(std::string_view text) const {
    if (auto i = finite_.find(text)) return Point::finite(*i);
    auto open = text.find('[');
    if (open == std::string_view::npos || text.back() != ']') return std::nullopt;
    auto fam = find_family(text.substr(0, open));
    if (!fam) return std::nullopt;
    auto digits = text.substr(open + 1, text.size() - open - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    std::size_t idx = std::stoul(std::string(digits));
    if (idx == 0) return std::nullopt;
    return Point::member(*fam, idx);
  }

  std::optional<std::size_t> find_family(std::string_view name) const {
    for (std::size_t i = 0; i < families_.size(); ++i)
      if (families_[i].name == name) return i;
    return std::nullopt;
  }

  FPSet empty_set() const { return FPSet{finite_.empty_set(), std::vector<IndexSet>(families_.size(), IndexSet::none())}; }
  FPSet full_set() const { return FPSet{finite_.full_set(), std::vector<IndexSet>(families_.size(), IndexSet::all())}; }
  FPSet singleton(const Point& p) const {
    FPSet s = empty_set();
    if (p.is_finite()) s.finite.set(p.index);
    else s.families[p.family] = IndexSet::finite({p.index});
    return s;
  }
  FPSet family_set(std::size_t fam) const {
    FPSet s = empty_set();
    s.families[fam] = IndexSet::all();
    return s;
  }
  FPSet from_points(const std::vector<Point>& pts) const {
    FPSet s = empty_set();
    for (const auto& p : pts) s = s | singleton(p);
    return s;
  }

  /// Finite part plus indices 1..bound of every family.
  std::vector<Point> sample_points(std::size_t bound) const {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < finite_.size(); ++i) pts.push_back(Point::finite(i));
    for (std::size_t f = 0; f < families_.size(); ++f)
      for (std::size_t i = 1; i <= bound; ++i) pts.push_back(Point::member(f, i));
    return pts;
  }

  std::string format(const FPSet& s) const {
    std::vector<std::string> parts;
    for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) parts.push_back(finite_.name(i));
    for (std::size_t f = 0; f < families_.size(); ++f) {
      const auto& comp = s.families[f];
      const auto& nm = families_[f].name;
      if (comp.is_finite()) {
        for (auto i : comp.listed()) parts.push_back(nm + "[" + std::to_string(i) + "]");
      } else if (comp.listed().empty()) {
        parts.push_back(nm);
      } else {
        std::string t = nm + "\\{";
        bool first = true;
        for (auto i : comp.listed()) {
          t += (first ? "" : ",") + std::to_string(i);
          first = false;
        }
        parts.push_back(t + "}");
      }
    }
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out + "}";
  }

  friend bool operator==(const OmegaPoset& a, const OmegaPoset& b) {
    if (!(a.finite_ == b.finite_) || a.families_.size() != b.families_.size()) return false;
    for (std::size_t i = 0; i < a.families_.size(); ++i)
      if (a.families_[i].name != b.families_[i].name || a.families_[i].kind != b.families_[i].kind) return false;
    return a.below_all_ == b.below_all_ && a.above_ == b.above_;
  }

 private:
  FinitePoset finite_;
  std::vector<Family> families_;
  std::vector<std::vector<bool>> below_all_;
  std::vector<std::vector<std::size_t>> above_;
  std::size_t prefix_bound_ = 0;
};

/// Bound beyond which indices are generic for the given sets.
inline std::size_t index_bound(const OmegaPoset& p, std::initializer_list<const FPSet*> sets, std::size_t floor = 0) {
  std::size_t b = std::max(floor, p.prefix_bound());
  // A cofinite chain component listing indices up to M starts at most at
  // M+1, and its least member can show up in results.
  for (const FPSet* s : sets) b = std::max(b, s->max_index() + 1);
  return b;
}

/// Evaluates `pred` on every point with index <= bound and on two generic
/// indices, and returns the set where it holds.
template <class Pred>
FPSet tabulate(const OmegaPoset& p, std::size_t bound, Pred&& pred) {
  FPSet r = p.empty_set();
  for (std::size_t i = 0; i < p.finite_size(); ++i)
    if (pred(Point::finite(i))) r.finite.set(i);
  for (std::size_t f = 0; f < p.family_count(); ++f) {
    std::set<std::size_t> yes, no;
    for (std::size_t i = 1; i <= bound; ++i) (pred(Point::member(f, i)) ? yes : no).insert(i);
    const bool tail = pred(Point::member(f, bound + 1));
    if (tail != static_cast<bool>(pred(Point::member(f, bound + 2))))
      throw std::logic_error("predicate is not uniform beyond index " + std::to_string(bound) + " on family " +
                             p.family(f).name);
    r.families[f] = tail ? IndexSet::cofinite(std::move(no)) : IndexSet::finite(std::move(yes));
  }
  return r;
}

/// Members of S with index <= bound, plus one generic member per cofinite
/// component (two if `pairs`, so that distinct generic members can be compared).
inline std::vector<Point> sample_members(const OmegaPoset& p, const FPSet& s, std::size_t bound, bool pairs = false) {
  std::vector<Point> pts;
  for (auto i = s.finite.find_first(); i != Subset::npos; i = s.finite.find_next(i)) pts.push_back(Point::finite(i));
  for (std::size_t f = 0; f < p.family_count(); ++f) {
    const auto& comp = s.families[f];
    for (std::size_t i = 1; i <= bound; ++i)
      if (comp.contains(i)) pts.push_back(Point::member(f, i));
    if (comp.is_cofinite()) {
      pts.push_back(Point::member(f, bound + 1));
      if (pairs) pts.push_back(Point::member(f, bound + 2));
    }
  }
  return pts;
}

/// pred holds on every member of S.  `floor` must cover the indices of any
/// other points pred refers to.
template <class Pred>
bool all_members(const OmegaPoset& p, const FPSet& s, std::size_t floor, Pred&& pred) {
  const std::size_t bound = index_bound(p, {&s}, floor);
  for (const auto& x : sample_members(p, s, bound))
    if (!pred(x)) return false;
  return true;
}

template <class Pred>
bool any_member(const OmegaPoset& p, const FPSet& s, std::size_t floor, Pred&& pred) {
  const std::size_t bound = index_bound(p, {&s}, floor);
  for (const auto& x : sample_members(p, s, bound))
    if (pred(x)) return true;
  return false;
}

inline bool omega_leq(const OmegaPoset& p, const Point& x, const Point& y) { return p.leq(x, y); }

inline FPSet fp_upper_bounds(const OmegaPoset& p, const FPSet& s) {
  return tabulate(p, index_bound(p, {&s}), [&](const Point& y) {
    return all_members(p, s, y.family_index(), [&](const Point& x) { return p.leq(x, y); });
  });
}

inline FPSet fp_lower_bounds(const OmegaPoset& p, const FPSet& s) {
  return tabulate(p, index_bound(p, {&s}), [&](const Point& y) {
    return all_members(p, s, y.family_index(), [&](const Point& x) { return p.leq(y, x); });
  });
}

inline FPSet fp_cut_closure(const OmegaPoset& p, const FPSet& s) { return fp_lower_bounds(p, fp_upper_bounds(p, s)); }

/// ↓S
inline FPSet fp_down_closure(const OmegaPoset& p, const FPSet& s) {
  return tabulate(p, index_bound(p, {&s}), [&](const Point& y) {
    return any_member(p, s, y.family_index(), [&](const Point& x) { return p.leq(y, x); });
  });
}

/// ↑S
inline FPSet fp_up_closure(const OmegaPoset& p, const FPSet& s) {
  return tabulate(p, index_bound(p, {&s}), [&](const Point& y) {
    return any_member(p, s, y.family_index(), [&](const Point& x) { return p.leq(x, y); });
  });
}

inline bool fp_is_upper_set(const OmegaPoset& p, const FPSet& s) { return fp_up_closure(p, s) == s; }
inline bool fp_is_lower_set(const OmegaPoset& p, const FPSet& s) { return fp_down_closure(p, s) == s; }

/// Nonempty, and every two members have an upper bound in S.
inline bool fp_is_directed(const OmegaPoset& p, const FPSet& s) {
  if (s.empty()) return false;
  const std::size_t bound = index_bound(p, {&s});
  const auto members = sample_members(p, s, bound, true);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Point x = members[i], y = members[j];
      if (!any_member(p, s, bound + 2, [&](const Point& z) { return p.leq(x, z) && p.leq(y, z); })) return false;
    }
  return true;
}

inline std::optional<Point> fp_least(const OmegaPoset& p, const FPSet& s) {
  const std::size_t bound = index_bound(p, {&s});
  for (const auto& c : sample_members(p, s, bound))
    if (all_members(p, s, c.family_index(), [&](const Point& x) { return p.leq(c, x); })) return c;
  return std::nullopt;
}

inline std::optional<Point> fp_greatest(const OmegaPoset& p, const FPSet& s) {
  const std::size_t bound = index_bound(p, {&s});
  for (const auto& c : sample_members(p, s, bound))
    if (all_members(p, s, c.family_index(), [&](const Point& x) { return p.leq(x, c); })) return c;
  return std::nullopt;
}

/// Directed subsets up to cut closure: the singletons {x} (x with index at
/// most `bound`, generic beyond) and every chain family meeting `support`
/// infinitely.
///
/// Completeness for this presentation class: let D be directed without a
/// maximum and enumerate D as d0, d1, ...  Choosing u_{k+1} in D strictly above
/// u_k and d_k yields a strictly increasing sequence dominating D.  A finite
/// point occurs at most once in it, and a strictly increasing run cannot
/// alternate between families (that would force a finite point to be both
/// below all and above some member of one family, which the constructor
/// rejects), so a tail lies in a single family, necessarily a chain φ.  That
/// tail is cofinal in φ, hence D^↑ = φ^↑ and D^δ = φ^δ.
inline std::vector<FPSet> directed_representatives(const OmegaPoset& p, const FPSet& support, std::size_t bound) {
  std::vector<FPSet> reps;
  for (const auto& x : p.sample_points(bound + 1))
    if (support.contains(x)) reps.push_back(p.singleton(x));
  for (std::size_t f = 0; f < p.family_count(); ++f)
    if (p.family(f).kind == FamilyKind::chain && support.families[f].is_cofinite())
      reps.push_back(p.family_set(f) & support);
  return reps;
}

inline std::vector<FPSet> directed_representatives(const OmegaPoset& p) {
  return directed_representatives(p, p.full_set(), p.prefix_bound());
}

/// Finite part plus the first k members of every family, as an explicit poset.
struct Truncation {
  FinitePoset poset;
  std::vector<Point> points;

  std::optional<std::size_t> position(const Point& x) const {
    auto it = std::find(points.begin(), points.end(), x);
    if (it == points.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
  }
  Subset restrict(const FPSet& s) const {
    Subset r(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      if (s.contains(points[i])) r.set(i);
    return r;
  }
};

inline Truncation truncate(const OmegaPoset& p, std::size_t k) {
  Truncation t;
  t.points = p.sample_points(k);
  std::vector<std::string> names;
  for (const auto& x : t.points) names.push_back(p.name(x));
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = 0; j < t.points.size(); ++j)
      if (i != j && p.leq(t.points[i], t.points[j])) gens.emplace_back(i, j);
  t.poset = FinitePoset(std::move(names), gens);
  return t;
}

}  // namespace sobriety
