#pragma once

// Finite posets and the cut-closure calculus.
//
// Subsets of a poset are bitsets indexed by element position.  Every
// operation here is a pure function of its arguments.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sobriety {

using Subset = boost::dynamic_bitset<>;

/// Largest carrier for which brute-force subset enumeration is attempted.
inline constexpr std::size_t kMaxExhaustive = 20;

/// Raised when a relation fails to be a partial order.
class OrderError : public std::invalid_argument {
 public:
  OrderError(const std::string& what, std::string a, std::string b)
      : std::invalid_argument(what), first(std::move(a)), second(std::move(b)) {}
  std::string first;
  std::string second;
};

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `generators` (pairs x <= y by
  /// position) and checks antisymmetry.
  FinitePoset(std::vector<std::string> names,
              const std::vector<std::pair<std::size_t, std::size_t>>& generators)
      : names_(std::move(names)) {
    const std::size_t n = names_.size();
    check_unique_names();
    up_.assign(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) up_[i].set(i);
    for (auto [x, y] : generators) {
      if (x >= n || y >= n) throw std::out_of_range("poset relation index out of range");
      up_[x].set(y);
    }
    close_and_validate();
  }

  static FinitePoset from_names(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& relations) {
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (const auto& [a, b] : relations) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        throw std::invalid_argument("unknown element in relation: " + a + " < " + b);
      gens.emplace_back(ia->second, ib->second);
    }
    return FinitePoset(std::move(names), gens);
  }

  /// `up[x]` holds every y with x <= y; closed and validated like the generator form.
  static FinitePoset from_up_sets(std::vector<std::string> names, std::vector<Subset> up) {
    FinitePoset p;
    p.names_ = std::move(names);
    p.check_unique_names();
    if (up.size() != p.names_.size()) throw std::invalid_argument("up-set table size mismatch");
    for (std::size_t i = 0; i < up.size(); ++i) {
      if (up[i].size() != up.size()) throw std::invalid_argument("up-set width mismatch");
      up[i].set(i);
    }
    p.up_ = std::move(up);
    p.close_and_validate();
    return p;
  }

  /// Discrete order on the given names.
  static FinitePoset antichain(std::vector<std::string> names) {
    return FinitePoset(std::move(names), {});
  }

  static FinitePoset chain(std::vector<std::string> names) {
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 1; i < names.size(); ++i) gens.emplace_back(i - 1, i);
    return FinitePoset(std::move(names), gens);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool leq(std::size_t x, std::size_t y) const { return up_[x][y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// Principal up-set and down-set.
  const Subset& up(std::size_t x) const { return up_[x]; }
  const Subset& down(std::size_t x) const { return down_[x]; }

  Subset empty_set() const { return Subset(size()); }
  Subset full_set() const { return Subset(size()).set(); }
  Subset singleton(std::size_t x) const {
    Subset s(size());
    s.set(x);
    return s;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  void check_unique_names() const {
    std::set<std::string_view> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate element name: " + n);
  }

  void close_and_validate() {
    const std::size_t n = names_.size();
    // Warshall over bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up_[i][k]) up_[i] |= up_[k];
    down_.assign(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (up_[i][j]) down_[j].set(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (up_[i][j] && up_[j][i])
          throw OrderError("antisymmetry violated between " + names_[i] + " and " + names_[j],
                           names_[i], names_[j]);
  }

  std::vector<std::string> names_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// A^↑: points above every member of A.  The empty set is bounded by everything.
inline Subset upper_bounds(const FinitePoset& p, const Subset& a) {
  Subset r = p.full_set();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) r &= p.up(i);
  return r;
}

inline Subset lower_bounds(const FinitePoset& p, const Subset& a) {
  Subset r = p.full_set();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) r &= p.down(i);
  return r;
}

/// A^δ = (A^↑)^↓.
inline Subset cut_closure(const FinitePoset& p, const Subset& a) {
  return lower_bounds(p, upper_bounds(p, a));
}

inline bool is_cut(const FinitePoset& p, const Subset& a) { return cut_closure(p, a) == a; }

/// ↑A
inline Subset up_closure(const FinitePoset& p, const Subset& a) {
  Subset r = p.empty_set();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) r |= p.up(i);
  return r;
}

/// ↓A
inline Subset down_closure(const FinitePoset& p, const Subset& a) {
  Subset r = p.empty_set();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) r |= p.down(i);
  return r;
}

inline bool is_upper_set(const FinitePoset& p, const Subset& a) { return up_closure(p, a) == a; }
inline bool is_lower_set(const FinitePoset& p, const Subset& a) { return down_closure(p, a) == a; }

/// Nonempty, and every pair has an upper bound inside A.
inline bool is_directed(const FinitePoset& p, const Subset& a) {
  if (a.none()) return false;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i))
    for (auto j = a.find_next(i); j != Subset::npos; j = a.find_next(j))
      if (!(p.up(i) & p.up(j) & a).any()) return false;
  return true;
}

inline Subset minimal_points(const FinitePoset& p, const Subset& a) {
  Subset r = a;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) {
    Subset strictly_below = p.down(i) & a;
    strictly_below.reset(i);
    if (strictly_below.any()) r.reset(i);
  }
  return r;
}

inline Subset maximal_points(const FinitePoset& p, const Subset& a) {
  Subset r = a;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) {
    Subset strictly_above = p.up(i) & a;
    strictly_above.reset(i);
    if (strictly_above.any()) r.reset(i);
  }
  return r;
}

inline std::optional<std::size_t> least_element(const FinitePoset& p, const Subset& a) {
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i))
    if (a.is_subset_of(p.up(i))) return i;
  return std::nullopt;
}

inline std::optional<std::size_t> greatest_element(const FinitePoset& p, const Subset& a) {
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i))
    if (a.is_subset_of(p.down(i))) return i;
  return std::nullopt;
}

/// Least upper bound of A, if any.
inline std::optional<std::size_t> supremum(const FinitePoset& p, const Subset& a) {
  return least_element(p, upper_bounds(p, a));
}

inline std::optional<std::size_t> infimum(const FinitePoset& p, const Subset& a) {
  return greatest_element(p, lower_bounds(p, a));
}

/// Every pair has a join.
inline bool is_sup_semilattice(const FinitePoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Subset pair = p.singleton(i);
      pair.set(j);
      if (!supremum(p, pair)) return false;
    }
  return true;
}

/// Every subset (including ∅ and the carrier) has a supremum and an infimum.
/// For finite posets it suffices to have a bottom and binary joins, but this
/// checks the definition pairwise plus the empty set.
inline bool is_complete_lattice(const FinitePoset& p) {
  if (p.size() == 0) return false;
  if (!supremum(p, p.empty_set()) || !infimum(p, p.empty_set())) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Subset pair = p.singleton(i);
      pair.set(j);
      if (!supremum(p, pair) || !infimum(p, pair)) return false;
    }
  return true;
}

/// Calls `f(subset)` for every subset of an n-element carrier.
template <class F>
void for_each_subset(std::size_t n, F&& f) {
  if (n > kMaxExhaustive)
    throw std::length_error("exhaustive subset enumeration refused above " +
                            std::to_string(kMaxExhaustive) + " points");
  const unsigned long long count = 1ULL << n;
  for (unsigned long long mask = 0; mask < count; ++mask) f(Subset(n, mask));
}

inline std::string format_subset(const FinitePoset& p, const Subset& a) {
  std::string s = "{";
  bool first = true;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) {
    if (!first) s += ", ";
    s += p.name(i);
    first = false;
  }
  return s + "}";
}

/// Dedekind–MacNeille completion: the cuts of P ordered by inclusion, with
/// the embedding x ↦ ↓x.
struct Completion {
  FinitePoset lattice;
  std::vector<Subset> cuts;
  std::vector<std::size_t> embedding;
};

/// Cuts are exactly the intersections of principal down-sets (the carrier
/// being the empty intersection), so close {P} ∪ {↓x} under intersection.
inline Completion dm_completion(const FinitePoset& p) {
  std::vector<Subset> cuts{p.full_set()};
  std::set<Subset> seen{p.full_set()};
  for (std::size_t x = 0; x < p.size(); ++x)
    if (seen.insert(p.down(x)).second) cuts.push_back(p.down(x));
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subset meet = cuts[i] & cuts[j];
      if (seen.insert(meet).second) cuts.push_back(meet);
    }
  std::sort(cuts.begin(), cuts.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  std::vector<std::string> names;
  for (const auto& c : cuts) names.push_back(format_subset(p, c));
  std::vector<Subset> up(cuts.size(), Subset(cuts.size()));
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < cuts.size(); ++j)
      if (cuts[i].is_subset_of(cuts[j])) up[i].set(j);

  Completion result{FinitePoset::from_up_sets(std::move(names), std::move(up)), cuts, {}};
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto it = std::find(cuts.begin(), cuts.end(), p.down(x));
    result.embedding.push_back(static_cast<std::size_t>(it - cuts.begin()));
  }
  return result;
}

}  // namespace sobriety
