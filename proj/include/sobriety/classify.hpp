#pragma once

// The sobriety spectrum: cut space, weakly sober, quasisober, sober, plus
// the dcpo and well-filtered side conditions.
//
// Quantification over irreducible closed sets uses the space's closed
// family; quantification over directed sets uses directed representatives,
// one per cut-closure class.  Finite spaces are handled exactly; for ω
// carriers both families are complete up to shifting generic indices.

#include "sobriety/topology.hpp"

#include <concepts>
#include <functional>

namespace sobriety {

template <class X>
concept ClassifiableSpace = requires(const X& x, const typename X::set_type& s, const typename X::point_type& p) {
  { x.closure(s) } -> std::same_as<typename X::set_type>;
  { x.cut_closure(s) } -> std::same_as<typename X::set_type>;
  { x.point_closure(p) } -> std::same_as<typename X::set_type>;
  { x.closed_sets() } -> std::same_as<BasicClosedFamily<typename X::set_type>>;
  { x.directed_representatives(std::size_t{}) } -> std::same_as<std::vector<typename X::set_type>>;
  { x.points(std::size_t{}) } -> std::same_as<std::vector<typename X::point_type>>;
  { x.members(s) } -> std::same_as<std::vector<typename X::point_type>>;
  { x.least_upper_bound(s) } -> std::same_as<std::optional<typename X::point_type>>;
  { x.is_t0() } -> std::convertible_to<bool>;
  { x.is_finite() } -> std::convertible_to<bool>;
  { x.describe(s) } -> std::convertible_to<std::string>;
  { x.name() } -> std::convertible_to<std::string>;
  { s | s } -> std::same_as<typename X::set_type>;
  { subset_of(s, s) } -> std::convertible_to<bool>;
  { s.empty() } -> std::convertible_to<bool>;
};

class NotT0 : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PredicateResult {
  bool holds = true;
  std::string witness;      // offending set when the predicate fails
  bool sound_only = false;  // verdict relies on a family not known to be complete

  explicit operator bool() const { return holds; }
};

enum class Verdict { yes, no, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline Verdict verdict(bool b) { return b ? Verdict::yes : Verdict::no; }

struct ClassificationReport {
  std::string space;
  bool t0 = true;
  PredicateResult cut_space;
  PredicateResult weakly_sober;
  PredicateResult quasisober;
  PredicateResult sober;
  Verdict dcpo_specialization = Verdict::unknown;
  std::string dcpo_witness;
  Verdict well_filtered = Verdict::unknown;
  std::string well_filtered_note;
  std::size_t irreducible_count = 0;
  std::size_t representative_count = 0;
};

/// Irreducible closed sets.  Finite spaces: the distinct point closures (any
/// closed set is the union of its point closures, so an irreducible one is
/// one of them).  Otherwise: nonempty members of the closed family that are
/// not the union of two proper closed subsets from the same family.
template <ClassifiableSpace X>
BasicClosedFamily<typename X::set_type> irreducible_closed_sets(const X& x) {
  using Set = typename X::set_type;
  BasicClosedFamily<Set> out;
  if (x.is_finite()) {
    std::set<Set> seen;
    for (const auto& p : x.points(0)) seen.insert(x.point_closure(p));
    out.members.assign(seen.begin(), seen.end());
    return out;
  }
  auto fam = x.closed_sets();
  out.exhaustive = fam.exhaustive;
  out.index_bound = fam.index_bound;
  for (const auto& c : fam.members) {
    if (c.empty()) continue;
    std::vector<const Set*> proper;
    for (const auto& a : fam.members)
      if (a != c && subset_of(a, c)) proper.push_back(&a);
    bool reducible = false;
    for (std::size_t i = 0; i < proper.size() && !reducible; ++i)
      for (std::size_t j = i; j < proper.size() && !reducible; ++j)
        reducible = (*proper[i] | *proper[j]) == c;
    if (!reducible) out.members.push_back(c);
  }
  return out;
}

/// A yes over a bounded family only covers the sampled irreducible sets.
template <class Set>
PredicateResult positive(const BasicClosedFamily<Set>& irr) {
  return {true, {}, !irr.exhaustive};
}

/// cl D = D^δ for every directed representative D.
template <ClassifiableSpace X>
PredicateResult is_cut_space(const X& x, std::size_t bound = 0) {
  for (const auto& d : x.directed_representatives(bound))
    if (x.closure(d) != x.cut_closure(d)) return {false, x.describe(d)};
  return {};
}

template <ClassifiableSpace X>
PredicateResult is_weakly_sober(const X& x, const BasicClosedFamily<typename X::set_type>& irr) {
  if (!x.is_t0()) throw NotT0(x.name() + " is not T0");
  for (const auto& c : irr.members)
    if (x.cut_closure(c) != c) return {false, x.describe(c)};
  return positive(irr);
}

template <ClassifiableSpace X>
PredicateResult is_weakly_sober(const X& x) {
  return is_weakly_sober(x, irreducible_closed_sets(x));
}

template <ClassifiableSpace X>
PredicateResult is_quasisober(const X& x, const BasicClosedFamily<typename X::set_type>& irr) {
  if (!x.is_t0()) throw NotT0(x.name() + " is not T0");
  std::set<typename X::set_type> cut_closures;
  for (const auto& d : x.directed_representatives(irr.index_bound)) cut_closures.insert(x.cut_closure(d));
  for (const auto& c : irr.members)
    if (!cut_closures.count(c)) return {false, x.describe(c)};
  return positive(irr);
}

template <ClassifiableSpace X>
PredicateResult is_quasisober(const X& x) {
  return is_quasisober(x, irreducible_closed_sets(x));
}

template <ClassifiableSpace X>
PredicateResult is_sober(const X& x, const BasicClosedFamily<typename X::set_type>& irr) {
  if (!x.is_t0()) throw NotT0(x.name() + " is not T0");
  for (const auto& c : irr.members) {
    const auto cands = x.members(c);
    const bool generic =
        std::any_of(cands.begin(), cands.end(), [&](const auto& p) { return x.point_closure(p) == c; });
    if (!generic) return {false, x.describe(c)};
  }
  return positive(irr);
}

template <ClassifiableSpace X>
PredicateResult is_sober(const X& x) {
  return is_sober(x, irreducible_closed_sets(x));
}

/// Every directed representative has a least upper bound.  The witness is
/// the first representative without one.
template <ClassifiableSpace X>
PredicateResult is_dcpo_specialization(const X& x, std::size_t bound = 0) {
  for (const auto& d : x.directed_representatives(bound))
    if (!x.least_upper_bound(d)) return {false, x.describe(d)};
  return {};
}

/// A filter basis of compact saturated sets given as a descending sequence
/// K(1) ⊇ K(2) ⊇ ... together with its intersection.
struct FilterBasis {
  std::string name;
  std::function<FPSet(std::size_t)> member;
  FPSet meet;
};

/// Well-filteredness.  Finite spaces: every filter basis of a finite K(X)
/// has a least member, so the answer is yes.  Otherwise only the declared
/// descending filter bases are checked, against every open set; past the
/// index bound a descending member lies inside U iff the generic one does.
inline std::pair<Verdict, std::string> is_well_filtered(const Space& x, const std::vector<FilterBasis>& declared = {}) {
  if (x.is_finite()) return {Verdict::yes, "finite"};
  if (declared.empty()) return {Verdict::unknown, "no declared filter bases"};
  const auto opens = x.open_sets();
  for (const auto& fb : declared) {
    for (const auto& u : opens) {
      if (!subset_of(fb.meet, u)) continue;
      const std::size_t b = std::max(x.index_bound(), u.max_index()) + 2;
      if (!subset_of(fb.member(b), u))
        return {Verdict::no, fb.name + " against open " + x.describe(u)};
    }
  }
  return {Verdict::yes, "declared filter bases only"};
}

template <ClassifiableSpace X>
ClassificationReport classify(const X& x) {
  ClassificationReport r;
  r.space = x.name();
  r.t0 = x.is_t0();
  r.cut_space = is_cut_space(x);
  const auto dcpo = is_dcpo_specialization(x);
  r.dcpo_specialization = verdict(dcpo.holds);
  r.dcpo_witness = dcpo.witness;
  if (!r.t0) {
    r.weakly_sober = r.quasisober = r.sober = {false, "not T0"};
    return r;
  }
  const auto irr = irreducible_closed_sets(x);
  r.irreducible_count = irr.members.size();
  r.representative_count = x.directed_representatives(irr.index_bound).size();
  r.weakly_sober = is_weakly_sober(x, irr);
  r.quasisober = is_quasisober(x, irr);
  r.sober = is_sober(x, irr);
  if (x.is_finite()) {
    r.well_filtered = Verdict::yes;
    r.well_filtered_note = "finite";
  }
  return r;
}

inline ClassificationReport classify(const Space& x, const std::vector<FilterBasis>& declared) {
  auto r = classify(x);
  std::tie(r.well_filtered, r.well_filtered_note) = is_well_filtered(x, declared);
  return r;
}

/// Internal consistency of a report: the implication chain and, where
/// dcpo is decided, sober iff quasisober and dcpo.
inline std::vector<std::string> report_violations(const ClassificationReport& r) {
  std::vector<std::string> v;
  if (r.sober.holds && !r.quasisober.holds) v.push_back("sober but not quasisober");
  if (r.quasisober.holds && !r.weakly_sober.holds) v.push_back("quasisober but not weakly sober");
  if (r.weakly_sober.holds && !r.cut_space.holds) v.push_back("weakly sober but not a cut space");
  if (r.t0 && r.dcpo_specialization != Verdict::unknown &&
      r.sober.holds != (r.quasisober.holds && r.dcpo_specialization == Verdict::yes))
    v.push_back("sober differs from quasisober and dcpo");
  return v;
}

}  // namespace sobriety
