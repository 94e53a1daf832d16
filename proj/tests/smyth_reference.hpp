#pragma once

#include "oracle.hpp"

#include <optional>

namespace oracle {

/// Compares the library Smyth power space of a finite space with brute-force
/// K(X) and its upper Vietoris topology. ◊A is computed from its definition
/// and as the brute-force closure of {↑a : a ∈ A}; both library routes must
/// agree with it. Returns a description of the first disagreement.
inline std::optional<std::string> smyth_mismatch(const sobriety::Space& x) {
  using sobriety::Point;
  const auto t = from_space(x);
  const auto ks = t.compact_saturated();
  const auto s = sobriety::smyth_power_space(x);
  const auto& carrier = s.space.carrier();
  if (carrier.finite_size() != ks.size()) return x.name() + ": |K(X)| differs";
  std::vector<std::size_t> index(ks.size());
  for (std::size_t q = 0; q < ks.size(); ++q) {
    const Mask m = to_mask(s.element(Point::finite(q)).finite);
    const auto it = std::find(ks.begin(), ks.end(), m);
    if (it == ks.end()) return x.name() + ": element " + carrier.name(Point::finite(q)) + " is not compact saturated";
    index[q] = static_cast<std::size_t>(it - ks.begin());
  }
  auto to_ref = [&](const sobriety::FPSet& u) {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < ks.size(); ++q)
      if (u.finite[q]) m |= std::uint64_t{1} << index[q];
    return m;
  };
  const auto ref = smyth_opens(t, ks);
  std::set<std::uint64_t> lib;
  for (const auto& u : s.space.open_sets()) lib.insert(to_ref(u));
  if (lib != std::set<std::uint64_t>(ref.begin(), ref.end())) return x.name() + ": upper Vietoris opens differ";

  for (std::size_t p = 0; p < ks.size(); ++p)
    for (std::size_t q = 0; q < ks.size(); ++q)
      if (s.space.specialization_leq(Point::finite(p), Point::finite(q)) != ((ks[index[q]] & ~ks[index[p]]) == 0))
        return x.name() + ": specialization is not reverse inclusion";

  const std::uint64_t all = ks.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ks.size()) - 1;
  auto ref_closure = [&](std::uint64_t a) {
    std::uint64_t c = all;
    for (auto u : ref)
      if ((a & u) == 0) c &= ~u;
    return c;
  };
  for (Mask a : t.closed_sets()) {
    if (a == 0) continue;
    std::uint64_t by_definition = 0, principal = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] & a) by_definition |= std::uint64_t{1} << i;
      for (int y = 0; y < t.n; ++y)
        if (has(a, y) && ks[i] == t.saturation(bit(y))) principal |= std::uint64_t{1} << i;
    }
    const auto set = sobriety::FPSet{to_subset(a, t.n), {}};
    const auto what = x.name() + " A=" + x.describe(set);
    if (ref_closure(principal) != by_definition) return what + ": brute-force closure of {↑a} differs from ◊A";
    if (to_ref(s.diamond(set)) != by_definition) return what + ": diamond differs";
    if (to_ref(s.space.closure(s.embed(set))) != by_definition) return what + ": closure of the embedding differs";
  }
  return std::nullopt;
}

}  // namespace oracle
