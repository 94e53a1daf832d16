#pragma once

// Named ω-posets used by the replication corpus and the tests.

#include "sobriety/omega.hpp"

namespace sobriety::catalog {

using CrossMap = std::map<std::pair<std::size_t, std::size_t>, CrossRelation>;

/// N = 1 < 2 < 3 < ...
inline OmegaPoset omega_chain(std::string family = "N") {
  return OmegaPoset(FinitePoset{}, {{std::move(family), FamilyKind::chain}}, {});
}

/// An infinite antichain.
inline OmegaPoset omega_antichain(std::string family = "N") {
  return OmegaPoset(FinitePoset{}, {{std::move(family), FamilyKind::antichain}}, {});
}

/// {a1, a2} ∪ N with n < a1, n < a2 and n < n+1.
inline OmegaPoset chain_with_two_tops() {
  return OmegaPoset(FinitePoset::antichain({"a1", "a2"}), {{"N", FamilyKind::chain}},
                    CrossMap{{{0, 0}, {CrossKind::above_all}}, {{1, 0}, {CrossKind::above_all}}});
}

/// {a2} ∪ N, the closed subset of chain_with_two_tops() without a1.
inline OmegaPoset chain_with_one_top() {
  return OmegaPoset(FinitePoset::antichain({"a2"}), {{"N", FamilyKind::chain}},
                    CrossMap{{{0, 0}, {CrossKind::above_all}}});
}

/// {T, a1, a2} ∪ N with N below a1 and a2, both below T.
inline OmegaPoset chain_with_two_tops_and_top() {
  return OmegaPoset(FinitePoset::from_names({"T", "a1", "a2"}, {{"a1", "T"}, {"a2", "T"}}), {{"N", FamilyKind::chain}},
                    CrossMap{{{0, 0}, {CrossKind::above_all}}, {{1, 0}, {CrossKind::above_all}}, {{2, 0}, {CrossKind::above_all}}});
}

/// An infinite antichain with a bottom and a top added.
inline OmegaPoset antichain_with_bounds() {
  return OmegaPoset(FinitePoset::from_names({"bot", "top"}, {{"bot", "top"}}), {{"B", FamilyKind::antichain}},
                    CrossMap{{{0, 0}, {CrossKind::below_all}}, {{1, 0}, {CrossKind::above_all}}});
}

/// {b_i} ∪ N with ↓n = {1..n} and ↓b_n = {b_n}.
inline OmegaPoset chain_beside_antichain() {
  return OmegaPoset(FinitePoset{}, {{"b", FamilyKind::antichain}, {"N", FamilyKind::chain}}, {});
}

}  // namespace sobriety::catalog
