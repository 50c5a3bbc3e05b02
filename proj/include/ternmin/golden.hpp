#pragma once

#include "ternmin/code.hpp"

#include <cstddef>

namespace ternmin::golden {

inline constexpr int kReferenceM = 9;
inline constexpr int kReferenceK1 = 2;
inline constexpr int kReferenceK2 = 4;
inline constexpr std::int64_t kReferenceLength = 19682;
inline constexpr int kReferenceDimension = 11;
inline constexpr std::int64_t kReferenceMinWeight = 834;
inline constexpr std::int64_t kReferenceMaxWeight = 14226;

/// The reference enumerator, aggregated into a multiset.
CompleteWeightEnumerator reference_cwe();

/// Number of monomials in the listing, before merging repeats.
std::size_t reference_listed_terms() noexcept;

} // namespace ternmin::golden
