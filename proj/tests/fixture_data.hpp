#pragma once

// Gold fixture: the published 4x8 generator matrix over GF(8) of the lifted
// [8,4] iso-dual code on y^2 + y = x^3 (evaluation alphas {0,3,5,7}, i.e. the
// split locus of T^2 + T = a^3).  GF(8) = GF(2)[t]/(t^3+t+1), codes are
// bit-vectors little-endian in t.  The published column order groups the
// alphas as 0, t+1, t^2+t+1, t^2+1; the toolkit's canonical order is
// ascending by code (0, 3, 5, 7), with both orderings pairing the two roots
// above each alpha ascending.  kCanonicalColOfPublished maps published column
// j to the canonical column index.

#include <array>
#include <cstdint>

namespace fixtures {

inline constexpr int kGoldRows = 4;
inline constexpr int kGoldCols = 8;

// rows: 1, x, x^2, y
inline constexpr std::array<std::array<int64_t, kGoldCols>, kGoldRows> kGoldPublishedMatrix{{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 3, 3, 7, 7, 5, 5},
    {0, 0, 5, 5, 3, 3, 7, 7},
    {0, 1, 6, 7, 4, 5, 2, 3},
}};

// canonical_col = kCanonicalColOfPublished[published_col]
inline constexpr std::array<int, kGoldCols> kCanonicalColOfPublished{0, 1, 2, 3, 6, 7, 4, 5};

inline constexpr std::array<int64_t, 4> kGoldAlphas{0, 3, 5, 7};

} // namespace fixtures
