// Generated by tools/derive_invariants.py. Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace genus1::detail {

// Exponents follow the coefficient order (a, b, c, a2, a3, b1, b3, c1, c2, m).
struct CubicTerm {
  std::int64_t coeff;
  std::array<std::uint8_t, 10> exps;
};

// Degree-4 invariant of the ternary cubic, primitive integer normalisation.
inline constexpr std::array<CubicTerm, 25> kCubicS{{
    {1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 4}},
    {-8, {0, 0, 0, 0, 0, 1, 0, 1, 0, 2}},
    {16, {0, 0, 0, 0, 0, 2, 0, 2, 0, 0}},
    {-8, {0, 0, 0, 0, 1, 0, 1, 0, 0, 2}},
    {24, {0, 0, 0, 0, 1, 1, 0, 0, 1, 1}},
    {-16, {0, 0, 0, 0, 1, 1, 1, 1, 0, 0}},
    {16, {0, 0, 0, 0, 2, 0, 2, 0, 0, 0}},
    {-8, {0, 0, 0, 1, 0, 0, 0, 0, 1, 2}},
    {24, {0, 0, 0, 1, 0, 0, 1, 1, 0, 1}},
    {-16, {0, 0, 0, 1, 0, 1, 0, 1, 1, 0}},
    {-16, {0, 0, 0, 1, 1, 0, 1, 0, 1, 0}},
    {16, {0, 0, 0, 2, 0, 0, 0, 0, 2, 0}},
    {-48, {0, 0, 1, 0, 1, 2, 0, 0, 0, 0}},
    {24, {0, 0, 1, 1, 0, 1, 0, 0, 0, 1}},
    {-48, {0, 0, 1, 2, 0, 0, 1, 0, 0, 0}},
    {24, {0, 1, 0, 0, 1, 0, 0, 1, 0, 1}},
    {-48, {0, 1, 0, 0, 2, 0, 0, 0, 1, 0}},
    {-48, {0, 1, 0, 1, 0, 0, 0, 2, 0, 0}},
    {144, {0, 1, 1, 1, 1, 0, 0, 0, 0, 0}},
    {24, {1, 0, 0, 0, 0, 0, 1, 0, 1, 1}},
    {-48, {1, 0, 0, 0, 0, 0, 2, 1, 0, 0}},
    {-48, {1, 0, 0, 0, 0, 1, 0, 0, 2, 0}},
    {144, {1, 0, 1, 0, 0, 1, 1, 0, 0, 0}},
    {144, {1, 1, 0, 0, 0, 0, 0, 1, 1, 0}},
    {-216, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
}};

// Degree-6 invariant of the ternary cubic, primitive integer normalisation.
inline constexpr std::array<CubicTerm, 103> kCubicT{{
    {1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 6}},
    {-12, {0, 0, 0, 0, 0, 1, 0, 1, 0, 4}},
    {48, {0, 0, 0, 0, 0, 2, 0, 2, 0, 2}},
    {-64, {0, 0, 0, 0, 0, 3, 0, 3, 0, 0}},
    {-12, {0, 0, 0, 0, 1, 0, 1, 0, 0, 4}},
    {36, {0, 0, 0, 0, 1, 1, 0, 0, 1, 3}},
    {24, {0, 0, 0, 0, 1, 1, 1, 1, 0, 2}},
    {-144, {0, 0, 0, 0, 1, 2, 0, 1, 1, 1}},
    {96, {0, 0, 0, 0, 1, 2, 1, 2, 0, 0}},
    {48, {0, 0, 0, 0, 2, 0, 2, 0, 0, 2}},
    {-144, {0, 0, 0, 0, 2, 1, 1, 0, 1, 1}},
    {96, {0, 0, 0, 0, 2, 1, 2, 1, 0, 0}},
    {216, {0, 0, 0, 0, 2, 2, 0, 0, 2, 0}},
    {-64, {0, 0, 0, 0, 3, 0, 3, 0, 0, 0}},
    {-12, {0, 0, 0, 1, 0, 0, 0, 0, 1, 4}},
    {36, {0, 0, 0, 1, 0, 0, 1, 1, 0, 3}},
    {24, {0, 0, 0, 1, 0, 1, 0, 1, 1, 2}},
    {-144, {0, 0, 0, 1, 0, 1, 1, 2, 0, 1}},
    {96, {0, 0, 0, 1, 0, 2, 0, 2, 1, 0}},
    {24, {0, 0, 0, 1, 1, 0, 1, 0, 1, 2}},
    {-144, {0, 0, 0, 1, 1, 0, 2, 1, 0, 1}},
    {-144, {0, 0, 0, 1, 1, 1, 0, 0, 2, 1}},
    {48, {0, 0, 0, 1, 1, 1, 1, 1, 1, 0}},
    {96, {0, 0, 0, 1, 2, 0, 2, 0, 1, 0}},
    {48, {0, 0, 0, 2, 0, 0, 0, 0, 2, 2}},
    {-144, {0, 0, 0, 2, 0, 0, 1, 1, 1, 1}},
    {216, {0, 0, 0, 2, 0, 0, 2, 2, 0, 0}},
    {96, {0, 0, 0, 2, 0, 1, 0, 1, 2, 0}},
    {96, {0, 0, 0, 2, 1, 0, 1, 0, 2, 0}},
    {-64, {0, 0, 0, 3, 0, 0, 0, 0, 3, 0}},
    {-72, {0, 0, 1, 0, 1, 2, 0, 0, 0, 2}},
    {288, {0, 0, 1, 0, 1, 3, 0, 1, 0, 0}},
    {-576, {0, 0, 1, 0, 2, 2, 1, 0, 0, 0}},
    {36, {0, 0, 1, 1, 0, 1, 0, 0, 0, 3}},
    {-144, {0, 0, 1, 1, 0, 2, 0, 1, 0, 1}},
    {720, {0, 0, 1, 1, 1, 1, 1, 0, 0, 1}},
    {-144, {0, 0, 1, 1, 1, 2, 0, 0, 1, 0}},
    {-72, {0, 0, 1, 2, 0, 0, 1, 0, 0, 2}},
    {-144, {0, 0, 1, 2, 0, 1, 0, 0, 1, 1}},
    {-144, {0, 0, 1, 2, 0, 1, 1, 1, 0, 0}},
    {-576, {0, 0, 1, 2, 1, 0, 2, 0, 0, 0}},
    {288, {0, 0, 1, 3, 0, 0, 1, 0, 1, 0}},
    {216, {0, 0, 2, 2, 0, 2, 0, 0, 0, 0}},
    {36, {0, 1, 0, 0, 1, 0, 0, 1, 0, 3}},
    {-144, {0, 1, 0, 0, 1, 1, 0, 2, 0, 1}},
    {-72, {0, 1, 0, 0, 2, 0, 0, 0, 1, 2}},
    {-144, {0, 1, 0, 0, 2, 0, 1, 1, 0, 1}},
    {-144, {0, 1, 0, 0, 2, 1, 0, 1, 1, 0}},
    {288, {0, 1, 0, 0, 3, 0, 1, 0, 1, 0}},
    {-72, {0, 1, 0, 1, 0, 0, 0, 2, 0, 2}},
    {288, {0, 1, 0, 1, 0, 1, 0, 3, 0, 0}},
    {720, {0, 1, 0, 1, 1, 0, 0, 1, 1, 1}},
    {-144, {0, 1, 0, 1, 1, 0, 1, 2, 0, 0}},
    {-576, {0, 1, 0, 1, 2, 0, 0, 0, 2, 0}},
    {-576, {0, 1, 0, 2, 0, 0, 0, 2, 1, 0}},
    {864, {0, 1, 1, 0, 2, 1, 0, 0, 0, 1}},
    {-648, {0, 1, 1, 1, 1, 0, 0, 0, 0, 2}},
    {-1296, {0, 1, 1, 1, 1, 1, 0, 1, 0, 0}},
    {864, {0, 1, 1, 1, 2, 0, 1, 0, 0, 0}},
    {864, {0, 1, 1, 2, 0, 0, 0, 1, 0, 1}},
    {864, {0, 1, 1, 2, 1, 0, 0, 0, 1, 0}},
    {-864, {0, 1, 2, 3, 0, 0, 0, 0, 0, 0}},
    {216, {0, 2, 0, 0, 2, 0, 0, 2, 0, 0}},
    {-864, {0, 2, 1, 0, 3, 0, 0, 0, 0, 0}},
    {36, {1, 0, 0, 0, 0, 0, 1, 0, 1, 3}},
    {-72, {1, 0, 0, 0, 0, 0, 2, 1, 0, 2}},
    {-72, {1, 0, 0, 0, 0, 1, 0, 0, 2, 2}},
    {720, {1, 0, 0, 0, 0, 1, 1, 1, 1, 1}},
    {-576, {1, 0, 0, 0, 0, 1, 2, 2, 0, 0}},
    {-576, {1, 0, 0, 0, 0, 2, 0, 1, 2, 0}},
    {-144, {1, 0, 0, 0, 1, 0, 2, 0, 1, 1}},
    {288, {1, 0, 0, 0, 1, 0, 3, 1, 0, 0}},
    {-144, {1, 0, 0, 0, 1, 1, 1, 0, 2, 0}},
    {-144, {1, 0, 0, 1, 0, 0, 1, 0, 2, 1}},
    {-144, {1, 0, 0, 1, 0, 0, 2, 1, 1, 0}},
    {288, {1, 0, 0, 1, 0, 1, 0, 0, 3, 0}},
    {-648, {1, 0, 1, 0, 0, 1, 1, 0, 0, 2}},
    {864, {1, 0, 1, 0, 0, 2, 0, 0, 1, 1}},
    {864, {1, 0, 1, 0, 0, 2, 1, 1, 0, 0}},
    {864, {1, 0, 1, 0, 1, 1, 2, 0, 0, 0}},
    {864, {1, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
    {-1296, {1, 0, 1, 1, 0, 1, 1, 0, 1, 0}},
    {-864, {1, 0, 2, 0, 0, 3, 0, 0, 0, 0}},
    {-648, {1, 1, 0, 0, 0, 0, 0, 1, 1, 2}},
    {864, {1, 1, 0, 0, 0, 0, 1, 2, 0, 1}},
    {864, {1, 1, 0, 0, 0, 1, 0, 2, 1, 0}},
    {864, {1, 1, 0, 0, 1, 0, 0, 0, 2, 1}},
    {-1296, {1, 1, 0, 0, 1, 0, 1, 1, 1, 0}},
    {864, {1, 1, 0, 1, 0, 0, 0, 1, 2, 0}},
    {540, {1, 1, 1, 0, 0, 0, 0, 0, 0, 3}},
    {-1296, {1, 1, 1, 0, 0, 1, 0, 1, 0, 1}},
    {-1296, {1, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
    {-1296, {1, 1, 1, 0, 1, 1, 0, 0, 1, 0}},
    {-1296, {1, 1, 1, 1, 0, 0, 0, 0, 1, 1}},
    {-1296, {1, 1, 1, 1, 0, 0, 1, 1, 0, 0}},
    {3888, {1, 1, 2, 1, 0, 1, 0, 0, 0, 0}},
    {-864, {1, 2, 0, 0, 0, 0, 0, 3, 0, 0}},
    {3888, {1, 2, 1, 0, 1, 0, 0, 1, 0, 0}},
    {216, {2, 0, 0, 0, 0, 0, 2, 0, 2, 0}},
    {-864, {2, 0, 1, 0, 0, 0, 3, 0, 0, 0}},
    {-864, {2, 1, 0, 0, 0, 0, 0, 0, 3, 0}},
    {3888, {2, 1, 1, 0, 0, 0, 1, 0, 1, 0}},
    {-5832, {2, 2, 2, 0, 0, 0, 0, 0, 0, 0}},
}};

} // namespace genus1::detail
