#pragma once

// Embedded reference constants. These are fixed published values the
// formulas are checked against; they are never computed.

#include <array>

namespace schroeder::reference {

// s_0..s_9 (A001003)
inline constexpr std::array<long long, 10> little_schroeder = {
    1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049};

// r_0..r_5 (A006318)
inline constexpr std::array<long long, 6> large_schroeder = {1, 2, 6, 22, 90, 394};

// paths in S_n(alpha) with n unit blocks, alpha = 1..5, n = 1..8
// (A000079, A151374, A153231, A217360, A217364)
inline constexpr long long n_blocks_table[5][8] = {
    {2, 4, 8, 16, 32, 64, 128, 256},
    {2, 8, 40, 224, 1344, 8448, 54912, 366080},
    {2, 12, 96, 880, 8736, 91392, 992256, 11075328},
    {2, 16, 176, 2240, 31008, 453376, 6888960, 107707392},
    {2, 20, 280, 4560, 80960, 1520064, 29680640, 596593920},
};

// #T_n for n = 1..8 (A108524)
inline constexpr std::array<long long, 8> tree_counts = {1,    2,    7,    32,
                                                         166,  926,  5419, 32816};

// #M_n for n = 1..8 (A064062)
inline constexpr std::array<long long, 8> map_counts = {1,     3,     13,    67,
                                                        381,   2307,  14589, 95235};

// C_1..C_6
inline constexpr std::array<long long, 6> catalan = {1, 2, 5, 14, 42, 132};

}  // namespace schroeder::reference
