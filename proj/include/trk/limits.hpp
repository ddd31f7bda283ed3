#pragma once

#include <cstdint>
#include <vector>

#include "trk/abelian.hpp"
#include "trk/arith.hpp"

// The three terms of the limit sequence over truncation length m in degrees
// 2i-1 and 2i: the limits of the level-r/m and level-r systems (left and
// middle) and the cokernel of the transfer between them.  The limits are
// never materialized as inverse limits; each is given by a closed form whose
// prime-by-prime decomposition into finitely many p-typical factors is also
// computed and cross-checked against the closed form on every call.
namespace trk {

enum class Parity { even, odd };

// One factor of the p-local decomposition of a limit term in degree 2i-1:
// the factor indexed by j stabilizes at stage = the unique s with
// p^(s-1) j <= m i < p^s j, carries the standard representation of index
// d = floor((p^(s-1) j - 1)/m), and lives at p-typical level `level` (the
// stage itself for the middle term, stage - v_p(m) for the left term; a
// nonpositive level means the factor is trivial).  length is the p-valuation
// of that factor's order.
struct LimEntry {
    std::int64_t j = 0;
    std::int64_t stage = 0;
    std::int64_t level = 0;
    std::int64_t d = 0;
    std::int64_t length = 0;
    friend bool operator==(const LimEntry&, const LimEntry&) = default;
};

struct LimDecomposition {
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::int64_t i = 0;
    std::int64_t level_shift = 0;  // 0 for the middle term, v_p(m) for the left
    std::vector<LimEntry> entries;

    std::int64_t total_length() const;
};

// Middle term factors: j runs over 1 <= j <= m i prime to p.
LimDecomposition limr_middle_decomposition(std::int64_t p, std::int64_t m, std::int64_t i);

// Left term factors: j runs over the multiples of the prime-to-p part of m
// in 1 <= j <= m i whose cofactor is prime to p.
LimDecomposition limr_left_decomposition(std::int64_t p, std::int64_t m, std::int64_t i);

// The limit of the level-r systems in degree 2i (free of rank m) or 2i-1
// (finite of order (mi)! * (i!)^m).  The odd-degree order is computed twice
// — closed form and per-prime decomposition totals — and a mismatch raises
// std::logic_error.
AbelianGroupInfo limr_middle(std::int64_t m, std::int64_t i, Parity parity);

// The limit of the level-r/m systems: Z in degree 2i, order (i!)^2 in degree
// 2i-1.  Same dual computation and cross-check.
AbelianGroupInfo limr_left(std::int64_t m, std::int64_t i, Parity parity);

// Cokernel of the transfer from left to middle (the transfer is injective,
// which is consumed as an axiom here): free of rank m-1 in degree 2i, finite
// of order (mi)! * (i!)^(m-2) — computed as the exact quotient of the two
// term orders — in degree 2i-1.
AbelianGroupInfo limr_vm_coker(std::int64_t m, std::int64_t i, Parity parity);

}  // namespace trk
