#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trk/abelian.hpp"
#include "trk/arith.hpp"

// The relative algebraic K-groups K_q(Z[x]/(x^m), (x)) of truncated
// polynomial rings over the integers: free of rank m-1 in odd degrees,
// finite of order (mi)! * (i!)^(m-2) in degree 2i, with the full cyclic
// structure known for the dual numbers (m = 2) in low degrees.
namespace trk {

// The group K_q(Z[x]/(x^m), (x)) for m >= 1, q >= 0.  The even-degree order
// is computed as the exact quotient (mi)! (i!)^m / (i!)^2, which also covers
// m = 1 (where the group vanishes).  Structure is engaged only where it is
// determined: zero and free groups, and the dual-numbers table below.
AbelianGroupInfo k_group(std::int64_t m, std::int64_t q);

// Exponent multiplicities of the p-primary part of K_2i(Z[x]/(x^2), (x)) for
// an odd prime p with 2i < p^2: returns (r1, r2) meaning (Z/p)^r1 + (Z/p^2)^r2.
// With j the residue of 2i+1 mod p:
//   j = 0                        -> (0, floor(i/p))
//   j odd and j p <= 2i          -> (floor(2i/p) - 2, 1)
//   otherwise                    -> (floor(2i/p), 0)
// In all cases r1 + 2 r2 = floor(2i/p).
std::pair<std::int64_t, std::int64_t> dual_odd_part(std::int64_t p, std::int64_t i);

// One prime-primary component of a dual-numbers K-group: either the full
// list of cyclic summands or, where no closed form pins the summands down,
// the order alone.
struct DualComponent {
    std::int64_t p = 0;
    bool full = false;
    std::vector<CyclicFactor> factors;  // engaged content only when full
    FactoredInteger p_component_order;
};

struct DualStructure {
    std::int64_t i = 0;
    FactoredInteger order;  // (2i)!
    std::vector<DualComponent> components;
};

// K_2i(Z[x]/(x^2), (x)) for i >= 1, componentwise by prime p <= 2i.  The
// 2-primary summands are known closed-form data only for i <= 3:
//   i = 1: Z/2     i = 2: Z/8     i = 3: Z/2 + Z/2 + Z/4
// (no closed form is known beyond these; larger i report the 2-part order
// only).  Odd p with p^2 > 2i get the full (r1, r2) summands; odd p with
// p^2 <= 2i report the order only.
DualStructure dual_structure(std::int64_t i);

struct KTableRow {
    std::int64_t m = 0;
    std::int64_t q = 0;
    AbelianGroupInfo group;
};

// All rows (m, q) for 1 <= m <= m_max, 0 <= q <= 2 i_max + 1, ordered by m
// then q.  include_structure = false strips the structure lists, leaving
// ranks and orders.
std::vector<KTableRow> k_table(std::int64_t m_max, std::int64_t i_max, bool include_structure);

}  // namespace trk
