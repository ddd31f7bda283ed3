#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trk/abelian.hpp"
#include "trk/arith.hpp"
#include "trk/repn.hpp"

// Orders, ranks and mod-p lengths of the p-typical equivariant groups
// TR^n_{q-lambda}(Z; p).  Everything here is a closed form or a finite
// recursion; no homotopy theory is performed at runtime.
namespace trk {

// The level-one group TR^1_{q-lambda}(Z): the shift by lambda lands in the
// classical homotopy of the topological Hochschild spectrum of Z, which is
// Z in degree 0, cyclic of order i in degree 2i-1, and zero elsewhere.
// Ignores no inputs: q may be any integer.
AbelianGroupInfo tr1_group(std::int64_t q, const Rep& lambda);

// Rank of TR^n_{2i-lambda}(Z; p): the number of stages 0 <= s < n whose
// fixed-space dimension fixed_dim(lambda, p^s) equals i.
template <RepLike R>
std::int64_t tr_even_rank(std::int64_t p, std::int64_t n, std::int64_t i, const R& lambda);

// Order of the finite group TR^n_{2i-1-lambda}(Z; p), by the level recursion
//   |TR^n| = |TR^(n-1) at restrict_to(lambda, p)| * p^(n-1) (i - dim lambda)
// when i > dim lambda (no extra factor otherwise), grounded at the trivial
// group for n = 0.  The factor i - dim lambda enters with all of its prime
// factors: these are genuine abelian groups, not their p-localizations.
template <RepLike R>
FactoredInteger tr_odd_order(std::int64_t p, std::int64_t n, std::int64_t i, const R& lambda);

// TR^n_{q-lambda}(Z; p) vanishes exactly below twice the top fixed-space
// dimension at level n.
template <RepLike R>
bool tr_is_zero(std::int64_t p, std::int64_t n, std::int64_t q, const R& lambda);

// The full group descriptor: free of the even rank in even degrees, finite
// of the recursive order in odd degrees.  The cyclic structure is reported
// at level n = 1 (and for zero or free groups); beyond that only the order
// is determined, so the structure field is left disengaged.
AbelianGroupInfo tr_group(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda);

// Length of TR^n_{q-lambda}(Z; p; Z/p) as a Z/p-vector space.  lambda must
// have all-positive weights.  Writing fd(s) = fixed_dim(lambda, p^s), the
// degree line splits into bands scanned from the top:
//   q <  2 fd(n-1)                       -> 0
//   2 fd(s) <= q < 2 fd(s-1), 0 < s < n  -> n-s   when q is congruent to
//        2*offset or 2*offset - 1 mod 2p^(n-s), offset taken at the s-th
//        restriction of lambda; n-s-1 otherwise
//   q >= 2 dim lambda                    -> n or n-1 by the same congruence
//        at lambda itself, mod 2p^n.
// Empty bands (equal consecutive fixed dimensions) are skipped.
std::int64_t modp_length(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda);

// The same group as a group: these all have exponent p, so the length is the
// whole story: (Z/p)^length, full structure.
AbelianGroupInfo modp_group(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda);

// One term of the first quadrant homology spectral sequence converging to
// the level-(u+1) theory: E2_{s,t} = H_s(C_{p^u}; TR^1_{t-lambda}(Z)).
// Cyclic group homology with (trivially acted-on) coefficients Z or Z/c:
// H_0 is the coefficient group, higher H_s of Z alternate Z/p^u (odd s) and
// 0, higher H_s of Z/c are Z/gcd(p^u, c) throughout.
AbelianGroupInfo e2_term(std::int64_t p, std::int64_t u, std::int64_t s, std::int64_t t,
                         const Rep& lambda);

struct E2Cell {
    std::int64_t s = 0;
    std::int64_t t = 0;
    AbelianGroupInfo group;
};

// The nonzero cells with s + t = total_degree, ascending s.
std::vector<E2Cell> e2_antidiagonal(std::int64_t p, std::int64_t u, std::int64_t total_degree,
                                    const Rep& lambda);

// Multiplicativity check on the spectral sequence: in total degrees 2i-1 and
// 2i-2 every differential leaves the product of cell orders invariant, so
// the ratio of the two anti-diagonal order products must equal the level
// recursion factor (i - dim lambda) * p^(n-1).  Requires n >= 2 and
// i > dim lambda + 1 (at i = dim lambda + 1 a free cell would make the lower
// product infinite).
bool borel_ratio_check(std::int64_t p, std::int64_t n, std::int64_t i, const Rep& lambda);

// ---- template bodies ----

template <RepLike R>
std::int64_t tr_even_rank(std::int64_t p, std::int64_t n, std::int64_t i, const R& lambda) {
    detail::require_prime(p);
    if (n < 0) throw std::domain_error("tr_even_rank: level must be nonnegative");
    std::int64_t count = 0;
    std::int64_t power = 1;  // p^s, saturating: beyond every weight only 0 divides
    for (std::int64_t s = 0; s < n; ++s) {
        if (fixed_dim(lambda, power) == i) ++count;
        power = detail::saturating_pow(p, s + 1);
    }
    return count;
}

template <RepLike R>
FactoredInteger tr_odd_order(std::int64_t p, std::int64_t n, std::int64_t i, const R& lambda) {
    detail::require_prime(p);
    if (n < 0) throw std::domain_error("tr_odd_order: level must be nonnegative");
    FactoredInteger order;
    R current = lambda;
    for (std::int64_t level = n; level >= 1; --level) {
        const std::int64_t d = dim(current);
        if (i > d) {
            order *= FactoredInteger::prime_power(p, level - 1);
            order *= factor(i - d);
        }
        current = restrict_to(current, p);
    }
    return order;
}

template <RepLike R>
bool tr_is_zero(std::int64_t p, std::int64_t n, std::int64_t q, const R& lambda) {
    detail::require_prime(p);
    if (n < 1) throw std::domain_error("tr_is_zero: level must be positive");
    return q < 2 * fixed_dim(lambda, detail::saturating_pow(p, n - 1));
}

}  // namespace trk
