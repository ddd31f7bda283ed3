#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "trk/arith.hpp"
#include "trk/repn.hpp"
#include "trk/trgroups.hpp"

// Ranks and odd-degree orders of the integral groups TR^r_{q-lambda}(Z),
// assembled prime by prime from the p-typical theory, plus the level
// criteria deciding when the limit over the level maps has stabilized.
namespace trk {

// Number of divisors e of r with q = 2 * fixed_dim(lambda, e).  This is the
// free rank of TR^r_{q-lambda}(Z) in even degrees (and 0 in odd ones, where
// the count is empty because fixed dimensions double to even values).
template <RepLike R>
std::int64_t divisor_rank_count(std::int64_t r, std::int64_t q, const R& lambda);

template <RepLike R>
std::int64_t integral_rank(std::int64_t r, std::int64_t q, const R& lambda);

// One factor of the p-local splitting of TR^r: indexed by a divisor j of the
// prime-to-p part r' of r, it is the level-n p-typical group (r = p^(n-1) r')
// at the restriction of lambda along r'/j.  p_part records the p-primary
// part of that factor's odd-degree order.
template <RepLike R>
struct GammaFactor {
    std::int64_t j = 1;
    std::int64_t level = 1;
    R rep;
    FactoredInteger p_part;
};

template <RepLike R>
std::vector<GammaFactor<R>> gamma_factors(std::int64_t p, std::int64_t r, std::int64_t i,
                                          const R& lambda);

// Order of the finite group TR^r_{2i-1-lambda}(Z): for each prime, the
// product of its gamma factors' p-parts.  Only primes up to i and primes
// dividing r can contribute — any other prime sees level-one cyclic factors
// of order at most i.
template <RepLike R>
FactoredInteger integral_odd_order(std::int64_t r, std::int64_t i, const R& lambda);

// Divisor bookkeeping behind the splitting, at the level of ranks: divisors
// of r split into those prime to p and p times a divisor of r/p, so with
// r' the prime-to-p part of r (requires p | r),
//   count(r', q, lambda) + count(r/p, q, restrict_to(lambda, p))
//     == count(r, q, lambda).
template <RepLike R>
bool divisor_identity_holds(std::int64_t r, std::int64_t p, std::int64_t q, const R& lambda);

// Stabilization criteria for the limit systems over truncation length m in
// degrees 2i + eps - 1 and 2i + eps (eps in {0, 1}): the projection from the
// limit onto level r is an isomorphism once every prime satisfies the stated
// valuation bound.  Only primes up to the bound can fail, so the checks are
// finite.
bool stable_iso_middle(std::int64_t m, std::int64_t i, std::int64_t eps, std::int64_t r);

// Same for the level-r/m system; requires m | r.
bool stable_iso_left(std::int64_t m, std::int64_t i, std::int64_t eps, std::int64_t r);

// The smallest multiple r of m at which both criteria hold for q (with
// i = floor(q/2)).  Both criteria are per-prime lower bounds on v_p(r), so
// the minimum is the product of the forced prime powers; every smaller
// multiple of m violates some bound.
std::int64_t find_stable_level(std::int64_t m, std::int64_t q);

// ---- template bodies ----

template <RepLike R>
std::int64_t divisor_rank_count(std::int64_t r, std::int64_t q, const R& lambda) {
    if (r < 1) throw std::domain_error("divisor_rank_count: level must be positive");
    std::int64_t count = 0;
    for (std::int64_t e : divisors(r))
        if (q == 2 * fixed_dim(lambda, e)) ++count;
    return count;
}

template <RepLike R>
std::int64_t integral_rank(std::int64_t r, std::int64_t q, const R& lambda) {
    return divisor_rank_count(r, q, lambda);
}

template <RepLike R>
std::vector<GammaFactor<R>> gamma_factors(std::int64_t p, std::int64_t r, std::int64_t i,
                                          const R& lambda) {
    detail::require_prime(p);
    if (r < 1) throw std::domain_error("gamma_factors: level must be positive");
    const std::int64_t n = valuation(p, r) + 1;
    std::int64_t rp = r;
    while (rp % p == 0) rp /= p;
    std::vector<GammaFactor<R>> out;
    for (std::int64_t j : divisors(rp)) {
        R rep = restrict_to(lambda, rp / j);
        FactoredInteger part = p_part(tr_odd_order(p, n, i, rep), p);
        out.push_back(GammaFactor<R>{j, n, std::move(rep), std::move(part)});
    }
    return out;
}

template <RepLike R>
FactoredInteger integral_odd_order(std::int64_t r, std::int64_t i, const R& lambda) {
    if (r < 1) throw std::domain_error("integral_odd_order: level must be positive");
    std::set<std::int64_t> candidates;
    for (std::int64_t p : primes_upto(i)) candidates.insert(p);
    const FactoredInteger r_factored = factor(r);
    for (const auto& [p, e] : r_factored.factors()) candidates.insert(p);
    FactoredInteger order;
    for (std::int64_t p : candidates)
        for (const auto& f : gamma_factors(p, r, i, lambda)) order *= f.p_part;
    return order;
}

template <RepLike R>
bool divisor_identity_holds(std::int64_t r, std::int64_t p, std::int64_t q, const R& lambda) {
    detail::require_prime(p);
    if (r < 1 || r % p != 0)
        throw std::domain_error("divisor_identity_holds: p must divide the level");
    std::int64_t rp = r;
    while (rp % p == 0) rp /= p;
    return divisor_rank_count(rp, q, lambda) +
               divisor_rank_count(r / p, q, restrict_to(lambda, p)) ==
           divisor_rank_count(r, q, lambda);
}

}  // namespace trk
