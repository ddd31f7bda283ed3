#include "trk/integral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trk {

namespace {

// Smallest exponent v >= 0 with p^(v+1) > bound.
std::int64_t minimal_exponent(std::int64_t p, std::int64_t bound) {
    std::int64_t v = 0;
    std::int64_t power = p;
    while (power <= bound) {
        power = detail::checked_mul(power, p);
        ++v;
    }
    return v;
}

}  // namespace

bool stable_iso_middle(std::int64_t m, std::int64_t i, std::int64_t eps, std::int64_t r) {
    if (m < 1 || i < 0 || r < 1) throw std::domain_error("stable_iso_middle: bad arguments");
    if (eps != 0 && eps != 1) throw std::domain_error("stable_iso_middle: parity must be 0 or 1");
    const std::int64_t bound = detail::checked_mul(m, i + 1);
    for (std::int64_t p : primes_upto(bound))
        if (detail::saturating_pow(p, valuation(p, r) + 1) <= bound) return false;
    return true;
}

bool stable_iso_left(std::int64_t m, std::int64_t i, std::int64_t eps, std::int64_t r) {
    if (m < 1 || i < 0 || r < 1) throw std::domain_error("stable_iso_left: bad arguments");
    if (eps != 0 && eps != 1) throw std::domain_error("stable_iso_left: parity must be 0 or 1");
    if (r % m != 0) throw std::domain_error("stable_iso_left: r must be divisible by m");
    const std::int64_t quotient = r / m;
    const std::int64_t bound = i + 1;
    for (std::int64_t p : primes_upto(bound))
        if (detail::saturating_pow(p, valuation(p, quotient) + 1) <= bound) return false;
    return true;
}

std::int64_t find_stable_level(std::int64_t m, std::int64_t q) {
    if (m < 1) throw std::domain_error("find_stable_level: m must be positive");
    // Floor division toward minus infinity so odd negative q lands correctly.
    const std::int64_t i = q >= 0 ? q / 2 : -((-q + 1) / 2);
    if (i < 0) return m;  // all groups vanish below degree 0; any level works

    // Build the minimal r as a product of prime powers: each prime p needs
    // p^(v_p(r)+1) > m(i+1) and p^(v_p(r/m)+1) > i+1.
    const std::int64_t middle_bound = detail::checked_mul(m, i + 1);
    const std::int64_t left_bound = i + 1;
    const FactoredInteger m_factored = factor(m);
    std::set<std::int64_t> candidates;
    for (std::int64_t p : primes_upto(std::max(middle_bound, left_bound)))
        candidates.insert(p);
    for (const auto& [p, e] : m_factored.factors()) candidates.insert(p);

    std::int64_t result = 1;
    for (std::int64_t p : candidates) {
        const std::int64_t a = minimal_exponent(p, middle_bound);
        const std::int64_t b = minimal_exponent(p, left_bound);
        const std::int64_t c = std::max(a, m_factored.exponent_of(p) + b);
        for (std::int64_t k = 0; k < c; ++k) result = detail::checked_mul(result, p);
    }
    return result;
}

}  // namespace trk
