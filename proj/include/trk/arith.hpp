#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trk {

// Positive integer kept in fully factored form: prime -> exponent >= 1.
// The empty map is 1; zero and negative values are not representable, so
// every arithmetic operation below is exact by construction.  Orders of the
// groups computed by this library routinely exceed any machine word
// ((mi)! for modest m, i), hence products, exact quotients and powers act on
// the exponent maps and a decimal expansion is produced only on demand.
class FactoredInteger {
public:
    FactoredInteger() = default;

    // p must be prime, e >= 0; e = 0 yields 1.
    static FactoredInteger prime_power(std::int64_t p, std::int64_t e);

    const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    // Exponent of p in the factorization; 0 when p does not divide the value.
    std::int64_t exponent_of(std::int64_t p) const;

    FactoredInteger& operator*=(const FactoredInteger& rhs);
    friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::map<std::int64_t, std::int64_t> factors_;
};

bool is_prime(std::int64_t n);

// All primes <= n, ascending.  Backed by a cached sieve that grows on demand;
// safe for concurrent use (callers receive a copy of the cached prefix).
std::vector<std::int64_t> primes_upto(std::int64_t n);

// Largest e with p^e dividing k.  Requires p prime and k >= 1; in particular
// the valuation of 0 (which would be infinite) is rejected.
std::int64_t valuation(std::int64_t p, std::int64_t k);

// Factorization of n >= 1 by trial division.  Inputs at the scales this
// library targets stay small enough that nothing faster is warranted.
FactoredInteger factor(std::int64_t n);

// n! in factored form via the floor sums v_p(n!) = sum_k floor(n/p^k),
// never multiplying out the (astronomical) value.  n >= 0.
FactoredInteger factorial(std::int64_t n);

FactoredInteger pow(const FactoredInteger& a, std::int64_t e);  // e >= 0

// a / b when b divides a exactly; a non-dividing b raises a domain error,
// which is how identity violations upstream are surfaced.
FactoredInteger div_exact(const FactoredInteger& a, const FactoredInteger& b);

// Largest power of p dividing a (as a factored value; 1 when p is absent).
FactoredInteger p_part(const FactoredInteger& a, std::int64_t p);

// Divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Exact decimal expansion; the only place a factored value is multiplied out.
std::string to_decimal(const FactoredInteger& a);

// "2^4 * 3^2 * 5" style rendering; "1" for the empty factorization.
std::string to_factor_string(const FactoredInteger& a);

// The value as a machine integer; throws std::overflow_error when too large.
std::int64_t to_int64(const FactoredInteger& a);

namespace detail {

// p^e capped at a bound comfortably above every representable weight, so
// divisibility tests against a saturated power behave like the true power.
std::int64_t saturating_pow(std::int64_t p, std::int64_t e);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);  // throws std::overflow_error
std::int64_t checked_add(std::int64_t a, std::int64_t b);  // throws std::overflow_error

void require_prime(std::int64_t p);

constexpr std::int64_t kSaturated = std::int64_t{1} << 62;

}  // namespace detail

}  // namespace trk
