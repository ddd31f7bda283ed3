#include "trk/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace trk {

namespace {

// Shared, lazily grown sieve.  Guarded: the library promises concurrent
// callers pure-function behavior.
std::mutex g_prime_mutex;
std::vector<std::int64_t> g_primes = {2, 3, 5, 7, 11, 13};
std::int64_t g_sieved_upto = 13;

void grow_primes_locked(std::int64_t n) {
    if (n <= g_sieved_upto) return;
    std::int64_t limit = std::max<std::int64_t>(n, g_sieved_upto * 2);
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    g_primes.clear();
    for (std::int64_t k = 2; k <= limit; ++k) {
        if (composite[static_cast<std::size_t>(k)]) continue;
        g_primes.push_back(k);
        for (std::int64_t mult = k * k; mult <= limit; mult += k)
            composite[static_cast<std::size_t>(mult)] = true;
    }
    g_sieved_upto = limit;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_upto(std::int64_t n) {
    if (n < 2) return {};
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    grow_primes_locked(n);
    auto end = std::upper_bound(g_primes.begin(), g_primes.end(), n);
    return std::vector<std::int64_t>(g_primes.begin(), end);
}

namespace detail {

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("expected a prime, got " + std::to_string(p));
}

std::int64_t saturating_pow(std::int64_t p, std::int64_t e) {
    std::int64_t result = 1;
    for (std::int64_t k = 0; k < e; ++k) {
        if (result > kSaturated / p) return kSaturated;
        result *= p;
    }
    return result;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer product out of range");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer sum out of range");
    return out;
}

}  // namespace detail

FactoredInteger FactoredInteger::prime_power(std::int64_t p, std::int64_t e) {
    detail::require_prime(p);
    if (e < 0) throw std::domain_error("prime_power: negative exponent");
    FactoredInteger out;
    if (e > 0) out.factors_[p] = e;
    return out;
}

std::int64_t FactoredInteger::exponent_of(std::int64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& rhs) {
    for (const auto& [p, e] : rhs.factors_) factors_[p] += e;
    return *this;
}

std::int64_t valuation(std::int64_t p, std::int64_t k) {
    detail::require_prime(p);
    if (k < 1) throw std::domain_error("valuation: argument must be positive");
    std::int64_t v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return v;
}

FactoredInteger factor(std::int64_t n) {
    if (n < 1) throw std::domain_error("factor: argument must be positive");
    FactoredInteger out;
    for (std::int64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        std::int64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out *= FactoredInteger::prime_power(d, e);
    }
    if (n > 1) out *= FactoredInteger::prime_power(n, 1);
    return out;
}

FactoredInteger factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: argument must be nonnegative");
    FactoredInteger out;
    for (std::int64_t p : primes_upto(n)) {
        std::int64_t e = 0;
        for (std::int64_t power = p;; power *= p) {
            e += n / power;
            if (power > n / p) break;  // the next power would exceed n
        }
        out *= FactoredInteger::prime_power(p, e);
    }
    return out;
}

FactoredInteger pow(const FactoredInteger& a, std::int64_t e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    FactoredInteger out;
    for (const auto& [p, k] : a.factors()) out *= FactoredInteger::prime_power(p, k * e);
    return out;
}

FactoredInteger div_exact(const FactoredInteger& a, const FactoredInteger& b) {
    FactoredInteger out;
    for (const auto& [p, e] : b.factors())
        if (a.exponent_of(p) < e)
            throw std::domain_error("div_exact: quotient is not an integer");
    for (const auto& [p, e] : a.factors()) {
        std::int64_t keep = e - b.exponent_of(p);
        if (keep > 0) out *= FactoredInteger::prime_power(p, keep);
    }
    return out;
}

FactoredInteger p_part(const FactoredInteger& a, std::int64_t p) {
    detail::require_prime(p);
    return FactoredInteger::prime_power(p, a.exponent_of(p));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    FactoredInteger f = factor(n);
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : f.factors()) {
        std::size_t base = out.size();
        std::int64_t power = 1;
        for (std::int64_t k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t idx = 0; idx < base; ++idx) out.push_back(out[idx] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_decimal(const FactoredInteger& a) {
    // Little-endian limbs, base 10^9.
    constexpr std::int64_t kBase = 1'000'000'000;
    std::vector<std::int64_t> limbs{1};
    auto multiply_small = [&](std::int64_t mult) {
        std::int64_t carry = 0;
        for (auto& limb : limbs) {
            std::int64_t value = limb * mult + carry;
            limb = value % kBase;
            carry = value / kBase;
        }
        while (carry > 0) {
            limbs.push_back(carry % kBase);
            carry /= kBase;
        }
    };
    for (const auto& [p, e] : a.factors()) {
        // Multiply by p^e in chunks that keep limb * chunk inside 63 bits.
        std::int64_t remaining = e;
        while (remaining > 0) {
            std::int64_t chunk = 1;
            std::int64_t used = 0;
            while (used < remaining && chunk <= (kBase - 1) / p) {
                chunk *= p;
                ++used;
            }
            multiply_small(chunk);
            remaining -= used;
        }
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::string to_factor_string(const FactoredInteger& a) {
    if (a.is_one()) return "1";
    std::string out;
    for (const auto& [p, e] : a.factors()) {
        if (!out.empty()) out += " * ";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::int64_t to_int64(const FactoredInteger& a) {
    std::int64_t out = 1;
    for (const auto& [p, e] : a.factors())
        for (std::int64_t k = 0; k < e; ++k) out = detail::checked_mul(out, p);
    return out;
}

}  // namespace trk
