#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "trk/arith.hpp"

namespace {

// Schoolbook base-10 factorial, independent of the library's limb arithmetic.
std::string decimal_factorial(int n) {
    std::vector<int> digits{1};  // little-endian
    for (int k = 2; k <= n; ++k) {
        int carry = 0;
        for (int& d : digits) {
            const int value = d * k + carry;
            d = value % 10;
            carry = value / 10;
        }
        while (carry > 0) {
            digits.push_back(carry % 10);
            carry /= 10;
        }
    }
    std::string out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        out += static_cast<char>('0' + *it);
    return out;
}

}  // namespace

TEST_CASE("factor round-trips through to_decimal") {
    for (std::int64_t n = 1; n <= 2000; ++n)
        CHECK(trk::to_decimal(trk::factor(n)) == std::to_string(n));
    CHECK(trk::to_decimal(trk::factor(999'983)) == "999983");  // prime
    CHECK(trk::to_decimal(trk::factor(std::int64_t{1} << 40)) == "1099511627776");
    CHECK(trk::factor(1).is_one());
    CHECK_THROWS_AS(trk::factor(0), std::domain_error);
    CHECK_THROWS_AS(trk::factor(-5), std::domain_error);
}

TEST_CASE("factorial matches a schoolbook decimal oracle") {
    for (int n : {0, 1, 2, 5, 10, 25, 52, 100, 250, 500})
        CHECK(trk::to_decimal(trk::factorial(n)) == decimal_factorial(n));
    // Legendre exponents: v_2(100!) = 50 + 25 + 12 + 6 + 3 + 1.
    CHECK(trk::factorial(100).exponent_of(2) == 97);
    CHECK(trk::factorial(100).exponent_of(97) == 1);
    CHECK(trk::factorial(100).exponent_of(101) == 0);
    CHECK_THROWS_AS(trk::factorial(-1), std::domain_error);
}

TEST_CASE("prime list and primality") {
    CHECK(trk::primes_upto(1).empty());
    CHECK(trk::primes_upto(2) == std::vector<std::int64_t>{2});
    CHECK(trk::primes_upto(30) ==
          std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(trk::primes_upto(10'000).size() == 1229);
    CHECK(trk::primes_upto(104'729).size() == 10'000);  // 104729 is the 10000th prime
    CHECK(trk::primes_upto(10'000).size() == 1229);     // cached call agrees
    CHECK(!trk::is_prime(0));
    CHECK(!trk::is_prime(1));
    CHECK(trk::is_prime(2));
    CHECK(trk::is_prime(7919));
    CHECK(!trk::is_prime(7917));
    CHECK(trk::is_prime(1'000'003));
}

TEST_CASE("valuation and p_part") {
    CHECK(trk::valuation(2, 96) == 5);
    CHECK(trk::valuation(3, 96) == 1);
    CHECK(trk::valuation(5, 96) == 0);
    CHECK(trk::valuation(7, 1) == 0);
    CHECK(trk::to_decimal(trk::p_part(trk::factorial(10), 2)) == "256");
    CHECK(trk::p_part(trk::factor(35), 2).is_one());
}

TEST_CASE("prime powers, products, exact division") {
    CHECK(trk::FactoredInteger::prime_power(2, 0).is_one());
    CHECK(trk::to_decimal(trk::FactoredInteger::prime_power(3, 4)) == "81");
    CHECK_THROWS_AS(trk::FactoredInteger::prime_power(2, -1), std::domain_error);
    CHECK_THROWS_AS(trk::FactoredInteger::prime_power(4, 2), std::domain_error);

    CHECK(trk::factor(96) * trk::factor(25) == trk::factor(2400));
    CHECK(trk::div_exact(trk::factorial(6), trk::factor(16)) == trk::factor(45));
    CHECK_THROWS_AS(trk::div_exact(trk::factor(10), trk::factor(4)), std::domain_error);

    CHECK(trk::pow(trk::factor(12), 3) == trk::factor(1728));
    CHECK(trk::pow(trk::factor(12), 0).is_one());
    CHECK_THROWS_AS(trk::pow(trk::factor(12), -1), std::domain_error);
}

TEST_CASE("divisor lists") {
    CHECK(trk::divisors(1) == std::vector<std::int64_t>{1});
    CHECK(trk::divisors(60) ==
          std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
    CHECK(trk::divisors(7919) == std::vector<std::int64_t>{1, 7919});
}

TEST_CASE("rendering and extraction") {
    CHECK(trk::to_factor_string(trk::factor(720)) == "2^4 * 3^2 * 5");
    CHECK(trk::to_factor_string(trk::FactoredInteger{}) == "1");
    CHECK(trk::to_int64(trk::factor(123'456'789)) == 123'456'789);
    CHECK(trk::to_int64(trk::factorial(20)) == 2'432'902'008'176'640'000);
    CHECK_THROWS_AS(trk::to_int64(trk::factorial(30)), std::overflow_error);
}

TEST_CASE("overflow guards") {
    constexpr std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(trk::detail::checked_mul(big, 4), std::overflow_error);
    CHECK_THROWS_AS(trk::detail::checked_add(big, big), std::overflow_error);
    CHECK(trk::detail::checked_mul(-2, std::int64_t{1} << 40) == -(std::int64_t{1} << 41));
    CHECK(trk::detail::saturating_pow(2, 100) == trk::detail::kSaturated);
    CHECK(trk::detail::saturating_pow(2, 10) == 1024);
    CHECK_THROWS_AS(trk::detail::require_prime(6), std::domain_error);
}
