#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "trk/arith.hpp"
#include "trk/integral.hpp"
#include "trk/repn.hpp"

namespace {

// First multiple of m at which both stabilization criteria hold, by scan.
std::int64_t scan_stable(std::int64_t m, std::int64_t q) {
    const std::int64_t i = q / 2;  // q >= 0 in this oracle
    const std::int64_t eps = q % 2;
    for (std::int64_t r = m;; r += m)
        if (trk::stable_iso_middle(m, i, eps, r) && trk::stable_iso_left(m, i, eps, r))
            return r;
}

}  // namespace

TEST_CASE("even ranks count divisor matches") {
    CHECK(trk::integral_rank(6, 0, trk::standard_rep(5)) == 1);
    CHECK(trk::integral_rank(4, 2, trk::Rep{{2}}) == 2);
    CHECK(trk::integral_rank(6, 0, trk::Rep{}) == 4);
    CHECK(trk::integral_rank(6, 3, trk::Rep{}) == 0);  // odd degrees never match
    CHECK_THROWS_AS(trk::integral_rank(0, 0, trk::Rep{}), std::domain_error);
}

TEST_CASE("odd orders assemble gamma factors over all primes") {
    CHECK(trk::to_decimal(trk::integral_odd_order(1, 5, trk::Rep{})) == "5");
    CHECK(trk::to_decimal(trk::integral_odd_order(2, 2, trk::Rep{})) == "8");
    // Level one is the cyclic group of order i for every i.
    for (std::int64_t i = 1; i <= 40; ++i)
        CHECK(trk::to_decimal(trk::integral_odd_order(1, i, trk::Rep{})) ==
              std::to_string(i));
    CHECK_THROWS_AS(trk::integral_odd_order(0, 2, trk::Rep{}), std::domain_error);
}

TEST_CASE("divisor splitting identity") {
    CHECK(trk::divisor_identity_holds(12, 2, 2, trk::standard_rep(6)));
    CHECK(trk::divisor_identity_holds(12, 3, 4, trk::standard_rep(6)));
    for (std::int64_t r : {2, 6, 8, 30, 36})
        for (std::int64_t q : {0, 2, 4, 6})
            CHECK(trk::divisor_identity_holds(r, 2, q, trk::standard_rep(7)));
    CHECK_THROWS_AS(trk::divisor_identity_holds(9, 2, 2, trk::Rep{}), std::domain_error);
}

TEST_CASE("stabilization criteria at explicit levels") {
    CHECK(trk::stable_iso_middle(2, 2, 0, 60));
    CHECK(trk::stable_iso_left(2, 2, 0, 60));
    CHECK(!trk::stable_iso_middle(2, 2, 0, 12));  // 5 divides nothing in 12
    CHECK_THROWS_AS(trk::stable_iso_left(2, 2, 0, 15), std::domain_error);
    CHECK_THROWS_AS(trk::stable_iso_middle(2, 2, 2, 60), std::domain_error);
}

TEST_CASE("smallest stable level: frozen values and scan oracle") {
    CHECK(trk::find_stable_level(2, 4) == 60);
    CHECK(trk::find_stable_level(1, 0) == 1);
    CHECK(trk::find_stable_level(4, 12) == 80'313'433'200);
    CHECK(trk::find_stable_level(3, -1) == 3);

    const std::vector<std::int64_t> degree_row = {1,  1,  2,  2,  6,  6, 12,
                                                  12, 60, 60, 60, 60, 420};
    for (std::int64_t q = 0; q <= 12; ++q)
        CHECK(trk::find_stable_level(1, q) == degree_row[static_cast<std::size_t>(q)]);

    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t q = 0; q <= 8; ++q)
            CHECK(trk::find_stable_level(m, q) == scan_stable(m, q));
}

TEST_CASE("index-only and explicit standard representations agree") {
    for (std::int64_t d : {0, 1, 2, 5, 12, 30})
        for (std::int64_t r : {1, 2, 6, 12, 36, 60}) {
            const trk::Rep full = trk::standard_rep(d);
            const trk::StandardRep indexed{d};
            for (std::int64_t q : {0, 2, 4, 6, 10})
                CHECK(trk::integral_rank(r, q, full) == trk::integral_rank(r, q, indexed));
            for (std::int64_t i : {1, 2, 5, 8})
                CHECK(trk::integral_odd_order(r, i, full) ==
                      trk::integral_odd_order(r, i, indexed));
        }
}
