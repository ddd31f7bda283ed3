#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "trk/arith.hpp"
#include "trk/repn.hpp"

TEST_CASE("weights are validated and kept sorted") {
    const trk::Rep rep{{3, 1, 2, 2}};
    CHECK(rep.weights() == std::vector<std::int64_t>{1, 2, 2, 3});
    CHECK(trk::dim(rep) == 4);
    CHECK_THROWS_AS(trk::Rep{{-1}}, std::invalid_argument);
    CHECK_THROWS_AS(trk::Rep{{std::int64_t{2'000'000'000'000'000}}}, std::invalid_argument);
}

TEST_CASE("fixed dimensions count divisible weights") {
    const trk::Rep rep{{1, 2, 2, 3, 6}};
    CHECK(trk::fixed_dim(rep, 1) == 5);
    CHECK(trk::fixed_dim(rep, 2) == 3);
    CHECK(trk::fixed_dim(rep, 3) == 2);
    CHECK(trk::fixed_dim(rep, 6) == 1);
    CHECK(trk::fixed_dim(rep, 7) == 0);
    CHECK_THROWS_AS(trk::fixed_dim(rep, 0), std::domain_error);
    // Weight 0 is divisible by everything.
    CHECK(trk::fixed_dim(trk::Rep{{0, 5}}, 9) == 1);
}

TEST_CASE("restriction divides the kept weights") {
    const trk::Rep rep{{2, 4, 5}};
    CHECK(trk::restrict_to(rep, 2).weights() == std::vector<std::int64_t>{1, 2});
    CHECK(trk::restrict_to(rep, 5).weights() == std::vector<std::int64_t>{1});
    CHECK(trk::restrict_to(rep, 7).weights().empty());
    CHECK_THROWS_AS(trk::restrict_to(rep, 0), std::domain_error);
}

TEST_CASE("standard family: explicit and index-only models agree") {
    CHECK(trk::standard_rep(4).weights() == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(trk::standard_rep(0).weights().empty());
    CHECK_THROWS_AS(trk::standard_rep(-1), std::domain_error);

    for (std::int64_t d = 0; d <= 50; ++d) {
        const trk::Rep full = trk::standard_rep(d);
        const trk::StandardRep indexed{d};
        CHECK(trk::dim(full) == trk::dim(indexed));
        for (std::int64_t e = 1; e <= 12; ++e) {
            CHECK(trk::fixed_dim(full, e) == trk::fixed_dim(indexed, e));
            CHECK(trk::dim(trk::restrict_to(full, e)) ==
                  trk::dim(trk::restrict_to(indexed, e)));
        }
    }
}

TEST_CASE("truncation index") {
    CHECK(trk::truncation_index(2, 60) == 29);
    CHECK(trk::truncation_index(1, 7) == 6);
    CHECK(trk::truncation_index(3, 1) == 0);
    CHECK(trk::truncation_index(3, 3) == 0);
    CHECK(trk::truncation_index(3, 4) == 1);
    CHECK_THROWS_AS(trk::truncation_index(0, 5), std::domain_error);
    CHECK_THROWS_AS(trk::truncation_index(2, 0), std::domain_error);
}

TEST_CASE("stable stage satisfies its defining inequality") {
    CHECK(trk::stable_stage(2, 2, 2, 1) == 3);
    CHECK(trk::stable_stage(3, 3, 2, 1) == 2);
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t m = 1; m <= 4; ++m)
            for (std::int64_t i = 1; i <= 6; ++i)
                for (std::int64_t j = 1; j <= m * i; ++j) {
                    const std::int64_t s = trk::stable_stage(p, m, i, j);
                    CHECK(trk::detail::saturating_pow(p, s - 1) * j <= m * i);
                    CHECK(trk::detail::saturating_pow(p, s) * j > m * i);
                }
    CHECK_THROWS_AS(trk::stable_stage(2, 2, 2, 0), std::domain_error);
    CHECK_THROWS_AS(trk::stable_stage(2, 2, 2, 5), std::domain_error);
    CHECK_THROWS_AS(trk::stable_stage(4, 2, 2, 1), std::domain_error);
}

TEST_CASE("congruence offsets") {
    CHECK(trk::congruence_offset(2, trk::standard_rep(1)) == -1);
    CHECK(trk::congruence_offset(3, trk::standard_rep(3)) == -12);
    CHECK(trk::congruence_offset(2, trk::Rep{{2, 4}}) == -10);
    CHECK(trk::congruence_offset(5, trk::Rep{}) == 0);
    CHECK_THROWS_AS(trk::congruence_offset(2, trk::Rep{{0}}), std::domain_error);
    CHECK_THROWS_AS(trk::congruence_offset(6, trk::standard_rep(1)), std::domain_error);
}

TEST_CASE("rep grammar accepts the three forms") {
    CHECK(trk::parse_rep("0").weights().empty());
    CHECK(trk::parse_rep("d:0").weights().empty());
    CHECK(trk::parse_rep("d:4").weights() == trk::standard_rep(4).weights());
    CHECK(trk::parse_rep("w:1,2,2").weights() == std::vector<std::int64_t>{1, 2, 2});
    CHECK(trk::parse_rep("w:7").weights() == std::vector<std::int64_t>{7});
    CHECK(trk::parse_rep("w:5,1").weights() == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("rep grammar rejects everything else") {
    for (const char* bad : {"", "1", "w:", "w:1,", "w:,1", "w:1,-2", "d:-1", "d:x", "x:3",
                            "w:2000000000", "d:2000000"})
        CHECK_THROWS_AS(trk::parse_rep(bad), std::invalid_argument);
}

TEST_CASE("rep rendering round-trips") {
    for (const char* text : {"0", "d:3", "w:1,2,4", "w:0,0,5"}) {
        const trk::Rep rep = trk::parse_rep(text);
        CHECK(trk::to_string(rep) == text);
        CHECK(trk::parse_rep(trk::to_string(rep)).weights() == rep.weights());
    }
    // The standard family is recognized from explicit weights.
    CHECK(trk::to_string(trk::Rep{{1, 2, 3}}) == "d:3");
}
