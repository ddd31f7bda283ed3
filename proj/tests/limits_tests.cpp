#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "trk/arith.hpp"
#include "trk/limits.hpp"
#include "trk/repn.hpp"

TEST_CASE("limit term orders at m = 2, i = 2") {
    const trk::AbelianGroupInfo middle = trk::limr_middle(2, 2, trk::Parity::odd);
    const trk::AbelianGroupInfo left = trk::limr_left(2, 2, trk::Parity::odd);
    const trk::AbelianGroupInfo coker = trk::limr_vm_coker(2, 2, trk::Parity::odd);
    CHECK(trk::to_decimal(middle.torsion_order) == "96");
    CHECK(trk::to_decimal(left.torsion_order) == "4");
    CHECK(trk::to_decimal(coker.torsion_order) == "24");
    CHECK(middle.rank == 0);
    CHECK(!middle.structure_known());

    CHECK(trk::limr_middle(2, 2, trk::Parity::even) == trk::free_group(2));
    CHECK(trk::limr_left(2, 2, trk::Parity::even) == trk::free_group(1));
    CHECK(trk::limr_vm_coker(2, 2, trk::Parity::even) == trk::free_group(1));
}

TEST_CASE("limit term orders across a grid") {
    // middle = (mi)! (i!)^m, left = (i!)^2, cokernel = their exact quotient.
    for (std::int64_t m = 1; m <= 5; ++m)
        for (std::int64_t i = 0; i <= 5; ++i) {
            const trk::FactoredInteger middle_order =
                trk::factorial(m * i) * trk::pow(trk::factorial(i), m);
            const trk::FactoredInteger left_order = trk::pow(trk::factorial(i), 2);
            CHECK(trk::limr_middle(m, i, trk::Parity::odd).torsion_order == middle_order);
            CHECK(trk::limr_left(m, i, trk::Parity::odd).torsion_order == left_order);
            CHECK(trk::limr_vm_coker(m, i, trk::Parity::odd).torsion_order ==
                  trk::div_exact(middle_order, left_order));
            CHECK(trk::limr_vm_coker(m, i, trk::Parity::even) == trk::free_group(m - 1));
        }
    CHECK_THROWS_AS(trk::limr_middle(0, 2, trk::Parity::odd), std::domain_error);
    CHECK_THROWS_AS(trk::limr_left(2, -1, trk::Parity::odd), std::domain_error);
}

TEST_CASE("single decomposition entries are frozen") {
    const trk::LimDecomposition middle = trk::limr_middle_decomposition(2, 2, 1);
    REQUIRE(middle.entries.size() == 1);
    CHECK(middle.entries[0] == trk::LimEntry{1, 2, 2, 0, 1});
    CHECK(middle.level_shift == 0);
    CHECK(middle.total_length() == 1);

    const trk::LimDecomposition left = trk::limr_left_decomposition(3, 3, 2);
    CHECK(left.level_shift == 1);
    CHECK(left.total_length() == 0);
    std::vector<std::int64_t> js;
    for (const trk::LimEntry& entry : left.entries) js.push_back(entry.j);
    CHECK(js == std::vector<std::int64_t>{1, 2, 4, 5});
}

TEST_CASE("decomposition entries satisfy the stage inequalities") {
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t m = 1; m <= 4; ++m)
            for (std::int64_t i = 0; i <= 5; ++i) {
                const std::int64_t mi = m * i;
                for (const trk::LimDecomposition& dec :
                     {trk::limr_middle_decomposition(p, m, i),
                      trk::limr_left_decomposition(p, m, i)}) {
                    for (const trk::LimEntry& entry : dec.entries) {
                        const std::int64_t lower =
                            trk::detail::saturating_pow(p, entry.stage - 1) * entry.j;
                        CHECK(lower <= mi);
                        CHECK(trk::detail::saturating_pow(p, entry.stage) * entry.j > mi);
                        CHECK(entry.level == entry.stage - dec.level_shift);
                        CHECK(entry.d == trk::truncation_index(m, lower));
                        CHECK(entry.length >= 0);
                    }
                }
            }
}

TEST_CASE("per-prime totals reproduce the closed-form valuations") {
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t m = 1; m <= 4; ++m)
            for (std::int64_t i = 0; i <= 5; ++i) {
                const trk::FactoredInteger middle_order =
                    trk::factorial(m * i) * trk::pow(trk::factorial(i), m);
                const trk::FactoredInteger left_order = trk::pow(trk::factorial(i), 2);
                CHECK(trk::limr_middle_decomposition(p, m, i).total_length() ==
                      middle_order.exponent_of(p));
                CHECK(trk::limr_left_decomposition(p, m, i).total_length() ==
                      left_order.exponent_of(p));
            }
}
