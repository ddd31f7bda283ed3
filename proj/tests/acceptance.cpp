// Acceptance gate: the ten contract criteria, one line of output each.
// Exits with the number of failed criteria.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "trk/verify.hpp"

int main() {
    using trk::verify::Check;
    struct Criterion {
        std::string what;
        Check check;
    };

    const std::vector<Criterion> criteria = {
        {"closed form p^(n(n-1)/2) * i^n for p in {2,3,5,7}, 0 <= n <= 6, 1 <= i <= 30",
         trk::verify::closed_form_check({2, 3, 5, 7}, 6, 30)},
        {"even K-groups have order (mi)! (i!)^(m-2) and odd ones rank m-1, m <= 8, i <= 12",
         trk::verify::k_order_check(8, 12)},
        {"dual-numbers rows: K_2 = Z/2, K_4 = Z/8 + Z/3, K_6 = Z/2 + Z/2 + Z/4 + Z/9 + Z/5",
         trk::verify::dual_golden_check()},
        {"odd-primary multiplicities: r1 + 2 r2 = floor(2i/p) and the band table, p < 60",
         trk::verify::odd_torsion_check(59)},
        {"mod-p length differences equal even ranks, p in {2,3,5}, n <= 4, standard and "
         "random weights, -2 <= i <= 40",
         trk::verify::bockstein_check({2, 3, 5}, 4, 6, 100, -2, 40, 1)},
        {"divisor splitting of even ranks on 1000 random instances with level <= 5000",
         trk::verify::divisor_identity_check(1000, 5000, 2)},
        {"limit decomposition lengths total the closed-form valuations, p <= 13, m <= 4, "
         "i <= 10",
         trk::verify::length_sum_check(13, 4, 10)},
        {"antidiagonal order ratios equal the level recursion factor, p in {2,3}, n <= 4",
         trk::verify::borel_ratio_sweep({2, 3}, 2, 4, 4, 20)},
        {"stable levels are minimal and the stabilized values match the limits, m <= 4, "
         "q <= 12",
         trk::verify::stabilization_check(4, 12)},
        {"degree-two K-groups equal m! for m <= 10", trk::verify::degree_two_check(10)},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (criterion.check.pass) {
            std::cout << "PASS " << criterion.what << '\n';
        } else {
            std::cout << "FAIL " << criterion.what << " [" << criterion.check.name
                      << ": " << criterion.check.detail << "]\n";
            ++failures;
        }
    }
    std::cout << criteria.size() - failures << "/" << criteria.size()
              << " acceptance criteria satisfied\n";
    return failures;
}
