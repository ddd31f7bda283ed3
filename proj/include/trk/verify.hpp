#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-verification sweeps: every known identity tying the computed groups
// together, runnable from the CLI (`verify`) and reused by the acceptance
// suite.  Each check is exact — no tolerances anywhere.
namespace trk::verify {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;  // first failure, empty while passing
};

// Pinned single values and small golden tables.
std::vector<Check> golden_checks();

// Identity sweeps; randomized draws come from the given seed.
std::vector<Check> identity_checks(std::uint64_t seed);

// ---- the individual sweeps, parameterized ----

// tr_odd_order(p, n, i, 0) == p^(n(n-1)/2) * i^n over the whole grid.
Check closed_form_check(const std::vector<std::int64_t>& ps, std::int64_t n_max,
                        std::int64_t i_max);

// k_group(m, 2i) order equals (mi)! (i!)^(m-2), equals the exact quotient of
// the two limit-term orders; odd degrees are free of rank m-1.
Check k_order_check(std::int64_t m_max, std::int64_t i_max);

// The dual-numbers golden rows: K_2 = Z/2, K_4 = Z/8 + Z/3,
// K_6 = Z/2 + Z/2 + Z/4 + Z/9 + Z/5, with matching orders 2, 24, 720.
Check dual_golden_check();

// dual_odd_part consistency for every odd p <= p_max and 1 <= i < p^2/2:
// r1 + 2 r2 = floor(2i/p), and the known bands ((0,0) for i <= (p-1)/2,
// (1,0) up to i < p, (0,1) at i = p, (2,0) at i = p+1 for p >= 5, Z/9 at
// p = 3, i = 4).
Check odd_torsion_check(std::int64_t p_max);

// modp_length(p, n, 2i, lambda) - modp_length(p, n, 2i-1, lambda)
// == tr_even_rank(p, n, i, lambda) over a deterministic grid of standard
// representations plus seeded random positive-weight representations.
Check bockstein_check(const std::vector<std::int64_t>& ps, std::int64_t n_max,
                      std::int64_t d_max, std::int64_t random_reps, std::int64_t i_min,
                      std::int64_t i_max, std::uint64_t seed);

// divisor_identity_holds on seeded random instances with level <= r_max.
Check divisor_identity_check(std::int64_t samples, std::int64_t r_max, std::uint64_t seed);

// Middle and left decomposition length totals equal the closed-form
// valuations v_p((mi)! (i!)^m) and v_p((i!)^2).
Check length_sum_check(std::int64_t p_max, std::int64_t m_max, std::int64_t i_max);

// borel_ratio_check across the grid of standard representations.
Check borel_ratio_sweep(const std::vector<std::int64_t>& ps, std::int64_t n_min,
                        std::int64_t n_max, std::int64_t d_max, std::int64_t i_max);

// find_stable_level minimality and level-independence of the stabilized
// integral ranks and odd orders (levels r, 2r, 3r, 4r; degrees q and q-1),
// including agreement with the closed-form limit values.
Check stabilization_check(std::int64_t m_max, std::int64_t q_max);

// k_group(m, 2) == m! (the classical degree-2 computation).
Check degree_two_check(std::int64_t m_max);

}  // namespace trk::verify
