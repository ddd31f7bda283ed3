#include "trk/verify.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "trk/arith.hpp"
#include "trk/integral.hpp"
#include "trk/kgroups.hpp"
#include "trk/limits.hpp"
#include "trk/repn.hpp"
#include "trk/trgroups.hpp"

namespace trk::verify {

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream out;
    ((out << args), ...);
    return out.str();
}

// Records the first failing expectation of a sweep; later ones are dropped so
// the detail always points at the earliest counterexample.
class Collector {
public:
    explicit Collector(std::string name) { check_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        if (ok || !check_.pass) return;
        check_.pass = false;
        check_.detail = describe();
    }

    Check take() && { return std::move(check_); }

private:
    Check check_;
};

Check guarded(std::string name, const std::function<void(Collector&)>& body) {
    Collector collector(std::move(name));
    try {
        body(collector);
    } catch (const std::exception& e) {
        collector.expect(false, [&] { return cat("unexpected exception: ", e.what()); });
    }
    return std::move(collector).take();
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rep random_rep(std::mt19937_64& rng, std::int64_t max_count, std::int64_t min_weight,
               std::int64_t max_weight) {
    std::vector<std::int64_t> weights;
    const std::int64_t count = draw(rng, 0, max_count);
    weights.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) weights.push_back(draw(rng, min_weight, max_weight));
    return Rep{std::move(weights)};
}

}  // namespace

Check closed_form_check(const std::vector<std::int64_t>& ps, std::int64_t n_max,
                        std::int64_t i_max) {
    return guarded("closed-form-trivial-rep", [&](Collector& c) {
        const Rep trivial;
        for (std::int64_t p : ps)
            for (std::int64_t n = 0; n <= n_max; ++n)
                for (std::int64_t i = 1; i <= i_max; ++i) {
                    const FactoredInteger got = tr_odd_order(p, n, i, trivial);
                    const FactoredInteger want =
                        FactoredInteger::prime_power(p, n * (n - 1) / 2) * pow(factor(i), n);
                    c.expect(got == want, [&] {
                        return cat("p=", p, " n=", n, " i=", i, ": got ", to_factor_string(got),
                                   ", want ", to_factor_string(want));
                    });
                }
    });
}

Check k_order_check(std::int64_t m_max, std::int64_t i_max) {
    return guarded("k-orders-vs-limits", [&](Collector& c) {
        for (std::int64_t m = 1; m <= m_max; ++m)
            for (std::int64_t i = 0; i <= i_max; ++i) {
                const AbelianGroupInfo even = k_group(m, 2 * i);
                const AbelianGroupInfo coker = limr_vm_coker(m, i, Parity::odd);
                c.expect(even.rank == 0 && even.torsion_order == coker.torsion_order, [&] {
                    return cat("m=", m, " i=", i, ": even group ", to_string(even),
                               " vs transfer cokernel ", to_string(coker));
                });
                if (m >= 2) {
                    const FactoredInteger direct =
                        factorial(m * i) * pow(factorial(i), m - 2);
                    c.expect(even.torsion_order == direct, [&] {
                        return cat("m=", m, " i=", i, ": order ",
                                   to_decimal(even.torsion_order), " != (mi)! (i!)^(m-2) = ",
                                   to_decimal(direct));
                    });
                } else {
                    c.expect(even.is_zero(),
                             [&] { return cat("m=1 i=", i, ": expected the zero group"); });
                }
                const AbelianGroupInfo odd = k_group(m, 2 * i + 1);
                c.expect(odd == free_group(m - 1), [&] {
                    return cat("m=", m, " q=", 2 * i + 1, ": got ", to_string(odd),
                               ", want Z^", m - 1);
                });
            }
    });
}

Check dual_golden_check() {
    return guarded("dual-numbers-low-degrees", [](Collector& c) {
        const AbelianGroupInfo k2{0, factor(2), std::vector<CyclicFactor>{{2, 1}}};
        const AbelianGroupInfo k4{0, factor(24), std::vector<CyclicFactor>{{2, 3}, {3, 1}}};
        const AbelianGroupInfo k6{
            0, factor(720),
            std::vector<CyclicFactor>{{2, 1}, {2, 1}, {2, 2}, {3, 2}, {5, 1}}};
        c.expect(k_group(2, 2) == k2,
                 [&] { return cat("q=2: got ", to_string(k_group(2, 2))); });
        c.expect(k_group(2, 4) == k4,
                 [&] { return cat("q=4: got ", to_string(k_group(2, 4))); });
        c.expect(k_group(2, 6) == k6,
                 [&] { return cat("q=6: got ", to_string(k_group(2, 6))); });
        for (std::int64_t i = 1; i <= 3; ++i) {
            const DualStructure dual = dual_structure(i);
            c.expect(dual.order == factorial(2 * i),
                     [&] { return cat("i=", i, ": order != (2i)!"); });
            FactoredInteger product;
            bool all_full = true;
            for (const DualComponent& component : dual.components) {
                product *= component.p_component_order;
                all_full = all_full && component.full;
            }
            c.expect(all_full && product == dual.order, [&] {
                return cat("i=", i, ": components multiply to ", to_decimal(product), " of ",
                           to_decimal(dual.order));
            });
        }
    });
}

Check odd_torsion_check(std::int64_t p_max) {
    return guarded("odd-primary-dual-bands", [&](Collector& c) {
        for (std::int64_t p : primes_upto(p_max)) {
            if (p == 2) continue;
            for (std::int64_t i = 1; 2 * i < p * p; ++i) {
                const auto [r1, r2] = dual_odd_part(p, i);
                c.expect(r1 >= 0 && r2 >= 0 && r1 + 2 * r2 == 2 * i / p, [&] {
                    return cat("p=", p, " i=", i, ": (", r1, ",", r2,
                               ") misses r1 + 2 r2 = floor(2i/p) = ", 2 * i / p);
                });
                const bool band_ok =
                    i <= (p - 1) / 2   ? r1 == 0 && r2 == 0
                    : i < p            ? r1 == 1 && r2 == 0
                    : i == p           ? r1 == 0 && r2 == 1
                    : i == p + 1       ? (p >= 5 ? r1 == 2 && r2 == 0 : r1 == 0 && r2 == 1)
                                       : true;
                c.expect(band_ok, [&] {
                    return cat("p=", p, " i=", i, ": (", r1, ",", r2, ") in the wrong band");
                });
            }
        }
    });
}

Check bockstein_check(const std::vector<std::int64_t>& ps, std::int64_t n_max,
                      std::int64_t d_max, std::int64_t random_reps, std::int64_t i_min,
                      std::int64_t i_max, std::uint64_t seed) {
    return guarded("bockstein-length-rank", [&](Collector& c) {
        std::mt19937_64 rng(seed);
        std::vector<Rep> reps;
        for (std::int64_t d = 1; d <= d_max; ++d) reps.push_back(standard_rep(d));
        for (std::int64_t k = 0; k < random_reps; ++k)
            reps.push_back(random_rep(rng, 8, 1, 20));
        for (std::int64_t p : ps)
            for (std::int64_t n = 1; n <= n_max; ++n)
                for (const Rep& rep : reps)
                    for (std::int64_t i = i_min; i <= i_max; ++i) {
                        const std::int64_t jump =
                            modp_length(p, n, 2 * i, rep) - modp_length(p, n, 2 * i - 1, rep);
                        const std::int64_t rank = tr_even_rank(p, n, i, rep);
                        c.expect(jump == rank, [&] {
                            return cat("p=", p, " n=", n, " i=", i, " rep=", to_string(rep),
                                       ": length jump ", jump, " != rank ", rank);
                        });
                    }
    });
}

Check divisor_identity_check(std::int64_t samples, std::int64_t r_max, std::uint64_t seed) {
    return guarded("divisor-splitting", [&](Collector& c) {
        std::mt19937_64 rng(seed);
        for (std::int64_t k = 0; k < samples; ++k) {
            const std::int64_t r = draw(rng, 2, r_max);
            const FactoredInteger r_factored = factor(r);
            const auto& primes = r_factored.factors();
            std::int64_t pick = draw(rng, 0, static_cast<std::int64_t>(primes.size()) - 1);
            std::int64_t p = 0;
            for (const auto& [prime, e] : primes)
                if (pick-- == 0) p = prime;
            const Rep rep = random_rep(rng, 8, 0, 20);
            std::int64_t q = 2 * draw(rng, 0, dim(rep));
            if (draw(rng, 0, 3) == 0) ++q;  // odd degrees: all three counts vanish
            c.expect(divisor_identity_holds(r, p, q, rep), [&] {
                return cat("r=", r, " p=", p, " q=", q, " rep=", to_string(rep));
            });
        }
    });
}

Check length_sum_check(std::int64_t p_max, std::int64_t m_max, std::int64_t i_max) {
    return guarded("limit-length-totals", [&](Collector& c) {
        for (std::int64_t p : primes_upto(p_max))
            for (std::int64_t m = 1; m <= m_max; ++m)
                for (std::int64_t i = 0; i <= i_max; ++i) {
                    const FactoredInteger middle = factorial(m * i) * pow(factorial(i), m);
                    const FactoredInteger left = pow(factorial(i), 2);
                    const std::int64_t middle_total =
                        limr_middle_decomposition(p, m, i).total_length();
                    const std::int64_t left_total =
                        limr_left_decomposition(p, m, i).total_length();
                    c.expect(middle_total == middle.exponent_of(p), [&] {
                        return cat("middle p=", p, " m=", m, " i=", i, ": total ", middle_total,
                                   " != ", middle.exponent_of(p));
                    });
                    c.expect(left_total == left.exponent_of(p), [&] {
                        return cat("left p=", p, " m=", m, " i=", i, ": total ", left_total,
                                   " != ", left.exponent_of(p));
                    });
                }
    });
}

Check borel_ratio_sweep(const std::vector<std::int64_t>& ps, std::int64_t n_min,
                        std::int64_t n_max, std::int64_t d_max, std::int64_t i_max) {
    return guarded("antidiagonal-order-ratio", [&](Collector& c) {
        for (std::int64_t p : ps)
            for (std::int64_t n = n_min; n <= n_max; ++n)
                for (std::int64_t d = 0; d <= d_max; ++d) {
                    const Rep rep = standard_rep(d);
                    for (std::int64_t i = d + 2; i <= i_max; ++i)
                        c.expect(borel_ratio_check(p, n, i, rep), [&] {
                            return cat("p=", p, " n=", n, " d=", d, " i=", i);
                        });
                }
    });
}

Check stabilization_check(std::int64_t m_max, std::int64_t q_max) {
    return guarded("stable-level", [&](Collector& c) {
        constexpr std::int64_t kScanBound = 200'000;
        for (std::int64_t m = 1; m <= m_max; ++m)
            for (std::int64_t q = 0; q <= q_max; ++q) {
                const std::int64_t level = find_stable_level(m, q);
                const std::int64_t i = q / 2;
                const std::int64_t eps = q % 2;
                c.expect(level >= 1 && level % m == 0, [&] {
                    return cat("m=", m, " q=", q, ": level ", level, " is not a multiple of m");
                });
                auto stable_at = [&](std::int64_t r) {
                    return stable_iso_middle(m, i, eps, r) && stable_iso_left(m, i, eps, r);
                };
                c.expect(stable_at(level), [&] {
                    return cat("m=", m, " q=", q, ": criteria fail at the reported level ",
                               level);
                });
                const FactoredInteger level_factored = factor(level);
                for (const auto& [p, e] : level_factored.factors()) {
                    const std::int64_t below = level / p;
                    if (below % m != 0) continue;
                    c.expect(!stable_at(below), [&] {
                        return cat("m=", m, " q=", q, ": level ", below,
                                   " already satisfies the criteria");
                    });
                }
                if (level <= kScanBound)
                    for (std::int64_t r = m; r < level; r += m)
                        c.expect(!stable_at(r), [&] {
                            return cat("m=", m, " q=", q, ": smaller multiple ", r,
                                       " already satisfies the criteria");
                        });
                // Stabilized values: identical at level, 2 level, ..., and equal
                // to the closed-form limits in degrees q and q - 1.
                const std::int64_t even_q = q - eps;
                const std::int64_t odd_i = i + eps;
                const FactoredInteger middle_odd =
                    factorial(m * odd_i) * pow(factorial(odd_i), m);
                const FactoredInteger left_odd = pow(factorial(odd_i), 2);
                for (std::int64_t lev = 1; lev <= 4; ++lev) {
                    const std::int64_t r = detail::checked_mul(lev, level);
                    const StandardRep rep{truncation_index(m, r)};
                    c.expect(integral_rank(r, even_q, rep) == m, [&] {
                        return cat("m=", m, " q=", q, " r=", r, ": middle rank ",
                                   integral_rank(r, even_q, rep), " != ", m);
                    });
                    c.expect(integral_rank(r / m, even_q, rep) == 1, [&] {
                        return cat("m=", m, " q=", q, " r=", r, ": left rank != 1");
                    });
                    c.expect(integral_odd_order(r, odd_i, rep) == middle_odd, [&] {
                        return cat("m=", m, " q=", q, " r=", r, ": middle order ",
                                   to_decimal(integral_odd_order(r, odd_i, rep)), " != ",
                                   to_decimal(middle_odd));
                    });
                    c.expect(integral_odd_order(r / m, odd_i, rep) == left_odd, [&] {
                        return cat("m=", m, " q=", q, " r=", r, ": left order ",
                                   to_decimal(integral_odd_order(r / m, odd_i, rep)), " != ",
                                   to_decimal(left_odd));
                    });
                }
            }
    });
}

Check degree_two_check(std::int64_t m_max) {
    return guarded("degree-two-factorial", [&](Collector& c) {
        for (std::int64_t m = 1; m <= m_max; ++m) {
            const AbelianGroupInfo g = k_group(m, 2);
            c.expect(g.rank == 0 && g.torsion_order == factorial(m), [&] {
                return cat("m=", m, ": got ", to_string(g), ", want order m! = ",
                           to_decimal(factorial(m)));
            });
        }
    });
}

std::vector<Check> golden_checks() {
    std::vector<Check> out;

    out.push_back(guarded("golden-level-one", [](Collector& c) {
        const Rep trivial;
        c.expect(tr1_group(0, trivial) == free_group(1),
                 [] { return std::string("degree 0 is not Z"); });
        c.expect(tr1_group(9, trivial) == cyclic_group(5),
                 [] { return std::string("degree 9 is not Z/5"); });
        c.expect(tr1_group(1, trivial).is_zero(),
                 [] { return std::string("degree 1 is not zero"); });
        c.expect(tr1_group(4, trivial).is_zero(),
                 [] { return std::string("degree 4 is not zero"); });
        c.expect(tr1_group(-3, trivial).is_zero(),
                 [] { return std::string("degree -3 is not zero"); });
        c.expect(tr1_group(2, standard_rep(1)) == free_group(1),
                 [] { return std::string("shifted degree 0 is not Z"); });
        c.expect(tr1_group(7, standard_rep(1)) == cyclic_group(3),
                 [] { return std::string("shifted degree 5 is not Z/3"); });
        for (std::int64_t i = 2; i <= 20; ++i)
            c.expect(tr1_group(2 * i - 1, trivial) == cyclic_group(i),
                     [&] { return cat("degree ", 2 * i - 1, " is not Z/", i); });
    }));

    out.push_back(guarded("golden-odd-order", [](Collector& c) {
        const FactoredInteger order = tr_odd_order(2, 3, 3, standard_rep(1));
        c.expect(to_decimal(order) == "144",
                 [&] { return cat("order is ", to_decimal(order), ", want 144"); });
        c.expect(p_part(order, 2) == FactoredInteger::prime_power(2, 4),
                 [&] { return cat("2-part is ", to_factor_string(p_part(order, 2))); });
        const AbelianGroupInfo g = tr_group(2, 3, 5, standard_rep(1));
        c.expect(g.rank == 0 && g.torsion_order == order && !g.structure_known(),
                 [&] { return cat("group reads ", to_string(g)); });
        c.expect(tr_group(2, 1, 3, Rep{}) == cyclic_group(2),
                 [] { return std::string("level-one degree 3 is not Z/2"); });
        c.expect(!tr_is_zero(3, 3, 17, standard_rep(40)),
                 [] { return std::string("degree 17 reported zero"); });
        c.expect(tr_is_zero(3, 3, 7, standard_rep(40)),
                 [] { return std::string("degree 7 reported nonzero"); });
        c.expect(tr_group(3, 3, 7, standard_rep(40)).is_zero(),
                 [] { return std::string("vanishing-range group is not zero"); });
        c.expect(to_decimal(tr_odd_order(2, 2, 2, Rep{})) == "8", [&] {
            return cat("order(2;2,2,0) = ", to_decimal(tr_odd_order(2, 2, 2, Rep{})));
        });
        for (std::int64_t p : {2, 3, 5, 7})
            for (std::int64_t n = 0; n <= 4; ++n)
                for (std::int64_t i = 1; i <= 10; ++i)
                    c.expect(tr_odd_order(p, n, i, Rep{}) ==
                                 FactoredInteger::prime_power(p, n * (n - 1) / 2) *
                                     pow(factor(i), n),
                             [&] {
                                 return cat("closed form fails at p=", p, " n=", n,
                                            " i=", i);
                             });
    }));

    out.push_back(guarded("golden-even-rank", [](Collector& c) {
        c.expect(tr_group(2, 3, 2, standard_rep(1)) == free_group(1), [&] {
            return cat("got ", to_string(tr_group(2, 3, 2, standard_rep(1))), ", want Z");
        });
        c.expect(tr_group(2, 2, 0, Rep{}) == free_group(2), [&] {
            return cat("got ", to_string(tr_group(2, 2, 0, Rep{})), ", want Z^2");
        });
        c.expect(tr_group(5, 4, 6, Rep{}).is_zero(),
                 [] { return std::string("degree 6 at the trivial rep is not zero"); });
        for (std::int64_t p : {2, 3, 5})
            for (std::int64_t n = 1; n <= 5; ++n) {
                c.expect(tr_even_rank(p, n, 0, Rep{}) == n &&
                             tr_group(p, n, 0, Rep{}) == free_group(n),
                         [&] { return cat("degree 0 at p=", p, " n=", n, " is not Z^n"); });
                for (std::int64_t i = 1; i <= 6; ++i)
                    c.expect(tr_even_rank(p, n, i, Rep{}) == 0, [&] {
                        return cat("even rank at p=", p, " n=", n, " i=", i, " is nonzero");
                    });
            }
    }));

    out.push_back(guarded("golden-modp", [](Collector& c) {
        c.expect(modp_length(2, 3, 5, standard_rep(1)) == 2, [&] {
            return cat("length(2,3,5,d:1) = ", modp_length(2, 3, 5, standard_rep(1)));
        });
        c.expect(modp_length(2, 1, 0, Rep{}) == 1,
                 [&] { return cat("length(2,1,0,0) = ", modp_length(2, 1, 0, Rep{})); });
        c.expect(modp_length(3, 1, 5, Rep{}) == 1,
                 [&] { return cat("length(3,1,5,0) = ", modp_length(3, 1, 5, Rep{})); });
        c.expect(modp_length(2, 2, 2, standard_rep(2)) == 1, [&] {
            return cat("length(2,2,2,d:2) = ", modp_length(2, 2, 2, standard_rep(2)));
        });
        c.expect(modp_group(2, 3, 5, standard_rep(1)) == elementary_abelian(2, 2), [&] {
            return cat("got ", to_string(modp_group(2, 3, 5, standard_rep(1))));
        });
    }));

    out.push_back(guarded("golden-homology-cells", [](Collector& c) {
        c.expect(e2_term(2, 2, 1, 3, Rep{}) == cyclic_group(2),
                 [&] { return cat("cell (1,3): ", to_string(e2_term(2, 2, 1, 3, Rep{}))); });
        c.expect(e2_term(2, 2, 1, 7, Rep{}) == cyclic_group(4),
                 [&] { return cat("cell (1,7): ", to_string(e2_term(2, 2, 1, 7, Rep{}))); });
        c.expect(e2_term(2, 2, 0, 0, Rep{}) == free_group(1),
                 [&] { return cat("cell (0,0): ", to_string(e2_term(2, 2, 0, 0, Rep{}))); });
        c.expect(e2_term(2, 2, 3, 0, Rep{}) == cyclic_group(4),
                 [&] { return cat("cell (3,0): ", to_string(e2_term(2, 2, 3, 0, Rep{}))); });
        c.expect(e2_term(2, 2, 2, 0, Rep{}).is_zero(),
                 [&] { return cat("cell (2,0): ", to_string(e2_term(2, 2, 2, 0, Rep{}))); });
        c.expect(borel_ratio_check(2, 2, 3, Rep{}),
                 [] { return std::string("ratio fails at p=2 n=2 i=3"); });
        c.expect(borel_ratio_check(2, 3, 5, standard_rep(1)),
                 [] { return std::string("ratio fails at p=2 n=3 i=5 d:1"); });
    }));

    out.push_back(guarded("golden-k", [](Collector& c) {
        const AbelianGroupInfo k4 = k_group(2, 4);
        c.expect(to_decimal(k4.torsion_order) == "24" && k4.structure_known() &&
                     *k4.structure == std::vector<CyclicFactor>{{2, 3}, {3, 1}},
                 [&] { return cat("K_4 of the dual numbers reads ", to_string(k4)); });
        const AbelianGroupInfo k32 = k_group(3, 2);
        c.expect(k32.rank == 0 && to_decimal(k32.torsion_order) == "6" &&
                     !k32.structure_known(),
                 [&] { return cat("K_2 at m=3 reads ", to_string(k32)); });
        c.expect(to_decimal(k_group(4, 4).torsion_order) == "161280",
                 [&] { return cat("K_4 at m=4 has order ",
                                  to_decimal(k_group(4, 4).torsion_order)); });
        c.expect(k_group(3, 7) == free_group(2),
                 [&] { return cat("K_7 at m=3 reads ", to_string(k_group(3, 7))); });
        c.expect(k_group(1, 6).is_zero() && k_group(1, 5).is_zero() && k_group(2, 0).is_zero(),
                 [] { return std::string("vanishing rows are not zero"); });
    }));

    out.push_back(guarded("golden-integral", [](Collector& c) {
        c.expect(integral_rank(6, 0, standard_rep(5)) == 1,
                 [&] { return cat("rank(6,0,d:5) = ", integral_rank(6, 0, standard_rep(5))); });
        c.expect(integral_rank(4, 2, Rep{{2}}) == 2,
                 [&] { return cat("rank(4,2,w:2) = ", integral_rank(4, 2, Rep{{2}})); });
        c.expect(integral_rank(6, 0, Rep{}) == 4,
                 [&] { return cat("rank(6,0,0) = ", integral_rank(6, 0, Rep{})); });
        c.expect(to_decimal(integral_odd_order(1, 5, Rep{})) == "5", [&] {
            return cat("order(1,5,0) = ", to_decimal(integral_odd_order(1, 5, Rep{})));
        });
        c.expect(to_decimal(integral_odd_order(2, 2, Rep{})) == "8", [&] {
            return cat("order(2,2,0) = ", to_decimal(integral_odd_order(2, 2, Rep{})));
        });
        c.expect(divisor_identity_holds(12, 2, 2, standard_rep(6)),
                 [] { return std::string("divisor splitting fails at r=12 p=2 q=2 d:6"); });
        c.expect(integral_rank(1, 0, Rep{}) == 1,
                 [&] { return cat("rank(1,0,0) = ", integral_rank(1, 0, Rep{})); });
        for (std::int64_t i = 1; i <= 12; ++i)
            c.expect(to_decimal(integral_odd_order(1, i, Rep{})) == std::to_string(i),
                     [&] { return cat("level-one order at i=", i, " is not ", i); });
        // Vanishing range: fixed_dim(d:8, 4) = 2, so degrees below 4 are zero.
        c.expect(integral_rank(4, 2, standard_rep(8)) == 0 &&
                     integral_odd_order(4, 2, standard_rep(8)).is_one(),
                 [] { return std::string("groups below the vanishing cut are nonzero"); });
    }));

    out.push_back(guarded("golden-limits", [](Collector& c) {
        const AbelianGroupInfo middle = limr_middle(2, 2, Parity::odd);
        c.expect(middle.rank == 0 && to_decimal(middle.torsion_order) == "96",
                 [&] { return cat("middle term reads ", to_string(middle)); });
        c.expect(to_decimal(limr_left(2, 2, Parity::odd).torsion_order) == "4", [&] {
            return cat("left term reads ", to_string(limr_left(2, 2, Parity::odd)));
        });
        c.expect(to_decimal(limr_vm_coker(2, 2, Parity::odd).torsion_order) == "24", [&] {
            return cat("cokernel reads ", to_string(limr_vm_coker(2, 2, Parity::odd)));
        });
        c.expect(limr_middle(2, 2, Parity::even) == free_group(2) &&
                     limr_left(2, 2, Parity::even) == free_group(1) &&
                     limr_vm_coker(2, 2, Parity::even) == free_group(1),
                 [] { return std::string("even-degree ranks are off"); });
        const LimDecomposition middle_dec = limr_middle_decomposition(2, 2, 1);
        const std::vector<LimEntry> want{{1, 2, 2, 0, 1}};
        c.expect(middle_dec.entries == want && middle_dec.total_length() == 1, [&] {
            return cat("middle decomposition at (2,2,1) has ", middle_dec.entries.size(),
                       " entries, total ", middle_dec.total_length());
        });
        const LimDecomposition left_dec = limr_left_decomposition(3, 3, 2);
        std::vector<std::int64_t> js;
        for (const LimEntry& entry : left_dec.entries) js.push_back(entry.j);
        c.expect(js == std::vector<std::int64_t>{1, 2, 4, 5} && left_dec.total_length() == 0 &&
                     left_dec.level_shift == 1,
                 [&] { return cat("left decomposition at (3,3,2) has total ",
                                  left_dec.total_length()); });
        c.expect(to_decimal(limr_middle(2, 1, Parity::odd).torsion_order) == "2", [&] {
            return cat("middle term at (2,1) reads ",
                       to_string(limr_middle(2, 1, Parity::odd)));
        });
        for (std::int64_t i = 0; i <= 6; ++i)
            c.expect(limr_vm_coker(2, i, Parity::odd).torsion_order == factorial(2 * i),
                     [&] { return cat("cokernel at (2,", i, ") is not (2i)!"); });
        for (std::int64_t m = 1; m <= 4; ++m)
            for (std::int64_t i = 0; i <= 3; ++i)
                c.expect(limr_left(m, i, Parity::even) == free_group(1) &&
                             limr_vm_coker(m, i, Parity::even) == free_group(m - 1),
                         [&] { return cat("even ranks off at m=", m, " i=", i); });
    }));

    out.push_back(guarded("golden-dual", [](Collector& c) {
        const DualStructure one = dual_structure(1);
        c.expect(one.order == factor(2) && one.components.size() == 1 &&
                     one.components[0].full &&
                     one.components[0].factors == std::vector<CyclicFactor>{{2, 1}},
                 [] { return std::string("degree 2 row is not Z/2"); });
        const DualStructure two = dual_structure(2);
        c.expect(two.order == factorial(4) && two.components.size() == 2 &&
                     two.components[0].factors == std::vector<CyclicFactor>{{2, 3}} &&
                     two.components[1].factors == std::vector<CyclicFactor>{{3, 1}},
                 [] { return std::string("degree 4 row is not Z/8 + Z/3"); });
        const DualStructure three = dual_structure(3);
        c.expect(three.order == factorial(6) && three.components.size() == 3 &&
                     three.components[0].factors ==
                         std::vector<CyclicFactor>{{2, 1}, {2, 1}, {2, 2}} &&
                     three.components[1].factors == std::vector<CyclicFactor>{{3, 2}} &&
                     three.components[2].factors == std::vector<CyclicFactor>{{5, 1}},
                 [] { return std::string("degree 6 row is not Z/2 + Z/2 + Z/4 + Z/9 + Z/5"); });
        c.expect(dual_odd_part(3, 3) == std::pair<std::int64_t, std::int64_t>{0, 1},
                 [] { return std::string("the 3-part at i=3 is not Z/9"); });
        c.expect(dual_odd_part(5, 3) == std::pair<std::int64_t, std::int64_t>{1, 0},
                 [] { return std::string("the 5-part at i=3 is not Z/5"); });
        for (std::int64_t p : {5, 7, 11})
            for (std::int64_t i = 1; 2 * i <= p - 1; ++i)
                c.expect(dual_odd_part(p, i) == std::pair<std::int64_t, std::int64_t>{0, 0},
                         [&] { return cat("p-part below the vanishing cut at p=", p,
                                          " i=", i); });
        // The golden rows appear verbatim in the emitted table.
        for (const KTableRow& row : k_table(2, 3, true)) {
            c.expect(row.group == k_group(row.m, row.q),
                     [&] { return cat("table row (", row.m, ",", row.q, ") is off"); });
            if (row.m == 2 && row.q == 6)
                c.expect(row.group.structure_known() &&
                             *row.group.structure ==
                                 std::vector<CyclicFactor>{
                                     {2, 1}, {2, 1}, {2, 2}, {3, 2}, {5, 1}},
                         [&] { return cat("K_6 table row reads ", to_string(row.group)); });
        }
    }));

    out.push_back(guarded("golden-stable-level", [](Collector& c) {
        c.expect(find_stable_level(2, 4) == 60,
                 [&] { return cat("level(2,4) = ", find_stable_level(2, 4)); });
        c.expect(find_stable_level(1, 0) == 1,
                 [&] { return cat("level(1,0) = ", find_stable_level(1, 0)); });
        c.expect(stable_iso_middle(2, 2, 0, 60) && stable_iso_left(2, 2, 0, 60),
                 [] { return std::string("criteria fail at r=60"); });
        c.expect(!stable_iso_middle(2, 2, 0, 12),
                 [] { return std::string("middle criterion passes at r=12"); });
        c.expect(integral_rank(60, 4, standard_rep(29)) == 2,
                 [&] { return cat("rank(60,4,d:29) = ", integral_rank(60, 4, standard_rep(29))); });
        c.expect(to_decimal(integral_odd_order(60, 2, standard_rep(29))) == "96", [&] {
            return cat("order(60,2,d:29) = ",
                       to_decimal(integral_odd_order(60, 2, standard_rep(29))));
        });
        c.expect(integral_rank(30, 4, standard_rep(29)) == 1,
                 [&] { return cat("rank(30,4,d:29) = ", integral_rank(30, 4, standard_rep(29))); });
        c.expect(to_decimal(integral_odd_order(30, 2, standard_rep(29))) == "4", [&] {
            return cat("order(30,2,d:29) = ",
                       to_decimal(integral_odd_order(30, 2, standard_rep(29))));
        });
    }));

    out.push_back(guarded("golden-offsets", [](Collector& c) {
        c.expect(congruence_offset(2, standard_rep(1)) == -1,
                 [&] { return cat("offset(2,d:1) = ", congruence_offset(2, standard_rep(1))); });
        c.expect(congruence_offset(3, standard_rep(3)) == -12,
                 [&] { return cat("offset(3,d:3) = ", congruence_offset(3, standard_rep(3))); });
        c.expect(truncation_index(2, 60) == 29,
                 [&] { return cat("truncation_index(2,60) = ", truncation_index(2, 60)); });
        c.expect(stable_stage(2, 2, 2, 1) == 3,
                 [&] { return cat("stage(2;2,2,1) = ", stable_stage(2, 2, 2, 1)); });
        c.expect(stable_stage(3, 3, 2, 1) == 2,
                 [&] { return cat("stage(3;3,2,1) = ", stable_stage(3, 3, 2, 1)); });
        c.expect(standard_rep(3).weights() == std::vector<std::int64_t>{1, 2, 3} &&
                     parse_rep("d:3") == standard_rep(3),
                 [] { return std::string("d:3 does not carry weights 1,2,3"); });
    }));

    return out;
}

std::vector<Check> identity_checks(std::uint64_t seed) {
    std::vector<Check> out;
    out.push_back(closed_form_check({2, 3, 5, 7}, 6, 30));
    out.push_back(k_order_check(8, 12));
    out.push_back(dual_golden_check());
    out.push_back(odd_torsion_check(59));
    out.push_back(bockstein_check({2, 3, 5}, 4, 6, 100, -2, 40, seed));
    out.push_back(divisor_identity_check(1000, 5000, seed + 1));
    out.push_back(length_sum_check(13, 4, 10));
    out.push_back(borel_ratio_sweep({2, 3}, 2, 4, 4, 20));
    out.push_back(stabilization_check(4, 12));
    out.push_back(degree_two_check(10));
    return out;
}

}  // namespace trk::verify
