#include "trk/kgroups.hpp"

#include <stdexcept>
#include <utility>

namespace trk {

AbelianGroupInfo k_group(std::int64_t m, std::int64_t q) {
    if (m < 1) throw std::domain_error("k_group: truncation length must be positive");
    if (q < 0) throw std::domain_error("k_group: degree must be nonnegative");
    if (q % 2 == 1) return free_group(m - 1);
    const std::int64_t i = q / 2;
    FactoredInteger order = div_exact(factorial(detail::checked_mul(m, i)) * pow(factorial(i), m),
                                      pow(factorial(i), 2));
    if (order.is_one()) return zero_group();
    if (m == 2 && i <= 3) {
        // Dual numbers in low degrees: every primary component is pinned down.
        std::vector<CyclicFactor> factors;
        for (const DualComponent& component : dual_structure(i).components)
            factors.insert(factors.end(), component.factors.begin(), component.factors.end());
        AbelianGroupInfo out{0, std::move(order), std::move(factors)};
        check_consistent(out);
        return out;
    }
    return finite_order_only(std::move(order));
}

std::pair<std::int64_t, std::int64_t> dual_odd_part(std::int64_t p, std::int64_t i) {
    detail::require_prime(p);
    if (p == 2) throw std::domain_error("dual_odd_part: the prime must be odd");
    if (i < 0) throw std::domain_error("dual_odd_part: degree index must be nonnegative");
    const std::int64_t two_i = detail::checked_mul(2, i);
    if (two_i / p >= p) throw std::domain_error("dual_odd_part: needs 2i < p^2");
    const std::int64_t j = (two_i + 1) % p;
    if (j == 0) return {0, i / p};
    if (j % 2 == 1 && j * p <= two_i) return {two_i / p - 2, 1};
    return {two_i / p, 0};
}

DualStructure dual_structure(std::int64_t i) {
    if (i < 1) throw std::domain_error("dual_structure: degree index must be positive");
    DualStructure out;
    out.i = i;
    out.order = factorial(detail::checked_mul(2, i));
    for (std::int64_t p : primes_upto(2 * i)) {
        DualComponent component;
        component.p = p;
        const std::int64_t v = out.order.exponent_of(p);
        component.p_component_order = FactoredInteger::prime_power(p, v);
        if (p == 2) {
            if (i == 1) component.factors = {{2, 1}};
            if (i == 2) component.factors = {{2, 3}};
            if (i == 3) component.factors = {{2, 1}, {2, 1}, {2, 2}};
            component.full = i <= 3;
        } else if (p * p > 2 * i) {
            component.full = true;
            const auto [r1, r2] = dual_odd_part(p, i);
            for (std::int64_t k = 0; k < r1; ++k) component.factors.push_back({p, 1});
            for (std::int64_t k = 0; k < r2; ++k) component.factors.push_back({p, 2});
        }
        if (component.full) {
            std::int64_t total = 0;
            for (const CyclicFactor& f : component.factors) total += f.e;
            if (total != v)
                throw std::logic_error("dual_structure: summand exponents miss the order");
        }
        out.components.push_back(std::move(component));
    }
    return out;
}

std::vector<KTableRow> k_table(std::int64_t m_max, std::int64_t i_max, bool include_structure) {
    if (m_max < 1) throw std::domain_error("k_table: m bound must be positive");
    if (i_max < 0) throw std::domain_error("k_table: degree bound must be nonnegative");
    std::vector<KTableRow> rows;
    for (std::int64_t m = 1; m <= m_max; ++m)
        for (std::int64_t q = 0; q <= 2 * i_max + 1; ++q) {
            AbelianGroupInfo group = k_group(m, q);
            if (!include_structure) group.structure.reset();
            rows.push_back({m, q, std::move(group)});
        }
    return rows;
}

}  // namespace trk
