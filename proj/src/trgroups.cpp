#include "trk/trgroups.hpp"

#include <numeric>
#include <stdexcept>

namespace trk {

AbelianGroupInfo tr1_group(std::int64_t q, const Rep& lambda) {
    const std::int64_t shifted = q - 2 * dim(lambda);
    if (shifted == 0) return free_group(1);
    if (shifted < 0 || shifted % 2 == 0) return zero_group();
    const std::int64_t i = (shifted + 1) / 2;  // shifted = 2i - 1
    return i >= 2 ? cyclic_group(i) : zero_group();
}

AbelianGroupInfo tr_group(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda) {
    detail::require_prime(p);
    if (n < 1) throw std::domain_error("tr_group: level must be positive");
    if (q % 2 == 0) return free_group(tr_even_rank(p, n, q / 2, lambda));
    const std::int64_t i = (q + 1) / 2;
    FactoredInteger order = tr_odd_order(p, n, i, lambda);
    if (n == 1) return cyclic_group(order);  // level one is cyclic
    return finite_order_only(std::move(order));
}

std::int64_t modp_length(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda) {
    detail::require_prime(p);
    if (n < 1) throw std::domain_error("modp_length: level must be positive");
    for (std::int64_t w : lambda.weights())
        if (w == 0) throw std::domain_error("modp_length: defined only for positive weights");

    // q congruent to 2*offset or 2*offset - 1 modulo 2p^k?  When the modulus
    // saturates past the int64 range the classes collapse to plain equality.
    auto congruent = [&](std::int64_t offset, std::int64_t k) {
        const std::int64_t diff =
            detail::checked_add(q, detail::checked_mul(-2, offset));
        const std::int64_t half = detail::saturating_pow(p, k);
        if (half >= detail::kSaturated / 2) return diff == 0 || diff == -1;
        const std::int64_t modulus = 2 * half;
        const std::int64_t residue = ((diff % modulus) + modulus) % modulus;
        return residue == 0 || residue == modulus - 1;
    };

    std::vector<std::int64_t> fd(static_cast<std::size_t>(n));
    for (std::int64_t s = 0; s < n; ++s)
        fd[static_cast<std::size_t>(s)] = fixed_dim(lambda, detail::saturating_pow(p, s));

    if (q < 2 * fd[static_cast<std::size_t>(n - 1)]) return 0;
    for (std::int64_t s = n - 1; s >= 1; --s) {
        if (!(2 * fd[static_cast<std::size_t>(s)] <= q &&
              q < 2 * fd[static_cast<std::size_t>(s - 1)]))
            continue;  // empty or missed band
        const Rep restricted = restrict_to(lambda, detail::saturating_pow(p, s));
        const std::int64_t offset = congruence_offset(p, restricted);
        return congruent(offset, n - s) ? n - s : n - s - 1;
    }
    // Bands exhausted: q >= 2 dim lambda.
    const std::int64_t offset = congruence_offset(p, lambda);
    return congruent(offset, n) ? n : n - 1;
}

AbelianGroupInfo modp_group(std::int64_t p, std::int64_t n, std::int64_t q, const Rep& lambda) {
    return elementary_abelian(p, modp_length(p, n, q, lambda));
}

AbelianGroupInfo e2_term(std::int64_t p, std::int64_t u, std::int64_t s, std::int64_t t,
                         const Rep& lambda) {
    detail::require_prime(p);
    if (u < 1) throw std::domain_error("e2_term: group exponent must be positive");
    if (s < 0) throw std::domain_error("e2_term: homological degree must be nonnegative");
    const AbelianGroupInfo coeff = tr1_group(t, lambda);
    if (coeff.is_zero()) return zero_group();
    if (s == 0) return coeff;
    if (coeff.rank == 1)  // coefficients Z
        return s % 2 == 1 ? cyclic_group(FactoredInteger::prime_power(p, u)) : zero_group();
    // coefficients Z/c with c = coeff order: all higher homology is Z/gcd(p^u, c)
    const std::int64_t shared = std::min(u, coeff.torsion_order.exponent_of(p));
    return shared == 0 ? zero_group() : cyclic_group(FactoredInteger::prime_power(p, shared));
}

std::vector<E2Cell> e2_antidiagonal(std::int64_t p, std::int64_t u, std::int64_t total_degree,
                                    const Rep& lambda) {
    std::vector<E2Cell> cells;
    // Coefficients vanish below degree 2 dim lambda, so s is bounded above.
    for (std::int64_t t = total_degree; t >= 2 * dim(lambda); --t) {
        const std::int64_t s = total_degree - t;
        AbelianGroupInfo group = e2_term(p, u, s, t, lambda);
        if (!group.is_zero()) cells.push_back({s, t, std::move(group)});
    }
    return cells;
}

bool borel_ratio_check(std::int64_t p, std::int64_t n, std::int64_t i, const Rep& lambda) {
    detail::require_prime(p);
    if (n < 2) throw std::domain_error("borel_ratio_check: needs level at least 2");
    const std::int64_t d = dim(lambda);
    if (i <= d + 1)
        throw std::domain_error("borel_ratio_check: needs i > dim + 1 to keep both products finite");
    const std::int64_t q = 2 * i - 1;
    auto product = [&](std::int64_t degree) {
        FactoredInteger acc;
        for (const E2Cell& cell : e2_antidiagonal(p, n - 1, degree, lambda)) {
            if (cell.group.rank > 0)
                throw std::logic_error("borel_ratio_check: unexpected free cell");
            acc *= cell.group.torsion_order;
        }
        return acc;
    };
    const FactoredInteger expected =
        factor(i - d) * FactoredInteger::prime_power(p, n - 1);
    return product(q) == product(q - 1) * expected;
}

}  // namespace trk
