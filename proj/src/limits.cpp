#include "trk/limits.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "trk/repn.hpp"
#include "trk/trgroups.hpp"

namespace trk {

namespace {

void require_limit_args(const char* where, std::int64_t m, std::int64_t i) {
    if (m < 1) throw std::domain_error(std::string(where) + ": truncation length must be positive");
    if (i < 0) throw std::domain_error(std::string(where) + ": degree index must be nonnegative");
}

LimEntry make_entry(std::int64_t p, std::int64_t m, std::int64_t i, std::int64_t j,
                    std::int64_t level_shift) {
    const std::int64_t stage = stable_stage(p, m, i, j);
    const std::int64_t level = stage - level_shift;
    // p^(stage-1) j <= m i by the defining inequality, so no overflow here.
    std::int64_t index = j;
    for (std::int64_t s = 1; s < stage; ++s) index *= p;
    LimEntry entry{j, stage, level, truncation_index(m, index), 0};
    if (level >= 1)
        entry.length = tr_odd_order(p, level, i, StandardRep{entry.d}).exponent_of(p);
    return entry;
}

// Shared cross-check: the per-prime decomposition totals must reproduce the
// closed-form order exactly (primes above m i contribute to neither side).
void check_against_closed_form(const char* where, const FactoredInteger& closed, std::int64_t m,
                               std::int64_t i,
                               LimDecomposition (*decompose)(std::int64_t, std::int64_t,
                                                             std::int64_t)) {
    for (std::int64_t p : primes_upto(detail::checked_mul(m, i)))
        if (decompose(p, m, i).total_length() != closed.exponent_of(p))
            throw std::logic_error(std::string(where) +
                                   ": decomposition total disagrees with the closed form at p = " +
                                   std::to_string(p));
}

}  // namespace

std::int64_t LimDecomposition::total_length() const {
    std::int64_t total = 0;
    for (const LimEntry& entry : entries) total = detail::checked_add(total, entry.length);
    return total;
}

LimDecomposition limr_middle_decomposition(std::int64_t p, std::int64_t m, std::int64_t i) {
    detail::require_prime(p);
    require_limit_args("limr_middle_decomposition", m, i);
    LimDecomposition out{p, m, i, 0, {}};
    const std::int64_t mi = detail::checked_mul(m, i);
    for (std::int64_t j = 1; j <= mi; ++j)
        if (j % p != 0) out.entries.push_back(make_entry(p, m, i, j, 0));
    return out;
}

LimDecomposition limr_left_decomposition(std::int64_t p, std::int64_t m, std::int64_t i) {
    detail::require_prime(p);
    require_limit_args("limr_left_decomposition", m, i);
    const std::int64_t shift = valuation(p, m);
    std::int64_t m_prime = m;
    for (std::int64_t s = 0; s < shift; ++s) m_prime /= p;
    LimDecomposition out{p, m, i, shift, {}};
    const std::int64_t mi = detail::checked_mul(m, i);
    for (std::int64_t k = 1; m_prime * k <= mi; ++k)
        if (k % p != 0) out.entries.push_back(make_entry(p, m, i, m_prime * k, shift));
    return out;
}

AbelianGroupInfo limr_middle(std::int64_t m, std::int64_t i, Parity parity) {
    require_limit_args("limr_middle", m, i);
    if (parity == Parity::even) return free_group(m);
    FactoredInteger closed = factorial(detail::checked_mul(m, i)) * pow(factorial(i), m);
    check_against_closed_form("limr_middle", closed, m, i, limr_middle_decomposition);
    return finite_order_only(std::move(closed));
}

AbelianGroupInfo limr_left(std::int64_t m, std::int64_t i, Parity parity) {
    require_limit_args("limr_left", m, i);
    if (parity == Parity::even) return free_group(1);
    FactoredInteger closed = pow(factorial(i), 2);
    check_against_closed_form("limr_left", closed, m, i, limr_left_decomposition);
    return finite_order_only(std::move(closed));
}

AbelianGroupInfo limr_vm_coker(std::int64_t m, std::int64_t i, Parity parity) {
    require_limit_args("limr_vm_coker", m, i);
    if (parity == Parity::even) return free_group(m - 1);
    return finite_order_only(div_exact(limr_middle(m, i, parity).torsion_order,
                                       limr_left(m, i, parity).torsion_order));
}

}  // namespace trk
