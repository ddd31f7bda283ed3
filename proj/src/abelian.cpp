#include "trk/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace trk {

AbelianGroupInfo zero_group() {
    AbelianGroupInfo g;
    g.structure = std::vector<CyclicFactor>{};
    return g;
}

AbelianGroupInfo free_group(std::int64_t rank) {
    if (rank < 0) throw std::domain_error("free_group: negative rank");
    AbelianGroupInfo g;
    g.rank = rank;
    g.structure = std::vector<CyclicFactor>{};
    return g;
}

AbelianGroupInfo cyclic_group(const FactoredInteger& order) {
    AbelianGroupInfo g;
    g.torsion_order = order;
    std::vector<CyclicFactor> factors;
    for (const auto& [p, e] : order.factors()) factors.push_back({p, e});
    g.structure = std::move(factors);
    return g;
}

AbelianGroupInfo cyclic_group(std::int64_t order) {
    if (order < 1) throw std::domain_error("cyclic_group: order must be positive");
    return cyclic_group(factor(order));
}

AbelianGroupInfo finite_order_only(FactoredInteger order) {
    if (order.is_one()) return zero_group();  // the trivial group is fully known
    AbelianGroupInfo g;
    g.torsion_order = std::move(order);
    return g;
}

AbelianGroupInfo elementary_abelian(std::int64_t p, std::int64_t length) {
    if (length < 0) throw std::domain_error("elementary_abelian: negative length");
    AbelianGroupInfo g;
    g.torsion_order = FactoredInteger::prime_power(p, length);
    g.structure = std::vector<CyclicFactor>(static_cast<std::size_t>(length),
                                            CyclicFactor{p, 1});
    return g;
}

void check_consistent(const AbelianGroupInfo& g) {
    if (!g.structure) return;
    FactoredInteger product;
    for (const CyclicFactor& f : *g.structure)
        product *= FactoredInteger::prime_power(f.p, f.e);
    if (!(product == g.torsion_order))
        throw std::logic_error("group structure does not multiply to the torsion order");
    if (!std::is_sorted(g.structure->begin(), g.structure->end()))
        throw std::logic_error("group structure factors out of order");
}

namespace {

std::string cyclic_to_string(const CyclicFactor& f) {
    std::int64_t value = 1;
    for (std::int64_t k = 0; k < f.e; ++k) value = detail::checked_mul(value, f.p);
    return "Z/" + std::to_string(value);
}

}  // namespace

std::string to_string(const AbelianGroupInfo& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.rank == 1)
        out = "Z";
    else if (g.rank > 1)
        out = "Z^" + std::to_string(g.rank);
    if (g.torsion_order.is_one()) return out;
    if (!out.empty()) out += " + ";
    if (g.structure) {
        for (std::size_t k = 0; k < g.structure->size(); ++k) {
            if (k > 0) out += " + ";
            out += cyclic_to_string((*g.structure)[k]);
        }
    } else {
        out += "finite of order " + to_decimal(g.torsion_order) + " = " +
               to_factor_string(g.torsion_order) + " (structure not determined)";
    }
    return out;
}

}  // namespace trk
