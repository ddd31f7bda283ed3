#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trk/arith.hpp"

namespace trk {

// One cyclic summand Z/p^e of a torsion group, recorded as (p, e).
struct CyclicFactor {
    std::int64_t p = 0;
    std::int64_t e = 0;
    friend auto operator<=>(const CyclicFactor&, const CyclicFactor&) = default;
};

// What this library can assert about a finitely generated abelian group:
// always the free rank and the exact torsion order, and — when the theory
// pins it down — the full list of prime-power cyclic summands.  structure is
// engaged (possibly empty, for free or zero groups) exactly when the
// decomposition is known; disengaged means order-only.
struct AbelianGroupInfo {
    std::int64_t rank = 0;
    FactoredInteger torsion_order;                         // 1 = torsion free
    std::optional<std::vector<CyclicFactor>> structure;    // sorted by (p, e)

    bool is_zero() const { return rank == 0 && torsion_order.is_one(); }
    bool structure_known() const { return structure.has_value(); }

    friend bool operator==(const AbelianGroupInfo&, const AbelianGroupInfo&) = default;
};

AbelianGroupInfo zero_group();
AbelianGroupInfo free_group(std::int64_t rank);
AbelianGroupInfo cyclic_group(std::int64_t order);               // full structure
AbelianGroupInfo cyclic_group(const FactoredInteger& order);     // full structure
AbelianGroupInfo finite_order_only(FactoredInteger order);
AbelianGroupInfo elementary_abelian(std::int64_t p, std::int64_t length);

// Product of the structure factors must equal the torsion order whenever the
// structure is engaged; violations raise std::logic_error.
void check_consistent(const AbelianGroupInfo& g);

// "0", "Z^2", "Z/8 + Z/3", "finite of order 144 = 2^4 * 3^2 (structure not
// determined)" and combinations.
std::string to_string(const AbelianGroupInfo& g);

}  // namespace trk
