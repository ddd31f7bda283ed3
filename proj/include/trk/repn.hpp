#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trk {

// Finite multiset of nonnegative integer weights, the rotation speeds of a
// complex circle representation.  Canonical form is the ascending weight
// list.  Weight 0 (the trivial summand) is allowed; it counts as divisible
// by every e in fixed_dim.  Weights are capped at 10^15 so that divisibility
// against saturated prime powers stays exact.
class Rep {
public:
    Rep() = default;
    explicit Rep(std::vector<std::int64_t> weights);

    const std::vector<std::int64_t>& weights() const { return weights_; }
    friend bool operator==(const Rep&, const Rep&) = default;

    static constexpr std::int64_t kMaxWeight = 1'000'000'000'000'000;

private:
    std::vector<std::int64_t> weights_;
};

// Complex dimension, i.e. the number of weights.
std::int64_t dim(const Rep& rep);

// Number of weights divisible by e >= 1 — the dimension of the fixed space
// of the order-e cyclic subgroup.  Weight 0 is divisible by every e.
std::int64_t fixed_dim(const Rep& rep, std::int64_t e);

// Fixed points of the order-s subgroup seen through the s-th root isomorphism
// of the circle: keep the weights divisible by s and divide them by s.
Rep restrict_to(const Rep& rep, std::int64_t s);

// The standard representation with weights 1, 2, ..., d (empty for d = 0).
Rep standard_rep(std::int64_t d);

// standard_rep(d) by index alone.  dim = d, fixed_dim(-, e) = floor(d/e),
// restrict_to(-, s) = the index floor(d/s); usable for indices far beyond
// anything an explicit weight list could hold.
struct StandardRep {
    std::int64_t d = 0;
    friend bool operator==(StandardRep, StandardRep) = default;
};

std::int64_t dim(StandardRep rep);
std::int64_t fixed_dim(StandardRep rep, std::int64_t e);
StandardRep restrict_to(StandardRep rep, std::int64_t s);

// The interface the group-order formulas need from a representation.  Both
// the explicit Rep and the indexed StandardRep model it.
template <typename R>
concept RepLike = requires(const R& rep, std::int64_t e) {
    { dim(rep) } -> std::convertible_to<std::int64_t>;
    { fixed_dim(rep, e) } -> std::convertible_to<std::int64_t>;
    { restrict_to(rep, e) } -> std::convertible_to<R>;
};

// floor((r-1)/m): the dimension index paired with level r in the limit
// systems over truncation length m.
std::int64_t truncation_index(std::int64_t m, std::int64_t r);

// The unique s >= 1 with p^(s-1) j <= m i < p^s j: the stage at which the
// j-indexed factor of the level limit stabilizes.  Requires 1 <= j <= m i
// (hence i >= 1); anything else has no such s and is rejected.
std::int64_t stable_stage(std::int64_t p, std::int64_t m, std::int64_t i, std::int64_t j);

// (1-p) * sum_{s>=0} fixed_dim(rep, p^s) p^s, the integer whose double (and
// its predecessor) pick out the full-length congruence classes in the mod-p
// length formula.  Defined only for all-positive weights: a trivial summand
// would make the series diverge, so weight 0 is rejected.
std::int64_t congruence_offset(std::int64_t p, const Rep& rep);

// Text grammar shared with the CLI:  "0"  |  "d:<n>"  |  "w:<c1,c2,...>".
// Violations raise std::invalid_argument.
Rep parse_rep(std::string_view text);
std::string to_string(const Rep& rep);

}  // namespace trk
