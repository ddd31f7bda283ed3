#include "trk/repn.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "trk/arith.hpp"

namespace trk {

Rep::Rep(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
    for (std::int64_t w : weights_) {
        if (w < 0) throw std::invalid_argument("Rep: negative weight");
        if (w > kMaxWeight) throw std::invalid_argument("Rep: weight too large");
    }
    std::sort(weights_.begin(), weights_.end());
}

std::int64_t dim(const Rep& rep) {
    return static_cast<std::int64_t>(rep.weights().size());
}

std::int64_t fixed_dim(const Rep& rep, std::int64_t e) {
    if (e < 1) throw std::domain_error("fixed_dim: order must be positive");
    std::int64_t count = 0;
    for (std::int64_t w : rep.weights())
        if (w % e == 0) ++count;  // weight 0 passes for every e
    return count;
}

Rep restrict_to(const Rep& rep, std::int64_t s) {
    if (s < 1) throw std::domain_error("restrict_to: order must be positive");
    std::vector<std::int64_t> kept;
    for (std::int64_t w : rep.weights())
        if (w % s == 0) kept.push_back(w / s);
    return Rep(std::move(kept));
}

Rep standard_rep(std::int64_t d) {
    if (d < 0) throw std::domain_error("standard_rep: dimension must be nonnegative");
    std::vector<std::int64_t> weights;
    weights.reserve(static_cast<std::size_t>(d));
    for (std::int64_t w = 1; w <= d; ++w) weights.push_back(w);
    return Rep(std::move(weights));
}

std::int64_t dim(StandardRep rep) { return rep.d; }

std::int64_t fixed_dim(StandardRep rep, std::int64_t e) {
    if (e < 1) throw std::domain_error("fixed_dim: order must be positive");
    return rep.d / e;
}

StandardRep restrict_to(StandardRep rep, std::int64_t s) {
    if (s < 1) throw std::domain_error("restrict_to: order must be positive");
    return StandardRep{rep.d / s};
}

std::int64_t truncation_index(std::int64_t m, std::int64_t r) {
    if (m < 1 || r < 1) throw std::domain_error("truncation_index: arguments must be positive");
    return (r - 1) / m;
}

std::int64_t stable_stage(std::int64_t p, std::int64_t m, std::int64_t i, std::int64_t j) {
    detail::require_prime(p);
    if (m < 1) throw std::domain_error("stable_stage: truncation length must be positive");
    const std::int64_t mi = detail::checked_mul(m, i);
    if (j < 1 || j > mi)
        throw std::domain_error("stable_stage: index outside 1..m*i has no stage");
    std::int64_t s = 1;
    std::int64_t lower = j;       // p^(s-1) * j, stays <= mi
    while (lower <= mi / p) {     // equivalent to lower * p <= mi, overflow-free
        lower *= p;
        ++s;
    }
    return s;
}

std::int64_t congruence_offset(std::int64_t p, const Rep& rep) {
    detail::require_prime(p);
    for (std::int64_t w : rep.weights())
        if (w == 0)
            throw std::domain_error("congruence_offset: weight 0 makes the series diverge");
    std::int64_t sum = 0;
    std::int64_t power = 1;  // p^s, saturating
    for (;;) {
        std::int64_t fd = 0;
        for (std::int64_t w : rep.weights())
            if (w % power == 0) ++fd;
        if (fd == 0) break;  // no weight reaches this power, nor any later one
        sum = detail::checked_add(sum, detail::checked_mul(fd, power));
        power = power > detail::kSaturated / p ? detail::kSaturated : power * p;
    }
    return detail::checked_mul(1 - p, sum);
}

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("rep grammar: expected an integer, got '" +
                                    std::string(text) + "'");
    return value;
}

constexpr std::int64_t kMaxParsedDim = 1'000'000;
constexpr std::int64_t kMaxParsedWeight = 1'000'000'000;

}  // namespace

Rep parse_rep(std::string_view text) {
    if (text == "0") return Rep{};
    if (text.rfind("d:", 0) == 0) {
        std::int64_t d = parse_int(text.substr(2));
        if (d < 0) throw std::invalid_argument("rep grammar: d must be nonnegative");
        if (d > kMaxParsedDim) throw std::invalid_argument("rep grammar: d too large");
        return standard_rep(d);
    }
    if (text.rfind("w:", 0) == 0) {
        std::string_view body = text.substr(2);
        if (body.empty()) throw std::invalid_argument("rep grammar: empty weight list");
        std::vector<std::int64_t> weights;
        while (!body.empty()) {
            std::size_t comma = body.find(',');
            std::string_view item =
                comma == std::string_view::npos ? body : body.substr(0, comma);
            std::int64_t w = parse_int(item);
            if (w < 0) throw std::invalid_argument("rep grammar: weights must be nonnegative");
            if (w > kMaxParsedWeight) throw std::invalid_argument("rep grammar: weight too large");
            weights.push_back(w);
            if (weights.size() > static_cast<std::size_t>(kMaxParsedDim))
                throw std::invalid_argument("rep grammar: too many weights");
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
            if (body.empty()) throw std::invalid_argument("rep grammar: trailing comma");
        }
        return Rep(std::move(weights));
    }
    throw std::invalid_argument("rep grammar: expected 0, d:<n> or w:<c1,c2,...>");
}

std::string to_string(const Rep& rep) {
    if (rep.weights().empty()) return "0";
    // Recognize the standard family for the compact form.
    bool standard = true;
    for (std::size_t k = 0; k < rep.weights().size(); ++k)
        if (rep.weights()[k] != static_cast<std::int64_t>(k) + 1) {
            standard = false;
            break;
        }
    if (standard) return "d:" + std::to_string(rep.weights().size());
    std::string out = "w:";
    for (std::size_t k = 0; k < rep.weights().size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(rep.weights()[k]);
    }
    return out;
}

}  // namespace trk
