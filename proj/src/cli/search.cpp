#include <algorithm>
#include <random>

#include "mdskit/cli.hpp"
#include "mdskit/mds.hpp"
#include "mdskit/parallel.hpp"
#include "mdskit/structured.hpp"

namespace mdskit::cli {

namespace {

// q^m, saturating just above the exhaustive limit.
std::uint64_t candidate_space(Word q, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= q;
        if (total > kExhaustiveLimit) return kExhaustiveLimit + 1;
    }
    return total;
}

std::optional<SearchRecord> evaluate(const SearchConfig& c, const ThetaDerivation& d,
                                     const SkewPoly& x2m_minus_1, std::uint64_t index,
                                     std::vector<Word> digits) {
    SearchRecord rec{index, {}, FMatrix(c.field, 0, 0)};
    if (c.mode == SearchMode::Circulant) {
        rec.coeffs = std::move(digits);
        rec.matrix = delta_theta_circulant(rec.coeffs, d);
    } else {
        if (digits[0] == 0) return std::nullopt;
        digits.push_back(1);
        SkewPoly g(d, digits);
        if (!is_right_divisor(g, x2m_minus_1)) return std::nullopt;
        rec.coeffs = std::move(digits);
        rec.matrix = quasi_recursive_product(g, static_cast<unsigned>(c.m), TwistFamily::Bracket);
    }
    // Involution is a single product; test it first when it can reject.
    rec.involutory = is_involutory(rec.matrix);
    if (c.require_involutory && !rec.involutory) return std::nullopt;
    rec.mds = is_mds(rec.matrix, MdsOptions{false, 1}).is_mds;
    if (c.require_mds && !rec.mds) return std::nullopt;
    return rec;
}

}  // namespace

void validate(const SearchConfig& config) {
    if (!config.field) throw Error(ErrorCode::InvalidArgument, "search needs a field");
    if (config.m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
    if (config.m > kMaxMdsOrder) {
        throw Error(ErrorCode::OrderTooLarge, "m = " + std::to_string(config.m) + " exceeds 8");
    }
    if (config.limit < 1) throw Error(ErrorCode::InvalidArgument, "limit must be at least 1");
    if (config.beta && !config.field->contains(*config.beta)) {
        throw Error(ErrorCode::InvalidArgument, "beta outside the field");
    }
    Automorphism(config.field, config.theta_k);
}

SearchResult run_search(const SearchConfig& config) {
    validate(config);
    const ThetaDerivation d(Automorphism(config.field, config.theta_k), config.beta.value_or(0));
    const SkewPoly x2m_minus_1 = SkewPoly::x_pow_minus_one(d, 2 * config.m);
    const Word q = config.field->size();
    const std::size_t m = config.m;

    SearchResult result;
    const std::uint64_t space = candidate_space(q, m);
    result.exhaustive = space <= kExhaustiveLimit;
    result.candidates = result.exhaustive ? space : config.samples;

    // Candidate digits for index i. Sampling draws m words per candidate from
    // one mt19937_64 stream; q is a power of two so masking is exact.
    std::vector<Word> sampled;
    if (!result.exhaustive) {
        std::mt19937_64 rng(config.seed);
        sampled.resize(result.candidates * m);
        for (Word& w : sampled) w = static_cast<Word>(rng()) & (q - 1);
    }
    auto digits_of = [&](std::uint64_t i) {
        std::vector<Word> digits(m);
        if (result.exhaustive) {
            for (std::size_t k = 0; k < m; ++k) {
                digits[k] = static_cast<Word>(i % q);
                i /= q;
            }
        } else {
            std::copy_n(sampled.begin() + static_cast<std::ptrdiff_t>(i * m), m, digits.begin());
        }
        return digits;
    };

    const unsigned workers = config.workers == 0 ? worker_count() : config.workers;
    constexpr std::uint64_t kBatch = 4096;
    for (std::uint64_t base = 0; base < result.candidates && result.records.size() < config.limit;
         base += kBatch) {
        const std::uint64_t len = std::min(kBatch, result.candidates - base);
        const std::size_t slots = std::max<std::size_t>(1, workers * 4);
        std::vector<std::vector<SearchRecord>> found(slots);
        parallel_ranges(
            len, slots,
            [&](std::uint64_t lo, std::uint64_t hi, std::size_t slot) {
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (auto rec = evaluate(config, d, x2m_minus_1, base + i, digits_of(base + i))) {
                        found[slot].push_back(std::move(*rec));
                    }
                }
            },
            workers);
        // Slots cover consecutive ranges, so concatenation keeps candidate order.
        for (auto& slot : found) {
            for (auto& rec : slot) {
                if (result.records.size() == config.limit) break;
                result.examined = rec.candidate + 1;
                result.records.push_back(std::move(rec));
            }
        }
        if (result.records.size() < config.limit) result.examined = base + len;
    }
    return result;
}

}  // namespace mdskit::cli
