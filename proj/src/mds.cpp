#include "mdskit/mds.hpp"

#include <algorithm>

#include "mdskit/parallel.hpp"
#include "mdskit/structured.hpp"

namespace mdskit {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// q >= 4, so the 2^24 cap also keeps m <= 12 and the stack buffers below valid.
std::uint64_t enumeration_size(const GaloisField& f, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= f.size();
        if (total > kMaxEnumeration) {
            throw Error(ErrorCode::SearchSpaceTooLarge,
                        "q^m exceeds 2^24 (q = " + std::to_string(f.size()) + ", m = " + std::to_string(m) + ")");
        }
    }
    return total;
}

// Digits of `index` in base q, least significant first.
void decode_message(std::uint64_t index, Word q, std::span<Word> out) {
    for (Word& w : out) {
        w = static_cast<Word>(index % q);
        index /= q;
    }
}

std::size_t nonzero_count(std::span<const Word> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Word w) { return w != 0; }));
}

// wt(u) + wt(u * rows) for a row-major m x m block.
std::size_t codeword_weight(const GaloisField& f, std::span<const Word> u,
                            const std::vector<Word>& rows, std::size_t m, std::span<Word> scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) scratch[j] ^= f.mul(u[i], rows[i * m + j]);
    }
    return nonzero_count(u) + nonzero_count(scratch);
}

}  // namespace

std::uint64_t total_minor_count(std::size_t m) {
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        const std::uint64_t c = binomial(m, k);
        total += c * c;
    }
    return total;
}

MdsReport is_mds(const FMatrix& m, const MdsOptions& options) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "MDS check needs a square matrix");
    const std::size_t n = m.rows();
    if (n > kMaxMdsOrder) {
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds 8");
    }

    std::vector<std::vector<std::vector<std::size_t>>> combos(n + 1);
    std::vector<std::uint64_t> offsets(n + 2, 0);  // first global index of size-k minors
    for (std::size_t k = 1; k <= n; ++k) {
        combos[k] = combinations(n, k);
        offsets[k + 1] = offsets[k] + combos[k].size() * combos[k].size();
    }
    const std::uint64_t total = offsets[n + 1];
    const GaloisField& f = *m.field();

    auto locate = [&](std::uint64_t index) {
        std::size_t k = 1;
        while (index >= offsets[k + 1]) ++k;
        const std::uint64_t local = index - offsets[k];
        const std::uint64_t per_row = combos[k].size();
        return std::tuple{k, static_cast<std::size_t>(local / per_row), static_cast<std::size_t>(local % per_row)};
    };

    auto nonsingular = [&](std::uint64_t index) {
        auto [k, ri, ci] = locate(index);
        const auto& rs = combos[k][ri];
        const auto& cs = combos[k][ci];
        Word scratch[kMaxMdsOrder * kMaxMdsOrder];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = m(rs[i], cs[j]);
        }
        return determinant_in_place(f, std::span<Word>(scratch, k * k), k) != 0;
    };

    MdsReport report;
    const auto failure = parallel_first_failure(total, nonsingular, options.workers);
    if (!failure) {
        report.is_mds = true;
        report.minors_checked = total;
        return report;
    }
    auto [k, ri, ci] = locate(*failure);
    report.failing_minor = Minor{combos[k][ri], combos[k][ci]};
    report.minors_checked = options.full_enumeration ? total : *failure + 1;
    return report;
}

bool is_involutory(const FMatrix& m) {
    if (!m.is_square()) return false;
    return (m * m).is_identity();
}

WeightCriterionResult weight_criterion_mds(const SkewPoly& h, std::size_t m, unsigned workers) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
    const GaloisField& f = *h.field();
    const std::uint64_t total = enumeration_size(f, m);

    // Row k: X^k * h reduced mod X^m - 1.
    std::vector<Word> rows(m * m, 0);
    for (std::size_t k = 0; k < m; ++k) {
        const SkewPoly r = fold_xm_minus_1(skew_mul(SkewPoly::monomial(h.ring(), k), h), m);
        for (std::size_t j = 0; j < m; ++j) rows[k * m + j] = r.coeff(j);
    }

    auto ok = [&](std::uint64_t index) {
        Word q[32];
        Word scratch[32];
        const std::span<Word> qs(q, m);
        decode_message(index + 1, f.size(), qs);
        return codeword_weight(f, qs, rows, m, std::span<Word>(scratch, m)) >= m + 1;
    };

    WeightCriterionResult result;
    result.two_sided = !xm_minus_1_obstruction(h.ring(), m).has_value();
    const auto failure = parallel_first_failure(total - 1, ok, workers);
    if (!failure) {
        result.holds = true;
        result.messages_checked = total - 1;
        return result;
    }
    std::vector<Word> q(m);
    decode_message(*failure + 1, f.size(), q);
    result.witness = SkewPoly(h.ring(), std::move(q));
    result.messages_checked = *failure + 1;
    return result;
}

MdsReport quasi_r_mds(const FMatrix& m, const ThetaDerivation& d, unsigned r, TwistFamily family,
                      const MdsOptions& options) {
    return is_mds(quasi_recursive_product(m, d, r, family), options);
}

SupportWeightResult support_weight_criterion(const SkewPoly& g, std::size_t t, std::size_t m,
                                             unsigned workers) {
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "support criterion needs a monic polynomial");
    if (g.degree() != static_cast<int>(m)) {
        throw Error(ErrorCode::InvalidArgument, "deg g = " + std::to_string(g.degree()) + " but m = " + std::to_string(m));
    }
    if (g.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "g(0) = 0");
    const GaloisField& f = *g.field();
    const std::uint64_t total = enumeration_size(f, m);

    SupportWeightResult result;
    const auto order = poly_order(g, default_order_bound(g));
    if (!order) throw Error(ErrorCode::InvalidArgument, "ord(g) exceeds the search bound");
    result.order = *order;
    if (t < m || t + m > *order) {
        throw Error(ErrorCode::InvalidArgument, "need m <= t <= ord(g) - m, got t = " + std::to_string(t) +
                                                    ", ord(g) = " + std::to_string(*order));
    }

    // X^(t+i) mod *g by right division, independent of any companion product.
    std::vector<Word> rows(m * m, 0);
    SkewPoly r = x_power_mod(t, g);
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) r = right_rem(x_times(r), g);
        for (std::size_t j = 0; j < m; ++j) rows[i * m + j] = r.coeff(j);
    }

    auto ok = [&](std::uint64_t index) {
        Word u[32];
        Word scratch[32];
        const std::span<Word> us(u, m);
        decode_message(index + 1, f.size(), us);
        return codeword_weight(f, us, rows, m, std::span<Word>(scratch, m)) >= m + 1;
    };
    const auto failure = parallel_first_failure(total - 1, ok, workers);
    if (!failure) {
        result.holds = true;
        return result;
    }
    std::vector<Word> u(m);
    decode_message(*failure + 1, f.size(), u);
    result.witness = std::move(u);
    return result;
}

std::pair<bool, bool> similarity_preserves_quasi_mds(const FMatrix& m, const ThetaDerivation& d,
                                                     unsigned r, const FMatrix& conjugator) {
    if (!d.commutes()) {
        throw Error(ErrorCode::NonCommutingDerivation, "similarity invariance assumes delta o theta = theta o delta");
    }
    FMatrix conjugated = m;
    if (conjugator.is_permutation()) {
        conjugated = perm_similar(m, conjugator);
    } else if (conjugator.is_diagonal()) {
        if (!entries_fixed_by(conjugator, d.theta())) {
            throw Error(ErrorCode::EntriesNotFixed, "diagonal conjugator leaves the fixed field of theta");
        }
        conjugated = diag_similar(m, conjugator);
    } else {
        throw Error(ErrorCode::NotDiagonal, "conjugator is neither diagonal nor a permutation");
    }
    return {quasi_r_mds(m, d, r).is_mds, quasi_r_mds(conjugated, d, r).is_mds};
}

}  // namespace mdskit
