#pragma once

// MDS, involution and quasi-recursive checks, with the weight-based oracles
// that cross-validate the minor enumeration.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdskit/matrix.hpp"
#include "mdskit/skew_poly.hpp"
#include "mdskit/twist.hpp"

namespace mdskit {

struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    friend bool operator==(const Minor&, const Minor&) = default;
};

struct MdsReport {
    bool is_mds = false;
    /// First singular minor in lexicographic order (by size, then rows, then cols).
    std::optional<Minor> failing_minor;
    /// Minors examined up to and including the witness, or all of them.
    std::uint64_t minors_checked = 0;
};

struct MdsOptions {
    /// Report minors_checked as the full count even when a failure is found.
    bool full_enumeration = false;
    unsigned workers = 0;  ///< 0 = MDSKIT_THREADS / hardware default
};

constexpr std::size_t kMaxMdsOrder = 8;

/// sum_{k=1..m} C(m,k)^2
std::uint64_t total_minor_count(std::size_t m);

MdsReport is_mds(const FMatrix& m, const MdsOptions& options = {});

bool is_involutory(const FMatrix& m);

/// Largest enumeration the weight criteria will attempt: q^m <= 2^24.
constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

struct WeightCriterionResult {
    bool holds = false;
    /// A nonzero Q of degree < m with wt(Q) + wt(Q*h mod X^m - 1) <= m.
    std::optional<SkewPoly> witness;
    /// Whether X^m - 1 generates a two-sided ideal in h's ring.
    bool two_sided = false;
    std::uint64_t messages_checked = 0;
};

/// For every nonzero Q of degree < m, wt(Q) + wt(Q*h mod (X^m - 1)) >= m + 1.
/// Products are reduced by right division, which is well defined for every
/// beta; `two_sided` records whether the quotient is also a ring.
WeightCriterionResult weight_criterion_mds(const SkewPoly& h, std::size_t m, unsigned workers = 0);

/// Builds M^<r-1> ... M^<1> M (or the bracket product) and runs is_mds.
MdsReport quasi_r_mds(const FMatrix& m, const ThetaDerivation& d, unsigned r,
                      TwistFamily family = TwistFamily::Angle, const MdsOptions& options = {});

struct SupportWeightResult {
    bool holds = false;
    /// Message (u_0, ..., u_{m-1}) whose codeword has weight <= m.
    std::optional<std::vector<Word>> witness;
    std::uint64_t order = 0;  ///< ord(g) used for the t range check
};

/// Enumerates left multiples of g supported on {0..m-1} u {t..t+m-1}; they
/// are parameterised by u in F_q^m as sum u_i (X^(t+i) - X^(t+i) mod *g).
/// Holds iff each nonzero one has weight > m.
SupportWeightResult support_weight_criterion(const SkewPoly& g, std::size_t t, std::size_t m,
                                             unsigned workers = 0);

/// quasi_r_mds verdicts for M and for its conjugate by D (diagonal over the
/// fixed field) or P (permutation).
std::pair<bool, bool> similarity_preserves_quasi_mds(const FMatrix& m, const ThetaDerivation& d,
                                                     unsigned r, const FMatrix& conjugator);

}  // namespace mdskit
