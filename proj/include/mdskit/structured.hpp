#pragma once

// Builders for delta_theta-circulant, companion and quasi-recursive product
// matrices, plus the theta-cyclic code generator they come from.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdskit/matrix.hpp"
#include "mdskit/skew_poly.hpp"
#include "mdskit/twist.hpp"

namespace mdskit {

/// Non-fatal findings from builders that accept inputs outside the
/// hypotheses of the guarantees they are usually paired with.
struct Diagnostics {
    std::vector<std::string> warnings;
};

/// Row recurrence: row_{j+1}[t] = delta(row_j[t]) + theta(row_j[t-1 mod m]).
/// Works for any beta, commuting or not.
FMatrix delta_theta_circulant(std::span<const Word> first_row, const ThetaDerivation& d,
                              Diagnostics* diag = nullptr);

/// Entry (s,u) = sum_i C(s,i) theta^i(delta^(s-i)(h_{(u-i) mod m})).
/// Throws NonCommutingDerivation unless delta commutes with theta.
FMatrix delta_theta_circulant_closed_form(std::span<const Word> h, const ThetaDerivation& d);

/// Matrix of Q -> Q * h mod (X^m - 1) in the basis 1, X, ..., X^(m-1):
/// row k holds the coefficients of X^k * h reduced by right division.
FMatrix right_multiplication_matrix(const SkewPoly& h, std::size_t m);

/// Superdiagonal ones, last row (g_0, ..., g_{m-1}).
FMatrix companion(const SkewPoly& g);

/// Inverse of the i-th bracket twist of the companion matrix, in closed form.
FMatrix companion_inverse(const SkewPoly& g, unsigned i);

/// twist(C, r-1) * ... * twist(C, 1) * C with C = companion(g).
FMatrix quasi_recursive_product(const SkewPoly& g, unsigned r, TwistFamily family);
/// Same product for an arbitrary square matrix.
FMatrix quasi_recursive_product(const FMatrix& m, const ThetaDerivation& d, unsigned r,
                                TwistFamily family);

/// N_g = C^[m-1] ... C for a monic degree-m right divisor g of X^(2m) - 1,
/// after checking theta^m = id and |theta| | 2m. The result is involutory.
FMatrix involutory_quasi_recursive(const SkewPoly& g);

/// Stacked coefficient rows of X^i mod *g, ..., X^(i+m-1) mod *g, each
/// computed by right division.
FMatrix stacked_remainders(const SkewPoly& g, std::size_t i);

struct ThetaCyclicCode {
    FMatrix generator;            ///< (n-m) x n, rows X^i * g
    FMatrix systematic;           ///< (n-m) x n, rows (X^(m+i) mod *g | e_i)
    std::optional<FMatrix> redundant;  ///< m x m block for n = 2m
};

ThetaCyclicCode theta_cyclic_generator(const SkewPoly& g, std::size_t n);

/// D M D^-1. Throws NotDiagonal / SingularMatrix. When theta is supplied, a
/// warning is recorded for diagonal entries outside its fixed field.
FMatrix diag_similar(const FMatrix& m, const FMatrix& d, const Automorphism* theta = nullptr,
                     Diagnostics* diag = nullptr);
/// P M P^-1 for a 0/1 permutation matrix.
FMatrix perm_similar(const FMatrix& m, const FMatrix& p);

/// True iff every entry of `a` lies in the fixed field of theta.
bool entries_fixed_by(const FMatrix& a, const Automorphism& theta);

/// The order-reversal permutation matrix (ones on the anti-diagonal).
FMatrix reversal_matrix(Field field, std::size_t n);

/// circ(0, ..., 0, 1).
FMatrix cyclic_shift_matrix(Field field, std::size_t n);

}  // namespace mdskit
