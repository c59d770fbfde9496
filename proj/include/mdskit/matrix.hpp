#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdskit/finite_field.hpp"

namespace mdskit {

/// Dense row-major matrix over GF(2^m). Entries are stored as raw words; the
/// owning field travels with the matrix.
class FMatrix {
public:
    FMatrix(Field field, std::size_t rows, std::size_t cols);
    FMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Word> entries);
    FMatrix(Field field, const std::vector<std::vector<Word>>& rows);

    static FMatrix identity(Field field, std::size_t n);
    static FMatrix diagonal(Field field, std::span<const Word> diag);
    /// 0/1 matrix with a 1 at (i, perm[i]).
    static FMatrix permutation(Field field, std::span<const std::size_t> perm);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Word operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Word& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    FieldElement element(std::size_t r, std::size_t c) const { return {field_, (*this)(r, c)}; }
    void set(std::size_t r, std::size_t c, Word value);

    std::span<const Word> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<Word>& entries() const noexcept { return data_; }
    std::vector<std::vector<Word>> to_rows() const;

    FMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

    bool is_identity() const noexcept;
    bool is_diagonal() const noexcept;
    bool is_permutation() const noexcept;

    friend bool operator==(const FMatrix& a, const FMatrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Word> data_;
};

FMatrix mat_mul(const FMatrix& a, const FMatrix& b);
inline FMatrix operator*(const FMatrix& a, const FMatrix& b) { return mat_mul(a, b); }
FMatrix mat_add(const FMatrix& a, const FMatrix& b);

/// Gauss-Jordan inverse; any nonzero pivot is taken. Throws SingularMatrix.
FMatrix mat_inv(const FMatrix& a);

/// Determinant by elimination; O(n^3).
Word determinant(const FMatrix& a);

/// Determinant of a square k x k block stored row-major in `scratch`, which is
/// destroyed. Shared by the minor enumerator to avoid allocations.
Word determinant_in_place(const GaloisField& f, std::span<Word> scratch, std::size_t k);

}  // namespace mdskit
