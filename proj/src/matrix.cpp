#include "mdskit/matrix.hpp"

#include <string>
#include <utility>

namespace mdskit {

namespace {

std::string dims(const FMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
}

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Word> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
    }
    for (Word w : data_) {
        if (!field_->contains(w)) throw Error(ErrorCode::InvalidArgument, "entry outside field");
    }
}

FMatrix::FMatrix(Field field, const std::vector<std::vector<Word>>& rows)
    : FMatrix(std::move(field), rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
    }
}

FMatrix FMatrix::identity(Field field, std::size_t n) {
    FMatrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

FMatrix FMatrix::diagonal(Field field, std::span<const Word> diag) {
    FMatrix out(std::move(field), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out.set(i, i, diag[i]);
    return out;
}

FMatrix FMatrix::permutation(Field field, std::span<const std::size_t> perm) {
    FMatrix out(std::move(field), perm.size(), perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]]) {
            throw Error(ErrorCode::NotPermutation, "index list is not a permutation");
        }
        seen[perm[i]] = true;
        out(i, perm[i]) = 1;
    }
    return out;
}

void FMatrix::set(std::size_t r, std::size_t c, Word value) {
    if (!field_->contains(value)) throw Error(ErrorCode::InvalidArgument, "entry outside field");
    (*this)(r, c) = value;
}

std::vector<std::vector<Word>> FMatrix::to_rows() const {
    std::vector<std::vector<Word>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

FMatrix FMatrix::submatrix(std::span<const std::size_t> row_idx,
                           std::span<const std::size_t> col_idx) const {
    FMatrix out(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return out;
}

bool FMatrix::is_identity() const noexcept {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != (r == c ? 1U : 0U)) return false;
        }
    }
    return true;
}

bool FMatrix::is_diagonal() const noexcept {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && (*this)(r, c) != 0) return false;
        }
    }
    return true;
}

bool FMatrix::is_permutation() const noexcept {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        int ones = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Word v = (*this)(r, c);
            if (v == 1) {
                ++ones;
                ++col_hits[c];
            } else if (v != 0) {
                return false;
            }
        }
        if (ones != 1) return false;
    }
    for (int h : col_hits) {
        if (h != 1) return false;
    }
    return true;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_as(*b.field_) &&
           a.data_ == b.data_;
}

FMatrix mat_mul(const FMatrix& a, const FMatrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, dims(a) + " * " + dims(b));
    }
    const GaloisField& f = *a.field();
    FMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Word aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) ^= f.mul(aik, b(k, j));
        }
    }
    return out;
}

FMatrix mat_add(const FMatrix& a, const FMatrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, dims(a) + " + " + dims(b));
    }
    std::vector<Word> sum(a.entries());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] ^= b.entries()[i];
    return FMatrix(a.field(), a.rows(), a.cols(), std::move(sum));
}

FMatrix mat_inv(const FMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of " + dims(a));
    const GaloisField& f = *a.field();
    const std::size_t n = a.rows();
    FMatrix work = a;
    FMatrix out = FMatrix::identity(a.field(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(col));
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(out(pivot, j), out(col, j));
            }
        }
        const Word scale = f.inv(work(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) = f.mul(work(col, j), scale);
            out(col, j) = f.mul(out(col, j), scale);
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Word factor = work(r, col);
            if (r == col || factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) ^= f.mul(factor, work(col, j));
                out(r, j) ^= f.mul(factor, out(col, j));
            }
        }
    }
    return out;
}

Word determinant_in_place(const GaloisField& f, std::span<Word> s, std::size_t k) {
    Word det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && s[pivot * k + col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < k; ++j) std::swap(s[pivot * k + j], s[col * k + j]);
        }
        const Word p = s[col * k + col];
        det = f.mul(det, p);
        const Word p_inv = f.inv(p);
        for (std::size_t r = col + 1; r < k; ++r) {
            const Word factor = f.mul(s[r * k + col], p_inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < k; ++j) s[r * k + j] ^= f.mul(factor, s[col * k + j]);
        }
    }
    return det;
}

Word determinant(const FMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of " + dims(a));
    std::vector<Word> scratch(a.entries());
    return determinant_in_place(*a.field(), scratch, a.rows());
}

}  // namespace mdskit
