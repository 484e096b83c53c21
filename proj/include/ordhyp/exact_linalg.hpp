#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordhyp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). The result is always reduced.
/// Throws Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t size);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    Matrix transpose() const;
    std::vector<Rational> apply(std::span<const Rational> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Rational determinant(const Matrix& m);

/// Nonzero h with m * h = 0 for a d x (d+1) matrix of rank d. The vector is
/// not normalized. Throws Error{RankDeficient} when rank(m) < d and
/// Error{DimensionMismatch} when the shape is not d x (d+1).
std::vector<Rational> nullspace_vector(const Matrix& m);

namespace detail {

/// Integer kernels behind rank/nullspace_vector; rows are already cleared of
/// denominators. Exposed for the incidence hot path, which works on primitive
/// integer coordinates directly.
std::size_t integer_rank(std::vector<Integer> rows, std::size_t nrows, std::size_t ncols);
bool integer_nullspace(std::vector<Integer> rows, std::size_t nrows, std::size_t ncols, std::vector<Integer>& out);

} // namespace detail

} // namespace ordhyp
