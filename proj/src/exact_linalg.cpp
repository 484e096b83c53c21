#include "ordhyp/exact_linalg.hpp"

#include "ordhyp/error.hpp"

#include <cassert>
#include <cctype>
#include <string>
#include <utility>

namespace ordhyp {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

// Multiplies each row by the lcm of its denominators. Row scaling changes
// neither rank nor kernel.
std::vector<Integer> clear_row_denominators(const Matrix& m)
{
    std::vector<Integer> out(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (const auto& x : m.row(r))
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            out[r * m.cols() + c] = x.get_num() * (scale / x.get_den());
        }
    }
    return out;
}

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// In-place Bareiss elimination to row echelon form. Every surviving entry is
// a minor of the original matrix, so every division is exact.
Echelon bareiss(std::vector<Integer>& a, std::size_t nrows, std::size_t ncols)
{
    Echelon e;
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p * ncols + c]) == 0)
            ++p;
        if (p == nrows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < ncols; ++j)
                std::swap(a[p * ncols + j], a[r * ncols + j]);
        const Integer& pivot = a[r * ncols + c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            Integer& lead = a[i * ncols + c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer& x = a[i * ncols + j];
                x *= pivot;
                tmp = lead * a[r * ncols + j];
                x -= tmp;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto slash = text.find('/');
    Rational out;
    if (slash == std::string_view::npos) {
        out = Rational(parse_integer(text));
    } else {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (sgn(den) == 0)
            throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        out = Rational(num, den);
        out.canonicalize();
    }
    return out;
}

std::string to_string(const Rational& raw)
{
    Rational value = raw;
    value.canonicalize();
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , entries_(rows * cols)
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows)
    , cols_(cols)
    , entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
}

Matrix Matrix::identity(std::size_t size)
{
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match columns");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::size_t rank(const Matrix& m)
{
    assert(!m.empty());
    return detail::integer_rank(clear_row_denominators(m), m.rows(), m.cols());
}

Rational determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // det(m) = det(scaled) / prod(row scales); recover the scales first.
    Rational scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer s = 1;
        for (const auto& x : m.row(r))
            mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), x.get_den_mpz_t());
        scale *= s;
    }
    auto a = clear_row_denominators(m);
    // Track row swaps for the sign; redo the pivot search locally.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p * n + c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[p * n + j], a[c * n + j]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Integer& x = a[i * n + j];
                x = x * a[c * n + c] - a[i * n + c] * a[c * n + j];
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + c] = 0;
        }
        prev = a[c * n + c];
    }
    Rational det(a[(n - 1) * n + (n - 1)] * sign);
    det /= scale;
    return det;
}

std::vector<Rational> nullspace_vector(const Matrix& m)
{
    if (m.empty() || m.cols() != m.rows() + 1)
        throw Error(ErrorKind::DimensionMismatch, "nullspace_vector expects a d x (d+1) matrix");
    std::vector<Integer> h;
    if (!detail::integer_nullspace(clear_row_denominators(m), m.rows(), m.cols(), h))
        throw Error(ErrorKind::RankDeficient, "rows do not have full rank");
    std::vector<Rational> out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        out[i] = Rational(h[i]);
    return out;
}

namespace detail {

std::size_t integer_rank(std::vector<Integer> rows, std::size_t nrows, std::size_t ncols)
{
    return bareiss(rows, nrows, ncols).rank;
}

bool integer_nullspace(std::vector<Integer> a, std::size_t nrows, std::size_t ncols, std::vector<Integer>& out)
{
    assert(ncols == nrows + 1);
    const Echelon e = bareiss(a, nrows, ncols);
    if (e.rank < nrows)
        return false;

    std::size_t free_col = ncols - 1;
    for (std::size_t c = 0, k = 0; c < ncols; ++c) {
        if (k < e.pivot_cols.size() && e.pivot_cols[k] == c) {
            ++k;
        } else {
            free_col = c;
            break;
        }
    }

    // Back substitution with x_free = 1.
    std::vector<Rational> x(ncols);
    x[free_col] = 1;
    Rational acc;
    for (std::size_t r = nrows; r-- > 0;) {
        const std::size_t pc = e.pivot_cols[r];
        acc = 0;
        for (std::size_t j = pc + 1; j < ncols; ++j)
            if (sgn(a[r * ncols + j]) != 0 && sgn(x[j]) != 0)
                acc += Rational(a[r * ncols + j]) * x[j];
        x[pc] = -acc / Rational(a[r * ncols + pc]);
    }

    Integer lcm = 1;
    for (const auto& v : x)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    out.resize(ncols);
    for (std::size_t i = 0; i < ncols; ++i)
        out[i] = x[i].get_num() * (lcm / x[i].get_den());
    return true;
}

} // namespace detail

} // namespace ordhyp
