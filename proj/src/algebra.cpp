#include "hopes/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace hopes {

namespace {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

Field Field::prime(long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime");
    return Field(p);
}

Field Field::rationals()
{
    return Field(0);
}

Rational Field::from_int(long v) const
{
    return reduce(Rational(v));
}

Rational Field::reduce(const Rational& v) const
{
    if (is_rational())
        return v;
    // Prime-field values are integers; normalize into [0, p).
    if (boost::multiprecision::denominator(v) != 1)
        throw std::invalid_argument("non-integer value in a prime field");
    auto r = boost::multiprecision::numerator(v) % p_;
    if (r < 0)
        r += p_;
    return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const
{
    return is_rational() ? a + b : reduce(a + b);
}

Rational Field::sub(const Rational& a, const Rational& b) const
{
    return is_rational() ? a - b : reduce(a - b);
}

Rational Field::mul(const Rational& a, const Rational& b) const
{
    return is_rational() ? a * b : reduce(a * b);
}

Rational Field::neg(const Rational& a) const
{
    return is_rational() ? -a : reduce(-a);
}

Rational Field::inv(const Rational& a) const
{
    if (a == 0)
        throw std::invalid_argument("division by zero");
    if (is_rational())
        return 1 / a;
    // Extended Euclid on the integer representative.
    long v = static_cast<long>(boost::multiprecision::numerator(reduce(a)));
    long t = 0, new_t = 1, r = p_, new_r = v;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (t < 0)
        t += p_;
    return Rational(t);
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Rational(0))
{
}

void FieldMatrix::set(std::size_t i, std::size_t j, const Rational& v)
{
    a_[i * cols_ + j] = field_.reduce(v);
}

void FieldMatrix::set(std::size_t i, std::size_t j, long v)
{
    a_[i * cols_ + j] = field_.from_int(v);
}

FieldMatrix FieldMatrix::transposed() const
{
    FieldMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.a_[j * rows_ + i] = a_[i * cols_ + j];
    return out;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hstack: row count mismatch");
    FieldMatrix out(field_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            out.a_[i * out.cols_ + j] = a_[i * cols_ + j];
        for (std::size_t j = 0; j < other.cols_; ++j)
            out.a_[i * out.cols_ + cols_ + j] = other.a_[i * other.cols_ + j];
    }
    return out;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("multiply: shape mismatch");
    FieldMatrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = a_[i * cols_ + k];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& y = other.a_[k * other.cols_ + j];
                if (y == 0)
                    continue;
                out.a_[i * out.cols_ + j] =
                    field_.add(out.a_[i * out.cols_ + j], field_.mul(x, y));
            }
        }
    return out;
}

bool FieldMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(),
                       [](const Rational& v) { return v == 0; });
}

namespace {

// Row echelon form in place. Returns pivot column indices per pivot row.
std::vector<std::size_t> echelon(std::vector<std::vector<Rational>>& m,
                                 const Field& F)
{
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        Rational inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const FieldMatrix& M)
{
    std::vector<std::vector<Rational>> rows(M.rows(),
                                            std::vector<Rational>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            rows[i][j] = M.at(i, j);
    return rows;
}

}  // namespace

std::size_t rank(const FieldMatrix& M)
{
    auto rows = to_rows(M);
    return echelon(rows, M.field()).size();
}

FieldMatrix kernel_basis(const FieldMatrix& M)
{
    auto rows = to_rows(M);
    auto pivots = echelon(rows, M.field());
    const Field& F = M.field();
    std::size_t n = M.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    FieldMatrix basis(F, n, n - pivots.size());
    std::size_t out_col = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col])
            continue;
        basis.set(free_col, out_col, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.set(pivots[r], out_col, F.neg(rows[r][free_col]));
        ++out_col;
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const FieldMatrix& M)
{
    auto rows = to_rows(M);
    return echelon(rows, M.field());
}

ColumnSpan::ColumnSpan(Field field, std::size_t height)
    : field_(field), height_(height)
{
}

bool ColumnSpan::add(std::vector<Rational> column)
{
    reduce(column);
    std::size_t lead = height_;
    for (std::size_t i = 0; i < height_; ++i) {
        if (column[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead == height_)
        return false;
    Rational inv = field_.inv(column[lead]);
    for (auto& v : column)
        v = field_.mul(v, inv);
    pivots_.emplace_back(lead, std::move(column));
    return true;
}

bool ColumnSpan::contains(std::vector<Rational> column) const
{
    reduce(column);
    return std::all_of(column.begin(), column.end(),
                       [](const Rational& v) { return v == 0; });
}

void ColumnSpan::pop()
{
    pivots_.pop_back();
}

void ColumnSpan::reduce(std::vector<Rational>& column) const
{
    for (const auto& [lead, p] : pivots_) {
        if (column[lead] == 0)
            continue;
        Rational f = column[lead];
        for (std::size_t i = lead; i < height_; ++i)
            column[i] = field_.sub(column[i], field_.mul(f, p[i]));
    }
}

namespace {

std::vector<Rational> column_of(const FieldMatrix& M, std::size_t j)
{
    std::vector<Rational> col(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        col[i] = M.at(i, j);
    return col;
}

}  // namespace

std::vector<std::size_t> independent_columns(const FieldMatrix& M)
{
    ColumnSpan span(M.field(), M.rows());
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (span.add(column_of(M, j)))
            chosen.push_back(j);
    return chosen;
}

std::vector<std::size_t> leading_set(const FieldMatrix& C,
                                     const std::vector<double>& weights)
{
    if (weights.size() != C.cols())
        throw std::invalid_argument("leading_set: weight count mismatch");
    std::size_t r = C.rows();
    if (rank(C) != r)
        throw std::invalid_argument("leading_set: rows must be independent");

    std::vector<std::size_t> order(C.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return weights[a] > weights[b];
                     });

    ColumnSpan span(C.field(), r);
    std::vector<std::size_t> chosen;
    for (std::size_t j : order) {
        if (chosen.size() == r)
            break;
        if (span.add(column_of(C, j)))
            chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

bool leading_set_feasible(const FieldMatrix& C,
                          const std::vector<std::size_t>& columns)
{
    ColumnSpan span(C.field(), C.rows());
    for (std::size_t j : columns)
        if (!span.add(column_of(C, j)))
            return false;
    return span.size() == C.rows();
}

}  // namespace hopes
