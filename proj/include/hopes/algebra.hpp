/**
 * Exact linear algebra over GF(p) and over the rationals: rank, kernel
 * bases, row reduction and max-weight column selection for the elder rule.
 */

#ifndef HOPES_ALGEBRA_HPP
#define HOPES_ALGEBRA_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hopes {

using Rational = boost::multiprecision::cpp_rational;

/** The coefficient field: GF(p) for a prime p, or the rationals. */
class Field {
public:
    static Field prime(long p);
    static Field rationals();

    bool is_rational() const { return p_ == 0; }
    long modulus() const { return p_; }

    // Element operations. Prime-field elements are kept as integers in
    // [0, p); rationals in canonical reduced form (cpp_rational invariant).
    Rational from_int(long v) const;
    Rational reduce(const Rational& v) const;
    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    explicit Field(long p) : p_(p) {}
    long p_;   // 0 means rationals
};

/** Dense matrix over a Field, row-major. */
class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const
    {
        return a_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, const Rational& v);
    void set(std::size_t i, std::size_t j, long v);

    FieldMatrix transposed() const;
    // Horizontal concatenation [this | other]; row counts must match.
    FieldMatrix hstack(const FieldMatrix& other) const;
    FieldMatrix multiply(const FieldMatrix& other) const;
    bool is_zero() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Rank via Gaussian elimination over the matrix field.
std::size_t rank(const FieldMatrix& M);

// Columns form a basis of the null space of M; column count = cols - rank.
FieldMatrix kernel_basis(const FieldMatrix& M);

// Pivot column indices of the row echelon form of M.
std::vector<std::size_t> pivot_columns(const FieldMatrix& M);

// Indices of a maximal independent column subset, greedily left to right.
std::vector<std::size_t> independent_columns(const FieldMatrix& M);

/**
 * Greedy max-weight column basis of the column matroid of C. C must be
 * r x s with independent rows; the result is an r-element column set of
 * maximal total weight among those on which the system C x = 0 is solvable
 * for the selected variables. Ties are broken toward lower column index.
 */
std::vector<std::size_t> leading_set(const FieldMatrix& C,
                                     const std::vector<double>& weights);

// True iff C restricted to the given columns has full row rank. Used to
// enumerate all feasible leading-variable sets in tests and the oracle.
bool leading_set_feasible(const FieldMatrix& C,
                          const std::vector<std::size_t>& columns);

/**
 * Incremental column independence tester: keeps accepted columns in
 * reduced form so each candidate costs one back-substitution. Drives the
 * greedy spanning-tree sweep and the oracle's forest enumeration.
 */
class ColumnSpan {
public:
    ColumnSpan(Field field, std::size_t height);

    // Adds the column if it is independent of the accepted span; returns
    // false (and leaves the span unchanged) when it is dependent.
    bool add(std::vector<Rational> column);
    bool contains(std::vector<Rational> column) const;
    std::size_t size() const { return pivots_.size(); }
    void pop();   // removes the most recently accepted column

private:
    void reduce(std::vector<Rational>& column) const;

    Field field_;
    std::size_t height_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> pivots_;
};

}  // namespace hopes

#endif  // HOPES_ALGEBRA_HPP
