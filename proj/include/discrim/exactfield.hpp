#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace discrim {

/// Raised when two scalars from different quadratic fields meet.
class FieldMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed scalar literal; `column` is 1-based within the literal.
class ScalarParseError : public std::invalid_argument {
public:
    ScalarParseError(const std::string& what, std::size_t column)
        : std::invalid_argument(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/*
 * Exact element a + b*sqrt(d) of Q(sqrt(d)), or a plain rational when b = 0.
 *
 * A value with b = 0 carries no radicand (d = 0) and combines freely with any
 * field. Two values with nonzero irrational parts must share d, otherwise
 * FieldMismatch is thrown.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT: implicit on purpose, integer literals
    Scalar(const mpq_class& q) : a_(q) { a_.canonicalize(); }  // NOLINT
    Scalar(const mpq_class& a, const mpq_class& b, long d);

    static Scalar rational(long num, long den = 1);
    /// Parses "p", "p/q", decimals, and "a + b*sqrt(d)" style sums.
    static Scalar parse(std::string_view text);

    const mpq_class& rational_part() const noexcept { return a_; }
    const mpq_class& irrational_part() const noexcept { return b_; }
    /// Radicand, or 0 for a rational value.
    long radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return sgn(b_) == 0; }
    bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

    int sign() const;
    Scalar conjugate() const;
    /// a^2 - d b^2, always rational.
    mpq_class norm() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.d_ == y.d_ || sgn(x.b_) == 0);
    }
    /// Numeric order on the real line.
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    std::string to_string() const;

private:
    static long merge_radicand(long d1, long d2);
    void normalize();

    mpq_class a_{0};
    mpq_class b_{0};
    long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Structural total order usable as a map key (cheaper than numeric compare).
struct ScalarKeyLess {
    bool operator()(const Scalar& x, const Scalar& y) const;
};

using Vector = std::vector<Scalar>;

struct VectorKeyLess {
    bool operator()(const Vector& x, const Vector& y) const;
};

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero(std::span<const Scalar> v);

/// Canonical representative of the projective class of a nonzero vector:
/// primitive integer vector with positive leading entry when the class has a
/// rational representative, otherwise leading entry 1.
Vector canonical_projective(std::span<const Scalar> v);

/// Dense row-major matrix of scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);
/// Determinant by fraction-free (Bareiss) elimination. Requires a square matrix.
Scalar det(const Matrix& m);

struct AffineSubspace {
    Vector basepoint;
    std::vector<Vector> basis;
    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Solutions of m x = rhs; std::nullopt when the system is inconsistent.
std::optional<AffineSubspace> solution_space(const Matrix& m, std::span<const Scalar> rhs);

/*
 * Row space of a set of vectors in reduced row echelon form. The echelon form
 * is unique per subspace, so equality and ordering of Subspace values are
 * equality and ordering of the underlying linear spaces.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<Vector>& basis() const noexcept { return rows_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;
    /// Adds v to the span; returns false when v was already inside.
    bool insert(std::span<const Scalar> v);

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_ == y.ambient_ && x.rows_ == y.rows_;
    }

private:
    Vector reduce(std::span<const Scalar> v) const;

    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceKeyLess {
    bool operator()(const Subspace& x, const Subspace& y) const;
};

}  // namespace discrim
