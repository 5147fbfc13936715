#pragma once

/**
 * @file exactmath.hpp
 * @brief Exact rational scalars, dense univariate polynomials and matrices.
 *
 * Everything here works over Q with GMP-backed rationals. Polynomials are
 * stored densely in ascending degree order; the zero polynomial is the empty
 * coefficient list. Matrices are row-major.
 *
 * All values are immutable once built and every function is pure, so the
 * types can be shared across threads freely.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclo {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Raised for inputs outside an operation's domain (zero divisor, odd period, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for malformed text input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "[+-]digits[/digits]" with a positive denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly constant(const Rational& c);
    /// c * x^k
    static RatPoly monomial(std::size_t k, const Rational& c = 1);
    /// x^n - 1
    static RatPoly unity_minus_one(std::size_t n);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k (zero past the degree).
    [[nodiscard]] Rational coeff(std::size_t k) const;
    [[nodiscard]] const Rational& leading() const;

    [[nodiscard]] bool is_monic() const;
    [[nodiscard]] bool has_integer_coeffs() const;
    [[nodiscard]] RatPoly monic() const;
    /// Coefficient list reversed: x^deg * p(1/x).
    [[nodiscard]] RatPoly reversed() const;
    [[nodiscard]] RatPoly derivative() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& c, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

struct Bezout {
    RatPoly gcd;  ///< monic
    RatPoly u;
    RatPoly v;    ///< u*a + v*b == gcd
};

DivMod divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// Quotient of a division that must leave no remainder.
RatPoly exact_divide(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& divisor, const RatPoly& p);

/// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
Bezout xgcd(const RatPoly& a, const RatPoly& b);
/// Res(a,b) = det of the Sylvester matrix = lc(a)^deg(b) * prod b(alpha) over roots of a.
Rational resultant(const RatPoly& a, const RatPoly& b);

/// Comma-separated ascending coefficients, e.g. "1,2,2,1". "0" is the zero polynomial.
RatPoly parse_poly(std::string_view text);
std::string format_poly(const RatPoly& p);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Rational> multiply(std::span<const Rational> v) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational bareiss_det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Basis of the right nullspace, one vector per free column of the reduced echelon form.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

}  // namespace cyclo
