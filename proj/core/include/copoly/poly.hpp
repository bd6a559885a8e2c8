#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace copoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; coeffs()[i] multiplies x^i. The zero polynomial has no
/// coefficients, and there are never trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(int degree, const Integer& coeff = 1);
    static IntPoly constant(const Integer& c) { return monomial(0, c); }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero for indices past the degree.
    Integer coefficient(int i) const;

    Rational eval(const Rational& t) const;
    Integer eval(const Integer& t) const;
    double eval(double t) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
    friend IntPoly operator-(IntPoly a) { return a *= Integer(-1); }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Multiplies by x^k.
    IntPoly shifted(int k) const;
    /// p(a*x + b).
    IntPoly compose_linear(const Integer& a, const Integer& b) const;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };

IntPoly poly_arith(const IntPoly& p, const IntPoly& q, PolyOp op);
IntPoly scale(const IntPoly& p, const Integer& s);

/// (-1)^deg(p) * p(-x).
IntPoly reflect_negate(const IntPoly& p);

/// Dense bivariate polynomial, entry (i, j) multiplies x^i y^j. Trailing
/// all-zero rows and columns are trimmed; the zero polynomial is empty.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<Integer>> coeffs);

    /// p(x) * q(y).
    static BiPoly outer(const IntPoly& px, const IntPoly& qy);

    const std::vector<std::vector<Integer>>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree_x() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_y() const noexcept;
    Integer coefficient(int i, int j) const;
    void add_to(int i, int j, const Integer& c);

    Rational eval(const Rational& x, const Rational& y) const;
    /// Fixes y, leaving a polynomial in x.
    IntPoly at_y(const Integer& y) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void normalize();

    std::vector<std::vector<Integer>> coeffs_;
};

/// p(x + y) expanded.
BiPoly substitute_sum(const IntPoly& p);

/// Descending degree, unit coefficients and zero terms suppressed:
/// "x^4-6x^3+7x^2-2x".
std::string to_string(const IntPoly& p, std::string_view var = "x");
/// Terms by descending x-degree, then descending y-degree.
std::string to_string(const BiPoly& p, std::string_view xvar = "x", std::string_view yvar = "y");

/// Inverse of the univariate rendering; accepts optional whitespace.
IntPoly parse_poly(std::string_view text, char var = 'x');

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace copoly
