#pragma once

#include <vector>

#include "copoly/poly.hpp"

namespace copoly {

inline constexpr int kMaxSeriesOrder = 16;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with exact rational
/// coefficients. Binary operations truncate to the smaller order.
class RatSeries {
public:
    RatSeries() = default;
    explicit RatSeries(std::vector<Rational> coeffs);

    static RatSeries zero(int order);
    static RatSeries constant(int order, const Rational& c);
    /// The series z.
    static RatSeries variable(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    RatSeries truncated(int order) const;

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
    /// Requires b[0] != 0.
    friend RatSeries operator/(const RatSeries& a, const RatSeries& b);
    friend bool operator==(const RatSeries&, const RatSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Antiderivative with zero constant term; the order grows by one.
RatSeries integrate(const RatSeries& a);
/// Order drops by one.
RatSeries derivative(const RatSeries& a);
/// Requires a[0] = 1.
RatSeries log(const RatSeries& a);
/// exp, sin and cos of a series with a[0] = 0.
RatSeries exp(const RatSeries& a);
RatSeries sin(const RatSeries& a);
RatSeries cos(const RatSeries& a);

/// F(z) = ln((1 + sin z) / cos^2 z), checked against the antiderivative
/// of (1 + sin z) / cos z to order N <= 16.
RatSeries build_F(int order);

/// p_0..p_N with sum_n p_n(x) z^n / n! = exp(x F(z)); N <= 10. Throws
/// ConsistencyError if any n! [z^n] coefficient is not an integer.
std::vector<IntPoly> egf_reconstruct(int order);

}  // namespace copoly
