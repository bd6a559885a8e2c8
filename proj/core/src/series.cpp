#include "copoly/series.hpp"

#include <algorithm>
#include <string>

#include "copoly/error.hpp"

namespace copoly {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxSeriesOrder) {
        throw CapacityError("series order must lie in 0.." + std::to_string(kMaxSeriesOrder));
    }
}

int common_order(const RatSeries& a, const RatSeries& b) { return std::min(a.order(), b.order()); }

void require_constant(const RatSeries& a, const Rational& value, const char* what) {
    if (a.order() < 0 || a[0] != value) throw DomainError(what);
}

}  // namespace

RatSeries::RatSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

RatSeries RatSeries::zero(int order) {
    check_order(order);
    return RatSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, 0));
}

RatSeries RatSeries::constant(int order, const Rational& c) {
    RatSeries out = zero(order);
    out.coeffs_[0] = c;
    return out;
}

RatSeries RatSeries::variable(int order) {
    RatSeries out = zero(order);
    if (order >= 1) out.coeffs_[1] = 1;
    return out;
}

RatSeries RatSeries::truncated(int order) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, std::ssize(coeffs_)));
    return RatSeries(std::move(c));
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    return RatSeries(std::move(c));
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] - b[k];
    return RatSeries(std::move(c));
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
    const int n = common_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return RatSeries(std::move(c));
}

RatSeries operator/(const RatSeries& a, const RatSeries& b) {
    if (b.order() < 0 || b[0] == 0) throw DomainError("series division needs a nonzero constant term");
    const int n = common_order(a, b);
    std::vector<Rational> q(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc / b[0];
    }
    return RatSeries(std::move(q));
}

RatSeries integrate(const RatSeries& a) {
    std::vector<Rational> c(static_cast<std::size_t>(a.order() + 2), 0);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k + 1)] = a[k] / (k + 1);
    return RatSeries(std::move(c));
}

RatSeries derivative(const RatSeries& a) {
    if (a.order() < 1) return RatSeries(std::vector<Rational>{});
    std::vector<Rational> c(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k) c[static_cast<std::size_t>(k - 1)] = a[k] * k;
    return RatSeries(std::move(c));
}

RatSeries log(const RatSeries& a) {
    require_constant(a, 1, "log needs constant term 1");
    if (a.order() == 0) return RatSeries::zero(0);
    return integrate(derivative(a) / a.truncated(a.order() - 1));
}

RatSeries exp(const RatSeries& a) {
    require_constant(a, 0, "exp needs zero constant term");
    const int n = a.order();
    std::vector<Rational> e(static_cast<std::size_t>(n + 1), 0);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k) acc += a[k] * k * e[static_cast<std::size_t>(m - k)];
        e[static_cast<std::size_t>(m)] = acc / m;
    }
    return RatSeries(std::move(e));
}

namespace {

// s' = a' c and c' = -a' s, solved together.
std::pair<RatSeries, RatSeries> sin_cos(const RatSeries& a) {
    require_constant(a, 0, "sin/cos need zero constant term");
    const int n = a.order();
    std::vector<Rational> s(static_cast<std::size_t>(n + 1), 0);
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational ds = 0;
        Rational dc = 0;
        for (int k = 1; k <= m; ++k) {
            const Rational w = a[k] * k;
            ds += w * c[static_cast<std::size_t>(m - k)];
            dc -= w * s[static_cast<std::size_t>(m - k)];
        }
        s[static_cast<std::size_t>(m)] = ds / m;
        c[static_cast<std::size_t>(m)] = dc / m;
    }
    return {RatSeries(std::move(s)), RatSeries(std::move(c))};
}

}  // namespace

RatSeries sin(const RatSeries& a) { return sin_cos(a).first; }

RatSeries cos(const RatSeries& a) { return sin_cos(a).second; }

RatSeries build_F(int order) {
    check_order(order);
    const RatSeries z = RatSeries::variable(order);
    const RatSeries one = RatSeries::constant(order, 1);
    const auto [s, c] = sin_cos(z);
    const RatSeries rise = one + s;

    const RatSeries by_log = log(rise / (c * c));
    const RatSeries by_integral =
        order == 0 ? RatSeries::zero(0) : integrate((rise / c).truncated(order - 1));
    if (by_log != by_integral) {
        throw ConsistencyError("logarithm and integral forms of F disagree");
    }
    return by_log;
}

std::vector<IntPoly> egf_reconstruct(int order) {
    if (order < 0 || order > 10) throw CapacityError("EGF reconstruction limited to order <= 10");
    const RatSeries f = build_F(order);
    // c[m] is the z^m coefficient of exp(x F(z)), a polynomial in x
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(order) + 1);
    c[0] = {1};
    for (int m = 1; m <= order; ++m) {
        std::vector<Rational> acc(static_cast<std::size_t>(m) + 1, 0);
        for (int k = 1; k <= m; ++k) {
            const Rational w = f[k] * k;
            if (w == 0) continue;
            const auto& prev = c[static_cast<std::size_t>(m - k)];
            for (std::size_t d = 0; d < prev.size(); ++d) acc[d + 1] += w * prev[d];
        }
        for (auto& v : acc) v /= m;
        c[static_cast<std::size_t>(m)] = std::move(acc);
    }

    std::vector<IntPoly> out;
    for (int m = 0; m <= order; ++m) {
        const Integer scale = factorial(m);
        std::vector<Integer> coeffs;
        for (const Rational& v : c[static_cast<std::size_t>(m)]) {
            Rational scaled = v * scale;
            if (scaled.get_den() != 1) {
                throw ConsistencyError("n! [z^n] exp(xF) has non-integer coefficient at n=" + std::to_string(m));
            }
            coeffs.push_back(scaled.get_num());
        }
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

}  // namespace copoly
