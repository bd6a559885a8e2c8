#include "copoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace copoly {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(int degree, const Integer& coeff) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational IntPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

Integer IntPoly::eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double IntPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Integer> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::compose_linear(const Integer& a, const Integer& b) const {
    const IntPoly inner(std::vector<Integer>{b, a});
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += IntPoly::constant(*it);
    }
    return acc;
}

IntPoly poly_arith(const IntPoly& p, const IntPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    return {};
}

IntPoly scale(const IntPoly& p, const Integer& s) { return p * s; }

IntPoly reflect_negate(const IntPoly& p) {
    std::vector<Integer> c = p.coeffs();
    const int d = p.degree();
    for (int i = 0; i <= d; ++i) {
        if ((d - i) % 2 != 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    }
    return IntPoly(std::move(c));
}

BiPoly::BiPoly(std::vector<std::vector<Integer>> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

BiPoly BiPoly::outer(const IntPoly& px, const IntPoly& qy) {
    std::vector<std::vector<Integer>> c(px.coeffs().size());
    for (std::size_t i = 0; i < px.coeffs().size(); ++i) {
        c[i].reserve(qy.coeffs().size());
        for (const Integer& q : qy.coeffs()) c[i].push_back(px.coeffs()[i] * q);
    }
    return BiPoly(std::move(c));
}

void BiPoly::normalize() {
    for (auto& row : coeffs_) {
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

int BiPoly::degree_y() const noexcept {
    int d = -1;
    for (const auto& row : coeffs_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Integer BiPoly::coefficient(int i, int j) const {
    if (i < 0 || j < 0 || i > degree_x()) return 0;
    const auto& row = coeffs_[static_cast<std::size_t>(i)];
    return static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : Integer(0);
}

void BiPoly::add_to(int i, int j, const Integer& c) {
    if (c == 0) return;
    if (static_cast<std::size_t>(i) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(i) + 1);
    auto& row = coeffs_[static_cast<std::size_t>(i)];
    if (static_cast<std::size_t>(j) >= row.size()) row.resize(static_cast<std::size_t>(j) + 1, 0);
    row[static_cast<std::size_t>(j)] += c;
    normalize();
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        Rational inner = 0;
        for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y + Rational(*it);
        acc = acc * x + inner;
    }
    return acc;
}

IntPoly BiPoly::at_y(const Integer& y) const {
    std::vector<Integer> c;
    c.reserve(coeffs_.size());
    for (const auto& row : coeffs_) {
        Integer inner = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * y + *it;
        c.push_back(inner);
    }
    return IntPoly(std::move(c));
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        auto& row = coeffs_[i];
        const auto& other = rhs.coeffs_[i];
        if (other.size() > row.size()) row.resize(other.size(), 0);
        for (std::size_t j = 0; j < other.size(); ++j) row[j] += other[j];
    }
    normalize();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    const auto rows = coeffs_.size() + rhs.coeffs_.size() - 1;
    const auto cols = static_cast<std::size_t>(degree_y() + rhs.degree_y() + 1);
    std::vector<std::vector<Integer>> out(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
            if (coeffs_[i][j] == 0) continue;
            for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
                for (std::size_t l = 0; l < rhs.coeffs_[k].size(); ++l) {
                    out[i + k][j + l] += coeffs_[i][j] * rhs.coeffs_[k][l];
                }
            }
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Integer factorial(int n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BiPoly substitute_sum(const IntPoly& p) {
    BiPoly out;
    for (int d = 0; d <= p.degree(); ++d) {
        const Integer& c = p.coeffs()[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) out.add_to(i, d - i, c * binomial(d, i));
    }
    return out;
}

namespace {

void append_term(std::string& out, const Integer& c, const std::string& monomial) {
    if (c == 0) return;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (negative) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    if (monomial.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) out += mag.get_str();
        out += monomial;
    }
}

std::string power(std::string_view var, int e) {
    if (e == 0) return {};
    std::string s(var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string to_string(const IntPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) append_term(out, p.coeffs()[static_cast<std::size_t>(d)], power(var, d));
    return out;
}

std::string to_string(const BiPoly& p, std::string_view xvar, std::string_view yvar) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree_x(); i >= 0; --i) {
        const auto& row = p.coeffs()[static_cast<std::size_t>(i)];
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
            append_term(out, row[static_cast<std::size_t>(j)], power(xvar, i) + power(yvar, j));
        }
    }
    return out;
}

IntPoly parse_poly(std::string_view text, char var) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    std::vector<Integer> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Integer c = start == i ? Integer(1) : Integer(s.substr(start, i - start));
        int degree = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ds = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (ds == i) throw std::invalid_argument("missing exponent in polynomial text");
                degree = std::stoi(s.substr(ds, i - ds));
            }
        } else if (start == i) {
            throw std::invalid_argument("malformed polynomial term near '" + s.substr(start) + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') {
            throw std::invalid_argument("unexpected character in polynomial text");
        }
        if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(static_cast<std::size_t>(degree) + 1, 0);
        coeffs[static_cast<std::size_t>(degree)] += sign * c;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace copoly
