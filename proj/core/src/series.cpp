#include "involab/series.hpp"

#include <algorithm>
#include <sstream>

namespace involab {

UniSeries UniSeries::constant(const Rational& v, int order) {
    UniSeries s(order);
    s.c_[0] = v;
    return s;
}

UniSeries UniSeries::monomial(int k, const Rational& c, int order) {
    UniSeries s(order);
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    if (k <= order) s.c_[k] = c;
    return s;
}

UniSeries UniSeries::from_coeffs(std::initializer_list<long> coeffs, int order) {
    UniSeries s(order);
    int k = 0;
    for (long v : coeffs) {
        if (k > order) break;
        s.c_[k++] = Rational(v);
    }
    return s;
}

const Rational& UniSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("UniSeries::coeff: degree beyond trusted order");
    return c_[k];
}

Rational& UniSeries::coeff_mut(int k) {
    if (k < 0 || k > order_) throw std::out_of_range("UniSeries::coeff_mut: degree beyond trusted order");
    return c_[k];
}

int UniSeries::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (c_[k] != 0) return k;
    return order_ + 1;
}

UniSeries UniSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("truncated: cannot extend trusted order");
    UniSeries r(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
    return r;
}

UniSeries UniSeries::operator-() const {
    UniSeries r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order_, b.order_);
    UniSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order_, b.order_);
    UniSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order_, b.order_);
    UniSeries r(n);
    Rational t;
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j] == 0) continue;
            t = a.c_[i] * b.c_[j];
            r.c_[i + j] += t;
        }
    }
    return r;
}

UniSeries operator*(const Rational& s, const UniSeries& a) {
    UniSeries r(a);
    for (auto& v : r.c_) v *= s;
    return r;
}

UniSeries operator+(const UniSeries& a, const Rational& s) {
    UniSeries r(a);
    r.c_[0] += s;
    return r;
}

UniSeries operator-(const Rational& s, const UniSeries& a) {
    UniSeries r = -a;
    r.c_[0] += s;
    return r;
}

UniSeries UniSeries::shifted_up(int k) const {
    UniSeries r(order_ + k);
    for (int i = 0; i <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
}

UniSeries UniSeries::shifted_down(int k) const {
    if (k > order_ + 1) throw std::domain_error("shifted_down: shift exceeds order");
    for (int i = 0; i < k && i <= order_; ++i)
        if (c_[i] != 0) throw std::domain_error("shifted_down: nonzero low-order coefficient");
    UniSeries r(order_ - k);
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i + k];
    return r;
}

UniSeries UniSeries::inverse() const {
    if (order_ < 0 || c_[0] == 0) throw std::domain_error("inverse: zero constant term");
    UniSeries r(order_);
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            if (c_[i] == 0) continue;
            acc += c_[i] * r.c_[k - i];
        }
        r.c_[k] = -acc * inv0;
    }
    return r;
}

UniSeries UniSeries::divided_by(const UniSeries& b) const {
    int v = b.valuation();
    if (v > b.order_) throw std::domain_error("divided_by: division by zero series");
    if (v == 0) return *this * b.inverse();
    return shifted_down(v) * b.shifted_down(v).inverse();
}

UniSeries UniSeries::composed_with(const UniSeries& g) const {
    if (order_ < 0 || g.order_ < 0) throw std::domain_error("composed_with: uninitialized series");
    if (g.c_[0] != 0)
        throw std::domain_error("composed_with: inner series must have zero constant term");
    int n = std::min(order_, g.order_);
    UniSeries r = UniSeries::constant(c_[order_], n);
    UniSeries gt = g.truncated(n);
    for (int i = order_ - 1; i >= 0; --i) {
        r = r * gt;
        r.c_[0] += c_[i];
    }
    return r;
}

UniSeries UniSeries::scaled_exponent(int m) const {
    if (m <= 0) throw std::invalid_argument("scaled_exponent: m must be positive");
    UniSeries r(order_ * m);
    for (int i = 0; i <= order_; ++i) r.c_[i * m] = c_[i];
    return r;
}

UniSeries UniSeries::sqrt() const {
    if (order_ < 0 || c_[0] == 0)
        throw std::domain_error("sqrt: constant term must be a nonzero perfect square");
    Rational root0;
    if (!exact_sqrt(c_[0], root0))
        throw std::domain_error("sqrt: constant term is not the square of a rational");
    UniSeries r(order_);
    r.c_[0] = root0;
    Rational twice0 = 2 * root0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc = c_[k];
        for (int i = 1; i < k; ++i) acc -= r.c_[i] * r.c_[k - i];
        r.c_[k] = acc / twice0;
    }
    return r;
}

UniSeries UniSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    UniSeries r = UniSeries::one(order_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

UniSeries UniSeries::solve_quadratic(const UniSeries& A, const UniSeries& B, const UniSeries& C) {
    if (A.is_zero()) {
        UniSeries g = (-C).divided_by(B);
        if (g.order() >= 0 && g.coeff(0) != 0)
            throw std::domain_error("solve_quadratic: linear solution has nonzero constant term");
        return g;
    }
    UniSeries disc = B * B - Rational(4) * (A * C);
    UniSeries s = disc.sqrt();
    UniSeries twoA = Rational(2) * A;
    std::vector<UniSeries> roots;
    for (int sign : {-1, +1}) {
        UniSeries num = (sign < 0) ? (-B - s) : (-B + s);
        if (num.valuation() < twoA.valuation()) continue;  // branch not a power series
        UniSeries g = num.divided_by(twoA);
        if (g.order() >= 0 && g.coeff(0) == 0) roots.push_back(g);
    }
    if (roots.empty()) throw std::domain_error("solve_quadratic: no root with g(0) = 0");
    if (roots.size() == 1) return roots.front();
    for (const auto& g : roots)
        if (g.order() >= 1 && g.coeff(1) == 1) return g;
    throw std::domain_error("solve_quadratic: ambiguous branch");
}

bool operator==(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int k = 0; k <= n; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

std::string UniSeries::to_bfile(int lo, int hi) const {
    std::ostringstream out;
    for (int k = lo; k <= hi; ++k) out << k << ' ' << integer_coeff(k).get_str() << '\n';
    return out.str();
}

std::string UniSeries::to_json(int lo, int hi) const {
    std::ostringstream out;
    out << '[';
    for (int k = lo; k <= hi; ++k) {
        if (k > lo) out << ',';
        out << '"' << integer_coeff(k).get_str() << '"';
    }
    out << ']';
    return out.str();
}

}  // namespace involab
