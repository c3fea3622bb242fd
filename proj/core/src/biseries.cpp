#include "involab/biseries.hpp"

#include <algorithm>

namespace involab {

BiSeries::BiSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("BiSeries: negative order");
    c_.resize(order + 1);
    for (int i = 0; i <= order; ++i) c_[i].assign(order - i + 1, Rational(0));
}

BiSeries BiSeries::constant(const Rational& c, int order) {
    BiSeries s(order);
    s.c_[0][0] = c;
    return s;
}

BiSeries BiSeries::monomial(int i, int j, const Rational& c, int order) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial: negative exponent");
    BiSeries s(order);
    if (i + j <= order) s.c_[i][j] = c;
    return s;
}

const Rational& BiSeries::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("BiSeries::coeff");
    return c_[i][j];
}

Rational& BiSeries::coeff_mut(int i, int j) {
    if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("BiSeries::coeff_mut");
    return c_[i][j];
}

bool BiSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

BiSeries BiSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("truncated: cannot extend trusted order");
    BiSeries r(new_order);
    for (int i = 0; i <= new_order; ++i)
        for (int j = 0; i + j <= new_order; ++j) r.c_[i][j] = c_[i][j];
    return r;
}

BiSeries BiSeries::operator-() const {
    BiSeries r(*this);
    for (auto& row : r.c_)
        for (auto& v : row) v = -v;
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    int n = std::min(a.order_, b.order_);
    BiSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    int n = std::min(a.order_, b.order_);
    BiSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.c_[i][j] = a.c_[i][j] - b.c_[i][j];
    return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    int n = std::min(a.order_, b.order_);
    BiSeries r(n);
    Rational t;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const Rational& av = a.c_[i][j];
            if (av == 0) continue;
            for (int k = 0; i + j + k <= n; ++k)
                for (int l = 0; i + j + k + l <= n; ++l) {
                    const Rational& bv = b.c_[k][l];
                    if (bv == 0) continue;
                    t = av * bv;
                    r.c_[i + k][j + l] += t;
                }
        }
    return r;
}

BiSeries operator*(const Rational& s, const BiSeries& a) {
    BiSeries r(a);
    for (auto& row : r.c_)
        for (auto& v : row) v *= s;
    return r;
}

BiSeries operator+(const BiSeries& a, const Rational& s) {
    BiSeries r(a);
    r.c_[0][0] += s;
    return r;
}

BiSeries operator-(const Rational& s, const BiSeries& a) {
    BiSeries r = -a;
    r.c_[0][0] += s;
    return r;
}

BiSeries BiSeries::inverse() const {
    if (order_ < 0 || c_[0][0] == 0) throw std::domain_error("BiSeries::inverse: zero constant term");
    BiSeries r(order_);
    Rational inv0 = 1 / c_[0][0];
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) {
            Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            // subtract sum over (k,l) < (i,j) componentwise of r(k,l) * this(i-k, j-l)
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == i && l == j) continue;
                    if (r.c_[k][l] == 0 || c_[i - k][j - l] == 0) continue;
                    acc -= r.c_[k][l] * c_[i - k][j - l];
                }
            r.c_[i][j] = acc * inv0;
        }
    return r;
}

BiSeries BiSeries::sqrt() const {
    if (order_ < 0 || c_[0][0] == 0)
        throw std::domain_error("BiSeries::sqrt: constant term must be a nonzero perfect square");
    Rational root0;
    if (!exact_sqrt(c_[0][0], root0))
        throw std::domain_error("BiSeries::sqrt: constant term is not the square of a rational");
    BiSeries r(order_);
    r.c_[0][0] = root0;
    Rational twice0 = 2 * root0;
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) {
            if (i == 0 && j == 0) continue;
            Rational acc = c_[i][j];
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if ((k == 0 && l == 0) || (k == i && l == j)) continue;
                    if (r.c_[k][l] == 0 || r.c_[i - k][j - l] == 0) continue;
                    acc -= r.c_[k][l] * r.c_[i - k][j - l];
                }
            r.c_[i][j] = acc / twice0;
        }
    return r;
}

BiSeries BiSeries::swapped_vars() const {
    BiSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) r.c_[j][i] = c_[i][j];
    return r;
}

BiSeries BiSeries::divided_by_monomial(int a, int b) const {
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j)
            if ((i < a || j < b) && c_[i][j] != 0)
                throw std::domain_error("divided_by_monomial: nonzero coefficient below the monomial");
    BiSeries r(order_ - a - b);
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j) r.c_[i][j] = c_[i + a][j + b];
    return r;
}

UniSeries BiSeries::eval_diagonal() const {
    UniSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j)
            if (c_[i][j] != 0) r.coeff_mut(i + j) += c_[i][j];
    return r;
}

UniSeries BiSeries::substitute_even(const UniSeries& A, const UniSeries& B) const {
    if (A.valuation() < 2 || B.valuation() < 2)
        throw std::domain_error("substitute_even: substituted series must have valuation >= 2");
    int n = std::min({A.order(), B.order(), order_});
    std::vector<UniSeries> apow{UniSeries::one(n)}, bpow{UniSeries::one(n)};
    for (int e = 1; 2 * e <= order_; ++e) {
        apow.push_back(apow.back() * A.truncated(n));
        bpow.push_back(bpow.back() * B.truncated(n));
    }
    UniSeries r(n);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) {
            if (c_[i][j] == 0) continue;
            if (i % 2 != 0 || j % 2 != 0)
                throw std::domain_error("substitute_even: odd exponent present");
            r = r + c_[i][j] * (apow[i / 2] * bpow[j / 2]);
        }
    return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            if (a.c_[i][j] != b.c_[i][j]) return false;
    return true;
}

}  // namespace involab
