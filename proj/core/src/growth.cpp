#include "involab/growth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace involab {

Rational eval_poly(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string GrowthReport::to_json() const {
    std::ostringstream out;
    out << "{\"source\":\"" << source << "\",\"method\":\"" << method << "\",\"value\":\""
        << value() << "\",\"bracket\":[\"" << lo.get_str() << "\",\"" << hi.get_str()
        << "\"],\"certified\":" << (certified ? "true" : "false");
    if (!note.empty()) out << ",\"note\":\"" << note << "\"";
    out << "}";
    return out.str();
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

GrowthReport smallest_positive_root(const Poly& p, const Rational& tol, const std::string& source) {
    if (tol <= 0) throw std::invalid_argument("smallest_positive_root: tol must be positive");
    Rational lo(0), hi;
    int slo = sign_of(eval_poly(p, lo));
    bool found = false;
    for (int k = 1; k <= 64; ++k) {
        hi = ratio(k, 64);
        const int shi = sign_of(eval_poly(p, hi));
        if (shi == 0) {  // landed exactly on the root
            return {source, "root-of-polynomial", hi, hi, true, ""};
        }
        if (slo != 0 && shi != slo) {
            found = true;
            break;
        }
        lo = hi;
        slo = shi;
    }
    if (!found)
        throw std::domain_error("smallest_positive_root: no sign change on (0, 1]");
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        const int smid = sign_of(eval_poly(p, mid));
        if (smid == 0) return {source, "root-of-polynomial", mid, mid, true, ""};
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {source, "root-of-polynomial", lo, hi, true, ""};
}

GrowthReport reciprocal_root_growth(const Poly& p, const Rational& tol, const std::string& source) {
    // Bisect the root tightly enough that the reciprocal bracket is <= tol.
    Rational t = tol / 16;
    for (;;) {
        GrowthReport root = smallest_positive_root(p, t, source);
        if (root.lo > 0) {
            const Rational rlo = 1 / root.hi;
            const Rational rhi = 1 / root.lo;
            if (rhi - rlo <= tol) return {source, "root-of-polynomial", rlo, rhi, true, ""};
        }
        t = t / 16;
    }
}

namespace {

GrowthReport constant_report(const std::string& source, const Rational& lo, const Rational& hi,
                             const std::string& note = "") {
    return {source, "closed-form-constant", lo, hi, true, note};
}

}  // namespace

std::map<std::string, GrowthReport> growth_constants() {
    std::map<std::string, GrowthReport> out;
    constexpr unsigned digits = 15;

    // Separable involutions: sqrt(2) + sqrt(3).
    auto s2 = sqrt_bracket(2, digits);
    auto s3 = sqrt_bracket(3, digits);
    out.emplace("av-i-2413",
                constant_report("av-i-2413", s2.first + s3.first, s2.second + s3.second,
                                "sqrt(2) + sqrt(3)"));

    // Involutions avoiding 1342: 1 + golden ratio = (3 + sqrt(5)) / 2.
    auto s5 = sqrt_bracket(5, digits);
    out.emplace("av-i-1342",
                constant_report("av-i-1342", (3 + s5.first) / 2, (3 + s5.second) / 2,
                                "1 + golden ratio"));

    // Involutions avoiding 1234 are counted by the Motzkin numbers.
    out.emplace("av-i-1234", constant_report("av-i-1234", 3, 3, "Motzkin growth"));

    // Involutions avoiding 2341: reciprocal of the only positive root of the
    // degree-16 denominator q(x).
    const Poly q = {1,   -6,  4,    50,  -141, 55,   326,  -514, -26,
                    725, -561, -223, 540, -206, -113, 120,  -32};
    GrowthReport g2341 = reciprocal_root_growth(q, Rational(1, BigInt("1000000000000")), "av-i-2341");
    out.emplace("av-i-2341", std::move(g2341));

    // Cited permutation-class constants used as inputs to the 1324 bounds.
    out.emplace("av-1234", constant_report("av-1234", 9, 9, "gr(Av(1234))"));
    out.emplace("av-1342", constant_report("av-1342", 8, 8, "gr(Av(1342))"));

    // Lower bound for av-i-1324: sqrt of the 9.81 lower bound for Av(1324).
    auto s981 = sqrt_bracket(ratio(981, 100), digits);
    out.emplace("av-i-1324-lower",
                constant_report("av-i-1324-lower", s981.first, s981.second,
                                "sqrt(9.81), exceeds 3.13"));

    out.emplace("av-i-1324-upper", upper_bound_1324());
    return out;
}

GrowthReport upper_bound_1324() {
    constexpr unsigned digits = 18;
    // r = cbrt(8 + 6 sqrt(78)); the bound is 3r / (14 + r - r^2), which is
    // increasing in r on the relevant range, so interval endpoints map to
    // value endpoints.
    auto s78 = sqrt_bracket(78, digits);
    auto r_lo = root_bracket(8 + 6 * s78.first, 3, digits).first;
    auto r_hi = root_bracket(8 + 6 * s78.second, 3, digits).second;
    auto bound_at = [](const Rational& r) -> Rational {
        const Rational den = 14 + r - r * r;
        return Rational(3 * r) / den;
    };
    GrowthReport rep = constant_report("av-i-1324-upper", bound_at(r_lo), bound_at(r_hi),
                                       "3r/(14 + r - r^2), r = cbrt(8 + 6 sqrt(78))");

    GrowthReport via_root = reciprocal_root_growth({1, -5, 1, -1},
                                                   Rational(1, BigInt("1000000000000")),
                                                   "av-i-1324-upper");
    const Rational tol_cross(1, BigInt("1000000000"));
    if (abs((rep.lo + rep.hi) / 2 - (via_root.lo + via_root.hi) / 2) > tol_cross)
        throw std::logic_error("upper_bound_1324: closed form and reciprocal root disagree");
    if (!(rep.hi < ratio(484, 100)))
        throw std::logic_error("upper_bound_1324: bound not below 4.84");
    return rep;
}

GrowthReport empirical_growth(const std::vector<BigInt>& counts, const std::string& source) {
    if (counts.size() < 4) throw std::invalid_argument("empirical_growth: need at least 4 terms");
    for (const auto& c : counts)
        if (c <= 0) throw std::invalid_argument("empirical_growth: nonpositive term");
    const size_t n = counts.size();
    const double nth_root = std::pow(counts.back().get_d(), 1.0 / static_cast<double>(n));
    const double ratio = counts[n - 1].get_d() / counts[n - 2].get_d();
    // Indicative range only; these estimates carry no certificate.
    const double lo = std::min(nth_root, ratio), hi = std::max(nth_root, ratio);
    GrowthReport rep;
    rep.source = source;
    rep.method = "empirical-nth-root";
    rep.lo = Rational(lo);
    rep.hi = Rational(hi);
    rep.certified = false;
    std::ostringstream note;
    note << "nth-root " << nth_root << ", ratio " << ratio << "; not certified";
    rep.note = note.str();
    return rep;
}

}  // namespace involab
