#include "ecs/rational_fn.hpp"

#include <sstream>
#include <stdexcept>

namespace rext {

namespace {

using XGroups = std::map<Monomial, UPoly, MonomialOrder>;

XGroups split_x(const MultiPoly& p) {
    std::map<Monomial, std::vector<Rational>, MonomialOrder> raw;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        const int e = m.exp(var::x);
        rest.set(var::x, 0);
        auto& v = raw[rest];
        if (static_cast<int>(v.size()) <= e) v.resize(static_cast<size_t>(e) + 1);
        v[static_cast<size_t>(e)] = c;
    }
    XGroups g;
    for (auto& [m, v] : raw) g.emplace(m, UPoly(std::move(v)));
    return g;
}

MultiPoly join_x(const XGroups& g) {
    MultiPoly r;
    for (const auto& [rest, poly] : g) {
        const auto& c = poly.coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            Monomial m = rest;
            m.set(var::x, static_cast<int>(k));
            r.add_term(m, c[k]);
        }
    }
    return r;
}

}  // namespace

MultiPoly multiply_by_x_poly(const MultiPoly& p, const UPoly& f) {
    if (f.is_constant()) return p * f.coeff(0);
    XGroups g = split_x(p);
    for (auto& [m, poly] : g) poly *= f;
    return join_x(g);
}

MultiPoly exact_div_by_x_poly(const MultiPoly& p, const UPoly& f) {
    if (f.is_constant()) return p * Rational(1 / f.coeff(0));
    XGroups g = split_x(p);
    for (auto& [m, poly] : g) poly = exact_div(poly, f);
    return join_x(g);
}

UPoly x_content(const MultiPoly& p) {
    UPoly g;
    for (const auto& [m, poly] : split_x(p)) {
        g = gcd(g, poly);
        if (g.degree() == 0) break;
    }
    return g;
}

RationalFn::RationalFn(MultiPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        UPoly g = den_;
        for (const auto& [m, poly] : split_x(num_)) {
            g = gcd(g, poly);
            if (g.degree() == 0) break;
        }
        if (g.degree() > 0) {
            num_ = exact_div_by_x_poly(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Rational lc = den_.lead();
    if (lc != 1) {
        den_ *= Rational(1 / lc);
        num_ *= Rational(1 / lc);
    }
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    UPoly g = gcd(den_, o.den_);
    UPoly a_scale = exact_div(o.den_, g);
    UPoly b_scale = exact_div(den_, g);
    num_ = multiply_by_x_poly(num_, a_scale) + multiply_by_x_poly(o.num_, b_scale);
    den_ = den_ * a_scale;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFn();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::divided_by(const RationalFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    if (!o.depends_only_on_x()) throw std::domain_error("division by a rational function involving non-x variables");
    return *this * RationalFn(MultiPoly(o.den_), o.num_.to_upoly());
}

RationalFn RationalFn::differentiate(Var v) const {
    if (v != var::x || den_.is_constant()) return RationalFn(num_.differentiate(v), den_);
    // (N/D)' = (N' D - N D') / D^2
    MultiPoly n = multiply_by_x_poly(num_.differentiate(var::x), den_) -
                  multiply_by_x_poly(num_, den_.derivative());
    return RationalFn(std::move(n), den_ * den_);
}

std::complex<double> RationalFn::eval(double x, std::complex<double> z) const {
    const double d = den_.eval(x);
    if (d == 0.0) throw std::domain_error("pole at evaluation point");
    return num_.eval(x, z) / d;
}

std::string RationalFn::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

}  // namespace rext
