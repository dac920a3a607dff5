#include "ecs/exp_poly_fn.hpp"

#include <cmath>
#include <sstream>

namespace rext {

ExpPolyFn::ExpPolyFn(MultiPoly exponent, RationalFn body)
    : exponent_(std::move(exponent)), body_(std::move(body)) {
    if (exponent_.total_degree() > 2) throw std::domain_error("exponent must be at most quadratic");
    for (const auto& [m, c] : exponent_.terms()) {
        if (m.max_var() > var::z) throw std::domain_error("exponent may involve x and z only");
        if (m.exp(var::z) < 0) throw std::domain_error("exponent must be polynomial in z");
    }
    if (body_.is_zero()) exponent_ = MultiPoly();
}

ExpPolyFn ExpPolyFn::differentiate(Var v) const {
    RationalFn b = RationalFn(exponent_.differentiate(v)) * body_ + body_.differentiate(v);
    return ExpPolyFn(exponent_, std::move(b));
}

ExpPolyFn ExpPolyFn::differentiate(Var v, int times) const {
    ExpPolyFn f = *this;
    for (int i = 0; i < times; ++i) f = f.differentiate(v);
    return f;
}

ExpPolyFn& ExpPolyFn::operator+=(const ExpPolyFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!(exponent_ == o.exponent_))
        throw std::domain_error("adding exp-polynomial functions with different exponents");
    body_ += o.body_;
    if (body_.is_zero()) exponent_ = MultiPoly();
    return *this;
}

ExpPolyFn& ExpPolyFn::operator-=(const ExpPolyFn& o) {
    ExpPolyFn neg(o.exponent_, -o.body_);
    return *this += neg;
}

ExpPolyFn operator*(const ExpPolyFn& a, const ExpPolyFn& b) {
    return ExpPolyFn(a.exponent_ + b.exponent_, a.body_ * b.body_);
}

ExpPolyFn operator*(const RationalFn& r, const ExpPolyFn& f) {
    return ExpPolyFn(f.exponent_, r * f.body_);
}

bool operator==(const ExpPolyFn& a, const ExpPolyFn& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.exponent_ == b.exponent_ && a.body_ == b.body_;
}

ExpPolyFn ExpPolyFn::z_coefficient(int power) const {
    const MultiPoly e0 = exponent_.coefficient(var::z, 0);
    const MultiPoly e1 = exponent_.coefficient(var::z, 1);
    const MultiPoly e2 = exponent_.coefficient(var::z, 2);
    const MultiPoly& num = body_.numerator();
    const int zmin = num.min_exp(var::z);
    const int need = power - zmin;  // highest series order of exp(e1 z + e2 z^2) used
    if (need < 0) return ExpPolyFn();
    // n c_n = e1 c_{n-1} + 2 e2 c_{n-2}
    std::vector<MultiPoly> c(static_cast<size_t>(need) + 1);
    c[0] = MultiPoly(1);
    for (int n = 1; n <= need; ++n) {
        MultiPoly s = e1 * c[static_cast<size_t>(n - 1)];
        if (n >= 2) s += Rational(2) * (e2 * c[static_cast<size_t>(n - 2)]);
        c[static_cast<size_t>(n)] = s * Rational(1, n);
    }
    MultiPoly acc;
    for (int b = zmin; b <= std::min(power, num.max_exp(var::z)); ++b) {
        MultiPoly nb = num.coefficient(var::z, b);
        if (nb.is_zero()) continue;
        acc += nb * c[static_cast<size_t>(power - b)];
    }
    return ExpPolyFn(e0, RationalFn(std::move(acc), body_.denominator()));
}

std::string ExpPolyFn::to_string() const {
    if (exponent_.is_zero()) return body_.to_string();
    std::ostringstream os;
    os << "exp(" << exponent_.to_string() << ")*" << "(" << body_.to_string() << ")";
    return os.str();
}

namespace {

std::vector<double> to_doubles(const UPoly& p) {
    std::vector<double> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.get_d());
    return v;
}

double horner(const std::vector<double>& c, double x) {
    double r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace

NumericExpPolyFn::NumericExpPolyFn(const ExpPolyFn& f, double pole_tolerance)
    : pole_tolerance_(pole_tolerance) {
    auto blocks = [](const MultiPoly& p) {
        std::vector<Block> out;
        if (p.is_zero()) return out;
        for (int b = p.min_exp(var::z); b <= p.max_exp(var::z); ++b) {
            MultiPoly c = p.coefficient(var::z, b);
            if (c.is_zero()) continue;
            out.push_back({b, to_doubles(c.to_upoly(var::x))});
        }
        return out;
    };
    for (const auto& [m, c] : f.body().numerator().terms())
        if (m.max_var() > var::z) throw std::domain_error("numeric evaluation requires x and z only");
    exponent_ = blocks(f.exponent());
    numerator_ = blocks(f.body().numerator());
    denominator_ = to_doubles(f.body().denominator());
}

std::complex<double> NumericExpPolyFn::eval_blocks(const std::vector<Block>& blocks, double x,
                                                   std::complex<double> z) {
    std::complex<double> s = 0;
    for (const auto& b : blocks) {
        std::complex<double> zp = b.z_power == 0 ? 1.0 : std::pow(z, b.z_power);
        s += zp * horner(b.x_coeffs, x);
    }
    return s;
}

std::complex<double> NumericExpPolyFn::operator()(double x, std::complex<double> z) const {
    const double d = horner(denominator_, x);
    double scale = 0, xp = 1;
    for (double c : denominator_) {
        scale += std::abs(c) * xp;
        xp *= std::abs(x);
    }
    if (std::abs(d) <= pole_tolerance_ * scale) {
        std::ostringstream os;
        os << "pole of denominator at x = " << x;
        throw PoleError(os.str());
    }
    if (numerator_.empty()) return 0.0;
    return std::exp(eval_blocks(exponent_, x, z)) * eval_blocks(numerator_, x, z) / d;
}

std::complex<double> eval_complex(const ExpPolyFn& f, double x, std::complex<double> z) {
    return NumericExpPolyFn(f, 1e-13)(x, z);
}

ClearedDerivatives cleared_derivatives(std::span<const ExpPolyFn> fs, int num_rows) {
    ClearedDerivatives out;
    UPoly d(1);
    for (const auto& f : fs) {
        const UPoly& den = f.body().denominator();
        d = exact_div(d * den, gcd(d, den));
    }
    d = d.monic();
    out.denominator = d;
    const UPoly dprime = d.derivative();
    out.rows.assign(static_cast<size_t>(num_rows), std::vector<MultiPoly>(fs.size()));
    for (size_t i = 0; i < fs.size(); ++i) {
        const MultiPoly& e = fs[i].exponent();
        out.exponents.push_back(e);
        const MultiPoly ex = e.differentiate(var::x);
        MultiPoly p = multiply_by_x_poly(fs[i].body().numerator(),
                                         exact_div(d, fs[i].body().denominator()));
        for (int j = 0; j < num_rows; ++j) {
            out.rows[static_cast<size_t>(j)][i] = p;
            if (j + 1 == num_rows) break;
            // (exp(e) p / d^{j+1})' = exp(e) [(e' p + p') d - (j+1) p d'] / d^{j+2}
            MultiPoly next = multiply_by_x_poly(ex * p + p.differentiate(var::x), d);
            next -= multiply_by_x_poly(p, dprime) * Rational(j + 1);
            p = std::move(next);
        }
    }
    return out;
}

MultiPoly polynomial_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    bool univariate = true;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.depends_only_on(var::x)) univariate = false;
    if (univariate) {
        std::vector<std::vector<UPoly>> u;
        u.reserve(m.size());
        for (const auto& row : m) {
            std::vector<UPoly> r;
            r.reserve(row.size());
            for (const auto& e : row) r.push_back(e.to_upoly());
            u.push_back(std::move(r));
        }
        return MultiPoly(determinant(std::move(u)));
    }
    return laplace_determinant(m);
}

ExpPolyFn wronskian(std::span<const ExpPolyFn> fs, Var v) {
    if (fs.empty()) throw std::invalid_argument("wronskian of an empty list");
    const int p = static_cast<int>(fs.size());
    MultiPoly total_exponent;
    for (const auto& f : fs) total_exponent += f.exponent();
    if (v == var::x) {
        ClearedDerivatives cd = cleared_derivatives(fs, p);
        MultiPoly det = polynomial_determinant(cd.rows);
        return ExpPolyFn(total_exponent,
                         RationalFn(std::move(det), cd.denominator.pow(static_cast<unsigned>(p * (p + 1) / 2))));
    }
    // Denominators depend on x only, so they are constants for v != x.
    std::vector<std::vector<MultiPoly>> rows(static_cast<size_t>(p), std::vector<MultiPoly>(fs.size()));
    UPoly den(1);
    for (size_t i = 0; i < fs.size(); ++i) {
        const UPoly& di = fs[i].body().denominator();
        den *= di;
        const MultiPoly ev = fs[i].exponent().differentiate(v);
        MultiPoly q = fs[i].body().numerator();
        for (int j = 0; j < p; ++j) {
            rows[static_cast<size_t>(j)][i] = q;
            q = ev * q + q.differentiate(v);
        }
    }
    return ExpPolyFn(total_exponent, RationalFn(laplace_determinant(rows), den));
}

}  // namespace rext
