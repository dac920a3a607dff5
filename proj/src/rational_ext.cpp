#include "ecs/rational_ext.hpp"

#include <sstream>

#include "ecs/hermite.hpp"

namespace rext {

namespace {

UPoly x_squared() { return UPoly::monomial(Rational(1), 2); }

MultiPoly half_x2(int sign) { return MultiPoly::term(Rational(sign, 2), Monomial::of(var::x, 2)); }

std::string wrap(const UPoly& p) {
    std::string s = p.to_string();
    return p.coeffs().size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s;
}

// " + A/den" or " - |A|/den" when A is a single negative term.
std::string signed_fraction(const UPoly& a, const std::string& den) {
    if (a.is_zero()) return "";
    int nonzero = 0;
    for (const auto& c : a.coeffs())
        if (c != 0) ++nonzero;
    if (nonzero == 1 && a.lead() < 0) return " - " + wrap(-a) + "/" + den;
    return " + " + wrap(a) + "/" + den;
}

}  // namespace

RationalExtension build_extension(const MayaDiagram& m) {
    RationalExtension ext;
    ext.maya = m;
    ext.tau = normalized_pw(m);
    const UPoly& h = ext.tau;
    const UPoly h1 = h.derivative(), h2 = h1.derivative();
    // U = x^2 + 2σ + 2(H'/H)^2 - 2H''/H
    UPoly num = (x_squared() + UPoly(Rational(2 * m.index()))) * h * h;
    num += Rational(2) * (h1 * h1) - Rational(2) * (h * h2);
    ext.potential = RationalFn(num, h * h);
    ext.hamiltonian = LinearDiffOp({ext.potential, RationalFn(0), RationalFn(-1)});
    ext.regular = is_krein_adler_regular(m);
    return ext;
}

std::string potential_display(const RationalExtension& ext) {
    const UPoly h = ext.tau.primitive();
    const UPoly h1 = h.derivative(), h2 = h1.derivative();
    const UPoly n = Rational(2) * (h1 * h1) - Rational(2) * (h * h2);
    auto [a, b] = divmod(n, h);
    std::ostringstream os;
    os << "x^2";
    const int c = 2 * ext.maya.index();
    if (c > 0) os << " + " << c;
    if (c < 0) os << " - " << -c;
    if (!h.is_constant()) {
        const std::string hs = wrap(h);
        os << signed_fraction(a, hs) << signed_fraction(b, hs + "^2");
    }
    return os.str();
}

ExpPolyFn eigenfunction(const MayaDiagram& m, int k) {
    const int eps = m.contains(k) ? 1 : -1;
    return ExpPolyFn(half_x2(eps), RationalFn(MultiPoly(exceptional_hermite(m, k)), normalized_pw(m)));
}

LinearDiffOp intertwiner(const MayaDiagram& m, const IndexSet& k) {
    std::vector<ExpPolyFn> fs;
    for (int ki : k.increasing()) fs.push_back(eigenfunction(m, ki));
    return LinearDiffOp::from_kernel(fs);
}

LadderOperator ladder(const MayaDiagram& m, int n) {
    LadderOperator l;
    l.source = m;
    l.shift = n;
    l.kernel_indices = symmetric_difference(translate(m, n), m);
    l.op = intertwiner(m, l.kernel_indices);
    return l;
}

bool is_annihilator(const LadderOperator& l) {
    for (int k : l.kernel_indices.elements())
        if (l.source.contains(k)) return false;
    return true;
}

Rational gamma(const MayaDiagram& m, int q, int k) {
    Rational g = 1;
    const IndexSet kq = symmetric_difference(translate(m, q), m);
    for (int kk : kq.elements()) g *= k - kk;
    return g;
}

CompositionResult composition_check(const MayaDiagram& m, const IndexSet& k1, const IndexSet& k2) {
    const MayaDiagram m2 = multi_flip(m, k1);
    CompositionResult r;
    r.lhs = compose(intertwiner(m2, k2), intertwiner(m, k1));
    // Coefficients of Π (2k+1 - T) as a polynomial in T, lowest degree first.
    std::vector<Rational> p{Rational(1)};
    const IndexSet common = intersection(k1, k2);
    for (int k : common.elements()) {
        std::vector<Rational> next(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            next[i] += Rational(2 * k + 1) * p[i];
            next[i + 1] -= p[i];
        }
        p = std::move(next);
    }
    const LinearDiffOp t = build_extension(m).hamiltonian;
    r.rhs = compose(intertwiner(m, symmetric_difference(k1, k2)), t.polynomial(p));
    r.difference = first_difference(r.lhs, r.rhs);
    r.ok = r.difference.empty();
    return r;
}

}  // namespace rext
