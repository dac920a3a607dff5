#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "ecs/diff_op.hpp"
#include "ecs/exp_poly_fn.hpp"
#include "ecs/multipoly.hpp"
#include "ecs/rational_fn.hpp"
#include "ecs/upoly.hpp"

using namespace rext;

namespace {

std::mt19937 rng(20240611);

Rational rand_q(int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

UPoly rand_upoly(int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_q());
    return UPoly(c);
}

// Random polynomial in x, z (z exponents in [-2, 2]) and t1, t2.
MultiPoly rand_multi(int terms) {
    std::uniform_int_distribution<int> e(0, 2), ez(-2, 2);
    MultiPoly p;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        m.set(var::x, e(rng));
        m.set(var::z, ez(rng));
        m.set(var::t(1), e(rng));
        m.set(var::t(2), e(rng) / 2);
        p.add_term(m, rand_q());
    }
    return p;
}

MultiPoly x() { return MultiPoly::variable(var::x); }

// Determinant by the Leibniz permutation sum.
Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
    const size_t n = a.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational sum = 0;
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod = inversions % 2 ? -1 : 1;
        for (size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace

TEST_CASE("scalar helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    Rational r(-3, 6);
    r.canonicalize();
    CHECK(to_string(r) == "-1/2");
    CHECK(to_string(Rational(7)) == "7");
}

TEST_CASE("UPoly arithmetic and division") {
    for (int trial = 0; trial < 30; ++trial) {
        const UPoly a = rand_upoly(5), b = rand_upoly(3);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(exact_div(UPoly::x(), UPoly(2) + UPoly::x()), std::domain_error);
    CHECK_THROWS(divmod(UPoly::x(), UPoly()));
}

TEST_CASE("UPoly gcd recovers a planted factor") {
    for (int trial = 0; trial < 20; ++trial) {
        const UPoly g = rand_upoly(2), a = rand_upoly(3), b = rand_upoly(3);
        if (g.degree() < 1) continue;
        const UPoly d = gcd(a * g, b * g);
        CHECK(exact_div(d, g.monic()).degree() >= 0);
        CHECK(divmod(a * g, d).second.is_zero());
        CHECK(divmod(b * g, d).second.is_zero());
    }
    CHECK(gcd(UPoly(), UPoly()).is_zero());
}

TEST_CASE("primitive part and evaluation") {
    const UPoly p({Rational(3, 4), Rational(0), Rational(0), Rational(0), Rational(1)});  // x^4 + 3/4
    Rational unit;
    const UPoly q = p.primitive(&unit);
    CHECK(q == UPoly({Rational(3), Rational(0), Rational(0), Rational(0), Rational(4)}));
    CHECK(q * unit == p);
    CHECK(p.eval(Rational(2)) == Rational(67, 4));
    CHECK(p.eval(0.5) == doctest::Approx(0.8125));
    CHECK(q.to_string() == "4*x^4 + 3");
}

TEST_CASE("Sturm root count against planted roots") {
    // Π (x - r_i) with distinct rational roots, times an irreducible quadratic
    for (int n = 0; n <= 5; ++n) {
        UPoly p(1);
        for (int i = 0; i < n; ++i) p *= UPoly({Rational(-(2 * i - 3), 2), Rational(1)});
        CHECK(real_root_count(p) == n);
        CHECK(real_root_count(p * UPoly({Rational(1), Rational(0), Rational(1)})) == n);
        // repeated roots count once
        if (n > 0) CHECK(real_root_count(p * p) == n);
    }
    CHECK(real_root_count(UPoly(5)) == 0);
}

TEST_CASE("Bareiss determinant equals the permutation sum") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
        std::vector<std::vector<UPoly>> u(static_cast<size_t>(n), std::vector<UPoly>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i][j] = (i + j) % 3 == 0 && n > 2 ? Rational(0) : rand_q();
                u[i][j] = UPoly(a[i][j]);
            }
        CHECK(determinant(u) == UPoly(leibniz_det(a)));
        CHECK(laplace_determinant(a) == leibniz_det(a));
    }
    // polynomial entries: det [[x, 1], [1, x]] = x^2 - 1
    std::vector<std::vector<UPoly>> m{{UPoly::x(), UPoly(1)}, {UPoly(1), UPoly::x()}};
    CHECK(determinant(m) == UPoly({Rational(-1), Rational(0), Rational(1)}));
}

TEST_CASE("MultiPoly ring laws on random inputs") {
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly a = rand_multi(4), b = rand_multi(4), c = rand_multi(3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        // Leibniz rule in each variable
        for (Var v : {var::x, var::z, var::t(1)})
            CHECK((a * b).differentiate(v) == a.differentiate(v) * b + a * b.differentiate(v));
    }
}

TEST_CASE("MultiPoly monomial order and rendering") {
    const MultiPoly t1 = MultiPoly::variable(var::t(1)), t2 = MultiPoly::variable(var::t(2)),
                    t3 = MultiPoly::variable(var::t(3));
    const MultiPoly s = Rational(1, 12) * t1.pow(4) + t2 * t2 - t1 * t3;
    CHECK(s.to_string() == "1/12*t1^4 - t1*t3 + t2^2");
    CHECK(MultiPoly().to_string() == "0");
    CHECK(s.total_degree() == 4);
    CHECK(s.involves(var::t(3)));
    CHECK(!s.involves(var::x));
}

TEST_CASE("Monomial rejects negative exponents outside z") {
    Monomial m;
    CHECK_NOTHROW(m.set(var::z, -3));
    CHECK_THROWS(m.set(var::x, -1));
}

TEST_CASE("substitution and coefficient extraction") {
    // (x + z)^3 with x -> x - 1/z
    const MultiPoly z = MultiPoly::variable(var::z);
    const MultiPoly p = (x() + z).pow(3);
    const MultiPoly zinv = MultiPoly::term(Rational(1), Monomial::of(var::z, -1));
    const MultiPoly q = p.substitute({{var::x, x() - zinv}});
    CHECK(q == (x() - zinv + z).pow(3));
    // coefficient of z^1 in (x+z)^3 is 3x^2
    CHECK(p.coefficient(var::z, 1) == Rational(3) * x() * x());
    CHECK(p.shifted(var::z, -3).min_exp(var::z) == -3);
    CHECK_THROWS(MultiPoly::variable(var::t(1)).substitute({{var::t(1), zinv}}).shifted(var::x, -1));
}

TEST_CASE("numeric evaluation matches exact evaluation") {
    for (int trial = 0; trial < 10; ++trial) {
        const MultiPoly p = rand_multi(5);
        const double t[2] = {0.3, -1.1};
        const std::complex<double> zz(0.7, 0.2);
        std::complex<double> expected = 0;
        for (const auto& [m, c] : p.terms())
            expected += c.get_d() * std::pow(0.9, m.exp(var::x)) * std::pow(zz, m.exp(var::z)) *
                        std::pow(t[0], m.exp(var::t(1))) * std::pow(t[1], m.exp(var::t(2)));
        CHECK(std::abs(p.eval(0.9, zz, t) - expected) < 1e-12 * (1 + std::abs(expected)));
    }
    CHECK(MultiPoly().eval(1.0, 1.0) == std::complex<double>(0));
}

TEST_CASE("RationalFn normal form") {
    const UPoly d({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    const RationalFn r(MultiPoly(UPoly({Rational(-2), Rational(2)})), d);  // (2x-2)/(x^2-1)
    CHECK(r.denominator() == UPoly({Rational(1), Rational(1)}));
    CHECK(r.numerator() == MultiPoly(2));
    CHECK(r.to_string() == "(2)/(x + 1)");
    for (int trial = 0; trial < 15; ++trial) {
        const UPoly g = rand_upoly(2);
        if (g.is_zero()) continue;
        const RationalFn a(rand_multi(3), rand_upoly(2) * g + UPoly(1)), b(rand_multi(3), g * g + UPoly(1));
        CHECK((a + b) - b == a);
        const UPoly h = g * g + UPoly(1);
        CHECK((a * b).divided_by(RationalFn(h)) == a * b * RationalFn(MultiPoly(1), h));
        // quotient rule
        CHECK((a * b).differentiate(var::x) == a.differentiate(var::x) * b + a * b.differentiate(var::x));
    }
    CHECK_THROWS(RationalFn(MultiPoly(1), UPoly()));
}

TEST_CASE("ExpPolyFn derivatives and z-coefficients") {
    // exp(x z - z^2/4) = Σ H_n(x) z^n / (2^n n!) ... first terms
    const MultiPoly e = x() * MultiPoly::variable(var::z) -
                        Rational(1, 4) * MultiPoly::variable(var::z) * MultiPoly::variable(var::z);
    const ExpPolyFn g(e, RationalFn(1));
    CHECK(g.z_coefficient(0) == ExpPolyFn(RationalFn(1)));
    CHECK(g.z_coefficient(1) == ExpPolyFn(RationalFn(x())));
    CHECK(g.z_coefficient(2) == ExpPolyFn(RationalFn(Rational(1, 2) * x() * x() - Rational(1, 4))));
    CHECK(g.z_coefficient(-1).is_zero());
    // (exp(-x^2/2))'' = (x^2 - 1) exp(-x^2/2)
    const ExpPolyFn f(Rational(-1, 2) * x() * x(), RationalFn(1));
    CHECK(f.differentiate(var::x, 2) == ExpPolyFn(f.exponent(), RationalFn(x() * x() - 1)));
    CHECK_THROWS(ExpPolyFn(x().pow(3), RationalFn(1)));
    CHECK_THROWS(f + ExpPolyFn(x(), RationalFn(1)));
    CHECK((f - f).is_zero());
}

TEST_CASE("numeric evaluator reports poles") {
    const ExpPolyFn f(MultiPoly(), RationalFn(MultiPoly(1), UPoly({Rational(-1), Rational(1)})));
    CHECK(std::abs(eval_complex(f, 3.0, 0.0) - 0.5) < 1e-15);
    CHECK_THROWS_AS(eval_complex(f, 1.0, 0.0), PoleError);
}

TEST_CASE("Wronskians: hand values and alternation") {
    const std::vector<ExpPolyFn> mono{ExpPolyFn(RationalFn(1)), ExpPolyFn(RationalFn(x())),
                                      ExpPolyFn(RationalFn(x() * x()))};
    CHECK(wronskian(mono) == ExpPolyFn(RationalFn(2)));
    // Wr[e^{ax}, e^{bx}] = (b - a) e^{(a+b)x}
    const std::vector<ExpPolyFn> ex{ExpPolyFn(Rational(2) * x(), RationalFn(1)), ExpPolyFn(Rational(5) * x(), RationalFn(1))};
    CHECK(wronskian(ex) == ExpPolyFn(Rational(7) * x(), RationalFn(3)));
    // swapping two functions flips the sign
    std::vector<ExpPolyFn> fs{ExpPolyFn(RationalFn(MultiPoly(1), UPoly({Rational(1), Rational(0), Rational(1)}))),
                              ExpPolyFn(Rational(-1, 2) * x() * x(), RationalFn(x().pow(3))),
                              ExpPolyFn(RationalFn(x() + 2))};
    const ExpPolyFn w = wronskian(fs);
    std::swap(fs[0], fs[2]);
    CHECK(wronskian(fs) == ExpPolyFn(w.exponent(), -w.body()));
    // Wronskian in z
    const MultiPoly z = MultiPoly::variable(var::z);
    const std::vector<ExpPolyFn> zs{ExpPolyFn(RationalFn(z)), ExpPolyFn(RationalFn(z * z))};
    CHECK(wronskian(zs, var::z) == ExpPolyFn(RationalFn(z * z)));
}

TEST_CASE("differential operators: compose agrees with repeated application") {
    const UPoly den({Rational(3), Rational(0), Rational(1)});
    const LinearDiffOp a({RationalFn(x()), RationalFn(MultiPoly(1), den), RationalFn(2)});
    const LinearDiffOp b({RationalFn(MultiPoly(x() * x()), den), RationalFn(-1), RationalFn(0), RationalFn(1)});
    const LinearDiffOp ab = compose(a, b);
    CHECK(ab.order() == 5);
    const std::vector<ExpPolyFn> probes{ExpPolyFn(Rational(-1, 2) * x() * x(), RationalFn(x().pow(3) - 1)),
                                        ExpPolyFn(Rational(1, 2) * x(), RationalFn(MultiPoly(1), UPoly({Rational(1), Rational(1)}))),
                                        ExpPolyFn(RationalFn(x().pow(6)))};
    for (const auto& f : probes) CHECK(ab.apply(f) == a.apply(b.apply(f)));
    CHECK((a + b) - b == a);
    CHECK(compose(LinearDiffOp::identity(), a) == a);
    CHECK(compose(LinearDiffOp::derivative(), LinearDiffOp::multiplication(RationalFn(x()))) ==
          LinearDiffOp({RationalFn(1), RationalFn(x())}));
    CHECK(first_difference(a, a).empty());
    CHECK(!first_difference(a, b).empty());
}

TEST_CASE("operator from kernel annihilates its kernel") {
    const std::vector<ExpPolyFn> fs{ExpPolyFn(Rational(-1, 2) * x() * x(), RationalFn(x())),
                                    ExpPolyFn(Rational(1, 2) * x() * x(), RationalFn(x() * x() + 1)),
                                    ExpPolyFn(RationalFn(MultiPoly(1), UPoly({Rational(2), Rational(0), Rational(1)})))};
    const LinearDiffOp a = LinearDiffOp::from_kernel(fs);
    CHECK(a.order() == 3);
    CHECK(a.is_monic());
    for (const auto& f : fs) CHECK(a.apply(f).is_zero());
    CHECK(LinearDiffOp::from_kernel(std::span<const ExpPolyFn>()) == LinearDiffOp::identity());
    const std::vector<ExpPolyFn> dep{fs[0], ExpPolyFn(fs[0].exponent(), RationalFn(Rational(3) * x()))};
    CHECK_THROWS(LinearDiffOp::from_kernel(dep));
    // polynomial in an operator: p(T) = 2 - 3T + T^2 on T = D
    const std::vector<Rational> c{Rational(2), Rational(-3), Rational(1)};
    CHECK(LinearDiffOp::derivative().polynomial(c) ==
          LinearDiffOp({RationalFn(2), RationalFn(-3), RationalFn(1)}));
}
