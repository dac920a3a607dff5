#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <functional>
#include <random>

#include "ecs/schur_vertex.hpp"

using namespace rext;

namespace {

MultiPoly t(int k) { return MultiPoly::variable(var::t(k)); }

// Σ_{n_1 + 2n_2 + ... + k n_k = k} Π t_j^{n_j} / n_j!
MultiPoly bell_by_enumeration(int k) {
    MultiPoly out;
    std::function<void(int, int, MultiPoly)> rec = [&](int j, int rest, MultiPoly acc) {
        if (rest == 0) {
            out += acc;
            return;
        }
        if (j > rest) return;
        for (int n = 0; n * j <= rest; ++n) {
            Rational c(1);
            c /= Rational(factorial(static_cast<unsigned>(n)));
            rec(j + 1, rest - n * j, acc * t(j).pow(static_cast<unsigned>(n)) * c);
        }
    };
    rec(1, k, MultiPoly(1));
    return out;
}

std::vector<Partition> all_partitions_upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

// Π_cells (n + j - i) / hook: the number of semistandard tableaux with
// entries <= n, which is S_λ at t_k = n / k.
Rational content_formula(const Partition& p, int n) {
    const auto h = hooklengths(p);
    Rational r(1);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) r *= Rational(n + j - i) / Rational(h[i - 1][j - 1]);
    return r;
}

MultiPoly random_t_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 2), c(-4, 4), terms(1, 4);
    MultiPoly p;
    for (int i = terms(rng); i > 0; --i) {
        Monomial m;
        m.set(var::t(1), e(rng));
        m.set(var::t(2), e(rng) / 2);
        m.set(var::t(3), e(rng) / 2);
        p.add_term(m, Rational(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("Bell polynomials agree with the multinomial enumeration") {
    CHECK(bell(-1).is_zero());
    CHECK(bell(0) == MultiPoly(1));
    for (int k = 1; k <= 9; ++k) CHECK(bell(k) == bell_by_enumeration(k));
    CHECK(bell(3) == Rational(1, 6) * t(1).pow(3) + t(1) * t(2) + t(3));
}

TEST_CASE("Bell polynomials satisfy dB_k/dt_j = B_{k-j}") {
    for (int k = 0; k <= 8; ++k)
        for (int j = 1; j <= 4; ++j) CHECK(bell(k).differentiate(var::t(j)) == bell(k - j));
}

TEST_CASE("Schur function of (2,2)") {
    const MultiPoly s = schur(Partition({2, 2}));
    CHECK(s == Rational(1, 12) * t(1).pow(4) + t(2) * t(2) - t(1) * t(3));
    CHECK(s.to_string() == "1/12*t1^4 - t1*t3 + t2^2");
    CHECK(schur(Partition()) == MultiPoly(1));
    CHECK(schur(Partition({3})) == bell(3));
}

TEST_CASE("determinant, Wronskian and raising forms agree") {
    for (const auto& p : all_partitions_upto(6)) {
        const MultiPoly s = schur(p);
        CHECK(schur_wronskian(p) == s);
        CHECK(schur_via_raising(p) == s);
    }
}

TEST_CASE("Schur functions count semistandard tableaux") {
    for (const auto& p : all_partitions_upto(6))
        for (int n = 1; n <= 4; ++n) {
            std::vector<Rational> pt;
            for (int k = 1; k <= p.weight(); ++k) pt.push_back(Rational(n) / Rational(k));
            CHECK(TVector(pt).evaluate(schur(p)) == content_formula(p, n));
        }
    // one variable: S_λ(t_k = x^k / k) vanishes unless λ is a single row
    CHECK(TVector({Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4)}).evaluate(schur(Partition({2, 2}))) == 0);
}

TEST_CASE("Schur functions are weighted homogeneous of degree |λ|") {
    for (const auto& p : all_partitions_upto(7)) {
        const MultiPoly s = schur(p);
        for (const auto& [m, c] : s.terms()) {
            int w = 0;
            for (int k = 1; k <= 7; ++k) w += k * m.exp(var::t(k));
            CHECK(w == p.weight());
        }
    }
}

TEST_CASE("TVector evaluation") {
    const TVector pt({Rational(2), Rational(0), Rational(1, 3), Rational(0)});
    CHECK(pt.entries().size() == 3);
    CHECK(pt.evaluate(schur(Partition({2, 2}))) == Rational(4, 3) - Rational(2, 3));
    CHECK_THROWS(pt.evaluate(MultiPoly::variable(var::x)));
}

TEST_CASE("Miwa shift") {
    const MultiPoly z = MultiPoly::variable(var::z);
    const MultiPoly zinv = MultiPoly::term(Rational(1), Monomial::of(var::z, -1));
    CHECK(miwa_shift(t(1)) == t(1) - zinv);
    CHECK(miwa_shift(t(2) * t(1)) == (t(2) - Rational(1, 2) * zinv * zinv) * (t(1) - zinv));
    CHECK(miwa_shift(MultiPoly(3)) == MultiPoly(3));
    (void)z;
}

TEST_CASE("vertex operators anticommute on random polynomials") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const MultiPoly p = random_t_poly(rng);
        const auto x1 = vertex_X_range(-4, 6, p);
        std::map<int, std::map<int, MultiPoly>> x2;
        for (int n = -4; n <= 5; ++n) x2[n] = vertex_X_range(-4, 6, x1.count(n) ? x1.at(n) : vertex_X(n, p));
        for (int m = -3; m <= 4; ++m)
            for (int n = -3; n <= 4; ++n) {
                const MultiPoly lhs = x2[n][m] + x2[m + 1][n - 1];
                CHECK(lhs.is_zero());
            }
    }
}

TEST_CASE("vertex operator on the constant polynomial") {
    // X_m 1 is the Bell polynomial B_m
    for (int m = -3; m <= 5; ++m) CHECK(vertex_X(m, MultiPoly(1)) == bell(m));
    CHECK_THROWS(vertex_X(0, MultiPoly::variable(var::x)));
}

TEST_CASE("vertex operators raise Schur functions") {
    for (const auto& p : all_partitions_upto(5)) {
        const MultiPoly s = schur(p);
        const auto terms = vertex_expansion(p, -4, 6);
        const auto xs = vertex_X_range(-4, 6, s);
        std::set<int> present;
        for (const auto& term : terms) {
            present.insert(term.m);
            const Insertion ins = insertion(term.m, p);
            CHECK(term.sign == ins.sign);
            CHECK(term.partition == ins.partition);
            CHECK(xs.at(term.m) == Rational(term.sign) * schur(term.partition));
        }
        for (int m = -4; m <= 6; ++m)
            if (!present.count(m)) CHECK(xs.at(m).is_zero());
    }
}

TEST_CASE("Hermite specialization of Schur functions") {
    const MultiPoly x = MultiPoly::variable(var::x);
    CHECK(hermite_specialization(schur(Partition({2, 2}))) == Rational(1, 12) * x.pow(4) + Rational(1, 16));
    CHECK(hermite_specialization(bell(2)) == Rational(1, 2) * x * x - Rational(1, 4));
    const MultiPoly shifted = shifted_hermite_specialization(schur(Partition({1})));
    CHECK(shifted == x - MultiPoly::term(Rational(1), Monomial::of(var::z, -1)));
    // shifting then setting 1/z = 0 gives the plain specialization
    for (const auto& p : all_partitions_upto(4))
        CHECK(shifted_hermite_specialization(schur(p)).coefficient(var::z, 0) == hermite_specialization(schur(p)));
}
