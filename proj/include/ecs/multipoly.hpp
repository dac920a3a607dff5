#pragma once

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecs/scalar.hpp"
#include "ecs/upoly.hpp"

namespace rext {

// Variables share one global slot layout: x, then z, then t_1, t_2, ...
// Only z may carry negative (Laurent) exponents.
using Var = int;

namespace var {
inline constexpr Var x = 0;
inline constexpr Var z = 1;
constexpr Var t(int k) { return k + 1; }  // k >= 1
}  // namespace var

bool is_t(Var v);
int t_index(Var v);  // k for t_k
std::string var_name(Var v);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial of(Var v, int e = 1);

    int exp(Var v) const {
        return v < static_cast<int>(e_.size()) ? e_[static_cast<size_t>(v)] : 0;
    }
    void set(Var v, int e);
    int total_degree() const;
    bool is_one() const { return e_.empty(); }
    Var max_var() const { return static_cast<int>(e_.size()) - 1; }
    const std::vector<int>& exps() const { return e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void trim();
    std::vector<int> e_;
};

// Graded lexicographic order with t_1 < t_2 < ... < x < z.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate (Laurent in z) polynomial with exact rational
// coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT: implicit constant embedding
    MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT
    explicit MultiPoly(const UPoly& p, Var v = var::x);

    static MultiPoly variable(Var v) { return term(Rational(1), Monomial::of(v)); }
    static MultiPoly term(const Rational& c, const Monomial& m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    size_t size() const { return terms_.size(); }

    int total_degree() const;  // -1 for zero; z counted with its signed exponent
    int min_exp(Var v) const;
    int max_exp(Var v) const;
    bool involves(Var v) const;
    bool depends_only_on(Var v) const;
    std::vector<Var> variables() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    MultiPoly operator-() const;
    void add_term(const Monomial& m, const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(unsigned e) const;
    MultiPoly differentiate(Var v) const;

    // Simultaneous substitution of variables by polynomials.
    MultiPoly substitute(const std::map<Var, MultiPoly>& values) const;

    // Coefficient of v^power, as a polynomial without v.
    MultiPoly coefficient(Var v, int power) const;

    // Multiply by v^shift (shift may be negative only for z).
    MultiPoly shifted(Var v, int shift) const;

    // Conversion of an x-only polynomial; throws if other variables occur.
    UPoly to_upoly(Var v = var::x) const;

    // Numeric evaluation at x real, z complex, t_k given (missing t_k = 0).
    std::complex<double> eval(double x, std::complex<double> z,
                              std::span<const double> t = {}) const;

    // Canonical rendering: terms in decreasing monomial order, exact
    // coefficients as p/q, e.g. "1/12*t1^4 - t1*t3 + t2^2".
    std::string to_string() const;

private:
    Terms terms_;
};

// Determinant over any commutative ring with +, -, * via Laplace expansion
// along rows with memoised column subsets. O(n 2^n) ring products.
template <class R>
R laplace_determinant(const std::vector<std::vector<R>>& m) {
    const size_t n = m.size();
    if (n == 0) return R(1);
    if (n > 20) throw std::invalid_argument("laplace_determinant: matrix too large");
    // minors[mask] = det of rows (n - popcount(mask))..n-1 restricted to columns in mask
    std::vector<R> minors(size_t{1} << n);
    minors[0] = R(1);
    for (size_t mask = 1; mask < minors.size(); ++mask) {
        const size_t k = static_cast<size_t>(__builtin_popcountll(mask));
        const size_t row = n - k;
        R acc{};
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (!(mask & (size_t{1} << c))) continue;
            const size_t sub = mask & ~(size_t{1} << c);
            R t = m[row][c] * minors[sub];
            if (sign > 0) acc += t;
            else acc -= t;
            sign = -sign;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

}  // namespace rext
