#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ecs/scalar.hpp"

namespace rext {

// Dense univariate polynomial over Q in the variable x. Coefficients are
// stored lowest degree first with no trailing zeros; the zero polynomial has
// an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c);  // NOLINT: implicit constant embedding
    UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT
    UPoly(std::initializer_list<Rational> coeffs);
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
    static UPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& lead() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& s);
    UPoly operator-() const;

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly pow(unsigned e) const;
    UPoly derivative() const;
    UPoly monic() const;

    // Integer-coefficient primitive associate with positive leading
    // coefficient; the unit removed is returned through `unit` when given.
    UPoly primitive(Rational* unit = nullptr) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    std::complex<double> eval(std::complex<double> x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder, a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

// Division that must be exact; throws std::domain_error otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);

// Monic greatest common divisor (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

// Number of distinct real roots, by Sturm sequence sign variations at
// +/- infinity. Exact.
int real_root_count(const UPoly& p);

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
UPoly determinant(std::vector<std::vector<UPoly>> m);

}  // namespace rext
