#pragma once

#include <complex>
#include <string>

#include "ecs/multipoly.hpp"
#include "ecs/upoly.hpp"

namespace rext {

// Quotient of a MultiPoly numerator by a denominator that depends on x only.
// Every rational function in this library has that shape: Hermite
// pseudo-Wronskians are the only denominators, and z enters numerators only
// (as a Laurent polynomial).
//
// Normal form: gcd(numerator, denominator) = 1 and the denominator is monic.
// Equality is therefore structural.
class RationalFn {
public:
    RationalFn() : den_(1) {}
    RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFn(int c) : RationalFn(Rational(c)) {}       // NOLINT
    RationalFn(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalFn(const UPoly& num) : num_(num), den_(1) {}  // NOLINT
    RationalFn(MultiPoly num, UPoly den);
    RationalFn(const UPoly& num, const UPoly& den) : RationalFn(MultiPoly(num), den) {}

    const MultiPoly& numerator() const { return num_; }
    const UPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool depends_only_on_x() const { return num_.depends_only_on(var::x); }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn operator-() const;

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    // Division by a rational function whose numerator depends on x only.
    RationalFn divided_by(const RationalFn& o) const;

    RationalFn differentiate(Var v) const;

    std::complex<double> eval(double x, std::complex<double> z = 0) const;

    std::string to_string() const;

private:
    void normalize();
    MultiPoly num_;
    UPoly den_;
};

// Multiplies every coefficient (grouped by the non-x part of the monomial)
// of a MultiPoly by the UPoly factor / divides exactly.
MultiPoly multiply_by_x_poly(const MultiPoly& p, const UPoly& f);
MultiPoly exact_div_by_x_poly(const MultiPoly& p, const UPoly& f);

// gcd of all x-coefficient polynomials of p (monic); zero if p is zero.
UPoly x_content(const MultiPoly& p);

}  // namespace rext
