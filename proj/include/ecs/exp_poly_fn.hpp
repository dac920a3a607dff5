#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecs/multipoly.hpp"
#include "ecs/rational_fn.hpp"

namespace rext {

// Raised when a numeric evaluation hits a zero of the denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// exp(exponent) * body, with exponent a polynomial of total degree <= 2 in
// (x, z) and body a rational function in (x, z).
class ExpPolyFn {
public:
    ExpPolyFn() = default;
    ExpPolyFn(MultiPoly exponent, RationalFn body);
    ExpPolyFn(RationalFn body) : body_(std::move(body)) {}  // NOLINT

    const MultiPoly& exponent() const { return exponent_; }
    const RationalFn& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    ExpPolyFn differentiate(Var v) const;
    ExpPolyFn differentiate(Var v, int times) const;

    // Sum of two functions sharing the same exponent; a zero operand adopts
    // the other's exponent. Throws std::domain_error otherwise.
    ExpPolyFn& operator+=(const ExpPolyFn& o);
    ExpPolyFn& operator-=(const ExpPolyFn& o);
    friend ExpPolyFn operator+(ExpPolyFn a, const ExpPolyFn& b) { return a += b; }
    friend ExpPolyFn operator-(ExpPolyFn a, const ExpPolyFn& b) { return a -= b; }

    friend ExpPolyFn operator*(const ExpPolyFn& a, const ExpPolyFn& b);
    friend ExpPolyFn operator*(const RationalFn& r, const ExpPolyFn& f);

    // Equality of the represented functions (zero functions compare equal
    // regardless of exponent).
    friend bool operator==(const ExpPolyFn& a, const ExpPolyFn& b);

    // Laurent coefficient of z^power, as a function of x alone:
    // [z^power] exp(exponent) * body. Requires the exponent's z part to be a
    // polynomial in z (true for every generating function here).
    ExpPolyFn z_coefficient(int power) const;

    std::string to_string() const;

private:
    MultiPoly exponent_;
    RationalFn body_;
};

// Precompiled floating-point evaluator. Exact coefficients are converted
// once; evaluation is exp(E(x,z)) * N(x,z) / D(x).
class NumericExpPolyFn {
public:
    NumericExpPolyFn() = default;
    explicit NumericExpPolyFn(const ExpPolyFn& f, double pole_tolerance = 1e-300);

    std::complex<double> operator()(double x, std::complex<double> z) const;

private:
    struct Block {
        int z_power;
        std::vector<double> x_coeffs;  // increasing degree
    };
    static std::complex<double> eval_blocks(const std::vector<Block>& blocks, double x,
                                            std::complex<double> z);
    std::vector<Block> exponent_, numerator_;
    std::vector<double> denominator_;
    double pole_tolerance_ = 1e-300;
};

// exp(E) * R evaluated at (x, z); throws PoleError at a denominator zero.
std::complex<double> eval_complex(const ExpPolyFn& f, double x, std::complex<double> z);

// Derivative table with a common cleared denominator:
//   d^j/dx^j f_i = exp(exponents[i]) * rows[j][i] / denominator^(j+1)
// for j = 0..num_rows-1. All entries are polynomials.
struct ClearedDerivatives {
    std::vector<std::vector<MultiPoly>> rows;
    std::vector<MultiPoly> exponents;
    UPoly denominator;
};
ClearedDerivatives cleared_derivatives(std::span<const ExpPolyFn> fs, int num_rows);

// Determinant of a polynomial matrix; fraction-free elimination when every
// entry depends on x alone, Laplace expansion otherwise.
MultiPoly polynomial_determinant(const std::vector<std::vector<MultiPoly>>& m);

// Wronskian with respect to `v`. Exponential factors are pulled out of each
// column, rows are cleared by powers of the common denominator, and the
// determinant is taken over polynomials.
ExpPolyFn wronskian(std::span<const ExpPolyFn> fs, Var v = var::x);

}  // namespace rext
