#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ecs/exp_poly_fn.hpp"
#include "ecs/rational_fn.hpp"

namespace rext {

// Ordinary differential operator sum_j coeffs[j] * (d/dx)^j with
// coefficients rational in x. The zero operator has no coefficients.
class LinearDiffOp {
public:
    LinearDiffOp() = default;
    explicit LinearDiffOp(std::vector<RationalFn> coeffs);

    static LinearDiffOp identity() { return LinearDiffOp({RationalFn(1)}); }
    static LinearDiffOp multiplication(const RationalFn& f) { return LinearDiffOp({f}); }
    static LinearDiffOp derivative(int order = 1);

    // The monic operator of order p = fs.size() with kernel spanned by fs:
    // y -> Wr[f_1..f_p, y] / Wr[f_1..f_p]. Each f_i must depend on x only.
    static LinearDiffOp from_kernel(std::span<const ExpPolyFn> fs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    const std::vector<RationalFn>& coeffs() const { return coeffs_; }
    const RationalFn& coeff(int j) const { return coeffs_.at(static_cast<size_t>(j)); }

    ExpPolyFn apply(const ExpPolyFn& f) const;

    LinearDiffOp& operator+=(const LinearDiffOp& o);
    LinearDiffOp& operator-=(const LinearDiffOp& o);
    friend LinearDiffOp operator+(LinearDiffOp a, const LinearDiffOp& b) { return a += b; }
    friend LinearDiffOp operator-(LinearDiffOp a, const LinearDiffOp& b) { return a -= b; }
    friend LinearDiffOp operator*(const RationalFn& s, const LinearDiffOp& a);

    // Operator product (a*b)[y] = a[b[y]], by the Leibniz rule.
    friend LinearDiffOp compose(const LinearDiffOp& a, const LinearDiffOp& b);

    friend bool operator==(const LinearDiffOp& a, const LinearDiffOp& b) { return a.coeffs_ == b.coeffs_; }

    // Polynomial p(T) = sum_k c_k T^k of this operator.
    LinearDiffOp polynomial(std::span<const Rational> c) const;

    std::vector<std::complex<double>> eval_coeffs(double x) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<RationalFn> coeffs_;
};

// Human-readable description of the first coefficient where a and b differ,
// or the empty string when they are equal.
std::string first_difference(const LinearDiffOp& a, const LinearDiffOp& b);

}  // namespace rext
