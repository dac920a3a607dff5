#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "ecs/diff_op.hpp"
#include "ecs/exp_poly_fn.hpp"
#include "ecs/partition_maya.hpp"

namespace rext {

struct GeneratingFunction {
    ExpPolyFn value;  // function of (x, z)
    MayaDiagram maya;
    Partition partition;
};

// Ψ_0 = exp(-(x-z)^2/2 + z^2/4).
GeneratingFunction psi0_gf();

// Ψ_λ = S_λ(x - 1/z, -1/4 - 1/(2z^2), -1/(3z^3), ...) / S_λ(x, -1/4, 0, ...) · Ψ_0,
// attached to the labelled diagram M (λ and σ_M are read off M).
GeneratingFunction gen_fn(const MayaDiagram& m);
GeneratingFunction gen_fn(const Partition& lambda);

struct ExpansionCheck {
    bool ok = true;
    std::vector<int> indices;  // m ∈ I_M that were checked
    int first_mismatch = 0;    // m of the first failing term when !ok
};

// Checks the first `count` terms ψ_{M,m} Π(m-m_i)/(m-σ+ℓ)! (z/2)^{m-σ} of the
// z-expansion of Ψ_λ against the coefficients extracted from Ψ_λ itself.
ExpansionCheck expansion_coefficients(const MayaDiagram& m, int count);

struct SymbolicCheck {
    bool ok = false;
    ExpPolyFn residual;
};

// L_{M,q} Ψ_λ - z^q Ψ_λ.
SymbolicCheck annihilator_eigencheck(const MayaDiagram& m, int q);

// T_M Ψ_λ - (2z∂_z + 1 + 2σ_M) Ψ_λ.
SymbolicCheck hamiltonian_eigencheck(const MayaDiagram& m);

// exp(-i(1+2σ)t) f(x, α e^{-2it}) for a fixed symbolic f(x, z).
class TimeEvaluator {
public:
    TimeEvaluator(const ExpPolyFn& f, double alpha, int sigma);
    std::complex<double> operator()(double x, double t) const;

private:
    NumericExpPolyFn f_;
    double alpha_;
    int sigma_;
};

// Φ_λ(x, t; α) = exp(-(1+2σ)it) Ψ_λ(x, α e^{-2it}).
class CoherentState {
public:
    CoherentState(GeneratingFunction gen, double alpha);

    const GeneratingFunction& gen() const { return gen_; }
    double alpha() const { return alpha_; }
    int sigma() const { return gen_.maya.index(); }
    std::complex<double> z(double t) const;

    std::complex<double> operator()(double x, double t) const { return phi_(x, t); }
    std::complex<double> dx(double x, double t) const { return phi_x_(x, t); }
    std::complex<double> dxx(double x, double t) const { return phi_xx_(x, t); }
    // (T_M Φ)(x, t), with T_M applied symbolically before evaluation.
    std::complex<double> hamiltonian(double x, double t) const { return t_phi_(x, t); }

    // Same phase and z substitution applied to any f(x, z).
    TimeEvaluator evaluator(const ExpPolyFn& f) const { return TimeEvaluator(f, alpha_, sigma()); }

private:
    GeneratingFunction gen_;
    double alpha_;
    TimeEvaluator phi_, phi_x_, phi_xx_, t_phi_;
};

CoherentState ccs(double alpha);
CoherentState ecs(const MayaDiagram& m, double alpha);
CoherentState ecs(const Partition& lambda, double alpha);

// i (Φ(x,t+dt) - Φ(x,t-dt)) / (2dt) - (T_M Φ)(x,t).
std::complex<double> schrodinger_residual(const CoherentState& s, double x, double t, double dt);

struct QuadConfig {
    double tolerance = 1e-10;
    double half_width = 0;  // <= 0 selects α + 12
    int nodes_per_panel = 20;
    int initial_panels = 16;
    int max_panels = 1 << 14;
};

struct UncertaintyReport {
    std::vector<double> time_grid, var_x, var_p, product;
    double alpha = 0;
    Partition partition;
    double half_width = 0;
    double tolerance = 0;
    std::vector<int> panels;  // final panel count per time
};

// E(Δx)^2 and E(Δp)^2 of Φ_λ over the time grid. Throws std::domain_error
// for diagrams that are not Krein–Adler regular and std::runtime_error when
// the quadrature does not converge.
UncertaintyReport uncertainty(const MayaDiagram& m, double alpha, const std::vector<double>& times,
                              const QuadConfig& cfg = {});
UncertaintyReport uncertainty(const Partition& lambda, double alpha, const std::vector<double>& times,
                              const QuadConfig& cfg = {});

// Header `t,var_x,var_p,product,alpha,lambda`, 17 significant digits.
void write_csv(std::ostream& os, const UncertaintyReport& r);

}  // namespace rext
