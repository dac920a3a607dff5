#include "ecs/coherent.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ecs/quadrature.hpp"
#include "ecs/rational_ext.hpp"
#include "ecs/schur_vertex.hpp"

namespace rext {

namespace {

MultiPoly z_power(int q) { return MultiPoly::term(Rational(1), Monomial::of(var::z, q)); }

Rational pow2(int e) {
    Rational r = 1;
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(std::abs(e)));
    return e >= 0 ? r : Rational(1) / r;
}

}  // namespace

GeneratingFunction psi0_gf() {
    const MultiPoly x = MultiPoly::variable(var::x), z = MultiPoly::variable(var::z);
    const MultiPoly d = x - z;
    MultiPoly e = Rational(-1, 2) * (d * d) + Rational(1, 4) * (z * z);
    return {ExpPolyFn(std::move(e), RationalFn(1)), MayaDiagram(), Partition()};
}

GeneratingFunction gen_fn(const MayaDiagram& m) {
    GeneratingFunction g = psi0_gf();
    g.maya = m;
    g.partition = partition_from_maya(m);
    const MultiPoly s = schur(g.partition);
    const UPoly den = hermite_specialization(s).to_upoly();
    g.value = RationalFn(shifted_hermite_specialization(s), den) * g.value;
    return g;
}

GeneratingFunction gen_fn(const Partition& lambda) { return gen_fn(maya_from_partition(lambda)); }

ExpansionCheck expansion_coefficients(const MayaDiagram& m, int count) {
    const GeneratingFunction g = gen_fn(m);
    const int sigma = m.index();
    const Partition& lam = g.partition;
    const int l = lam.length();
    ExpansionCheck out;
    for (int k : bound_state_indices(m, count)) {
        out.indices.push_back(k);
        Rational c = 1;
        for (int i = 1; i <= l; ++i) c *= k - (lam.part(i) - i + sigma);
        c /= Rational(factorial(static_cast<unsigned>(k - sigma + l)));
        c *= pow2(-(k - sigma));
        const ExpPolyFn expected = RationalFn(c) * eigenfunction(m, k);
        if (!(g.value.z_coefficient(k - sigma) == expected)) {
            out.ok = false;
            out.first_mismatch = k;
            break;
        }
    }
    return out;
}

SymbolicCheck annihilator_eigencheck(const MayaDiagram& m, int q) {
    const ExpPolyFn psi = gen_fn(m).value;
    SymbolicCheck r;
    r.residual = ladder(m, q).op.apply(psi) - RationalFn(z_power(q)) * psi;
    r.ok = r.residual.is_zero();
    return r;
}

SymbolicCheck hamiltonian_eigencheck(const MayaDiagram& m) {
    const ExpPolyFn psi = gen_fn(m).value;
    const LinearDiffOp t = build_extension(m).hamiltonian;
    const ExpPolyFn rhs = RationalFn(MultiPoly(2) * MultiPoly::variable(var::z)) * psi.differentiate(var::z) +
                          RationalFn(1 + 2 * m.index()) * psi;
    SymbolicCheck r;
    r.residual = t.apply(psi) - rhs;
    r.ok = r.residual.is_zero();
    return r;
}

TimeEvaluator::TimeEvaluator(const ExpPolyFn& f, double alpha, int sigma)
    : f_(f), alpha_(alpha), sigma_(sigma) {}

std::complex<double> TimeEvaluator::operator()(double x, double t) const {
    const std::complex<double> z = std::polar(alpha_, -2 * t);
    const std::complex<double> phase = std::polar(1.0, -(1 + 2 * sigma_) * t);
    return phase * f_(x, z);
}

CoherentState::CoherentState(GeneratingFunction gen, double alpha)
    : gen_(std::move(gen)),
      alpha_(alpha),
      phi_(gen_.value, alpha, gen_.maya.index()),
      phi_x_(gen_.value.differentiate(var::x), alpha, gen_.maya.index()),
      phi_xx_(gen_.value.differentiate(var::x, 2), alpha, gen_.maya.index()),
      t_phi_(build_extension(gen_.maya).hamiltonian.apply(gen_.value), alpha, gen_.maya.index()) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
}

std::complex<double> CoherentState::z(double t) const { return std::polar(alpha_, -2 * t); }

CoherentState ccs(double alpha) { return CoherentState(psi0_gf(), alpha); }
CoherentState ecs(const MayaDiagram& m, double alpha) { return CoherentState(gen_fn(m), alpha); }
CoherentState ecs(const Partition& lambda, double alpha) { return CoherentState(gen_fn(lambda), alpha); }

std::complex<double> schrodinger_residual(const CoherentState& s, double x, double t, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    const std::complex<double> i(0, 1);
    return i * (s(x, t + dt) - s(x, t - dt)) / (2 * dt) - s.hamiltonian(x, t);
}

UncertaintyReport uncertainty(const MayaDiagram& m, double alpha, const std::vector<double>& times,
                              const QuadConfig& cfg) {
    if (!is_krein_adler_regular(m))
        throw std::domain_error("diagram " + m.to_string() +
                                " is not Krein-Adler regular: the potential has real poles");
    const CoherentState s = ecs(m, alpha);
    UncertaintyReport r;
    r.alpha = alpha;
    r.partition = s.gen().partition;
    r.half_width = cfg.half_width > 0 ? cfg.half_width : alpha + 12;
    r.tolerance = cfg.tolerance;
    const quad::Rule rule = quad::gauss_legendre(cfg.nodes_per_panel);
    for (double t : times) {
        // |Φ|^2, x|Φ|^2, x^2|Φ|^2, Re(i Φ_x conj Φ), Re(Φ_xx conj Φ)
        std::function<std::array<double, 5>(double)> f = [&](double x) {
            const std::complex<double> p = s(x, t), c = std::conj(p);
            const double rho = std::norm(p);
            const std::complex<double> i(0, 1);
            return std::array<double, 5>{rho, x * rho, x * x * rho, std::real(i * s.dx(x, t) * c),
                                         std::real(s.dxx(x, t) * c)};
        };
        const quad::Refined q =
            quad::refine<5>(rule, -r.half_width, r.half_width, cfg.initial_panels, cfg.max_panels, cfg.tolerance, f);
        if (!q.converged) {
            std::ostringstream os;
            os << "quadrature did not converge at t = " << t << ": relative change " << q.rel_change << " with "
               << q.panels << " panels";
            throw std::runtime_error(os.str());
        }
        const double i0 = q.values[0];
        const double mx = q.values[1] / i0, px = q.values[3] / i0;
        const double vx = q.values[2] / i0 - mx * mx;
        const double vp = -q.values[4] / i0 - px * px;
        r.time_grid.push_back(t);
        r.var_x.push_back(vx);
        r.var_p.push_back(vp);
        r.product.push_back(vx * vp);
        r.panels.push_back(q.panels);
    }
    return r;
}

UncertaintyReport uncertainty(const Partition& lambda, double alpha, const std::vector<double>& times,
                              const QuadConfig& cfg) {
    return uncertainty(maya_from_partition(lambda), alpha, times, cfg);
}

void write_csv(std::ostream& os, const UncertaintyReport& r) {
    os << "t,var_x,var_p,product,alpha,lambda\n";
    char buf[160];
    const std::string lam = "\"" + r.partition.to_string() + "\"";
    for (size_t i = 0; i < r.time_grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,", r.time_grid[i], r.var_x[i], r.var_p[i],
                      r.product[i], r.alpha);
        os << buf << lam << "\n";
    }
}

}  // namespace rext
