#include "ecs/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace rext {

LinearDiffOp::LinearDiffOp(std::vector<RationalFn> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!c.depends_only_on_x()) throw std::domain_error("operator coefficients must depend on x only");
    trim();
}

void LinearDiffOp::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinearDiffOp LinearDiffOp::derivative(int order) {
    std::vector<RationalFn> c(static_cast<size_t>(order) + 1);
    c.back() = RationalFn(1);
    return LinearDiffOp(std::move(c));
}

bool LinearDiffOp::is_monic() const { return !coeffs_.empty() && coeffs_.back() == RationalFn(1); }

LinearDiffOp LinearDiffOp::from_kernel(std::span<const ExpPolyFn> fs) {
    const int p = static_cast<int>(fs.size());
    if (p == 0) return identity();
    for (const auto& f : fs)
        if (!f.body().depends_only_on_x() || !f.exponent().depends_only_on(var::x))
            throw std::domain_error("kernel functions must depend on x only");
    // Expand Wr[f_1..f_p, y] along the y column. With rows cleared by powers of
    // the common denominator D (row j scaled by D^{j+1}),
    //   c_j = (-1)^{j+p} det(S without row j) / (det(S without row p) D^{p-j}).
    ClearedDerivatives cd = cleared_derivatives(fs, p + 1);
    auto minor_without = [&](int skip) {
        std::vector<std::vector<MultiPoly>> m;
        for (int r = 0; r <= p; ++r)
            if (r != skip) m.push_back(cd.rows[static_cast<size_t>(r)]);
        return polynomial_determinant(m).to_upoly();
    };
    const UPoly lead = minor_without(p);
    if (lead.is_zero()) throw std::domain_error("kernel functions are linearly dependent");
    std::vector<RationalFn> c(static_cast<size_t>(p) + 1);
    c[static_cast<size_t>(p)] = RationalFn(1);
    for (int j = 0; j < p; ++j) {
        UPoly num = minor_without(j);
        if ((j + p) % 2 != 0) num = -num;
        c[static_cast<size_t>(j)] = RationalFn(num, lead * cd.denominator.pow(static_cast<unsigned>(p - j)));
    }
    return LinearDiffOp(std::move(c));
}

ExpPolyFn LinearDiffOp::apply(const ExpPolyFn& f) const {
    ExpPolyFn result;
    ExpPolyFn d = f;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) result += coeffs_[j] * d;
        if (j + 1 < coeffs_.size()) d = d.differentiate(var::x);
    }
    return result;
}

LinearDiffOp& LinearDiffOp::operator+=(const LinearDiffOp& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
}

LinearDiffOp& LinearDiffOp::operator-=(const LinearDiffOp& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
}

LinearDiffOp operator*(const RationalFn& s, const LinearDiffOp& a) {
    std::vector<RationalFn> c;
    c.reserve(a.coeffs_.size());
    for (const auto& k : a.coeffs_) c.push_back(s * k);
    return LinearDiffOp(std::move(c));
}

LinearDiffOp compose(const LinearDiffOp& a, const LinearDiffOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // a_i d^i (b_j d^j) = a_i sum_k C(i,k) b_j^{(k)} d^{i-k+j}
    const int oa = a.order(), ob = b.order();
    std::vector<std::vector<RationalFn>> bder(b.coeffs_.size());
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        bder[j].push_back(b.coeffs_[j]);
        for (int k = 1; k <= oa; ++k) bder[j].push_back(bder[j].back().differentiate(var::x));
    }
    std::vector<RationalFn> c(static_cast<size_t>(oa + ob) + 1);
    for (int i = 0; i <= oa; ++i) {
        const RationalFn& ai = a.coeffs_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (int k = 0; k <= i; ++k) {
            const Rational binom(binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)));
            RationalFn scaled = ai * RationalFn(binom);
            for (int j = 0; j <= ob; ++j) {
                const RationalFn& bjk = bder[static_cast<size_t>(j)][static_cast<size_t>(k)];
                if (bjk.is_zero()) continue;
                c[static_cast<size_t>(i - k + j)] += scaled * bjk;
            }
        }
    }
    return LinearDiffOp(std::move(c));
}

LinearDiffOp LinearDiffOp::polynomial(std::span<const Rational> c) const {
    LinearDiffOp result;
    LinearDiffOp power = identity();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) result += RationalFn(c[k]) * power;
        if (k + 1 < c.size()) power = compose(*this, power);
    }
    return result;
}

std::vector<std::complex<double>> LinearDiffOp::eval_coeffs(double x) const {
    std::vector<std::complex<double>> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.eval(x));
    return v;
}

std::string LinearDiffOp::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = order(); j >= 0; --j) {
        const auto& c = coeffs_[static_cast<size_t>(j)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (j == 1) os << "*D";
        else if (j > 1) os << "*D^" << j;
    }
    return os.str();
}

std::string first_difference(const LinearDiffOp& a, const LinearDiffOp& b) {
    const size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (size_t j = 0; j < n; ++j) {
        RationalFn ca = j < a.coeffs().size() ? a.coeffs()[j] : RationalFn();
        RationalFn cb = j < b.coeffs().size() ? b.coeffs()[j] : RationalFn();
        if (!(ca == cb)) {
            std::ostringstream os;
            os << "coefficient of D^" << j << ": " << ca.to_string() << " vs " << cb.to_string();
            return os.str();
        }
    }
    return {};
}

}  // namespace rext
