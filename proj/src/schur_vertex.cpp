#include "ecs/schur_vertex.hpp"

#include <mutex>
#include <stdexcept>

namespace rext {

TVector::TVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

Rational TVector::evaluate(const MultiPoly& p) const {
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (Var v = 0; v <= m.max_var() && term != 0; ++v) {
            const int e = m.exp(v);
            if (e == 0) continue;
            if (!is_t(v)) throw std::domain_error("TVector::evaluate: polynomial involves " + var_name(v));
            const size_t k = static_cast<size_t>(t_index(v));
            if (k > entries_.size()) {
                term = 0;
                break;
            }
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), entries_[k - 1].get_num_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(pw.get_den_mpz_t(), entries_[k - 1].get_den_mpz_t(), static_cast<unsigned long>(e));
            pw.canonicalize();
            term *= pw;
        }
        sum += term;
    }
    return sum;
}

const MultiPoly& bell(int k) {
    static const MultiPoly zero;
    if (k < 0) return zero;
    static std::mutex mu;
    static std::map<int, MultiPoly> cache{{0, MultiPoly(1)}};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // k B_k = sum_{i=1}^k i t_i B_{k-i}
    for (int n = static_cast<int>(cache.size()); n <= k; ++n) {
        MultiPoly s;
        for (int i = 1; i <= n; ++i)
            s += (MultiPoly::variable(var::t(i)) * Rational(i)) * cache.at(n - i);
        cache.emplace(n, s * Rational(1, n));
    }
    return cache.at(k);
}

MultiPoly schur(const Partition& lambda) {
    const int l = lambda.length();
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(l), std::vector<MultiPoly>(static_cast<size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = bell(lambda.part(i) - i + j);
    return laplace_determinant(m);
}

MultiPoly schur_wronskian(const Partition& lambda) {
    const int l = lambda.length();
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(l), std::vector<MultiPoly>(static_cast<size_t>(l)));
    for (int c = 0; c < l; ++c) {
        const int i = l - c;  // columns run m_ℓ, ..., m_1
        MultiPoly f = bell(lambda.part(i) - i + l);
        for (int r = 0; r < l; ++r) {
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = f;
            f = f.differentiate(var::t(1));
        }
    }
    return laplace_determinant(m);
}

MultiPoly schur_via_raising(const Partition& lambda) {
    MultiPoly p(1);
    for (int i = lambda.length(); i >= 1; --i) p = vertex_X(lambda.part(i), p);
    return p;
}

MultiPoly miwa_shift(const MultiPoly& p) {
    std::map<Var, MultiPoly> subs;
    for (Var v : p.variables()) {
        if (!is_t(v)) continue;
        const int k = t_index(v);
        subs[v] = MultiPoly::variable(v) - MultiPoly::term(Rational(1, k), Monomial::of(var::z, -k));
    }
    return p.substitute(subs);
}

std::map<int, MultiPoly> vertex_X_range(int m_lo, int m_hi, const MultiPoly& p) {
    for (Var v : p.variables())
        if (!is_t(v)) throw std::domain_error("vertex operators act on polynomials in t only");
    const MultiPoly shifted = miwa_shift(p);
    const int depth = -shifted.min_exp(var::z);
    std::vector<MultiPoly> c;
    c.reserve(static_cast<size_t>(depth) + 1);
    for (int j = 0; j <= depth; ++j) c.push_back(shifted.coefficient(var::z, -j));
    std::map<int, MultiPoly> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        MultiPoly s;
        for (int j = std::max(0, -m); j <= depth; ++j) {
            if (c[static_cast<size_t>(j)].is_zero()) continue;
            s += bell(m + j) * c[static_cast<size_t>(j)];
        }
        out.emplace(m, std::move(s));
    }
    return out;
}

MultiPoly vertex_X(int m, const MultiPoly& p) { return vertex_X_range(m, m, p).at(m); }

std::vector<VertexTerm> vertex_expansion(const Partition& lambda, int m_lo, int m_hi) {
    const MayaDiagram mm = maya_from_partition(lambda);
    std::vector<VertexTerm> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (mm.contains(m)) continue;
        Insertion ins = insertion(m, lambda);
        out.push_back({m, ins.sign, std::move(ins.partition)});
    }
    return out;
}

MultiPoly hermite_specialization(const MultiPoly& p) {
    std::map<Var, MultiPoly> subs;
    for (Var v : p.variables()) {
        if (!is_t(v)) throw std::domain_error("hermite_specialization expects a polynomial in t");
        const int k = t_index(v);
        if (k == 1) subs[v] = MultiPoly::variable(var::x);
        else if (k == 2) subs[v] = MultiPoly(Rational(-1, 4));
        else subs[v] = MultiPoly();
    }
    return p.substitute(subs);
}

MultiPoly shifted_hermite_specialization(const MultiPoly& p) {
    std::map<Var, MultiPoly> subs;
    for (Var v : p.variables()) {
        if (!is_t(v)) throw std::domain_error("shifted_hermite_specialization expects a polynomial in t");
        const int k = t_index(v);
        MultiPoly shift = MultiPoly::term(Rational(-1, k), Monomial::of(var::z, -k));
        if (k == 1) subs[v] = MultiPoly::variable(var::x) + shift;
        else if (k == 2) subs[v] = MultiPoly(Rational(-1, 4)) + shift;
        else subs[v] = shift;
    }
    return p.substitute(subs);
}

}  // namespace rext
