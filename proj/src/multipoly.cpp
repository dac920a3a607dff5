#include "ecs/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rext {

bool is_t(Var v) { return v >= 2; }
int t_index(Var v) { return v - 1; }

std::string var_name(Var v) {
    if (v == var::x) return "x";
    if (v == var::z) return "z";
    return "t" + std::to_string(t_index(v));
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) { trim(); }

Monomial Monomial::of(Var v, int e) {
    Monomial m;
    m.set(v, e);
    return m;
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

void Monomial::set(Var v, int e) {
    if (e < 0 && v != var::z) throw std::domain_error("negative exponent on " + var_name(v));
    if (v >= static_cast<int>(e_.size())) {
        if (e == 0) return;
        e_.resize(static_cast<size_t>(v) + 1, 0);
    }
    e_[static_cast<size_t>(v)] = e;
    trim();
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : e_) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.resize(std::max(a.e_.size(), b.e_.size()), 0);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] += a.e_[i];
    for (size_t i = 0; i < b.e_.size(); ++i) r.e_[i] += b.e_[i];
    r.trim();
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.exp(var::z) != b.exp(var::z)) return a.exp(var::z) < b.exp(var::z);
    if (a.exp(var::x) != b.exp(var::x)) return a.exp(var::x) < b.exp(var::x);
    const int top = std::max(a.max_var(), b.max_var());
    for (Var v = top; v >= 2; --v) {
        if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v);
    }
    return false;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const UPoly& p, Var v) {
    const auto& c = p.coeffs();
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) terms_.emplace(Monomial::of(v, static_cast<int>(k)), c[k]);
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int MultiPoly::min_exp(Var v) const {
    if (terms_.empty()) return 0;
    int r = terms_.begin()->first.exp(v);
    for (const auto& [m, c] : terms_) r = std::min(r, m.exp(v));
    return r;
}

int MultiPoly::max_exp(Var v) const {
    if (terms_.empty()) return 0;
    int r = terms_.begin()->first.exp(v);
    for (const auto& [m, c] : terms_) r = std::max(r, m.exp(v));
    return r;
}

bool MultiPoly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto& t) { return t.first.exp(v) != 0; });
}

bool MultiPoly::depends_only_on(Var v) const {
    for (const auto& [m, c] : terms_) {
        for (Var w = 0; w <= m.max_var(); ++w)
            if (w != v && m.exp(w) != 0) return false;
    }
    return true;
}

std::vector<Var> MultiPoly::variables() const {
    std::vector<Var> vs;
    Var top = -1;
    for (const auto& [m, c] : terms_) top = std::max(top, m.max_var());
    for (Var v = 0; v <= top; ++v)
        if (involves(v)) vs.push_back(v);
    return vs;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::differentiate(Var v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        const int e = m.exp(v);
        if (e == 0) continue;
        Monomial dm = m;
        dm.set(v, e - 1);
        r.add_term(dm, c * e);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& values) const {
    std::map<std::pair<Var, int>, MultiPoly> power_cache;
    auto power = [&](Var v, int e) -> const MultiPoly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        if (e < 0) throw std::domain_error("cannot substitute into a negative power of " + var_name(v));
        return power_cache.emplace(key, values.at(v).pow(static_cast<unsigned>(e))).first->second;
    };
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        MultiPoly factor(c);
        for (Var v = 0; v <= m.max_var(); ++v) {
            const int e = m.exp(v);
            if (e == 0) continue;
            if (values.count(v)) factor = factor * power(v, e);
            else rest.set(v, e);
        }
        if (rest.is_one()) {
            r += factor;
        } else {
            for (const auto& [fm, fc] : factor.terms_) r.add_term(fm * rest, fc);
        }
    }
    return r;
}

MultiPoly MultiPoly::coefficient(Var v, int power) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.exp(v) != power) continue;
        Monomial rest = m;
        rest.set(v, 0);
        r.terms_.emplace(rest, c);
    }
    return r;
}

MultiPoly MultiPoly::shifted(Var v, int shift) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        s.set(v, m.exp(v) + shift);
        r.terms_.emplace(s, c);
    }
    return r;
}

UPoly MultiPoly::to_upoly(Var v) const {
    if (!depends_only_on(v)) throw std::domain_error("polynomial involves variables other than " + var_name(v));
    std::vector<Rational> c(static_cast<size_t>(std::max(0, max_exp(v) + 1)));
    for (const auto& [m, k] : terms_) c[static_cast<size_t>(m.exp(v))] = k;
    return UPoly(std::move(c));
}

std::complex<double> MultiPoly::eval(double x, std::complex<double> z, std::span<const double> t) const {
    std::complex<double> sum = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> term = c.get_d();
        for (Var v = 0; v <= m.max_var(); ++v) {
            const int e = m.exp(v);
            if (e == 0) continue;
            if (v == var::x) term *= std::pow(x, e);
            else if (v == var::z) term *= std::pow(z, e);
            else {
                const size_t k = static_cast<size_t>(t_index(v));
                term *= k <= t.size() ? std::pow(t[k - 1], e) : 0.0;
            }
        }
        sum += term;
    }
    return sum;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        std::string mono;
        // t's first in index order, then x, then z
        auto append = [&](Var v) {
            const int e = m.exp(v);
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var_name(v);
            if (e != 1) mono += "^" + std::to_string(e);
        };
        for (Var v = 2; v <= m.max_var(); ++v) append(v);
        append(var::x);
        append(var::z);
        if (mono.empty()) os << rext::to_string(a);
        else if (a == 1) os << mono;
        else os << rext::to_string(a) << "*" << mono;
    }
    return os.str();
}

}  // namespace rext
