#include "ecs/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rext {

UPoly::UPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead() of zero polynomial");
    return c_.back();
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / lead();
    return *this * inv;
}

UPoly UPoly::primitive(Rational* unit) const {
    if (is_zero()) {
        if (unit) *unit = 1;
        return {};
    }
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lead() < 0) scale = -scale;
    if (unit) *unit = 1 / scale;
    return *this * scale;
}

Rational UPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

std::complex<double> UPoly::eval(std::complex<double> x) const {
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0) {
            os << rext::to_string(a);
        } else {
            if (a != 1) os << rext::to_string(a) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    Rational inv = 1 / b.lead();
    for (int k = a.degree(); k >= b.degree(); --k) {
        Rational f = r[static_cast<size_t>(k)] * inv;
        if (f == 0) continue;
        int shift = k - b.degree();
        q[static_cast<size_t>(shift)] = f;
        for (size_t j = 0; j < bc.size(); ++j) r[static_cast<size_t>(shift) + j] -= f * bc[j];
    }
    r.resize(static_cast<size_t>(b.degree()));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly u = a.monic(), v = b.monic();
    while (!v.is_zero()) {
        UPoly r = divmod(u, v).second;
        u = std::move(v);
        v = r.monic();
    }
    return u.monic();
}

namespace {

int sign_at_infinity(const UPoly& p, bool positive) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2 != 0) s = -s;
    return s;
}

}  // namespace

int real_root_count(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("real_root_count of zero polynomial");
    if (p.degree() < 1) return 0;
    // Positive rescaling keeps the sign pattern and bounds coefficient growth.
    auto scaled = [](const UPoly& q) { return q * Rational(1 / abs(q.lead())); };
    std::vector<UPoly> seq{scaled(p), scaled(p.derivative())};
    while (true) {
        UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(scaled(-r));
    }
    auto variations = [&](bool positive) {
        int count = 0, prev = 0;
        for (const auto& s : seq) {
            int v = sign_at_infinity(s, positive);
            if (v == 0) continue;
            if (prev != 0 && v != prev) ++count;
            prev = v;
        }
        return count;
    };
    return variations(false) - variations(true);
}

UPoly determinant(std::vector<std::vector<UPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return UPoly(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    int sgn_flip = 1;
    UPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return {};
            std::swap(m[k], m[p]);
            sgn_flip = -sgn_flip;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = UPoly{};
        }
        prev = m[k][k];
    }
    UPoly d = m[n - 1][n - 1];
    return sgn_flip < 0 ? -d : d;
}

}  // namespace rext
