#include "ecs/hermite.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rext {

UPoly hermite(int n, HermiteKind kind) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    static std::mutex mu;
    static std::map<HermiteKind, std::vector<UPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[kind];
    if (table.empty()) {
        table.push_back(UPoly(1));
        table.push_back(UPoly({Rational(0), Rational(2)}));
    }
    const Rational s = kind == HermiteKind::standard ? -2 : 2;
    while (static_cast<int>(table.size()) <= n) {
        const int k = static_cast<int>(table.size()) - 1;
        table.push_back(UPoly::x() * table[static_cast<size_t>(k)] * Rational(2) +
                        table[static_cast<size_t>(k - 1)] * Rational(s * k));
    }
    return table[static_cast<size_t>(n)];
}

ExpPolyFn psi(int n) {
    const MultiPoly half_x2 = MultiPoly::term(Rational(1, 2), Monomial::of(var::x, 2));
    if (n >= 0) return ExpPolyFn(-half_x2, RationalFn(hermite(n)));
    return ExpPolyFn(half_x2, RationalFn(hermite(-n - 1, HermiteKind::conjugate)));
}

UPoly pseudo_wronskian(const MayaDiagram& m) {
    const std::vector<int> k = m.index_set().increasing();
    const int p = static_cast<int>(k.size());
    std::vector<std::vector<UPoly>> rows;
    for (int ki : k) {
        std::vector<UPoly> row;
        if (ki < 0) {
            for (int c = 0; c < p; ++c) row.push_back(hermite(-ki - 1 + c, HermiteKind::conjugate));
        } else {
            UPoly h = hermite(ki);
            for (int c = 0; c < p; ++c) {
                row.push_back(h);
                h = h.derivative();
            }
        }
        rows.push_back(std::move(row));
    }
    return determinant(std::move(rows));
}

UPoly pseudo_wronskian_via_wronskian(const MayaDiagram& m) {
    const std::vector<int> k = m.index_set().increasing();
    if (k.empty()) return UPoly(1);
    std::vector<ExpPolyFn> fs;
    for (int ki : k) fs.push_back(psi(ki));
    ExpPolyFn w = wronskian(fs);
    MultiPoly e = w.exponent() + MultiPoly::term(Rational(m.index(), 2), Monomial::of(var::x, 2));
    if (!e.is_zero() && !w.is_zero())
        throw std::logic_error("exp(sigma x^2/2) does not cancel the Wronskian's gaussian factor");
    if (!w.body().is_polynomial()) throw std::logic_error("Wronskian of Hermite functions is not polynomial");
    return w.body().numerator().to_upoly();
}

UPoly normalized_pw(const MayaDiagram& m) {
    const std::vector<int> k = m.index_set().increasing();
    const int p = static_cast<int>(k.size());
    int q = 0;
    while (q < p && k[static_cast<size_t>(q)] < 0) ++q;
    Rational denom = 1;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) denom *= 2 * (k[static_cast<size_t>(j)] - k[static_cast<size_t>(i)]);
    for (int i = q; i < p; ++i)
        for (int j = i + 1; j < p; ++j) denom *= 2 * (k[static_cast<size_t>(j)] - k[static_cast<size_t>(i)]);
    // (-1)^{q(q-1)/2} accounts for the conjugate rows being listed with k
    // increasing; without it the result is not translation invariant.
    const int sgn = ((p - q) * q + q * (q - 1) / 2) % 2 == 0 ? 1 : -1;
    return pseudo_wronskian(m) * Rational(Rational(sgn) / denom);
}

UPoly exceptional_hermite(const MayaDiagram& m, int k) { return normalized_pw(flip(m, k)); }

}  // namespace rext
