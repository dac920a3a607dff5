#pragma once

#include <map>
#include <vector>

#include "ecs/multipoly.hpp"
#include "ecs/partition_maya.hpp"

namespace rext {

// Point t = (t_1, ..., t_n, 0, 0, ...) with trailing zeros trimmed.
class TVector {
public:
    TVector() = default;
    explicit TVector(std::vector<Rational> entries);
    const std::vector<Rational>& entries() const { return entries_; }

    // P(t), all t_k beyond the stored entries set to zero. P must involve t's only.
    Rational evaluate(const MultiPoly& p) const;

private:
    std::vector<Rational> entries_;
};

// Ordinary Bell polynomial B_k(t_1..t_k): coefficient of z^k in
// exp(sum t_j z^j). Zero for k < 0. Cached.
const MultiPoly& bell(int k);

// det(B_{m_i + j}), m_i = λ_i - i.
MultiPoly schur(const Partition& lambda);

// Wr_{t_1}[B_{m_ℓ+ℓ}, ..., B_{m_1+ℓ}].
MultiPoly schur_wronskian(const Partition& lambda);

// X_{λ_1} ... X_{λ_ℓ} 1.
MultiPoly schur_via_raising(const Partition& lambda);

// P(t_1 - z^{-1}, t_2 - z^{-2}/2, ..., t_n - z^{-n}/n).
MultiPoly miwa_shift(const MultiPoly& p);

// Coefficient of z^m in V(t,z) P.
MultiPoly vertex_X(int m, const MultiPoly& p);

// X_m P for every m in [m_lo, m_hi], sharing one Miwa shift.
std::map<int, MultiPoly> vertex_X_range(int m_lo, int m_hi, const MultiPoly& p);

struct VertexTerm {
    int m;
    int sign;
    Partition partition;
};

// Terms (-1)^{#{k∈M_λ : k>m}} S_{m▷λ} z^m of V S_λ for m ∉ M_λ in [m_lo, m_hi].
std::vector<VertexTerm> vertex_expansion(const Partition& lambda, int m_lo, int m_hi);

// P(x, -1/4, 0, 0, ...), as a polynomial in x.
MultiPoly hermite_specialization(const MultiPoly& p);

// P(x - z^{-1}, -1/4 - z^{-2}/2, -z^{-3}/3, ...), Laurent in z.
MultiPoly shifted_hermite_specialization(const MultiPoly& p);

}  // namespace rext
