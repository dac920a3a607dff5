#pragma once

#include <string>

#include "ecs/diff_op.hpp"
#include "ecs/exp_poly_fn.hpp"
#include "ecs/partition_maya.hpp"
#include "ecs/rational_fn.hpp"

namespace rext {

struct RationalExtension {
    MayaDiagram maya;
    RationalFn potential;     // U_M, including x^2 and the constant 2σ_M
    LinearDiffOp hamiltonian;  // T_M = -D^2 + U_M
    bool regular = false;     // Krein–Adler
    UPoly tau;                // Ĥ_M
};

RationalExtension build_extension(const MayaDiagram& m);

// U_M as "x^2 + c + A/H + B/H^2" with H the integer-primitive Ĥ_M and
// deg A, deg B < deg H. Just "x^2 + c" (or "x^2") when H is constant.
std::string potential_display(const RationalExtension& ext);

// ψ_{M,m} = exp(ε x^2/2) Ĥ_{f_m(M)} / Ĥ_M with ε = +1 for m ∈ M, -1 otherwise.
ExpPolyFn eigenfunction(const MayaDiagram& m, int k);

// A_{M,K}: monic, kernel spanned by ψ_{M,k}, k ∈ K.
LinearDiffOp intertwiner(const MayaDiagram& m, const IndexSet& k);

struct LadderOperator {
    LinearDiffOp op;
    MayaDiagram source;
    int shift = 0;
    IndexSet kernel_indices;  // (M+n) ⊖ M
};

LadderOperator ladder(const MayaDiagram& m, int n);

// Kernel made of bound states only.
bool is_annihilator(const LadderOperator& l);

// Π_{k∈K_q} (m - k).
Rational gamma(const MayaDiagram& m, int q, int k);

struct CompositionResult {
    bool ok = false;
    std::string difference;  // first differing coefficient, empty on success
    LinearDiffOp lhs, rhs;
};

// A_{M2,K2} ∘ A_{M,K1} against A_{M,K1⊖K2} ∘ p(T_M) with M2 = f_{K1}(M) and
// p(T) = Π_{k∈K1∩K2} (2k+1 - T).
CompositionResult composition_check(const MayaDiagram& m, const IndexSet& k1, const IndexSet& k2);

}  // namespace rext
