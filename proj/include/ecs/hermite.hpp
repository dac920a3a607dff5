#pragma once

#include "ecs/exp_poly_fn.hpp"
#include "ecs/partition_maya.hpp"
#include "ecs/upoly.hpp"

namespace rext {

enum class HermiteKind { standard, conjugate };

// H_n via H_{n+1} = 2x H_n - 2n H_{n-1}; the conjugate family
// H~_n = i^{-n} H_n(ix) obeys H~_{n+1} = 2x H~_n + 2n H~_{n-1}.
UPoly hermite(int n, HermiteKind kind = HermiteKind::standard);

// Quasi-rational eigenfunctions of the oscillator:
// exp(-x^2/2) H_n for n >= 0, exp(x^2/2) H~_{-n-1} for n < 0.
ExpPolyFn psi(int n);

// Hermite pseudo-Wronskian H_M from the mixed determinant of conjugate
// Hermite rows (negative indices first) and derivative rows of H_k.
UPoly pseudo_wronskian(const MayaDiagram& m);

// The same polynomial as exp(σ_M x^2/2) Wr[ψ_{k_1}, ..., ψ_{k_p}].
UPoly pseudo_wronskian_via_wronskian(const MayaDiagram& m);

// Translation-invariant normalization Ĥ_M.
UPoly normalized_pw(const MayaDiagram& m);

// Ĥ_{(M,m)} with (M,m) = f_m(M).
UPoly exceptional_hermite(const MayaDiagram& m, int k);

}  // namespace rext
