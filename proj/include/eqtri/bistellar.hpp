#pragma once
// 3-sphere certification: Euler/homology pre-filter plus a deterministic
// bistellar-flip reduction toward the boundary of the 4-simplex.

#include "eqtri/complex.hpp"

namespace eqtri {

enum class SphereVerdict { Yes, No, Indeterminate };

const char* sphere_verdict_name(SphereVerdict v);

// Requires verify_closed_3manifold(X). `No` is returned only on a definite
// obstruction (Euler characteristic or GF(2) homology); an exhausted move
// budget yields Indeterminate, never a false negative.
SphereVerdict verify_3sphere(const Complex& X, long long budget = 100000);

// Dimension-directed sphere certificate used by the enumeration: dim 1 ->
// single cycle, dim 2 -> verify_2sphere, dim 3 -> verify_3sphere.
SphereVerdict certify_sphere(const Complex& X, long long budget = 100000);

}  // namespace eqtri
