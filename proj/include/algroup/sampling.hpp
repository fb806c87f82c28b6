#pragma once

#include "algroup/algebra.hpp"
#include "algroup/groups.hpp"
#include "algroup/rng.hpp"

namespace algroup {

// Coordinates uniform in the unit box of the spec's field.
AlgebraElement random_algebra_element(const SpecPtr& spec, Rng& rng);

// Self-adjoint element (requires a matrix form); coordinates are drawn real
// in a basis of self-adjoint matrices, so for the Pauli spec this is a
// random Hermitian matrix.
AlgebraElement random_self_adjoint(const SpecPtr& spec, Rng& rng);

// Rejection-samples until the element is comfortably invertible so that
// downstream inverses stay well conditioned.
AlgebraElement random_invertible(const SpecPtr& spec, Rng& rng);

// Invertible element whose matrix form has all singular values in
// [0.8, 1.25].  Long products of such factors stay well conditioned, which
// keeps checks that multiply many samples (nested function trees) within
// floating-point tolerance.  Falls back to random_invertible for specs whose
// matrix basis does not span the full matrix space.
AlgebraElement random_balanced_invertible(const SpecPtr& spec, Rng& rng);

// Random 2x2 complex matrix normalized to determinant exactly 1.
Mat random_sl2(Rng& rng);

DElement random_d_element(const SpecPtr& spec, Rng& rng);
TElement random_t_element(const SpecPtr& spec, Rng& rng);
StarDElement random_star_d_element(const SpecPtr& spec, Rng& rng);

}  // namespace algroup
