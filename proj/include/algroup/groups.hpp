#pragma once

#include "algroup/algebra.hpp"

namespace algroup {

// Element of the group A+ x| A^x of invertible affine maps a -> L a + B
// over an algebra A.  Composition follows from applying one map after the
// other: (B1, L1)(B2, L2) = (L1 B2 + B1, L1 L2).
class DElement {
 public:
  // Requires L invertible.
  DElement(AlgebraElement shift, AlgebraElement left);

  const AlgebraElement& shift() const { return shift_; }
  const AlgebraElement& left() const { return left_; }
  const SpecPtr& spec() const { return shift_.spec(); }

 private:
  AlgebraElement shift_;
  AlgebraElement left_;
};

// Element of the two-sided extension A+ x| (A^x x A^x), acting as
// a -> L a R^-1 + B.  The inverse twist on the right factor makes
// r -> (0, 1, r) a homomorphism rather than an antihomomorphism.
class TElement {
 public:
  // Requires L and R invertible.
  TElement(AlgebraElement shift, AlgebraElement left, AlgebraElement right);

  const AlgebraElement& shift() const { return shift_; }
  const AlgebraElement& left() const { return left_; }
  const AlgebraElement& right() const { return right_; }
  const SpecPtr& spec() const { return shift_.spec(); }

 private:
  AlgebraElement shift_;
  AlgebraElement left_;
  AlgebraElement right_;
};

// Star-fixed pair (H, G) with H = H^*, shorthand for the triple
// (H, G, (G^*)^-1).  Acts on A as a -> G a G^* + H.
class StarDElement {
 public:
  // Requires H = H^* (within tol) and G invertible.
  StarDElement(AlgebraElement shift, AlgebraElement left,
               double tol = kDefaultTol);

  const AlgebraElement& shift() const { return shift_; }
  const AlgebraElement& left() const { return left_; }
  const SpecPtr& spec() const { return shift_.spec(); }

 private:
  AlgebraElement shift_;
  AlgebraElement left_;
};

DElement d_identity(const SpecPtr& spec);
DElement compose_D(const DElement& x, const DElement& y);
DElement invert_D(const DElement& x);
AlgebraElement apply_D(const DElement& x, const AlgebraElement& a);

// Block 2n x 2n matrix [[L, B], [0, 1]] over the algebra's matrix form;
// multiplicative and faithful.
Mat matrix_rep_D(const DElement& x);

// Restriction of conjugation by (0, l) to the shift subgroup: b -> l * b.
AlgebraElement adjoint_D(const AlgebraElement& l, const AlgebraElement& b);

// (dim+1) x (dim+1) affine representation [[lhat, b], [0, 1]] in basis
// coordinates; works for any spec, matrix form or not.
Mat affine_rep_D(const DElement& x);

TElement t_identity(const SpecPtr& spec);
TElement compose_T(const TElement& x, const TElement& y);
TElement invert_T(const TElement& x);
AlgebraElement apply_T(const TElement& x, const AlgebraElement& a);

// Block 2n x 2n matrix [[L, B R], [0, R]]; multiplicative and faithful.
Mat matrix_rep_T(const TElement& x);

// (H, L, R) -> (H^*, (R^*)^-1, (L^*)^-1); an involutive automorphism.
TElement star_T(const TElement& x);

// Subgroup embeddings.
TElement embed_D(const DElement& x);             // (B, L, 1)
TElement shift_operator(const AlgebraElement& b);  // (b, 1, 1)
TElement left_operator(const AlgebraElement& l);   // (0, l, 1)

enum class RightTwist {
  Inverse,  // r -> (0, 1, r); action a -> a r^-1
  Star,     // r -> (0, 1, (r^*)^-1); action a -> a r^*
};
TElement right_operator(const AlgebraElement& r,
                        RightTwist twist = RightTwist::Inverse);

StarDElement make_star_D(const AlgebraElement& h, const AlgebraElement& g,
                         double tol = kDefaultTol);
TElement embed_star_D(const StarDElement& x);

// Whether x and y agree modulo the center: equal shifts and
// (L_y, R_y) = (c L_x, c R_x) for a single nonzero scalar c, recovered as
// the unit coefficient of L_y L_x^-1 (equivalently tr(L_y L_x^-1)/n on a
// matrix basis).
bool center_equiv(const TElement& x, const TElement& y,
                  double tol = kDefaultTol);

double residual(const DElement& x, const DElement& y);
double residual(const TElement& x, const TElement& y);

}  // namespace algroup
