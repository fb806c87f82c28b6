#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algroup/groups.hpp"
#include "algroup/report.hpp"
#include "algroup/rng.hpp"
#include "algroup/sampling.hpp"

namespace algroup {

enum class GroupKind { D, T, StarD };

// Which of the three semidirect products we work over.  Elements are carried
// uniformly as triples: D embeds as (B, L, 1) and the star-fixed subgroup as
// (H, G, (G^*)^-1).
struct GroupDescriptor {
  GroupKind kind;
  SpecPtr spec;

  // Scalars acting on the shift subgroup: real for the star-fixed case
  // (self-adjoint shifts form a real vector space), the algebra's field
  // otherwise.
  Field shift_field() const;
  std::string label() const;
};

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b);

GroupDescriptor group_D(SpecPtr spec);
GroupDescriptor group_T(SpecPtr spec);
GroupDescriptor group_star_D(SpecPtr spec);  // requires a matrix form

TElement group_identity(const GroupDescriptor& grp);
TElement random_group_element(const GroupDescriptor& grp, Rng& rng);
// Whether the triple has the shape of a member (unit right part for D,
// star-fixed for the star case).
bool element_in_group(const GroupDescriptor& grp, const TElement& x,
                      double tol = kDefaultTol);

// Linear endomorphism of the shift subgroup in basis coordinates.  For a
// real shift field the matrix must be real (validated, then the imaginary
// dust is dropped).
class LinearEndo {
 public:
  LinearEndo(Mat m, Field field);
  const Mat& matrix() const { return m_; }
  Field field() const { return field_; }
  CVec apply(const CVec& coords) const { return m_ * coords; }

 private:
  Mat m_;
  Field field_;
};

// Restriction of conjugation-style action of g = (B, L, R) to the shift
// subgroup: b -> L b R^-1, independent of B.
LinearEndo ad_endo(const TElement& g, const GroupDescriptor& grp);

LinearEndo endo_identity(const GroupDescriptor& grp);

// Pointwise product of endomorphisms of the abelian shift subgroup is
// addition there, so the matrices add.
LinearEndo endo_smile(const LinearEndo& e, const LinearEndo& f);
LinearEndo endo_compose(const LinearEndo& e, const LinearEndo& f);

// (lambda e)(b) = e(lambda b); rejects scalars outside the shift field.
LinearEndo endo_scalar(Scalar lambda, const LinearEndo& e,
                       const GroupDescriptor& grp);

// Pointwise function on a group, represented as a composition tree over the
// leaves: identity map, trivial map (everything to 1), constant map, and
// conjugation g -> h g h^-1.
class GroupFn {
 public:
  static GroupFn identity(const GroupDescriptor& grp);
  static GroupFn trivial(const GroupDescriptor& grp);
  static GroupFn constant(const GroupDescriptor& grp, TElement value);
  static GroupFn conjugation(const GroupDescriptor& grp, TElement by);

  TElement operator()(const TElement& x) const;
  const GroupDescriptor& group() const { return grp_; }

  friend GroupFn fn_smile(const GroupFn& f, const GroupFn& g);
  friend GroupFn fn_compose(const GroupFn& f, const GroupFn& g);
  friend GroupFn fn_inverse_pointwise(const GroupFn& f);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  GroupFn(GroupDescriptor grp, NodePtr root);
  static TElement eval_node(const Node& n, const GroupDescriptor& grp,
                            const TElement& x);
  GroupDescriptor grp_;
  NodePtr root_;
};

// (f ~ g)(x) = f(x) g(x); operands must live on the same group.
GroupFn fn_smile(const GroupFn& f, const GroupFn& g);
GroupFn fn_compose(const GroupFn& f, const GroupFn& g);
// x -> f(x)^-1; the smile-inverse, f ~ inv(f) == trivial.
GroupFn fn_inverse_pointwise(const GroupFn& f);

// Random composition trees, at most `max_depth` operator levels deep.  Leaf
// constants and conjugators are drawn with balanced invertible parts so that
// evaluating a nested tree stays numerically well conditioned.
GroupFn random_fn_tree(const GroupDescriptor& grp, Rng& rng, int max_depth);
// Same, restricted to genuine endomorphisms (identity / trivial /
// conjugation leaves, composition nodes).
GroupFn random_endo_tree(const GroupDescriptor& grp, Rng& rng, int max_depth);

// Property suite for the pointwise-product structure: right distributivity,
// left distributivity over endomorphisms (with a non-endomorphism control),
// smile-inverses, the commuting-image rule on the shift subgroup, and the
// scalar-action identities.  Throws std::invalid_argument for trials < 1.
VerificationReport check_quasiring(const GroupDescriptor& grp, int trials,
                                   std::uint64_t seed, double tol);

// Fixed witnesses showing the two ring identities fail on the star-fixed
// subgroup (operator-norm gaps 2 and sqrt(2)), the modulus law that replaces
// scalar homogeneity there, and positive controls showing both identities
// hold in the one-sided case.
VerificationReport star_counterexamples(double tol,
                                        std::uint64_t seed = 0x5eed,
                                        int trials = 200);

struct ReconstructedAlgebra {
  int span_dim = 0;
  std::vector<Mat> basis;          // independent generator images
  bool closed = false;
  double closure_residual = 0.0;   // worst least-squares defect of products
  // Comparison against the target's left-regular images (one-sided groups
  // over a target of matching dimension only).
  bool compared = false;
  double target_embed_residual = 0.0;
  std::vector<Scalar> structure;   // recovered constants, index (i*N+j)*N+k
  double max_deviation = 0.0;
};

// Spans the conjugation-action images of the generators inside the
// endomorphisms of the shift subgroup, checks multiplicative closure, and
// (for the one-sided group) recovers structure constants in the matched
// basis and compares them with the target's.
ReconstructedAlgebra reconstruct(const GroupDescriptor& grp,
                                 const std::vector<TElement>& generators,
                                 const SpecPtr& target, double tol);

int span_dimension(const GroupDescriptor& grp,
                   const std::vector<TElement>& generators);

}  // namespace algroup
