#include "algroup/endo.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "algroup/jsonio.hpp"

namespace algroup {

namespace {

Mat vectorize(const Mat& m) {
  Mat v(m.size(), 1);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(p++, 0) = m(i, j);
  }
  return v;
}

std::string element_witness(const TElement& x) {
  return "{\"B\":" + json_coords(x.shift().coords()) +
         ",\"L\":" + json_coords(x.left().coords()) +
         ",\"R\":" + json_coords(x.right().coords()) + "}";
}

// Group elements fed into function trees.  Nested trees multiply many sampled
// factors, so the invertible parts come from the balanced sampler; otherwise
// the accumulated conditioning of products like f(x) f(x)^-1 can push pure
// group identities past a 1e-9 check tolerance.
TElement balanced_group_element(const GroupDescriptor& grp, Rng& rng) {
  switch (grp.kind) {
    case GroupKind::D:
      return embed_D(DElement(random_algebra_element(grp.spec, rng),
                              random_balanced_invertible(grp.spec, rng)));
    case GroupKind::T: {
      AlgebraElement shift = random_algebra_element(grp.spec, rng);
      AlgebraElement left = random_balanced_invertible(grp.spec, rng);
      AlgebraElement right = random_balanced_invertible(grp.spec, rng);
      return TElement(std::move(shift), std::move(left), std::move(right));
    }
    case GroupKind::StarD:
      return embed_star_D(
          StarDElement(random_self_adjoint(grp.spec, rng),
                       random_balanced_invertible(grp.spec, rng)));
  }
  throw std::logic_error("balanced_group_element: bad kind");
}

}  // namespace

Field GroupDescriptor::shift_field() const {
  return kind == GroupKind::StarD ? Field::Real : spec->field();
}

std::string GroupDescriptor::label() const {
  switch (kind) {
    case GroupKind::D: return "D";
    case GroupKind::T: return "T";
    case GroupKind::StarD: return "starD";
  }
  return "?";
}

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
  return a.kind == b.kind && spec_equal(*a.spec, *b.spec);
}

GroupDescriptor group_D(SpecPtr spec) {
  return GroupDescriptor{GroupKind::D, std::move(spec)};
}

GroupDescriptor group_T(SpecPtr spec) {
  return GroupDescriptor{GroupKind::T, std::move(spec)};
}

GroupDescriptor group_star_D(SpecPtr spec) {
  if (!spec->has_matrix_form()) {
    throw std::invalid_argument("group_star_D: spec needs a matrix form for the involution");
  }
  return GroupDescriptor{GroupKind::StarD, std::move(spec)};
}

TElement group_identity(const GroupDescriptor& grp) {
  return t_identity(grp.spec);
}

TElement random_group_element(const GroupDescriptor& grp, Rng& rng) {
  switch (grp.kind) {
    case GroupKind::D: return embed_D(random_d_element(grp.spec, rng));
    case GroupKind::T: return random_t_element(grp.spec, rng);
    case GroupKind::StarD:
      return embed_star_D(random_star_d_element(grp.spec, rng));
  }
  throw std::logic_error("random_group_element: bad kind");
}

bool element_in_group(const GroupDescriptor& grp, const TElement& x,
                      double tol) {
  if (!spec_equal(*grp.spec, *x.spec())) return false;
  switch (grp.kind) {
    case GroupKind::T:
      return true;
    case GroupKind::D:
      return residual(x.right(), unit_element(x.spec())) <= tol;
    case GroupKind::StarD:
      return residual(x, star_T(x)) <= tol;
  }
  return false;
}

LinearEndo::LinearEndo(Mat m, Field field) : m_(std::move(m)), field_(field) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("LinearEndo: matrix must be square");
  }
  require_finite(m_, "LinearEndo matrix");
  if (field_ == Field::Real) {
    const double imag_max =
        m_.size() == 0 ? 0.0 : m_.imag().cwiseAbs().maxCoeff();
    if (imag_max > 1e-9 * (1.0 + max_abs(m_))) {
      throw std::invalid_argument("LinearEndo: matrix must be real for a real shift field");
    }
    m_ = m_.real().cast<Scalar>().eval();
  }
}

LinearEndo ad_endo(const TElement& g, const GroupDescriptor& grp) {
  if (!element_in_group(grp, g)) {
    throw std::invalid_argument("ad_endo: element does not belong to " + grp.label());
  }
  // Conjugating a shift (b, 1, 1) by (B, L, R) gives (L b R^-1, 1, 1); the
  // shift part B drops out.
  Mat m = grp.spec->left_mul_matrix(g.left().coords()) *
          grp.spec->right_mul_matrix(invert(g.right()).coords());
  return LinearEndo(std::move(m), grp.shift_field());
}

LinearEndo endo_identity(const GroupDescriptor& grp) {
  return LinearEndo(Mat::Identity(grp.spec->dim(), grp.spec->dim()),
                    grp.shift_field());
}

LinearEndo endo_smile(const LinearEndo& e, const LinearEndo& f) {
  if (e.matrix().rows() != f.matrix().rows() || e.field() != f.field()) {
    throw std::invalid_argument("endo_smile: operand mismatch");
  }
  return LinearEndo(e.matrix() + f.matrix(), e.field());
}

LinearEndo endo_compose(const LinearEndo& e, const LinearEndo& f) {
  if (e.matrix().rows() != f.matrix().rows() || e.field() != f.field()) {
    throw std::invalid_argument("endo_compose: operand mismatch");
  }
  return LinearEndo(e.matrix() * f.matrix(), e.field());
}

LinearEndo endo_scalar(Scalar lambda, const LinearEndo& e,
                       const GroupDescriptor& grp) {
  if (!is_finite(lambda)) {
    throw std::invalid_argument("endo_scalar: scalar must be finite");
  }
  if (grp.shift_field() == Field::Real && lambda.imag() != 0.0) {
    throw std::invalid_argument("endo_scalar: complex scalar on a real shift subgroup");
  }
  // (lambda e)(b) = e(lambda b) = lambda e(b) by linearity.
  return LinearEndo(lambda * e.matrix(), e.field());
}

// ---------------------------------------------------------------------------
// GroupFn

struct GroupFn::Node {
  enum class Kind { Identity, Trivial, Const, Conjugation, Compose, Smile, Inverse };
  Kind kind;
  std::optional<TElement> value;  // Const payload or conjugator
  NodePtr a;
  NodePtr b;
};

GroupFn::GroupFn(GroupDescriptor grp, NodePtr root)
    : grp_(std::move(grp)), root_(std::move(root)) {}

GroupFn GroupFn::identity(const GroupDescriptor& grp) {
  return GroupFn(grp, std::make_shared<Node>(Node{Node::Kind::Identity, {}, nullptr, nullptr}));
}

GroupFn GroupFn::trivial(const GroupDescriptor& grp) {
  return GroupFn(grp, std::make_shared<Node>(Node{Node::Kind::Trivial, {}, nullptr, nullptr}));
}

GroupFn GroupFn::constant(const GroupDescriptor& grp, TElement value) {
  if (!element_in_group(grp, value)) {
    throw std::invalid_argument("GroupFn::constant: value outside the group");
  }
  return GroupFn(grp, std::make_shared<Node>(Node{Node::Kind::Const, std::move(value), nullptr, nullptr}));
}

GroupFn GroupFn::conjugation(const GroupDescriptor& grp, TElement by) {
  if (!element_in_group(grp, by)) {
    throw std::invalid_argument("GroupFn::conjugation: conjugator outside the group");
  }
  return GroupFn(grp, std::make_shared<Node>(Node{Node::Kind::Conjugation, std::move(by), nullptr, nullptr}));
}

TElement GroupFn::operator()(const TElement& x) const {
  if (!spec_equal(*grp_.spec, *x.spec())) {
    throw std::invalid_argument("GroupFn: argument spec mismatch");
  }
  return eval_node(*root_, grp_, x);
}

TElement GroupFn::eval_node(const Node& n, const GroupDescriptor& grp,
                            const TElement& x) {
  switch (n.kind) {
    case Node::Kind::Identity: return x;
    case Node::Kind::Trivial: return group_identity(grp);
    case Node::Kind::Const: return *n.value;
    case Node::Kind::Conjugation:
      return compose_T(compose_T(*n.value, x), invert_T(*n.value));
    case Node::Kind::Compose:
      return eval_node(*n.a, grp, eval_node(*n.b, grp, x));
    case Node::Kind::Smile:
      return compose_T(eval_node(*n.a, grp, x), eval_node(*n.b, grp, x));
    case Node::Kind::Inverse: return invert_T(eval_node(*n.a, grp, x));
  }
  throw std::logic_error("GroupFn: bad node kind");
}

namespace {

void require_same_group(const GroupFn& f, const GroupFn& g, const char* op) {
  if (!(f.group() == g.group())) {
    throw std::invalid_argument(std::string(op) + ": group mismatch");
  }
}

}  // namespace

GroupFn fn_smile(const GroupFn& f, const GroupFn& g) {
  require_same_group(f, g, "fn_smile");
  return GroupFn(f.grp_, std::make_shared<GroupFn::Node>(GroupFn::Node{
                             GroupFn::Node::Kind::Smile, {}, f.root_, g.root_}));
}

GroupFn fn_compose(const GroupFn& f, const GroupFn& g) {
  require_same_group(f, g, "fn_compose");
  return GroupFn(f.grp_, std::make_shared<GroupFn::Node>(GroupFn::Node{
                             GroupFn::Node::Kind::Compose, {}, f.root_, g.root_}));
}

GroupFn fn_inverse_pointwise(const GroupFn& f) {
  return GroupFn(f.grp_, std::make_shared<GroupFn::Node>(GroupFn::Node{
                             GroupFn::Node::Kind::Inverse, {}, f.root_, nullptr}));
}

GroupFn random_fn_tree(const GroupDescriptor& grp, Rng& rng, int max_depth) {
  const int pick = rng.uniform_int(0, max_depth > 0 ? 6 : 3);
  switch (pick) {
    case 0: return GroupFn::identity(grp);
    case 1: return GroupFn::trivial(grp);
    case 2: return GroupFn::constant(grp, balanced_group_element(grp, rng));
    case 3: return GroupFn::conjugation(grp, balanced_group_element(grp, rng));
    case 4: {
      GroupFn a = random_fn_tree(grp, rng, max_depth - 1);
      GroupFn b = random_fn_tree(grp, rng, max_depth - 1);
      return fn_compose(a, b);
    }
    case 5: {
      GroupFn a = random_fn_tree(grp, rng, max_depth - 1);
      GroupFn b = random_fn_tree(grp, rng, max_depth - 1);
      return fn_smile(a, b);
    }
    default:
      return fn_inverse_pointwise(random_fn_tree(grp, rng, max_depth - 1));
  }
}

GroupFn random_endo_tree(const GroupDescriptor& grp, Rng& rng, int max_depth) {
  const int pick = rng.uniform_int(0, max_depth > 0 ? 3 : 2);
  switch (pick) {
    case 0: return GroupFn::identity(grp);
    case 1: return GroupFn::trivial(grp);
    case 2: return GroupFn::conjugation(grp, balanced_group_element(grp, rng));
    default: {
      GroupFn a = random_endo_tree(grp, rng, max_depth - 1);
      GroupFn b = random_endo_tree(grp, rng, max_depth - 1);
      return fn_compose(a, b);
    }
  }
}

// ---------------------------------------------------------------------------
// Property suites

VerificationReport check_quasiring(const GroupDescriptor& grp, int trials,
                                   std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("check_quasiring: trials must be >= 1");
  constexpr int kPointsPerTrial = 5;
  constexpr int kTreeDepth = 3;

  VerificationReport report;
  report.suite = "quasiring[" + grp.label() + "]";
  report.seed = seed;
  report.trials = trials;
  report.tol = tol;
  Rng root(seed);

  {
    // (f ~ g) o h == (f o h) ~ (g o h) for arbitrary pointwise functions.
    Rng rng = root.fork(1);
    CheckBuilder check("rdistr", tol);
    for (int t = 0; t < trials; ++t) {
      GroupFn f = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn g = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn h = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn lhs = fn_compose(fn_smile(f, g), h);
      GroupFn rhs = fn_smile(fn_compose(f, h), fn_compose(g, h));
      for (int p = 0; p < kPointsPerTrial; ++p) {
        TElement x = balanced_group_element(grp, rng);
        check.sample(residual(lhs(x), rhs(x)), element_witness(x));
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    // e o (f ~ g) == (e o f) ~ (e o g) when e is an endomorphism.
    Rng rng = root.fork(2);
    CheckBuilder check("ldistr_endomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      GroupFn e = random_endo_tree(grp, rng, 2);
      GroupFn f = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn g = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn lhs = fn_compose(e, fn_smile(f, g));
      GroupFn rhs = fn_smile(fn_compose(e, f), fn_compose(e, g));
      for (int p = 0; p < kPointsPerTrial; ++p) {
        TElement x = balanced_group_element(grp, rng);
        check.sample(residual(lhs(x), rhs(x)), element_witness(x));
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    // f ~ (pointwise inverse of f) is the trivial map.
    Rng rng = root.fork(3);
    CheckBuilder check("smile_inverse_trivial", tol);
    const TElement one = group_identity(grp);
    for (int t = 0; t < trials; ++t) {
      GroupFn f = random_fn_tree(grp, rng, kTreeDepth);
      GroupFn zero = fn_smile(f, fn_inverse_pointwise(f));
      for (int p = 0; p < kPointsPerTrial; ++p) {
        TElement x = balanced_group_element(grp, rng);
        check.sample(residual(zero(x), one), element_witness(x));
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    // On the abelian shift subgroup the pointwise product of two
    // conjugation endomorphisms is again an endomorphism and commutes:
    // group-level products of shifts match the summed matrices.
    Rng rng = root.fork(4);
    CheckBuilder check("commuting_images_rule", tol);
    for (int t = 0; t < trials; ++t) {
      LinearEndo e1 = ad_endo(balanced_group_element(grp, rng), grp);
      LinearEndo e2 = ad_endo(balanced_group_element(grp, rng), grp);
      LinearEndo sum = endo_smile(e1, e2);
      LinearEndo sum_rev = endo_smile(e2, e1);
      for (int p = 0; p < kPointsPerTrial; ++p) {
        AlgebraElement b =
            grp.kind == GroupKind::StarD
                ? random_self_adjoint(grp.spec, rng)
                : random_algebra_element(grp.spec, rng);
        TElement lhs = compose_T(shift_operator(AlgebraElement(grp.spec, e1.apply(b.coords()))),
                                 shift_operator(AlgebraElement(grp.spec, e2.apply(b.coords()))));
        TElement rev = compose_T(shift_operator(AlgebraElement(grp.spec, e2.apply(b.coords()))),
                                 shift_operator(AlgebraElement(grp.spec, e1.apply(b.coords()))));
        CVec expect = sum.apply(b.coords());
        double err = residual(Mat(lhs.shift().coords()), Mat(expect));
        err = std::max(err, residual(Mat(rev.shift().coords()),
                                     Mat(sum_rev.apply(b.coords()))));
        err = std::max(err, residual(lhs, rev));
        check.sample(err, "{\"b\":" + json_coords(b.coords()) + "}");
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    // (alpha f) ~ (beta f) == (alpha + beta) f on the shift subgroup.
    Rng rng = root.fork(5);
    CheckBuilder check("scalar_sum_law", tol);
    for (int t = 0; t < trials; ++t) {
      LinearEndo f = ad_endo(balanced_group_element(grp, rng), grp);
      Scalar alpha;
      Scalar beta;
      if (grp.shift_field() == Field::Real) {
        alpha = Scalar(rng.uniform(-2.0, 2.0), 0.0);
        beta = Scalar(rng.uniform(-2.0, 2.0), 0.0);
      } else {
        alpha = rng.complex_uniform(2.0);
        beta = rng.complex_uniform(2.0);
      }
      LinearEndo lhs = endo_smile(endo_scalar(alpha, f, grp),
                                  endo_scalar(beta, f, grp));
      LinearEndo rhs = endo_scalar(alpha + beta, f, grp);
      for (int p = 0; p < kPointsPerTrial; ++p) {
        AlgebraElement b =
            grp.kind == GroupKind::StarD
                ? random_self_adjoint(grp.spec, rng)
                : random_algebra_element(grp.spec, rng);
        // Group-level pointwise product of the two scaled maps...
        TElement prod = compose_T(
            shift_operator(AlgebraElement(grp.spec, f.apply(alpha * b.coords()))),
            shift_operator(AlgebraElement(grp.spec, f.apply(beta * b.coords()))));
        // ...must agree with both matrix-level routes.
        double err = residual(Mat(prod.shift().coords()), Mat(lhs.apply(b.coords())));
        err = std::max(err, residual(Mat(prod.shift().coords()),
                                     Mat(rhs.apply(b.coords()))));
        check.sample(err, "{\"b\":" + json_coords(b.coords()) + "}");
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    // (alpha f) ~ (alpha g) == alpha (f ~ g).
    Rng rng = root.fork(6);
    CheckBuilder check("scalar_distributes_over_smile", tol);
    for (int t = 0; t < trials; ++t) {
      LinearEndo f = ad_endo(balanced_group_element(grp, rng), grp);
      LinearEndo g = ad_endo(balanced_group_element(grp, rng), grp);
      Scalar alpha = grp.shift_field() == Field::Real
                         ? Scalar(rng.uniform(-2.0, 2.0), 0.0)
                         : rng.complex_uniform(2.0);
      LinearEndo lhs = endo_smile(endo_scalar(alpha, f, grp),
                                  endo_scalar(alpha, g, grp));
      LinearEndo rhs = endo_scalar(alpha, endo_smile(f, g), grp);
      check.sample(residual(lhs.matrix(), rhs.matrix()), "{}");
    }
    report.checks.push_back(check.finish());
  }

  {
    // Control: left distributivity must fail once e is not an endomorphism
    // (a generic constant map).  The check passes when a clear gap shows up.
    Rng rng = root.fork(7);
    CheckBuilder check("ldistr_requires_endomorphism", tol);
    constexpr double kGapFloor = 1e-3;
    for (int t = 0; t < trials; ++t) {
      TElement c = balanced_group_element(grp, rng);
      GroupFn e = GroupFn::constant(grp, c);
      GroupFn f = GroupFn::identity(grp);
      GroupFn g = GroupFn::identity(grp);
      GroupFn lhs = fn_compose(e, fn_smile(f, g));
      GroupFn rhs = fn_smile(fn_compose(e, f), fn_compose(e, g));
      double gap = 0.0;
      for (int p = 0; p < kPointsPerTrial; ++p) {
        TElement x = balanced_group_element(grp, rng);
        gap = std::max(gap, residual(lhs(x), rhs(x)));
      }
      // lhs is c, rhs is c*c; coincidence would need c*c == c, i.e. c == 1.
      check.sample(gap >= kGapFloor ? 0.0 : kGapFloor - gap,
                   element_witness(c));
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport star_counterexamples(double tol, std::uint64_t seed,
                                        int trials) {
  if (trials < 1) throw std::invalid_argument("star_counterexamples: trials must be >= 1");
  SpecPtr spec = pauli_spec();
  GroupDescriptor star_grp = group_star_D(spec);
  const int n = spec->dim();

  VerificationReport report;
  report.suite = "star-counterexamples";
  report.seed = seed;
  report.trials = trials;
  report.tol = tol;
  Rng root(seed);

  const AlgebraElement one = unit_element(spec);
  const AlgebraElement two = alg_scalar_mul(Scalar(2.0, 0.0), one);

  {
    // Additivity fails on the star-fixed subgroup: the pointwise square of
    // the unit conjugation doubles shifts, while the conjugation by 2*1
    // quadruples them.  The operator gap is exactly 2.
    LinearEndo unit_conj =
        ad_endo(embed_star_D(make_star_D(zero_element(spec), one)), star_grp);
    Mat smile_of_units = endo_smile(unit_conj, unit_conj).matrix();
    Mat image_of_two =
        ad_endo(embed_star_D(make_star_D(zero_element(spec), two)), star_grp).matrix();
    const double gap = operator_norm(smile_of_units - image_of_two);
    CheckBuilder check("two_sided_additivity_gap", tol);
    check.sample(std::abs(gap - 2.0),
                 "{\"gap\":" + json_double(gap) + "}");
    report.checks.push_back(check.finish());
  }

  {
    // Scalar homogeneity fails there too: scaling the conjugator by i leaves
    // its action unchanged, so against i*id the operator gap is |i - 1|.
    Mat scaled_expectation = Scalar(0.0, 1.0) * Mat::Identity(n, n);
    AlgebraElement i_unit = alg_scalar_mul(Scalar(0.0, 1.0), one);
    Mat actual =
        ad_endo(embed_star_D(make_star_D(zero_element(spec), i_unit)), star_grp).matrix();
    const double gap = operator_norm(scaled_expectation - actual);
    CheckBuilder check("two_sided_homogeneity_gap", tol);
    check.sample(std::abs(gap - std::sqrt(2.0)),
                 "{\"gap\":" + json_double(gap) + "}");
    report.checks.push_back(check.finish());
  }

  {
    // What scaling the conjugator does do on the star-fixed subgroup:
    // scaling by mu acts as |mu|^2.
    Rng rng = root.fork(1);
    CheckBuilder check("conjugator_scaling_is_modulus_squared", tol);
    for (int t = 0; t < trials; ++t) {
      AlgebraElement l = random_invertible(spec, rng);
      Scalar mu = rng.complex_uniform(2.0);
      if (std::abs(mu) < 0.3) mu += Scalar(1.0, 0.0);
      Mat scaled = ad_endo(embed_star_D(make_star_D(zero_element(spec),
                                                    alg_scalar_mul(mu, l))),
                           star_grp)
                       .matrix();
      Mat base = ad_endo(embed_star_D(make_star_D(zero_element(spec), l)),
                         star_grp)
                     .matrix();
      check.sample(residual(scaled, Mat(std::norm(mu) * base)),
                   "{\"mu\":" + json_scalar(mu) + "}");
    }
    report.checks.push_back(check.finish());
  }

  {
    // Positive control: in the one-sided group the conjugation action is
    // scalar-homogeneous in the conjugator.
    Rng rng = root.fork(2);
    CheckBuilder check("one_sided_homogeneity_holds", tol);
    for (int t = 0; t < trials; ++t) {
      AlgebraElement l = random_invertible(spec, rng);
      Scalar lambda = rng.complex_uniform(2.0);
      if (std::abs(lambda) < 0.3) lambda += Scalar(1.0, 0.0);
      AlgebraElement b = random_algebra_element(spec, rng);
      AlgebraElement lhs = adjoint_D(alg_scalar_mul(lambda, l), b);
      AlgebraElement rhs = alg_scalar_mul(lambda, adjoint_D(l, b));
      check.sample(residual(lhs, rhs), "{\"b\":" + json_coords(b.coords()) + "}");
    }
    report.checks.push_back(check.finish());
  }

  {
    // Positive control: and additive in the conjugator.
    Rng rng = root.fork(3);
    CheckBuilder check("one_sided_additivity_holds", tol);
    for (int t = 0; t < trials; ++t) {
      AlgebraElement l1 = random_invertible(spec, rng);
      AlgebraElement l2 = random_invertible(spec, rng);
      if (!is_invertible(l1 + l2)) continue;
      AlgebraElement b = random_algebra_element(spec, rng);
      AlgebraElement lhs = adjoint_D(l1 + l2, b);
      AlgebraElement rhs = adjoint_D(l1, b) + adjoint_D(l2, b);
      check.sample(residual(lhs, rhs), "{\"b\":" + json_coords(b.coords()) + "}");
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

// ---------------------------------------------------------------------------
// Reconstruction

ReconstructedAlgebra reconstruct(const GroupDescriptor& grp,
                                 const std::vector<TElement>& generators,
                                 const SpecPtr& target, double tol) {
  if (generators.empty()) {
    throw std::invalid_argument("reconstruct: at least one generator is required");
  }
  const int dim = grp.spec->dim();
  const Eigen::Index vec_len = static_cast<Eigen::Index>(dim) * dim;

  std::vector<Mat> images;
  images.reserve(generators.size());
  for (const TElement& g : generators) {
    images.push_back(ad_endo(g, grp).matrix());
  }

  Mat all(vec_len, static_cast<Eigen::Index>(images.size()));
  for (std::size_t k = 0; k < images.size(); ++k) {
    all.col(static_cast<Eigen::Index>(k)) = vectorize(images[k]).col(0);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(all);
  qr.setThreshold(kSingularTol);
  const int rank = static_cast<int>(qr.rank());

  ReconstructedAlgebra out;
  out.span_dim = rank;
  const auto& perm = qr.colsPermutation().indices();
  for (int k = 0; k < rank; ++k) {
    out.basis.push_back(images[static_cast<std::size_t>(perm(k))]);
  }

  Mat basis_cols(vec_len, rank);
  for (int k = 0; k < rank; ++k) {
    basis_cols.col(k) = vectorize(out.basis[static_cast<std::size_t>(k)]).col(0);
  }
  Eigen::ColPivHouseholderQR<Mat> basis_qr(basis_cols);

  auto span_defect = [&](const Mat& m) {
    Mat rhs = vectorize(m);
    Mat x = basis_qr.solve(rhs);
    return max_abs(Mat(basis_cols * x - rhs)) / (1.0 + max_abs(m));
  };

  out.closure_residual = 0.0;
  for (const Mat& a : out.basis) {
    for (const Mat& b : out.basis) {
      out.closure_residual = std::max(out.closure_residual, span_defect(a * b));
    }
  }
  out.closed = out.closure_residual <= tol;

  // Structure-constant recovery against the target's left-regular images;
  // meaningful for the one-sided group over a same-dimension target.
  if (grp.kind == GroupKind::D && target && target->dim() == dim) {
    out.compared = true;
    std::vector<Mat> canonical;
    canonical.reserve(static_cast<std::size_t>(dim));
    Mat canon_cols(vec_len, dim);
    for (int i = 0; i < dim; ++i) {
      CVec e = CVec::Zero(dim);
      e(i) = Scalar(1.0, 0.0);
      canonical.push_back(grp.spec->left_mul_matrix(e));
      canon_cols.col(i) = vectorize(canonical.back()).col(0);
      out.target_embed_residual =
          std::max(out.target_embed_residual, span_defect(canonical.back()));
    }
    Eigen::ColPivHouseholderQR<Mat> canon_qr(canon_cols);
    out.structure.assign(static_cast<std::size_t>(dim) * dim * dim,
                         Scalar(0.0, 0.0));
    out.max_deviation = 0.0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        Mat prod = canonical[static_cast<std::size_t>(i)] *
                   canonical[static_cast<std::size_t>(j)];
        Mat d = canon_qr.solve(vectorize(prod));
        for (int k = 0; k < dim; ++k) {
          Scalar recovered = d(k, 0);
          out.structure[static_cast<std::size_t>((i * dim + j) * dim + k)] =
              recovered;
          out.max_deviation =
              std::max(out.max_deviation, std::abs(recovered - target->c(i, j, k)));
        }
      }
    }
  }

  return out;
}

int span_dimension(const GroupDescriptor& grp,
                   const std::vector<TElement>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("span_dimension: at least one generator is required");
  }
  const int dim = grp.spec->dim();
  Mat all(static_cast<Eigen::Index>(dim) * dim,
          static_cast<Eigen::Index>(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    all.col(static_cast<Eigen::Index>(k)) =
        vectorize(ad_endo(generators[k], grp).matrix()).col(0);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(all);
  qr.setThreshold(kSingularTol);
  return static_cast<int>(qr.rank());
}

}  // namespace algroup
