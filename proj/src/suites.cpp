#include "algroup/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "algroup/endo.hpp"
#include "algroup/groups.hpp"
#include "algroup/jsonio.hpp"
#include "algroup/sampling.hpp"
#include "algroup/spacetime.hpp"

namespace algroup {

namespace {

std::string element_witness(const TElement& x) {
  return "{\"B\":" + json_coords(x.shift().coords()) +
         ",\"L\":" + json_coords(x.left().coords()) +
         ",\"R\":" + json_coords(x.right().coords()) + "}";
}

std::string matrix_witness(const char* key, const Mat& m) {
  return std::string("{\"") + key + "\":" + json_matrix(m) + "}";
}

VerificationReport make_report(const char* suite, std::uint64_t seed,
                               int trials, double tol) {
  VerificationReport r;
  r.suite = suite;
  r.seed = seed;
  r.trials = trials;
  r.tol = tol;
  return r;
}

}  // namespace

VerificationReport run_group_axioms(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("group-axioms", seed, trials, tol);
  SpecPtr spec = pauli_spec();
  Rng root(seed);

  {
    Rng rng = root.fork(1);
    CheckBuilder assoc("one_sided_associativity", tol);
    CheckBuilder ident("one_sided_identity", tol);
    CheckBuilder inver("one_sided_inverse", tol);
    const DElement id = d_identity(spec);
    for (int t = 0; t < trials; ++t) {
      DElement x = random_d_element(spec, rng);
      DElement y = random_d_element(spec, rng);
      DElement z = random_d_element(spec, rng);
      assoc.sample(residual(compose_D(compose_D(x, y), z),
                            compose_D(x, compose_D(y, z))),
                   element_witness(embed_D(x)));
      ident.sample(std::max(residual(compose_D(x, id), x),
                            residual(compose_D(id, x), x)),
                   element_witness(embed_D(x)));
      DElement xinv = invert_D(x);
      inver.sample(std::max(residual(compose_D(x, xinv), id),
                            residual(compose_D(xinv, x), id)),
                   element_witness(embed_D(x)));
    }
    report.checks.push_back(assoc.finish());
    report.checks.push_back(ident.finish());
    report.checks.push_back(inver.finish());
  }

  {
    Rng rng = root.fork(2);
    CheckBuilder assoc("two_sided_associativity", tol);
    CheckBuilder ident("two_sided_identity", tol);
    CheckBuilder inver("two_sided_inverse", tol);
    const TElement id = t_identity(spec);
    for (int t = 0; t < trials; ++t) {
      TElement x = random_t_element(spec, rng);
      TElement y = random_t_element(spec, rng);
      TElement z = random_t_element(spec, rng);
      assoc.sample(residual(compose_T(compose_T(x, y), z),
                            compose_T(x, compose_T(y, z))),
                   element_witness(x));
      ident.sample(std::max(residual(compose_T(x, id), x),
                            residual(compose_T(id, x), x)),
                   element_witness(x));
      TElement xinv = invert_T(x);
      inver.sample(std::max(residual(compose_T(x, xinv), id),
                            residual(compose_T(xinv, x), id)),
                   element_witness(x));
    }
    report.checks.push_back(assoc.finish());
    report.checks.push_back(ident.finish());
    report.checks.push_back(inver.finish());
  }

  return report;
}

VerificationReport run_matrix_reps(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("matrix-reps", seed, trials, tol);
  SpecPtr spec = pauli_spec();
  Rng root(seed);

  {
    Rng rng = root.fork(1);
    CheckBuilder check("one_sided_block_rep_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      DElement x = random_d_element(spec, rng);
      DElement y = random_d_element(spec, rng);
      check.sample(residual(matrix_rep_D(compose_D(x, y)),
                            Mat(matrix_rep_D(x) * matrix_rep_D(y))),
                   element_witness(embed_D(x)));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(2);
    CheckBuilder check("one_sided_affine_rep_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      DElement x = random_d_element(spec, rng);
      DElement y = random_d_element(spec, rng);
      check.sample(residual(affine_rep_D(compose_D(x, y)),
                            Mat(affine_rep_D(x) * affine_rep_D(y))),
                   element_witness(embed_D(x)));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(3);
    CheckBuilder check("two_sided_block_rep_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      TElement x = random_t_element(spec, rng);
      TElement y = random_t_element(spec, rng);
      check.sample(residual(matrix_rep_T(compose_T(x, y)),
                            Mat(matrix_rep_T(x) * matrix_rep_T(y))),
                   element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(4);
    CheckBuilder check("spin_rep_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      AlgebraElement h1 = random_self_adjoint(spec, rng);
      AlgebraElement h2 = random_self_adjoint(spec, rng);
      SpinPoincareElement x(to_matrix(h1), random_sl2(rng));
      SpinPoincareElement y(to_matrix(h2), random_sl2(rng));
      check.sample(residual(spin_matrix_rep(compose_spin(x, y)),
                            Mat(spin_matrix_rep(x) * spin_matrix_rep(y))),
                   matrix_witness("lambda", x.rotor()));
    }
    report.checks.push_back(check.finish());
  }

  {
    // The spinor block representation is literally the two-sided block
    // representation of the triple (H, Lambda, (Lambda^dagger)^-1), so the
    // two must agree to near machine precision.
    Rng rng = root.fork(5);
    CheckBuilder check("spin_rep_matches_two_sided_rep", std::min(tol, 1e-12));
    for (int t = 0; t < trials; ++t) {
      AlgebraElement h = random_self_adjoint(spec, rng);
      SpinPoincareElement x(to_matrix(h), random_sl2(rng));
      check.sample(residual(spin_matrix_rep(x), matrix_rep_T(embed_spin(x))),
                   matrix_witness("lambda", x.rotor()));
    }
    report.checks.push_back(check.finish());
  }

  {
    // Faithfulness probe: distinct sampled elements must map to visibly
    // distinct matrices (error records how close the nearest pair came to
    // colliding under the representation).
    Rng rng = root.fork(6);
    CheckBuilder check("block_reps_separate_points", tol);
    const int pairs = std::max(1, trials / 10);
    for (int t = 0; t < pairs; ++t) {
      TElement x = random_t_element(spec, rng);
      TElement y = random_t_element(spec, rng);
      const double apart = residual(x, y);
      if (apart <= 1e-3) continue;  // astronomically unlikely collision
      const double rep_apart = residual(matrix_rep_T(x), matrix_rep_T(y));
      check.sample(rep_apart > tol ? 0.0 : tol - rep_apart,
                   element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_star_involution(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("star-involution", seed, trials, tol);
  SpecPtr spec = pauli_spec();
  Rng root(seed);

  {
    Rng rng = root.fork(1);
    CheckBuilder check("star_is_involution", tol);
    for (int t = 0; t < trials; ++t) {
      TElement x = random_t_element(spec, rng);
      check.sample(residual(star_T(star_T(x)), x), element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(2);
    CheckBuilder check("star_is_automorphism", tol);
    for (int t = 0; t < trials; ++t) {
      TElement x = random_t_element(spec, rng);
      TElement y = random_t_element(spec, rng);
      check.sample(residual(star_T(compose_T(x, y)),
                            compose_T(star_T(x), star_T(y))),
                   element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(3);
    CheckBuilder check("star_fixed_subgroup_pointwise", tol);
    for (int t = 0; t < trials; ++t) {
      TElement x = embed_star_D(random_star_d_element(spec, rng));
      check.sample(residual(star_T(x), x), element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  {
    // The star-fixed elements form a subgroup: products and inverses stay
    // star-fixed and keep a self-adjoint shift part.
    Rng rng = root.fork(4);
    CheckBuilder check("star_fixed_closure", tol);
    for (int t = 0; t < trials; ++t) {
      TElement x = embed_star_D(random_star_d_element(spec, rng));
      TElement y = embed_star_D(random_star_d_element(spec, rng));
      TElement xy = compose_T(x, y);
      TElement xinv = invert_T(x);
      double err = residual(star_T(xy), xy);
      err = std::max(err, residual(star_T(xinv), xinv));
      err = std::max(err, residual(xy.shift(), star(xy.shift())));
      check.sample(err, element_witness(x));
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_minkowski(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("minkowski", seed, trials, tol);
  Rng root(seed);

  {
    // det(sum v_i sigma_i) = v0^2 - v1^2 - v2^2 - v3^2, even for complex v.
    Rng rng = root.fork(1);
    CheckBuilder check("det_matches_quadratic_form", std::min(tol, 1e-12));
    for (int t = 0; t < trials; ++t) {
      Scalar v0 = rng.complex_uniform();
      Scalar v1 = rng.complex_uniform();
      Scalar v2 = rng.complex_uniform();
      Scalar v3 = rng.complex_uniform();
      Vec4 v = Vec4::complex(v0, v1, v2, v3);
      Mat m = vec_to_mat(v);
      Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      check.sample(residual(det, mink_norm(v)),
                   "{\"v\":" + json_scalar(v0) + "}");
    }
    report.checks.push_back(check.finish());
  }

  {
    // Conjugating by a unit-determinant matrix preserves the form on
    // Hermitian matrices.
    Rng rng = root.fork(2);
    CheckBuilder check("hermitian_action_preserves_form", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m = random_sl2(rng);
      Vec4 v = Vec4::real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                          rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      Vec4 image = mat_to_vec(mhm_action(m, vec_to_mat(v)));
      check.sample(residual(mink_norm(image), mink_norm(v)),
                   matrix_witness("m", m));
    }
    report.checks.push_back(check.finish());
  }

  {
    // In general the form scales by |det M|^2.
    Rng rng = root.fork(3);
    CheckBuilder check("form_scales_by_det_modulus_squared", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m(2, 2);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m(i, j) = rng.complex_uniform();
      }
      Vec4 v = Vec4::real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                          rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      Vec4 image = mat_to_vec(mhm_action(m, vec_to_mat(v)));
      check.sample(residual(mink_norm(image),
                            Scalar(std::norm(det), 0.0) * mink_norm(v)),
                   matrix_witness("m", m));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(4);
    CheckBuilder check("hermitian_action_preserves_hermiticity", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m = random_sl2(rng);
      Vec4 v = Vec4::real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                          rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      Mat image = mhm_action(m, vec_to_mat(v));
      check.sample(residual(image, Mat(image.adjoint())),
                   matrix_witness("m", m));
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_lorentz_cover(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("lorentz-cover", seed, trials, tol);
  Rng root(seed);

  {
    Rng rng = root.fork(1);
    CheckBuilder metric("metric_preserved", tol);
    CheckBuilder det_one("determinant_one", tol);
    CheckBuilder ortho("orthochronous", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m = random_sl2(rng);
      LorentzMatrix lm = lorentz_from_sl2(m);
      const Eigen::Matrix4d& l = lm.matrix();
      const double scale = 1.0 + l.cwiseAbs().maxCoeff();
      metric.sample(lm.metric_residual() / (scale * scale),
                    matrix_witness("m", m));
      det_one.sample(std::abs(l.determinant() - 1.0) / (scale * scale),
                     matrix_witness("m", m));
      ortho.sample(std::max(0.0, 1.0 - l(0, 0)), matrix_witness("m", m));
    }
    report.checks.push_back(metric.finish());
    report.checks.push_back(det_one.finish());
    report.checks.push_back(ortho.finish());
  }

  {
    // M and -M land on the same Lorentz matrix: a two-to-one cover.
    Rng rng = root.fork(2);
    CheckBuilder check("kernel_sign_pair", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m = random_sl2(rng);
      Eigen::Matrix4d a = lorentz_from_sl2(m).matrix();
      Eigen::Matrix4d b = lorentz_from_sl2(Mat(-m)).matrix();
      const double scale = 1.0 + a.cwiseAbs().maxCoeff();
      check.sample((a - b).cwiseAbs().maxCoeff() / scale,
                   matrix_witness("m", m));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(3);
    CheckBuilder check("cover_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m1 = random_sl2(rng);
      Mat m2 = random_sl2(rng);
      Eigen::Matrix4d lhs = lorentz_from_sl2(Mat(m1 * m2)).matrix();
      Eigen::Matrix4d rhs =
          lorentz_from_sl2(m1).matrix() * lorentz_from_sl2(m2).matrix();
      const double scale =
          1.0 + std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
      check.sample((lhs - rhs).cwiseAbs().maxCoeff() / scale,
                   matrix_witness("m", m1));
    }
    report.checks.push_back(check.finish());
  }

  {
    // Unit-rapidity boost along axis 3 sends (1,0,0,0) to
    // (cosh 1, 0, 0, sinh 1).
    CheckBuilder check("unit_rapidity_boost", tol);
    Vec4 image = apply_spin(make_boost(3, 1.0), Vec4::real(1, 0, 0, 0));
    Vec4 expected =
        Vec4::real(1.5430806348152437, 0.0, 0.0, 1.1752011936438014);
    check.sample(residual(image, expected),
                 "{\"image\":[" + json_scalar(image[0]) + "," +
                     json_scalar(image[1]) + "," + json_scalar(image[2]) +
                     "," + json_scalar(image[3]) + "]}");
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_so4c(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("so4c", seed, trials, tol);
  Rng root(seed);

  Mat g = Mat::Zero(4, 4);
  g(0, 0) = Scalar(1, 0);
  g(1, 1) = Scalar(-1, 0);
  g(2, 2) = Scalar(-1, 0);
  g(3, 3) = Scalar(-1, 0);

  {
    CheckBuilder check("identity_pair_maps_to_identity", tol);
    Mat o = so4c_from_pair(Mat::Identity(2, 2), Mat::Identity(2, 2));
    check.sample(residual(o, Mat(Mat::Identity(4, 4))), "{}");
    report.checks.push_back(check.finish());
  }

  {
    // Unit-determinant pairs land in the complex orthogonal group of g.
    Rng rng = root.fork(1);
    CheckBuilder check("complex_metric_preserved", tol);
    for (int t = 0; t < trials; ++t) {
      Mat l = random_sl2(rng);
      Mat r = random_sl2(rng);
      Mat o = so4c_from_pair(l, r);
      const double scale = 1.0 + max_abs(o);
      check.sample(max_abs(Mat(o.transpose() * g * o - g)) / (scale * scale),
                   matrix_witness("l", l));
    }
    report.checks.push_back(check.finish());
  }

  {
    Rng rng = root.fork(2);
    CheckBuilder check("pair_homomorphism", tol);
    for (int t = 0; t < trials; ++t) {
      Mat l1 = random_sl2(rng);
      Mat r1 = random_sl2(rng);
      Mat l2 = random_sl2(rng);
      Mat r2 = random_sl2(rng);
      Mat lhs = so4c_from_pair(Mat(l1 * l2), Mat(r1 * r2));
      Mat rhs = so4c_from_pair(l1, r1) * so4c_from_pair(l2, r2);
      check.sample(residual(lhs, rhs), matrix_witness("l", l1));
    }
    report.checks.push_back(check.finish());
  }

  {
    // Restricting to pairs (M, (M^dagger)^-1) recovers the real Lorentz
    // image of M.
    Rng rng = root.fork(3);
    CheckBuilder check("restriction_matches_real_cover", tol);
    for (int t = 0; t < trials; ++t) {
      Mat m = random_sl2(rng);
      Mat dual = m.adjoint().inverse();
      Mat o = so4c_from_pair(m, dual);
      Eigen::Matrix4d l = lorentz_from_sl2(m).matrix();
      check.sample(residual(o, Mat(l.cast<Scalar>())), matrix_witness("m", m));
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_quasiring(std::uint64_t seed, int trials, double tol) {
  VerificationReport report =
      check_quasiring(group_T(pauli_spec()), trials, seed, tol);
  report.suite = "quasiring";
  return report;
}

VerificationReport run_restore_D(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("restore-D", seed, trials, tol);
  SpecPtr spec = pauli_spec();
  GroupDescriptor grp = group_D(spec);
  Rng root(seed);

  {
    // Conjugation images of the shifted basis elements span the full
    // endomorphism image of the algebra and recover its multiplication
    // table.
    std::vector<TElement> gens;
    for (int i = 0; i < spec->dim(); ++i) {
      gens.push_back(embed_D(DElement(zero_element(spec), basis_element(spec, i))));
    }
    ReconstructedAlgebra rec = reconstruct(grp, gens, spec, tol);

    CheckBuilder span_check("span_dimension_full", tol);
    span_check.sample(std::abs(rec.span_dim - spec->dim()),
                      "{\"span_dim\":" + std::to_string(rec.span_dim) + "}");
    report.checks.push_back(span_check.finish());

    CheckBuilder closure_check("products_stay_in_span", tol);
    closure_check.sample(rec.closure_residual, "{}");
    report.checks.push_back(closure_check.finish());

    CheckBuilder embed_check("target_images_lie_in_span", tol);
    embed_check.sample(rec.target_embed_residual, "{}");
    report.checks.push_back(embed_check.finish());

    CheckBuilder structure_check("structure_constants_recovered", tol);
    structure_check.sample(rec.compared ? rec.max_deviation : 1.0, "{}");
    report.checks.push_back(structure_check.finish());
  }

  {
    // Same verdict when the generators are drawn from unit-determinant
    // elements only.
    Rng rng = root.fork(1);
    std::vector<TElement> gens;
    for (int k = 0; k < 8; ++k) {
      gens.push_back(embed_D(
          DElement(zero_element(spec), from_matrix(spec, random_sl2(rng)))));
    }
    ReconstructedAlgebra rec = reconstruct(grp, gens, spec, tol);

    CheckBuilder span_check("unit_det_generators_span", tol);
    span_check.sample(std::abs(rec.span_dim - spec->dim()),
                      "{\"span_dim\":" + std::to_string(rec.span_dim) + "}");
    report.checks.push_back(span_check.finish());

    CheckBuilder structure_check("unit_det_generators_structure", tol);
    structure_check.sample(
        rec.compared ? std::max(rec.max_deviation, rec.target_embed_residual)
                     : 1.0,
        "{}");
    report.checks.push_back(structure_check.finish());
  }

  {
    // The conjugation action is multiplicative in the conjugator.
    Rng rng = root.fork(2);
    CheckBuilder check("conjugation_action_multiplicative", tol);
    for (int t = 0; t < trials; ++t) {
      AlgebraElement l1 = random_invertible(spec, rng);
      AlgebraElement l2 = random_invertible(spec, rng);
      Mat lhs = ad_endo(embed_D(DElement(zero_element(spec), l1)), grp).matrix() *
                ad_endo(embed_D(DElement(zero_element(spec), l2)), grp).matrix();
      Mat rhs = ad_endo(embed_D(DElement(zero_element(spec), l1 * l2)), grp).matrix();
      check.sample(residual(lhs, rhs),
                   "{\"l1\":" + json_coords(l1.coords()) + "}");
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerificationReport run_restore_T(std::uint64_t seed, int trials, double tol) {
  VerificationReport report = make_report("restore-T", seed, trials, tol);
  SpecPtr spec = pauli_spec();
  GroupDescriptor grp = group_T(spec);
  Rng root(seed);

  const int full = spec->dim() * spec->dim();
  ReconstructedAlgebra rec;
  int span = 0;
  // 20 random generators almost surely span; redraw a few times if a draw
  // is rank-deficient.
  for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
    Rng rng = root.fork(attempt);
    std::vector<TElement> gens;
    for (int k = 0; k < 20; ++k) gens.push_back(random_t_element(spec, rng));
    rec = reconstruct(grp, gens, spec, tol);
    span = rec.span_dim;
    if (span == full) break;
  }

  CheckBuilder span_check("span_dimension_is_square_of_dim", tol);
  span_check.sample(std::abs(span - full),
                    "{\"span_dim\":" + std::to_string(span) + "}");
  report.checks.push_back(span_check.finish());

  CheckBuilder closure_check("products_stay_in_span", tol);
  closure_check.sample(rec.closure_residual, "{}");
  report.checks.push_back(closure_check.finish());

  return report;
}

VerificationReport run_star_counterexamples(std::uint64_t seed, int trials,
                                            double tol) {
  return star_counterexamples(tol, seed, trials);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "group-axioms",    "matrix-reps", "star-involution",
      "minkowski",       "lorentz-cover", "so4c",
      "quasiring",       "restore-D",   "restore-T",
      "star-counterexamples"};
  return names;
}

std::vector<VerificationReport> run_suites(const std::string& name,
                                           std::uint64_t seed, int trials,
                                           double tol) {
  using Runner = VerificationReport (*)(std::uint64_t, int, double);
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"group-axioms", run_group_axioms},
      {"matrix-reps", run_matrix_reps},
      {"star-involution", run_star_involution},
      {"minkowski", run_minkowski},
      {"lorentz-cover", run_lorentz_cover},
      {"so4c", run_so4c},
      {"quasiring", run_quasiring},
      {"restore-D", run_restore_D},
      {"restore-T", run_restore_T},
      {"star-counterexamples", run_star_counterexamples},
  };

  std::vector<VerificationReport> out;
  if (name == "all") {
    for (const auto& [unused, runner] : table) {
      out.push_back(runner(seed, trials, tol));
    }
    return out;
  }
  for (const auto& [suite, runner] : table) {
    if (suite == name) {
      out.push_back(runner(seed, trials, tol));
      return out;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace algroup
