#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algroup/algebra.hpp"
#include "algroup/endo.hpp"
#include "algroup/expr.hpp"
#include "algroup/groups.hpp"
#include "algroup/jsonio.hpp"
#include "algroup/report.hpp"
#include "algroup/sampling.hpp"
#include "algroup/spacetime.hpp"
#include "algroup/suites.hpp"

namespace {

using algroup::AlgebraElement;
using algroup::GroupDescriptor;
using algroup::Mat;
using algroup::Scalar;
using algroup::SpecPtr;
using algroup::TElement;
using algroup::Vec4;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "json";
  std::string path;  // empty -> stdout
};

int emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.path.empty()) {
    std::cout << payload << "\n";
    return 0;
  }
  std::ofstream out(opts.path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opts.path << "'\n";
    return kExitUsage;
  }
  out << payload << "\n";
  return out ? 0 : kExitUsage;
}

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", opts->path, "Write output to a file instead of stdout");
}

std::string group_value_json(const TElement& x) {
  return "{\"schema\":1,\"type\":\"group\",\"B\":" +
         algroup::json_matrix(to_matrix(x.shift())) +
         ",\"L\":" + algroup::json_matrix(to_matrix(x.left())) +
         ",\"R\":" + algroup::json_matrix(to_matrix(x.right())) + "}";
}

std::string algebra_value_json(const AlgebraElement& a) {
  return "{\"schema\":1,\"type\":\"algebra\",\"matrix\":" +
         algroup::json_matrix(to_matrix(a)) +
         ",\"coords\":" + algroup::json_coords(a.coords()) + "}";
}

std::string matrix_text(const Mat& m) {
  std::ostringstream out;
  out.precision(12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "[" : " ");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Scalar z = m(i, j);
      out << " " << z.real();
      if (z.imag() != 0.0) {
        out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
      }
    }
    out << (i + 1 == m.rows() ? " ]" : "\n");
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               double tol, const OutputOptions& opts) {
  std::vector<algroup::VerificationReport> reports;
  try {
    reports = algroup::run_suites(suite, seed, trials, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string payload =
      opts.format == "json"
          ? algroup::reports_to_json(reports, seed, trials, tol)
          : algroup::reports_to_text(reports);
  const int io = emit(opts, payload);
  if (io != 0) return io;
  return algroup::reports_all_passed(reports) ? 0 : kExitChecksFailed;
}

// ---------------------------------------------------------------------------
// lorentz

int cmd_lorentz(const std::string& source, double tol,
                const OutputOptions& opts) {
  Mat m;
  try {
    algroup::expr::Value value = algroup::expr::evaluate(algroup::expr::parse(source));
    if (!std::holds_alternative<AlgebraElement>(value)) {
      std::cerr << "error: expected a 2x2 matrix expression\n";
      return kExitUsage;
    }
    m = to_matrix(std::get<AlgebraElement>(value));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    algroup::LorentzMatrix lm = algroup::lorentz_from_sl2(m, tol);
    if (opts.format == "json") {
      return emit(opts, "{\"schema\":1,\"matrix\":" +
                            algroup::json_real_matrix(lm.matrix()) +
                            ",\"metric_residual\":" +
                            algroup::json_double(lm.metric_residual()) + "}");
    }
    std::ostringstream text;
    text.precision(12);
    text << lm.matrix() << "\nmetric_residual = " << lm.metric_residual();
    return emit(opts, text.str());
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// reconstruct

AlgebraElement element_from_json(const nlohmann::json& j, const SpecPtr& spec) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("generator entries must be arrays");
  }
  auto scalar_at = [](const nlohmann::json& pair) {
    if (pair.is_number()) return Scalar(pair.get<double>(), 0.0);
    if (pair.is_array() && pair.size() == 2 && pair[0].is_number() &&
        pair[1].is_number()) {
      return Scalar(pair[0].get<double>(), pair[1].get<double>());
    }
    throw std::invalid_argument("expected a number or an [re, im] pair");
  };
  // Either a coordinate vector [z0, z1, z2, z3] or a 2x2 matrix of pairs.
  if (j.size() == static_cast<std::size_t>(spec->dim()) &&
      (j[0].is_number() || (j[0].is_array() && j[0].size() == 2 && j[0][0].is_number()))) {
    algroup::CVec coords(spec->dim());
    for (int k = 0; k < spec->dim(); ++k) {
      coords(k) = scalar_at(j[static_cast<std::size_t>(k)]);
    }
    return AlgebraElement(spec, std::move(coords));
  }
  if (j.size() == 2 && j[0].is_array() && j[0].size() == 2) {
    Mat m(2, 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        m(r, c) = scalar_at(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      }
    }
    return from_matrix(spec, m);
  }
  throw std::invalid_argument("generator entries must be coordinate vectors or 2x2 matrices");
}

std::vector<TElement> generators_from_file(const std::string& path,
                                           const GroupDescriptor& grp) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read generator file '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array()) throw std::invalid_argument("generator file must hold a JSON array");
  std::vector<TElement> out;
  const SpecPtr& spec = grp.spec;
  for (const nlohmann::json& item : doc) {
    if (!item.is_object()) throw std::invalid_argument("generators must be JSON objects");
    switch (grp.kind) {
      case algroup::GroupKind::D: {
        AlgebraElement b = item.contains("B") ? element_from_json(item.at("B"), spec)
                                              : zero_element(spec);
        AlgebraElement l = element_from_json(item.at("L"), spec);
        out.push_back(embed_D(algroup::DElement(b, l)));
        break;
      }
      case algroup::GroupKind::T: {
        AlgebraElement b = item.contains("B") ? element_from_json(item.at("B"), spec)
                                              : zero_element(spec);
        out.push_back(TElement(b, element_from_json(item.at("L"), spec),
                               element_from_json(item.at("R"), spec)));
        break;
      }
      case algroup::GroupKind::StarD: {
        AlgebraElement h = item.contains("H") ? element_from_json(item.at("H"), spec)
                                              : zero_element(spec);
        out.push_back(embed_star_D(
            algroup::make_star_D(h, element_from_json(item.at("G"), spec))));
        break;
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("generator file holds no generators");
  return out;
}

std::vector<TElement> default_generators(const GroupDescriptor& grp) {
  const SpecPtr& spec = grp.spec;
  std::vector<TElement> out;
  switch (grp.kind) {
    case algroup::GroupKind::D:
      for (int i = 0; i < spec->dim(); ++i) {
        out.push_back(embed_D(
            algroup::DElement(zero_element(spec), basis_element(spec, i))));
      }
      break;
    case algroup::GroupKind::T:
      for (int i = 0; i < spec->dim(); ++i) {
        for (int j = 0; j < spec->dim(); ++j) {
          out.push_back(TElement(zero_element(spec), basis_element(spec, i),
                                 basis_element(spec, j)));
        }
      }
      break;
    case algroup::GroupKind::StarD:
      for (int i = 0; i < spec->dim(); ++i) {
        out.push_back(embed_star_D(
            algroup::make_star_D(zero_element(spec), basis_element(spec, i))));
      }
      break;
  }
  return out;
}

// Fixed facts showing why the star-fixed subgroup cannot reconstruct the
// algebra: both quasi-ring identities fail there by an exact operator gap.
struct StarObstruction {
  double additivity_gap = 0.0;   // ([1]~[1]) doubles shifts, [2*1] quadruples
  double homogeneity_gap = 0.0;  // scaling the conjugator by i changes nothing
};

StarObstruction star_obstruction(const GroupDescriptor& grp) {
  const SpecPtr& spec = grp.spec;
  auto conj_by = [&](Scalar mu) {
    return ad_endo(embed_star_D(algroup::make_star_D(
                       zero_element(spec),
                       alg_scalar_mul(mu, unit_element(spec)))),
                   grp);
  };
  algroup::LinearEndo unit_conj = conj_by(Scalar(1, 0));
  StarObstruction out;
  out.additivity_gap = algroup::operator_norm(
      endo_smile(unit_conj, unit_conj).matrix() - conj_by(Scalar(2, 0)).matrix());
  out.homogeneity_gap = algroup::operator_norm(
      Scalar(0, 1) * Mat::Identity(spec->dim(), spec->dim()) -
      conj_by(Scalar(0, 1)).matrix());
  return out;
}

int cmd_reconstruct(const std::string& group_name, const std::string& gen_file,
                    int random_count, std::uint64_t seed, double tol,
                    const OutputOptions& opts) {
  GroupDescriptor grp = group_name == "D"      ? algroup::group_D(algroup::pauli_spec())
                        : group_name == "T"    ? algroup::group_T(algroup::pauli_spec())
                                               : algroup::group_star_D(algroup::pauli_spec());
  std::vector<TElement> gens;
  try {
    if (!gen_file.empty()) {
      gens = generators_from_file(gen_file, grp);
    } else if (random_count > 0) {
      algroup::Rng rng(seed);
      for (int k = 0; k < random_count; ++k) {
        gens.push_back(random_group_element(grp, rng));
      }
    } else {
      gens = default_generators(grp);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  algroup::ReconstructedAlgebra rec =
      algroup::reconstruct(grp, gens, grp.spec, tol);
  const bool ok = rec.closed &&
                  (!rec.compared || (rec.max_deviation <= tol &&
                                     rec.target_embed_residual <= tol));

  // The star-fixed subgroup cannot support the pointwise-product laws; attach
  // the concrete failure witnesses so the report explains the limitation.
  std::optional<StarObstruction> obstruction;
  if (grp.kind == algroup::GroupKind::StarD) obstruction = star_obstruction(grp);

  if (opts.format == "json") {
    std::string payload = "{\"schema\":1,\"group\":\"" + grp.label() + "\"";
    payload += ",\"generators\":" + std::to_string(gens.size());
    payload += ",\"span_dim\":" + std::to_string(rec.span_dim);
    payload += ",\"closed\":";
    payload += rec.closed ? "true" : "false";
    payload += ",\"closure_residual\":" + algroup::json_double(rec.closure_residual);
    payload += ",\"compared\":";
    payload += rec.compared ? "true" : "false";
    if (rec.compared) {
      payload += ",\"target_embed_residual\":" +
                 algroup::json_double(rec.target_embed_residual);
      payload += ",\"max_deviation\":" + algroup::json_double(rec.max_deviation);
    }
    if (obstruction) {
      payload += ",\"star_witnesses\":{\"additivity_gap\":" +
                 algroup::json_double(obstruction->additivity_gap) +
                 ",\"homogeneity_gap\":" +
                 algroup::json_double(obstruction->homogeneity_gap) + "}";
    }
    payload += ",\"verdict\":\"";
    payload += ok ? "ok" : "mismatch";
    payload += "\"}";
    const int io = emit(opts, payload);
    if (io != 0) return io;
  } else {
    std::ostringstream text;
    text << "group " << grp.label() << ", " << gens.size() << " generators\n"
         << "span dimension: " << rec.span_dim << "\n"
         << "multiplicatively closed: " << (rec.closed ? "yes" : "no")
         << " (residual " << rec.closure_residual << ")\n";
    if (rec.compared) {
      text << "target images in span: residual " << rec.target_embed_residual
           << "\nstructure constants: max deviation " << rec.max_deviation
           << "\n";
    }
    if (obstruction) {
      text << "star witnesses (pointwise-product laws fail on this group):\n"
           << "  unit conjugation squared vs conjugation by 2: gap "
           << obstruction->additivity_gap << "\n"
           << "  i * identity map vs conjugation by i: gap "
           << obstruction->homogeneity_gap << "\n";
    }
    text << "verdict: " << (ok ? "ok" : "mismatch");
    const int io = emit(opts, text.str());
    if (io != 0) return io;
  }
  return ok ? 0 : kExitChecksFailed;
}

// ---------------------------------------------------------------------------
// eval / transform

int cmd_eval(const std::string& source, const OutputOptions& opts) {
  try {
    algroup::expr::Value value = algroup::expr::evaluate(algroup::expr::parse(source));
    if (opts.format == "json") {
      if (std::holds_alternative<Scalar>(value)) {
        return emit(opts, "{\"schema\":1,\"type\":\"scalar\",\"value\":" +
                              algroup::json_scalar(std::get<Scalar>(value)) + "}");
      }
      if (std::holds_alternative<AlgebraElement>(value)) {
        return emit(opts, algebra_value_json(std::get<AlgebraElement>(value)));
      }
      return emit(opts, group_value_json(std::get<TElement>(value)));
    }
    std::ostringstream text;
    text.precision(12);
    if (std::holds_alternative<Scalar>(value)) {
      Scalar z = std::get<Scalar>(value);
      text << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
           << "i";
    } else if (std::holds_alternative<AlgebraElement>(value)) {
      text << "algebra element\n"
           << matrix_text(to_matrix(std::get<AlgebraElement>(value)));
    } else {
      const TElement& x = std::get<TElement>(value);
      text << "group element\nB =\n" << matrix_text(to_matrix(x.shift()))
           << "\nL =\n" << matrix_text(to_matrix(x.left()))
           << "\nR =\n" << matrix_text(to_matrix(x.right()));
    }
    return emit(opts, text.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_transform(const std::string& source, const std::string& vec_source,
                  double tol, const OutputOptions& opts) {
  try {
    algroup::expr::Value value = algroup::expr::evaluate(algroup::expr::parse(source));
    if (!std::holds_alternative<TElement>(value)) {
      std::cerr << "error: transform needs a group element\n";
      return kExitUsage;
    }
    const TElement& x = std::get<TElement>(value);
    Vec4 v = algroup::expr::parse_vec4(vec_source);

    // A star-fixed element with a unit-determinant left part acts on real
    // spacetime vectors; reject complex input for those.
    Mat l = to_matrix(x.left());
    Scalar det_l = l(0, 0) * l(1, 1) - l(0, 1) * l(1, 0);
    const bool spinor_shaped =
        residual(x, star_T(x)) <= tol &&
        std::abs(det_l - Scalar(1.0, 0.0)) <= tol * (1.0 + algroup::max_abs(l));
    if (spinor_shaped && !v.real_only()) {
      std::cerr << "error: spinor elements act on real vectors only\n";
      return kExitUsage;
    }

    SpecPtr spec = algroup::pauli_spec();
    AlgebraElement input = from_matrix(spec, algroup::vec_to_mat(v));
    Vec4 image = algroup::mat_to_vec(to_matrix(apply_T(x, input)));
    Vec4 origin = algroup::mat_to_vec(to_matrix(apply_T(x, zero_element(spec))));

    // Differences strip the shift, so the quadratic form of a difference is
    // preserved whenever the linear part has unit determinant ratio.
    Scalar in_norm = algroup::mink_norm(v);
    Scalar out_norm = algroup::mink_norm(image - origin);
    const double interval_residual = algroup::residual(out_norm, in_norm);

    if (opts.format == "json") {
      std::string payload = "{\"schema\":1,\"vector\":[";
      for (int k = 0; k < 4; ++k) {
        if (k) payload += ",";
        payload += algroup::json_scalar(image[k]);
      }
      payload += "],\"interval_residual\":" +
                 algroup::json_double(interval_residual) + "}";
      return emit(opts, payload);
    }
    std::ostringstream text;
    text.precision(12);
    text << "(";
    for (int k = 0; k < 4; ++k) {
      Scalar z = image[k];
      if (k) text << ", ";
      text << z.real();
      if (z.imag() != 0.0) {
        text << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
      }
    }
    text << ")\ninterval_residual = " << interval_residual;
    return emit(opts, text.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semidirect-product groups over matrix algebras: verification "
               "suites, Lorentz covers, and endomorphism reconstruction"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int trials = 1000;
  double tol = 1e-9;

  std::string verify_suite;
  OutputOptions verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_suite, "Suite name or 'all'")->required();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify->add_option("--trials", trials, "Trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--tol", tol, "Comparison tolerance")->capture_default_str();
  add_output_flags(verify, &verify_out);

  std::string lorentz_expr;
  OutputOptions lorentz_out;
  CLI::App* lorentz = app.add_subcommand(
      "lorentz", "Real Lorentz image of a unit-determinant 2x2 matrix");
  lorentz->add_option("matrix", lorentz_expr, "2x2 matrix expression")->required();
  lorentz->add_option("--tol", tol, "Validation tolerance")->capture_default_str();
  add_output_flags(lorentz, &lorentz_out);

  std::string rec_group;
  std::string rec_file;
  int rec_random = 0;
  OutputOptions rec_out;
  CLI::App* rec = app.add_subcommand(
      "reconstruct", "Span the conjugation images of group generators");
  rec->add_option("group", rec_group, "Group: D, T, or starD")
      ->required()
      ->check(CLI::IsMember({"D", "T", "starD"}));
  rec->add_option("--generators", rec_file, "JSON file with generators");
  rec->add_option("--random", rec_random, "Draw this many random generators")
      ->check(CLI::PositiveNumber);
  rec->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  rec->add_option("--tol", tol, "Comparison tolerance")->capture_default_str();
  add_output_flags(rec, &rec_out);

  std::string eval_expr;
  OutputOptions eval_out;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", eval_expr, "Expression")->required();
  add_output_flags(eval, &eval_out);

  std::string transform_expr;
  std::string transform_vec;
  OutputOptions transform_out;
  CLI::App* transform = app.add_subcommand(
      "transform", "Apply a group element to a four-vector");
  transform->add_option("expr", transform_expr, "Group-valued expression")->required();
  transform->add_option("vector", transform_vec, "Four-vector (v0,v1,v2,v3)")->required();
  transform->add_option("--tol", tol, "Shape-detection tolerance")->capture_default_str();
  add_output_flags(transform, &transform_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(verify_suite, seed, trials, tol, verify_out);
  if (lorentz->parsed()) return cmd_lorentz(lorentz_expr, tol, lorentz_out);
  if (rec->parsed()) {
    if (!rec_file.empty() && rec_random > 0) {
      std::cerr << "error: --generators and --random are mutually exclusive\n";
      return kExitUsage;
    }
    return cmd_reconstruct(rec_group, rec_file, rec_random, seed, tol, rec_out);
  }
  if (eval->parsed()) return cmd_eval(eval_expr, eval_out);
  if (transform->parsed()) {
    return cmd_transform(transform_expr, transform_vec, tol, transform_out);
  }
  return kExitUsage;
}
