#include <cstddef>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nccov/suites.hpp"
#include "nccov/text.hpp"

namespace {

using namespace nccov;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

CoordRow ones_row(std::size_t n) {
  CoordRow v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = Quaternion(1);
  return v;
}

CoordRow row_from_flag(const std::string& flag_value, std::size_t n,
                       const char* flag_name) {
  if (flag_value.empty()) return ones_row(n);
  const NcMatrix m = parse_matrix(flag_value);
  if (m.rows() != 1 || m.cols() != n) {
    throw ConfigError(std::string(flag_name) + " must be a 1x" +
                      std::to_string(n) + " row, got " +
                      NcMatrix::shape_str(m));
  }
  return CoordRow(m);
}

/// h(v1,..,vn)[i] = sum_j v1[i] * a(i,j) * v2[j]: one middle factor per
/// (i, j), taken from the --a matrix.
TensorPolyMap bilinear_from_matrix(const NcMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ConfigError("--a must be square, got " + NcMatrix::shape_str(a));
  }
  TensorPolyMap h(2, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      h.add_term(i, {i, j}, {Quaternion(1), a(i, j), Quaternion(1)});
    }
  }
  return h;
}

void print_header(const std::string& kind) {
  std::cout << "demo: " << kind << "\n";
  std::cout << "frame 1 is the reference frame; frame 2 is frame 1 moved by "
               "the passive transform g\n";
}

int verdict(const CoordRow& lhs, const CoordRow& rhs) {
  std::cout << "frame 2 side, expanded in the reference frame: "
            << to_text(lhs.row()) << "\n";
  std::cout << "frame 1 side, expanded in the reference frame: "
            << to_text(rhs.row()) << "\n";
  const bool equal = lhs == rhs;
  std::cout << "verdict: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
  return equal ? kExitPass : kExitFail;
}

int demo_basis_change(const PassiveTransform& g, const std::string& v_flag) {
  const std::size_t n = g.dim();
  print_header("basis-change");
  const Basis e1 = Basis::reference(n);
  const Basis e2 = passive_apply_basis(g, e1);
  const CoordRow v2 = row_from_flag(v_flag, n, "--v");
  const CoordRow v1 = passive_coords_forward(g, v2);
  std::cout << "g = " << to_text(g.matrix()) << "\n";
  std::cout << "e2 = g * e1 = " << to_text(e2.matrix()) << "\n";
  std::cout << "coordinates in frame 2: v2 = " << to_text(v2.row()) << "\n";
  std::cout << "coordinate rule v1 = v2 * g: v1 = " << to_text(v1.row())
            << "\n";
  return verdict(expand_in_reference(v2, e2), expand_in_reference(v1, e1));
}

int demo_endo(const PassiveTransform& g, const std::string& f_flag,
              const std::string& v_flag) {
  const std::size_t n = g.dim();
  print_header("endo");
  if (f_flag.empty()) throw ConfigError("demo endo needs --f");
  const NcMatrix f = parse_matrix(f_flag);
  const Basis e1 = Basis::reference(n);
  const Basis e2 = passive_apply_basis(g, e1);
  const HomMatrix f1(f, e1, e1);
  const HomMatrix f2 = endo_transform(f1, g);
  const CoordRow v2 = row_from_flag(v_flag, n, "--v");
  const CoordRow v1 = passive_coords_forward(g, v2);
  std::cout << "g = " << to_text(g.matrix()) << "\n";
  std::cout << "f1 = " << to_text(f) << "\n";
  std::cout << "transformation rule f2 = g * f1 * inverse(g): f2 = "
            << to_text(f2.f()) << "\n";
  std::cout << "coordinates: v2 = " << to_text(v2.row())
            << ", v1 = v2 * g = " << to_text(v1.row()) << "\n";
  std::cout << "image in frame 2: " << to_text(apply_hom(f2, v2).row())
            << "\n";
  std::cout << "image in frame 1: " << to_text(apply_hom(f1, v1).row())
            << "\n";
  return verdict(expand_in_reference(apply_hom(f2, v2), e2),
                 expand_in_reference(apply_hom(f1, v1), e1));
}

int demo_polylinear(const PassiveTransform& g, const std::string& a_flag,
                    const std::string& u_flag, const std::string& v_flag) {
  const std::size_t n = g.dim();
  print_header("polylinear");
  if (a_flag.empty()) throw ConfigError("demo polylinear needs --a");
  const NcMatrix a = parse_matrix(a_flag);
  if (a.rows() != n) {
    throw ConfigError("--a must be " + std::to_string(n) + "x" +
                      std::to_string(n) + " to match --g, got " +
                      NcMatrix::shape_str(a));
  }
  const TensorPolyMap h1 = bilinear_from_matrix(a);
  const TensorPolyMap h2 = transform_polylinear(h1, g);
  const Basis e2(g.matrix());
  const CoordRow u2 = row_from_flag(u_flag, n, "--u");
  const CoordRow v2 = row_from_flag(v_flag, n, "--v");
  const CoordRow u1 = passive_coords_forward(g, u2);
  const CoordRow v1 = passive_coords_forward(g, v2);
  std::cout << "g = " << to_text(g.matrix()) << "\n";
  std::cout << "h1(u,v)[i] = sum_j u[i] * a(i,j) * v[j] with a = "
            << to_text(a) << "\n";
  std::cout << "h1 = " << to_text(h1) << "\n";
  std::cout << "transformation rule: every factor pair picks up g on the "
               "input side and inverse(g) on the output side\n";
  std::cout << "h2 = " << to_text(h2) << "\n";
  std::cout << "coordinates: u2 = " << to_text(u2.row())
            << ", v2 = " << to_text(v2.row()) << "\n";
  std::cout << "coordinate rule: u1 = u2 * g = " << to_text(u1.row())
            << ", v1 = v2 * g = " << to_text(v1.row()) << "\n";
  const CoordRow image2 = apply_polylinear(h2, {u2, v2});
  const CoordRow image1 = apply_polylinear(h1, {u1, v1});
  std::cout << "image in frame 2: " << to_text(image2.row()) << "\n";
  std::cout << "image in frame 1: " << to_text(image1.row()) << "\n";
  return verdict(expand_in_reference(image2, e2), image1);
}

int demo_skew(const PassiveTransform& g, const std::string& a_flag,
              const std::string& u_flag, const std::string& v_flag) {
  const std::size_t n = g.dim();
  print_header("skew");
  if (a_flag.empty()) throw ConfigError("demo skew needs --a");
  const NcMatrix a = parse_matrix(a_flag);
  if (a.rows() != n) {
    throw ConfigError("--a must be " + std::to_string(n) + "x" +
                      std::to_string(n) + " to match --g, got " +
                      NcMatrix::shape_str(a));
  }
  const TensorPolyMap h1 = bilinear_from_matrix(a);
  const TensorPolyMap h2 = transform_polylinear(h1, g);
  const Basis e2(g.matrix());
  const CoordRow u2 = row_from_flag(u_flag, n, "--u");
  const CoordRow v2 = row_from_flag(v_flag, n, "--v");
  const CoordRow u1 = passive_coords_forward(g, u2);
  const CoordRow v1 = passive_coords_forward(g, v2);
  std::cout << "g = " << to_text(g.matrix()) << "\n";
  std::cout << "h1 = " << to_text(h1) << "\n";
  std::cout << "antisymmetrized image: skew(h)(u,v) = (h(u,v) - h(v,u)) / 2\n";
  const CoordRow skew2 = skew_apply(h2, u2, v2);
  const CoordRow skew1 = skew_apply(h1, u1, v1);
  const CoordRow skew1_det = skew_apply_det(h1, u1, v1);
  std::cout << "skew image in frame 2: " << to_text(skew2.row()) << "\n";
  std::cout << "skew image in frame 1: " << to_text(skew1.row()) << "\n";
  std::cout << "detstar route in frame 1: " << to_text(skew1_det.row())
            << (skew1_det == skew1 ? " (agrees)" : " (DISAGREES)") << "\n";
  return verdict(expand_in_reference(skew2, e2), skew1);
}

int run_check(const SuiteConfig& cfg, const SuiteHooks& hooks,
              bool timing) {
  const SuiteReport report = run_suite(cfg, hooks);
  if (cfg.format == ReportFormat::json) {
    std::cout << render_json(report, timing);
  } else {
    std::cout << render_text(report, timing);
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int run_demo(const std::string& kind, const std::string& g_flag,
             const std::string& f_flag, const std::string& a_flag,
             const std::string& u_flag, const std::string& v_flag) {
  if (g_flag.empty()) throw ConfigError("demo needs --g");
  const PassiveTransform g(parse_matrix(g_flag));
  if (kind == "basis-change") return demo_basis_change(g, v_flag);
  if (kind == "endo") return demo_endo(g, f_flag, v_flag);
  if (kind == "polylinear") return demo_polylinear(g, a_flag, u_flag, v_flag);
  if (kind == "skew") return demo_skew(g, a_flag, u_flag, v_flag);
  throw ConfigError("unknown demo kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nccov: exact checks of coordinate-transformation laws for vector "
      "spaces over rational quaternions"};
  app.require_subcommand(1);

  std::string suite_name = "all";
  std::size_t dim = 3;
  std::size_t trials = 200;
  std::size_t arity = 2;
  std::size_t max_terms = 3;
  std::uint64_t seed = 0;
  std::string format_name = "json";
  bool timing = false;
  bool flip_product_order = false;

  CLI::App* check = app.add_subcommand(
      "check", "Run property suites on random instances and report");
  check->add_option("--suite", suite_name,
                    "matrix|vspace|transform|linear|polylinear|skew|geo|all");
  check->add_option("--dim", dim, "Largest space dimension drawn (1..8)");
  check->add_option("--trials", trials, "Trials per property (>= 1)");
  check->add_option("--arity", arity, "Polylinear map arity (1..3)");
  check->add_option("--max-terms", max_terms,
                    "Largest number of terms per tensor slot (>= 1)");
  check->add_option("--seed", seed, "Root seed; equal seeds, equal reports");
  check->add_option("--format", format_name, "json|text");
  check->add_flag("--timing", timing,
                  "Include elapsed wall time in the report (off by default "
                  "so equal configurations render byte-identical output)");
  check
      ->add_flag("--hook-flip-product-order", flip_product_order,
                 "Fault injection: contract scalar factors in the wrong "
                 "order inside the hook-aware properties; the run must fail")
      ->group("Self-test hooks");

  std::string kind;
  std::string g_flag;
  std::string f_flag;
  std::string a_flag;
  std::string u_flag;
  std::string v_flag;

  CLI::App* demo = app.add_subcommand(
      "demo", "Walk through one transformation law on concrete inputs");
  demo->add_option("--kind", kind, "basis-change|endo|polylinear|skew")
      ->required();
  demo->add_option("--g", g_flag,
                   "Passive transform, matrix text, e.g. \"i,0;0,1\"")
      ->required();
  demo->add_option("--f", f_flag, "Endomorphism matrix (demo endo)");
  demo->add_option("--a", a_flag,
                   "Middle-factor matrix of the bilinear map "
                   "(demo polylinear/skew)");
  demo->add_option("--u", u_flag, "First argument row (default all ones)");
  demo->add_option("--v", v_flag,
                   "Second argument / sample row (default all ones)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      SuiteConfig cfg;
      cfg.suite = suite_from_string(suite_name);
      cfg.dim = dim;
      cfg.trials = trials;
      cfg.arity = arity;
      cfg.max_terms = max_terms;
      cfg.seed = seed;
      cfg.format = format_from_string(format_name);
      SuiteHooks hooks;
      hooks.flip_product_order = flip_product_order;
      return run_check(cfg, hooks, timing);
    }
    return run_demo(kind, g_flag, f_flag, a_flag, u_flag, v_flag);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
