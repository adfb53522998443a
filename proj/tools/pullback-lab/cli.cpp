#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "pullback/complex_io.hpp"
#include "pullback/const_sigma.hpp"
#include "pullback/cubic_galois.hpp"
#include "pullback/error.hpp"
#include "pullback/maps_io.hpp"
#include "pullback/moduli_map.hpp"
#include "pullback/portrait.hpp"
#include "pullback/render.hpp"
#include "pullback/solver.hpp"
#include "report.hpp"

namespace pullback::cli {
namespace {

std::string points_text(std::vector<SpherePoint> points) {
  sort_points(points);
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ", ";
    s += points[i].is_infinite() ? "inf" : format_complex_short(points[i].value(), 8);
  }
  return s + "}";
}

std::string vector_text(const ComplexVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ";";
    s += format_complex(v[i]);
  }
  return s;
}

std::string poly_text(const ComplexPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) s += " ";
    s += format_complex_short(p[i], 12);
  }
  return s;
}

// ----------------------------------------------------------------- portrait

int run_portrait_validate(const std::string& path, std::ostream& out) {
  const RamificationPortrait portrait = load_portrait(path);
  const ValidationReport v = validate(portrait);
  Report report("portrait validate: " + path);
  report.line("degree " + std::to_string(v.degree) + ", " +
              (v.polynomial ? "polynomial" : "rational") + ", " +
              std::to_string(v.marked_count) + " marked points");
  std::string pc;
  for (const auto& l : v.postcritical) pc += (pc.empty() ? "" : ", ") + l;
  report.line("postcritical set {" + pc + "}, n = " + std::to_string(v.n));
  report.line(std::string("all critical points periodic: ") + (v.all_critical_periodic ? "yes" : "no"));
  report.line(std::string("finite dynamics is a permutation: ") + (v.is_permutation ? "yes" : "no"));
  report.check("structure", "portrait structure and multiplicity count", true);
  std::istringstream kv(v.to_string());
  for (std::string l; std::getline(kv, l);) {
    const auto eq = l.find('=');
    if (eq != std::string::npos) report.value(l.substr(0, eq), l.substr(eq + 1));
  }
  report.print(out);
  return kPassed;
}

// ----------------------------------------------------------------------- gf

// Coordinate k belongs to the k-th finite label; the first is pinned at 0.
std::string ordering_text(const GfMap& gf) {
  std::string text;
  for (std::size_t k = 0; k < gf.labels().size(); ++k) {
    text += (k == 0 ? "" : " ") + std::string("a") + std::to_string(k) + "=" + gf.labels()[k];
  }
  return text;
}

int run_gf_eval(const std::string& path, const std::string& point, std::ostream& out) {
  const GfMap gf = GfMap::build(load_portrait(path));
  const ModuliVector a{parse_complex_list(point)};
  if (a.size() != gf.dimension()) {
    throw InputError("gf eval: expected " + std::to_string(gf.dimension()) + " coordinates, got " +
                     std::to_string(a.size()));
  }
  const ModuliVector image = gf.eval(a);
  Report report("gf eval: " + path);
  report.line("coordinate order " + ordering_text(gf) + " (a0 pinned at 0)");
  report.line("point  a = (" + vector_text(a.coords) + ")");
  report.line("image  G(a) = (" + vector_text(image.coords) + ")");
  report.line("distance to the forbidden locus " + format_double(delta_distance(a.coords)));
  report.value("dimension", std::to_string(gf.dimension()));
  report.value("ordering", ordering_text(gf));
  report.value("image", vector_text(image.coords));
  report.value("delta_distance", format_double(delta_distance(a.coords)));
  report.print(out);
  return kPassed;
}

int run_gf_jac_check(const std::string& path, std::size_t samples, std::uint64_t seed, double tol,
                     std::ostream& out) {
  const GfMap gf = GfMap::build(load_portrait(path));
  const JacobianCheck c = jacobian_identity_check(gf, samples, seed);
  Report report("gf jac-check: " + path);
  report.line("det of the Jacobian divided by prod (a_i - a_j)^(m_i + m_j) over " +
              std::to_string(c.samples) + " samples");
  report.line("constant " + format_complex_short(c.constant, 10));
  report.check("constant_ratio", "ratio constant within relative spread " + format_double(tol),
               c.relative_spread < tol, "spread " + format_double(c.relative_spread));
  report.check("degree", "degree of the product equals (n+1)(d-1)",
               c.j_degree == c.expected_degree,
               std::to_string(c.j_degree) + " vs " + std::to_string(c.expected_degree));
  report.value("samples", std::to_string(c.samples));
  report.value("rng_seed", std::to_string(seed));
  report.value("tol", format_double(tol));
  report.value("constant", format_complex(c.constant));
  report.value("relative_spread", format_double(c.relative_spread));
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

int run_gf_fixed_points(const std::string& path, const FixedPointOptions& opt, std::ostream& out) {
  const RamificationPortrait portrait = load_portrait(path);
  const GfMap gf = GfMap::build(portrait);
  const FixedPointReport fp = newton_fixed_points(gf, opt, &portrait);
  Report report("gf fixed-points: " + path);
  report.line(std::to_string(opt.seeds) + " seeds, " + std::to_string(fp.converged_seeds) +
              " converged, " + std::to_string(fp.failed_seeds) + " failed");
  report.line("coordinate order " + ordering_text(gf) + " (a0 pinned at 0)");
  report.value("ordering", ordering_text(gf));
  std::size_t certified = 0;
  std::size_t index = 0;
  for (const auto& r : fp.records) {
    const std::string tag = "fixed." + std::to_string(index++);
    std::string text = "a = (" + vector_text(r.a.coords) + ") residual " + format_double(r.residual);
    if (r.on_delta) {
      report.line(text + " [forbidden locus]");
      report.value(tag + ".on_delta", "true");
      continue;
    }
    report.line(text);
    report.line("  F(z) coefficients: " + poly_text(r.recovered_poly));
    report.line(std::string("  certified: ") + (r.certified ? "yes" : "no") + ", orbit deviation " +
                format_double(r.certification_deviation));
    certified += r.certified ? 1 : 0;
    report.value(tag + ".on_delta", "false");
    report.value(tag + ".a", vector_text(r.a.coords));
    report.value(tag + ".poly", poly_text(r.recovered_poly));
    report.value(tag + ".certified", r.certified ? "true" : "false");
  }
  report.check("found", "at least one fixed point off the forbidden locus", fp.off_delta_count() > 0,
               std::to_string(fp.off_delta_count()) + " found");
  report.check("certified", "every off-locus fixed point realizes the portrait",
               certified == fp.off_delta_count(),
               std::to_string(certified) + "/" + std::to_string(fp.off_delta_count()));
  report.value("seeds", std::to_string(opt.seeds));
  report.value("rng_seed", std::to_string(opt.rng_seed));
  report.value("tol", format_double(opt.tol));
  report.value("off_delta", std::to_string(fp.off_delta_count()));
  report.value("on_delta", std::to_string(fp.records.size() - fp.off_delta_count()));
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

// ---------------------------------------------------------------------- pcf

int run_pcf_certify(const std::string& path, const std::string& poly, double tol, std::ostream& out) {
  const RamificationPortrait portrait = load_portrait(path);
  const ComplexPoly f(parse_complex_list(poly));
  if (f.degree() < 2) throw InputError("pcf certify: --poly must have degree at least 2");
  const CertificationReport c = certify_pcf(f, portrait, tol);
  Report report("pcf certify: " + path);
  report.line("polynomial coefficients (ascending): " + poly_text(f));
  for (const auto& o : c.orbits) {
    report.line("critical point " + format_sphere_point(o.critical_point) + " (multiplicity " +
                std::to_string(o.multiplicity) + "): tail " + std::to_string(o.tail_length) +
                ", cycle " + std::to_string(o.cycle_length) + ", deviation " +
                format_double(o.deviation));
  }
  if (!c.diagnostics.empty()) report.line(c.diagnostics);
  report.check("realizes_portrait", "critical orbits close and match the portrait", c.certified);
  report.value("tol", format_double(tol));
  report.value("max_deviation", format_double(c.max_deviation));
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

// -------------------------------------------------------------------- cubic

int run_cubic_verify(std::size_t samples, std::uint64_t seed, double tol, std::ostream& out) {
  const cubic::SampleSweep s = cubic::sweep(samples, seed, tol);
  const cubic::PreimageReport p = cubic::preimages_of_cube_roots(tol);
  Report report("cubic verify");
  report.line(std::to_string(s.used) + " parameters checked, " + std::to_string(s.excluded) +
              " skipped near the degenerate set");
  report.check("critical_structure", "critical points {1, w, w-bar, alpha^2} with 1 fixed and w, w-bar swapped",
               s.max_structure_residual <= tol, "max residual " + format_double(s.max_structure_residual));
  report.check("diagram", "F_alpha(alpha^2) matches the critical value map and alpha is recovered",
               s.max_diagram_residual <= tol, "max residual " + format_double(s.max_diagram_residual));
  report.check("square_preimages", "alpha^2 in {1, w, w-bar} exactly at the sixth roots of unity",
               p.x_set_matches, "residual " + format_double(p.x_set_residual));
  report.check("critical_value_preimages", "critical value in {1, w, w-bar} exactly at the sixth roots of unity",
               p.y_set_matches, "residual " + format_double(p.y_set_residual));
  report.check("critical_value_branching", "critical values of the critical value map are {1, w, w-bar}",
               p.y_critical_values_match, points_text(p.y_critical_values));
  std::string mult;
  for (const auto& q : p.y_preimages) {
    mult += (mult.empty() ? "" : " ") + format_sphere_point(q.point) + ":" + std::to_string(q.multiplicity);
  }
  report.line("critical value map multiplicities over {1, w, w-bar}: " + mult);
  report.value("samples", std::to_string(samples));
  report.value("rng_seed", std::to_string(seed));
  report.value("tol", format_double(tol));
  report.value("used", std::to_string(s.used));
  report.value("excluded", std::to_string(s.excluded));
  report.value("critical_value_preimage_count", std::to_string(p.y_total_count));
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

int run_cubic_local_degree(double radius, std::ostream& out) {
  const cubic::LocalDegreeReport r = cubic::local_degree_at_basepoint(radius);
  Report report("cubic local-degree");
  report.line("basepoint branch x(y) sampled on circles around y = 0 of radius " + format_double(radius));
  report.line("fit |x| ~ C |y|^k: k = " + format_double(r.exponent) + ", C = " + format_double(r.coefficient));
  report.line("mean x / y^2 = " + format_complex_short(r.mean_ratio, 8) + ", winding " +
              std::to_string(r.winding));
  report.check("local_degree", "local degree two with leading coefficient 1/4", r.passed,
               "tolerance 1e-3");
  report.value("radius", format_double(radius));
  report.value("exponent", format_double(r.exponent));
  report.value("coefficient", format_double(r.coefficient));
  report.value("winding", std::to_string(r.winding));
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

// --------------------------------------------------------------- constsigma

void add_certificate(Report& report, const CertificateReport& c) {
  report.line("critical values of s: " + points_text(c.s_critical_values));
  report.line("critical values of g: " + points_text(c.g_critical_values));
  report.line("g(A): " + points_text(c.g_of_marked));
  report.line("s^-1(A): " + points_text(c.s_preimage_of_marked));
  for (const InclusionCheck* inc : {&c.s_values_in_marked, &c.bound_set_in_preimage}) {
    report.check(inc == &c.s_values_in_marked ? "s_values_in_A" : "bound_set_in_preimage", inc->name,
                 inc->holds,
                 inc->offending ? "offending point " + format_sphere_point(*inc->offending) : "");
  }
  report.line("B = V_g and g(A): " + points_text(c.bound_set));
  report.line("composite critical values: " + points_text(c.composite_critical_values));
  report.check("critical_values_two_ways", "critical values of g o s equal V_g and g(V_s)",
               c.critical_values_agree);
  report.check("postcritical_closed", "postcritical set of g o s is finite", c.postcritical.closed,
               c.postcritical.diagnostics);
  report.line("P_f: " + points_text(c.postcritical.points) + " (" +
              std::to_string(c.postcritical.points.size()) + " points)");
  report.check("lower_sandwich", c.lower_sandwich.name, c.lower_sandwich.holds);
  report.check("upper_sandwich", c.upper_sandwich.name, c.upper_sandwich.holds);
  report.line("dimension of the pullback image at most |A| - 3 = " + std::to_string(c.dimension_bound));
  report.line(c.verdict);
  report.value("tol", format_double(c.tol));
  report.value("postcritical_count", std::to_string(c.postcritical.points.size()));
  report.value("postcritical", points_text(c.postcritical.points));
  report.value("dimension_bound", std::to_string(c.dimension_bound));
  report.value("verdict", c.verdict);
}

int parse_positive_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < 1) {
    throw InputError(what + ": expected a positive integer, got '" + text + "'");
  }
  return v;
}

int run_constsigma_check(const std::string& example, const std::string& custom, double tol,
                         std::ostream& out) {
  if (example.empty() == custom.empty()) {
    throw InputError("constsigma check: give exactly one of --example or --custom");
  }
  Report report("constsigma check: " + (custom.empty() ? example : custom));
  DecompositionInstance instance;
  std::optional<SkinnyFamily> skinny;
  if (!custom.empty()) {
    instance = load_decomposition(custom);
  } else if (example == "quartic") {
    instance = example_quartic();
  } else if (example.rfind("family:", 0) == 0) {
    const int n = parse_positive_int(example.substr(7), "family");
    if (n < 2) throw InputError("family: n must be at least 2");
    instance = example_family(n);
  } else if (example.rfind("skinny:", 0) == 0) {
    const std::string rest = example.substr(7);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw InputError("skinny: expected skinny:<n>,<k>");
    skinny = skinny_family(parse_positive_int(rest.substr(0, comma), "skinny n"),
                           parse_positive_int(rest.substr(comma + 1), "skinny k"), tol);
    instance = skinny->instance;
  } else {
    throw InputError("constsigma check: unknown example '" + example +
                     "' (expected quartic, family:<n> or skinny:<n>,<k>)");
  }
  const CertificateReport c = check_conditions(instance, tol);
  add_certificate(report, c);
  if (skinny) {
    report.check("preimage_full", "s^-1(A_m) = A_n", skinny->preimage_is_full_set);
    report.check("bound_full", "V_g and g(A_n) give A_n", skinny->bound_set_is_full_set);
    report.check("postcritical_full", skinny->k > 1 ? "P_f = A_n" : "P_f = A_n without 0 (s is the identity)",
                 same_set(c.postcritical.points, skinny->expected_postcritical, tol));
    report.line("Teichmuller dimension " + std::to_string(skinny->teichmuller_dimension) +
                ", image dimension " + std::to_string(skinny->image_dimension) + " (quoted), codimension " +
                std::to_string(skinny->codimension));
    report.check("codimension", "codimension equals (k-1) m",
                 skinny->codimension == skinny->codimension_formula,
                 std::to_string(skinny->codimension_formula));
    report.value("teichmuller_dimension", std::to_string(skinny->teichmuller_dimension));
    report.value("image_dimension", std::to_string(skinny->image_dimension));
    report.value("codimension", std::to_string(skinny->codimension));
  }
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

// ------------------------------------------------------------------- render

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct RenderArgs {
  std::string map = "preset:fig1";
  std::string size;
  std::string viewport;
  int max_iter = 500;
  double tol = 1e-6;
  std::string out_path;
};

int run_render_julia(const RenderArgs& args, std::ostream& out) {
  RenderPreset preset;
  if (args.map.rfind("preset:", 0) == 0) {
    preset = render_preset(args.map.substr(7));
  } else if (args.map.rfind("custom:", 0) == 0) {
    preset.name = "custom";
    preset.map = load_rational_map(args.map.substr(7));
    if (preset.map.degree() < 2) throw InputError("render: custom map must have degree at least 2");
  } else {
    throw InputError("render: --map must be preset:<name> or custom:<file>");
  }
  if (!args.size.empty()) {
    const auto x = args.size.find('x');
    if (x == std::string::npos) throw InputError("render: --size must be WxH");
    preset.viewport.pixel_width = parse_positive_int(args.size.substr(0, x), "width");
    preset.viewport.pixel_height = parse_positive_int(args.size.substr(x + 1), "height");
  }
  if (!args.viewport.empty()) {
    const auto last = args.viewport.rfind(',');
    if (last == std::string::npos) throw InputError("render: --viewport must be cx,cy,width");
    preset.viewport.center = parse_complex(args.viewport.substr(0, last));
    try {
      std::size_t used = 0;
      preset.viewport.width = std::stod(args.viewport.substr(last + 1), &used);
      if (used != args.viewport.size() - last - 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("render: bad viewport width in '" + args.viewport + "'");
    }
  }
  preset.viewport.validate();

  const auto cycles = find_attracting_cycles(preset.map);
  const BasinImage image = render_basins(preset.map, cycles, preset.viewport, args.max_iter, args.tol);
  const Palette palette = palette_for(cycles, preset.colors);
  const std::string bytes = encode_ppm(image, palette);

  Report report("render julia: " + preset.name);
  std::string cycle_list;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    std::vector<SpherePoint> pts = cycles[k].points;
    const std::string text = points_text(pts);
    cycle_list += (k ? " " : "") + text;
    const auto count = std::count(image.labels.begin(), image.labels.end(), static_cast<int>(k));
    report.line("attractor " + std::to_string(k) + " " + text + ": multiplier modulus " +
                format_double(std::abs(cycles[k].multiplier)) + ", " + std::to_string(count) + " pixels");
  }
  report.line("unresolved fraction " + format_double(image.unresolved_fraction()));
  report.check("attractors", "at least one attracting cycle", !cycles.empty());
  report.value("size", std::to_string(image.width) + "x" + std::to_string(image.height));
  report.value("max_iter", std::to_string(args.max_iter));
  report.value("tol", format_double(args.tol));
  report.value("attractors", cycle_list);
  report.value("unresolved_fraction", format_double(image.unresolved_fraction()));
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  report.value("image_fnv1a", hash);
  if (!args.out_path.empty()) {
    write_image(image, palette, args.out_path);
    report.value("out", args.out_path);
  }
  report.print(out);
  return report.passed() ? kPassed : kCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification tools for Thurston pullback constructions", "pullback-lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // portrait
  auto* portrait = app.add_subcommand("portrait", "Ramification portraits")->require_subcommand(1);
  std::string portrait_path;
  auto* validate_cmd = portrait->add_subcommand("validate", "Check a portrait file");
  validate_cmd->add_option("portrait", portrait_path, "Portrait JSON file")->required();
  bind(validate_cmd, [&] { return run_portrait_validate(portrait_path, out); });

  // gf
  auto* gf = app.add_subcommand("gf", "Moduli-space endomorphism of a periodic portrait")->require_subcommand(1);
  std::string point;
  auto* eval_cmd = gf->add_subcommand("eval", "Evaluate the endomorphism at a point");
  eval_cmd->add_option("portrait", portrait_path, "Portrait JSON file")->required();
  eval_cmd->add_option("--point", point, "Coordinates a_1;...;a_{n+1} as re,im")->required();
  bind(eval_cmd, [&] { return run_gf_eval(portrait_path, point, out); });

  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double jac_tol = 1e-6;
  auto* jac_cmd = gf->add_subcommand("jac-check", "Jacobian determinant against the closed-form product");
  jac_cmd->add_option("portrait", portrait_path, "Portrait JSON file")->required();
  jac_cmd->add_option("--samples", samples, "Number of sample points")->check(CLI::PositiveNumber);
  jac_cmd->add_option("--rng-seed", seed, "Sampling seed");
  jac_cmd->add_option("--tol", jac_tol, "Allowed relative spread")->check(CLI::PositiveNumber);
  bind(jac_cmd, [&] { return run_gf_jac_check(portrait_path, samples, seed, jac_tol, out); });

  FixedPointOptions fp_opt;
  auto* fp_cmd = gf->add_subcommand("fixed-points", "Newton search for fixed points and recovery");
  fp_cmd->add_option("portrait", portrait_path, "Portrait JSON file")->required();
  fp_cmd->add_option("--seeds", fp_opt.seeds, "Number of Newton seeds")->check(CLI::PositiveNumber);
  fp_cmd->add_option("--tol", fp_opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  fp_cmd->add_option("--rng-seed", fp_opt.rng_seed, "Seed generator state");
  fp_cmd->add_option("--max-iter", fp_opt.max_iter, "Newton iterations per seed")->check(CLI::PositiveNumber);
  bind(fp_cmd, [&] { return run_gf_fixed_points(portrait_path, fp_opt, out); });

  // pcf
  auto* pcf = app.add_subcommand("pcf", "Postcritically finite certification")->require_subcommand(1);
  std::string poly;
  double pcf_tol = 1e-9;
  auto* certify_cmd = pcf->add_subcommand("certify", "Check that a polynomial realizes a portrait");
  certify_cmd->add_option("portrait", portrait_path, "Portrait JSON file")->required();
  certify_cmd->add_option("--poly", poly, "Ascending coefficients, e.g. \"c,0 0 1\"")->required();
  certify_cmd->add_option("--tol", pcf_tol, "Orbit closure tolerance")->check(CLI::PositiveNumber);
  bind(certify_cmd, [&] { return run_pcf_certify(portrait_path, poly, pcf_tol, out); });

  // cubic
  auto* cubic_cmd = app.add_subcommand("cubic", "The one-parameter cubic family")->require_subcommand(1);
  std::size_t cubic_samples = 1000;
  double cubic_tol = 1e-9;
  auto* verify_cmd = cubic_cmd->add_subcommand("verify", "Critical structure and parameter recovery");
  verify_cmd->add_option("--samples", cubic_samples, "Sampled parameters")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--rng-seed", seed, "Sampling seed");
  verify_cmd->add_option("--tol", cubic_tol, "Residual tolerance")->check(CLI::PositiveNumber);
  bind(verify_cmd, [&] { return run_cubic_verify(cubic_samples, seed, cubic_tol, out); });

  double radius = 1e-3;
  auto* ld_cmd = cubic_cmd->add_subcommand("local-degree", "Local degree of the basepoint branch");
  ld_cmd->add_option("--radius", radius, "Sampling radius in (0, 0.1]")->check(CLI::Range(1e-8, 0.1));
  bind(ld_cmd, [&] { return run_cubic_local_degree(radius, out); });

  // constsigma
  auto* cs = app.add_subcommand("constsigma", "Decomposition certificates")->require_subcommand(1);
  std::string example;
  std::string custom;
  double cs_tol = 1e-9;
  auto* check_cmd = cs->add_subcommand("check", "Check the decomposition hypotheses");
  auto* ex_opt = check_cmd->add_option("--example", example, "quartic | family:<n> | skinny:<n>,<k>");
  check_cmd->add_option("--custom", custom, "Maps file with s, g and A")->excludes(ex_opt);
  check_cmd->add_option("--tol", cs_tol, "Set membership tolerance")->check(CLI::PositiveNumber);
  bind(check_cmd, [&] { return run_constsigma_check(example, custom, cs_tol, out); });

  // render
  auto* render = app.add_subcommand("render", "Basin pictures")->require_subcommand(1);
  RenderArgs render_args;
  auto* julia_cmd = render->add_subcommand("julia", "Render attracting basins to a PPM image");
  julia_cmd->add_option("--map", render_args.map, "preset:fig1|fig3|fig4 or custom:<file>");
  julia_cmd->add_option("--size", render_args.size, "WxH");
  julia_cmd->add_option("--viewport", render_args.viewport, "cx,cy,width");
  julia_cmd->add_option("--max-iter", render_args.max_iter, "Iteration budget")->check(CLI::NonNegativeNumber);
  julia_cmd->add_option("--tol", render_args.tol, "Capture radius (chordal)")->check(CLI::PositiveNumber);
  julia_cmd->add_option("--out", render_args.out_path, "Output image path");
  bind(julia_cmd, [&] { return run_render_julia(render_args, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPassed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPassed;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const HypothesisError& e) {
    err << "unsupported input: " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "computation failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace pullback::cli
