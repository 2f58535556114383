// ufmt command-line front end: radius calculators, coefficient membership
// checks, harmonic-mean combination, family diagnostics, disk sweeps, and
// the conjecture evidence harness. Emits JSON (default) or CSV; identical
// invocations produce byte-identical output.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufmt/catalog.hpp"
#include "ufmt/classes.hpp"
#include "ufmt/combine.hpp"
#include "ufmt/family.hpp"
#include "ufmt/io.hpp"
#include "ufmt/kernels.hpp"
#include "ufmt/radius.hpp"
#include "ufmt/scan.hpp"
#include "ufmt/series.hpp"

namespace {

using nlohmann::json;
using namespace ufmt;

struct RunConfig {
  int order = kDefaultOrder;       // truncation order, >= 8
  int angular = kDefaultAngularSamples;
  std::string format = "json";     // json | csv
  long long seed = 0;              // recorded for reproducibility
  std::string radii;               // default radius grid, comma list
};

// Fixed numeric policy, also documented in the README: closed-form
// comparisons 1e-12, assembled identities 1e-10, bisection 1e-9.

double parse_double_strict(std::string_view tok, const std::string& what) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::invalid_argument(what + ": cannot parse number '" +
                                std::string(tok) + "'");
  }
  return v;
}

// Tokens separated by commas; each token is `re` or `re:im`.
std::vector<Complex> parse_complex_list(const std::string& text,
                                        const std::string& what) {
  std::vector<Complex> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument(what + ": empty entry");
    const std::size_t colon = tok.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(parse_double_strict(tok, what), 0.0);
    } else {
      out.emplace_back(parse_double_strict(tok.substr(0, colon), what),
                       parse_double_strict(tok.substr(colon + 1), what));
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text,
                                    const std::string& what) {
  std::vector<double> out;
  for (const Complex& c : parse_complex_list(text, what)) {
    if (c.imag() != 0.0) throw std::invalid_argument(what + ": must be real");
    out.push_back(c.real());
  }
  return out;
}

// `lo:hi:step`, endpoints included up to a half-step slack.
std::vector<double> parse_grid(const std::string& text,
                               const std::string& what) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::invalid_argument(what + ": expected lo:hi:step");
  }
  const double lo = parse_double_strict(text.substr(0, c1), what);
  const double hi = parse_double_strict(text.substr(c1 + 1, c2 - c1 - 1), what);
  const double step = parse_double_strict(text.substr(c2 + 1), what);
  if (!(step > 0.0) || hi < lo) {
    throw std::invalid_argument(what + ": need step > 0 and hi >= lo");
  }
  std::vector<double> out;
  for (double v = lo; v <= hi + step / 2; v += step) out.push_back(v);
  return out;
}

struct FnSource {
  std::string coeffs;
  std::string file;
  std::string catalog;
};

DiskFunction resolve_function(const FnSource& src, const RunConfig& cfg) {
  const int given = (src.coeffs.empty() ? 0 : 1) + (src.file.empty() ? 0 : 1) +
                    (src.catalog.empty() ? 0 : 1);
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --coeffs, --file, --catalog is required");
  }
  if (!src.coeffs.empty()) {
    return DiskFunction(
        CoefficientSeries(parse_complex_list(src.coeffs, "--coeffs")),
        "coeffs");
  }
  if (!src.file.empty()) {
    return DiskFunction(read_series_file(src.file), src.file);
  }
  const CatalogEntry* e = find_entry(src.catalog);
  if (e == nullptr) {
    throw std::invalid_argument("unknown catalog entry '" + src.catalog + "'");
  }
  return e->make_series(cfg.order);
}

void add_fn_source(CLI::App* cmd, FnSource& src) {
  cmd->add_option("--coeffs", src.coeffs,
                  "inline phi coefficients, e.g. \"1,0,1\" (re or re:im)");
  cmd->add_option("--file", src.file, "ufmt1 coefficient file");
  cmd->add_option("--catalog", src.catalog, "built-in catalog entry name");
}

void validate_config(const RunConfig& cfg) {
  if (cfg.order < 8) throw std::invalid_argument("order must be >= 8");
  if (cfg.angular < 8) throw std::invalid_argument("angular must be >= 8");
  if (cfg.format != "json" && cfg.format != "csv") {
    throw std::invalid_argument("format must be json or csv");
  }
}

RunConfig load_config() {
  RunConfig cfg;
  if (const char* path = std::getenv("UFMT_CONFIG")) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string(path) + ": cannot open");
    json j = json::parse(in);
    cfg.order = j.value("order", cfg.order);
    cfg.angular = j.value("angular", cfg.angular);
    cfg.format = j.value("format", cfg.format);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("radii")) {
      std::string joined;
      for (const auto& r : j.at("radii")) {
        if (!joined.empty()) joined += ",";
        joined += format_double(r.get<double>());
      }
      cfg.radii = joined;
    }
    validate_config(cfg);
  }
  return cfg;
}

std::string_view status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Certified: return "Certified";
    case VerdictStatus::Refuted: return "Refuted";
    case VerdictStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string_view theorem_name(RadiusTheorem t) {
  switch (t) {
    case RadiusTheorem::T1_U: return "t1";
    case RadiusTheorem::T1_Starlike: return "t1-starlike";
    case RadiusTheorem::T2a: return "t2a";
    case RadiusTheorem::T2b: return "t2b";
    case RadiusTheorem::T3: return "t3";
    case RadiusTheorem::T4: return "t4";
    case RadiusTheorem::Bisection: return "bisect";
  }
  return "?";
}

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

// CSV: fixed column order, header row, 17-digit doubles.
void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::cout << (i ? "," : "") << header[i];
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::cout << (i ? "," : "") << row[i];
    }
    std::cout << "\n";
  }
}

std::string fd(double v) { return format_double(v); }

// ---- radius ----

struct RadiusArgs {
  double lambda = 1.0;
  std::string b1c1;
  std::string lambdas;
  double target = 1.0;
  std::string second_derivs;
  FnSource fn;
};

void emit_radius(const RadiusResult& r, const RunConfig& cfg) {
  if (cfg.format == "csv") {
    print_csv({"theorem", "radius", "lambda", "sufficient_only"},
              {{std::string(theorem_name(r.theorem)), fd(r.radius),
                fd(r.lambda_out), r.sufficient_only ? "true" : "false"}});
    return;
  }
  json j{{"command", "radius"},
         {"theorem", theorem_name(r.theorem)},
         {"radius", r.radius},
         {"lambda", r.lambda_out},
         {"sufficient_only", r.sufficient_only}};
  std::cout << j.dump() << "\n";
}

void setup_radius(CLI::App& app, RunConfig& cfg, RadiusArgs& a) {
  CLI::App* radius = app.add_subcommand("radius", "sufficient-radius calculators");
  radius->require_subcommand(1);

  CLI::App* t1 = radius->add_subcommand("t1", "U(lambda) radius sqrt(l/(1+l))");
  t1->add_option("--lambda", a.lambda, "lambda in (0,1]")->required();
  t1->callback([&] { emit_radius(radius_t1(LambdaParam(a.lambda)), cfg); });

  CLI::App* t1s = radius->add_subcommand(
      "t1-starlike", "starlike radius from b1+c1 = -F''(0)");
  t1s->add_option("--b1c1", a.b1c1, "complex b1+c1 as re or re:im")->required();
  t1s->callback([&] {
    const auto v = parse_complex_list(a.b1c1, "--b1c1");
    if (v.size() != 1) throw std::invalid_argument("--b1c1: one value");
    emit_radius(radius_t1_starlike(v[0]), cfg);
  });

  CLI::App* t2a = radius->add_subcommand("t2a", "m-function U(lambda) radius");
  t2a->add_option("--lambda", a.lambda, "lambda in (0,1]")->required();
  t2a->callback([&] { emit_radius(radius_t2a(LambdaParam(a.lambda)), cfg); });

  CLI::App* t2b = radius->add_subcommand(
      "t2b", "m-function starlike radius from second derivatives");
  t2b->add_option("--second-derivs", a.second_derivs,
                  "comma list of f_k''(0), re or re:im")
      ->required();
  t2b->callback([&] {
    const auto v = parse_complex_list(a.second_derivs, "--second-derivs");
    emit_radius(radius_t2b(v), cfg);
  });

  for (const char* name : {"t3", "t4"}) {
    CLI::App* t = radius->add_subcommand(
        name, std::string(name) == "t3"
                  ? "two U(lambda_k) inputs -> U(target) radius"
                  : "m U(lambda_k) inputs -> U(target) radius");
    t->add_option("--lambdas", a.lambdas, "comma list of lambda_k")->required();
    t->add_option("--target", a.target, "target lambda")->required();
    const bool exactly_two = std::string(name) == "t3";
    t->callback([&, exactly_two] {
      const auto vals = parse_real_list(a.lambdas, "--lambdas");
      if (exactly_two && vals.size() != 2) {
        throw std::invalid_argument("t3 takes exactly two lambdas");
      }
      std::vector<LambdaParam> ls;
      for (double v : vals) ls.emplace_back(v);
      emit_radius(radius_t3_t4(ls, LambdaParam(a.target)), cfg);
    });
  }

  CLI::App* bisect = radius->add_subcommand(
      "bisect", "largest r with sum (n-1)|b_n| r^n <= lambda");
  add_fn_source(bisect, a.fn);
  bisect->add_option("--lambda", a.lambda, "target lambda")->required();
  bisect->callback([&] {
    const DiskFunction f = resolve_function(a.fn, cfg);
    emit_radius(radius_bisect(f, LambdaParam(a.lambda)), cfg);
  });
}

// ---- check ----

struct CheckArgs {
  FnSource fn;
  std::string test = "all";
  double lambda = 1.0;
  double tail = 0.0;
};

void setup_check(CLI::App& app, RunConfig& cfg, CheckArgs& a) {
  CLI::App* check =
      app.add_subcommand("check", "coefficient membership tests");
  add_fn_source(check, a.fn);
  check->add_option("--test", a.test,
                    "u-sufficient | starlike | u-necessary | area | lemma2 | all");
  check->add_option("--lambda", a.lambda, "lambda for the U tests");
  check->add_option("--tail", a.tail, "analytic tail bound, default 0");
  check->callback([&] {
    const DiskFunction f = resolve_function(a.fn, cfg);
    std::vector<MembershipVerdict> verdicts;
    const bool all = a.test == "all";
    if (all || a.test == "u-sufficient") {
      verdicts.push_back(test_u_sufficient(f, LambdaParam(a.lambda), a.tail));
    }
    if (all || a.test == "starlike") {
      verdicts.push_back(test_starlike_sufficient(f, a.tail));
    }
    if (all || a.test == "u-necessary") {
      verdicts.push_back(test_u_necessary(f, LambdaParam(a.lambda)));
    }
    if (all || a.test == "area") {
      verdicts.push_back(test_area_necessary(f));
    }
    if (all || a.test == "lemma2") {
      verdicts.push_back(test_lemma2_nonneg(f, a.tail));
    }
    if (verdicts.empty()) {
      throw std::invalid_argument("unknown test '" + a.test + "'");
    }
    if (cfg.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : verdicts) {
        rows.push_back({v.test_name, std::string(status_name(v.status)),
                        fd(v.sum_value), fd(v.threshold),
                        v.tail_bound ? fd(*v.tail_bound) : "unavailable"});
      }
      print_csv({"test", "status", "sum", "threshold", "tail_bound"}, rows);
      return;
    }
    json results = json::array();
    for (const auto& v : verdicts) {
      json r{{"test", v.test_name},
             {"status", status_name(v.status)},
             {"sum", v.sum_value},
             {"threshold", v.threshold}};
      if (v.tail_bound) {
        r["tail_bound"] = *v.tail_bound;
      } else {
        r["tail_bound"] = nullptr;
      }
      results.push_back(std::move(r));
    }
    json j{{"command", "check"}, {"label", f.label()}, {"results", results}};
    std::cout << j.dump() << "\n";
  });
}

// ---- combine ----

struct CombineArgs {
  std::string catalog;  // comma list
  std::string files;    // comma list
  double rescale_r = 1.0;
  bool screen = false;
  double grid_radius = 0.9;
  std::string out_file;
  std::string emit = "coeffs";
};

void setup_combine(CLI::App& app, RunConfig& cfg, CombineArgs& a) {
  CLI::App* combine =
      app.add_subcommand("combine", "harmonic mean of normalized functions");
  combine->add_option("--catalog", a.catalog, "comma list of catalog names");
  combine->add_option("--files", a.files, "comma list of ufmt1 files");
  combine->add_option("--rescale", a.rescale_r, "rescale radius in (0,1]");
  combine->add_flag("--screen", a.screen, "also run the denominator screen");
  combine->add_option("--grid-radius", a.grid_radius,
                      "screen grid radius in (0,1)");
  combine->add_option("--out", a.out_file, "write phi to a ufmt1 file");
  combine->add_option("--emit", a.emit, "coeffs (default) | none")
      ->check(CLI::IsMember({"coeffs", "none"}));
  combine->callback([&] {
    std::vector<DiskFunction> fns;
    auto split_names = [](const std::string& text) {
      std::vector<std::string> names;
      std::size_t pos = 0;
      while (pos <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        names.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (comma == text.size()) break;
      }
      return names;
    };
    for (const std::string& name : split_names(a.catalog)) {
      const CatalogEntry* e = find_entry(name);
      if (e == nullptr) {
        throw std::invalid_argument("unknown catalog entry '" + name + "'");
      }
      fns.push_back(e->make_series(cfg.order));
    }
    for (const std::string& path : split_names(a.files)) {
      fns.emplace_back(read_series_file(path), path);
    }
    if (fns.empty()) {
      throw std::invalid_argument("combine: no input functions");
    }
    CombineInput input(std::move(fns));
    const DiskFunction mean = a.rescale_r == 1.0
                                  ? harmonic_mean(input)
                                  : rescaled_combination(input, a.rescale_r);
    std::optional<ZeroScreenReport> screen;
    if (a.screen) {
      screen = screen_denominator(input, a.grid_radius, cfg.angular);
    }
    if (!a.out_file.empty()) write_series_file(a.out_file, mean.phi());

    if (cfg.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      const auto cs = mean.phi().coeffs();
      if (a.emit == "coeffs") {
        for (std::size_t n = 0; n < cs.size(); ++n) {
          rows.push_back(
              {std::to_string(n), fd(cs[n].real()), fd(cs[n].imag())});
        }
      }
      print_csv({"n", "re", "im"}, rows);
      if (screen) {
        print_csv({"min_modulus", "grid_radius", "winding"},
                  {{fd(screen->min_modulus), fd(screen->grid_radius),
                    std::to_string(screen->winding_number)}});
      }
      return;
    }
    json coeffs = json::array();
    if (a.emit == "coeffs") {
      for (const Complex& c : mean.phi().coeffs()) {
        coeffs.push_back(complex_json(c));
      }
    }
    json j{{"command", "combine"},
           {"label", mean.label()},
           {"order", mean.order()},
           {"coeffs", coeffs}};
    if (screen) {
      j["screen"] = json{{"min_modulus", screen->min_modulus},
                         {"min_witness", complex_json(screen->min_witness)},
                         {"grid_radius", screen->grid_radius},
                         {"winding", screen->winding_number}};
    }
    std::cout << j.dump() << "\n";
  });
}

// ---- family ----

struct FamilyArgs {
  std::string alpha_grid;
  std::string theta_grid;
  double alpha = 0.5;
  double beta = 0.0;  // 0 = unset -> antisymmetric -alpha
  std::string emit = "diagnostics";
};

void setup_family(CLI::App& app, RunConfig& cfg, FamilyArgs& a) {
  CLI::App* family = app.add_subcommand(
      "family", "closed-form diagnostics of the two-parameter family");
  family->add_option("--alpha", a.alpha, "single alpha");
  family->add_option("--beta", a.beta, "single beta (default -alpha)");
  family->add_option("--alpha-grid", a.alpha_grid, "lo:hi:step sweep");
  family->add_option("--theta-grid", a.theta_grid,
                     "lo:hi:step sweep for --emit atheta");
  family->add_option("--emit", a.emit, "rU | S | atheta | diagnostics");
  family->callback([&] {
    std::vector<double> alphas = a.alpha_grid.empty()
                                     ? std::vector<double>{a.alpha}
                                     : parse_grid(a.alpha_grid, "--alpha-grid");
    json out = json::array();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    if (a.emit == "rU") {
      header = {"alpha", "r_U"};
      for (double al : alphas) {
        const double r = family_u_radius(al);
        rows.push_back({fd(al), fd(r)});
        out.push_back(json{{"alpha", al}, {"r_U", r}});
      }
    } else if (a.emit == "S") {
      header = {"alpha", "beta", "S"};
      for (double al : alphas) {
        const double be = a.beta != 0.0 ? a.beta : -al;
        const double s = family_area_sum(FamilyParams(al, be));
        rows.push_back({fd(al), fd(be), fd(s)});
        out.push_back(json{{"alpha", al}, {"beta", be}, {"S", s}});
      }
    } else if (a.emit == "atheta") {
      header = {"alpha", "theta", "A"};
      const std::vector<double> thetas =
          a.theta_grid.empty() ? parse_grid("0.1:3.1:0.1", "--theta-grid")
                               : parse_grid(a.theta_grid, "--theta-grid");
      for (double al : alphas) {
        for (double th : thetas) {
          const double v = family_boundary_starlike(al, th);
          rows.push_back({fd(al), fd(th), fd(v)});
          out.push_back(json{{"alpha", al}, {"theta", th}, {"A", v}});
        }
      }
    } else if (a.emit == "diagnostics") {
      header = {"alpha", "beta", "S", "r_U", "min_abs_root"};
      for (double al : alphas) {
        const FamilyDiagnostics d = family_m_roots(FamilyParams(al, -al));
        rows.push_back({fd(al), fd(-al), fd(d.area_sum), fd(d.r_u),
                        fd(d.min_abs_root)});
        json j{{"alpha", al},
               {"beta", -al},
               {"S", d.area_sum},
               {"r_U", d.r_u},
               {"min_abs_root", d.min_abs_root}};
        if (d.constant_a) j["A"] = complex_json(*d.constant_a);
        if (d.constants_b) {
          j["B_minus"] = d.constants_b->first;
          j["B_plus"] = d.constants_b->second;
        }
        out.push_back(std::move(j));
      }
    } else {
      throw std::invalid_argument("unknown --emit '" + a.emit + "'");
    }
    if (cfg.format == "csv") {
      print_csv(header, rows);
    } else {
      std::cout << json{{"command", "family"}, {"rows", out}}.dump() << "\n";
    }
  });
}

// ---- scan ----

struct ScanArgs {
  FnSource fn;
  double family_alpha = 0.0;  // 0 = unset; else closed-form F_{a,-a} backend
  std::string quantity = "u-functional";
  std::string radii;
  double radius = 0.9;  // injectivity
  double lambda = 1.0;  // halfplane
};

void setup_scan(CLI::App& app, RunConfig& cfg, ScanArgs& a) {
  CLI::App* scan = app.add_subcommand("scan", "numerical disk sweeps");
  add_fn_source(scan, a.fn);
  scan->add_option("--family-alpha", a.family_alpha,
                   "use the closed-form backend for F_{a,-a} (trust 0.9999)");
  scan->add_option(
      "--quantity", a.quantity,
      "u-functional | starlike | local-univalence | injectivity | halfplane");
  scan->add_option("--radii", a.radii, "comma list of radii");
  scan->add_option("--radius", a.radius, "circle radius (injectivity)");
  scan->add_option("--lambda", a.lambda,
                   "lambda for the halfplane comparison threshold");
  scan->callback([&] {
    std::string radii_text = a.radii;
    if (radii_text.empty()) {
      radii_text = cfg.radii.empty() ? "0.5,0.9" : cfg.radii;
    }
    const std::vector<double> radii = parse_real_list(radii_text, "--radii");
    ScanReport report;
    const bool closed = a.family_alpha != 0.0;
    if (closed && (!a.fn.coeffs.empty() || !a.fn.file.empty() ||
                   !a.fn.catalog.empty())) {
      throw std::invalid_argument(
          "--family-alpha excludes --coeffs/--file/--catalog");
    }
    if (closed) {
      const double al = a.family_alpha;
      if (a.quantity == "u-functional") {
        report = scan_u_functional_fn(
            [al](Complex z) { return family_u_functional_closed(al, z); },
            kClosedFormTrustRadius, radii, cfg.angular);
      } else if (a.quantity == "starlike") {
        report = scan_starlike_fn(
            [al](Complex z) { return family_starlike_quotient(al, z); },
            kClosedFormTrustRadius, radii, cfg.angular);
      } else if (a.quantity == "local-univalence") {
        report = scan_local_univalence_fn(
            [al](Complex z) { return family_derivative(al, z); },
            kClosedFormTrustRadius, radii, cfg.angular);
      } else if (a.quantity == "injectivity") {
        report = scan_injectivity_fn(
            [al](Complex z) { return family_value(al, z); },
            kClosedFormTrustRadius, a.radius, cfg.angular);
      } else if (a.quantity == "halfplane") {
        throw std::invalid_argument(
            "halfplane needs a series-backed function (--coeffs/--file/--catalog)");
      } else {
        throw std::invalid_argument("unknown --quantity '" + a.quantity + "'");
      }
    } else {
      const DiskFunction f = resolve_function(a.fn, cfg);
      if (a.quantity == "u-functional") {
        report = scan_u_functional(f, radii, cfg.angular);
      } else if (a.quantity == "starlike") {
        report = scan_starlike(f, radii, cfg.angular);
      } else if (a.quantity == "local-univalence") {
        report = scan_local_univalence(f, radii, cfg.angular);
      } else if (a.quantity == "injectivity") {
        report = scan_injectivity(f, a.radius, cfg.angular);
      } else if (a.quantity == "halfplane") {
        report = halfplane_bound(f, LambdaParam(a.lambda), cfg.angular);
      } else {
        throw std::invalid_argument("unknown --quantity '" + a.quantity + "'");
      }
    }
    if (cfg.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < report.radius_grid.size(); ++i) {
        const Complex w = i < report.witnesses.size() ? report.witnesses[i]
                                                      : Complex{0.0, 0.0};
        rows.push_back({fd(report.radius_grid[i]), fd(report.values[i]),
                        fd(w.real()), fd(w.imag())});
      }
      print_csv({"radius", "value", "witness_re", "witness_im"}, rows);
      return;
    }
    json j{{"command", "scan"}, {"quantity", a.quantity}};
    if (a.quantity == "halfplane") {
      j["threshold"] = 1.0 / (1.0 + a.lambda);  // the half-plane level to beat
    }
    j["radii"] = report.radius_grid;
    j["values"] = report.values;
    json wit = json::array();
    for (const Complex& w : report.witnesses) wit.push_back(complex_json(w));
    j["witnesses"] = wit;
    json viol = json::array();
    for (const auto& [p, q] : report.violations) {
      viol.push_back(json::array({complex_json(p), complex_json(q)}));
    }
    j["violations"] = viol;
    json flg = json::array();
    for (const Complex& f2 : report.flagged) flg.push_back(complex_json(f2));
    j["flagged"] = flg;
    j["curve_windings"] = report.curve_windings;
    std::cout << j.dump() << "\n";
  });
}

// ---- explore ----

struct ExploreArgs {
  std::string pairs = "all-c";
  std::string radii;
  std::vector<std::string> extra;  // name=path:class
};

DeclaredClass parse_class(const std::string& s) {
  if (s == "S") return DeclaredClass::S;
  if (s == "S*" || s == "Sstar") return DeclaredClass::Sstar;
  if (s == "K") return DeclaredClass::K;
  if (s == "C") return DeclaredClass::C;
  if (s == "U") return DeclaredClass::U;
  throw std::invalid_argument("unknown class '" + s + "' (S, S*, K, C, U)");
}

CatalogEntry series_backed_entry(const std::string& name,
                                 const std::string& path, DeclaredClass cls) {
  auto phi = std::make_shared<CoefficientSeries>(read_series_file(path));
  auto dphi = std::make_shared<CoefficientSeries>(derivative(*phi));
  return CatalogEntry{
      name,
      cls,
      [phi](Complex z) { return evaluate(*phi, z); },
      [dphi](Complex z) { return evaluate(*dphi, z); },
      [phi, name](int) { return DiskFunction(*phi, name); },
      kSeriesTrustRadius,
  };
}

void setup_explore(CLI::App& app, RunConfig& cfg, ExploreArgs& a) {
  CLI::App* explore = app.add_subcommand(
      "explore", "conjecture evidence harness over catalog pairs");
  explore->add_option("--pairs", a.pairs, "all | all-c");
  explore->add_option("--radii", a.radii, "radius schedule, comma list");
  explore->add_option("--extra", a.extra,
                      "extra catalog entry name=path.ufmt1:class "
                      "(series-backed, trust 0.95)");
  explore->callback([&] {
    PairPolicy policy;
    if (a.pairs == "all") {
      policy = PairPolicy::All;
    } else if (a.pairs == "all-c") {
      policy = PairPolicy::CloseToConvex;
    } else {
      throw std::invalid_argument("--pairs must be all or all-c");
    }
    std::vector<CatalogEntry> catalog = builtin_catalog();
    for (const std::string& item : a.extra) {
      const std::size_t eq = item.find('=');
      const std::size_t colon = item.rfind(':');
      if (eq == std::string::npos || colon == std::string::npos ||
          colon <= eq) {
        throw std::invalid_argument("--extra: expected name=path:class");
      }
      catalog.push_back(series_backed_entry(
          item.substr(0, eq), item.substr(eq + 1, colon - eq - 1),
          parse_class(item.substr(colon + 1))));
    }
    std::string radii_text = a.radii;
    if (radii_text.empty()) {
      radii_text = cfg.radii.empty() ? "0.9,0.99" : cfg.radii;
    }
    const std::vector<double> radii = parse_real_list(radii_text, "--radii");
    const auto rows = conjecture_harness(catalog, policy, radii, cfg.angular);
    if (cfg.format == "csv") {
      std::vector<std::vector<std::string>> csv;
      for (const auto& r : rows) {
        csv.push_back({r.pair_id, fd(r.radius), fd(r.min_abs_derivative),
                       std::to_string(r.injectivity_violations),
                       std::to_string(r.screen_winding),
                       fd(r.screen_min_modulus),
                       r.hypothesis_violated ? "true" : "false",
                       r.trust_exceeded ? "true" : "false",
                       r.curve_winding_ok ? "true" : "false"});
      }
      print_csv({"pair", "radius", "min_abs_derivative", "violations",
                 "winding", "screen_min_modulus", "hypothesis_violated",
                 "trust_exceeded", "curve_winding_ok"},
                csv);
      return;
    }
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back(json{{"pair", r.pair_id},
                         {"left", r.left},
                         {"right", r.right},
                         {"radius", r.radius},
                         {"min_abs_derivative", r.min_abs_derivative},
                         {"violations", r.injectivity_violations},
                         {"winding", r.screen_winding},
                         {"screen_min_modulus", r.screen_min_modulus},
                         {"hypothesis_violated", r.hypothesis_violated},
                         {"trust_exceeded", r.trust_exceeded},
                         {"curve_winding_ok", r.curve_winding_ok}});
    }
    std::cout << json{{"command", "explore"}, {"rows", out}}.dump() << "\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"univalence certificates and harmonic means on the unit disk"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg = load_config();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  app.add_option("--order", cfg.order, "series truncation order (>= 8)")
      ->check(CLI::Range(8, 1 << 20));
  app.add_option("--angular", cfg.angular, "angular samples per circle")
      ->check(CLI::Range(8, 1 << 20));
  app.add_option("--format", cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed recorded for reproducibility");

  RadiusArgs radius_args;
  CheckArgs check_args;
  CombineArgs combine_args;
  FamilyArgs family_args;
  ScanArgs scan_args;
  ExploreArgs explore_args;
  setup_radius(app, cfg, radius_args);
  setup_check(app, cfg, check_args);
  setup_combine(app, cfg, combine_args);
  setup_family(app, cfg, family_args);
  setup_scan(app, cfg, scan_args);
  setup_explore(app, cfg, explore_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // domain/precondition error
  }
  return 0;
}
