#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness.hpp"

namespace {

struct Common {
  std::string format = "csv";
  std::string out;
  bool stamp = false;
  long n_ceiling = 10000;
  long seed = 0;
};

struct FamilyFlags {
  std::string family = "C";
  long R = 3;
  long S = 1;
  long k = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "Output file (default: stdout, or $THETA_TRUNC_OUT/<name>)");
  app->add_flag("--stamp", c.stamp, "Write a '#' metadata line with version and UTC time");
  app->add_option("--n-ceiling", c.n_ceiling, "Largest N any exact computation may reach");
  app->add_option("--seed", c.seed, "Reserved; all paths are deterministic");
}

void add_family(CLI::App* app, FamilyFlags& f) {
  app->add_option("--family", f.family, "Family tag")->check(CLI::IsMember({"C", "Cp", "D", "Dp"}));
  app->add_option("--R", f.R, "Modulus R");
  app->add_option("--S", f.S, "Residue S");
  app->add_option("--k", f.k, "Truncation index k");
}

harness::FamilyArgs to_args(const FamilyFlags& f) {
  return {harness::parse_family_tag(f.family), f.R, f.S, f.k};
}

std::string stamp_line(const std::string& command) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return "theta-trunc 1.0.0 " + command + " " + buf;
}

// Resolves the output stream and runs `body` with it. Exit code 2 when the
// destination cannot be opened.
template <class Body>
int with_output(const Common& c, const std::string& command, Body&& body) {
  harness::Output out{&std::cout, &std::cerr, harness::parse_format(c.format), std::nullopt};
  if (c.stamp) out.stamp = stamp_line(command);
  std::string path = c.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("THETA_TRUNC_OUT"); dir != nullptr && *dir != '\0') {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (command + (c.format == "csv" ? ".csv" : ".jsonl"))).string();
    }
  }
  if (path.empty()) return body(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return harness::kUsage;
  }
  out.data = &file;
  return body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic coefficients of truncated theta series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "theta-trunc 1.0.0");

  Common common;
  FamilyFlags fam;

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients of one family series");
  long n_max = 20;
  add_common(coeffs, common);
  add_family(coeffs, fam);
  coeffs->add_option("--n-max", n_max, "Largest exponent written");

  auto* verify = app.add_subcommand("verify-identities", "Run the exact identity suites");
  long order = 300;
  long inject = 0;
  add_common(verify, common);
  verify->add_option("--order", order, "Truncation order (>= 50)");
  verify->add_option("--inject-t1-offset", inject,
                     "Shift the d-value of the first decomposition block (fault injection)");

  auto* scan = app.add_subcommand("scan", "Check the sign conditions over a range of N");
  long n_lo = 1;
  long n_hi = 2000;
  bool grid = false;
  add_common(scan, common);
  add_family(scan, fam);
  scan->add_option("--n-lo", n_lo, "First N checked");
  auto* hi = scan->add_option("--n-hi", n_hi, "Last N checked");
  scan->add_option("--n-max", n_hi, "Alias of --n-hi")->excludes(hi);
  scan->add_flag("--grid", grid, "Scan the default grid (restricted to --family when given)");

  auto* compare = app.add_subcommand("compare", "Exact coefficients against the main term");
  std::vector<long> n_list{1000, 2000, 4000, 8000};
  std::string form = "elementary";
  add_common(compare, common);
  add_family(compare, fam);
  compare->add_option("--n-list", n_list, "Values of N")->delimiter(',');
  compare->add_option("--form", form, "Main-term form")->check(CLI::IsMember({"bessel", "elementary"}));

  auto* circle = app.add_subcommand("circle", "Circle-method quadrature for one theta block");
  std::string a = "6";
  std::string c = "7";
  long d = 2;
  long R = 3;
  long S = 1;
  long N = 50;
  std::optional<long> samples;
  std::vector<std::string> variants{"B"};
  add_common(circle, common);
  circle->add_option("--a", a, "Quadratic coefficient (integer or n/2)");
  circle->add_option("--c", c, "Linear coefficient (integer or n/2)");
  circle->add_option("--d", d, "Constant exponent shift");
  circle->add_option("--R", R, "Modulus R");
  circle->add_option("--S", S, "Residue S");
  circle->add_option("--n", N, "Coefficient index");
  circle->add_option("--samples", samples, "Quadrature samples (power of two)");
  circle->add_option("--variant", variants, "B, Bp, or both")
      ->delimiter(',')
      ->check(CLI::IsMember({"B", "Bp"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : harness::kUsage;
  }

  try {
    if (coeffs->parsed()) {
      return with_output(common, "coeffs", [&](const harness::Output& out) {
        return harness::cmd_coeffs(to_args(fam), n_max, common.n_ceiling, out);
      });
    }
    if (verify->parsed()) {
      return with_output(common, "verify-identities", [&](const harness::Output& out) {
        return harness::cmd_verify_identities(order, inject, out);
      });
    }
    if (scan->parsed()) {
      std::vector<harness::FamilyArgs> specs;
      if (grid) {
        const bool restrict = scan->count("--family") > 0;
        specs = harness::default_grid(restrict ? std::optional(harness::parse_family_tag(fam.family))
                                               : std::nullopt);
      } else {
        specs.push_back(to_args(fam));
      }
      return with_output(common, "scan", [&](const harness::Output& out) {
        return harness::cmd_scan(specs, n_lo, n_hi, common.n_ceiling, out);
      });
    }
    if (compare->parsed()) {
      const tt_form f = form == "bessel" ? TT_FORM_BESSEL : TT_FORM_ELEMENTARY;
      return with_output(common, "compare", [&](const harness::Output& out) {
        return harness::cmd_compare(to_args(fam), n_list, f, common.n_ceiling, out);
      });
    }
    if (circle->parsed()) {
      harness::CircleArgs args;
      args.p = {harness::parse_twice(a), harness::parse_twice(c), d};
      args.R = R;
      args.S = S;
      args.N = N;
      args.samples = samples;
      args.kinds.clear();
      for (const auto& v : variants) args.kinds.push_back(v == "B" ? TT_KIND_B : TT_KIND_BPRIME);
      return with_output(common, "circle", [&](const harness::Output& out) {
        return harness::cmd_circle(args, out);
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return harness::kUsage;
  }
  return harness::kUsage;
}
