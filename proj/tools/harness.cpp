#include "harness.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace harness {

namespace {

struct SeriesDeleter {
  void operator()(tt_series* s) const { tt_series_free(s); }
};
using Series = std::unique_ptr<tt_series, SeriesDeleter>;

// Carries a failing status out of nested helpers up to the command boundary.
struct StatusError {
  tt_status status;
  std::string message;
};

void check(tt_status st) {
  if (st != TT_OK) throw StatusError{st, tt_last_error_message()};
}

int exit_for(const StatusError& e, const Output& out) {
  *out.diag << "error: " << tt_status_string(e.status) << ": " << e.message << '\n';
  return kUsage;
}

void begin(const Output& out) {
  if (out.stamp) *out.data << "# " << *out.stamp << '\n';
}

std::string spec_str(const FamilyArgs& s) {
  return family_tag(s.family) + "(" + std::to_string(s.R) + "," + std::to_string(s.S) + "," +
         std::to_string(s.k) + ")";
}

FamilyKey key_of(const FamilyArgs& s) { return {family_tag(s.family), s.R, s.S, s.k}; }

Series family_series(const FamilyArgs& s, long order) {
  tt_series* raw = nullptr;
  check(tt_family_series(s.family, s.R, s.S, s.k, order, 0, &raw));
  return Series(raw);
}

std::string coeff_string(const tt_series* s, long n) {
  size_t len = 0;
  check(tt_series_coeff_string(s, n, nullptr, 0, &len));
  std::string buf(len + 1, '\0');
  check(tt_series_coeff_string(s, n, buf.data(), buf.size(), &len));
  buf.resize(len);
  return buf;
}

void check_ceiling(long n, long ceiling) {
  if (n > ceiling) {
    throw StatusError{TT_E_INVALID_ARGUMENT, "N = " + std::to_string(n) + " exceeds the ceiling " +
                                                 std::to_string(ceiling) + " (see --n-ceiling)"};
  }
}

// Sign condition for a scan: >= 0 for C, Cp, D and <= 0 for Dp.
bool violates(tt_family f, int sign) { return f == TT_FAMILY_DPRIME ? sign > 0 : sign < 0; }

ScanReport scan_one(const FamilyArgs& spec, long n_lo, long n_hi) {
  check(tt_family_validate(spec.family, spec.R, spec.S, spec.k));
  auto s = family_series(spec, n_hi + 1);
  ScanReport r{key_of(spec), n_lo, n_hi, {}};
  for (long n = n_lo; n <= n_hi; ++n) {
    int sign = 0;
    check(tt_series_coeff_sign(s.get(), n, &sign));
    if (violates(spec.family, sign)) r.violations.push_back({n, coeff_string(s.get(), n)});
  }
  return r;
}

}  // namespace

long parse_twice(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  const std::string num = text.substr(0, slash);
  long v = 0;
  try {
    v = std::stol(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (num.empty() || used != num.size()) throw std::invalid_argument("bad number '" + text + "'");
  if (slash == std::string::npos) return 2 * v;
  const std::string den = text.substr(slash + 1);
  if (den == "1") return 2 * v;
  if (den == "2") return v;
  throw std::invalid_argument("denominator must be 1 or 2 in '" + text + "'");
}

tt_family parse_family_tag(const std::string& tag) {
  if (tag == "C") return TT_FAMILY_C;
  if (tag == "Cp") return TT_FAMILY_CPRIME;
  if (tag == "D") return TT_FAMILY_D;
  if (tag == "Dp") return TT_FAMILY_DPRIME;
  throw std::invalid_argument("unknown family '" + tag + "'");
}

std::string family_tag(tt_family f) {
  switch (f) {
    case TT_FAMILY_C: return "C";
    case TT_FAMILY_CPRIME: return "Cp";
    case TT_FAMILY_D: return "D";
    case TT_FAMILY_DPRIME: return "Dp";
  }
  return "?";
}

std::vector<FamilyArgs> default_grid(std::optional<tt_family> only) {
  std::vector<FamilyArgs> out;
  const std::pair<long, long> pairs[] = {{3, 1}, {4, 1}, {5, 2}, {7, 3}};
  for (tt_family f : {TT_FAMILY_C, TT_FAMILY_CPRIME, TT_FAMILY_D, TT_FAMILY_DPRIME}) {
    if (only && *only != f) continue;
    for (auto [R, S] : pairs) {
      for (long k = 0; k <= 3; ++k) {
        if (tt_family_validate(f, R, S, k) == TT_OK) out.push_back({f, R, S, k});
      }
    }
  }
  return out;
}

int cmd_coeffs(const FamilyArgs& spec, long n_max, long n_ceiling, const Output& out) {
  try {
    if (n_max < 0) throw StatusError{TT_E_INVALID_ARGUMENT, "--n-max must be non-negative"};
    check_ceiling(n_max, n_ceiling);
    auto s = family_series(spec, n_max + 1);
    std::vector<CoeffRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) rows.push_back({n, coeff_string(s.get(), n)});
    begin(out);
    write(*out.data, out.format, rows);
    return kSuccess;
  } catch (const StatusError& e) {
    return exit_for(e, out);
  }
}

int cmd_verify_identities(long order, long inject_first_offset, const Output& out) {
  try {
    if (order < 50) throw StatusError{TT_E_INVALID_ARGUMENT, "--order must be at least 50"};
    std::vector<IdentityRow> rows;
    long m = -1;
    check(tt_identity_pentagonal(order, &m));
    rows.push_back({"pentagonal", "order=" + std::to_string(order), m});
    for (long k = 1; k <= 6; ++k) {
      check(tt_identity_truncated_pentagonal(k, order, &m));
      rows.push_back({"truncated-pentagonal", "k=" + std::to_string(k), m});
    }
    const std::pair<long, long> pairs[] = {{3, 1}, {4, 1}, {5, 2}, {7, 3}};
    for (auto [R, S] : pairs) {
      check(tt_identity_quintuple(R, S, order, &m));
      rows.push_back({"quintuple", "R=" + std::to_string(R) + ",S=" + std::to_string(S), m});
    }
    for (const auto& spec : default_grid()) {
      check(tt_identity_decomposition(spec.family, spec.R, spec.S, spec.k, order,
                                      inject_first_offset, &m));
      rows.push_back({"decomposition", spec_str(spec), m});
    }
    begin(out);
    write(*out.data, out.format, rows);
    bool ok = true;
    for (const auto& r : rows) {
      if (!r.pass()) {
        ok = false;
        *out.diag << "mismatch: " << r.suite << ' ' << r.instance << " first differs at q^"
                  << r.first_mismatch << '\n';
      }
    }
    return ok ? kSuccess : kIdentityFailure;
  } catch (const StatusError& e) {
    return exit_for(e, out);
  }
}

int cmd_scan(const std::vector<FamilyArgs>& specs, long n_lo, long n_hi, long n_ceiling,
             const Output& out) {
  try {
    if (n_lo < 1 || n_lo > n_hi) throw StatusError{TT_E_INVALID_ARGUMENT, "need 1 <= n-lo <= n-hi"};
    check_ceiling(n_hi, n_ceiling);
    for (const auto& s : specs) check(tt_family_validate(s.family, s.R, s.S, s.k));
    // One task per spec; reports are collected and written in input order.
    std::vector<std::future<ScanReport>> jobs;
    jobs.reserve(specs.size());
    for (const auto& s : specs) {
      jobs.push_back(std::async(std::launch::async, [s, n_lo, n_hi] { return scan_one(s, n_lo, n_hi); }));
    }
    std::vector<ScanReport> reports;
    for (auto& j : jobs) reports.push_back(j.get());
    begin(out);
    write(*out.data, out.format, reports);
    bool clean = true;
    for (const auto& r : reports) {
      if (!r.clean()) {
        clean = false;
        *out.diag << "violation: " << r.spec.family << '(' << r.spec.R << ',' << r.spec.S << ','
                  << r.spec.k << ") at N=" << r.violations.front().N << '\n';
      }
    }
    return clean ? kSuccess : kViolation;
  } catch (const StatusError& e) {
    return exit_for(e, out);
  }
}

int cmd_compare(const FamilyArgs& spec, const std::vector<long>& n_list, tt_form form,
                long n_ceiling, const Output& out) {
  try {
    check(tt_family_validate(spec.family, spec.R, spec.S, spec.k));
    if (n_list.empty()) throw StatusError{TT_E_INVALID_ARGUMENT, "--n-list is empty"};
    long top = 0;
    for (long n : n_list) {
      if (n < 1) throw StatusError{TT_E_INVALID_ARGUMENT, "compare needs N >= 1"};
      check_ceiling(n, n_ceiling);
      top = std::max(top, n);
    }
    auto s = family_series(spec, top + 1);
    const std::string tag = form == TT_FORM_BESSEL ? "bessel" : "elementary";
    std::vector<ComparisonRecord> rows;
    for (long n : n_list) {
      tt_logvalue exact{};
      tt_logvalue main{};
      check(tt_series_coeff_log(s.get(), n, &exact));
      check(tt_mainterm_family(spec.family, spec.R, spec.S, spec.k, n, form, &main));
      rows.push_back(ComparisonRecord::make(n, {exact.sign, exact.lnmag}, {main.sign, main.lnmag}, tag));
    }
    begin(out);
    write(*out.data, out.format, rows);
    return kSuccess;
  } catch (const StatusError& e) {
    return exit_for(e, out);
  }
}

int cmd_circle(const CircleArgs& args, const Output& out) {
  try {
    if (args.N < 0) throw StatusError{TT_E_INVALID_ARGUMENT, "--n must be non-negative"};
    std::vector<CircleRow> rows;
    for (tt_kind kind : args.kinds) {
      long samples = 0;
      if (args.samples) {
        samples = *args.samples;
      } else {
        check(tt_minimal_samples(args.R, kind, args.N, &samples));
      }
      double value = 0.0;
      check(tt_wright_coefficient(&args.p, args.R, args.S, kind, args.N, samples, &value));
      tt_arc_split split{};
      check(tt_arc_split_diagnostic(&args.p, args.R, args.S, kind, args.N, samples, &split));
      tt_series* raw = nullptr;
      check(tt_block_series(&args.p, args.R, args.S, kind, args.N + 1, &raw));
      Series s(raw);
      char rounded[32];
      std::snprintf(rounded, sizeof rounded, "%.0f", std::round(value) + 0.0);
      rows.push_back({kind == TT_KIND_B ? "B" : "Bp", args.N, samples, value, rounded,
                      coeff_string(s.get(), args.N), split.ratio});
    }
    begin(out);
    write(*out.data, out.format, rows);
    bool ok = true;
    for (const auto& r : rows) {
      if (!r.match()) {
        ok = false;
        *out.diag << "quadrature mismatch (" << r.variant << "): rounded " << r.rounded
                  << " but exact " << r.exact;
        if (r.exact.size() > 15) *out.diag << " (beyond double precision)";
        *out.diag << '\n';
      }
    }
    return ok ? kSuccess : kQuadratureMismatch;
  } catch (const StatusError& e) {
    return exit_for(e, out);
  }
}

}  // namespace harness
