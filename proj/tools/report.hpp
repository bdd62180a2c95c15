#pragma once

// Records emitted by the command-line harness and their CSV / JSON-lines
// encodings. Big integers travel as decimal strings, reals as %.17g.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thetatrunc/thetatrunc.h"

namespace harness {

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

struct LogMagnitude {
  int sign = 0;
  double lnmag = 0.0;
  bool operator==(const LogMagnitude&) const = default;
};

struct CoeffRow {
  long N = 0;
  std::string coefficient;
  bool operator==(const CoeffRow&) const = default;
};

/// One exact-versus-main-term comparison. `ratio` is empty when the signs
/// disagree (or either side is zero) and is then written as "sign-mismatch".
struct ComparisonRecord {
  long N = 0;
  LogMagnitude exact;
  LogMagnitude mainterm;
  std::optional<double> ratio;
  std::string form;
  bool operator==(const ComparisonRecord&) const = default;

  static ComparisonRecord make(long N, LogMagnitude exact, LogMagnitude mainterm, std::string form);
};

struct FamilyKey {
  std::string family;  // C, Cp, D, Dp
  long R = 0;
  long S = 0;
  long k = 0;
  bool operator==(const FamilyKey&) const = default;
};

struct ScanReport {
  FamilyKey spec;
  long n_lo = 0;
  long n_hi = 0;
  std::vector<CoeffRow> violations;
  bool operator==(const ScanReport&) const = default;

  bool clean() const { return violations.empty(); }
  std::string status() const { return clean() ? "clean" : "violated"; }
};

struct IdentityRow {
  std::string suite;
  std::string instance;
  long first_mismatch = -1;  // -1 when both sides agree
  bool operator==(const IdentityRow&) const = default;

  bool pass() const { return first_mismatch < 0; }
};

struct CircleRow {
  std::string variant;  // B or Bp
  long N = 0;
  long samples = 0;
  double value = 0.0;
  std::string rounded;
  std::string exact;
  double arc_ratio = 0.0;
  bool operator==(const CircleRow&) const = default;

  bool match() const { return rounded == exact; }
};

std::string format_real(double v);
double parse_real(const std::string& text);

void write(std::ostream& out, Format f, const std::vector<CoeffRow>& rows);
void write(std::ostream& out, Format f, const std::vector<ComparisonRecord>& rows);
void write(std::ostream& out, Format f, const std::vector<ScanReport>& rows);
void write(std::ostream& out, Format f, const std::vector<IdentityRow>& rows);
void write(std::ostream& out, Format f, const std::vector<CircleRow>& rows);

/// Parsers skip blank lines and lines starting with '#'; they throw
/// std::runtime_error on malformed input.
std::vector<CoeffRow> read_coeffs(std::istream& in, Format f);
std::vector<ComparisonRecord> read_comparisons(std::istream& in, Format f);
std::vector<ScanReport> read_scans(std::istream& in, Format f);
std::vector<IdentityRow> read_identities(std::istream& in, Format f);
std::vector<CircleRow> read_circles(std::istream& in, Format f);

}  // namespace harness
