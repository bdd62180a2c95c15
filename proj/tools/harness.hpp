#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "thetatrunc/thetatrunc.h"

namespace harness {

enum Exit : int {
  kSuccess = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kViolation = 3,
  kQuadratureMismatch = 4,
};

struct Output {
  std::ostream* data;   // records
  std::ostream* diag;   // human-readable notes and errors
  Format format = Format::Csv;
  std::optional<std::string> stamp;  // metadata line, written first when set
};

struct FamilyArgs {
  tt_family family = TT_FAMILY_C;
  long R = 3;
  long S = 1;
  long k = 1;
};

/// "7" -> 14, "9/2" -> 9; throws std::invalid_argument otherwise.
long parse_twice(const std::string& text);

tt_family parse_family_tag(const std::string& tag);
std::string family_tag(tt_family f);

/// The families grid: (R,S) in {(3,1),(4,1),(5,2),(7,3)}, k in {1,2,3}, plus
/// k = 0 for D; specs that violate a family's constraints are left out.
std::vector<FamilyArgs> default_grid(std::optional<tt_family> only = std::nullopt);

int cmd_coeffs(const FamilyArgs& spec, long n_max, long n_ceiling, const Output& out);

int cmd_verify_identities(long order, long inject_first_offset, const Output& out);

int cmd_scan(const std::vector<FamilyArgs>& specs, long n_lo, long n_hi, long n_ceiling,
             const Output& out);

int cmd_compare(const FamilyArgs& spec, const std::vector<long>& n_list, tt_form form,
                long n_ceiling, const Output& out);

struct CircleArgs {
  tt_theta_params p{12, 14, 2};
  long R = 3;
  long S = 1;
  long N = 50;
  std::optional<long> samples;  // default: the bandwidth minimum
  std::vector<tt_kind> kinds{TT_KIND_B};
};

int cmd_circle(const CircleArgs& args, const Output& out);

}  // namespace harness
