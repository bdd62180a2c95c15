#include "thetatrunc/error.hpp"

#include <charconv>

#include "thetatrunc/half_integer.hpp"

namespace thetatrunc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorCode::InsufficientRange: return "InsufficientRange";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::SectorViolation: return "SectorViolation";
    case ErrorCode::MainArcViolation: return "MainArcViolation";
    case ErrorCode::BandwidthTooSmall: return "BandwidthTooSmall";
    case ErrorCode::RangeViolation: return "RangeViolation";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::InvalidArgument, "not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInteger HalfInteger::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInteger(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 1) return HalfInteger(num);
  if (den == 2) return from_twice(num);
  fail(ErrorCode::InvalidArgument, "denominator must be 1 or 2: '" + std::string(text) + "'");
}

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(integer());
  return std::to_string(twice_) + "/2";
}

}  // namespace thetatrunc
