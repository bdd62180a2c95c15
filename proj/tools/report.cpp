#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace harness {

using nlohmann::json;

namespace {

constexpr const char* kSignMismatch = "sign-mismatch";

std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// One CSV record with RFC 4180 quoting.
std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') {
        cur += ch;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote: " + line);
  out.push_back(std::move(cur));
  return out;
}

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

// CSV rows after the header, each checked for the expected column count.
std::vector<std::vector<std::string>> csv_rows(std::istream& in, const std::string& header) {
  const auto lines = data_lines(in);
  if (lines.empty() || lines.front() != header) {
    throw std::runtime_error("expected CSV header '" + header + "'");
  }
  const std::size_t width = split(header, ',').size();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_record(lines[i]);
    if (cells.size() != width) throw std::runtime_error("malformed CSV row: " + lines[i]);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<json> json_rows(std::istream& in) {
  std::vector<json> out;
  for (const auto& line : data_lines(in)) out.push_back(json::parse(line));
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  const long v = std::stol(s, &used);
  if (used != s.size()) throw std::runtime_error("bad integer: " + s);
  return v;
}

int parse_sign(const std::string& s) {
  const long v = parse_long(s);
  if (v < -1 || v > 1) throw std::runtime_error("bad sign: " + s);
  return static_cast<int>(v);
}

json real_json(double v) { return std::isfinite(v) ? json(v) : json(format_real(v)); }

double real_from_json(const json& j) {
  return j.is_string() ? parse_real(j.get<std::string>()) : j.get<double>();
}

json log_json(const LogMagnitude& v) { return {{"sign", v.sign}, {"lnmag", real_json(v.lnmag)}}; }

LogMagnitude log_from_json(const json& j) {
  return {j.at("sign").get<int>(), real_from_json(j.at("lnmag"))};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::runtime_error("bad real: " + text);
  }
  return v;
}

ComparisonRecord ComparisonRecord::make(long N, LogMagnitude exact, LogMagnitude mainterm,
                                        std::string form) {
  ComparisonRecord r{N, exact, mainterm, std::nullopt, std::move(form)};
  if (exact.sign != 0 && exact.sign == mainterm.sign) r.ratio = std::exp(exact.lnmag - mainterm.lnmag);
  return r;
}

// ---- coefficients ---------------------------------------------------------

void write(std::ostream& out, Format f, const std::vector<CoeffRow>& rows) {
  if (f == Format::Csv) {
    out << "N,coefficient\n";
    for (const auto& r : rows) out << r.N << ',' << r.coefficient << '\n';
    return;
  }
  for (const auto& r : rows) emit_json(out, {{"N", r.N}, {"coefficient", r.coefficient}});
}

std::vector<CoeffRow> read_coeffs(std::istream& in, Format f) {
  std::vector<CoeffRow> out;
  if (f == Format::Csv) {
    for (const auto& c : csv_rows(in, "N,coefficient")) out.push_back({parse_long(c[0]), c[1]});
    return out;
  }
  for (const auto& j : json_rows(in)) {
    out.push_back({j.at("N").get<long>(), j.at("coefficient").get<std::string>()});
  }
  return out;
}

// ---- comparisons ----------------------------------------------------------

namespace {
const std::string kCompareHeader = "N,form,exact_sign,ln_exact,mainterm_sign,ln_mainterm,ratio";
}

void write(std::ostream& out, Format f, const std::vector<ComparisonRecord>& rows) {
  if (f == Format::Csv) {
    out << kCompareHeader << '\n';
    for (const auto& r : rows) {
      out << r.N << ',' << field(r.form) << ',' << r.exact.sign << ',' << format_real(r.exact.lnmag) << ','
          << r.mainterm.sign << ',' << format_real(r.mainterm.lnmag) << ','
          << (r.ratio ? format_real(*r.ratio) : kSignMismatch) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    json j{{"N", r.N}, {"form", r.form}, {"exact", log_json(r.exact)}, {"mainterm", log_json(r.mainterm)}};
    j["ratio"] = r.ratio ? real_json(*r.ratio) : json(kSignMismatch);
    emit_json(out, j);
  }
}

std::vector<ComparisonRecord> read_comparisons(std::istream& in, Format f) {
  std::vector<ComparisonRecord> out;
  if (f == Format::Csv) {
    for (const auto& c : csv_rows(in, kCompareHeader)) {
      ComparisonRecord r;
      r.N = parse_long(c[0]);
      r.form = c[1];
      r.exact = {parse_sign(c[2]), parse_real(c[3])};
      r.mainterm = {parse_sign(c[4]), parse_real(c[5])};
      if (c[6] != kSignMismatch) r.ratio = parse_real(c[6]);
      out.push_back(r);
    }
    return out;
  }
  for (const auto& j : json_rows(in)) {
    ComparisonRecord r;
    r.N = j.at("N").get<long>();
    r.form = j.at("form").get<std::string>();
    r.exact = log_from_json(j.at("exact"));
    r.mainterm = log_from_json(j.at("mainterm"));
    const auto& ratio = j.at("ratio");
    if (ratio.is_number() || (ratio.is_string() && ratio.get<std::string>() != kSignMismatch)) {
      r.ratio = real_from_json(ratio);
    }
    out.push_back(r);
  }
  return out;
}

// ---- scans ----------------------------------------------------------------

namespace {

const std::string kScanHeader = "family,R,S,k,n_lo,n_hi,status,violations";

std::string join_violations(const std::vector<CoeffRow>& v) {
  std::string s;
  for (const auto& r : v) {
    if (!s.empty()) s += ';';
    s += std::to_string(r.N) + ':' + r.coefficient;
  }
  return s;
}

}  // namespace

void write(std::ostream& out, Format f, const std::vector<ScanReport>& rows) {
  if (f == Format::Csv) {
    out << kScanHeader << '\n';
    for (const auto& r : rows) {
      out << field(r.spec.family) << ',' << r.spec.R << ',' << r.spec.S << ',' << r.spec.k << ',' << r.n_lo
          << ',' << r.n_hi << ',' << r.status() << ',' << join_violations(r.violations) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"N", x.N}, {"coefficient", x.coefficient}});
    emit_json(out, {{"family", r.spec.family},
                    {"R", r.spec.R},
                    {"S", r.spec.S},
                    {"k", r.spec.k},
                    {"n_lo", r.n_lo},
                    {"n_hi", r.n_hi},
                    {"status", r.status()},
                    {"violations", v}});
  }
}

std::vector<ScanReport> read_scans(std::istream& in, Format f) {
  std::vector<ScanReport> out;
  if (f == Format::Csv) {
    for (const auto& c : csv_rows(in, kScanHeader)) {
      ScanReport r;
      r.spec = {c[0], parse_long(c[1]), parse_long(c[2]), parse_long(c[3])};
      r.n_lo = parse_long(c[4]);
      r.n_hi = parse_long(c[5]);
      if (!c[7].empty()) {
        for (const auto& item : split(c[7], ';')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw std::runtime_error("bad violation entry: " + item);
          r.violations.push_back({parse_long(item.substr(0, colon)), item.substr(colon + 1)});
        }
      }
      if (r.status() != c[6]) throw std::runtime_error("status disagrees with violations");
      out.push_back(std::move(r));
    }
    return out;
  }
  for (const auto& j : json_rows(in)) {
    ScanReport r;
    r.spec = {j.at("family").get<std::string>(), j.at("R").get<long>(), j.at("S").get<long>(),
              j.at("k").get<long>()};
    r.n_lo = j.at("n_lo").get<long>();
    r.n_hi = j.at("n_hi").get<long>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("N").get<long>(), v.at("coefficient").get<std::string>()});
    }
    if (r.status() != j.at("status").get<std::string>()) {
      throw std::runtime_error("status disagrees with violations");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- identities -----------------------------------------------------------

void write(std::ostream& out, Format f, const std::vector<IdentityRow>& rows) {
  if (f == Format::Csv) {
    out << "suite,instance,status,first_mismatch\n";
    for (const auto& r : rows) {
      out << field(r.suite) << ',' << field(r.instance) << ',' << (r.pass() ? "pass" : "fail") << ',';
      if (!r.pass()) out << r.first_mismatch;
      out << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    json j{{"suite", r.suite}, {"instance", r.instance}, {"status", r.pass() ? "pass" : "fail"}};
    j["first_mismatch"] = r.pass() ? json(nullptr) : json(r.first_mismatch);
    emit_json(out, j);
  }
}

std::vector<IdentityRow> read_identities(std::istream& in, Format f) {
  std::vector<IdentityRow> out;
  if (f == Format::Csv) {
    for (const auto& c : csv_rows(in, "suite,instance,status,first_mismatch")) {
      out.push_back({c[0], c[1], c[3].empty() ? -1 : parse_long(c[3])});
    }
    return out;
  }
  for (const auto& j : json_rows(in)) {
    const auto& m = j.at("first_mismatch");
    out.push_back({j.at("suite").get<std::string>(), j.at("instance").get<std::string>(),
                   m.is_null() ? -1 : m.get<long>()});
  }
  return out;
}

// ---- circle ---------------------------------------------------------------

namespace {
const std::string kCircleHeader = "variant,N,samples,value,rounded,exact,arc_ratio,status";
}

void write(std::ostream& out, Format f, const std::vector<CircleRow>& rows) {
  if (f == Format::Csv) {
    out << kCircleHeader << '\n';
    for (const auto& r : rows) {
      out << field(r.variant) << ',' << r.N << ',' << r.samples << ',' << format_real(r.value) << ','
          << r.rounded << ',' << r.exact << ',' << format_real(r.arc_ratio) << ','
          << (r.match() ? "match" : "mismatch") << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    emit_json(out, {{"variant", r.variant},
                    {"N", r.N},
                    {"samples", r.samples},
                    {"value", real_json(r.value)},
                    {"rounded", r.rounded},
                    {"exact", r.exact},
                    {"arc_ratio", real_json(r.arc_ratio)},
                    {"status", r.match() ? "match" : "mismatch"}});
  }
}

std::vector<CircleRow> read_circles(std::istream& in, Format f) {
  std::vector<CircleRow> out;
  if (f == Format::Csv) {
    for (const auto& c : csv_rows(in, kCircleHeader)) {
      out.push_back({c[0], parse_long(c[1]), parse_long(c[2]), parse_real(c[3]), c[4], c[5],
                     parse_real(c[6])});
    }
    return out;
  }
  for (const auto& j : json_rows(in)) {
    out.push_back({j.at("variant").get<std::string>(), j.at("N").get<long>(),
                   j.at("samples").get<long>(), real_from_json(j.at("value")),
                   j.at("rounded").get<std::string>(), j.at("exact").get<std::string>(),
                   real_from_json(j.at("arc_ratio"))});
  }
  return out;
}

}  // namespace harness
