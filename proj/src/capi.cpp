#include "thetatrunc/thetatrunc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "thetatrunc/analytic.hpp"
#include "thetatrunc/asymptotics.hpp"
#include "thetatrunc/error.hpp"
#include "thetatrunc/families.hpp"
#include "thetatrunc/series.hpp"

struct tt_series {
  thetatrunc::PowerSeries series;
};

namespace {

using namespace thetatrunc;

thread_local std::string last_error;

tt_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return TT_E_INVALID_ARGUMENT;
    case ErrorCode::NonUnitConstantTerm: return TT_E_NON_UNIT_CONSTANT_TERM;
    case ErrorCode::NonIntegralExponent: return TT_E_NON_INTEGRAL_EXPONENT;
    case ErrorCode::InsufficientRange: return TT_E_INSUFFICIENT_RANGE;
    case ErrorCode::UnsupportedOrder: return TT_E_UNSUPPORTED_ORDER;
    case ErrorCode::SectorViolation: return TT_E_SECTOR_VIOLATION;
    case ErrorCode::MainArcViolation: return TT_E_MAIN_ARC_VIOLATION;
    case ErrorCode::BandwidthTooSmall: return TT_E_BANDWIDTH_TOO_SMALL;
    case ErrorCode::RangeViolation: return TT_E_RANGE_VIOLATION;
  }
  return TT_E_INTERNAL;
}

template <class F>
tt_status guarded(F&& body) {
  try {
    body();
    return TT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TT_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TT_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

Family family_of(tt_family f) {
  switch (f) {
    case TT_FAMILY_C: return Family::C;
    case TT_FAMILY_CPRIME: return Family::Cprime;
    case TT_FAMILY_D: return Family::D;
    case TT_FAMILY_DPRIME: return Family::Dprime;
  }
  fail(ErrorCode::InvalidArgument, "unknown family tag");
}

FamilySpec spec_of(tt_family f, long R, long S, long k) {
  FamilySpec spec{family_of(f), R, S, k};
  spec.validate();
  return spec;
}

ThetaParams params_of(const tt_theta_params* p) {
  require(p != nullptr, "null theta parameters");
  ThetaParams t{HalfInteger::from_twice(p->a_twice), HalfInteger::from_twice(p->c_twice), p->d};
  t.validate();
  return t;
}

std::size_t order_of(long order) {
  require(order >= 1, "order must be positive");
  return static_cast<std::size_t>(order);
}

const mpz_class& coeff_at(const tt_series* s, long n) {
  require(s != nullptr, "null series");
  require(n >= 0 && static_cast<std::size_t>(n) < s->series.order(), "coefficient index out of range");
  return s->series[static_cast<std::size_t>(n)];
}

long mismatch_of(const PowerSeries& a, const PowerSeries& b) {
  const auto m = first_mismatch(a, b);
  return m ? static_cast<long>(*m) : -1L;
}

tt_logvalue to_c(const LogValue& v) { return {v.sign, v.lnmag}; }

}  // namespace

extern "C" {

const char* tt_status_string(tt_status status) {
  switch (status) {
    case TT_OK: return "ok";
    case TT_E_INVALID_ARGUMENT: return "invalid argument";
    case TT_E_NON_UNIT_CONSTANT_TERM: return "non-unit constant term";
    case TT_E_NON_INTEGRAL_EXPONENT: return "non-integral exponent";
    case TT_E_INSUFFICIENT_RANGE: return "insufficient range";
    case TT_E_UNSUPPORTED_ORDER: return "unsupported Bessel order";
    case TT_E_SECTOR_VIOLATION: return "sector violation";
    case TT_E_MAIN_ARC_VIOLATION: return "main-arc violation";
    case TT_E_BANDWIDTH_TOO_SMALL: return "bandwidth too small";
    case TT_E_RANGE_VIOLATION: return "range violation";
    case TT_E_BUFFER_TOO_SMALL: return "buffer too small";
    case TT_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tt_last_error_message(void) { return last_error.c_str(); }

tt_status tt_family_validate(tt_family family, long R, long S, long k) {
  return guarded([&] { spec_of(family, R, S, k); });
}

tt_status tt_family_series(tt_family family, long R, long S, long k, long order,
                           int via_decomposition, tt_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    const auto spec = spec_of(family, R, S, k);
    const auto n = order_of(order);
    PowerSeries s = via_decomposition ? genfun_family_via_decomposition(spec, n)
                                      : genfun_family(spec, n);
    *out = new tt_series{std::move(s)};
  });
}

tt_status tt_block_series(const tt_theta_params* p, long R, long S, tt_kind kind, long order,
                          tt_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    const auto params = params_of(p);
    const auto n = order_of(order);
    PowerSeries s = kind == TT_KIND_B ? genfun_B(params, R, S, n) : genfun_Bprime(params, R, S, n);
    *out = new tt_series{std::move(s)};
  });
}

void tt_series_free(tt_series* s) { delete s; }

long tt_series_order(const tt_series* s) {
  return s == nullptr ? 0L : static_cast<long>(s->series.order());
}

tt_status tt_series_coeff_string(const tt_series* s, long n, char* buf, size_t cap, size_t* len) {
  tt_status st = TT_OK;
  const tt_status guard = guarded([&] {
    const std::string text = coeff_at(s, n).get_str();
    if (len != nullptr) *len = text.size();
    if (buf == nullptr) return;
    if (cap <= text.size()) {
      st = TT_E_BUFFER_TOO_SMALL;
      last_error = "coefficient needs " + std::to_string(text.size() + 1) + " bytes";
      return;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
  });
  return guard != TT_OK ? guard : st;
}

tt_status tt_series_coeff_sign(const tt_series* s, long n, int* sign) {
  return guarded([&] {
    require(sign != nullptr, "null output");
    *sign = sgn(coeff_at(s, n));
  });
}

tt_status tt_series_coeff_log(const tt_series* s, long n, tt_logvalue* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_c(LogValue::from_integer(coeff_at(s, n)));
  });
}

long tt_series_first_mismatch(const tt_series* a, const tt_series* b) {
  if (a == nullptr || b == nullptr) return 0;
  return mismatch_of(a->series, b->series);
}

tt_status tt_identity_pentagonal(long order, long* mismatch) {
  return guarded([&] {
    require(mismatch != nullptr, "null output");
    const auto [lhs, rhs] = pentagonal_sides(order_of(order));
    *mismatch = mismatch_of(lhs, rhs);
  });
}

tt_status tt_identity_truncated_pentagonal(long k, long order, long* mismatch) {
  return guarded([&] {
    require(mismatch != nullptr, "null output");
    const auto [lhs, rhs] = truncated_pentagonal_sides(k, order_of(order));
    *mismatch = mismatch_of(lhs, rhs);
  });
}

tt_status tt_identity_quintuple(long R, long S, long order, long* mismatch) {
  return guarded([&] {
    require(mismatch != nullptr, "null output");
    const auto [lhs, rhs] = quintuple_product_sides(R, S, order_of(order));
    *mismatch = mismatch_of(lhs, rhs);
  });
}

tt_status tt_identity_decomposition(tt_family family, long R, long S, long k, long order,
                                    long first_term_offset, long* mismatch) {
  return guarded([&] {
    require(mismatch != nullptr, "null output");
    const auto spec = spec_of(family, R, S, k);
    const auto n = order_of(order);
    auto terms = decompose(spec);
    terms[0].params.d += first_term_offset;
    *mismatch = mismatch_of(genfun_family(spec, n), genfun_from_terms(spec, terms, n));
  });
}

tt_status tt_mainterm_family(tt_family family, long R, long S, long k, long N, tt_form form,
                             tt_logvalue* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto spec = spec_of(family, R, S, k);
    *out = to_c(mainterm_family(spec, N, form == TT_FORM_BESSEL ? Form::Bessel : Form::Elementary));
  });
}

tt_status tt_mainterm_block(const tt_theta_params* p, long R, long S, tt_kind kind, long N,
                            tt_logvalue* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto params = params_of(p);
    const auto m = kind == TT_KIND_B ? mainterm_B(params, R, S, N) : mainterm_Bprime(params, R, S, N);
    *out = to_c(m.value);
  });
}

tt_status tt_minimal_samples(long R, tt_kind kind, long N, long* samples) {
  return guarded([&] {
    require(samples != nullptr, "null output");
    const Variant v = kind == TT_KIND_B ? Variant::ThreeR : Variant::TwoR;
    *samples = static_cast<long>(minimal_samples(v, R, N));
  });
}

tt_status tt_wright_coefficient(const tt_theta_params* p, long R, long S, tt_kind kind, long N,
                                long samples, double* value) {
  return guarded([&] {
    require(value != nullptr, "null output");
    require(samples > 0, "sample count must be positive");
    const auto params = params_of(p);
    const Kind which = kind == TT_KIND_B ? Kind::B : Kind::Bprime;
    QuadratureSpec q{N, static_cast<std::size_t>(samples), default_variant(which), kDefaultTol};
    *value = wright_coefficient(params, R, S, q, which);
  });
}

tt_status tt_arc_split_diagnostic(const tt_theta_params* p, long R, long S, tt_kind kind, long N,
                                  long samples, tt_arc_split* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(samples > 0, "sample count must be positive");
    const auto params = params_of(p);
    const Kind which = kind == TT_KIND_B ? Kind::B : Kind::Bprime;
    const auto r = arc_split_diagnostic(params, R, S, N, static_cast<std::size_t>(samples), which);
    *out = {r.main_arc.real(), r.main_arc.imag(), r.error_arc.real(), r.error_arc.imag(), r.ratio};
  });
}

}  // extern "C"
