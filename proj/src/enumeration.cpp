#include "schroder/enumeration.hpp"

#include <algorithm>

#include "schroder/error.hpp"

namespace schroder {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

BigInt narayana(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt count_blocks(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return 1;
  BigInt total = 0;
  for (long j = k; j <= n; ++j) total += narayana(j, k) * binomial(n, j);
  return total;
}

BigInt count_uhfree_with_peaks(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return 1;  // only H^n
  BigInt total = 0;
  for (long j = k; j <= n; ++j) total += narayana(j, k) * binomial(n, j);
  return total;
}

BigInt large_schroder(long n) {
  if (n < 0) return 0;
  std::vector<BigInt> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  for (std::size_t m = 1; m < r.size(); ++m) {
    BigInt sum = r[m - 1];
    for (std::size_t i = 0; i < m; ++i) sum += r[i] * r[m - 1 - i];
    r[m] = sum;
  }
  return r.back();
}

std::string_view to_string(SeriesId id) {
  switch (id) {
    case SeriesId::f:
      return "f";
    case SeriesId::f_prime:
      return "fprime";
    case SeriesId::schroder:
      return "schroder";
    case SeriesId::bell:
      return "bell";
  }
  return "unknown";
}

SeriesId parse_series_id(std::string_view name) {
  if (name == "f") return SeriesId::f;
  if (name == "fprime" || name == "f_prime") return SeriesId::f_prime;
  if (name == "schroder") return SeriesId::schroder;
  if (name == "bell") return SeriesId::bell;
  throw ParseError("unknown series '" + std::string(name) + "'");
}

namespace {

// g = f - 1 - x f.
Poly f_shifted_difference(const Poly& f) {
  Poly g(f.size());
  for (std::size_t j = 1; j < f.size(); ++j) g[j] = f[j] - f[j - 1];
  return g;
}

void check_order(int order) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
}

}  // namespace

SeriesTable series_f(int order) {
  check_order(order);
  Poly s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (std::size_t n = 1; n < s.size(); ++n) {
    // [x^n] of 2x f + x f g, with g_0 = 0 so only s_0..s_{n-1} appear.
    BigInt c = 2 * s[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t j = n - 1 - i;
      c += s[i] * (s[j] - s[j - 1]);
    }
    s[n] = c;
  }
  return {SeriesId::f, std::move(s)};
}

SeriesTable series_f_prime(int order) {
  const Poly f = series_f(order).coefficients;
  const Poly g = f_shifted_difference(f);
  Poly sp(f.size());
  sp[0] = 1;
  for (std::size_t n = 1; n < sp.size(); ++n) {
    BigInt c = sp[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) c += sp[i] * g[n - 1 - i];
    sp[n] = c;
  }
  return {SeriesId::f_prime, std::move(sp)};
}

SeriesTable series_schroder(int order) {
  check_order(order);
  Poly r(static_cast<std::size_t>(order) + 1);
  for (std::size_t n = 0; n < r.size(); ++n) r[n] = large_schroder(static_cast<long>(n));
  return {SeriesId::schroder, std::move(r)};
}

SeriesTable series_bell(int order) {
  check_order(order);
  Poly b(static_cast<std::size_t>(order) + 1);
  b[0] = 1;
  for (std::size_t n = 1; n < b.size(); ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += binomial(static_cast<long>(n - 1), static_cast<long>(k)) * b[k];
    }
    b[n] = sum;
  }
  return {SeriesId::bell, std::move(b)};
}

SeriesTable series(SeriesId id, int order) {
  switch (id) {
    case SeriesId::f:
      return series_f(order);
    case SeriesId::f_prime:
      return series_f_prime(order);
    case SeriesId::schroder:
      return series_schroder(order);
    case SeriesId::bell:
      return series_bell(order);
  }
  throw PreconditionError("unknown series");
}

Poly poly_mul(const Poly& a, const Poly& b, int order) {
  Poly out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, int order) {
  Poly out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, int order) {
  Poly out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return out;
}

Poly poly_shift(const Poly& a, int order) {
  Poly out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i + 1 < out.size() && i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

Poly f_residual(const Poly& f, int order) {
  const Poly one{1};
  // g = f - 1 - x f
  const Poly g = poly_sub(poly_sub(f, one, order), poly_shift(f, order), order);
  Poly rhs = poly_add(one, poly_shift(poly_add(f, f, order), order), order);
  rhs = poly_add(rhs, poly_shift(poly_mul(f, g, order), order), order);
  return poly_sub(rhs, f, order);
}

Poly f_prime_residual(const Poly& f, const Poly& fp, int order) {
  const Poly one{1};
  const Poly g = poly_sub(poly_sub(f, one, order), poly_shift(f, order), order);
  Poly rhs = poly_add(one, poly_shift(fp, order), order);
  rhs = poly_add(rhs, poly_shift(poly_mul(fp, g, order), order), order);
  return poly_sub(rhs, fp, order);
}

}  // namespace schroder
