#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schroder {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// N(n, k) = C(n, k) C(n, k-1) / n for 1 <= k <= n, N(0, 0) = 1, else 0.
BigInt narayana(long n, long k);

/// Avoiding partitions of [n+1] with k+1 blocks (either pattern):
/// sum_{j=k}^{n} N(j, k) C(n, j) for k >= 1, and 1 for k = 0.
BigInt count_blocks(long n, long k);

/// UH-free Schroder paths of semilength n with k peaks, counted by
/// inserting n-j H steps into a Dyck path of semilength j with k peaks.
BigInt count_uhfree_with_peaks(long n, long k);

/// Large Schroder numbers by first-step decomposition:
/// r_n = r_{n-1} + sum_{i+j=n-1} r_i r_j.
BigInt large_schroder(long n);

enum class SeriesId { f, f_prime, schroder, bell };

std::string_view to_string(SeriesId id);
/// Accepts "f", "fprime" (or "f_prime"), "schroder", "bell".
SeriesId parse_series_id(std::string_view name);

/// Truncated power series, coefficients[i] is the coefficient of x^i.
struct SeriesTable {
  SeriesId id = SeriesId::f;
  std::vector<BigInt> coefficients;
};

/// f = 1 + 2x f + x f (f - 1 - x f), solved coefficientwise up to x^order.
SeriesTable series_f(int order);

/// f' = 1 + x f' + x f' (f - 1 - x f), solved coefficientwise.
SeriesTable series_f_prime(int order);

SeriesTable series_schroder(int order);

/// Bell numbers via B_{n+1} = sum_k C(n, k) B_k.
SeriesTable series_bell(int order);

SeriesTable series(SeriesId id, int order);

/// Default truncation order of the series helpers.
inline constexpr int kDefaultSeriesOrder = 32;

// Exact polynomial helpers for identity checks; all truncate at `order`.
using Poly = std::vector<BigInt>;
Poly poly_mul(const Poly& a, const Poly& b, int order);
Poly poly_add(const Poly& a, const Poly& b, int order);
Poly poly_sub(const Poly& a, const Poly& b, int order);
/// Multiplies by x (shift up one degree), truncated.
Poly poly_shift(const Poly& a, int order);

/// RHS - LHS of the f equation, coefficients 0..order.
Poly f_residual(const Poly& f, int order);
/// RHS - LHS of the f' equation.
Poly f_prime_residual(const Poly& f, const Poly& fp, int order);

}  // namespace schroder
