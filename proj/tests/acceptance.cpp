// Acceptance harness: one PASS/FAIL line per criterion, with wall time.
// Every check is exact; timing bounds are part of the criterion where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "schroder/bijection.hpp"
#include "schroder/cli.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/partition.hpp"
#include "schroder/path.hpp"

using namespace schroder;
using Clock = std::chrono::steady_clock;

// Criterion 8, second half: counting is done in exact unbounded integers and
// the public counting API cannot return anything narrower.
static_assert(std::numeric_limits<BigInt>::is_exact && !std::numeric_limits<BigInt>::is_bounded);
static_assert(std::is_same_v<decltype(count_blocks(0, 0)), BigInt>);
static_assert(std::is_same_v<decltype(count_uhfree_with_peaks(0, 0)), BigInt>);
static_assert(std::is_same_v<decltype(narayana(0, 0)), BigInt>);
static_assert(std::is_same_v<decltype(large_schroder(0)), BigInt>);
static_assert(std::is_same_v<Poly::value_type, BigInt>);

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (out.ok && limit_ms > 0 && ms >= limit_ms) {
    std::ostringstream s;
    s << "took " << ms << " ms, limit " << limit_ms << " ms";
    out.fail(s.str());
  }
  if (!out.ok) ++failures;
  std::printf("%s C%d %s (%.3f ms)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), ms,
              out.ok ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

// Times a single golden in isolation, so the bound applies to each one.
template <class F>
void golden(Outcome& out, const std::string& name, F&& f, const std::string& expected) {
  const auto start = Clock::now();
  const std::string got = f();
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (got != expected) out.fail(name + " gave " + got);
  if (ms >= 1.0) out.fail(name + " took " + std::to_string(ms) + " ms");
}

std::set<LatticePath> as_set(const std::vector<LatticePath>& v) { return {v.begin(), v.end()}; }

}  // namespace

int main() {
  const LatticePath example_path = parse_path("HUUDHHUUUDDHDHDUUDD", PathClass::schroder);
  const LatticePath example_dyck = parse_path("UUUDDHUDDUD", PathClass::schroder);
  const SetPartition example_partition = SetPartition::from_word({1, 1, 2, 3, 2, 3, 4, 3, 4, 1, 1});

  report(1, "worked-example goldens", 0, [&] {
    Outcome out;
    golden(out, "encode", [&] { return sigma(example_partition).to_string(); }, "HUUUDUUDDHUUDDHDD");
    golden(out, "sigma_inv", [&] { return sigma_inv(example_path).to_string(); }, "1,1,2,2,2,3,2,3,2,3,1,4,3");
    golden(out, "phi_inv", [&] { return phi_inv(example_path).to_string(); }, "1,1,2,2,2,3,1,3,2,3,2,4,3");
    golden(out, "psi", [&] { return psi(example_dyck).to_string(); }, "UHUHUDDDUD");
    return out;
  });

  report(2, "encode/decode bijectivity n=0..8", 30'000, [] {
    Outcome out;
    for (int n = 0; n <= 8 && out.ok; ++n) {
      const std::set<LatticePath> target = as_set(generate_paths(n, PathClass::uh_free));
      std::set<LatticePath> img_s;
      std::set<LatticePath> img_p;
      std::size_t avoid_s = 0;
      std::size_t avoid_p = 0;
      for_each_partition(n + 1, [&](const SetPartition& p) {
        if (avoids(p, pattern_12312())) {
          ++avoid_s;
          const LatticePath q = sigma(p);
          if (sigma_inv(q) != p) out.fail("sigma_inv(sigma(" + p.to_string() + ")) differs");
          img_s.insert(q);
        }
        if (avoids(p, pattern_12321())) {
          ++avoid_p;
          const LatticePath q = phi(p);
          if (phi_inv(q) != p) out.fail("phi_inv(phi(" + p.to_string() + ")) differs");
          img_p.insert(q);
        }
      });
      if (img_s != target || avoid_s != target.size()) out.fail("sigma image at n=" + std::to_string(n));
      if (img_p != target || avoid_p != target.size()) out.fail("phi image at n=" + std::to_string(n));
      for (const auto& q : target) {
        if (sigma(sigma_inv(q)) != q) out.fail("sigma(sigma_inv(" + q.to_string() + ")) differs");
        if (phi(phi_inv(q)) != q) out.fail("phi(phi_inv(" + q.to_string() + ")) differs");
      }
    }
    return out;
  });

  report(3, "psi bijectivity n=0..8", 0, [] {
    Outcome out;
    for (int n = 0; n <= 8 && out.ok; ++n) {
      const auto source = generate_paths(n, PathClass::uh_free);
      const std::set<LatticePath> target = as_set(generate_paths(n, PathClass::no_even_peak));
      std::set<LatticePath> image;
      for (const auto& q : source) {
        const LatticePath r = psi(q);
        if (psi_inv(r) != q) out.fail("psi_inv(psi(" + q.to_string() + ")) differs");
        image.insert(r);
      }
      if (image != target || source.size() != target.size()) {
        out.fail("psi image at n=" + std::to_string(n));
      }
      for (const auto& r : target) {
        if (psi(psi_inv(r)) != r) out.fail("psi(psi_inv(" + r.to_string() + ")) differs");
      }
    }
    return out;
  });

  report(4, "count_blocks vs partition and peak censuses n=0..8", 0, [] {
    Outcome out;
    for (int n = 0; n <= 8; ++n) {
      std::map<int, long> by_blocks_s;
      std::map<int, long> by_blocks_p;
      for_each_partition(n + 1, [&](const SetPartition& p) {
        if (avoids(p, pattern_12312())) ++by_blocks_s[p.block_count() - 1];
        if (avoids(p, pattern_12321())) ++by_blocks_p[p.block_count() - 1];
      });
      std::map<int, long> by_peaks;
      for_each_path(n, PathClass::uh_free,
                    [&](const LatticePath& q) { ++by_peaks[static_cast<int>(peaks(q).size())]; });
      for (int k = 0; k <= n + 1; ++k) {
        const BigInt c = count_blocks(n, k);
        if (c != by_blocks_s[k] || c != by_blocks_p[k] || c != by_peaks[k]) {
          out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
    return out;
  });

  report(5, "series f and f' against exhaustive counts", 0, [] {
    Outcome out;
    const Poly f = series_f(16).coefficients;
    const Poly fp = series_f_prime(16).coefficients;
    const Poly inner = poly_sub(Poly{1}, poly_mul(Poly{0, 1, -1}, f, 16), 16);
    const Poly product = poly_mul(fp, inner, 16);
    for (int i = 0; i <= 16; ++i) {
      if (product[static_cast<std::size_t>(i)] != (i == 0 ? 1 : 0)) {
        out.fail("f'(1-x(1-x)f) coefficient " + std::to_string(i));
      }
    }
    const std::vector<int> head{1, 2, 5, 15, 51, 188};
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (f[i] != head[i]) out.fail("f head at " + std::to_string(i));
    }
    for (int n = 0; n <= 8; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      long avoid_s = 0, avoid_p = 0, irr_s = 0, irr_p = 0;
      for_each_partition(n + 1, [&](const SetPartition& p) {
        const bool irr = is_irreducible(p);
        if (avoids(p, pattern_12312())) {
          ++avoid_s;
          irr_s += irr;
        }
        if (avoids(p, pattern_12321())) {
          ++avoid_p;
          irr_p += irr;
        }
      });
      const auto uh = generate_paths(n, PathClass::uh_free).size();
      const auto uh1 = generate_paths(n, PathClass::uh_free_no_level_one).size();
      if (f[idx] != uh || f[idx] != avoid_s || f[idx] != avoid_p) {
        out.fail("f_" + std::to_string(n));
      }
      if (fp[idx] != uh1 || fp[idx] != irr_s || fp[idx] != irr_p) {
        out.fail("f'_" + std::to_string(n));
      }
    }
    return out;
  });

  report(6, "skew Dyck paths ending in D counted by f' n=0..7", 10'000, [] {
    Outcome out;
    const Poly fp = series_f_prime(7).coefficients;
    const std::vector<std::size_t> totals{1, 1, 3, 10, 36, 137};
    for (int n = 0; n <= 7; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      if (fp[idx] != generate_paths(n, PathClass::skew_dyck_end_down).size()) {
        out.fail("n=" + std::to_string(n));
      }
      if (idx < totals.size() && generate_paths(n, PathClass::skew_dyck).size() != totals[idx]) {
        out.fail("skew total at n=" + std::to_string(n));
      }
    }
    return out;
  });

  report(7, "fast avoidance and irreducibility predicates n<=9", 0, [] {
    Outcome out;
    for (int n = 0; n <= 9; ++n) {
      for_each_partition(n, [&](const SetPartition& p) {
        if (avoids_12312_fast(p) != avoids(p, pattern_12312())) out.fail("12312 at " + p.to_string());
        if (avoids_12321_fast(p) != avoids(p, pattern_12321())) out.fail("12321 at " + p.to_string());
        if (is_irreducible(p) != is_irreducible_char(p)) out.fail("irreducible at " + p.to_string());
      });
    }
    return out;
  });

  report(8, "verify --max-n 8 exits 0", 120'000, [] {
    Outcome out;
    std::istringstream in;
    std::ostringstream text;
    std::ostringstream err;
    const int code = cli::run({"verify", "--max-n", "8"}, in, text, err);
    if (code != cli::kOk) out.fail("exit " + std::to_string(code) + "\n" + text.str() + err.str());
    return out;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
