#include "schroder/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "schroder/bijection.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/error.hpp"
#include "schroder/path.hpp"

namespace schroder {

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

namespace {

using Failure = std::optional<std::string>;

class Universe {
 public:
  explicit Universe(int limit) : limit_(limit) {}

  const std::vector<SetPartition>& partitions(int n) {
    auto it = partitions_.find(n);
    if (it == partitions_.end()) it = partitions_.emplace(n, generate_partitions(n, limit_)).first;
    return it->second;
  }

  const std::vector<SetPartition>& avoiders(int n, Avoidance avoid) {
    const auto key = std::make_pair(n, avoid);
    auto it = avoiders_.find(key);
    if (it == avoiders_.end()) {
      const SetPartition& pattern =
          avoid == Avoidance::p12312 ? pattern_12312() : pattern_12321();
      std::vector<SetPartition> out;
      for (const auto& p : partitions(n)) {
        if (!contains_pattern(p, pattern)) out.push_back(p);
      }
      it = avoiders_.emplace(key, std::move(out)).first;
    }
    return it->second;
  }

  const std::vector<LatticePath>& paths(int n, PathClass cls) {
    const auto key = std::make_pair(n, cls);
    auto it = paths_.find(key);
    if (it == paths_.end()) it = paths_.emplace(key, generate_paths(n, cls, limit_)).first;
    return it->second;
  }

 private:
  int limit_;
  std::map<int, std::vector<SetPartition>> partitions_;
  std::map<std::pair<int, Avoidance>, std::vector<SetPartition>> avoiders_;
  std::map<std::pair<int, PathClass>, std::vector<LatticePath>> paths_;
};

struct Property {
  std::string name;
  int n_min;
  int n_max;
  std::function<Failure(int, Universe&)> check;
};

std::string str(const BigInt& v) { return v.str(); }

std::string mismatch(const std::string& what, const BigInt& got, const BigInt& want) {
  return what + " = " + str(got) + ", expected " + str(want);
}

const char* pattern_name(Avoidance a) { return a == Avoidance::p12312 ? "12312" : "12321"; }

DownRule rule_for(Avoidance a) { return a == Avoidance::p12312 ? DownRule::max : DownRule::min; }

Failure roundtrip(int n, Universe& u, Avoidance avoid) {
  for (const auto& p : u.avoiders(n + 1, avoid)) {
    const LatticePath path = encode(p, avoid);
    if (path.semilength() != n || !in_class(path, PathClass::uh_free)) {
      return "encode(" + p.to_string() + ") = " + path.to_string() + " is not UH-free of semilength " +
             std::to_string(n);
    }
    const SetPartition back = decode(path, rule_for(avoid));
    if (back != p) {
      return "decode(encode(" + p.to_string() + ")) = " + back.to_string();
    }
  }
  for (const auto& path : u.paths(n, PathClass::uh_free)) {
    const SetPartition p = decode(path, rule_for(avoid));
    if (contains_pattern(p, avoid == Avoidance::p12312 ? pattern_12312() : pattern_12321())) {
      return "decode(" + path.to_string() + ") = " + p.to_string() + " contains the pattern";
    }
    if (encode(p, avoid) != path) return "encode(decode(" + path.to_string() + ")) differs";
  }
  return std::nullopt;
}

Failure image_is_uh_free(int n, Universe& u, Avoidance avoid) {
  std::set<LatticePath> image;
  for (const auto& p : u.avoiders(n + 1, avoid)) {
    if (!image.insert(encode(p, avoid)).second) {
      return "encode is not injective at " + p.to_string();
    }
  }
  const auto& target = u.paths(n, PathClass::uh_free);
  for (const auto& path : target) {
    if (!image.contains(path)) return "UH-free path " + path.to_string() + " is not hit";
  }
  if (image.size() != target.size()) return std::string("image is larger than the UH-free set");
  return std::nullopt;
}

Failure blocks_to_peaks(int n, Universe& u, Avoidance avoid) {
  for (const auto& p : u.avoiders(n + 1, avoid)) {
    const auto peak_count = peaks(encode(p, avoid)).size();
    if (static_cast<std::size_t>(p.block_count()) != peak_count + 1) {
      return p.to_string() + " has " + std::to_string(p.block_count()) + " blocks but " +
             std::to_string(peak_count) + " peaks";
    }
  }
  return std::nullopt;
}

Failure irreducible_to_level_one(int n, Universe& u, Avoidance avoid) {
  for (const auto& p : u.avoiders(n + 1, avoid)) {
    const bool irreducible = is_irreducible(p);
    const bool no_level_one = classify(encode(p, avoid)).no_level_one_peak;
    if (irreducible != no_level_one) {
      return p.to_string() + ": irreducible=" + (irreducible ? "true" : "false") +
             ", no level-one peak=" + (no_level_one ? "true" : "false");
    }
  }
  return std::nullopt;
}

Failure full_map_image(int n, Universe& u, Avoidance avoid) {
  std::set<LatticePath> image;
  for (const auto& p : u.avoiders(n + 1, avoid)) {
    const LatticePath q = psi(encode(p, avoid));
    if (!image.insert(q).second) return "full map is not injective at " + p.to_string();
    const SetPartition back = decode(psi_inv(q), rule_for(avoid));
    if (back != p) return "full inverse of " + q.to_string() + " gives " + back.to_string();
  }
  const auto& target = u.paths(n, PathClass::no_even_peak);
  if (image != std::set<LatticePath>(target.begin(), target.end())) {
    return std::string("image differs from the no-even-peak set");
  }
  return std::nullopt;
}

std::map<int, BigInt> block_census(int n, Universe& u, Avoidance avoid) {
  std::map<int, BigInt> census;
  for (const auto& p : u.avoiders(n + 1, avoid)) census[p.block_count() - 1] += 1;
  return census;
}

std::map<int, BigInt> peak_census(const std::vector<LatticePath>& paths) {
  std::map<int, BigInt> census;
  for (const auto& path : paths) census[static_cast<int>(peaks(path).size())] += 1;
  return census;
}

Failure compare_census(const std::string& what, int n, const std::map<int, BigInt>& census,
                       BigInt (*formula)(long, long)) {
  for (int k = 0; k <= n + 1; ++k) {
    const auto it = census.find(k);
    const BigInt observed = it == census.end() ? BigInt(0) : it->second;
    const BigInt predicted = formula(n, k);
    if (observed != predicted) {
      return what + "(" + std::to_string(n) + "," + std::to_string(k) + ") = " + str(predicted) +
             " but the census has " + str(observed);
    }
  }
  return std::nullopt;
}

BigInt count(std::size_t n) { return BigInt(n); }

std::vector<Property> build_properties(int max_n) {
  std::vector<Property> props;
  const int part_max = max_n + 1;

  props.push_back({"partitions.bell_count", 0, part_max, [](int n, Universe& u) -> Failure {
                     const BigInt want = series_bell(n).coefficients.back();
                     const auto& all = u.partitions(n);
                     if (count(all.size()) != want) return mismatch("|P_n|", count(all.size()), want);
                     if (!std::is_sorted(all.begin(), all.end()) ||
                         std::adjacent_find(all.begin(), all.end()) != all.end()) {
                       return std::string("generation order is not strictly lexicographic");
                     }
                     return std::nullopt;
                   }});

  props.push_back({"partitions.decompose_reassembles", 1, part_max, [](int n, Universe& u) -> Failure {
                     for (const auto& p : u.partitions(n)) {
                       if (decompose(p).reassemble() != p.word()) return p.to_string();
                     }
                     return std::nullopt;
                   }});

  for (const Avoidance avoid : {Avoidance::p12312, Avoidance::p12321}) {
    props.push_back({std::string("partitions.fast_") + pattern_name(avoid) + "_matches_containment",
                     0, part_max, [avoid](int n, Universe& u) -> Failure {
                       const SetPartition& pattern =
                           avoid == Avoidance::p12312 ? pattern_12312() : pattern_12321();
                       for (const auto& p : u.partitions(n)) {
                         const bool fast = avoid == Avoidance::p12312 ? avoids_12312_fast(p)
                                                                      : avoids_12321_fast(p);
                         if (fast == contains_pattern(p, pattern)) return p.to_string();
                       }
                       return std::nullopt;
                     }});
  }

  props.push_back({"partitions.irreducible_characterization", 1, part_max,
                   [](int n, Universe& u) -> Failure {
                     for (const auto& p : u.partitions(n)) {
                       if (is_irreducible(p) != is_irreducible_char(p)) return p.to_string();
                     }
                     return std::nullopt;
                   }});

  props.push_back({"paths.schroder_count", 0, max_n, [](int n, Universe& u) -> Failure {
                     const BigInt got = count(u.paths(n, PathClass::schroder).size());
                     const BigInt want = large_schroder(n);
                     if (got != want) return mismatch("|Schroder_n|", got, want);
                     return std::nullopt;
                   }});

  props.push_back({"paths.generated_paths_parse", 0, max_n, [](int n, Universe& u) -> Failure {
                     for (const PathClass cls : all_path_classes()) {
                       for (const auto& path : u.paths(n, cls)) {
                         try {
                           if (parse_path(path.to_string(), cls) != path) return path.to_string();
                         } catch (const ParseError& e) {
                           return path.to_string() + ": " + e.what();
                         }
                       }
                     }
                     return std::nullopt;
                   }});

  props.push_back({"paths.dyck_peaks_narayana", 0, max_n, [](int n, Universe& u) -> Failure {
                     return compare_census("N", n, peak_census(u.paths(n, PathClass::dyck)),
                                           [](long nn, long k) { return narayana(nn, k); });
                   }});

  props.push_back({"paths.uh_free_equinumerous_no_even_peak", 0, max_n,
                   [](int n, Universe& u) -> Failure {
                     const BigInt a = count(u.paths(n, PathClass::uh_free).size());
                     const BigInt b = count(u.paths(n, PathClass::no_even_peak).size());
                     if (a != b) return mismatch("|SH_n| vs |SE_n|", a, b);
                     return std::nullopt;
                   }});

  for (const Avoidance avoid : {Avoidance::p12312, Avoidance::p12321}) {
    const std::string tag = avoid == Avoidance::p12312 ? "sigma" : "phi";
    props.push_back({tag + ".roundtrip", 0, max_n,
                     [avoid](int n, Universe& u) { return roundtrip(n, u, avoid); }});
    props.push_back({tag + ".image_is_uh_free_set", 0, max_n,
                     [avoid](int n, Universe& u) { return image_is_uh_free(n, u, avoid); }});
    props.push_back({tag + ".blocks_become_peaks", 0, max_n,
                     [avoid](int n, Universe& u) { return blocks_to_peaks(n, u, avoid); }});
    props.push_back({tag + ".irreducible_iff_no_level_one_peak", 0, max_n,
                     [avoid](int n, Universe& u) { return irreducible_to_level_one(n, u, avoid); }});
  }

  props.push_back({"psi.bijection_onto_no_even_peak", 0, max_n, [](int n, Universe& u) -> Failure {
                     std::set<LatticePath> image;
                     for (const auto& path : u.paths(n, PathClass::uh_free)) {
                       const LatticePath q = psi(path);
                       if (q.semilength() != n) return "psi changes semilength of " + path.to_string();
                       if (!in_class(q, PathClass::no_even_peak)) {
                         return "psi(" + path.to_string() + ") = " + q.to_string() + " has an even peak";
                       }
                       if (!image.insert(q).second) return "psi collides at " + path.to_string();
                       if (psi_inv(q) != path) return "psi_inv(psi(" + path.to_string() + ")) differs";
                     }
                     for (const auto& q : u.paths(n, PathClass::no_even_peak)) {
                       if (!image.contains(q)) return "not hit: " + q.to_string();
                       if (psi(psi_inv(q)) != q) return "psi(psi_inv(" + q.to_string() + ")) differs";
                     }
                     return std::nullopt;
                   }});

  for (const Avoidance avoid : {Avoidance::p12312, Avoidance::p12321}) {
    props.push_back({std::string("full") + pattern_name(avoid) + ".bijection_onto_no_even_peak", 0,
                     max_n, [avoid](int n, Universe& u) { return full_map_image(n, u, avoid); }});
  }

  for (const Avoidance avoid : {Avoidance::p12312, Avoidance::p12321}) {
    props.push_back({std::string("count_blocks.partition_census_") + pattern_name(avoid), 0, max_n,
                     [avoid](int n, Universe& u) {
                       return compare_census("count_blocks", n, block_census(n, u, avoid),
                                             [](long nn, long k) { return count_blocks(nn, k); });
                     }});
  }

  props.push_back({"count_blocks.peak_census", 0, max_n, [](int n, Universe& u) {
                     return compare_census("count_blocks", n,
                                           peak_census(u.paths(n, PathClass::uh_free)),
                                           [](long nn, long k) { return count_blocks(nn, k); });
                   }});

  props.push_back({"count_uhfree_with_peaks.peak_census", 0, max_n, [](int n, Universe& u) {
                     return compare_census(
                         "count_uhfree_with_peaks", n, peak_census(u.paths(n, PathClass::uh_free)),
                         [](long nn, long k) { return count_uhfree_with_peaks(nn, k); });
                   }});

  props.push_back({"series.f_counts", 0, max_n, [](int n, Universe& u) -> Failure {
                     const BigInt s = series_f(n).coefficients.back();
                     const BigInt paths = count(u.paths(n, PathClass::uh_free).size());
                     const BigInt a = count(u.avoiders(n + 1, Avoidance::p12312).size());
                     const BigInt b = count(u.avoiders(n + 1, Avoidance::p12321).size());
                     if (s != paths) return mismatch("f_n vs |SH_n|", s, paths);
                     if (s != a) return mismatch("f_n vs |P(12312)|", s, a);
                     if (s != b) return mismatch("f_n vs |P(12321)|", s, b);
                     BigInt blocks = 0;
                     for (long k = 0; k <= n; ++k) blocks += count_blocks(n, k);
                     if (blocks != s) return mismatch("sum_k count_blocks", blocks, s);
                     return std::nullopt;
                   }});

  props.push_back({"series.f_prime_counts", 0, max_n, [](int n, Universe& u) -> Failure {
                     const BigInt s = series_f_prime(n).coefficients.back();
                     const BigInt paths = count(u.paths(n, PathClass::uh_free_no_level_one).size());
                     if (s != paths) return mismatch("f'_n vs |SH'_n|", s, paths);
                     for (const Avoidance avoid : {Avoidance::p12312, Avoidance::p12321}) {
                       const auto& avoiders = u.avoiders(n + 1, avoid);
                       const BigInt irr = count(static_cast<std::size_t>(
                           std::count_if(avoiders.begin(), avoiders.end(),
                                         [](const SetPartition& p) { return is_irreducible(p); })));
                       if (s != irr) {
                         return mismatch(std::string("f'_n vs irreducible ") + pattern_name(avoid) +
                                             "-avoiders",
                                         s, irr);
                       }
                     }
                     const BigInt skew = count(u.paths(n, PathClass::skew_dyck_end_down).size());
                     if (s != skew) return mismatch("f'_n vs skew Dyck ending with D", s, skew);
                     return std::nullopt;
                   }});

  const int series_order = std::max(16, max_n);
  props.push_back({"series.functional_equations", series_order, series_order,
                   [](int order, Universe&) -> Failure {
                     const Poly f = series_f(order).coefficients;
                     const Poly fp = series_f_prime(order).coefficients;
                     const Poly r1 = f_residual(f, order);
                     const Poly r2 = f_prime_residual(f, fp, order);
                     for (int i = 0; i <= order; ++i) {
                       if (r1[static_cast<std::size_t>(i)] != 0) {
                         return "f residual at x^" + std::to_string(i);
                       }
                       if (r2[static_cast<std::size_t>(i)] != 0) {
                         return "f' residual at x^" + std::to_string(i);
                       }
                     }
                     // f' (1 - x(1-x) f) = 1
                     const Poly x_minus_x2{0, 1, -1};
                     const Poly inner = poly_sub(Poly{1}, poly_mul(x_minus_x2, f, order), order);
                     const Poly product = poly_mul(fp, inner, order);
                     for (int i = 0; i <= order; ++i) {
                       if (product[static_cast<std::size_t>(i)] != (i == 0 ? 1 : 0)) {
                         return "f' (1 - x(1-x) f) differs from 1 at x^" + std::to_string(i);
                       }
                     }
                     return std::nullopt;
                   }});

  return props;
}

}  // namespace

VerifyReport run_verification(int max_n, int limit) {
  if (max_n < 0) throw PreconditionError("max-n must be non-negative");
  // Partition-only checks run one size above the bijection range.
  if (max_n + 1 > limit) {
    throw LimitError("verify needs partitions of [" + std::to_string(max_n + 1) +
                     "], above the exhaustive limit " + std::to_string(limit));
  }
  Universe universe(limit);
  VerifyReport report;
  for (const Property& prop : build_properties(max_n)) {
    PropertyResult result;
    result.name = prop.name;
    result.n_min = prop.n_min;
    result.n_max = prop.n_max;
    for (int n = prop.n_min; n <= prop.n_max; ++n) {
      Failure failure;
      try {
        failure = prop.check(n, universe);
      } catch (const Error& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        result.passed = false;
        result.failing_n = n;
        result.counterexample = *failure;
        break;
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    if (r.passed) {
      out << "PASS " << r.name << " n=" << r.n_min << ".." << r.n_max << '\n';
    } else {
      out << "FAIL " << r.name << " n=" << r.failing_n << ": " << r.counterexample << '\n';
    }
  }
  std::size_t failed = 0;
  for (const auto& r : report.results) failed += r.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(report.results.size()) + " properties hold"
                      : std::to_string(failed) + " of " + std::to_string(report.results.size()) +
                            " properties failed")
      << '\n';
  return out.str();
}

}  // namespace schroder
