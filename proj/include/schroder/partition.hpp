#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

/// Default ceiling on the size accepted by the exhaustive generators.
inline constexpr int kDefaultExhaustiveLimit = 12;

/// A set partition of [n] in canonical sequential form (a restricted
/// growth string): word[i] is the 1-based index of the block holding
/// element i+1, blocks numbered by their minima.
class SetPartition {
 public:
  /// The partition of the empty set.
  SetPartition() = default;

  /// Validates the restricted growth condition; throws ParseError naming
  /// the first offending 1-based position.
  static SetPartition from_word(std::vector<int> word);

  const std::vector<int>& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  int operator[](std::size_t i) const { return word_[i]; }

  /// Number of blocks, i.e. the largest label.
  int block_count() const noexcept;

  /// Comma-separated canonical text, e.g. "1,1,2".
  std::string to_string() const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  explicit SetPartition(std::vector<int> word) : word_(std::move(word)) {}

  std::vector<int> word_;
};

/// Accepts "1,1,2" or the compact "112" (all labels <= 9). Empty text is
/// the empty partition.
SetPartition parse_partition(std::string_view text);

/// Factorization 1 w_1 2 w_2 ... k w_k of a nonempty partition.
struct Decomposition {
  int k = 0;
  /// 0-based positions of the first occurrences of 1..k.
  std::vector<std::size_t> maxima_positions;
  /// words[i-1] is w_i; every letter is <= i.
  std::vector<std::vector<int>> words;
  /// d[i-1] counts the occurrences of i after the first occurrence of i+1.
  std::vector<int> d;

  /// Reassembles 1 w_1 ... k w_k.
  std::vector<int> reassemble() const;
};

Decomposition decompose(const SetPartition& p);

/// Visits every restricted growth string of length n once, in
/// lexicographic order. Throws LimitError when n > limit.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit,
                        int limit = kDefaultExhaustiveLimit);

std::vector<SetPartition> generate_partitions(int n, int limit = kDefaultExhaustiveLimit);

/// Leftmost occurrence of pattern in p (0-based positions), by plain
/// backtracking over subsequences.
std::optional<std::vector<std::size_t>> find_pattern(const SetPartition& p,
                                                     const SetPartition& pattern);

bool contains_pattern(const SetPartition& p, const SetPartition& pattern);
inline bool avoids(const SetPartition& p, const SetPartition& pattern) {
  return !contains_pattern(p, pattern);
}

const SetPartition& pattern_12312();
const SetPartition& pattern_12321();

// Fast checks via the decomposition. Call the letters of w_i other than i
// "stripped" letters, each tagged with its word index i. Then p avoids
// 12321 iff the stripped letters are weakly increasing, and p avoids 12312
// iff no stripped s before t has value(s) < value(t) < tag(s).
bool avoids_12312_fast(const SetPartition& p);
bool avoids_12321_fast(const SetPartition& p);

/// No split point m in [n-1] separates the blocks into [m] and [m+1..n].
bool is_irreducible(const SetPartition& p);

/// Every label i >= 2 has some smaller label after its first occurrence.
bool is_irreducible_char(const SetPartition& p);

}  // namespace schroder
