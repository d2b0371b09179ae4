#include "schroder/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "schroder/error.hpp"

namespace schroder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SetPartition SetPartition::from_word(std::vector<int> word) {
  int max_seen = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > max_seen + 1) {
      throw ParseError("restricted-growth violation at position " + std::to_string(i + 1));
    }
    max_seen = std::max(max_seen, word[i]);
  }
  return SetPartition(std::move(word));
}

int SetPartition::block_count() const noexcept {
  return word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

SetPartition parse_partition(std::string_view text) {
  text = trim(text);
  std::vector<int> word;
  if (text.empty()) return SetPartition{};

  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                         std::to_string(i));
      }
      word.push_back(c - '0');
    }
    return SetPartition::from_word(std::move(word));
  }

  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("bad label '" + std::string(field) + "' in field " +
                       std::to_string(word.size() + 1));
    }
    word.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SetPartition::from_word(std::move(word));
}

std::vector<int> Decomposition::reassemble() const {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) {
    out.push_back(i);
    const auto& w = words[static_cast<std::size_t>(i - 1)];
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

Decomposition decompose(const SetPartition& p) {
  Decomposition dec;
  dec.k = p.block_count();
  dec.words.resize(static_cast<std::size_t>(dec.k));
  dec.d.assign(static_cast<std::size_t>(std::max(dec.k - 1, 0)), 0);

  int current = 0;
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    const int letter = p[pos];
    if (letter > current) {
      current = letter;
      dec.maxima_positions.push_back(pos);
      continue;
    }
    dec.words[static_cast<std::size_t>(current - 1)].push_back(letter);
    // letter < current means its successor's first occurrence is behind us.
    if (letter < current) ++dec.d[static_cast<std::size_t>(letter - 1)];
  }
  return dec;
}

namespace {

void check_limit(int n, int limit) {
  if (n < 0) throw PreconditionError("size must be non-negative");
  if (n > limit) {
    throw LimitError("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                     std::to_string(limit));
  }
}

void extend_rgs(std::vector<int>& word, std::size_t n, int max_seen,
                const std::function<void(const SetPartition&)>& visit) {
  if (word.size() == n) {
    visit(SetPartition::from_word(word));
    return;
  }
  for (int label = 1; label <= max_seen + 1; ++label) {
    word.push_back(label);
    extend_rgs(word, n, std::max(max_seen, label), visit);
    word.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit, int limit) {
  check_limit(n, limit);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  extend_rgs(word, static_cast<std::size_t>(n), 0, visit);
}

std::vector<SetPartition> generate_partitions(int n, int limit) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); }, limit);
  return out;
}

namespace {

// Pattern letters are mapped injectively and monotonically onto letters of
// p; `assigned[a]` is the image of pattern label a+1, or 0.
bool match_from(const SetPartition& p, const SetPartition& pattern, std::size_t ppos,
                std::size_t tpos, std::vector<int>& assigned, std::vector<std::size_t>& where) {
  if (tpos == pattern.size()) return true;
  const int want = pattern[tpos];
  int& image = assigned[static_cast<std::size_t>(want - 1)];
  const std::size_t remaining = pattern.size() - tpos;

  for (std::size_t i = ppos; i + remaining <= p.size(); ++i) {
    const int letter = p[i];
    if (image != 0) {
      if (letter != image) continue;
      where.push_back(i);
      if (match_from(p, pattern, i + 1, tpos + 1, assigned, where)) return true;
      where.pop_back();
      continue;
    }
    bool consistent = true;
    for (std::size_t a = 0; a < assigned.size() && consistent; ++a) {
      if (assigned[a] == 0) continue;
      const int label = static_cast<int>(a) + 1;
      consistent = (label < want) == (assigned[a] < letter) &&
                   (label > want) == (assigned[a] > letter);
    }
    if (!consistent) continue;
    image = letter;
    where.push_back(i);
    if (match_from(p, pattern, i + 1, tpos + 1, assigned, where)) return true;
    where.pop_back();
    image = 0;
  }
  return false;
}

struct StrippedLetter {
  int value;
  int tag;
};

std::vector<StrippedLetter> stripped_letters(const SetPartition& p) {
  std::vector<StrippedLetter> out;
  int current = 0;
  for (const int letter : p.word()) {
    if (letter > current) {
      current = letter;
    } else if (letter < current) {
      out.push_back({letter, current});
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_pattern(const SetPartition& p,
                                                     const SetPartition& pattern) {
  if (pattern.size() > p.size()) return std::nullopt;
  std::vector<int> assigned(static_cast<std::size_t>(pattern.block_count()), 0);
  std::vector<std::size_t> where;
  if (match_from(p, pattern, 0, 0, assigned, where)) return where;
  return std::nullopt;
}

bool contains_pattern(const SetPartition& p, const SetPartition& pattern) {
  return find_pattern(p, pattern).has_value();
}

const SetPartition& pattern_12312() {
  static const SetPartition pattern = SetPartition::from_word({1, 2, 3, 1, 2});
  return pattern;
}

const SetPartition& pattern_12321() {
  static const SetPartition pattern = SetPartition::from_word({1, 2, 3, 2, 1});
  return pattern;
}

bool avoids_12312_fast(const SetPartition& p) {
  // Scanning right to left, a later stripped letter t breaks s exactly when
  // value(s) < value(t) < tag(s); the smallest later value above value(s)
  // is all that matters.
  const auto letters = stripped_letters(p);
  std::vector<bool> seen(static_cast<std::size_t>(p.block_count()) + 1, false);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    for (int v = it->value + 1; v < it->tag; ++v) {
      if (seen[static_cast<std::size_t>(v)]) return false;
    }
    seen[static_cast<std::size_t>(it->value)] = true;
  }
  return true;
}

bool avoids_12321_fast(const SetPartition& p) {
  const auto letters = stripped_letters(p);
  return std::is_sorted(letters.begin(), letters.end(),
                        [](const StrippedLetter& a, const StrippedLetter& b) {
                          return a.value < b.value;
                        });
}

bool is_irreducible(const SetPartition& p) {
  const std::size_t n = p.size();
  const int k = p.block_count();
  std::vector<std::size_t> first(static_cast<std::size_t>(k) + 1, n);
  std::vector<std::size_t> last(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = static_cast<std::size_t>(p[i]);
    first[b] = std::min(first[b], i);
    last[b] = i;
  }
  for (std::size_t m = 1; m < n; ++m) {
    // Split between positions m-1 and m (0-based) is clean when no block
    // straddles it.
    bool straddled = false;
    for (std::size_t b = 1; b <= static_cast<std::size_t>(k) && !straddled; ++b) {
      straddled = first[b] < m && last[b] >= m;
    }
    if (!straddled) return false;
  }
  return true;
}

bool is_irreducible_char(const SetPartition& p) {
  const int k = p.block_count();
  // min_after[i] tracks the smallest label seen after the first occurrence of i.
  std::vector<int> min_after(static_cast<std::size_t>(k) + 1, k + 1);
  int current = 0;
  for (const int letter : p.word()) {
    for (int i = 2; i <= current; ++i) {
      auto& m = min_after[static_cast<std::size_t>(i)];
      m = std::min(m, letter);
    }
    current = std::max(current, letter);
  }
  for (int i = 2; i <= k; ++i) {
    if (min_after[static_cast<std::size_t>(i)] >= i) return false;
  }
  return true;
}

}  // namespace schroder
