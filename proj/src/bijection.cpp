#include "schroder/bijection.hpp"

#include <span>
#include <sstream>

#include "schroder/error.hpp"

namespace schroder {

namespace {

std::string witness_text(const std::vector<std::size_t>& where) {
  std::string out;
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(where[i] + 1);
  }
  return out;
}

void require_avoidance(const SetPartition& p, Avoidance avoid) {
  const bool ok = avoid == Avoidance::p12312 ? avoids_12312_fast(p) : avoids_12321_fast(p);
  if (ok) return;
  const SetPartition& pattern = avoid == Avoidance::p12312 ? pattern_12312() : pattern_12321();
  std::string msg = "partition " + p.to_string() + " contains " + pattern.to_string();
  if (const auto where = find_pattern(p, pattern)) msg += " at positions " + witness_text(*where);
  throw PreconditionError(msg);
}

}  // namespace

LatticePath encode(const SetPartition& p, Avoidance avoid) {
  if (p.empty()) throw PreconditionError("cannot encode the empty partition");
  require_avoidance(p, avoid);

  const Decomposition dec = decompose(p);
  std::vector<Step> steps;
  for (int i = 1; i <= dec.k; ++i) {
    if (i >= 2) {
      steps.insert(steps.end(), static_cast<std::size_t>(dec.d[static_cast<std::size_t>(i - 2)]) + 1,
                   Step::U);
      steps.push_back(Step::D);
    }
    for (const int letter : dec.words[static_cast<std::size_t>(i - 1)]) {
      steps.push_back(letter == i ? Step::H : Step::D);
    }
  }
  return LatticePath::from_steps(std::move(steps));
}

DecoderState decode_labels(const LatticePath& p, DownRule rule) {
  if (!in_class(p, PathClass::uh_free)) {
    throw PreconditionError("path " + p.to_string() + " is not a UH-free Schroder path");
  }
  DecoderState state;
  state.steps = {Step::U, Step::D};
  state.steps.insert(state.steps.end(), p.steps().begin(), p.steps().end());

  const std::size_t max_label = peaks(p).size() + 1;
  state.up_counts.assign(max_label + 1, 0);
  state.down_counts.assign(max_label + 1, 0);
  state.labels.reserve(state.steps.size());

  const auto& steps = state.steps;
  int current = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const bool peak_up = steps[i] == Step::U && i + 1 < steps.size() && steps[i + 1] == Step::D;
    const bool peak_down = steps[i] == Step::D && steps[i - 1] == Step::U;
    int label = 0;
    switch (steps[i]) {
      case Step::U:
        if (peak_up) ++current;
        label = current;
        ++state.up_counts[static_cast<std::size_t>(label)];
        break;
      case Step::H:
        label = current;
        break;
      case Step::D:
        if (peak_down) {
          label = state.labels.back();
        } else {
          // L^U \ L^D over the steps strictly to the left.
          for (std::size_t l = 1; l <= max_label; ++l) {
            if (state.up_counts[l] <= state.down_counts[l]) continue;
            label = static_cast<int>(l);
            if (rule == DownRule::min) break;
          }
          if (label == 0) {
            throw PreconditionError("empty label multiset at step " + std::to_string(i) +
                                    " of the extended path");
          }
        }
        ++state.down_counts[static_cast<std::size_t>(label)];
        break;
      case Step::L:
        throw PreconditionError("left steps are not allowed here");
    }
    state.labels.push_back(label);
  }
  return state;
}

std::string format_trace(const DecoderState& state) {
  std::ostringstream out;
  for (std::size_t i = 0; i < state.steps.size(); ++i) {
    out << i << ' ' << static_cast<char>(state.steps[i]) << ' ' << state.labels[i] << '\n';
  }
  return out.str();
}

SetPartition decode(const LatticePath& p, DownRule rule) {
  const DecoderState state = decode_labels(p, rule);
  std::vector<int> word;
  for (std::size_t i = 0; i < state.steps.size(); ++i) {
    if (state.steps[i] != Step::U) word.push_back(state.labels[i]);
  }
  return SetPartition::from_word(std::move(word));
}

namespace {

using Steps = std::span<const Step>;

// Length of the prefix of `s` that stays at or above its starting height,
// i.e. up to (not including) the first step that dips below it.
std::size_t level_prefix(Steps s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Step::U) ++depth;
    if (s[i] == Step::D && depth-- == 0) return i;
  }
  return s.size();
}

void psi_into(Steps s, std::vector<Step>& out) {
  while (!s.empty()) {
    if (s[0] == Step::H) {
      out.push_back(Step::H);
      s = s.subspan(1);
      continue;
    }
    if (s[0] == Step::U && s[1] == Step::D) {
      out.push_back(Step::U);
      out.push_back(Step::D);
      s = s.subspan(2);
      continue;
    }
    // U^k D P_1 D P_2 ... D P_k, k >= 2.
    std::size_t k = 0;
    while (s[k] == Step::U) ++k;
    s = s.subspan(k + 1);
    out.push_back(Step::U);
    for (std::size_t i = 1; i < k; ++i) {
      const std::size_t len = level_prefix(s);
      if (len == 0) {
        out.push_back(Step::H);
      } else {
        out.push_back(Step::U);
        psi_into(s.first(len), out);
        out.push_back(Step::D);
      }
      s = s.subspan(len + 1);
    }
    out.push_back(Step::D);
  }
}

void psi_inv_into(Steps s, std::vector<Step>& out) {
  while (!s.empty()) {
    if (s[0] == Step::H) {
      out.push_back(Step::H);
      s = s.subspan(1);
      continue;
    }
    if (s[0] == Step::U && s[1] == Step::D) {
      out.push_back(Step::U);
      out.push_back(Step::D);
      s = s.subspan(2);
      continue;
    }
    // U B_1 ... B_{k-1} D S with each B_i = H or U X_i D at height >= 1.
    Steps inner = s.subspan(1);
    const std::size_t inner_len = level_prefix(inner);
    Steps rest = inner.subspan(inner_len + 1);
    inner = inner.first(inner_len);

    std::vector<Steps> factors;
    while (!inner.empty()) {
      if (inner[0] == Step::H) {
        factors.push_back({});
        inner = inner.subspan(1);
        continue;
      }
      if (inner[0] != Step::U) throw PreconditionError("malformed factor in psi_inv input");
      const std::size_t len = level_prefix(inner.subspan(1));
      if (len == 0) throw PreconditionError("peak at level 2 cannot come from psi");
      factors.push_back(inner.subspan(1, len));
      inner = inner.subspan(len + 2);
    }

    out.insert(out.end(), factors.size() + 1, Step::U);
    out.push_back(Step::D);
    for (const Steps x : factors) {
      psi_inv_into(x, out);
      out.push_back(Step::D);
    }
    s = rest;
  }
}

}  // namespace

LatticePath psi(const LatticePath& p) {
  if (!in_class(p, PathClass::uh_free)) {
    throw PreconditionError("psi expects a UH-free Schroder path, got " + p.to_string());
  }
  std::vector<Step> out;
  out.reserve(p.size());
  psi_into(p.steps(), out);
  return LatticePath::from_steps(std::move(out));
}

LatticePath psi_inv(const LatticePath& p) {
  if (!in_class(p, PathClass::no_even_peak)) {
    throw PreconditionError("psi_inv expects a Schroder path without even-level peaks, got " +
                            p.to_string());
  }
  std::vector<Step> out;
  out.reserve(p.size() + 4);
  psi_inv_into(p.steps(), out);
  return LatticePath::from_steps(std::move(out));
}

}  // namespace schroder
