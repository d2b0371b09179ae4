#pragma once

#include <string>
#include <vector>

#include "schroder/partition.hpp"
#include "schroder/path.hpp"

namespace schroder {

enum class Avoidance { p12312, p12321 };

/// Shared forward map of sigma and phi. Reads 1 w_1 ... k w_k left to
/// right: a maximum i >= 2 emits U^(d_{i-1}+1) D, a letter of w_i equal to
/// i emits H, a smaller letter emits D. (1) maps to the empty path.
/// Throws PreconditionError (with witness positions) if the partition
/// contains the pattern selected by `avoid`, or is empty.
LatticePath encode(const SetPartition& p, Avoidance avoid);

inline LatticePath sigma(const SetPartition& p) { return encode(p, Avoidance::p12312); }
inline LatticePath phi(const SetPartition& p) { return encode(p, Avoidance::p12321); }

/// Which element of L^U \ L^D labels a non-peak down step.
enum class DownRule { max, min };

/// Working state of the inverse maps on P' (the input with a peak
/// prepended). Multiplicities count: each down label removes one copy.
struct DecoderState {
  std::vector<Step> steps;
  std::vector<int> labels;
  /// up_counts[l] / down_counts[l]: copies of label l in L^U / L^D.
  std::vector<int> up_counts;
  std::vector<int> down_counts;
};

/// Runs the labelling on P'. Throws PreconditionError if the path is not
/// UH-free or if L^U \ L^D is empty when consulted.
DecoderState decode_labels(const LatticePath& p, DownRule rule);

/// "index step label" per step of P', one line each.
std::string format_trace(const DecoderState& state);

/// Labels of the D and H steps of P', left to right.
SetPartition decode(const LatticePath& p, DownRule rule);

inline SetPartition sigma_inv(const LatticePath& p) { return decode(p, DownRule::max); }
inline SetPartition phi_inv(const LatticePath& p) { return decode(p, DownRule::min); }

/// UH-free Schroder path to a Schroder path with no peak at even level,
/// preserving semilength. Throws PreconditionError on other input.
LatticePath psi(const LatticePath& p);

/// Two-sided inverse of psi. Throws PreconditionError unless the input is
/// a Schroder path with no peak at even level.
LatticePath psi_inv(const LatticePath& p);

inline LatticePath full_map_12312(const SetPartition& p) { return psi(sigma(p)); }
inline LatticePath full_map_12321(const SetPartition& p) { return psi(phi(p)); }
inline SetPartition full_map_12312_inv(const LatticePath& p) { return sigma_inv(psi_inv(p)); }
inline SetPartition full_map_12321_inv(const LatticePath& p) { return phi_inv(psi_inv(p)); }

}  // namespace schroder
