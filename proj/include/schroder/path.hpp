#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schroder/partition.hpp"

namespace schroder {

/// U=(1,1), D=(1,-1), H=(2,0), L=(-1,-1). Enumerator order is the
/// generation order.
enum class Step : char { U = 'U', D = 'D', H = 'H', L = 'L' };

enum class PathClass {
  schroder,
  uh_free,
  no_even_peak,
  uh_free_no_level_one,
  dyck,
  skew_dyck,
  skew_dyck_end_down,
};

std::string_view to_string(PathClass c);
/// Throws ParseError on an unknown name.
PathClass parse_path_class(std::string_view name);
const std::vector<PathClass>& all_path_classes();

/// A step sequence that stays weakly above the x-axis and ends on it.
/// Construction only checks the height profile; class membership is a
/// separate question (see classify / parse_path).
class LatticePath {
 public:
  LatticePath() = default;

  /// Throws ParseError on a negative prefix height or nonzero final height.
  static LatticePath from_steps(std::vector<Step> steps);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// (#U + #D + #L) / 2 + #H.
  int semilength() const noexcept;

  /// heights()[i] is the height before step i; size() + 1 entries.
  std::vector<int> heights() const;

  std::string to_string() const;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// Validates alphabet, height profile, skew geometry and the class's
/// restrictions. Throws ParseError naming the first failure.
LatticePath parse_path(std::string_view text, PathClass cls);

struct Peak {
  std::size_t index;  ///< index of the up step
  int level;          ///< height reached by the up step
};

std::vector<Peak> peaks(const LatticePath& p);

struct PathFlags {
  bool uh_free = true;
  bool no_even_peak = true;
  bool no_level_one_peak = true;
  /// The empty path counts as ending with a down step.
  bool ends_with_down = true;
};

PathFlags classify(const LatticePath& p);

/// True when the L steps never retrace a U segment (in either order) and
/// the walk keeps x >= 0, tracing plane coordinates.
bool skew_geometry_ok(const LatticePath& p);

bool in_class(const LatticePath& p, PathClass cls);

/// Every path of semilength n in the class once, lexicographic with
/// U < D < H < L. Throws LimitError when n > limit.
void for_each_path(int n, PathClass cls, const std::function<void(const LatticePath&)>& visit,
                   int limit = kDefaultExhaustiveLimit);

std::vector<LatticePath> generate_paths(int n, PathClass cls,
                                        int limit = kDefaultExhaustiveLimit);

enum class RenderStyle { ascii, svg };

std::string render(const LatticePath& p, RenderStyle style);
std::string render_ascii(const LatticePath& p);
std::string render_svg(const LatticePath& p);

}  // namespace schroder
