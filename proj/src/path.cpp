#include "schroder/path.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "schroder/error.hpp"

namespace schroder {

namespace {

constexpr std::array<std::pair<PathClass, std::string_view>, 7> kClassNames{{
    {PathClass::schroder, "schroder"},
    {PathClass::uh_free, "uh_free"},
    {PathClass::no_even_peak, "no_even_peak"},
    {PathClass::uh_free_no_level_one, "uh_free_no_level_one"},
    {PathClass::dyck, "dyck"},
    {PathClass::skew_dyck, "skew_dyck"},
    {PathClass::skew_dyck_end_down, "skew_dyck_end_down"},
}};

enum class Alphabet { schroder, dyck, skew };

Alphabet alphabet_of(PathClass cls) {
  switch (cls) {
    case PathClass::dyck:
      return Alphabet::dyck;
    case PathClass::skew_dyck:
    case PathClass::skew_dyck_end_down:
      return Alphabet::skew;
    default:
      return Alphabet::schroder;
  }
}

bool allowed(Alphabet a, Step s) {
  switch (a) {
    case Alphabet::schroder:
      return s != Step::L;
    case Alphabet::dyck:
      return s == Step::U || s == Step::D;
    case Alphabet::skew:
      return s != Step::H;
  }
  return false;
}

int height_delta(Step s) {
  switch (s) {
    case Step::U:
      return 1;
    case Step::H:
      return 0;
    case Step::D:
    case Step::L:
      return -1;
  }
  return 0;
}

int half_units(Step s) { return s == Step::H ? 2 : 1; }

using Point = std::pair<int, int>;

// Traces the skew geometry; a diagonal segment of slope +1 is keyed by its
// lower-left endpoint, shared by U and L steps over the same segment.
class SkewTracer {
 public:
  bool can_take(Step s) const {
    switch (s) {
      case Step::U:
        return !lefts_.contains({x_, y_});
      case Step::L:
        return x_ >= 1 && y_ >= 1 && !ups_.contains({x_ - 1, y_ - 1});
      case Step::D:
        return y_ >= 1;
      case Step::H:
        return true;
    }
    return false;
  }

  void take(Step s) {
    switch (s) {
      case Step::U:
        ++ups_[{x_, y_}];
        ++x_;
        ++y_;
        break;
      case Step::L:
        --x_;
        --y_;
        ++lefts_[{x_, y_}];
        break;
      case Step::D:
        ++x_;
        --y_;
        break;
      case Step::H:
        x_ += 2;
        break;
    }
  }

  void undo(Step s) {
    switch (s) {
      case Step::U:
        --x_;
        --y_;
        release(ups_, {x_, y_});
        break;
      case Step::L:
        release(lefts_, {x_, y_});
        ++x_;
        ++y_;
        break;
      case Step::D:
        --x_;
        ++y_;
        break;
      case Step::H:
        x_ -= 2;
        break;
    }
  }

 private:
  static void release(std::map<Point, int>& m, Point p) {
    auto it = m.find(p);
    if (--it->second == 0) m.erase(it);
  }

  int x_ = 0;
  int y_ = 0;
  std::map<Point, int> ups_;
  std::map<Point, int> lefts_;
};

void check_limit(int n, int limit) {
  if (n < 0) throw PreconditionError("size must be non-negative");
  if (n > limit) {
    throw LimitError("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                     std::to_string(limit));
  }
}

bool forbids_uh(PathClass cls) {
  return cls == PathClass::uh_free || cls == PathClass::uh_free_no_level_one;
}

// Whether closing a peak at `level` is legal in the class.
bool peak_allowed(PathClass cls, int level) {
  if (cls == PathClass::no_even_peak) return level % 2 == 1;
  if (cls == PathClass::uh_free_no_level_one) return level != 1;
  return true;
}

struct Generator {
  PathClass cls;
  Alphabet alphabet;
  int target_half_units;
  const std::function<void(const LatticePath&)>& visit;
  std::vector<Step> steps;
  SkewTracer tracer;
  int height = 0;
  int used = 0;

  void run() {
    if (used == target_half_units) {
      if (height != 0) return;
      if (cls == PathClass::skew_dyck_end_down && !steps.empty() && steps.back() != Step::D) {
        return;
      }
      visit(LatticePath::from_steps(steps));
      return;
    }
    for (const Step s : {Step::U, Step::D, Step::H, Step::L}) {
      if (!allowed(alphabet, s)) continue;
      const int next_used = used + half_units(s);
      const int next_height = height + height_delta(s);
      if (next_used > target_half_units || next_height < 0) continue;
      if (next_height > target_half_units - next_used) continue;
      const bool after_up = !steps.empty() && steps.back() == Step::U;
      if (s == Step::H && after_up && forbids_uh(cls)) continue;
      if (s == Step::D && after_up && !peak_allowed(cls, height)) continue;
      if (alphabet == Alphabet::skew && !tracer.can_take(s)) continue;

      steps.push_back(s);
      if (alphabet == Alphabet::skew) tracer.take(s);
      height = next_height;
      used = next_used;
      run();
      used -= half_units(s);
      height -= height_delta(s);
      if (alphabet == Alphabet::skew) tracer.undo(s);
      steps.pop_back();
    }
  }
};

}  // namespace

std::string_view to_string(PathClass c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "unknown";
}

PathClass parse_path_class(std::string_view name) {
  for (const auto& [cls, n] : kClassNames) {
    if (n == name) return cls;
  }
  throw ParseError("unknown path class '" + std::string(name) + "'");
}

const std::vector<PathClass>& all_path_classes() {
  static const std::vector<PathClass> classes = [] {
    std::vector<PathClass> out;
    for (const auto& entry : kClassNames) out.push_back(entry.first);
    return out;
  }();
  return classes;
}

LatticePath LatticePath::from_steps(std::vector<Step> steps) {
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += height_delta(steps[i]);
    if (h < 0) {
      throw ParseError("path goes below the x-axis at step " + std::to_string(i + 1));
    }
  }
  if (h != 0) throw ParseError("path ends at height " + std::to_string(h));
  return LatticePath(std::move(steps));
}

int LatticePath::semilength() const noexcept {
  int halves = 0;
  for (const Step s : steps_) halves += half_units(s);
  return halves / 2;
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> out{0};
  out.reserve(steps_.size() + 1);
  for (const Step s : steps_) out.push_back(out.back() + height_delta(s));
  return out;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (const Step s : steps_) out += static_cast<char>(s);
  return out;
}

std::vector<Peak> peaks(const LatticePath& p) {
  std::vector<Peak> out;
  int h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h += height_delta(p[i]);
    if (p[i] == Step::U && i + 1 < p.size() && p[i + 1] == Step::D) out.push_back({i, h});
  }
  return out;
}

PathFlags classify(const LatticePath& p) {
  PathFlags flags;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == Step::U && p[i + 1] == Step::H) flags.uh_free = false;
  }
  for (const Peak& peak : peaks(p)) {
    if (peak.level % 2 == 0) flags.no_even_peak = false;
    if (peak.level == 1) flags.no_level_one_peak = false;
  }
  flags.ends_with_down = p.empty() || p.steps().back() == Step::D;
  return flags;
}

bool skew_geometry_ok(const LatticePath& p) {
  SkewTracer tracer;
  for (const Step s : p.steps()) {
    if (!tracer.can_take(s)) return false;
    tracer.take(s);
  }
  return true;
}

bool in_class(const LatticePath& p, PathClass cls) {
  const Alphabet alphabet = alphabet_of(cls);
  for (const Step s : p.steps()) {
    if (!allowed(alphabet, s)) return false;
  }
  if (alphabet == Alphabet::skew && !skew_geometry_ok(p)) return false;
  const PathFlags flags = classify(p);
  switch (cls) {
    case PathClass::uh_free:
      return flags.uh_free;
    case PathClass::no_even_peak:
      return flags.no_even_peak;
    case PathClass::uh_free_no_level_one:
      return flags.uh_free && flags.no_level_one_peak;
    case PathClass::skew_dyck_end_down:
      return flags.ends_with_down;
    default:
      return true;
  }
}

LatticePath parse_path(std::string_view text, PathClass cls) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);

  const Alphabet alphabet = alphabet_of(cls);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool known = c == 'U' || c == 'D' || c == 'H' || c == 'L';
    if (!known || !allowed(alphabet, static_cast<Step>(c))) {
      throw ParseError("unexpected step '" + std::string(1, c) + "' at offset " +
                       std::to_string(i) + " for class " + std::string(to_string(cls)));
    }
    steps.push_back(static_cast<Step>(c));
  }
  LatticePath path = LatticePath::from_steps(std::move(steps));
  if (alphabet == Alphabet::skew && !skew_geometry_ok(path)) {
    throw ParseError("left step overlaps an up step (or leaves x >= 0)");
  }
  if (!in_class(path, cls)) {
    throw ParseError("path is not in class " + std::string(to_string(cls)));
  }
  return path;
}

void for_each_path(int n, PathClass cls, const std::function<void(const LatticePath&)>& visit,
                   int limit) {
  check_limit(n, limit);
  Generator gen{cls, alphabet_of(cls), 2 * n, visit, {}, {}, 0, 0};
  gen.run();
}

std::vector<LatticePath> generate_paths(int n, PathClass cls, int limit) {
  std::vector<LatticePath> out;
  for_each_path(n, cls, [&](const LatticePath& p) { out.push_back(p); }, limit);
  return out;
}

namespace {

struct Segment {
  Point from;
  Point to;
};

std::vector<Segment> trace(const LatticePath& p) {
  std::vector<Segment> out;
  Point at{0, 0};
  for (const Step s : p.steps()) {
    Point next = at;
    switch (s) {
      case Step::U:
        next = {at.first + 1, at.second + 1};
        break;
      case Step::D:
        next = {at.first + 1, at.second - 1};
        break;
      case Step::H:
        next = {at.first + 2, at.second};
        break;
      case Step::L:
        next = {at.first - 1, at.second - 1};
        break;
    }
    out.push_back({at, next});
    at = next;
  }
  return out;
}

}  // namespace

std::string render_ascii(const LatticePath& p) {
  const auto segments = trace(p);
  int width = 0;
  int rows = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& [from, to] = segments[i];
    width = std::max({width, from.first, to.first});
    rows = std::max({rows, from.second, to.second + (p[i] == Step::H ? 1 : 0)});
  }
  // Row r is the band between heights r and r+1; H sits on its band floor.
  rows = std::max(rows, 1);
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(width), ' '));
  auto put = [&](int row, int col, char c) {
    grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c;
  };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& [from, to] = segments[i];
    switch (p[i]) {
      case Step::U:
        put(from.second, from.first, '/');
        break;
      case Step::D:
        put(to.second, from.first, '\\');
        break;
      case Step::H:
        put(from.second, from.first, '_');
        put(from.second, from.first + 1, '_');
        break;
      case Step::L:
        put(to.second, to.first, '/');
        break;
    }
  }
  std::string out;
  for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
    const auto end = row->find_last_not_of(' ');
    if (end == std::string::npos) {
      if (out.empty()) continue;  // blank bands above the path
      out += '\n';
      continue;
    }
    out += row->substr(0, end + 1);
    out += '\n';
  }
  out += std::string(static_cast<std::size_t>(width), '-');
  out += '\n';
  return out;
}

std::string render_svg(const LatticePath& p) {
  constexpr int unit = 20;
  constexpr int margin = 10;
  const auto segments = trace(p);
  int max_x = 0;
  int max_y = 0;
  std::set<Point> points{{0, 0}};
  for (const auto& seg : segments) {
    max_x = std::max({max_x, seg.from.first, seg.to.first});
    max_y = std::max({max_y, seg.from.second, seg.to.second});
    points.insert(seg.to);
  }
  const int width = max_x * unit + 2 * margin;
  const int height = max_y * unit + 2 * margin;
  auto sx = [&](int x) { return margin + x * unit; };
  auto sy = [&](int y) { return height - margin - y * unit; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (const auto& [from, to] : segments) {
    out << "    <line x1=\"" << sx(from.first) << "\" y1=\"" << sy(from.second) << "\" x2=\""
        << sx(to.first) << "\" y2=\"" << sy(to.second) << "\"/>\n";
  }
  out << "  </g>\n  <g fill=\"black\">\n";
  for (const auto& [x, y] : points) {
    out << "    <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render(const LatticePath& p, RenderStyle style) {
  return style == RenderStyle::svg ? render_svg(p) : render_ascii(p);
}

}  // namespace schroder
