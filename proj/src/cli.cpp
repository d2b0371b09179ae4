#include "schroder/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schroder/bijection.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/error.hpp"
#include "schroder/partition.hpp"
#include "schroder/path.hpp"
#include "schroder/verify.hpp"

namespace schroder::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Command { list, count, map, check, render, series, verify };
enum class Format { text, json };
enum class Direction { forward, inverse };

struct RunConfig {
  Command command = Command::list;
  int n = 0;
  std::string kind;  // "partitions" or "paths" for list/count
  std::string path_class = "schroder";
  std::string pattern;
  Direction direction = Direction::forward;
  std::string map_name;
  std::string series_name;
  std::string style = "ascii";
  Format format = Format::text;
  int limit = kDefaultExhaustiveLimit;
  int order = kDefaultSeriesOrder;
  int max_n = 8;
  bool trace = false;
  std::string out_path;
  std::vector<std::string> objects;
  bool objects_given = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

int default_limit() {
  if (const char* env = std::getenv(kLimitEnv)) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultExhaustiveLimit;
}

std::vector<std::string> read_objects(const RunConfig& cfg, std::istream& in) {
  if (cfg.objects_given) return cfg.objects;
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

bool looks_like_partition(const std::string& text) {
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  return false;
}

LatticePath parse_any_path(const std::string& text) {
  const bool skew = text.find('L') != std::string::npos;
  return parse_path(text, skew ? PathClass::skew_dyck : PathClass::schroder);
}

// Output sink collecting text lines or JSON values.
class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  void line(const std::string& text) { text_ << text << '\n'; }
  void raw(const std::string& text) { text_ << text; }
  void value(json v) { values_.push_back(std::move(v)); }

  std::string finish() const {
    if (format_ == Format::text) return text_.str();
    return values_.dump(2) + "\n";
  }

 private:
  Format format_;
  std::ostringstream text_;
  json values_ = json::array();
};

void do_list(const RunConfig& cfg, Emitter& emit) {
  const bool json_out = cfg.format == Format::json;
  if (cfg.kind == "partitions") {
    const std::optional<SetPartition> pattern =
        cfg.pattern.empty() ? std::nullopt : std::optional(parse_partition(cfg.pattern));
    for_each_partition(
        cfg.n,
        [&](const SetPartition& p) {
          if (pattern && contains_pattern(p, *pattern)) return;
          json_out ? emit.value(p.to_string()) : emit.line(p.to_string());
        },
        cfg.limit);
    return;
  }
  const PathClass cls = parse_path_class(cfg.path_class);
  for_each_path(
      cfg.n, cls,
      [&](const LatticePath& p) {
        json_out ? emit.value(p.to_string()) : emit.line(p.to_string());
      },
      cfg.limit);
}

std::string do_count(const RunConfig& cfg) {
  BigInt total = 0;
  if (cfg.kind == "partitions") {
    const std::optional<SetPartition> pattern =
        cfg.pattern.empty() ? std::nullopt : std::optional(parse_partition(cfg.pattern));
    for_each_partition(
        cfg.n,
        [&](const SetPartition& p) {
          if (!pattern || !contains_pattern(p, *pattern)) total += 1;
        },
        cfg.limit);
  } else {
    for_each_path(cfg.n, parse_path_class(cfg.path_class), [&](const LatticePath&) { total += 1; },
                  cfg.limit);
  }
  return total.str();
}

void do_map(const RunConfig& cfg, const std::vector<std::string>& objects, Emitter& emit) {
  const bool json_out = cfg.format == Format::json;
  const bool forward = cfg.direction == Direction::forward;
  const std::string& name = cfg.map_name;
  if (cfg.trace && (forward || (name != "sigma" && name != "phi"))) {
    throw UsageError("--trace applies to the inverse of sigma or phi");
  }

  for (const auto& text : objects) {
    std::string result;
    if (name == "psi") {
      const LatticePath p = parse_path(text, PathClass::schroder);
      result = (forward ? psi(p) : psi_inv(p)).to_string();
    } else if (forward) {
      const SetPartition p = parse_partition(text);
      if (name == "sigma") result = sigma(p).to_string();
      if (name == "phi") result = phi(p).to_string();
      if (name == "full12312") result = full_map_12312(p).to_string();
      if (name == "full12321") result = full_map_12321(p).to_string();
    } else {
      const LatticePath p = parse_path(text, PathClass::schroder);
      if (cfg.trace) {
        emit.raw(format_trace(decode_labels(p, name == "sigma" ? DownRule::max : DownRule::min)));
      }
      if (name == "sigma") result = sigma_inv(p).to_string();
      if (name == "phi") result = phi_inv(p).to_string();
      if (name == "full12312") result = full_map_12312_inv(p).to_string();
      if (name == "full12321") result = full_map_12321_inv(p).to_string();
    }
    json_out ? emit.value(result) : emit.line(result);
  }
}

void do_check(const RunConfig& cfg, const std::vector<std::string>& objects, Emitter& emit) {
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  for (const auto& text : objects) {
    json record;
    if (looks_like_partition(text)) {
      const SetPartition p = parse_partition(text);
      record = {{"partition", p.to_string()},
                {"blocks", p.block_count()},
                {"avoids_12312", avoids_12312_fast(p)},
                {"avoids_12321", avoids_12321_fast(p)},
                {"irreducible", p.empty() ? false : is_irreducible(p)}};
    } else {
      const LatticePath p = parse_any_path(text);
      const PathFlags flags = classify(p);
      json levels = json::array();
      for (const Peak& peak : peaks(p)) levels.push_back(peak.level);
      record = {{"path", p.to_string()},
                {"semilength", p.semilength()},
                {"peak_levels", levels},
                {"uh_free", flags.uh_free},
                {"no_even_peak", flags.no_even_peak},
                {"no_level_one_peak", flags.no_level_one_peak},
                {"ends_with_down", flags.ends_with_down}};
    }
    if (cfg.format == Format::json) {
      emit.value(record);
      continue;
    }
    std::string line;
    for (const auto& [key, value] : record.items()) {
      if (!line.empty()) line += ' ';
      line += key + "=";
      if (value.is_boolean()) {
        line += yes_no(value.get<bool>());
      } else if (value.is_string()) {
        line += value.get<std::string>();
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) joined += (joined.empty() ? "" : ",") + v.dump();
        line += "[" + joined + "]";
      } else {
        line += value.dump();
      }
    }
    emit.line(line);
  }
}

void do_render(const RunConfig& cfg, const std::vector<std::string>& objects, Emitter& emit) {
  const RenderStyle style = cfg.style == "svg" ? RenderStyle::svg : RenderStyle::ascii;
  for (const auto& text : objects) {
    const std::string drawing = render(parse_any_path(text), style);
    cfg.format == Format::json ? emit.value(drawing) : emit.raw(drawing);
  }
}

std::string do_series(const RunConfig& cfg) {
  const SeriesTable table = series(parse_series_id(cfg.series_name), cfg.order);
  std::ostringstream out;
  if (cfg.format == Format::json) {
    // Coefficients outgrow 64 bits; numbers are written as exact digit strings.
    out << '[';
    for (std::size_t i = 0; i < table.coefficients.size(); ++i) {
      out << (i ? ", " : "") << table.coefficients[i].str();
    }
    out << "]\n";
    return out.str();
  }
  for (std::size_t i = 0; i < table.coefficients.size(); ++i) {
    out << i << ' ' << table.coefficients[i].str() << '\n';
  }
  return out.str();
}

int do_verify(const RunConfig& cfg, std::string& text) {
  const VerifyReport report = run_verification(cfg.max_n, cfg.limit);
  if (cfg.format == Format::json) {
    json results = json::array();
    for (const auto& r : report.results) {
      json entry = {{"name", r.name}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"passed", r.passed}};
      if (!r.passed) {
        entry["failing_n"] = r.failing_n;
        entry["counterexample"] = r.counterexample;
      }
      results.push_back(entry);
    }
    text = json{{"ok", report.ok()}, {"max_n", cfg.max_n}, {"results", results}}.dump(2) + "\n";
  } else {
    text = format_report(report);
  }
  return report.ok() ? kOk : kVerifyFailed;
}

void build_app(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}))
      ->default_str("text");
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--limit", cfg.limit, "Exhaustive size limit")->check(CLI::PositiveNumber);

  const std::map<std::string, Direction> directions{{"forward", Direction::forward},
                                                    {"inverse", Direction::inverse}};

  auto* list = app.add_subcommand("list", "Enumerate partitions or paths of one size");
  auto* count = app.add_subcommand("count", "Count partitions or paths of one size");
  for (auto* sub : {list, count}) {
    sub->add_option("kind", cfg.kind, "partitions | paths")
        ->required()
        ->check(CLI::IsMember({"partitions", "paths"}));
    sub->add_option("-n,--n", cfg.n, "Partitions of [n] / paths of semilength n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--pattern", cfg.pattern, "Keep only partitions avoiding this pattern");
    sub->add_option("--class", cfg.path_class, "Path class")->default_str("schroder");
  }
  list->callback([&] { cfg.command = Command::list; });
  count->callback([&] { cfg.command = Command::count; });

  auto* map = app.add_subcommand("map", "Apply a bijection to each input object");
  map->add_option("name", cfg.map_name, "sigma | phi | psi | full12312 | full12321")
      ->required()
      ->check(CLI::IsMember({"sigma", "phi", "psi", "full12312", "full12321"}));
  map->add_option("--direction", cfg.direction, "forward | inverse")
      ->transform(CLI::CheckedTransformer(directions));
  map->add_flag("--trace", cfg.trace, "Dump the decoder labels (index step label)");
  map->add_option("objects", cfg.objects, "Objects; read from stdin when absent");
  map->callback([&] { cfg.command = Command::map; });

  auto* check = app.add_subcommand("check", "Report predicates of partitions or paths");
  check->add_option("objects", cfg.objects, "Objects; read from stdin when absent");
  check->callback([&] { cfg.command = Command::check; });

  auto* render = app.add_subcommand("render", "Draw paths as ascii or svg");
  render->add_option("--style", cfg.style, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("objects", cfg.objects, "Paths; read from stdin when absent");
  render->callback([&] { cfg.command = Command::render; });

  auto* series = app.add_subcommand("series", "Print series coefficients");
  series->add_option("name", cfg.series_name, "f | fprime | schroder | bell")
      ->required()
      ->check(CLI::IsMember({"f", "fprime", "f_prime", "schroder", "bell"}));
  series->add_option("--order", cfg.order, "Truncation order")->check(CLI::NonNegativeNumber);
  series->callback([&] { cfg.command = Command::series; });

  auto* verify = app.add_subcommand("verify", "Run every cross-module identity up to --max-n");
  verify->add_option("--max-n", cfg.max_n, "Largest size checked")->check(CLI::NonNegativeNumber);
  verify->callback([&] { cfg.command = Command::verify; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  cfg.limit = default_limit();
  CLI::App app{"Pattern-avoiding partitions and Schroder paths", "schroder"};
  build_app(app, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.objects_given = !cfg.objects.empty();

  int status = kOk;
  std::string text;
  try {
    Emitter emit(cfg.format);
    switch (cfg.command) {
      case Command::list:
        do_list(cfg, emit);
        text = emit.finish();
        break;
      case Command::count:
        text = do_count(cfg) + "\n";  // a bare number is valid JSON too
        break;
      case Command::map:
        do_map(cfg, read_objects(cfg, in), emit);
        text = emit.finish();
        break;
      case Command::check:
        do_check(cfg, read_objects(cfg, in), emit);
        text = emit.finish();
        break;
      case Command::render:
        do_render(cfg, read_objects(cfg, in), emit);
        text = emit.finish();
        break;
      case Command::series:
        text = do_series(cfg);
        break;
      case Command::verify:
        status = do_verify(cfg, text);
        break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }

  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
    file << text;
  }
  return status;
}

}  // namespace schroder::cli
