#include "cli.hpp"

#include "dyckframe/counting.hpp"
#include "dyckframe/error.hpp"
#include "dyckframe/frames.hpp"
#include "dyckframe/paths.hpp"
#include "dyckframe/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace dyckframe::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Csv, Json };

// Largest feet-table half-length served without --allow-large.
constexpr std::int64_t kFeetTableCap = 60;

struct Options {
  Format format = Format::Table;
  bool allow_large = false;

  EnumerationLimits limits() const { return allow_large ? EnumerationLimits::unlimited() : EnumerationLimits{}; }
};

std::string join(std::span<const std::int64_t> values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out.push_back(sep);
    out += std::to_string(values[k]);
  }
  return out;
}

// Columns padded to a common width, two spaces apart.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c > 0 ? "," : "") << row[c];
    out << '\n';
  }
}

void print_rows(std::ostream& out, Format format, const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::Csv) print_csv(out, rows);
  else print_table(out, rows);
}

/// Comma-separated nonnegative integers, kept as given (no trimming).
std::vector<std::uint64_t> parse_colors(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw ParseError(std::string(flag) + ": expected comma-separated nonnegative integers, got \"" + text + "\"");
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

int cmd_feet_table(const Options& opt, std::int64_t max, std::int64_t level, bool full, std::ostream& out) {
  if (max > kFeetTableCap && !opt.allow_large)
    throw ResourceLimit("feet-table --max " + std::to_string(max) + " exceeds the cap " +
                        std::to_string(kFeetTableCap) + " (use --allow-large)");
  const auto n_max = static_cast<std::size_t>(max);
  const auto s = static_cast<std::size_t>(level);
  const FootTable table(s, n_max);

  // Level 0 never has 0 feet; its last column (n+1 feet) is only shown with --full.
  const std::size_t first = s == 0 ? 1 : 0;
  const std::size_t last = s == 0 ? std::max<std::size_t>(n_max, 1) + (full ? 1 : 0) : n_max;

  if (opt.format == Format::Json) {
    json doc{{"level", s}, {"max_half_length", n_max}};
    json columns = json::array();
    for (std::size_t j = first; j <= last; ++j) columns.push_back(j);
    json rows = json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
      json counts = json::array();
      for (std::size_t j = first; j <= last; ++j) counts.push_back(table.at(n, s, j).str());
      rows.push_back({{"steps", 2 * n}, {"counts", counts}});
    }
    doc["columns"] = columns;
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
    return kSuccess;
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"steps"};
  for (std::size_t j = first; j <= last; ++j) header.push_back(std::to_string(j) + "-ped");
  rows.push_back(header);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<std::string> row{std::to_string(2 * n)};
    for (std::size_t j = first; j <= last; ++j) row.push_back(table.at(n, s, j).str());
    rows.push_back(row);
  }
  print_rows(out, opt.format, rows);
  return kSuccess;
}

int cmd_frame(const Options& opt, const std::string& text, std::ostream& out) {
  const RawSequence seq = parse_sequence(text);
  const auto frame = Frame::from(seq);

  if (opt.format == Format::Json) {
    json doc{{"frame", std::vector<std::int64_t>(seq.counts().begin(), seq.counts().end())},
             {"admissible", frame.has_value()}};
    if (frame) {
      doc["length"] = frame->length();
      doc["degree"] = frame->degree();
      doc["cardinality"] = frame_cardinality(*frame).str();
      doc["canonical"] = canonical_representative(*frame).to_string();
      doc["v"] = up_steps_per_level(*frame);
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
  }

  const char sep = opt.format == Format::Csv ? ';' : ',';
  std::vector<std::pair<std::string, std::string>> fields{{"frame", join(seq.counts(), sep)},
                                                          {"admissible", frame ? "true" : "false"}};
  if (frame) {
    const auto v = up_steps_per_level(*frame);
    fields.emplace_back("length", std::to_string(frame->length()));
    fields.emplace_back("degree", std::to_string(frame->degree()));
    fields.emplace_back("cardinality", frame_cardinality(*frame).str());
    fields.emplace_back("canonical", canonical_representative(*frame).to_string());
    fields.emplace_back("v", join(v, sep));
  }
  std::vector<std::vector<std::string>> rows;
  if (opt.format == Format::Csv) {
    rows.resize(2);
    for (const auto& [k, v] : fields) {
      rows[0].push_back(k);
      rows[1].push_back(v);
    }
  } else {
    for (const auto& [k, v] : fields) rows.push_back({k, v});
  }
  print_rows(out, opt.format, rows);
  return kSuccess;
}

struct CountArgs {
  std::string kind;
  std::int64_t n = 0;
  std::optional<std::int64_t> k;
  std::optional<std::string> colors_h, colors_u, colors_d;
};

int cmd_count(const Options& opt, const CountArgs& a, std::ostream& out) {
  const auto n = static_cast<std::size_t>(a.n);
  if (a.k && a.kind != "k-motzkin") throw InvalidArgument("--k is only meaningful with kind k-motzkin");
  if (!a.k && a.kind == "k-motzkin") throw InvalidArgument("kind k-motzkin requires --k");

  Count result;
  if (a.kind == "dyck") {
    if (a.colors_h) throw InvalidArgument("--colors-h does not apply to Dyck paths");
    if (a.colors_u || a.colors_d) {
      ColorSpec colors = ColorSpec::ones(2 * n);
      if (a.colors_u) colors.u = parse_colors(*a.colors_u, "--colors-u");
      if (a.colors_d) colors.d = parse_colors(*a.colors_d, "--colors-d");
      result = count_colored_dyck(n, colors, opt.limits());
    } else {
      result = catalan(n);
    }
  } else if (a.kind == "motzkin") {
    if (a.colors_h || a.colors_u || a.colors_d) {
      ColorSpec colors = ColorSpec::ones(n);
      if (a.colors_h) colors.h = parse_colors(*a.colors_h, "--colors-h");
      if (a.colors_u) colors.u = parse_colors(*a.colors_u, "--colors-u");
      if (a.colors_d) colors.d = parse_colors(*a.colors_d, "--colors-d");
      result = count_colored_motzkin(n, colors, opt.limits());
    } else {
      result = count_motzkin(n, opt.limits());
    }
  } else {
    if (a.colors_u || a.colors_d) throw InvalidArgument("k-motzkin takes only --colors-h (a single r)");
    std::uint64_t r = 1;
    if (a.colors_h) {
      const auto h = parse_colors(*a.colors_h, "--colors-h");
      if (h.size() != 1) throw InvalidArgument("k-motzkin: --colors-h must be a single value r");
      r = h[0];
    }
    result = count_k_motzkin(n, static_cast<std::size_t>(*a.k), r);
  }

  if (opt.format == Format::Json) {
    json doc{{"kind", a.kind}, {"n", n}, {"count", result.str()}};
    if (a.k) doc["k"] = *a.k;
    if (a.colors_h) doc["colors_h"] = parse_colors(*a.colors_h, "--colors-h");
    if (a.colors_u) doc["colors_u"] = parse_colors(*a.colors_u, "--colors-u");
    if (a.colors_d) doc["colors_d"] = parse_colors(*a.colors_d, "--colors-d");
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  const std::string k = a.k ? std::to_string(*a.k) : "";
  std::vector<std::vector<std::string>> rows;
  if (opt.format == Format::Csv || a.k) {
    rows = {{"kind", "n", "k", "count"}, {a.kind, std::to_string(n), k, result.str()}};
  } else {
    rows = {{"kind", "n", "count"}, {a.kind, std::to_string(n), result.str()}};
  }
  print_rows(out, opt.format, rows);
  return kSuccess;
}

struct EnumerateArgs {
  std::string kind;
  std::int64_t n = 0;
  std::optional<std::int64_t> k;
  std::optional<std::string> frame;
  bool show_frame = false;
};

int cmd_enumerate(const Options& opt, const EnumerateArgs& a, std::ostream& out) {
  const auto n = static_cast<std::size_t>(a.n);
  if (a.kind != "dyck" && (a.frame || a.show_frame))
    throw InvalidArgument("frames are only defined for Dyck paths");
  if (a.k && a.kind != "k-motzkin") throw InvalidArgument("--k is only meaningful with kind k-motzkin");
  if (!a.k && a.kind == "k-motzkin") throw InvalidArgument("kind k-motzkin requires --k");

  std::optional<RawSequence> filter;
  if (a.frame) filter = parse_sequence(*a.frame);

  PathCursor cursor = a.kind == "dyck"      ? PathCursor::dyck(n, opt.limits())
                      : a.kind == "motzkin" ? PathCursor::motzkin(n, std::nullopt, opt.limits())
                                            : PathCursor::motzkin(n, std::set<std::size_t>{static_cast<std::size_t>(*a.k)},
                                                                  opt.limits());
  std::vector<std::pair<Path, std::optional<Frame>>> selected;
  while (auto p = cursor.next()) {
    std::optional<Frame> f;
    if (a.kind == "dyck" && (filter || a.show_frame)) f = frame_of(*p);
    if (filter && f->sequence() != *filter) continue;
    selected.emplace_back(std::move(*p), a.show_frame ? f : std::nullopt);
  }

  if (opt.format == Format::Json) {
    json paths = json::array();
    for (const auto& [p, f] : selected) {
      if (a.show_frame) {
        paths.push_back({{"path", p.to_string()},
                         {"frame", std::vector<std::int64_t>(f->counts().begin(), f->counts().end())}});
      } else {
        paths.push_back(p.to_string());
      }
    }
    json doc{{"kind", a.kind}, {"n", n}, {"count", selected.size()}, {"paths", paths}};
    if (a.k) doc["k"] = *a.k;
    if (filter) doc["frame"] = std::vector<std::int64_t>(filter->counts().begin(), filter->counts().end());
    out << doc.dump(2) << '\n';
    return kSuccess;
  }

  std::vector<std::vector<std::string>> rows;
  if (opt.format == Format::Csv) rows.push_back(a.show_frame ? std::vector<std::string>{"path", "frame"}
                                                             : std::vector<std::string>{"path"});
  const char sep = opt.format == Format::Csv ? ';' : ',';
  for (const auto& [p, f] : selected) {
    if (a.show_frame) rows.push_back({p.to_string(), join(f->counts(), sep)});
    else rows.push_back({p.to_string()});
  }
  print_rows(out, opt.format, rows);
  return kSuccess;
}

int cmd_verify(const Options& opt, std::int64_t max_n, bool inject_fault, std::ostream& out) {
  const auto limits = EnumerationLimits{};
  if (!opt.allow_large && static_cast<std::size_t>(max_n) > limits.dyck_half_length)
    throw ResourceLimit("verify --max " + std::to_string(max_n) + " exceeds the cap " +
                        std::to_string(limits.dyck_half_length) + " (use --allow-large)");
  const VerifyReport report = run_verification(static_cast<std::size_t>(max_n), {inject_fault});

  if (opt.format == Format::Json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"parameters", c.parameters},
                        {"expected", c.expected.str()},
                        {"actual", c.actual.str()},
                        {"pass", c.pass}});
    }
    json doc{{"max_n", max_n},
             {"checks", checks},
             {"summary", {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}}};
    out << doc.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"name", "parameters", "expected", "actual", "pass"}};
    for (const auto& c : report.checks)
      rows.push_back({c.name, c.parameters, c.expected.str(), c.actual.str(), c.pass ? "PASS" : "FAIL"});
    print_rows(out, opt.format, rows);
    if (opt.format == Format::Table)
      out << report.checks.size() << " checks, " << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.ok() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames of Dyck paths and exact Dyck/Motzkin path counts", "dyckframe"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}, CLI::ignore_case));
  app.add_flag("--allow-large", opt.allow_large, "Lift the enumeration caps")->envname("DYCKFRAME_ALLOW_LARGE");

  auto* feet = app.add_subcommand("feet-table", "Number of Dyck paths of each length by feet on one level");
  std::int64_t feet_max = 6;
  std::int64_t feet_level = 0;
  bool feet_full = false;
  feet->add_option("--max", feet_max, "Largest half-length (rows 0..2*max steps)")->check(CLI::NonNegativeNumber);
  feet->add_option("--level", feet_level, "Level whose feet are counted")->check(CLI::NonNegativeNumber);
  feet->add_flag("--full", feet_full, "At level 0, also show the (max+1)-ped column");

  auto* frame = app.add_subcommand("frame", "Admissibility, cardinality and canonical path of a frame");
  std::string frame_text;
  frame->add_option("frame,--frame", frame_text, "Comma-separated foot counts, e.g. 3,4,3,1")->required();

  const std::vector<std::string> kinds{"dyck", "motzkin", "k-motzkin"};

  auto* count = app.add_subcommand("count", "Exact number of (colored) Dyck or Motzkin paths");
  CountArgs count_args;
  count->add_option("kind", count_args.kind, "dyck | motzkin | k-motzkin")->required()->check(CLI::IsMember(kinds));
  count->add_option("--n", count_args.n, "Half-length for dyck, length otherwise")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--k", count_args.k, "Level carrying the horizontal steps (k-motzkin)")
      ->check(CLI::NonNegativeNumber);
  count->add_option("--colors-h", count_args.colors_h, "Horizontal colors per level; for k-motzkin a single r");
  count->add_option("--colors-u", count_args.colors_u, "Up-step colors per level gap");
  count->add_option("--colors-d", count_args.colors_d, "Down-step colors per level gap");

  auto* enumerate = app.add_subcommand("enumerate", "List paths in lexicographic order (U < D < H)");
  EnumerateArgs enum_args;
  enumerate->add_option("kind", enum_args.kind, "dyck | motzkin | k-motzkin")->required()->check(CLI::IsMember(kinds));
  enumerate->add_option("--n", enum_args.n, "Half-length for dyck, length otherwise")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", enum_args.k, "Level carrying the horizontal steps (k-motzkin)")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--frame", enum_args.frame, "Only Dyck paths with this frame");
  enumerate->add_flag("--show-frame", enum_args.show_frame, "Print each Dyck path's frame");

  auto* verify = app.add_subcommand("verify", "Check every formula against brute-force enumeration");
  std::int64_t verify_max = 6;
  bool inject_fault = false;
  verify->add_option("--max,--max-n,--n", verify_max, "Largest half-length checked")->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::transform(format_name.begin(), format_name.end(), format_name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  opt.format = formats.at(format_name);
  try {
    if (*feet) return cmd_feet_table(opt, feet_max, feet_level, feet_full, out);
    if (*frame) return cmd_frame(opt, frame_text, out);
    if (*count) return cmd_count(opt, count_args, out);
    if (*enumerate) return cmd_enumerate(opt, enum_args, out);
    if (*verify) return cmd_verify(opt, verify_max, inject_fault, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dyckframe::cli
