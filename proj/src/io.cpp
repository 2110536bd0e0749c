#include "rrbin/io.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "rrbin/errors.hpp"

namespace rrbin {

using nlohmann::json;

std::string format_real(double value, int digits)
{
  return fmt::format("{:.{}g}", value, digits);
}

namespace {

std::string real17(double v) { return format_real(v, 17); }

void append_ints(std::string& out, const std::vector<int>& values)
{
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

std::string stop_json(const StopConfig& stop)
{
  return fmt::format(R"({{"max_depth":{},"min_expected":{},"stop_empty":{}}})", stop.max_depth,
                     real17(stop.min_expected), stop.stop_empty ? "true" : "false");
}

StopConfig stop_from(const json& j)
{
  StopConfig stop;
  stop.max_depth = j.at("max_depth").get<int>();
  stop.min_expected = j.at("min_expected").get<double>();
  stop.stop_empty = j.at("stop_empty").get<bool>();
  return stop;
}

std::vector<std::string_view> csv_fields(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    auto field = line.substr(start, comma - start);
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.remove_suffix(1);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    out.push_back(field);
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

double to_real(std::string_view field, std::size_t row)
{
  try {
    std::size_t used = 0;
    const std::string text(field);
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw DataError(fmt::format("row {}: not a number '{}'", row, field));
}

} // namespace

std::string to_json(const Binning& binning)
{
  std::string out;
  out += fmt::format(R"({{"n":{},"score_kind":"{}","seed":{},"stop":{},"min_split_expected":{},"bins":[)",
                     binning.n, to_string(binning.score_kind), binning.seed,
                     stop_json(binning.stop), real17(binning.min_split_expected));
  for (std::size_t i = 0; i < binning.bins.size(); ++i) {
    const Bin& b = binning.bins[i];
    if (i) out += ',';
    out += fmt::format(R"({{"ls":{},"us":{},"lt":{},"ut":{},"depth":{},"expected":{},"observed":{},"points_s":)",
                       b.lower_s, b.upper_s, b.lower_t, b.upper_t, b.depth, real17(b.expected),
                       b.observed());
    append_ints(out, b.points_s);
    out += R"(,"points_t":)";
    append_ints(out, b.points_t);
    out += '}';
  }
  out += "]}\n";
  return out;
}

Binning binning_from_json(std::string_view text)
{
  try {
    const json j = json::parse(text);
    Binning binning;
    binning.n = j.at("n").get<int>();
    binning.score_kind = parse_score_kind(j.at("score_kind").get<std::string>());
    binning.seed = j.at("seed").get<std::uint64_t>();
    binning.stop = stop_from(j.at("stop"));
    binning.min_split_expected = j.at("min_split_expected").get<double>();
    for (const auto& jb : j.at("bins")) {
      Bin b;
      b.lower_s = jb.at("ls").get<int>();
      b.upper_s = jb.at("us").get<int>();
      b.lower_t = jb.at("lt").get<int>();
      b.upper_t = jb.at("ut").get<int>();
      b.depth = jb.at("depth").get<int>();
      b.expected = jb.at("expected").get<double>();
      b.points_s = jb.at("points_s").get<std::vector<int>>();
      b.points_t = jb.at("points_t").get<std::vector<int>>();
      if (b.points_s.size() != b.points_t.size() || jb.at("observed").get<int>() != b.observed())
        throw DataError("binning: inconsistent point lists");
      binning.bins.push_back(std::move(b));
    }
    return binning;
  } catch (const json::exception& e) {
    throw DataError(std::string("binning: ") + e.what());
  }
}

void write_null_csv(std::ostream& out, const NullTable& null)
{
  out << "depth,n_bin,chi2\n";
  for (const auto& e : null.entries) out << e.depth << ',' << e.n_bin << ',' << real17(e.chi2) << '\n';
}

NullTable read_null_csv(std::istream& in, int n, const NullConfig& config)
{
  std::string line;
  if (!std::getline(in, line) || csv_fields(line) != std::vector<std::string_view>{"depth", "n_bin", "chi2"})
    throw DataError("null table: expected header depth,n_bin,chi2");
  NullTable table;
  table.n = n;
  table.config = config;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    const auto fields = csv_fields(line);
    if (fields.size() != 3) throw DataError(fmt::format("null table: row {} needs 3 fields", row));
    NullEntry e;
    e.depth = static_cast<int>(to_real(fields[0], row));
    e.n_bin = static_cast<int>(to_real(fields[1], row));
    e.chi2 = to_real(fields[2], row);
    if (e.n_bin < 1 || e.chi2 < 0.0) throw DataError(fmt::format("null table: row {} out of range", row));
    table.entries.push_back(e);
  }
  return table;
}

std::string null_to_json(const NullTable& null)
{
  nlohmann::ordered_json j;
  j["n"] = null.n;
  j["score_kind"] = std::string(to_string(null.config.kind));
  j["stop"] = {{"min_expected", null.config.stop.min_expected},
               {"stop_empty", null.config.stop.stop_empty}};
  j["min_split_expected"] = null.config.min_split;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : null.entries) entries.push_back({e.depth, e.n_bin, e.chi2});
  return j.dump() + "\n";
}

NullTable null_from_json(std::string_view text)
{
  try {
    const json j = json::parse(text);
    NullTable table;
    table.n = j.at("n").get<int>();
    table.config.kind = parse_score_kind(j.at("score_kind").get<std::string>());
    table.config.stop.min_expected = j.at("stop").at("min_expected").get<double>();
    table.config.stop.stop_empty = j.at("stop").at("stop_empty").get<bool>();
    table.config.min_split = j.at("min_split_expected").get<double>();
    for (const auto& e : j.at("entries"))
      table.entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    return table;
  } catch (const json::exception& e) {
    throw DataError(std::string("null table: ") + e.what());
  }
}

void write_xy_csv(std::ostream& out, const Sample& sample)
{
  out << "x,y\n";
  for (Eigen::Index i = 0; i < sample.x.size(); ++i)
    out << real17(sample.x(i)) << ',' << real17(sample.y(i)) << '\n';
}

Sample read_xy_csv(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line) || csv_fields(line) != std::vector<std::string_view>{"x", "y"})
    throw DataError("sample: expected header x,y");
  std::vector<double> xs, ys;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    const auto fields = csv_fields(line);
    if (fields.size() != 2) throw DataError(fmt::format("sample: row {} needs 2 fields", row));
    xs.push_back(to_real(fields[0], row));
    ys.push_back(to_real(fields[1], row));
  }
  if (xs.empty()) throw DataError("sample: no observations");
  Sample s;
  s.x = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  s.y = Eigen::Map<Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
  return s;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRecord> records)
{
  out << "name_a,name_b,n_bin,chi2,p_emp\n";
  for (const auto& r : records)
    out << r.name_a << ',' << r.name_b << ',' << r.n_bin << ',' << format_real(r.chi2, 10) << ','
        << format_real(r.p_emp, 10) << '\n';
}

} // namespace rrbin
