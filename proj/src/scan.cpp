#include "rrbin/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "rrbin/engine.hpp"
#include "rrbin/errors.hpp"
#include "rrbin/parallel.hpp"
#include "rrbin/random.hpp"

namespace rrbin {

namespace {

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string unquote(std::string_view s)
{
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

bool parse_double(std::string_view text, double& value)
{
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end && std::isfinite(value);
}

} // namespace

ColumnTable parse_matrix(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line)) throw DataError("matrix: missing header row");
  std::vector<std::string> names;
  for (auto field : split_fields(line)) names.push_back(unquote(field));

  std::set<std::string> unique;
  for (const auto& name : names) {
    if (name.empty()) throw DataError("matrix: empty column name in header");
    if (!unique.insert(name).second) throw DataError("matrix: duplicate column name '" + name + "'");
  }

  const std::size_t p = names.size();
  std::vector<std::vector<double>> columns(p);
  std::vector<bool> complete(p, true);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != p)
      throw DataError(fmt::format("matrix: row {} has {} fields, expected {}", row, fields.size(), p));
    for (std::size_t j = 0; j < p; ++j) {
      if (fields[j].empty()) {
        complete[j] = false;
        columns[j].push_back(std::nan(""));
        continue;
      }
      double value = 0.0;
      if (!parse_double(fields[j], value))
        throw DataError(fmt::format("matrix: row {} column '{}': non-numeric value '{}'", row,
                                    names[j], fields[j]));
      columns[j].push_back(value);
    }
  }

  ColumnTable table;
  const std::size_t rows = p > 0 ? columns[0].size() : 0;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < p; ++j) {
    if (complete[j])
      kept.push_back(j);
    else
      table.warnings.push_back("dropped column '" + names[j] + "' with missing values");
  }
  table.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    table.names.push_back(names[kept[k]]);
    table.values.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const Eigen::VectorXd>(columns[kept[k]].data(), static_cast<Eigen::Index>(rows));
  }
  return table;
}

ColumnTable load_matrix(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw DataError("matrix: cannot read '" + path.string() + "'");
  return parse_matrix(in);
}

Eigen::VectorXd neg_log_returns(const Eigen::Ref<const Eigen::VectorXd>& prices)
{
  if (prices.size() < 2) throw std::invalid_argument("neg_log_returns: need at least two prices");
  if (!(prices.array() > 0.0).all())
    throw std::invalid_argument("neg_log_returns: prices must be positive");
  const auto m = prices.size() - 1;
  return -(prices.tail(m).array() / prices.head(m).array()).log().matrix();
}

std::uint64_t pair_seed(std::uint64_t base_seed, int a, int b)
{
  return mix_seed(mix_seed(base_seed, static_cast<std::uint64_t>(a)), static_cast<std::uint64_t>(b));
}

Binning bin_columns(const ColumnTable& table, int a, int b, const ScanConfig& config)
{
  return bin_sample(table.values.col(a), table.values.col(b), config.kind, config.stop,
                    config.min_split, pair_seed(config.base_seed, a, b));
}

std::vector<ScanRecord> scan_pairs(const ColumnTable& table, const ScanConfig& config,
                                   const NullTable& null)
{
  const int p = table.columns();
  if (p < 2) throw std::invalid_argument("scan_pairs: need at least two columns");
  if (!matches(null.config, config.kind, config.stop, config.min_split))
    throw ConfigError("scan_pairs: null table was simulated with different settings");
  const NullTable reference = null.at_depth(config.stop.max_depth);
  if (reference.entries.empty())
    throw ConfigError(fmt::format("scan_pairs: null table has no entries at depth {}",
                                  config.stop.max_depth));

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) / 2);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) pairs.emplace_back(a, b);

  std::vector<ScanRecord> records(pairs.size());
  parallel_for(pairs.size(), config.threads, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const auto stat = chi2_statistic(bin_columns(table, a, b, config));
    auto& rec = records[k];
    rec.name_a = table.names[static_cast<std::size_t>(a)];
    rec.name_b = table.names[static_cast<std::size_t>(b)];
    rec.index_a = a;
    rec.index_b = b;
    rec.n_bin = stat.n_bin;
    rec.chi2 = stat.chi2;
    rec.p_emp = empirical_p(reference, stat.n_bin, stat.chi2, config.window);
  });

  std::stable_sort(records.begin(), records.end(),
                   [](const ScanRecord& x, const ScanRecord& y) { return x.chi2 > y.chi2; });
  return records;
}

std::vector<ScanRecord> top_k(std::span<const ScanRecord> records, std::size_t k)
{
  k = std::min(k, records.size());
  return {records.begin(), records.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<ScanRecord> bottom_k(std::span<const ScanRecord> records, std::size_t k)
{
  k = std::min(k, records.size());
  return {records.end() - static_cast<std::ptrdiff_t>(k), records.end()};
}

std::vector<ScanRecord> middle_k(std::span<const ScanRecord> records, std::size_t k)
{
  k = std::min(k, records.size());
  if (k == 0) return {};
  const std::size_t median = (records.size() - 1) / 2;
  const std::size_t start = std::min(median - std::min(median, (k - 1) / 2), records.size() - k);
  return {records.begin() + static_cast<std::ptrdiff_t>(start),
          records.begin() + static_cast<std::ptrdiff_t>(start + k)};
}

} // namespace rrbin
