#include "rrbin/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rrbin/engine.hpp"
#include "rrbin/errors.hpp"
#include "rrbin/io.hpp"
#include "rrbin/patterns.hpp"
#include "rrbin/scan.hpp"
#include "rrbin/statistics.hpp"
#include "rrbin/svg.hpp"

namespace rrbin {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> score_names{"chi", "mi", "rand", "random"};
const std::vector<std::string> fill_names{"none", "depth", "residual"};

std::string read_file(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

bool is_json(const fs::path& path) { return path.extension() == ".json"; }

std::vector<int> parse_depths(const std::string& text)
{
  std::vector<int> depths;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--depths", "empty range " + text);
    for (int d = lo; d <= hi; ++d) depths.push_back(d);
    return depths;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) depths.push_back(std::stoi(item));
  if (depths.empty()) throw CLI::ValidationError("--depths", "no depths given");
  return depths;
}

std::string format_probability(double p)
{
  std::string s = format_real(p, 10);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

struct Settings {
  std::string score = "chi";
  int max_depth = 6;
  double min_exp = 10.0;
  double min_split = 5.0;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app, bool with_depth = true)
  {
    app.add_option("--score", score, "Split score: chi, mi or rand")
        ->check(CLI::IsMember(score_names))
        ->capture_default_str();
    if (with_depth)
      app.add_option("--max-depth", max_depth, "Depth limit")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--min-exp", min_exp, "Stop when a bin's expected count is <= this")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--min-split", min_split, "Minimum expected count of a split child")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
  }

  StopConfig stop() const { return {max_depth, min_exp, true}; }
  ScoreKind kind() const { return parse_score_kind(score); }
};

NullTable load_null(const fs::path& path, int n, const NullConfig& config)
{
  if (is_json(path)) return null_from_json(read_file(path));
  std::ifstream in(path);
  if (!in) throw DataError("cannot read '" + path.string() + "'");
  return read_null_csv(in, n, config);
}

std::string safe_name(std::string s)
{
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
  return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Recursive rank binning: pairwise dependence by recursive splits of rank space.\n"
               "Residual plots shade negative residuals towards " +
               std::string(negative_colour) + " and positive towards " +
               std::string(positive_colour) + "; depth plots run from white to " +
               std::string(deepest_colour) + ".",
               "rrbin"};
  app.require_subcommand(1);

  // bin
  auto* bin_cmd = app.add_subcommand("bin", "Bin one x,y sample and write the binning as JSON");
  Settings bin_set;
  std::string bin_input, bin_out, bin_plot, bin_fill = "residual";
  bool bin_points = false;
  bin_set.add_to(*bin_cmd);
  bin_cmd->add_option("--input", bin_input, "CSV with header x,y")->required();
  bin_cmd->add_option("--out", bin_out, "Output JSON")->required();
  bin_cmd->add_option("--plot", bin_plot, "Optional SVG output");
  bin_cmd->add_option("--fill", bin_fill, "Plot fill: none, depth or residual")
      ->check(CLI::IsMember(fill_names))
      ->capture_default_str();
  bin_cmd->add_flag("--points", bin_points, "Overlay points on the plot");

  // nullsim
  auto* null_cmd = app.add_subcommand("nullsim", "Simulate the null distribution of the statistic");
  Settings null_set;
  int null_n = 0, null_sims = 0;
  unsigned null_threads = 0;
  std::string null_depths = "2..10", null_out;
  null_set.add_to(*null_cmd, false);
  null_cmd->add_option("--n", null_n, "Sample size")->required()->check(CLI::Range(2, 1 << 30));
  null_cmd->add_option("--sims", null_sims, "Replicates")->required()->check(CLI::PositiveNumber);
  null_cmd->add_option("--depths", null_depths, "Depth limits, a..b or a,b,c")->capture_default_str();
  null_cmd->add_option("--out", null_out, "Output CSV (or .json with settings)")->required();
  null_cmd->add_option("--threads", null_threads, "Worker threads (0 = all cores)");

  // pattern
  auto* pat_cmd = app.add_subcommand("pattern", "Generate a synthetic dependence pattern");
  std::string pat_kind, pat_out;
  int pat_n = 1000;
  std::uint64_t pat_seed = 0;
  std::optional<double> pat_noise;
  std::vector<std::string> pattern_names;
  for (auto k : all_patterns) pattern_names.emplace_back(to_string(k));
  pat_cmd->add_option("--kind", pat_kind, "Pattern name")->required()->check(CLI::IsMember(pattern_names));
  pat_cmd->add_option("--n", pat_n, "Sample size")->check(CLI::PositiveNumber)->capture_default_str();
  pat_cmd->add_option("--seed", pat_seed, "Random seed");
  pat_cmd->add_option("--noise", pat_noise, "Noise scale (pattern default if unset)");
  pat_cmd->add_option("--out", pat_out, "Output CSV x,y")->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Score every column pair of a matrix");
  Settings scan_set;
  std::string scan_input, scan_null, scan_out, scan_plot_dir;
  int scan_window = 2;
  std::size_t scan_plot_top = 0;
  unsigned scan_threads = 0;
  scan_set.add_to(*scan_cmd);
  scan_cmd->add_option("--input", scan_input, "CSV matrix with named columns")->required();
  scan_cmd->add_option("--null", scan_null, "Null table (CSV or JSON)")->required();
  scan_cmd->add_option("--out", scan_out, "Output CSV")->required();
  scan_cmd->add_option("--window", scan_window, "Bin-count window for p-values")->capture_default_str();
  scan_cmd->add_option("--threads", scan_threads, "Worker threads (0 = all cores)");
  scan_cmd->add_option("--plot-top", scan_plot_top, "Plot the top, middle and bottom K pairs");
  scan_cmd->add_option("--plot-dir", scan_plot_dir, "Directory for pair plots");

  // pvalue
  auto* p_cmd = app.add_subcommand("pvalue", "Empirical p-value of one statistic");
  std::string p_null;
  int p_nbin = 0, p_window = 2;
  double p_chi2 = 0.0;
  std::optional<int> p_depth;
  p_cmd->add_option("--null", p_null, "Null table (CSV or JSON)")->required();
  p_cmd->add_option("--nbin", p_nbin, "Observed bin count")->required();
  p_cmd->add_option("--chi2", p_chi2, "Observed statistic")->required();
  p_cmd->add_option("--window", p_window, "Bin-count window")->capture_default_str();
  p_cmd->add_option("--depth", p_depth, "Use only null entries at this depth limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return exit_ok;
    err << app.help();
    return exit_usage;
  }

  try {
    if (bin_cmd->parsed()) {
      std::ifstream in(bin_input);
      if (!in) throw DataError("cannot read '" + bin_input + "'");
      const Sample sample = read_xy_csv(in);
      const Binning binning = bin_sample(sample.x, sample.y, bin_set.kind(), bin_set.stop(),
                                         bin_set.min_split, bin_set.seed);
      write_file(bin_out, to_json(binning));
      if (!bin_plot.empty())
        write_file(bin_plot, render_binning(binning, {parse_fill(bin_fill), bin_points, {}, 480}));
      const auto stat = chi2_statistic(binning);
      out << "n_bin=" << stat.n_bin << " chi2=" << format_real(stat.chi2, 10) << '\n';
    } else if (null_cmd->parsed()) {
      const auto depths = parse_depths(null_depths);
      const NullTable table = simulate_null(null_n, depths, null_set.kind(), null_set.stop(),
                                            null_set.min_split, null_sims, null_set.seed,
                                            null_threads);
      if (is_json(null_out)) {
        write_file(null_out, null_to_json(table));
      } else {
        std::ostringstream csv;
        write_null_csv(csv, table);
        write_file(null_out, csv.str());
      }
    } else if (pat_cmd->parsed()) {
      const Sample sample = generate({parse_pattern_kind(pat_kind), pat_n, pat_noise, pat_seed});
      std::ostringstream csv;
      write_xy_csv(csv, sample);
      write_file(pat_out, csv.str());
    } else if (scan_cmd->parsed()) {
      ColumnTable table = load_matrix(scan_input);
      for (const auto& w : table.warnings) err << "warning: " << w << '\n';
      ScanConfig config{scan_set.kind(), scan_set.stop(), scan_set.min_split, scan_set.seed,
                        scan_window, scan_threads};
      const NullTable null = load_null(scan_null, static_cast<int>(table.values.rows()),
                                       {config.kind, config.stop, config.min_split});
      const auto records = scan_pairs(table, config, null);
      std::ostringstream csv;
      write_scan_csv(csv, records);
      write_file(scan_out, csv.str());

      if (scan_plot_top > 0) {
        if (scan_plot_dir.empty()) throw CLI::RequiredError("--plot-dir");
        fs::create_directories(scan_plot_dir);
        struct Panel {
          std::string group;
          std::size_t rank;
          ScanRecord record;
          Binning binning;
        };
        std::vector<Panel> panels;
        auto add = [&](const char* group, const std::vector<ScanRecord>& subset) {
          for (std::size_t i = 0; i < subset.size(); ++i)
            panels.push_back({group, i + 1, subset[i],
                              bin_columns(table, subset[i].index_a, subset[i].index_b, config)});
        };
        add("top", top_k(records, scan_plot_top));
        add("middle", middle_k(records, scan_plot_top));
        add("bottom", bottom_k(records, scan_plot_top));
        double scale = 0.0;
        for (const auto& p : panels) scale = std::max(scale, max_abs_residual(p.binning));
        for (const auto& p : panels) {
          const auto name = fmt::format("{}_{:03}_{}__{}.svg", p.group, p.rank,
                                        safe_name(p.record.name_a), safe_name(p.record.name_b));
          write_file(fs::path(scan_plot_dir) / name,
                     render_binning(p.binning, {Fill::residual, true, scale, 320}));
        }
      }
    } else if (p_cmd->parsed()) {
      NullTable null = load_null(p_null, 0, {});
      if (p_depth) null = null.at_depth(*p_depth);
      out << format_probability(empirical_p(null, p_nbin, p_chi2, p_window)) << '\n';
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_ok;
}

} // namespace rrbin
