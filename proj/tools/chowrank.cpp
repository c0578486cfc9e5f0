#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowrank/io.hpp"

using namespace chowrank;

namespace {

int fail_args(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_labeled_matrix(std::ostream& out, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels,
                          const ExactMatrix& m) {
  std::vector<std::size_t> widths(col_labels.size());
  std::vector<std::vector<std::string>> cells(m.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) widths[c] = col_labels[c].size();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      cells[r].push_back(render_rational(m[r][c]));
      widths[c] = std::max(widths[c], cells[r][c].size());
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < col_labels.size(); ++c)
    out << "  " << std::string(widths[c] - col_labels[c].size(), ' ') << col_labels[c];
  out << "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out << row_labels[r] << std::string(label_width - row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < cells[r].size(); ++c)
      out << "  " << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
    out << "\n";
  }
}

int run_verify(const std::string& suite_arg, int n_min, int n_max, int jobs,
               const std::string& out_path, std::uint64_t seed, int eval_seeds) {
  auto suite = suite_from_name(suite_arg);
  if (!suite) return fail_args("unknown suite \"" + suite_arg + "\"");
  auto [def_min, def_max] = suite_default_range(*suite);
  if (n_min == 0) n_min = def_min;
  if (n_max == 0) n_max = def_max;
  if (n_min > n_max && def_max != 0) return fail_args("empty n-range");
  if (jobs < 1) return fail_args("--jobs must be at least 1");

  VerifyOptions options;
  options.seed = seed;
  options.eval_seeds = eval_seeds;
  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(*suite, n_min, n_max, options, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) return fail_args("cannot open output file " + out_path);
    out = &file;
  }
  bool all_ok = true;
  for (const auto& r : reports) {
    *out << report_json(r).dump() << "\n";
    all_ok = all_ok && r.verified();
  }
  std::cerr << suite_arg << ": " << reports.size() << " instance(s), "
            << (all_ok ? "all verified" : "FAILURES present") << "\n";
  return all_ok ? 0 : 1;
}

int run_analyze(const std::string& input, const std::string& out_path) {
  auto text = read_file(input);
  if (!text) return fail_args("cannot read " + input);
  RankCertificate cert;
  try {
    cert = analyze(parse_data_file(*text));
  } catch (const ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return 2;
  }
  const auto j = certificate_json(cert);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) return fail_args("cannot open output file " + out_path);
    file << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
  if (!cert.hypothesis_ok) return 3;
  if (cert.conclusion == ConclusionKind::RankOne ||
      cert.conclusion == ConclusionKind::RankTwo)
    return 0;
  return 4;
}

int run_matrix(const std::string& input) {
  auto text = read_file(input);
  if (!text) return fail_args("cannot read " + input);
  ParsedData data;
  try {
    data = parse_data_file(*text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return 2;
  }
  if (data.kind == AmbientKind::GrassLines) {
    print_labeled_matrix(std::cout, {"H", "D"}, grass_matrix_labels(data.n),
                         grass_matrix(*data.grass));
    return 0;
  }
  if (data.kind == AmbientKind::ProdProj) {
    print_labeled_matrix(std::cout, {"H1", "H2", "D"}, prod_matrix_labels(data.n),
                         prod_matrix(*data.prod));
    return 0;
  }
  return fail_args("matrix printing needs grass or prodproj data");
}

int run_sigma(const std::string& arg) {
  // Integer argument: list all partition maps. Otherwise: derive sigma from
  // the a-vector of a prodproj data file.
  bool is_number = !arg.empty();
  for (char ch : arg)
    if (!std::isdigit(static_cast<unsigned char>(ch))) is_number = false;
  if (is_number) {
    const int n = std::stoi(arg);
    if (n < 2 || n > 24) return fail_args("sigma listing needs 2 <= n <= 24");
    for (const auto& sigma : enumerate_partition_maps(n))
      std::cout << sigma.render() << "\n";
    return 0;
  }
  auto text = read_file(arg);
  if (!text) return fail_args("cannot read " + arg);
  try {
    ParsedData data = parse_data_file(*text);
    if (data.kind != AmbientKind::ProdProj)
      return fail_args("sigma derivation needs prodproj data (an a-chain)");
    std::cout << sigma_from_ratios(data.prod->a).render() << "\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << arg << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chowrank - exact verification of the intersection-matrix rank "
               "arguments for low-codimension subvarieties"};
  app.require_subcommand(1);

  std::string suite_arg, input, out_path;
  int n_min = 0, n_max = 0, jobs = 1, eval_seeds = 20;
  std::uint64_t seed = 2024;

  auto* verify = app.add_subcommand("verify", "run a symbolic identity suite");
  verify->add_option("suite", suite_arg,
                     "proj|grass|prodproj_base|cambio|incordiones|psigma|"
                     "quadric|blowup|cxp5")
      ->required();
  verify->add_option("--n-min", n_min, "smallest n (suite default when omitted)");
  verify->add_option("--n-max", n_max, "largest n (suite default when omitted)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out_path, "write JSON-lines reports here");
  verify->add_option("--seed", seed, "seed for the randomized cross-oracle");
  verify->add_option("--eval-seeds", eval_seeds, "cross-oracle sample count");

  auto* analyze_cmd = app.add_subcommand("analyze", "certify one data file");
  analyze_cmd->add_option("input", input, "JSON data file")->required();
  analyze_cmd->add_option("--out", out_path, "also write the certificate here");

  auto* matrix_cmd = app.add_subcommand("matrix", "print the intersection matrix M");
  matrix_cmd->add_option("input", input, "JSON data file")->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "list partition maps or derive sigma");
  sigma_cmd->add_option("arg", input, "n (lists all maps) or a prodproj data file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (verify->parsed())
    return run_verify(suite_arg, n_min, n_max, jobs, out_path, seed, eval_seeds);
  if (analyze_cmd->parsed()) return run_analyze(input, out_path);
  if (matrix_cmd->parsed()) return run_matrix(input);
  if (sigma_cmd->parsed()) return run_sigma(input);
  return 2;
}
