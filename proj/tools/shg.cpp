// Command-line front end: analysis of .shg files, the worked example and the
// randomized verification campaign.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "shg/campaign.hpp"
#include "shg/fixtures.hpp"
#include "shg/oracle.hpp"
#include "shg/report.hpp"
#include "shg/shg_format.hpp"

namespace {

using nlohmann::json;
using namespace shg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string file;
  double cluster_tol = kDefaultClusterTolerance;
  double rel_zero_tol = kDefaultZeroTolerance;
  std::optional<double> zero_tol;
  std::string rule = "all_pairs";

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.cluster_tol = cluster_tol;
    o.rel_zero_tol = rel_zero_tol;
    o.abs_zero_tol = zero_tol;
    o.rule = parse_positive_edge_rule(rule);
    return o;
  }
};

void add_tolerances(CLI::App* cmd, Common& c) {
  cmd->add_option("--cluster-tol", c.cluster_tol,
                  "eigenvalue clustering tolerance, relative to the spectral range")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--zero-tol", c.zero_tol, "absolute zero threshold for function values")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--rel-zero-tol", c.rel_zero_tol, "zero threshold relative to max |f| (default 1e-8)")
      ->check(CLI::NonNegativeNumber);
}

void emit(const json& j, const std::string& path = {}) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::size_t checked_index(std::size_t k, std::size_t n) {
  if (k == 0 || k > n) throw Error("--eig must lie in 1.." + std::to_string(n));
  return k - 1;
}

int cmd_validate(const Common& c, bool require_spectral) {
  const auto text = read_text_file(c.file);
  const auto h = parse_shg(text);
  std::vector<std::string> problems;
  if (!(parse_shg(serialize_shg(h)) == h)) problems.push_back("serialization does not round-trip");
  const auto stats = cyclomatic(h);
  if (stats.l < 0) problems.push_back("negative cyclomatic number");
  VertexSet isolated;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) isolated.push_back(v);
  }
  if (require_spectral && !isolated.empty()) {
    problems.push_back("isolated vertices " + format_vertex_set(isolated) + ": Laplacian undefined");
  }
  emit({{"file", c.file},
        {"digest", fnv1a_hex(text)},
        {"vertices", h.num_vertices()},
        {"edges", h.num_edges()},
        {"components", stats.n_components},
        {"cyclomatic", stats.l},
        {"acyclic", is_acyclic(h)},
        {"isolated_vertices", vertex_set_json(isolated)},
        {"problems", problems},
        {"valid", problems.empty()}});
  return problems.empty() ? kOk : kCheckFailed;
}

int cmd_spectrum(const Common& c, const std::string& csv, const std::string& vectors_csv) {
  const auto h = read_shg_file(c.file);
  const auto bundle = laplacian(h);
  const auto s = eigendecompose(bundle, c.cluster_tol);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw Error("cannot write '" + csv + "'");
    write_matrix_csv(out, bundle.laplacian);
  }
  if (!vectors_csv.empty()) {
    std::ofstream out(vectors_csv);
    if (!out) throw Error("cannot write '" + vectors_csv + "'");
    write_matrix_csv(out, s.eigenfunctions);
  }
  const auto acc = check_spectrum(bundle, s);
  json j = spectrum_json(s);
  j["accuracy"] = {{"trace_defect", acc.trace_defect},
                   {"max_residual", acc.max_residual},
                   {"gram_defect", acc.gram_defect},
                   {"acceptable", acc.acceptable(h.num_vertices())}};
  emit(j);
  return acc.acceptable(h.num_vertices()) ? kOk : kCheckFailed;
}

VertexFunction function_from(const Common& c, const SignedHypergraph& h, std::size_t eig,
                             const std::string& function_file, json& meta) {
  if (!function_file.empty()) {
    const auto values = read_vector_csv(read_text_file(function_file));
    if (static_cast<std::size_t>(values.size()) != h.num_vertices()) {
      throw Error("function file has " + std::to_string(values.size()) + " values, expected " +
                  std::to_string(h.num_vertices()));
    }
    meta["function"] = function_file;
    return threshold(values, c.options());
  }
  if (eig == 0) throw Error("give --eig K or --function FILE");
  const auto s = eigendecompose(laplacian(h), c.cluster_tol);
  const auto index = checked_index(eig, s.size());
  meta["eig"] = eig;
  meta["eigenvalue"] = s.eigenvalues[index];
  return eigenfunction(s, index, c.options());
}

int cmd_domains(const Common& c, std::size_t eig, const std::string& function_file) {
  const auto h = read_shg_file(c.file);
  json j;
  const auto f = function_from(c, h, eig, function_file, j);
  const auto dec = decompose(h, f);
  const auto fs = fiedler_sets(h, f);
  j["domains"] = decomposition_json(dec);
  j["fiedler_zeros"] = vertex_set_json(fs.fiedler);
  j["other_zeros"] = vertex_set_json(fs.complement);
  emit(j);
  return kOk;
}

int cmd_bounds(const Common& c) {
  const auto h = read_shg_file(c.file);
  const auto analysis = analyze(h, c.options());
  json reports = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < analysis.pairs.size(); ++i) {
    const auto& b = analysis.pairs[i].bounds;
    json r = bounds_json(b);
    r["index"] = i + 1;
    r["eigenvalue"] = b.eigenvalue;
    reports.push_back(r);
    ok = ok && b.strong_upper_ok() && b.weak_upper_ok() && b.strong_lower_ok();
  }
  emit({{"edge_rule", c.rule}, {"bounds", reports}, {"all_hold", ok}});
  return ok ? kOk : kCheckFailed;
}

int cmd_report(const Common& c, const std::string& format, const std::string& json_out) {
  const auto text = read_text_file(c.file);
  const auto h = parse_shg(text);
  const auto analysis = analyze(h, c.options());
  const auto report = report_json(h, analysis, c.options(), fnv1a_hex(text), {});
  if (!json_out.empty()) emit(report, json_out);
  if (format == "text") {
    std::cout << render_domain_table(analysis);
  } else if (json_out.empty()) {
    emit(report);
  }
  return validate_report(report).empty() ? kOk : kCheckFailed;
}

int cmd_fuzz(std::uint64_t seed, std::size_t count, const std::string& scale, std::size_t threads,
             const std::vector<std::string>& properties, bool classical, const std::string& out) {
  CampaignOptions o;
  o.gen.seed = seed;
  o.gen.count = count;
  o.gen.classical = classical;
  if (classical) o.gen.edge_size_range = {2, 2};
  if (scale == "small") {
    o.gen.n_range = {4, 8};
    o.gen.m_range = {3, 8};
  } else if (scale == "large") {
    o.gen.n_range = {8, 24};
    o.gen.m_range = {6, 16};
  }
  o.properties = properties;
  o.threads = threads;
  const auto result = run_campaign(o);
  emit({{"config", to_json(o)}, {"result", to_json(result)}}, out);
  return result.passed() ? kOk : kCheckFailed;
}

int cmd_oracle(const Common& c, std::size_t eig, const std::string& function_file) {
  const auto h = read_shg_file(c.file);
  json j;
  const auto f = function_from(c, h, eig, function_file, j);
  const auto brute = oracle_domains(h, f);
  const auto diff = compare_with_oracle(h, f);
  j["oracle"] = {{"strong_domains", vertex_sets_json(brute.strong)},
                 {"weak_cores", vertex_sets_json(brute.weak_cores)},
                 {"weak_domains", vertex_sets_json(brute.weak_domains)}};
  j["efficient"] = decomposition_json(decompose(h, f));
  j["agree"] = diff.empty();
  if (!diff.empty()) j["difference"] = diff;
  emit(j);
  return diff.empty() ? kOk : kCheckFailed;
}

int cmd_example1(const Common& c, bool raw) {
  const auto printed = example1::published_eigenfunctions();
  const auto printed_values = example1::published_eigenvalues();
  if (raw) {
    const Matrix op = example1::published_laplacian_real();
    const Matrix coupling = coupling_from_operator(op);
    json pairs = json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < printed.size(); ++i) {
      const double residual = (op * printed[i] - printed_values[i] * printed[i]).cwiseAbs().maxCoeff();
      worst = std::max(worst, residual);
      const auto f = threshold(printed[i], c.options());
      pairs.push_back({{"index", i + 1},
                       {"eigenvalue", printed_values[i]},
                       {"residual", residual},
                       {"strong_domains", vertex_sets_json(strong_domains(coupling, f))}});
    }
    json spectrum = json::array();
    for (const auto& z : general_eigenvalues(op)) spectrum.push_back({{"re", z.real()}, {"im", z.imag()}});
    const double tol = 0.05;
    emit({{"mode", "raw-paper-matrix"},
          {"eigenvalues", spectrum},
          {"pairs", pairs},
          {"max_residual", worst},
          {"residual_tolerance", tol},
          {"notes", example1_notes()}});
    return worst <= tol ? kOk : kCheckFailed;
  }
  const auto text = example1::shg_text();
  const auto h = example1::hypergraph();
  const auto analysis = analyze(h, c.options());
  auto report = report_json(h, analysis, c.options(), fnv1a_hex(text), example1_notes());
  json published = json::array();
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto f = threshold(printed[i], c.options());
    published.push_back({{"index", i + 1},
                         {"values", std::vector<double>(printed[i].data(), printed[i].data() + 9)},
                         {"domains", decomposition_json(decompose(h, f))}});
  }
  report["published_functions"] = published;
  emit(report);
  return validate_report(report).empty() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and nodal domains of signed hypergraphs"};
  app.require_subcommand(1);
  Common c;
  std::size_t eig = 0;
  std::string function_file;

  auto* validate = app.add_subcommand("validate", "parse a file and check its invariants");
  validate->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  bool require_spectral = false;
  validate->add_flag("--spectral", require_spectral, "also require every vertex to lie in an edge");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and clusters");
  spectrum->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  std::string csv, vectors_csv;
  spectrum->add_option("--csv", csv, "write the Laplacian as CSV");
  spectrum->add_option("--vectors-csv", vectors_csv, "write the eigenfunctions (columns) as CSV");
  add_tolerances(spectrum, c);

  auto* domains = app.add_subcommand("domains", "strong and weak nodal domains of one function");
  domains->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  domains->add_option("--eig", eig, "1-based eigenfunction index");
  domains->add_option("--function", function_file, "CSV with one value per vertex")->check(CLI::ExistingFile);
  add_tolerances(domains, c);

  auto* bounds = app.add_subcommand("bounds", "nodal-count bounds for every eigenpair");
  bounds->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  bounds->add_option("--h1-variant", c.rule, "positive-edge rule")
      ->check(CLI::IsMember({"all_pairs", "exists_ordering"}));
  add_tolerances(bounds, c);

  auto* report = app.add_subcommand("report", "domain table and full JSON report");
  report->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  std::string format = "json", json_out;
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--json-out", json_out, "also write the JSON report here");
  report->add_option("--h1-variant", c.rule, "positive-edge rule")
      ->check(CLI::IsMember({"all_pairs", "exists_ordering"}));
  add_tolerances(report, c);

  auto* fuzz = app.add_subcommand("fuzz", "randomized verification campaign");
  std::uint64_t seed = 1;
  std::size_t count = 500, threads = 0;
  std::string scale = "default", out;
  std::vector<std::string> properties;
  bool classical = false;
  fuzz->add_option("--seed", seed, "campaign seed");
  fuzz->add_option("--count", count, "number of instances");
  fuzz->add_option("--scale", scale, "instance size preset")
      ->check(CLI::IsMember({"small", "default", "large"}));
  fuzz->add_option("--threads", threads, "worker threads (0 = all cores)");
  fuzz->add_option("--properties", properties, "property ids to run (default all)")->delimiter(',');
  fuzz->add_flag("--classical", classical, "generate classical signed graphs only");
  fuzz->add_option("--out", out, "write the JSON result here instead of stdout");
  bool list = false;
  fuzz->add_flag("--list", list, "list the property ids and exit");

  auto* oracle = app.add_subcommand("oracle", "compare with exhaustive path enumeration (n <= 8)");
  oracle->add_option("file", c.file)->required()->check(CLI::ExistingFile);
  oracle->add_option("--eig", eig, "1-based eigenfunction index");
  oracle->add_option("--function", function_file, "CSV with one value per vertex")->check(CLI::ExistingFile);
  add_tolerances(oracle, c);

  auto* example = app.add_subcommand("example1", "the nine-vertex worked example");
  bool raw = false;
  example->add_flag("--raw-paper-matrix", raw, "analyse the published operator matrix as given");
  add_tolerances(example, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(c, require_spectral);
    if (*spectrum) return cmd_spectrum(c, csv, vectors_csv);
    if (*domains) return cmd_domains(c, eig, function_file);
    if (*bounds) return cmd_bounds(c);
    if (*report) return cmd_report(c, format, json_out);
    if (*fuzz) {
      if (list) {
        for (const auto& p : property_registry())
          std::cout << p.id << '\t' << p.module << '\t' << p.description << '\n';
        return kOk;
      }
      return cmd_fuzz(seed, count, scale, threads, properties, classical, out);
    }
    if (*oracle) return cmd_oracle(c, eig, function_file);
    if (*example) return cmd_example1(c, raw);
  } catch (const std::exception& e) {
    std::cerr << "shg: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
