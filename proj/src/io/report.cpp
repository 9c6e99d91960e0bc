#include "shg/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <limits>
#include <sstream>

#include "shg/fixtures.hpp"

namespace shg {

using nlohmann::json;

VertexFunction threshold(const Vector& values, const AnalysisOptions& options) {
  if (options.abs_zero_tol) return VertexFunction(values, *options.abs_zero_tol);
  return VertexFunction::relative(values, options.rel_zero_tol);
}

VertexFunction eigenfunction(const Spectrum& spectrum, std::size_t index, const AnalysisOptions& options) {
  if (index >= spectrum.size()) throw Error("eigenvalue index out of range");
  return threshold(spectrum.eigenfunctions.col(static_cast<Eigen::Index>(index)), options);
}

Analysis analyze(const SignedHypergraph& h, const AnalysisOptions& options) {
  Analysis a;
  a.bundle = laplacian(h);
  a.spectrum = eigendecompose(a.bundle, options.cluster_tol);
  for (std::size_t i = 0; i < a.spectrum.size(); ++i) {
    EigenAnalysis e;
    e.f = eigenfunction(a.spectrum, i, options);
    e.domains = decompose(h, e.f);
    const auto& cluster = a.spectrum.cluster_of(i);
    e.bounds = check_bounds(h, e.f, cluster.first + 1, cluster.multiplicity, options.rule);
    e.bounds.index = i;
    e.bounds.eigenvalue = a.spectrum.eigenvalues[i];
    a.pairs.push_back(std::move(e));
  }
  return a;
}

json vertex_set_json(const VertexSet& set) {
  json out = json::array();
  for (Vertex v : set) out.push_back(v + 1);
  return out;
}

json vertex_sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(vertex_set_json(s));
  return out;
}

json decomposition_json(const NodalDecomposition& dec) {
  return {
      {"zero_tolerance", dec.zero_tolerance},
      {"support", vertex_set_json(dec.support)},
      {"strong_domains", vertex_sets_json(dec.strong_domains)},
      {"weak_cores", vertex_sets_json(dec.weak_cores)},
      {"weak_domains", vertex_sets_json(dec.weak_domains)},
      {"strong_count", dec.strong_count()},
      {"weak_count", dec.weak_count()},
  };
}

json bounds_json(const BoundReport& rep) {
  return {
      {"k", rep.k},
      {"r", rep.r},
      {"c", rep.c},
      {"l", rep.l},
      {"l_prime", rep.l_prime},
      {"l_plus", rep.l_plus},
      {"l_plus_alternative", rep.l_plus_alternative},
      {"edge_rule", std::string(to_string(rep.rule))},
      {"fiedler_size", rep.fiedler_size},
      {"strong", rep.strong},
      {"weak", rep.weak},
      {"strong_upper", rep.strong_upper()},
      {"weak_upper", rep.weak_upper()},
      {"lower_bound", rep.lower_bound()},
      {"lower_bound_alternative", rep.lower_bound_alternative()},
      {"strong_upper_ok", rep.strong_upper_ok()},
      {"weak_upper_ok", rep.weak_upper_ok()},
      {"strong_lower_ok", rep.strong_lower_ok()},
      {"strong_lower_ok_alternative", rep.strong_lower_ok_alternative()},
  };
}

json spectrum_json(const Spectrum& spectrum) {
  json clusters = json::array();
  for (const auto& c : spectrum.clusters) {
    clusters.push_back({{"k", c.first + 1}, {"multiplicity", c.multiplicity}});
  }
  return {{"eigenvalues", spectrum.eigenvalues},
          {"clusters", clusters},
          {"cluster_tolerance", spectrum.cluster_tolerance}};
}

json report_json(const SignedHypergraph& h, const Analysis& analysis, const AnalysisOptions& options,
                 const std::string& digest, const std::vector<std::string>& notes) {
  json pairs = json::array();
  for (std::size_t i = 0; i < analysis.pairs.size(); ++i) {
    const auto& p = analysis.pairs[i];
    const Vector& values = p.f.values();
    pairs.push_back({
        {"index", i + 1},
        {"eigenvalue", analysis.spectrum.eigenvalues[i]},
        {"values", std::vector<double>(values.data(), values.data() + values.size())},
        {"domains", decomposition_json(p.domains)},
        {"bounds", bounds_json(p.bounds)},
    });
  }
  return {
      {"tool", {{"name", "shg"}, {"version", kToolVersion}}},
      {"input", {{"digest", digest}, {"vertices", h.num_vertices()}, {"edges", h.num_edges()}}},
      {"tolerances",
       {{"cluster", options.cluster_tol},
        {"zero_relative", options.rel_zero_tol},
        {"zero_absolute", options.abs_zero_tol ? json(*options.abs_zero_tol) : json(nullptr)}}},
      {"conventions",
       {{"adjacency", "global edge sign"},
        {"edge_rule", std::string(to_string(options.rule))},
        {"l_prime", "induced on the support, empty truncations dropped, duplicates kept"}}},
      {"spectrum", spectrum_json(analysis.spectrum)},
      {"eigenpairs", pairs},
      {"notes", notes},
  };
}

namespace {

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
  if (!ok) problems.push_back(what);
}

bool is_vertex_sets(const json& j, std::size_t n) {
  if (!j.is_array()) return false;
  for (const auto& set : j) {
    if (!set.is_array()) return false;
    for (const auto& v : set) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > n) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> validate_report(const json& report) {
  std::vector<std::string> problems;
  if (!report.is_object()) return {"report is not an object"};
  // Work on a copy so that missing nested keys read as null.
  json r = report;
  try {
    for (const char* key :
         {"tool", "input", "tolerances", "conventions", "spectrum", "eigenpairs", "notes"}) {
      expect(problems, r.contains(key), std::string("missing '") + key + "'");
    }
    if (!problems.empty()) return problems;
    expect(problems, r["tool"].value("version", "") == kToolVersion, "tool version mismatch");
    expect(problems, r["input"]["digest"].is_string() && r["input"]["digest"].get<std::string>().size() == 16,
           "input digest must be 16 hex digits");
    const auto n = r["input"].value("vertices", std::size_t{0});
    auto& ev = r["spectrum"]["eigenvalues"];
    expect(problems, ev.is_array() && ev.size() == n, "spectrum must list one eigenvalue per vertex");
    expect(problems, r["notes"].is_array(), "notes must be an array");
    if (ev.is_array()) {
      for (std::size_t i = 1; i < ev.size(); ++i) {
        expect(problems, ev[i - 1].get<double>() <= ev[i].get<double>(), "eigenvalues must ascend");
      }
    }
    std::size_t covered = 0;
    for (auto& c : r["spectrum"]["clusters"]) {
      expect(problems, c.value("k", std::size_t{0}) == covered + 1, "clusters must be contiguous");
      covered += c.value("multiplicity", std::size_t{0});
    }
    expect(problems, covered == n, "clusters must cover the spectrum");
    auto& pairs = r["eigenpairs"];
    expect(problems, pairs.is_array() && pairs.size() == n, "one eigenpair entry per eigenvalue");
    if (!pairs.is_array()) return problems;
    for (auto& p : pairs) {
      const auto tag = "eigenpair " + std::to_string(p.value("index", 0));
      auto& d = p["domains"];
      expect(problems, p["values"].is_array() && p["values"].size() == n, tag + ": values length");
      expect(problems, is_vertex_sets(d["strong_domains"], n), tag + ": strong domains");
      expect(problems, is_vertex_sets(d["weak_domains"], n), tag + ": weak domains");
      expect(problems, is_vertex_sets(d["weak_cores"], n), tag + ": weak cores");
      expect(problems, d["strong_count"] == d["strong_domains"].size(), tag + ": strong count");
      expect(problems, d["weak_count"] == d["weak_domains"].size(), tag + ": weak count");
      auto& b = p["bounds"];
      for (const char* key : {"k", "r", "c", "l", "l_prime", "l_plus", "fiedler_size", "strong_upper_ok",
                              "weak_upper_ok", "strong_lower_ok"}) {
        expect(problems, b.contains(key), tag + ": bounds missing '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    problems.push_back(std::string("malformed report: ") + e.what());
  }
  return problems;
}

std::string render_domain_table(const Analysis& analysis) {
  auto sets_text = [](const std::vector<VertexSet>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) s += ", ";
      s += format_vertex_set(sets[i]);
    }
    return s.empty() ? std::string("-") : s;
  };
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"f", "lambda", "strong domains", "weak domains"});
  for (std::size_t i = 0; i < analysis.pairs.size(); ++i) {
    std::ostringstream lambda;
    lambda << std::fixed << std::setprecision(6) << analysis.spectrum.eigenvalues[i];
    rows.push_back({"f" + std::to_string(i + 1), lambda.str(),
                    sets_text(analysis.pairs[i].domains.strong_domains),
                    sets_text(analysis.pairs[i].domains.weak_domains)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      out << (c + 1 < 4 ? "  " : "\n");
    }
  }
  return out.str();
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  out.precision(old);
}

Vector read_vector_csv(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error("bad number '" + token + "' in function file");
    values.push_back(v);
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

namespace {

std::string rational_text(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

std::vector<std::string> example1_notes() {
  std::vector<std::string> notes;
  const auto h = example1::hypergraph();
  const auto derived = exact_laplacian(h);
  const auto published = example1::published_laplacian();
  for (std::size_t i = 0; i < derived.size(); ++i) {
    for (std::size_t j = 0; j < derived.size(); ++j) {
      if (derived[i][j] != published[i][j]) {
        notes.push_back("laplacian entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "): published " + rational_text(published[i][j]) + ", hypergraph gives " +
                        rational_text(derived[i][j]));
      }
    }
  }

  const auto printed = example1::published_eigenfunctions();
  const auto f1 = VertexFunction::relative(printed[0]);
  const auto l = cyclomatic(h).l;
  const auto lp = positive_cyclomatic(h, f1, PositiveEdgeRule::all_pairs).l;
  const auto lp_alt = positive_cyclomatic(h, f1, PositiveEdgeRule::exists_ordering).l;
  if (l != example1::kPublishedL || lp != example1::kPublishedLPlus) {
    notes.push_back("f1 cyclomatic numbers: published l = " + std::to_string(example1::kPublishedL) +
                    ", l+ = " + std::to_string(example1::kPublishedLPlus) +
                    "; definition gives l = " + std::to_string(l) + ", l+ = " + std::to_string(lp) +
                    " (all_pairs), " + std::to_string(lp_alt) + " (exists_ordering)");
  }

  auto sets_text = [](const std::vector<VertexSet>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + format_vertex_set(sets[i]);
    return s;
  };
  auto same_sets = [](std::vector<VertexSet> a, std::vector<VertexSet> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  for (const auto& row : example1::published_table()) {
    const auto f = VertexFunction::relative(printed[row.eigenfunction - 1]);
    const auto dec = decompose(h, f);
    const std::string tag = "table row f" + std::to_string(row.eigenfunction);
    if (!same_sets(dec.strong_domains, row.strong)) {
      notes.push_back(tag + " strong domains: published " + sets_text(row.strong) +
                      "; printed function gives " + sets_text(dec.strong_domains));
    }
    if (!same_sets(dec.weak_domains, row.weak)) {
      notes.push_back(tag + " weak domains: published " + sets_text(row.weak) + "; printed function gives " +
                      sets_text(dec.weak_domains) +
                      (row.weak.size() == dec.weak_count() ? " (counts agree)" : " (counts differ)"));
    }
  }
  return notes;
}

}  // namespace shg
