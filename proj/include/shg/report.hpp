#ifndef SHG_REPORT_HPP
#define SHG_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "shg/bounds.hpp"

namespace shg {

inline constexpr const char* kToolVersion = "1.0.0";

struct AnalysisOptions {
  double cluster_tol = kDefaultClusterTolerance;
  double rel_zero_tol = kDefaultZeroTolerance;
  std::optional<double> abs_zero_tol;  ///< overrides rel_zero_tol when set
  PositiveEdgeRule rule = PositiveEdgeRule::all_pairs;
};

/// Eigenfunction `index` thresholded per the options.
VertexFunction eigenfunction(const Spectrum& spectrum, std::size_t index, const AnalysisOptions& options);

/// Applies the options' threshold to a supplied vector.
VertexFunction threshold(const Vector& values, const AnalysisOptions& options);

struct EigenAnalysis {
  VertexFunction f;
  NodalDecomposition domains;
  BoundReport bounds;
};

struct Analysis {
  MatrixBundle bundle;
  Spectrum spectrum;
  std::vector<EigenAnalysis> pairs;
};

Analysis analyze(const SignedHypergraph& h, const AnalysisOptions& options);

nlohmann::json vertex_set_json(const VertexSet& set);  // 1-based
nlohmann::json vertex_sets_json(const std::vector<VertexSet>& sets);
nlohmann::json decomposition_json(const NodalDecomposition& dec);
nlohmann::json bounds_json(const BoundReport& rep);
nlohmann::json spectrum_json(const Spectrum& spectrum);

/// Full report. `digest` identifies the input bytes; `notes` lists known
/// discrepancies to carry along.
nlohmann::json report_json(const SignedHypergraph& h, const Analysis& analysis,
                           const AnalysisOptions& options, const std::string& digest,
                           const std::vector<std::string>& notes);

/// Structural problems of a report; empty when it is well formed.
std::vector<std::string> validate_report(const nlohmann::json& report);

/// Aligned text table: one row per eigenfunction with strong and weak sets.
std::string render_domain_table(const Analysis& analysis);

/// Comma separated, one row per line, no header, round-trip precision.
void write_matrix_csv(std::ostream& out, const Matrix& m);

/// Reads a single row or column of numbers (comma or whitespace separated).
Vector read_vector_csv(const std::string& text);

/// Discrepancies between the published example and what its hypergraph
/// yields: operator entries, cyclomatic numbers and domain table rows.
std::vector<std::string> example1_notes();

}  // namespace shg

#endif  // SHG_REPORT_HPP
