// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shg/campaign.hpp"
#include "shg/fixtures.hpp"
#include "shg/identities.hpp"
#include "shg/oracle.hpp"
#include "shg/report.hpp"
#include "shg/shg_format.hpp"

using namespace shg;

namespace {

constexpr std::uint64_t kCampaignSeed = 20240601;
constexpr std::size_t kCampaignSize = 500;

struct Verdict {
  bool pass = false;
  std::string detail;
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VertexFunction printed(std::size_t i) {
  return VertexFunction::relative(example1::published_eigenfunctions()[i - 1]);
}

std::string sets_text(const std::vector<VertexSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += (out.empty() ? "" : " ") + format_vertex_set(s);
  return out;
}

// The shared 500-instance campaign for the bound and invariant criteria.
const CampaignResult& main_campaign() {
  static const CampaignResult result = [] {
    CampaignOptions o;
    o.gen.seed = kCampaignSeed;
    o.gen.count = kCampaignSize;
    o.properties = {"strong_upper_bound",
                    "weak_upper_bound",
                    "strong_lower_bound",
                    "domain_graph_connected",
                    "weak_membership_at_most_two",
                    "zero_neighbor_containment",
                    "weak_count_le_strong",
                    "scaling_invariance",
                    "trace_equals_n",
                    "self_adjoint"};
    return run_campaign(o);
  }();
  return result;
}

std::size_t disconnected_instances() {
  GenConfig cfg;
  cfg.seed = kCampaignSeed;
  cfg.count = kCampaignSize;
  std::size_t n = 0;
  for (const auto& h : generate(cfg)) n += component_count(h) > 1 ? 1 : 0;
  return n;
}

Verdict tally_verdict(const CampaignResult& r, const std::vector<std::string>& ids) {
  Verdict v{true, ""};
  for (const auto& id : ids) {
    const auto it = r.tallies.find(id);
    const PropertyTally t = it == r.tallies.end() ? PropertyTally{} : it->second;
    v.pass = v.pass && t.fail == 0 && t.pass > 0;
    v.detail +=
        cat(v.detail.empty() ? "" : "; ", id, " ", t.pass, " pass/", t.fail, " fail/", t.skip, " skip");
    if (t.fail > 0) {
      for (const auto& f : r.failures) {
        if (f.property == id) {
          v.detail += cat(" [first: seed ", f.seed, ": ", f.details, "]");
          break;
        }
      }
    }
  }
  return v;
}

Verdict fixture_laplacian() {
  const auto start = std::chrono::steady_clock::now();
  const auto exact = exact_laplacian(example1::hypergraph());
  const auto published = example1::published_laplacian();
  std::vector<std::string> diffs;
  bool only_expected = true;
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      if (exact[i][j] == published[i][j]) continue;
      diffs.push_back(cat("(", i + 1, ",", j + 1, ") printed ", published[i][j], " computed ", exact[i][j]));
      only_expected = only_expected && i == 4 && j == 2;
    }
  }
  bool noted = false;
  for (const auto& n : example1_notes()) noted = noted || n.find("(5,3)") != std::string::npos;
  const double t = seconds_since(start);
  std::string detail = cat(diffs.size(), " differing entries");
  for (const auto& d : diffs) detail += "; " + d;
  detail += noted ? "; (5,3) note present" : "; (5,3) note missing";
  return {only_expected && diffs.size() == 1 && noted && t < 1.0, detail};
}

Verdict printed_numerics() {
  const auto start = std::chrono::steady_clock::now();
  const Matrix op = example1::published_laplacian_real();
  const auto f = example1::published_eigenfunctions();
  const auto lambda = example1::published_eigenvalues();
  double worst = 0.0;
  std::size_t worst_index = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    const double r = (op * f[i] - lambda[i] * f[i]).cwiseAbs().maxCoeff();
    if (r > worst) {
      worst = r;
      worst_index = i + 1;
    }
  }
  const double t = seconds_since(start);
  return {worst <= 0.05 && t < 1.0, cat("max residual ", worst, " (f", worst_index, "), tolerance 0.05")};
}

Verdict table_reproduction() {
  const auto h = example1::hypergraph();
  const auto table = example1::published_table();
  bool ok = true;
  std::string detail;
  for (std::size_t i : {1, 2, 3, 7}) {
    const auto dec = decompose(h, printed(i));
    const bool strong_ok = dec.strong_domains == canonical_partition(table[i - 1].strong).blocks;
    ok = ok && strong_ok;
    detail += cat(detail.empty() ? "" : "; ", "f", i, " S=", dec.strong_count(),
                  strong_ok ? "" : " MISMATCH ", strong_ok ? "" : sets_text(dec.strong_domains));
    if (i != 3) {
      ok = ok && dec.weak_count() == dec.strong_count();
    } else {
      const std::vector<VertexSet> cores{{0, 5, 6}, {2, 3, 8}};
      ok = ok && dec.weak_count() == 2 && dec.weak_cores == cores;
      detail += cat(" W=", dec.weak_count(), " cores ", sets_text(dec.weak_cores), " domains ",
                    sets_text(dec.weak_domains));
    }
  }
  return {ok, detail};
}

Verdict upper_bounds() {
  const auto start = std::chrono::steady_clock::now();
  const auto& r = main_campaign();
  auto v = tally_verdict(r, {"strong_upper_bound", "weak_upper_bound"});
  const double t = seconds_since(start);
  v.pass = v.pass && r.instances_run == kCampaignSize && t < 300.0;
  v.detail = cat(r.instances_run, " instances (", disconnected_instances(), " disconnected); ", v.detail);
  return v;
}

Verdict lower_bound() {
  const auto& r = main_campaign();
  const auto& t = r.tallies.at("strong_lower_bound");
  std::size_t eigenpairs_checked = 0;
  const std::size_t unresolved = r.unresolved_violations();
  eigenpairs_checked = t.pass + t.logged;

  const auto h = example1::hypergraph();
  const auto s = eigendecompose(laplacian(h));
  const auto b = check_bounds(h, s, 0);
  const bool spot = b.strong == 1 && b.lower_bound() <= 1;

  std::string detail = cat(eigenpairs_checked, " instances evaluated, ", r.lower_bound_violations.size(),
                           " violating eigenpairs under all_pairs, ", unresolved,
                           " unresolved under exists_ordering; fixture f1: S=", b.strong,
                           " bound=", b.lower_bound(), spot ? " ok" : " FAILED");
  for (const auto& v : r.lower_bound_violations) {
    if (v.violation.resolved) continue;
    detail += cat("; first unresolved: seed ", v.seed, " f", v.violation.eigen_index,
                  " S=", v.violation.strong, " bound=", v.violation.bound);
    break;
  }
  return {unresolved == 0 && spot, detail};
}

Verdict identity_suite(std::string& diagnostic) {
  GenConfig cfg;
  cfg.seed = kCampaignSeed + 1;
  cfg.count = 50;
  const auto instances = generate(cfg);
  std::size_t product_bad = 0, form_bad = 0, pairs = 0;
  std::size_t interlacing_bad = 0, deletions = 0;
  std::size_t sandwich_bad = 0, sandwiches = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& h = instances[i];
    const auto bundle = laplacian(h);
    const auto s = eigendecompose(bundle);
    const auto n = h.num_vertices();
    Rng rng(instance_seed(cfg.seed ^ 0x1d, i));
    for (int t = 0; t < 100; ++t, ++pairs) {
      const Vector f = random_vector(rng, n);
      const Vector g = random_vector(rng, n);
      if (!product_rule_defect(bundle, f, g).holds(1e-9)) ++product_bad;
      const std::size_t k = static_cast<std::size_t>(t) % n;
      const Vector eg = s.eigenfunctions.col(static_cast<Eigen::Index>(k));
      const Matrix form = eigen_difference_form(bundle, eg, s.eigenvalues[k]);
      if (!difference_form_defect(bundle, form, f, eg, s.eigenvalues[k]).holds(1e-9)) ++form_bad;
    }
    for (std::size_t r = 1; r <= 2 && n > r; ++r, ++deletions) {
      VertexSet removed;
      while (removed.size() < r) {
        const Vertex v = rng.below(n);
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) removed.push_back(v);
      }
      if (interlacing_violation(h, s, removed) > 1e-8) ++interlacing_bad;
    }
  }

  Rng tree_rng(kCampaignSeed + 2);
  std::size_t rank_bad = 0;
  for (int t = 0; t < 50; ++t) {
    const auto tree = random_supertree(tree_rng, tree_rng.between(3, 12), 4);
    if (static_cast<long long>(difference_rank(tree)) != cyclomatic(tree).sum_edge_sizes_minus_one)
      ++rank_bad;
  }

  // Sandwich: the first 50 zero-free eigenfunctions whose positive edges fit
  // the exact forest search.
  auto sandwich_sweep = [](const GenConfig& gen, std::size_t wanted, std::size_t& bad, std::string& first) {
    std::size_t checked = 0;
    for (std::size_t i = 0; checked < wanted && i < 10000; ++i) {
      const auto h = generate_instance(gen, instance_seed(gen.seed, i));
      const auto bundle = laplacian(h);
      const auto s = eigendecompose(bundle);
      for (std::size_t k = 0; k < s.size() && checked < wanted; ++k) {
        const auto g = s.eigenfunction(k);
        if (!g.zeros().empty()) continue;
        if (positive_edges(h, g, PositiveEdgeRule::all_pairs).size() > kExactForestEdgeLimit) continue;
        const auto c = forest_inertia_sandwich(h, bundle, g, s.eigenvalues[k], PositiveEdgeRule::all_pairs);
        ++checked;
        if (!c.holds()) {
          if (bad++ == 0) {
            first = cat("p=", c.p, " forest=", c.forest, " positive=", c.positive, " l=", c.l, " on\n",
                        serialize_shg(h));
          }
        }
      }
    }
    return checked;
  };
  GenConfig sandwich_cfg;
  sandwich_cfg.seed = kCampaignSeed + 3;
  std::string first_sandwich;
  sandwiches = sandwich_sweep(sandwich_cfg, 50, sandwich_bad, first_sandwich);

  GenConfig graphs = sandwich_cfg;
  graphs.classical = true;
  graphs.edge_size_range = {2, 2};
  std::size_t graph_bad = 0;
  std::string first_graph;
  const auto graph_checked = sandwich_sweep(graphs, 50, graph_bad, first_graph);
  diagnostic = cat("2-uniform sandwich: ", graph_checked - graph_bad, "/", graph_checked, " hold");

  const bool ok = product_bad == 0 && form_bad == 0 && interlacing_bad == 0 && deletions >= 100 &&
                  rank_bad == 0 && sandwich_bad == 0 && sandwiches == 50;
  std::string detail =
      cat("product rule ", pairs - product_bad, "/", pairs, "; difference form ", pairs - form_bad, "/",
          pairs, "; interlacing ", deletions - interlacing_bad, "/", deletions, "; supertree rank ",
          50 - rank_bad, "/50; sandwich ", sandwiches - sandwich_bad, "/", sandwiches);
  if (!first_sandwich.empty()) detail += "; first sandwich failure " + first_sandwich;
  return {ok, detail};
}

Verdict oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  CampaignOptions o;
  o.gen.seed = kCampaignSeed + 4;
  o.gen.count = 200;
  o.gen.n_range = {std::size_t{3}, kOracleVertexLimit};
  o.gen.m_range = {2, 10};
  o.properties = {"oracle_equivalence"};
  const auto r = run_campaign(o);
  auto v = tally_verdict(r, {"oracle_equivalence"});
  const double t = seconds_since(start);
  const auto& tally = r.tallies.at("oracle_equivalence");
  v.pass = v.pass && tally.skip == 0 && t < 120.0;
  return v;
}

Verdict structural_invariants() {
  return tally_verdict(main_campaign(),
                       {"domain_graph_connected", "weak_membership_at_most_two", "zero_neighbor_containment",
                        "weak_count_le_strong", "scaling_invariance", "trace_equals_n", "self_adjoint"});
}

}  // namespace

int main() {
  std::string diagnostic;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"fixture laplacian matches the printed matrix except (5,3)", fixture_laplacian},
      {"printed eigenpairs solve the printed operator within 0.05", printed_numerics},
      {"printed eigenfunctions reproduce the strong domain table", table_reproduction},
      {"upper bounds on 500 random instances", upper_bounds},
      {"lower bound on 500 random instances", lower_bound},
      {"identity suite", [&diagnostic] { return identity_suite(diagnostic); }},
      {"exhaustive oracle matches on 200 instances with n <= 8", oracle_equivalence},
      {"structural invariants over the campaign", structural_invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, cat("exception: ", e.what())};
    }
    const double t = seconds_since(start);
    failed += v.pass ? 0 : 1;
    std::printf("%s %zu %s (%.2f s)\n    %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("note: %s\n", diagnostic.c_str());
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
