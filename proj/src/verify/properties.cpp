#include "shg/properties.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <functional>
#include <sstream>

#include "shg/identities.hpp"
#include "shg/oracle.hpp"
#include "shg/shg_format.hpp"

namespace shg {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skip:
      return "skip";
    case Outcome::logged:
      return "logged";
  }
  return "unknown";
}

InstanceContext::InstanceContext(const SignedHypergraph& h, std::uint64_t seed, PropertyOptions options)
    : h_(h), seed_(seed), options_(options) {
  bool spectral = h.num_vertices() > 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) spectral = spectral && h.degree(v) > 0;
  if (spectral) {
    bundle_ = laplacian(h);
    spectrum_ = eigendecompose(*bundle_);
    for (std::size_t i = 0; i < spectrum_->size(); ++i) eigen_.push_back(spectrum_->eigenfunction(i));
  }
  Rng rng = rng_for("test-functions");
  for (std::size_t i = 0; i < options_.function_samples; ++i) {
    tests_.emplace_back(random_sign_pattern(rng, h.num_vertices(), options_.zero_rate), 0.0);
  }
}

const MatrixBundle& InstanceContext::bundle() const {
  if (!bundle_) throw Error("instance has an isolated vertex");
  return *bundle_;
}

const Spectrum& InstanceContext::spectrum() const {
  if (!spectrum_) throw Error("instance has an isolated vertex");
  return *spectrum_;
}

std::vector<const VertexFunction*> InstanceContext::all_functions() const {
  std::vector<const VertexFunction*> out;
  for (const auto& f : eigen_) out.push_back(&f);
  for (const auto& f : tests_) out.push_back(&f);
  return out;
}

Rng InstanceContext::rng_for(std::string_view property_id) const {
  std::uint64_t mix = 0;
  for (char c : fnv1a_hex(property_id)) mix = mix * 16 + static_cast<std::uint64_t>(c);
  return Rng(seed_ ^ mix);
}

bool on_cycle(const SignedHypergraph& h, Vertex x) {
  std::vector<char> on_path(h.num_vertices(), 0);
  std::vector<char> used(h.num_edges(), 0);
  std::function<bool(Vertex, std::size_t)> walk = [&](Vertex v, std::size_t length) {
    for (std::size_t id : h.incident_edges(v)) {
      if (used[id]) continue;
      for (const auto& inc : h.edge(id).incidences()) {
        const Vertex y = inc.vertex;
        if (y == v) continue;
        if (y == x && length >= 2) return true;
        if (on_path[y]) continue;
        used[id] = on_path[y] = 1;
        const bool found = walk(y, length + 1);
        used[id] = on_path[y] = 0;
        if (found) return true;
      }
    }
    return false;
  };
  on_path[x] = 1;
  return walk(x, 1);
}

SandwichCheck forest_inertia_sandwich(const SignedHypergraph& h, const MatrixBundle& bundle,
                                      const VertexFunction& g, double lambda, PositiveEdgeRule rule) {
  SandwichCheck s;
  s.p = positive_inertia(eigen_difference_form(bundle, g.values(), lambda));
  std::vector<Edge> kept;
  for (std::size_t id : positive_edges(h, g, rule)) {
    kept.push_back(h.edge(id));
    s.positive += static_cast<long long>(h.edge(id).size()) - 1;
  }
  const SignedHypergraph sub(h.num_vertices(), std::move(kept));
  s.forest = forest_weight(sub, spanning_hyperforest(sub, ForestSearch::exact));
  s.l = cyclomatic(h).l;
  return s;
}

double interlacing_violation(const SignedHypergraph& h, const Spectrum& spectrum, const VertexSet& removed) {
  SignedHypergraph current = h;
  std::vector<Vertex> label(h.num_vertices());  // original -> current
  for (Vertex v = 0; v < h.num_vertices(); ++v) label[v] = v;
  for (Vertex v : removed) {
    const auto step = weak_delete(current, label[v]);
    const auto inverse = step.inverse(current.num_vertices());
    for (auto& l : label) l = l < inverse.size() ? inverse[l] : l;
    current = step.graph;
  }
  current = drop_empty_edges(current);
  if (current.num_vertices() == 0) return 0.0;
  const auto reduced = eigendecompose(laplacian(current));
  const std::size_t r = removed.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    worst = std::max(worst, spectrum.eigenvalues[k] - reduced.eigenvalues[k]);
    worst = std::max(worst, reduced.eigenvalues[k] - spectrum.eigenvalues[k + r]);
  }
  return worst;
}

std::size_t difference_rank(const SignedHypergraph& h) {
  std::vector<std::pair<Vertex, Vertex>> rows;
  for (const Edge& e : h.edges()) {
    const auto inc = e.incidences();
    for (std::size_t i = 1; i < inc.size(); ++i) rows.emplace_back(inc[i - 1].vertex, inc[i].vertex);
  }
  if (rows.empty()) return 0;
  Matrix m =
      Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(h.num_vertices()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(rows[i].first)) = 1.0;
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(rows[i].second)) = -1.0;
  }
  return static_cast<std::size_t>(Eigen::FullPivLU<Matrix>(m).rank());
}

namespace {

PropertyResult pass() { return {}; }
PropertyResult skip(std::string why) { return {Outcome::skip, std::move(why)}; }
PropertyResult fail(std::string why) { return {Outcome::fail, std::move(why)}; }

template <class... Parts>
std::string text(const Parts&... parts) {
  std::ostringstream out;
  out.precision(12);
  (out << ... << parts);
  return out.str();
}

std::string values_text(const VertexFunction& f) {
  std::ostringstream out;
  out.precision(6);
  out << '(';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << f[i];
  out << ')';
  return out.str();
}

bool same_decomposition(const NodalDecomposition& a, const NodalDecomposition& b) {
  return a.support == b.support && a.strong_domains == b.strong_domains && a.weak_cores == b.weak_cores &&
         a.weak_domains == b.weak_domains;
}

VertexSet random_subset(Rng& rng, std::size_t n, std::size_t size) {
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  rng.shuffle(all);
  all.resize(size);
  return all;
}

bool has_singleton_edges(const SignedHypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(), [](const Edge& e) { return e.size() == 1; });
}

// ---- core ----

PropertyResult cyclomatic_nonnegative(InstanceContext& ctx) {
  const auto s = cyclomatic(ctx.graph());
  if (s.l < 0) return fail(text("l = ", s.l));
  const long long expect = s.sum_edge_sizes_minus_one - static_cast<long long>(s.n_vertices) +
                           static_cast<long long>(s.n_components);
  if (s.l != expect) return fail(text("l = ", s.l, " but the sum gives ", expect));
  return pass();
}

PropertyResult acyclic_iff_zero_cyclomatic(InstanceContext& ctx) {
  const bool acyclic = is_acyclic(ctx.graph());
  const auto l = cyclomatic(ctx.graph()).l;
  if (acyclic != (l == 0)) return fail(text("is_acyclic = ", acyclic, ", l = ", l));
  return pass();
}

PropertyResult tree_like_iff_off_cycles(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  if (h.num_vertices() > kOracleVertexLimit) return skip("more than 8 vertices");
  // A vertex with a singleton edge can be on no cycle yet fail the count.
  if (has_singleton_edges(h)) return skip("singleton edges present");
  for (Vertex x = 0; x < h.num_vertices(); ++x) {
    if (is_tree_like(h, x) == on_cycle(h, x)) {
      return fail(
          text("vertex ", x + 1, ": tree-like = ", is_tree_like(h, x), ", on a cycle = ", on_cycle(h, x)));
    }
  }
  return pass();
}

PropertyResult tree_like_deletion_cyclomatic(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  VertexSet tree_like;
  for (Vertex x = 0; x < h.num_vertices(); ++x) {
    if (is_tree_like(h, x)) tree_like.push_back(x);
  }
  if (tree_like.empty()) return skip("no tree-like vertex");
  Rng rng = ctx.rng_for("tree_like_deletion_cyclomatic");
  rng.shuffle(tree_like);
  tree_like.resize(rng.between(1, tree_like.size()));
  std::sort(tree_like.begin(), tree_like.end());
  VertexSet rest;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (!std::binary_search(tree_like.begin(), tree_like.end(), v)) rest.push_back(v);
  }
  const auto before = cyclomatic(h).l;
  const auto after = cyclomatic(induced_subhypergraph(h, rest).graph).l;
  if (after != before) {
    return fail(text("deleting ", format_vertex_set(tree_like), ": l goes ", before, " -> ", after));
  }
  return pass();
}

PropertyResult induced_identity_and_idempotent(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  VertexSet all(h.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  if (!(induced_subhypergraph(h, all).graph == h)) return fail("inducing on V changed H");
  Rng rng = ctx.rng_for("induced_identity_and_idempotent");
  auto subset = random_subset(rng, h.num_vertices(), rng.between(0, h.num_vertices()));
  std::sort(subset.begin(), subset.end());
  const auto once = induced_subhypergraph(h, subset).graph;
  VertexSet again(once.num_vertices());
  for (Vertex v = 0; v < again.size(); ++v) again[v] = v;
  if (!(induced_subhypergraph(once, again).graph == once)) {
    return fail(text("inducing on ", format_vertex_set(subset), " twice differs"));
  }
  return pass();
}

PropertyResult exact_forest_dominates_greedy(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  if (h.num_edges() > kExactForestEdgeLimit) return skip("more than 16 edges");
  const auto greedy = spanning_hyperforest(h, ForestSearch::greedy);
  const auto exact = spanning_hyperforest(h, ForestSearch::exact);
  if (!is_acyclic_family(h, greedy) || !is_acyclic_family(h, exact)) {
    return fail("forest is not an acyclic family");
  }
  if (forest_weight(h, exact) < forest_weight(h, greedy)) {
    return fail(text("exact ", forest_weight(h, exact), " < greedy ", forest_weight(h, greedy)));
  }
  return pass();
}

// ---- spectra ----

PropertyResult self_adjoint(InstanceContext& ctx) {
  const auto& b = ctx.bundle();
  Rng rng = ctx.rng_for("self_adjoint");
  for (std::size_t i = 0; i < ctx.options().function_samples; ++i) {
    const Vector f = random_vector(rng, ctx.graph().num_vertices());
    const Vector g = random_vector(rng, ctx.graph().num_vertices());
    const auto c = self_adjoint_defect(b, f, g);
    if (!c.holds(ctx.options().identity_tol)) return fail(text("defect ", c.defect, ", scale ", c.scale));
  }
  return pass();
}

PropertyResult trace_equals_n(InstanceContext& ctx) {
  const auto exact = exact_laplacian(ctx.graph());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (exact[i][i] != Rational(1)) return fail(text("diagonal entry ", i + 1, " is not 1"));
  }
  const auto acc = check_spectrum(ctx.bundle(), ctx.spectrum());
  const double n = static_cast<double>(ctx.graph().num_vertices());
  if (acc.trace_defect > 1e-8 * n) return fail(text("eigenvalue sum off by ", acc.trace_defect));
  return pass();
}

PropertyResult spectrum_accuracy(InstanceContext& ctx) {
  const auto acc = check_spectrum(ctx.bundle(), ctx.spectrum());
  if (!acc.acceptable(ctx.graph().num_vertices())) {
    return fail(
        text("residual ", acc.max_residual, ", gram ", acc.gram_defect, ", trace ", acc.trace_defect));
  }
  return pass();
}

PropertyResult classical_graph_spectrum(InstanceContext& ctx) {
  GenConfig cfg;
  cfg.classical = true;
  cfg.edge_size_range = {2, 2};
  cfg.m_range = {ctx.graph().num_vertices(), 2 * ctx.graph().num_vertices()};
  cfg.n_range = {ctx.graph().num_vertices(), ctx.graph().num_vertices()};
  const auto g = generate_instance(cfg, ctx.rng_for("classical_graph_spectrum").next());
  const auto b = laplacian(g);
  const Eigen::Index n = b.size();
  Matrix classical = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto x = static_cast<Eigen::Index>(e.incidences()[0].vertex);
    const auto y = static_cast<Eigen::Index>(e.incidences()[1].vertex);
    classical(x, y) += 1.0;
    classical(y, x) += 1.0;
  }
  const Matrix expect = Matrix::Identity(n, n) - b.degrees.cwiseInverse().asDiagonal() * classical;
  if ((expect - b.laplacian).cwiseAbs().maxCoeff() > 1e-12) {
    return fail("signed Laplacian differs from the classical one:\n" + serialize_shg(g));
  }
  const auto s = eigendecompose(b);
  if (std::abs(s.eigenvalues.front()) > 1e-8 || s.eigenvalues.back() > 2.0 + 1e-8) {
    return fail(text("spectrum [", s.eigenvalues.front(), ", ", s.eigenvalues.back(), "] outside [0, 2]:\n",
                     serialize_shg(g)));
  }
  const Vector ones = Vector::Ones(n);
  if ((b.laplacian * ones).cwiseAbs().maxCoeff() > 1e-12) return fail("constants not in the kernel");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.eigenvalues[i] < 1e-8) continue;
    const double overlap =
        weighted_inner(b.degrees, ones, s.eigenfunctions.col(static_cast<Eigen::Index>(i)));
    if (std::abs(overlap) > 1e-8) {
      return fail(text("eigenfunction ", i + 1, " not orthogonal to constants:\n", serialize_shg(g)));
    }
  }
  return pass();
}

PropertyResult interlacing(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  if (h.num_vertices() < 2) return skip("too few vertices");
  Rng rng = ctx.rng_for("interlacing");
  for (std::size_t i = 0; i < ctx.options().deletion_samples; ++i) {
    const std::size_t r = std::min<std::size_t>(1 + i % 2, h.num_vertices() - 1);
    const auto removed = random_subset(rng, h.num_vertices(), r);
    const double worst = interlacing_violation(h, ctx.spectrum(), removed);
    if (worst > ctx.options().interlacing_tol) {
      return fail(text("deleting ", format_vertex_set(removed), " breaks interlacing by ", worst));
    }
  }
  return pass();
}

PropertyResult supertree_rank(InstanceContext& ctx) {
  Rng rng = ctx.rng_for("supertree_rank");
  const auto t = random_supertree(rng, ctx.graph().num_vertices(), 4);
  const auto rank = difference_rank(t);
  const auto sum = cyclomatic(t).sum_edge_sizes_minus_one;
  if (static_cast<long long>(rank) != sum) {
    return fail(text("rank ", rank, " != ", sum, " for\n", serialize_shg(t)));
  }
  return pass();
}

PropertyResult min_max_bounds(InstanceContext& ctx) {
  const auto& s = ctx.spectrum();
  Rng rng = ctx.rng_for("min_max_bounds");
  const double slack = 1e-9 * std::max(1.0, std::abs(s.eigenvalues.back()));
  for (std::size_t i = 0; i < ctx.options().function_samples; ++i) {
    const double q = rayleigh(ctx.bundle(), random_vector(rng, ctx.graph().num_vertices()));
    if (q < s.eigenvalues.front() - slack || q > s.eigenvalues.back() + slack) {
      return fail(text("Rayleigh quotient ", q, " outside [", s.eigenvalues.front(), ", ",
                       s.eigenvalues.back(), "]"));
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double q = rayleigh(ctx.bundle(), s.eigenfunctions.col(static_cast<Eigen::Index>(i)));
    if (std::abs(q - s.eigenvalues[i]) > 1e-8) return fail(text("Rayleigh quotient of f", i + 1, " is ", q));
  }
  return pass();
}

PropertyResult product_rule_identity(InstanceContext& ctx) {
  Rng rng = ctx.rng_for("product_rule_identity");
  for (std::size_t i = 0; i < ctx.options().function_samples; ++i) {
    const Vector f = random_vector(rng, ctx.graph().num_vertices());
    const Vector g = random_vector(rng, ctx.graph().num_vertices());
    const auto c = product_rule_defect(ctx.bundle(), f, g);
    if (!c.holds(ctx.options().identity_tol)) return fail(text("defect ", c.defect, ", scale ", c.scale));
  }
  return pass();
}

PropertyResult eigen_difference_form_property(InstanceContext& ctx) {
  const auto& s = ctx.spectrum();
  Rng rng = ctx.rng_for("eigen_difference_form");
  const auto n = ctx.graph().num_vertices();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vector g = s.eigenfunctions.col(static_cast<Eigen::Index>(i));
    const Matrix form = eigen_difference_form(ctx.bundle(), g, s.eigenvalues[i]);
    const Vector ones = Vector::Ones(static_cast<Eigen::Index>(n));
    if (std::abs(ones.dot(form * ones)) > 1e-9 * std::max(1.0, form.cwiseAbs().sum())) {
      return fail(text("form of f", i + 1, " does not vanish on constants"));
    }
    for (std::size_t j = 0; j < ctx.options().function_samples; ++j) {
      const Vector f = random_vector(rng, n);
      const auto c = difference_form_defect(ctx.bundle(), form, f, g, s.eigenvalues[i]);
      if (!c.holds(ctx.options().identity_tol)) {
        return fail(text("f", i + 1, ": form vs direct defect ", c.defect, ", scale ", c.scale));
      }
      const double pairs = pair_difference_sum(ctx.bundle(), f, g);
      const double quad = f.dot(form * f);
      if (std::abs(pairs - quad) > ctx.options().identity_tol * std::max(1.0, c.scale)) {
        return fail(text("f", i + 1, ": form ", quad, " vs pair sum ", pairs));
      }
    }
  }
  return pass();
}

PropertyResult inertia_index(InstanceContext& ctx) {
  const auto& s = ctx.spectrum();
  const auto n = ctx.graph().num_vertices();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& g = ctx.eigenfunctions()[i];
    if (!g.zeros().empty()) continue;
    const auto& c = s.cluster_of(i);
    const Matrix form = eigen_difference_form(ctx.bundle(), g.values(), s.eigenvalues[i]);
    const auto p = positive_inertia(form);
    if (p != n - (c.first + c.multiplicity)) {
      return fail(text("f", i + 1, ": positive inertia ", p, ", expected ", n - (c.first + c.multiplicity)));
    }
    ++checked;
  }
  return checked ? pass() : skip("no zero-free eigenfunction");
}

// ---- nodal ----

PropertyResult oracle_equivalence(InstanceContext& ctx) {
  if (ctx.graph().num_vertices() > kOracleVertexLimit) return skip("more than 8 vertices");
  for (const auto* f : ctx.all_functions()) {
    const auto diff = compare_with_oracle(ctx.graph(), *f);
    if (!diff.empty()) return fail(values_text(*f) + ": " + diff);
  }
  return pass();
}

template <class Check>
PropertyResult for_each_decomposition(InstanceContext& ctx, Check check) {
  for (const auto* f : ctx.all_functions()) {
    const auto dec = decompose(ctx.graph(), *f);
    std::string why = check(*f, dec);
    if (!why.empty()) return fail(values_text(*f) + ": " + why);
  }
  return pass();
}

PropertyResult weak_count_le_strong(InstanceContext& ctx) {
  return for_each_decomposition(ctx, [](const VertexFunction&, const NodalDecomposition& d) {
    return d.weak_count() <= d.strong_count() ? std::string()
                                              : text("weak ", d.weak_count(), " > strong ", d.strong_count());
  });
}

PropertyResult zero_free_partitions_agree(InstanceContext& ctx) {
  return for_each_decomposition(ctx, [](const VertexFunction& f, const NodalDecomposition& d) {
    if (!f.zeros().empty()) return std::string();
    return d.strong_domains == d.weak_cores && d.weak_cores == d.weak_domains
               ? std::string()
               : std::string("strong and weak partitions differ without zeros");
  });
}

std::vector<std::size_t> membership(const NodalDecomposition& d, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (const auto& dom : d.weak_domains) {
    for (Vertex v : dom) ++count[v];
  }
  return count;
}

PropertyResult weak_membership_at_most_two(InstanceContext& ctx) {
  const auto n = ctx.graph().num_vertices();
  return for_each_decomposition(ctx, [n](const VertexFunction&, const NodalDecomposition& d) {
    const auto count = membership(d, n);
    for (Vertex v = 0; v < n; ++v) {
      if (count[v] > 2) return text("vertex ", v + 1, " lies in ", count[v], " weak domains");
    }
    return std::string();
  });
}

PropertyResult zero_neighbor_containment(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  return for_each_decomposition(ctx, [&h](const VertexFunction& f, const NodalDecomposition& d) {
    for (Vertex x : f.zeros()) {
      std::vector<const VertexSet*> holding;
      for (const auto& dom : d.weak_domains) {
        if (std::binary_search(dom.begin(), dom.end(), x)) holding.push_back(&dom);
      }
      if (holding.size() != 2) continue;
      for (Vertex y : h.neighbors(x)) {
        const bool inside = std::binary_search(holding[0]->begin(), holding[0]->end(), y) ||
                            std::binary_search(holding[1]->begin(), holding[1]->end(), y);
        if (!inside) return text("neighbour ", y + 1, " of zero ", x + 1, " outside its two domains");
      }
    }
    return std::string();
  });
}

PropertyResult domain_graph_connected(InstanceContext& ctx) {
  const auto& h = ctx.graph();
  if (component_count(h) != 1) return skip("disconnected instance");
  return for_each_decomposition(ctx, [&h](const VertexFunction& f, const NodalDecomposition& d) {
    if (f.support().empty()) return std::string();
    return domain_adjacency_graph(h, d).connected() ? std::string()
                                                    : std::string("domain graph is disconnected");
  });
}

template <class Check>
PropertyResult for_each_bound(InstanceContext& ctx, Check check) {
  const auto& s = ctx.spectrum();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& c = s.cluster_of(i);
    const auto rep =
        check_bounds(ctx.graph(), ctx.eigenfunctions()[i], c.first + 1, c.multiplicity, ctx.options().rule);
    std::string why = check(i, rep);
    if (!why.empty()) return fail(text("f", i + 1, " (lambda = ", s.eigenvalues[i], "): ", why));
  }
  return pass();
}

PropertyResult strong_upper_bound(InstanceContext& ctx) {
  return for_each_bound(ctx, [&ctx](std::size_t, const BoundReport& r) {
    ++ctx.sharpness[r.strong_upper() - static_cast<long long>(r.strong)];
    return r.strong_upper_ok() ? std::string() : text("strong ", r.strong, " > k+r-1 = ", r.strong_upper());
  });
}

PropertyResult weak_upper_bound(InstanceContext& ctx) {
  return for_each_bound(ctx, [](std::size_t, const BoundReport& r) {
    return r.weak_upper_ok() ? std::string() : text("weak ", r.weak, " > k+c-1 = ", r.weak_upper());
  });
}

PropertyResult strong_lower_bound(InstanceContext& ctx) {
  std::size_t violations = 0;
  std::size_t unresolved = 0;
  const auto result = for_each_bound(ctx, [&](std::size_t i, const BoundReport& r) {
    if (!r.strong_lower_ok()) {
      ctx.violations.push_back(
          {i + 1, r.strong, r.lower_bound(), r.lower_bound_alternative(), r.strong_lower_ok_alternative()});
      ++violations;
      if (!r.strong_lower_ok_alternative()) ++unresolved;
    }
    return std::string();
  });
  if (violations == 0) return result;
  return {Outcome::logged,
          text(violations, " eigenpair(s) below the lower bound, ", unresolved, " unresolved")};
}

PropertyResult forest_inertia_sandwich_property(InstanceContext& ctx) {
  const auto& s = ctx.spectrum();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& g = ctx.eigenfunctions()[i];
    if (!g.zeros().empty()) continue;
    if (positive_edges(ctx.graph(), g, ctx.options().rule).size() > kExactForestEdgeLimit) continue;
    const auto c =
        forest_inertia_sandwich(ctx.graph(), ctx.bundle(), g, s.eigenvalues[i], ctx.options().rule);
    if (!c.holds()) {
      return fail(text("f", i + 1, ": p = ", c.p, ", forest = ", c.forest, ", positive edges = ", c.positive,
                       ", l = ", c.l));
    }
    ++checked;
  }
  return checked ? pass() : skip("no zero-free eigenfunction");
}

PropertyResult scaling_invariance(InstanceContext& ctx) {
  return for_each_decomposition(ctx, [&ctx](const VertexFunction& f, const NodalDecomposition& d) {
    for (double c : {-2.5, 0.3, -1.0}) {
      if (!same_decomposition(decompose(ctx.graph(), f.scaled(c)), d)) {
        return text("decomposition changes under scaling by ", c);
      }
    }
    return std::string();
  });
}

// ---- cli ----

PropertyResult shg_round_trip(InstanceContext& ctx) {
  const auto text_form = serialize_shg(ctx.graph());
  if (!(parse_shg(text_form) == ctx.graph())) return fail("parse(serialize(H)) != H");
  if (serialize_shg(parse_shg(text_form)) != text_form) return fail("serialization not stable");
  return pass();
}

std::function<PropertyResult(InstanceContext&)> spectral(PropertyResult (*check)(InstanceContext&)) {
  return [check](InstanceContext& ctx) {
    if (!ctx.spectral()) return skip("isolated vertex");
    return check(ctx);
  };
}

std::vector<Property> build_registry() {
  return {
      {"cyclomatic_nonnegative", "core", "l(H) >= 0 and equals sum(|e|-1) - |V| + c", cyclomatic_nonnegative},
      {"acyclic_iff_zero_cyclomatic", "core", "per-component acyclicity iff l(H) = 0",
       acyclic_iff_zero_cyclomatic},
      {"tree_like_iff_off_cycles", "core",
       "tree-like iff on no cycle (exhaustive, n <= 8, no singleton edges)", tree_like_iff_off_cycles},
      {"tree_like_deletion_cyclomatic", "core", "inducing on V minus a set of tree-like vertices keeps l(H)",
       tree_like_deletion_cyclomatic},
      {"induced_identity_and_idempotent", "core",
       "inducing on V is the identity; inducing twice is inducing once", induced_identity_and_idempotent},
      {"exact_forest_dominates_greedy", "core", "exact forest weight >= greedy forest weight",
       exact_forest_dominates_greedy},
      {"self_adjoint", "spectra", "<Lf, g>_D = <f, Lg>_D", spectral(self_adjoint)},
      {"trace_equals_n", "spectra", "diag(L) = 1 exactly and the eigenvalues sum to n",
       spectral(trace_equals_n)},
      {"spectrum_accuracy", "spectra", "eigen residuals, D-orthonormality and trace within tolerance",
       spectral(spectrum_accuracy)},
      {"classical_graph_spectrum", "spectra",
       "classical graphs: classical Laplacian, spectrum in [0, 2], constants in the kernel",
       classical_graph_spectrum},
      {"interlacing", "spectra", "weak deletion of r vertices interlaces the spectrum",
       spectral(interlacing)},
      {"supertree_rank", "spectra", "chained difference rows of a supertree have rank sum(|e|-1)",
       supertree_rank},
      {"min_max_bounds", "spectra", "Rayleigh quotients lie in [lambda_1, lambda_n]",
       spectral(min_max_bounds)},
      {"product_rule_identity", "spectra", "<fg, L(fg)> = <fg, f Lg> + pair sum",
       spectral(product_rule_identity)},
      {"eigen_difference_form", "spectra", "f^T S f equals the direct form and the pair sum",
       spectral(eigen_difference_form_property)},
      {"inertia_index", "spectra", "zero-free eigenfunction: positive inertia of S is n-(k+r-1)",
       spectral(inertia_index)},
      {"oracle_equivalence", "nodal", "exhaustive path enumeration matches the efficient domains (n <= 8)",
       oracle_equivalence},
      {"weak_count_le_strong", "nodal", "weak count <= strong count", weak_count_le_strong},
      {"zero_free_partitions_agree", "nodal", "without zeros strong and weak partitions coincide",
       zero_free_partitions_agree},
      {"weak_membership_at_most_two", "nodal", "no vertex lies in three weak domains",
       weak_membership_at_most_two},
      {"zero_neighbor_containment", "nodal",
       "a zero in two weak domains has all its neighbours in their union", zero_neighbor_containment},
      {"domain_graph_connected", "nodal", "connected H gives a connected domain graph",
       domain_graph_connected},
      {"strong_upper_bound", "nodal", "strong count <= k+r-1", spectral(strong_upper_bound)},
      {"weak_upper_bound", "nodal", "weak count <= k+c-1", spectral(weak_upper_bound)},
      {"strong_lower_bound", "nodal",
       "strong count >= k+r-1-l'+l_plus-|F| (violations logged with the other edge rule)",
       spectral(strong_lower_bound)},
      {"forest_inertia_sandwich", "nodal", "zero-free eigenfunction: p <= forest <= positive edges <= p + l",
       spectral(forest_inertia_sandwich_property)},
      {"scaling_invariance", "nodal", "decompositions are invariant under c * f, c != 0", scaling_invariance},
      {"shg_round_trip", "cli", "parse(serialize(H)) = H", shg_round_trip},
  };
}

}  // namespace

const std::vector<Property>& property_registry() {
  static const std::vector<Property> registry = build_registry();
  return registry;
}

const Property& find_property(std::string_view id) {
  for (const auto& p : property_registry()) {
    if (p.id == id) return p;
  }
  throw Error("unknown property '" + std::string(id) + "'");
}

PropertyResult run_property(const Property& p, InstanceContext& ctx) {
  try {
    return p.check(ctx);
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace shg
