#include "shg/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "shg/shg_format.hpp"

namespace shg {

using nlohmann::json;

std::size_t CampaignResult::unresolved_violations() const {
  std::size_t n = 0;
  for (const auto& v : lower_bound_violations) n += v.violation.resolved ? 0 : 1;
  return n;
}

std::size_t CampaignResult::failures_of(const std::string& property) const {
  std::size_t n = 0;
  for (const auto& f : failures) n += f.property == property ? 1 : 0;
  return n;
}

namespace {

std::vector<const Property*> select(const std::vector<std::string>& ids) {
  std::vector<const Property*> out;
  if (ids.empty()) {
    for (const auto& p : property_registry()) out.push_back(&p);
  } else {
    for (const auto& id : ids) out.push_back(&find_property(id));
  }
  return out;
}

void merge(CampaignResult& into, CampaignResult&& part) {
  into.instances_run += part.instances_run;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
  for (auto& v : part.lower_bound_violations) into.lower_bound_violations.push_back(std::move(v));
  for (const auto& [slack, count] : part.sharpness) into.sharpness[slack] += count;
  for (const auto& [id, t] : part.tallies) {
    auto& dst = into.tallies[id];
    dst.pass += t.pass;
    dst.fail += t.fail;
    dst.skip += t.skip;
    dst.logged += t.logged;
  }
}

}  // namespace

CampaignResult run_instance(const SignedHypergraph& h, std::uint64_t seed,
                            const std::vector<const Property*>& properties, const PropertyOptions& options) {
  CampaignResult out;
  out.instances_run = 1;
  try {
    InstanceContext ctx(h, seed, options);
    for (const Property* p : properties) {
      const auto r = run_property(*p, ctx);
      auto& t = out.tallies[p->id];
      switch (r.outcome) {
        case Outcome::pass:
          ++t.pass;
          break;
        case Outcome::skip:
          ++t.skip;
          break;
        case Outcome::logged:
          ++t.logged;
          break;
        case Outcome::fail:
          ++t.fail;
          out.failures.push_back({seed, serialize_shg(h), p->id, r.details});
          break;
      }
    }
    for (const auto& v : ctx.violations) {
      out.lower_bound_violations.push_back({seed, serialize_shg(h), v});
    }
    out.sharpness = std::move(ctx.sharpness);
  } catch (const std::exception& e) {
    out.failures.push_back({seed, serialize_shg(h), "instance_setup", e.what()});
  }
  return out;
}

CampaignResult run_campaign(const CampaignOptions& options) {
  options.gen.validate();
  const auto properties = select(options.properties);
  const std::size_t count = options.gen.count;
  std::vector<CampaignResult> parts(count);

  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto seed = instance_seed(options.gen.seed, i);
      try {
        parts[i] =
            run_instance(generate_instance(options.gen, seed), seed, properties, options.property_options);
      } catch (const std::exception& e) {
        parts[i].instances_run = 1;
        parts[i].failures.push_back({seed, "", "generation", e.what()});
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CampaignResult result;
  for (auto& part : parts) merge(result, std::move(part));
  return result;
}

PropertyResult rerun(const FailureRecord& record, const PropertyOptions& options) {
  const auto h = parse_shg(record.instance);
  InstanceContext ctx(h, record.seed, options);
  return run_property(find_property(record.property), ctx);
}

json to_json(const CampaignOptions& o) {
  auto range = [](std::pair<std::size_t, std::size_t> r) { return json::array({r.first, r.second}); };
  return {
      {"seed", o.gen.seed},
      {"count", o.gen.count},
      {"n_range", range(o.gen.n_range)},
      {"m_range", range(o.gen.m_range)},
      {"edge_size_range", range(o.gen.edge_size_range)},
      {"sign_bias", o.gen.sign_bias},
      {"classical", o.gen.classical},
      {"properties", o.properties},
      {"function_samples", o.property_options.function_samples},
      {"deletion_samples", o.property_options.deletion_samples},
      {"edge_rule", std::string(to_string(o.property_options.rule))},
  };
}

json to_json(const CampaignResult& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        {{"seed", f.seed}, {"instance", f.instance}, {"property", f.property}, {"details", f.details}});
  }
  json violations = json::array();
  for (const auto& v : r.lower_bound_violations) {
    violations.push_back({{"seed", v.seed},
                          {"instance", v.instance},
                          {"eigen_index", v.violation.eigen_index},
                          {"strong", v.violation.strong},
                          {"bound", v.violation.bound},
                          {"bound_alternative", v.violation.bound_alternative},
                          {"resolved", v.violation.resolved}});
  }
  json sharpness = json::array();
  for (const auto& [slack, count] : r.sharpness) sharpness.push_back({{"slack", slack}, {"count", count}});
  json tallies = json::object();
  for (const auto& [id, t] : r.tallies) {
    tallies[id] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"logged", t.logged}};
  }
  return {
      {"instances_run", r.instances_run},
      {"passed", r.passed()},
      {"failures", failures},
      {"lower_bound_violations", violations},
      {"unresolved_lower_bound_violations", r.unresolved_violations()},
      {"sharpness", sharpness},
      {"properties", tallies},
  };
}

FailureRecord failure_from_json(const json& j) {
  return {j.at("seed").get<std::uint64_t>(), j.at("instance").get<std::string>(),
          j.at("property").get<std::string>(), j.value("details", std::string())};
}

}  // namespace shg
