#ifndef SHG_CAMPAIGN_HPP
#define SHG_CAMPAIGN_HPP

#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "shg/properties.hpp"

namespace shg {

struct CampaignOptions {
  GenConfig gen;
  std::vector<std::string> properties;  ///< empty = every registered property
  PropertyOptions property_options;
  std::size_t threads = 0;  ///< 0 = hardware concurrency
};

struct FailureRecord {
  std::uint64_t seed = 0;  ///< instance seed
  std::string instance;    ///< shg text
  std::string property;
  std::string details;
};

struct ViolationRecord {
  std::uint64_t seed = 0;
  std::string instance;
  LowerBoundViolation violation;
};

struct PropertyTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t logged = 0;
};

struct CampaignResult {
  std::size_t instances_run = 0;
  std::vector<FailureRecord> failures;
  std::vector<ViolationRecord> lower_bound_violations;
  std::map<long long, std::size_t> sharpness;
  std::map<std::string, PropertyTally> tallies;

  bool passed() const { return failures.empty(); }
  std::size_t unresolved_violations() const;
  std::size_t failures_of(const std::string& property) const;
};

/// Generates cfg.count instances and runs the selected properties on each.
/// Instances run in parallel; results are merged in instance order so the
/// outcome does not depend on the thread count.
CampaignResult run_campaign(const CampaignOptions& options);

/// Runs the properties on one instance.
CampaignResult run_instance(const SignedHypergraph& h, std::uint64_t seed,
                            const std::vector<const Property*>& properties, const PropertyOptions& options);

/// Re-runs a recorded failure from its serialized instance and seed.
PropertyResult rerun(const FailureRecord& record, const PropertyOptions& options = {});

nlohmann::json to_json(const CampaignOptions& options);
nlohmann::json to_json(const CampaignResult& result);
FailureRecord failure_from_json(const nlohmann::json& j);

}  // namespace shg

#endif  // SHG_CAMPAIGN_HPP
