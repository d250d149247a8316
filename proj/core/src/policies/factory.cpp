#include <array>

#include "netband/policies.hpp"

namespace netband {

namespace {

const std::array<std::string, 5> kPolicyNames = {"oracle", "baseline", "netc",
                                                 "nse", "nse-fs"};

}  // namespace

const std::string& policy_kind_name(PolicyKind kind) {
  return kPolicyNames[static_cast<int>(kind)];
}

std::optional<PolicyKind> policy_kind_from_name(const std::string& name) {
  for (std::size_t k = 0; k < kPolicyNames.size(); ++k) {
    if (kPolicyNames[k] == name) return static_cast<PolicyKind>(k);
  }
  if (name == "nse_fs") return PolicyKind::kNseFs;  // common spelling
  return std::nullopt;
}

std::unique_ptr<Policy> make_policy(PolicyKind kind,
                                    const PolicyOverrides& overrides,
                                    const InterferenceInstance& instance,
                                    long T, std::uint64_t seed) {
  switch (kind) {
    case PolicyKind::kOracle:
      return std::make_unique<OraclePolicy>(instance);

    case PolicyKind::kBaseline: {
      BaselineOptions options;
      if (overrides.delta) options.delta = *overrides.delta;
      if (overrides.maximizer_budget) {
        options.maximizer_budget = *overrides.maximizer_budget;
      }
      if (overrides.restarts) options.restarts = *overrides.restarts;
      return std::make_unique<AggregateUcbPolicy>(T, instance.d(), options,
                                                  seed);
    }

    case PolicyKind::kNetc: {
      NetcOptions options;
      options.lambda = overrides.lambda;
      options.t1 = overrides.t1;
      if (overrides.delta) options.delta = *overrides.delta;
      const int s = std::max(1, row_sparsity(instance));
      return std::make_unique<NetcPolicy>(T, instance.d(), s, options, seed);
    }

    case PolicyKind::kNse: {
      NseOptions options;
      options.c_tau = overrides.c_tau;
      if (overrides.delta) options.delta = *overrides.delta;
      if (overrides.threshold_constant) {
        options.threshold_constant = *overrides.threshold_constant;
      }
      return std::make_unique<NsePolicy>(T, column_profile(instance), options,
                                         seed);
    }

    case PolicyKind::kNseFs: {
      NseFsOptions options;
      options.c_tau = overrides.c_tau;
      if (overrides.delta) options.delta = *overrides.delta;
      if (overrides.threshold_constant) {
        options.threshold_constant = *overrides.threshold_constant;
      }
      options.m0 = overrides.m0;
      return std::make_unique<NseFsPolicy>(T, instance.support(), options,
                                           seed);
    }
  }
  throw std::logic_error("unknown policy kind");
}

}  // namespace netband
