#ifndef BASCLI_EMIT_HPP_
#define BASCLI_EMIT_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bas/search.hpp"
#include "bascli/campaign.hpp"
#include "bascli/experiment_config.hpp"

namespace bascli {

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what), path_(path) {}
  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

/// CSV with header `t,f_x,f_bst,d,delta,x_0,...,x_{k-1}` and one row per iteration.
[[nodiscard]] std::string trajectory_csv(const bas::RunResult& result);
void emit_trajectory(const bas::RunResult& result, const std::filesystem::path& path);

/// Config echo written into the summary. Output paths and thread count are
/// left out because they do not influence results.
[[nodiscard]] nlohmann::ordered_json config_to_json(const ExperimentConfig& config);
/// Inverse of config_to_json; throws bas::UsageError on missing or mistyped keys.
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::ordered_json summary_to_json(const CampaignSummary& summary);
[[nodiscard]] std::string summary_text(const CampaignSummary& summary);
void emit_summary(const CampaignSummary& summary, const std::filesystem::path& path);

}  // namespace bascli

#endif  // BASCLI_EMIT_HPP_
