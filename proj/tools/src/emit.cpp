#include "bascli/emit.hpp"

#include <charconv>
#include <fstream>

namespace bascli {

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string trajectory_csv(const bas::RunResult& result) {
  const std::size_t k = result.records.empty() ? result.x_bst.size() : result.records.front().x.size();
  std::string out = "t,f_x,f_bst,d,delta";
  for (std::size_t i = 0; i < k; ++i) out += ",x_" + std::to_string(i);
  out += '\n';
  for (const auto& r : result.records) {
    out += std::to_string(r.t);
    for (double v : {r.f_x, r.f_bst, r.d, r.delta}) {
      out += ',';
      out += format_double(v);
    }
    for (double v : r.x) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError(path, "cannot open for writing");
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  os.close();
  if (!os) throw IoError(path, "write failed");
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw bas::UsageError(std::string("config echo: field '") + key + "': " + e.what());
  }
}

}  // namespace

void emit_trajectory(const bas::RunResult& result, const std::filesystem::path& path) {
  write_file(path, trajectory_csv(result));
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["objective"] = c.objective;
  j["dim"] = c.dim;
  j["d0"] = c.d0;
  j["delta0"] = c.delta0;
  j["eta_d"] = c.eta_d;
  j["offset_d"] = c.offset_d;
  j["eta_delta"] = c.eta_delta;
  j["iters"] = c.iters;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  auto box = nlohmann::ordered_json::array();
  for (const auto& a : c.resolved_init_box().axes) box.push_back({a.lo, a.hi});
  j["init_box"] = std::move(box);
  j["clamp"] = c.clamp;
  j["target"] = c.target ? nlohmann::ordered_json(*c.target) : nlohmann::ordered_json(nullptr);
  j["stall"] = c.stall ? nlohmann::ordered_json(*c.stall) : nlohmann::ordered_json(nullptr);
  j["traj"] = std::string(to_string(c.traj));
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.objective = field<std::string>(j, "objective");
  c.dim = field<std::size_t>(j, "dim");
  c.d0 = field<double>(j, "d0");
  c.delta0 = field<double>(j, "delta0");
  c.eta_d = field<double>(j, "eta_d");
  c.offset_d = field<double>(j, "offset_d");
  c.eta_delta = field<double>(j, "eta_delta");
  c.iters = field<std::size_t>(j, "iters");
  c.trials = field<std::size_t>(j, "trials");
  c.seed = field<std::uint64_t>(j, "seed");
  std::vector<bas::Interval> axes;
  for (const auto& a : field<std::vector<std::vector<double>>>(j, "init_box")) {
    if (a.size() != 2) throw bas::UsageError("config echo: init_box entries must be [lo, hi]");
    axes.push_back({a[0], a[1]});
  }
  c.init_box = bas::Box(std::move(axes));
  c.clamp = field<bool>(j, "clamp");
  if (!j.at("target").is_null()) c.target = field<double>(j, "target");
  if (!j.at("stall").is_null()) c.stall = field<std::size_t>(j, "stall");
  c.traj = trajectory_mode_from_string(field<std::string>(j, "traj"));
  c.validate();
  return c;
}

nlohmann::ordered_json summary_to_json(const CampaignSummary& s) {
  nlohmann::ordered_json j;
  j["format"] = "bas-campaign-summary/1";
  j["config"] = config_to_json(s.config);
  j["aggregates"] = {
      {"best", s.aggregates.best},
      {"median", s.aggregates.median},
      {"mean", s.aggregates.mean},
      {"stddev", s.aggregates.stddev},
      {"best_trial", s.best_trial},
  };
  j["total_evals"] = s.total_evals;
  auto trials = nlohmann::ordered_json::array();
  for (const auto& t : s.trials) {
    trials.push_back({
        {"index", t.index},
        {"seed", t.seed},
        {"f_bst", t.f_bst},
        {"x_bst", t.x_bst},
        {"iterations", t.iterations},
        {"evals", t.evals},
        {"termination", bas::to_string(t.termination)},
    });
  }
  j["trials"] = std::move(trials);
  return j;
}

std::string summary_text(const CampaignSummary& summary) {
  return summary_to_json(summary).dump(2) + "\n";
}

void emit_summary(const CampaignSummary& summary, const std::filesystem::path& path) {
  write_file(path, summary_text(summary));
}

}  // namespace bascli
