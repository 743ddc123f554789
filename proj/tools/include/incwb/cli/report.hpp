#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "incwb/common.hpp"
#include "incwb/relsys.hpp"

namespace incwb::cli {

using nlohmann::json;

/// Stable process exit codes.
enum Exit : int { kOk = 0, kFails = 1, kBadInput = 2, kUndecided = 3 };

enum class Verdict { pass, fail, undecided, info };
std::string_view to_string(Verdict v);
Verdict verdict_of(Truth t);

/// Search limits chosen by --cap.
struct Cap {
  std::string label = "small";
  relsys::SearchCaps search{};
  /// Instances per property in `suite`.
  std::size_t instances = 40;
};
/// small | medium | custom:<n>; custom sets the element cap to n.
Cap parse_cap(std::string_view text);
/// INCWB_CAP if set, else small.
Cap default_cap();

struct RunConfig {
  std::uint64_t seed = 0;
  Cap cap{};
  std::uint64_t budget = 5'000'000;
};

/// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string digest(const json& j);

/// Append-only stage log. Timings are kept apart so that the rest of the
/// document is reproducible from inputs and seed.
class Report {
 public:
  Report(std::string command, const RunConfig& cfg);

  void add_stage(const std::string& name, const json& inputs, const json& outputs, Verdict verdict,
                 std::string headline, json evidence, double millis);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  /// kFails if any stage failed, else kUndecided if any was undecided, else kOk.
  int exit_code() const;
  json to_json() const;
  std::string summary() const;
  const std::vector<json>& stages() const { return stages_; }

 private:
  json header_;
  std::vector<json> stages_;
  std::vector<std::string> headlines_;
  std::vector<std::string> notes_;
  json timings_ = json::array();
};

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace incwb::cli
