#include "incwb/cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace incwb::cli {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::undecided:
      return "undecided";
    case Verdict::info:
      return "info";
  }
  return "info";
}

Verdict verdict_of(Truth t) {
  return t == Truth::yes ? Verdict::pass : t == Truth::no ? Verdict::fail : Verdict::undecided;
}

Cap parse_cap(std::string_view text) {
  Cap cap;
  if (text == "small") return cap;
  if (text == "medium") {
    cap.label = "medium";
    cap.search = relsys::SearchCaps{10, 5, 8, std::uint64_t{1} << 18};
    cap.instances = 200;
    return cap;
  }
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string digits(text.substr(prefix.size()));
    char* end = nullptr;
    const unsigned long n = digits.empty() ? 0 : std::strtoul(digits.c_str(), &end, 10);
    if (digits.empty() || *end != '\0' || n == 0 || n > 64) throw InputError("custom cap needs 1 <= n <= 64");
    cap.label = std::string(text);
    cap.search = relsys::SearchCaps{n, 5, std::min<std::size_t>(n, 8), std::uint64_t{1} << 18};
    cap.instances = 200;
    return cap;
  }
  throw InputError("unknown cap '" + std::string(text) + "' (small, medium or custom:<n>)");
}

Cap default_cap() {
  const char* env = std::getenv("INCWB_CAP");
  return env && *env ? parse_cap(env) : Cap{};
}

std::string digest(const json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report::Report(std::string command, const RunConfig& cfg)
    : header_{{"tool", "incwb"},
              {"version", "0.1.0"},
              {"command", std::move(command)},
              {"seed", cfg.seed},
              {"cap", cfg.cap.label},
              {"budget", cfg.budget}} {}

void Report::add_stage(const std::string& name, const json& inputs, const json& outputs, Verdict verdict,
                       std::string headline, json evidence, double millis) {
  stages_.push_back({{"name", name},
                     {"inputs_digest", digest(inputs)},
                     {"outputs_digest", digest(outputs)},
                     {"verdict", to_string(verdict)},
                     {"evidence", std::move(evidence)}});
  headlines_.push_back("[" + std::string(to_string(verdict)) + "] " + name + ": " + std::move(headline));
  timings_.push_back({{"stage", name}, {"ms", millis}});
}

int Report::exit_code() const {
  bool undecided = false;
  for (const auto& s : stages_) {
    if (s["verdict"] == "fail") return kFails;
    if (s["verdict"] == "undecided") undecided = true;
  }
  return undecided ? kUndecided : kOk;
}

json Report::to_json() const {
  return {{"header", header_}, {"stages", stages_}, {"notes", notes_}, {"exit_code", exit_code()},
          {"timings", timings_}};
}

std::string Report::summary() const {
  std::ostringstream os;
  os << header_["command"].get<std::string>() << " (seed " << header_["seed"] << ", cap "
     << header_["cap"].get<std::string>() << ")\n";
  for (const auto& h : headlines_) os << "  " << h << '\n';
  for (const auto& n : notes_) os << "  note: " << n << '\n';
  os << "exit " << exit_code() << '\n';
  return os.str();
}

}  // namespace incwb::cli
