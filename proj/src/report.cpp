#include "emm/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace emm {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

size_t Report::fail_count() const {
  size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.millis
       << " ms)\n";
    if (!c.detail.empty()) os << "       " << c.detail << "\n";
  }
  if (all_pass())
    os << "all " << checks.size() << " checks passed\n";
  else
    os << fail_count() << " of " << checks.size() << " checks FAILED\n";
  return os.str();
}

std::string Report::to_json(int indent) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"millis", c.millis},
                           {"detail", c.detail}});
  }
  return j.dump(indent);
}

void CheckRunner::add(const std::string& name, bool pass, long long millis,
                      const std::string& detail) {
  report_.checks.push_back(CheckResult{name, pass, millis, detail});
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

long long Stopwatch::millis() const {
  long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count();
  return (now - start_ns_) / 1000000;
}

}  // namespace emm
