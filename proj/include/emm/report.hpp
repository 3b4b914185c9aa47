#pragma once

#include <string>
#include <vector>

namespace emm {

struct CheckResult {
  std::string name;
  bool pass = false;
  long long millis = 0;
  std::string detail;  // expected/actual rendering on failure, notes on pass
};

// Outcome of one verification suite; renders as plain text or JSON.
struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  size_t fail_count() const;

  // One line per check: "[PASS|FAIL] name (N ms)" plus an indented detail
  // line when present, then a summary line.
  std::string text() const;

  // {"suite": ..., "all_pass": ..., "checks": [{name, pass, millis, detail}]}
  std::string to_json(int indent = 2) const;
};

// Runs `fn` and appends a CheckResult with its wall time; `fn` returns
// (pass, detail). Exceptions are caught and recorded as failures.
class CheckRunner {
 public:
  explicit CheckRunner(Report& report) : report_(report) {}

  template <class Fn>
  void run(const std::string& name, Fn&& fn);

  void add(const std::string& name, bool pass, long long millis,
           const std::string& detail);

 private:
  Report& report_;
};

class Stopwatch {
 public:
  Stopwatch();
  long long millis() const;

 private:
  long long start_ns_;
};

template <class Fn>
void CheckRunner::run(const std::string& name, Fn&& fn) {
  Stopwatch watch;
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = fn();
    pass = p;
    detail = std::move(d);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  add(name, pass, watch.millis(), detail);
}

}  // namespace emm
