#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "emm/report.hpp"
#include "emm/tpoly.hpp"

namespace emm {

// Insertions are encoded by their half-degrees: the list {a_1,...,a_n} stands
// for <p_{2a_1} ... p_{2a_n}>_g. Keys are canonicalized by ascending sort.
struct CorrelatorKey {
  int g = 0;
  std::vector<int> a;
  friend bool operator<(const CorrelatorKey& x, const CorrelatorKey& y) {
    return std::tie(x.g, x.a) < std::tie(y.g, y.a);
  }
};

// Memoized evaluation of the constraint recursion. Thread-safe: concurrent
// readers share the table; a racing recompute of the same key is benign.
class CorrelatorTable {
 public:
  // <prod_j p_{2a_j}>_g as a polynomial in t. Requires g >= 0, a nonempty,
  // all a_j >= 1; throws std::invalid_argument otherwise.
  TPoly correlator(int g, std::vector<int> a);

  // Same value computed by applying the constraint at insertion `pivot`
  // (index into the sorted list) instead of the default choice; exercises
  // the overdetermination of the system. Requires n >= 1.
  TPoly correlator_pivot(int g, std::vector<int> a, size_t pivot);

  size_t size() const;

 private:
  TPoly compute(int g, const std::vector<int>& a);
  TPoly expand_at_pivot(int g, const std::vector<int>& a, size_t pivot);

  mutable std::shared_mutex mutex_;
  std::map<CorrelatorKey, TPoly> memo_;
};

CorrelatorTable& global_correlator_table();

// Convenience front-end over the process-global table.
TPoly correlator(int g, std::vector<int> a);

// Closed-form values where one is known: (g, n) in
// {(0,1), (0,2), (0,3), (0,4), (1,1)}; std::nullopt otherwise.
std::optional<TPoly> closed_form(int g, const std::vector<int>& a);

// Rows (a, value) for all insertion lists with sum(a) <= bound, ordered by
// (n, a) with a ascending lexicographically.
std::vector<std::pair<std::vector<int>, TPoly>> correlator_rows(int g, int bound);

// Named integer sequences read off the correlators: "catalan", "a001791",
// "a007946". Throws std::invalid_argument for unknown names.
std::vector<Rational> sequence_terms(const std::string& name, int count);

// Suite "closed-forms": recursion vs closed forms over the full ranges
// (1pt/2pt genus 0 through degree 12, 1pt genus 1 through 10, 3pt/4pt genus 0
// through total degree 10), plus the sequence identifications.
Report verify_closed_forms();

}  // namespace emm
