#include "emm/correlators.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace emm {

namespace {

void validate(int g, const std::vector<int>& a) {
  if (g < 0) throw std::invalid_argument("correlator: genus must be >= 0");
  if (a.empty()) throw std::invalid_argument("correlator: no insertions");
  for (int x : a)
    if (x < 1) throw std::invalid_argument("correlator: insertions must be >= 1");
}

std::vector<int> without_index(const std::vector<int>& a, size_t j) {
  std::vector<int> r;
  r.reserve(a.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (i != j) r.push_back(a[i]);
  return r;
}

}  // namespace

TPoly CorrelatorTable::correlator(int g, std::vector<int> a) {
  validate(g, a);
  std::sort(a.begin(), a.end());
  CorrelatorKey key{g, a};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  TPoly value = compute(g, a);
  if (g <= 1 && !value.is_zero() && value.min_degree() < 0)
    throw std::logic_error("correlator: negative t-power at genus <= 1");
  std::unique_lock lock(mutex_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

TPoly CorrelatorTable::compute(int g, const std::vector<int>& a) {
  if (a.size() == 1 && a[0] == 1) {
    if (g == 0) return TPoly::t_power(2, Rational(1, 2));
    if (g == 1) return TPoly(Rational(-1, 8));
    return TPoly();
  }
  // Apply the constraint at a p_2 insertion when present (a is sorted), else
  // at the largest insertion.
  size_t pivot = a[0] == 1 ? 0 : a.size() - 1;
  return expand_at_pivot(g, a, pivot);
}

TPoly CorrelatorTable::expand_at_pivot(int g, const std::vector<int>& a,
                                       size_t pivot) {
  const std::vector<int> X = without_index(a, pivot);
  if (a[pivot] == 1) {
    // Dilaton-type constraint: <p_2 X>_g = 2 (sum_j a_j) <X>_g.
    long weight = std::accumulate(X.begin(), X.end(), 0L);
    return correlator(g, X) * Rational(2 * weight);
  }
  const int m = a[pivot] - 1;  // pivot insertion is p_{2m+2}, m >= 1
  TPoly total;
  for (size_t j = 0; j < X.size(); ++j) {
    std::vector<int> shifted = X;
    shifted[j] += m;
    total += correlator(g, std::move(shifted)) * Rational(X[j]);
  }
  {
    std::vector<int> lowered = X;
    lowered.push_back(m);
    total += TPoly::t_power(1) * correlator(g, std::move(lowered));
  }
  for (int k = 1; k < m; ++k) {
    if (g >= 1) {
      std::vector<int> merged = X;
      merged.push_back(k);
      merged.push_back(m - k);
      total += correlator(g - 1, std::move(merged));
    }
    // Ordered genus/index splittings over the positions of X.
    const size_t nX = X.size();
    for (int g1 = 0; g1 <= g; ++g1) {
      for (size_t mask = 0; mask < (size_t{1} << nX); ++mask) {
        std::vector<int> A{k}, B{m - k};
        for (size_t i = 0; i < nX; ++i)
          (mask >> i & 1 ? A : B).push_back(X[i]);
        total += correlator(g1, std::move(A)) * correlator(g - g1, std::move(B));
      }
    }
  }
  return total * Rational(2);
}

TPoly CorrelatorTable::correlator_pivot(int g, std::vector<int> a, size_t pivot) {
  validate(g, a);
  std::sort(a.begin(), a.end());
  if (pivot >= a.size())
    throw std::invalid_argument("correlator_pivot: pivot out of range");
  if (a.size() == 1 && a[0] == 1) return compute(g, a);
  return expand_at_pivot(g, a, pivot);
}

size_t CorrelatorTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

CorrelatorTable& global_correlator_table() {
  static CorrelatorTable table;
  return table;
}

TPoly correlator(int g, std::vector<int> a) {
  return global_correlator_table().correlator(g, std::move(a));
}

std::optional<TPoly> closed_form(int g, const std::vector<int>& a) {
  const size_t n = a.size();
  auto dfact_ratio = [](int nj) {  // (2 nj - 1)!! / (nj - 1)!
    return ratio(double_factorial(2 * nj - 1), factorial(nj - 1));
  };
  if (g == 0 && n == 1) {
    int k = a[0];
    Rational c = ratio(factorial(2 * k), factorial(k) * factorial(k + 1)) / 2;
    return TPoly::t_power(k + 1, c);
  }
  if (g == 0 && n == 2) {
    int m = a[0], k = a[1];
    Rational cm = ratio(factorial(2 * m), factorial(m - 1) * factorial(m));
    Rational ck = ratio(factorial(2 * k), factorial(k - 1) * factorial(k));
    return TPoly::t_power(m + k, cm * ck / Rational(2 * (m + k)));
  }
  if (g == 0 && n == 3) {
    int S = std::accumulate(a.begin(), a.end(), 0);
    Rational c = rational_pow(Rational(2), S - 1);
    for (int nj : a) c *= dfact_ratio(nj);
    return TPoly::t_power(S - 1, c);
  }
  if (g == 0 && n == 4) {
    int S = std::accumulate(a.begin(), a.end(), 0);
    Rational c = rational_pow(Rational(2), S - 1) * Rational(S - 1);
    for (int nj : a) c *= dfact_ratio(nj);
    return TPoly::t_power(S - 2, c);
  }
  if (g == 1 && n == 1) {
    int k = a[0];
    Rational c = ratio(2 * k - 5, 24) *
                 ratio(double_factorial(2 * k - 1), factorial(k - 1)) *
                 rational_pow(Rational(2), k - 1);
    return TPoly::t_power(k - 1, c);
  }
  return std::nullopt;
}

namespace {

void list_rows(int bound, std::vector<int>& prefix, int minval,
               std::vector<std::vector<int>>& out, size_t n) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  int used = std::accumulate(prefix.begin(), prefix.end(), 0);
  int remaining_slots = static_cast<int>(n - prefix.size());
  for (int v = minval; used + v * remaining_slots <= bound; ++v) {
    prefix.push_back(v);
    list_rows(bound, prefix, v, out, n);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::vector<int>, TPoly>> correlator_rows(int g, int bound) {
  if (bound < 1) throw std::invalid_argument("correlator_rows: bound must be >= 1");
  std::vector<std::pair<std::vector<int>, TPoly>> rows;
  for (size_t n = 1; static_cast<int>(n) <= bound; ++n) {
    std::vector<std::vector<int>> lists;
    std::vector<int> prefix;
    list_rows(bound, prefix, 1, lists, n);
    std::sort(lists.begin(), lists.end());
    for (auto& a : lists) rows.emplace_back(a, correlator(g, a));
  }
  return rows;
}

std::vector<Rational> sequence_terms(const std::string& name, int count) {
  if (count < 0) throw std::invalid_argument("sequence_terms: negative count");
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(count));
  if (name == "catalan") {
    for (int n = 1; n <= count; ++n)
      out.push_back(correlator(0, {n}).coeff(n + 1) * 2);
  } else if (name == "a001791") {
    for (int n = 1; n <= count; ++n)
      out.push_back(correlator(0, {1, n}).coeff(n + 1));
  } else if (name == "a007946") {
    for (int n = 1; n <= count; ++n)
      out.push_back(correlator(0, {2, n}).coeff(n + 2) / 2);
  } else {
    throw std::invalid_argument("sequence_terms: unknown sequence " + name);
  }
  return out;
}

namespace {

std::string mismatch_detail(const std::vector<int>& a, const TPoly& got,
                            const TPoly& want) {
  std::ostringstream os;
  os << "a={";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "} got " << got.str() << " want " << want.str();
  return os.str();
}

}  // namespace

Report verify_closed_forms() {
  Report report{"closed-forms", {}};
  CheckRunner runner(report);

  runner.run("1pt-genus0-through-12", [] {
    for (int n = 1; n <= 12; ++n) {
      TPoly got = correlator(0, {n});
      TPoly want = *closed_form(0, {n});
      if (got != want) return std::pair(false, mismatch_detail({n}, got, want));
    }
    return std::pair(true, std::string("12 values"));
  });

  runner.run("2pt-genus0-through-12", [] {
    int checked = 0;
    for (int m = 1; m <= 11; ++m)
      for (int n = m; m + n <= 12; ++n) {
        TPoly got = correlator(0, {m, n});
        TPoly want = *closed_form(0, {m, n});
        if (got != want)
          return std::pair(false, mismatch_detail({m, n}, got, want));
        ++checked;
      }
    return std::pair(true, std::to_string(checked) + " values");
  });

  runner.run("1pt-genus1-through-10", [] {
    for (int n = 1; n <= 10; ++n) {
      TPoly got = correlator(1, {n});
      TPoly want = *closed_form(1, {n});
      if (got != want) return std::pair(false, mismatch_detail({n}, got, want));
    }
    return std::pair(true, std::string("10 values"));
  });

  runner.run("3pt-genus0-total-10", [] {
    int checked = 0;
    for (int i = 1; i <= 8; ++i)
      for (int j = i; i + j <= 9; ++j)
        for (int k = j; i + j + k <= 10; ++k) {
          TPoly got = correlator(0, {i, j, k});
          TPoly want = *closed_form(0, {i, j, k});
          if (got != want)
            return std::pair(false, mismatch_detail({i, j, k}, got, want));
          ++checked;
        }
    return std::pair(true, std::to_string(checked) + " values");
  });

  runner.run("4pt-genus0-total-10", [] {
    int checked = 0;
    for (int i = 1; i <= 7; ++i)
      for (int j = i; i + j <= 8; ++j)
        for (int k = j; i + j + k <= 9; ++k)
          for (int l = k; i + j + k + l <= 10; ++l) {
            TPoly got = correlator(0, {i, j, k, l});
            TPoly want = *closed_form(0, {i, j, k, l});
            if (got != want)
              return std::pair(false, mismatch_detail({i, j, k, l}, got, want));
            ++checked;
          }
    return std::pair(true, std::to_string(checked) + " values");
  });

  auto sequence_check = [&](const std::string& name,
                            std::vector<long> expected) {
    runner.run("sequence-" + name, [name, expected = std::move(expected)] {
      auto got = sequence_terms(name, static_cast<int>(expected.size()));
      for (size_t i = 0; i < expected.size(); ++i)
        if (got[i] != expected[i])
          return std::pair(false, "term " + std::to_string(i + 1) + " is " +
                                      to_string(got[i]));
      return std::pair(true, std::to_string(expected.size()) + " terms");
    });
  };
  sequence_check("catalan", {1, 2, 5, 14, 42, 132, 429});
  sequence_check("a001791", {1, 4, 15, 56, 210, 792});
  sequence_check("a007946", {2, 9, 36, 140, 540, 2079});

  return report;
}

}  // namespace emm
