#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "emm/scalar.hpp"

namespace emm {

// Laurent polynomial in variables y0..y{n-1} with Scalar coefficients.
// Terms are keyed by exponent vectors; std::map orders them
// lexicographically, which is also the canonical printing order.
class LaurentMulti {
 public:
  using ExpVec = std::vector<int>;
  using TermMap = std::map<ExpVec, Scalar>;

  explicit LaurentMulti(int nvars = 0) : nvars_(nvars) {}
  static LaurentMulti constant(int nvars, const Scalar& c);
  static LaurentMulti variable(int nvars, int i, int exponent = 1);
  static LaurentMulti monomial(int nvars, const ExpVec& exps, const Scalar& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const ExpVec& exps) const;

  void add_term(const ExpVec& exps, const Scalar& c);

  LaurentMulti operator-() const;
  LaurentMulti& operator+=(const LaurentMulti& o);
  LaurentMulti& operator-=(const LaurentMulti& o);
  LaurentMulti& operator*=(const LaurentMulti& o);
  LaurentMulti& operator*=(const Scalar& c);
  LaurentMulti& operator/=(const Scalar& c);

  friend LaurentMulti operator+(LaurentMulti a, const LaurentMulti& b) { return a += b; }
  friend LaurentMulti operator-(LaurentMulti a, const LaurentMulti& b) { return a -= b; }
  friend LaurentMulti operator*(LaurentMulti a, const LaurentMulti& b) { return a *= b; }
  friend LaurentMulti operator*(LaurentMulti a, const Scalar& c) { return a *= c; }
  friend LaurentMulti operator*(const Scalar& c, LaurentMulti a) { return a *= c; }
  friend bool operator==(const LaurentMulti& a, const LaurentMulti& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentMulti& a, const LaurentMulti& b) {
    return !(a == b);
  }

  LaurentMulti pow(int e) const;  // e >= 0, or e < 0 for single-term values

  // Formal partial derivative with respect to y_var.
  LaurentMulti derivative(int var) const;

  // Substitute y_var := sign * y_target (sign is +1 or -1); var == target
  // performs the pure sign flip.
  LaurentMulti substitute(int var, int target, int sign) const;

  // Multiply by y_var^delta.
  LaurentMulti shifted(int var, int delta) const;

  // Re-index variables: slot_map[i] is the new slot of old variable i, or -1
  // when variable i must not occur.
  LaurentMulti with_nvars(int new_nvars, const std::vector<int>& slot_map) const;

  // Sub-sum of terms whose y_var exponent equals k, with that slot zeroed.
  LaurentMulti coefficient_of(int var, int k) const;

  // Drops terms with y_var exponent above maxexp (series truncation).
  LaurentMulti truncate_above(int var, int maxexp) const;

  bool depends_on(int var) const;
  int min_exponent(int var) const;  // throws std::logic_error on zero
  int max_exponent(int var) const;  // throws std::logic_error on zero

  // Canonical text form; see README for the grammar. Variables print as
  // y0, y1, ...; scalars print via the Laurent-in-s renderer.
  std::string str() const;

 private:
  void check_same_shape(const LaurentMulti& o) const;
  int nvars_;
  TermMap terms_;
};

// Exact division failed; carries the nonzero remainder at the failure point.
class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(const std::string& what, LaurentMulti remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const LaurentMulti& remainder() const { return remainder_; }

 private:
  LaurentMulti remainder_;
};

// Quotient a / b when it exists as a Laurent polynomial; otherwise throws
// ExactDivisionError. Division is by lexicographic leading-term elimination,
// bounded by the per-variable support box of any possible quotient.
LaurentMulti exact_quotient(const LaurentMulti& a, const LaurentMulti& b);

}  // namespace emm
