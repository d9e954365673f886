#pragma once

#include <map>
#include <string>
#include <vector>

#include "holodet/mu_rat.hpp"

namespace holodet {

/// Polynomial in the index variables of a recurrence plus mu.
///
/// Exponent vectors have fixed arity nvars()+1; the last slot is the
/// exponent of mu. Sparse map representation with nonzero coefficients only.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : arity_(nvars + 1) {}

    int nvars() const { return arity_ - 1; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    // Evaluate the index variables at an integer point, keeping mu symbolic.
    MuPoly eval_indices(const std::vector<long>& point) const;
    // Fully specialize, including mu.
    Rational eval(const std::vector<long>& point, const Rational& mu) const;

    // gcd of all coefficient magnitudes (content) and the componentwise
    // minimum exponent vector (common monomial); both used for normalization.
    Rational content() const;
    std::vector<int> min_exponents() const;
    MultiPoly shift_down(const std::vector<int>& exponents) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

  private:
    int arity_ = 1;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace holodet
