#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holodet/rational.hpp"

namespace holodet {

/// Dense univariate polynomial in the indeterminate mu over Rational.
///
/// Canonical form: coefficients stored in ascending order of degree with a
/// nonzero trailing (leading) coefficient; the zero polynomial is the empty
/// coefficient list.
class MuPoly {
  public:
    MuPoly() = default;
    explicit MuPoly(const Rational& c);
    explicit MuPoly(std::vector<Rational> coeffs);

    static MuPoly zero() { return MuPoly(); }
    static MuPoly one() { return MuPoly(Rational(1)); }
    // mu + shift
    static MuPoly mu_plus(const Rational& shift);
    static MuPoly monomial(const Rational& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    const Rational& leading_coeff() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    MuPoly operator-() const;
    MuPoly operator+(const MuPoly& o) const;
    MuPoly operator-(const MuPoly& o) const;
    MuPoly operator*(const MuPoly& o) const;
    MuPoly operator*(const Rational& c) const;
    bool operator==(const MuPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const MuPoly& o) const { return !(*this == o); }

    // Quotient and remainder over the field Q.
    std::pair<MuPoly, MuPoly> divmod(const MuPoly& divisor) const;
    // Throws InexactDivision when the remainder is nonzero.
    MuPoly exact_div(const MuPoly& divisor) const;
    MuPoly monic() const;
    MuPoly pow(long e) const;

    Rational eval(const Rational& mu) const;

    std::string to_string(const std::string& var = "mu") const;

  private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

inline MuPoly operator*(const Rational& c, const MuPoly& p) { return p * c; }

// Monic gcd over Q[mu]; gcd(0, 0) = 0.
MuPoly poly_gcd(MuPoly a, MuPoly b);
MuPoly poly_lcm(const MuPoly& a, const MuPoly& b);

}  // namespace holodet
