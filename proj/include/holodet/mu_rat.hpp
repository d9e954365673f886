#pragma once

#include <string>

#include "holodet/mu_poly.hpp"

namespace holodet {

/// Rational function in mu, the quotient field element num/den.
///
/// Canonical form: gcd(num, den) = 1 and den monic, so equality is
/// componentwise comparison.
class MuRat {
  public:
    MuRat() : num_(), den_(MuPoly::one()) {}
    MuRat(const Rational& c) : num_(MuPoly(c)), den_(MuPoly::one()) {}
    MuRat(const MuPoly& p) : num_(p), den_(MuPoly::one()) {}
    MuRat(MuPoly num, MuPoly den);

    static MuRat zero() { return MuRat(); }
    static MuRat one() { return MuRat(Rational(1)); }
    static MuRat mu() { return MuRat(MuPoly::mu_plus(Rational(0))); }

    const MuPoly& num() const { return num_; }
    const MuPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MuPoly::one(); }

    MuRat operator-() const;
    MuRat operator+(const MuRat& o) const;
    MuRat operator-(const MuRat& o) const;
    MuRat operator*(const MuRat& o) const;
    MuRat operator/(const MuRat& o) const;
    MuRat& operator+=(const MuRat& o) { return *this = *this + o; }
    MuRat& operator-=(const MuRat& o) { return *this = *this - o; }
    MuRat& operator*=(const MuRat& o) { return *this = *this * o; }
    MuRat& operator/=(const MuRat& o) { return *this = *this / o; }
    bool operator==(const MuRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const MuRat& o) const { return !(*this == o); }

    MuRat inverse() const;
    MuRat pow(long e) const;

    // Throws PoleAtPoint when den(mu) = 0.
    Rational eval(const Rational& mu) const;

    std::string to_string(const std::string& var = "mu") const;

  private:
    MuPoly num_, den_;
};

}  // namespace holodet
