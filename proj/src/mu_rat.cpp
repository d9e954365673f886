#include "holodet/mu_rat.hpp"

namespace holodet {

MuRat::MuRat(MuPoly num, MuPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MuPoly::one();
        return;
    }
    MuPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

MuRat MuRat::operator-() const {
    MuRat r(*this);
    r.num_ = -r.num_;
    return r;
}

MuRat MuRat::operator+(const MuRat& o) const {
    return MuRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MuRat MuRat::operator-(const MuRat& o) const {
    return MuRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

MuRat MuRat::operator*(const MuRat& o) const {
    return MuRat(num_ * o.num_, den_ * o.den_);
}

MuRat MuRat::operator/(const MuRat& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return MuRat(num_ * o.den_, den_ * o.num_);
}

MuRat MuRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return MuRat(den_, num_);
}

MuRat MuRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    MuRat r = MuRat::one();
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational MuRat::eval(const Rational& mu) const {
    Rational d = den_.eval(mu);
    if (d == 0) throw PoleAtPoint("pole at mu = " + rational_to_string(mu));
    return num_.eval(mu) / d;
}

std::string MuRat::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace holodet
