#include "holodet/mu_poly.hpp"

#include <sstream>

namespace holodet {

MuPoly::MuPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

MuPoly::MuPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
}

void MuPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

MuPoly MuPoly::mu_plus(const Rational& shift) {
    MuPoly p;
    p.coeffs_ = {shift, Rational(1)};
    return p;
}

MuPoly MuPoly::monomial(const Rational& c, int degree) {
    MuPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Rational MuPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& MuPoly::leading_coeff() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

MuPoly MuPoly::operator-() const {
    MuPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

MuPoly MuPoly::operator+(const MuPoly& o) const {
    MuPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.canonicalize();
    return r;
}

MuPoly MuPoly::operator-(const MuPoly& o) const {
    MuPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.canonicalize();
    return r;
}

MuPoly MuPoly::operator*(const MuPoly& o) const {
    if (is_zero() || o.is_zero()) return MuPoly();
    MuPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.canonicalize();
    return r;
}

MuPoly MuPoly::operator*(const Rational& c) const {
    if (c == 0) return MuPoly();
    MuPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<MuPoly, MuPoly> MuPoly::divmod(const MuPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    MuPoly rem(*this);
    MuPoly quo;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quo.coeffs_.assign(rem.degree() - dd + 1, Rational(0));
    const Rational& lead = divisor.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational f = rem.leading_coeff() / lead;
        quo.coeffs_[shift] = f;
        for (int i = 0; i <= dd; ++i) rem.coeffs_[shift + i] -= f * divisor.coeffs_[i];
        rem.canonicalize();
    }
    quo.canonicalize();
    return {quo, rem};
}

MuPoly MuPoly::exact_div(const MuPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw InexactDivision();
    return q;
}

MuPoly MuPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coeff());
}

MuPoly MuPoly::pow(long e) const {
    if (e < 0) throw IndexOutOfRange("MuPoly::pow with negative exponent");
    MuPoly r = MuPoly::one();
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational MuPoly::eval(const Rational& mu) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * mu + *it;
    return v;
}

std::string MuPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (d == 0 || a != 1) {
            os << a.get_str();
            if (d > 0) os << "*";
        }
        if (d > 0) {
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

MuPoly poly_gcd(MuPoly a, MuPoly b) {
    // Euclid over Q with monic rescaling at each step to tame coefficients.
    while (!b.is_zero()) {
        MuPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

MuPoly poly_lcm(const MuPoly& a, const MuPoly& b) {
    if (a.is_zero() || b.is_zero()) return MuPoly();
    MuPoly g = poly_gcd(a, b);
    return (a * b).exact_div(g).monic();
}

}  // namespace holodet
