#include "holodet/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace holodet {

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != arity_)
        throw IndexOutOfRange("exponent vector arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars());
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MuPoly MultiPoly::eval_indices(const std::vector<long>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw IndexOutOfRange("evaluation point arity mismatch");
    MuPoly result;
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (int v = 0; v < nvars(); ++v)
            f *= rational_pow(Rational(point[v]), e[v]);
        result = result + MuPoly::monomial(f, e[arity_ - 1]);
    }
    return result;
}

Rational MultiPoly::eval(const std::vector<long>& point, const Rational& mu) const {
    return eval_indices(point).eval(mu);
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (g == 0) {
            g = a;
        } else {
            // gcd of rationals: gcd of numerators over lcm of denominators.
            mpz_class num, den;
            mpz_gcd(num.get_mpz_t(), g.get_num_mpz_t(), a.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), g.get_den_mpz_t(), a.get_den_mpz_t());
            g = Rational(num, den);
            g.canonicalize();
        }
    }
    return g;
}

std::vector<int> MultiPoly::min_exponents() const {
    std::vector<int> m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

MultiPoly MultiPoly::shift_down(const std::vector<int>& exponents) const {
    MultiPoly r(nvars());
    for (const auto& [e, c] : terms_) {
        std::vector<int> shifted(arity_);
        for (int i = 0; i < arity_; ++i) {
            shifted[i] = e[i] - exponents[i];
            if (shifted[i] < 0) throw IndexOutOfRange("monomial shift below zero");
        }
        r.terms_.emplace(std::move(shifted), c);
    }
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    if (static_cast<int>(var_names.size()) != arity_)
        throw IndexOutOfRange("variable name list arity mismatch");
    std::ostringstream os;
    bool first = true;
    // Highest total degree first for readability.
    std::vector<std::pair<std::vector<int>, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int x : a.first) ta += x;
        for (int x : b.first) tb += x;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    for (const auto& [e, c] : ordered) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool any_var = false;
        for (int x : e)
            if (x > 0) any_var = true;
        if (!any_var || a != 1) os << a.get_str();
        bool printed = !any_var || a != 1;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << var_names[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace holodet
