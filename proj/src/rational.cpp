#include "holodet/rational.hpp"

namespace holodet {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse rational: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

long rational_floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f.get_si();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw DivisionByZero("0 raised to a negative power");
        return 1 / rational_pow(base, -exp);
    }
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    return num;
}

Rational factorial(long n) {
    if (n < 0) throw IndexOutOfRange("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace holodet
