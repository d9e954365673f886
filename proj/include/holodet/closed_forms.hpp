#pragma once

#include <string>

#include "holodet/errors.hpp"
#include "holodet/exact_core.hpp"

namespace holodet {

// Every evaluator is generic over the coefficient field K: MuRat with
// mu = MuRat::mu() gives the symbolic value, Rational gives the value at a
// specialized point. All products and sums with inverted bounds are empty
// (1 and 0 respectively); all floors are true floors.

namespace detail {

template <class K>
K kpow(const K& base, long e) {
    if (e < 0) {
        if (base == K(Rational(0))) throw PoleAtPoint("negative power of zero");
        return K(Rational(1)) / kpow(base, -e);
    }
    K acc = K(Rational(1));
    K b = base;
    for (long i = 0; i < e; ++i) acc = acc * b;
    return acc;
}

inline Rational sign_pow(long e) { return (((e % 2) + 2) % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace detail

// Closed form of det(2n)/det(2n-1) for the +delta family, n >= 1.
template <class K>
K thm34_quotient(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    K r = K(detail::sign_pow((n - 1) * (n - 2) / 2) * rational_pow(Rational(2), n));
    r = r * pochhammer_k<K>(half * (mu + K(Rational(2 * n))), (n + 1) / 2);
    r = r * pochhammer_k<K>(half * (mu + K(Rational(4 * n + 1))), n - 1);
    r = r / K(pochhammer_k(Rational(n), n));
    r = r / pochhammer_k<K>(half * (K(Rational(-4 * n + 3)) - mu), (n - 1) / 2);
    return r;
}

// Closed form of the -delta determinant b_n(1,1), n >= 0 (parity split).
template <class K>
K thm35_value(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    if (n % 2 == 0) {
        K r = K(detail::sign_pow(n / 2) * rational_pow(Rational(2), n * (n + 2) / 4));
        r = r * pochhammer_k<K>(half * mu, n / 2) * K(Rational(1) / factorial(n / 2));
        for (long i = 0; i <= (n - 2) / 2; ++i)
            r = r * K(factorial(i) * factorial(i) / (factorial(2 * i) * factorial(2 * i)));
        for (long i = 1; i <= n / 4; ++i) {
            r = r * kpow<K>(pochhammer_k<K>(half * (mu + K(Rational(6 * i - 1))), (n - 4 * i + 2) / 2), 2);
            r = r * kpow<K>(pochhammer_k<K>(half * (K(Rational(-3 * n + 6 * i)) - mu), (n - 4 * i) / 2), 2);
        }
        return r;
    }
    K r = K(detail::sign_pow((n - 1) / 2) * rational_pow(Rational(2), (n + 3) * (n + 1) / 4));
    r = r * pochhammer_k<K>(half * (mu - K(Rational(1))), (n + 1) / 2);
    for (long i = 0; i <= (n - 1) / 2; ++i)
        r = r * K(factorial(i) * factorial(i + 1) / (factorial(2 * i) * factorial(2 * i + 2)));
    for (long i = 1; i <= (n + 1) / 4; ++i) {
        r = r * kpow<K>(pochhammer_k<K>(half * (mu + K(Rational(6 * i - 1))), (n - 4 * i + 1) / 2), 2);
        r = r * kpow<K>(pochhammer_k<K>(half * (K(Rational(-3 * n + 6 * i - 3)) - mu), (n - 4 * i + 3) / 2), 2);
    }
    return r;
}

// Q1..Q4: the four single-step quotients of the b(0,1)/b(1,0) families.
template <class K>
K q_formula(int k, long n, const K& mu) {
    K half = K(Rational(1, 2));
    K two = K(Rational(2));
    switch (k) {
        case 1:
            return two * pochhammer_k<K>(half * mu + K(Rational(2 * n)), n + 1) *
                   pochhammer_k<K>(mu + K(Rational(2 * n - 1)), n + 1) /
                   (K(pochhammer_k(Rational(n + 2), n + 1)) *
                    pochhammer_k<K>(half * mu + K(Rational(n)), n + 1));
        case 2:
            return (mu + K(Rational(2 * n - 2))) *
                   pochhammer_k<K>(half * mu + K(Rational(2 * n - 1)), n - 1) *
                   pochhammer_k<K>(mu + K(Rational(2 * n + 1)), n - 1) /
                   (K(Rational(n) * pochhammer_k(Rational(n), n - 1)) *
                    pochhammer_k<K>(half * mu + K(Rational(n + 1)), n - 1));
        case 3:
            return two * pochhammer_k<K>(half * mu + K(Rational(2 * n)), n + 1) *
                   pochhammer_k<K>(mu + K(Rational(2 * n + 1)), n - 1) /
                   (K(pochhammer_k(Rational(n + 1), n)) *
                    pochhammer_k<K>(half * mu + K(Rational(n + 1)), n));
        case 4:
            return two * pochhammer_k<K>(half * mu + K(Rational(2 * n - 1)), n - 1) *
                   pochhammer_k<K>(mu + K(Rational(2 * n + 1)), n - 1) /
                   (K(pochhammer_k(Rational(n), n - 1)) *
                    pochhammer_k<K>(half * mu + K(Rational(n + 1)), n - 1));
        default:
            throw IndexOutOfRange("q_formula index must be 1..4");
    }
}

// b_n(0,1): parity-split product of Q1/Q2 (odd n carries prefactor mu-1).
template <class K>
K b01_value(long n, const K& mu) {
    if (n % 2 == 0) {
        K r = K(Rational(1));
        for (long k = 0; k < n / 2; ++k) r = r * q_formula(1, k, mu);
        for (long k = 1; k <= n / 2; ++k) r = r * q_formula(2, k, mu);
        return r;
    }
    K r = mu - K(Rational(1));
    for (long k = 1; k <= (n - 1) / 2; ++k) r = r * q_formula(1, k, mu) * q_formula(2, k, mu);
    return r;
}

// b_n(1,0): parity-split product of Q3/Q4.
template <class K>
K b10_value(long n, const K& mu) {
    K r = K(Rational(1));
    if (n % 2 == 0) {
        for (long k = 0; k < n / 2; ++k) r = r * q_formula(3, k, mu);
        for (long k = 1; k <= n / 2; ++k) r = r * q_formula(4, k, mu);
        return r;
    }
    for (long k = 1; k <= (n - 1) / 2; ++k) r = r * q_formula(3, k, mu) * q_formula(4, k, mu);
    return r;
}

// Closed form of the shifted-binomial determinant, odd n only.
template <class K>
K thm36_value(long n, const K& mu) {
    using detail::kpow;
    if (n % 2 == 0) throw EvenNotSupported("thm36_value is stated for odd n only");
    K half = K(Rational(1, 2));
    K r = K(detail::sign_pow((n - 1) / 2) * rational_pow(Rational(2), (n - 1) * (n + 5) / 4));
    r = r * (mu + K(Rational(1)));
    r = r * pochhammer_k<K>(half * (mu - K(Rational(2))), (n + 1) / 2);
    r = r * K(Rational(1) / factorial((n + 1) / 2));
    for (long i = 0; i <= (n - 1) / 2; ++i)
        r = r * K(factorial(i) * factorial(i) / (factorial(2 * i) * factorial(2 * i)));
    for (long i = 1; i <= (n + 3) / 4; ++i)
        r = r * kpow<K>(pochhammer_k<K>(half * (mu + K(Rational(6 * i - 3))), (n - 4 * i + 3) / 2), 2);
    for (long i = 1; i <= (n + 1) / 4; ++i)
        r = r * kpow<K>(pochhammer_k<K>(half * (K(Rational(-3 * n + 6 * i - 1)) - mu), (n - 4 * i + 1) / 2), 2);
    return r;
}

// ---- closed form of the +delta determinant: the C/E/F/T/S/P/G stack ----

inline Rational conj_c(long n) {
    Rational r = (detail::sign_pow(n) + 3) / 2;
    for (long i = 1; i <= n; ++i) r *= factorial(i / 2) / factorial(i);
    return r;
}

template <class K>
K conj_e(long n, const K& mu) {
    using detail::kpow;
    K r = pochhammer_k<K>(mu + K(Rational(1)), n);
    long top1 = rational_floor(Rational(3, 2) * Rational((n - 1) / 2) - 2);
    for (long i = 1; i <= top1; ++i)
        r = r * kpow<K>(mu + K(Rational(2 * i + 6)), 2 * rational_floor(rat(i + 2, 3)));
    long c = 2 * rational_floor(Rational(3, 2) * Rational(n / 2 + 1)) - 1;
    long top2 = rational_floor(Rational(3, 2) * Rational(n / 2) - 2);
    for (long i = 1; i <= top2; ++i) {
        long e = 2 * rational_floor(rat(n / 2, 2) - rat(i - 1, 3)) - 1;
        r = r * kpow<K>(mu + K(Rational(2 * i + c)), e);
    }
    return r;
}

template <class K>
K conj_fm(long n, long m, const K& mu) {
    using detail::kpow;
    K r = K(Rational(1));
    for (long i = 1; i <= rational_floor(rat(n - 1, 4)); ++i)
        r = r * kpow<K>(mu + K(Rational(2 * i + n + m)), 1 - 2 * i - m);
    for (long i = 1; i <= rational_floor(rat(n, 4) - 1); ++i)
        r = r * kpow<K>(mu + K(Rational(-2 * i + 2 * n - 2 * m + 1)), 1 - 2 * i - m);
    return r;
}

template <class K>
K conj_f(long n, const K& mu) {
    if (n % 2 == 0) return conj_e(n, mu) * conj_fm(n, 0, mu);
    K r = conj_e(n, mu) * conj_fm(n, 1, mu);
    for (long i = 1; i <= (n - 5) / 2; ++i) r = r * (mu + K(Rational(2 * i + 2 * n - 1)));
    return r;
}

// T(k) evaluated at a (possibly half-integer) rational k.
template <class K>
K conj_t(const Rational& k, const K& mu) {
    using detail::kpow;
    K one = K(Rational(1));
    K m1 = mu - one;
    K k1 = K(k);
    K r = K(Rational(55296) * rational_pow(k, 6));
    r = r + K(Rational(41472) * rational_pow(k, 5)) * m1;
    r = r + K(Rational(384) * rational_pow(k, 4)) *
                (K(Rational(30)) * mu * mu - K(Rational(66)) * mu + K(Rational(53)));
    r = r + K(Rational(96) * rational_pow(k, 3)) * m1 *
                (K(Rational(15)) * mu * mu - K(Rational(42)) * mu + K(Rational(61)));
    r = r + K(Rational(4) * rational_pow(k, 2)) *
                (K(Rational(19)) * kpow<K>(mu, 4) - K(Rational(122)) * kpow<K>(mu, 3) +
                 K(Rational(419)) * mu * mu - K(Rational(544)) * mu + K(Rational(72)));
    r = r + k1 * m1 *
                (kpow<K>(mu, 4) - K(Rational(14)) * kpow<K>(mu, 3) + K(Rational(101)) * mu * mu -
                 K(Rational(160)) * mu - K(Rational(84)));
    r = r + K(Rational(2)) * (mu - K(Rational(3))) * (mu - K(Rational(2))) * m1 * (mu + one);
    return r;
}

template <class K>
K conj_s1(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    K s = K(Rational(0));
    for (long k = 1; k <= n - 1; ++k) {
        K num = K(rational_pow(Rational(2), 6 * k)) * (mu + K(Rational(8 * k - 1)));
        num = num * K(rational_pow(pochhammer_k(Rational(1, 2), 2 * k - 1), 2));
        num = num * pochhammer_k<K>(half * (mu + K(Rational(5))), 2 * k - 3);
        num = num * pochhammer_k<K>(half * (mu + K(Rational(4 * k + 2))), k - 2);
        num = num * pochhammer_k<K>(half * (mu + K(Rational(4 * k + 2))), 2 * n - 2 * k - 2);
        num = num * conj_t(Rational(k), mu);
        K den = K(factorial(2 * k)) * pochhammer_k<K>(half * (mu + K(Rational(6 * k - 3))), 3 * k + 4);
        s = s + num / den;
    }
    return s;
}

template <class K>
K conj_s2(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    K s = K(Rational(0));
    for (long k = 1; k <= n - 1; ++k) {
        K num = K(rational_pow(Rational(2), 6 * k)) * (mu + K(Rational(8 * k + 3)));
        num = num * K(rational_pow(pochhammer_k(Rational(1, 2), 2 * k), 2));
        num = num * pochhammer_k<K>(half * (mu + K(Rational(5))), 2 * k - 2);
        num = num * pochhammer_k<K>(half * (mu + K(Rational(4 * k + 4))), k - 2);
        num = num * pochhammer_k<K>(half * (mu + K(Rational(4 * k + 4))), 2 * n - 2 * k - 2);
        num = num * conj_t(Rational(k) + Rational(1, 2), mu);
        K den = K(factorial(2 * k + 1)) * pochhammer_k<K>(half * (mu + K(Rational(6 * k + 1))), 3 * k + 5);
        s = s + num / den;
    }
    return s;
}

template <class K>
K conj_p1(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    K pre = K(rational_pow(Rational(2), 3 * n - 1)) *
            pochhammer_k<K>(half * (mu + K(Rational(6 * n - 3))), 3 * n - 2) /
            pochhammer_k<K>(half * (mu + K(Rational(5))), 2 * n - 3);
    K inner = pochhammer_k<K>(half * (mu + K(Rational(2))), 2 * n - 2) /
                  kpow<K>(mu + K(Rational(3)), 2) +
              mu * (mu - K(Rational(1))) * conj_s1(n, mu) * K(Rational(1, 8192));
    return pre * inner;
}

template <class K>
K conj_p2(long n, const K& mu) {
    using detail::kpow;
    K half = K(Rational(1, 2));
    K pre = K(rational_pow(Rational(2), 3 * n - 1)) *
            pochhammer_k<K>(half * (mu + K(Rational(6 * n + 1))), 3 * n - 1) /
            pochhammer_k<K>(half * (mu + K(Rational(5))), 2 * n - 2);
    K inner = (mu + K(Rational(14))) * pochhammer_k<K>(half * (mu + K(Rational(4))), 2 * n - 2) /
                  ((mu + K(Rational(7))) * (mu + K(Rational(9)))) +
              mu * (mu - K(Rational(1))) * conj_s2(n, mu) * K(Rational(1, 512));
    return pre * inner;
}

template <class K>
K conj_g(long n, const K& mu) {
    return (n % 2 == 1) ? conj_p1((n + 1) / 2, mu) : conj_p2(n / 2, mu);
}

// The assembled +delta determinant value C(n) F(n) G(floor((n+1)/2)).
template <class K>
K conj34_value(long n, const K& mu) {
    return K(conj_c(n)) * conj_f(n, mu) * conj_g((n + 1) / 2, mu);
}

// ---- q-constancy of the shifted family ----
// q_n(mu) = b_{2n}(1,1,mu) / b_{2n-1}(2,2,mu) is the constant -4/(mu+3).
template <class K>
K thm36_q_constant(const K& mu) {
    return K(Rational(-4)) / (mu + K(Rational(3)));
}

// ---- CLI-facing dispatch ----

enum class ClosedFormId { THM34_QUOTIENT, THM35, B01, B10, THM36, CONJ34, Q1, Q2, Q3, Q4, Q_CONST };

ClosedFormId closed_form_by_name(const std::string& name);
MuRat evaluate_closed_form(ClosedFormId id, long n);
Rational evaluate_closed_form_at(ClosedFormId id, long n, const Rational& mu);

}  // namespace holodet
