#pragma once

#include "holodet/mu_rat.hpp"

namespace holodet {

// C(mu + shift, j) = (mu+shift)(mu+shift-1)...(mu+shift-j+1) / j!, a
// polynomial of degree exactly j. Negative bottom index yields the zero
// polynomial (standard combinatorial convention).
MuPoly binom_poly(const Rational& shift, long j);

// Rising factorial (x)_m, extended to negative subscripts by
// (x)_{-k} = 1 / ((x-1)(x-2)...(x-k)), so that the composition law
// (x)_{a+b} = (x)_a (x+a)_b holds for all integers a, b.
MuRat pochhammer(const MuPoly& base, long m);

// Same extension over any field K supporting +, *, /, and construction
// from Rational. Specializations of mu may hit poles for negative m.
template <class K>
K pochhammer_k(const K& base, long m) {
    if (m >= 0) {
        K acc = K(Rational(1));
        for (long i = 0; i < m; ++i) acc = acc * (base + K(Rational(i)));
        return acc;
    }
    K acc = K(Rational(1));
    for (long i = 1; i <= -m; ++i) acc = acc * (base - K(Rational(i)));
    if (acc == K(Rational(0)))
        throw PoleAtPoint("negative-subscript rising factorial hits a zero factor");
    return K(Rational(1)) / acc;
}

}  // namespace holodet
