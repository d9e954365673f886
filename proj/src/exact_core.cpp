#include "holodet/exact_core.hpp"

namespace holodet {

MuPoly binom_poly(const Rational& shift, long j) {
    if (j < 0) return MuPoly::zero();
    MuPoly p = MuPoly::one();
    for (long t = 0; t < j; ++t) p = p * MuPoly::mu_plus(shift - t);
    return p * (Rational(1) / factorial(j));
}

MuRat pochhammer(const MuPoly& base, long m) {
    if (m >= 0) {
        MuPoly p = MuPoly::one();
        for (long i = 0; i < m; ++i) p = p * (base + MuPoly(Rational(i)));
        return MuRat(p);
    }
    MuPoly p = MuPoly::one();
    for (long i = 1; i <= -m; ++i) p = p * (base - MuPoly(Rational(i)));
    return MuRat(MuPoly::one(), p);
}

}  // namespace holodet
