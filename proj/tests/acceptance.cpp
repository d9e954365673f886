// Acceptance gate: one line per criterion, exit 0 iff everything passes.
// Every expected value is computed exactly; there are no tolerances.

#include <chrono>
#include <iostream>
#include <set>
#include <string>

#include "holodet/closed_forms.hpp"
#include "holodet/guess.hpp"
#include "holodet/seeding.hpp"
#include "holodet/verify.hpp"
#include "oracle.hpp"

using namespace holodet;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass, double secs) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << what << "  ("
              << static_cast<long>(secs * 1000) << " ms)\n"
              << std::flush;
}

template <class Fn>
void criterion(int number, const std::string& what, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, what, ok, secs);
}

const unsigned long SEED = 20260823;

MuRat sym_det(const FamilySpec& spec, long n) {
    return MuRat(determinant(build_matrix(spec, static_cast<int>(n))));
}

Rational det_at(const FamilySpec& spec, long n, const Rational& mu) {
    return determinant(build_matrix(spec, static_cast<int>(n), mu)).coeff(0);
}

// ---- criterion 9 helpers ----

DataMap cofactor_rows(const FamilySpec& spec, long n_max, const Rational& mu, int parity,
                      const std::set<long>& exclude) {
    DataMap d;
    for (long n = 1; n <= n_max; ++n) {
        if (n % 2 != parity || exclude.count(n)) continue;
        CofactorVector cv = cofactor_vector(build_matrix(spec, static_cast<int>(n), mu),
                                            CofactorMode::LAST);
        for (long j = 1; j <= n; ++j) d[{n, j}] = cv.values[j - 1];
    }
    return d;
}

bool reproduce_row(const Recurrence& rec, const FamilySpec& spec, long n, const Rational& mu) {
    CofactorVector cv =
        cofactor_vector(build_matrix(spec, static_cast<int>(n), mu), CofactorMode::LAST);
    if (!(cv.values[n - 1] == MuRat::one())) return false;
    // Seeds: the first two entries plus the normalization c(n,n) = 1.  The
    // top seed lets the recurrence bridge interior points where the leading
    // coefficient vanishes, by pivoting on a different term.
    DataMap known;
    known[{n, 1}] = cv.values[0];
    known[{n, 2}] = cv.values[1];
    known[{n, n}] = MuRat::one();
    for (long j = 3; j < n; ++j) {
        MuRat v = apply(rec, known, {n, j});
        if (!(v == cv.values[j - 1])) return false;
        known[{n, j}] = v;
    }
    return true;
}

}  // namespace

int main() {
    const auto mus = seeded_mu_points(SEED, 5);

    criterion(1, "even/odd determinant quotient of the +delta family", [&] {
        for (long n = 1; n <= 6; ++n)
            if (!(sym_det(andrews_family(), 2 * n) ==
                  thm34_quotient(n, MuRat::mu()) * sym_det(andrews_family(), 2 * n - 1)))
                return false;
        // Degree-bound certification at 5 seeded points for the larger sizes.
        for (const auto& mu : mus)
            for (long n = 1; n <= 12; ++n)
                if (det_at(andrews_family(), 2 * n, mu) !=
                    thm34_quotient(n, mu) * det_at(andrews_family(), 2 * n - 1, mu))
                    return false;
        return true;
    });

    criterion(2, "closed form of the (1,1)-origin determinant, n <= 14 symbolic", [&] {
        if (!(thm35_value(1, MuRat::mu()) == MuRat(MuPoly::mu_plus(rat(-1))))) return false;
        if (!(thm35_value(2, MuRat::mu()) == MuRat(MuPoly::mu_plus(rat(0)) * rat(-2))))
            return false;
        for (long n = 0; n <= 14; ++n)
            if (!(sym_det(xin_family(1, 1), n) == thm35_value(n, MuRat::mu()))) return false;
        return true;
    });

    criterion(3, "closed forms of the (0,1)- and (1,0)-origin determinants, n <= 14", [&] {
        for (long n = 0; n <= 14; ++n) {
            if (!(sym_det(xin_family(0, 1), n) == b01_value(n, MuRat::mu()))) return false;
            if (!(sym_det(xin_family(1, 0), n) == b10_value(n, MuRat::mu()))) return false;
        }
        return true;
    });

    criterion(4, "bottom-shifted determinant for odd n <= 13 and its constant quotient", [&] {
        for (long n = 1; n <= 13; n += 2)
            if (!(sym_det(t36_family(), n) == thm36_value(n, MuRat::mu()))) return false;
        for (long n = 1; n <= 4; ++n)
            if (!(sym_det(xin_family(1, 1), 2 * n) ==
                  thm36_q_constant(MuRat::mu()) * sym_det(xin_family(2, 2), 2 * n - 1)))
                return false;
        return true;
    });

    criterion(5, "full product stack vs the +delta determinant (n <= 12 symbolic, n <= 40 at 5 points)",
              [&] {
                  for (long n = 1; n <= 12; ++n)
                      if (!(conj34_value(n, MuRat::mu()) == sym_det(andrews_family(), n)))
                          return false;
                  for (const auto& mu : mus)
                      for (long n = 1; n <= 40; ++n)
                          if (conj34_value(n, mu) != det_at(andrews_family(), n, mu)) return false;
                  // The single non-splitting tail factor, in factored form.
                  MuPoly quartic = MuPoly::mu_plus(rat(34)) *
                                   (MuPoly::monomial(rat(1), 3) + MuPoly::monomial(rat(47), 2) +
                                    MuPoly::monomial(rat(954), 1) + MuPoly(rat(5928)));
                  return conj_g(4, MuRat::mu()) == MuRat(quartic);
              });

    criterion(6, "odd base-family singularity with exact kernel vector, n <= 6", [&] {
        for (long n = 1; n <= 6; ++n) {
            SymMatrix odd = build_matrix(xin_family(0, 0), static_cast<int>(2 * n - 1));
            if (!determinant(odd).is_zero()) return false;
            int nullity = 0;
            auto v = null_vector(odd, &nullity);
            if (!v || nullity != 1) return false;
            for (int i = 0; i < odd.n; ++i) {
                MuRat s;
                for (int j = 0; j < odd.n; ++j) s += MuRat(odd.entries[i][j]) * (*v)[j];
                if (!s.is_zero()) return false;
            }
            if (!(sym_det(xin_family(0, 0), 2 * n) == -sym_det(xin_family(1, 1), 2 * n - 1)))
                return false;
        }
        return true;
    });

    criterion(7, "certificate suites pass and every suite detects single-entry mutation", [&] {
        QuotientFn q34 = [](long n) { return thm34_quotient(n, MuRat::mu()); };
        QuotientFn q01 = [](long n) {
            return b01_value(n, MuRat::mu()) / b01_value(n - 1, MuRat::mu());
        };
        QuotientFn q11 = [](long n) {
            return thm35_value(n, MuRat::mu()) / thm35_value(n - 2, MuRat::mu());
        };
        SuiteOptions par;
        par.jobs = 4;
        if (!verify_single_step(xin_family(0, 1), q01, 12, par).all_pass()) return false;
        if (!verify_even_step(andrews_family(), q34, 6, par).all_pass()) return false;
        if (!verify_first_row(xin_family(0, 0), MuRat(rat(-1)), 6, par).all_pass()) return false;
        if (!verify_double_step(xin_family(1, 1), q11, 14, 1, par).all_pass()) return false;
        SuiteOptions mut;
        mut.tamper = [](SymMatrix& m) {
            m.entries[0][m.n / 2] = m.entries[0][m.n / 2] + MuPoly(rat(1));
        };
        if (verify_single_step(xin_family(0, 1), q01, 5, mut).all_pass()) return false;
        if (verify_even_step(andrews_family(), q34, 3, mut).all_pass()) return false;
        if (verify_first_row(xin_family(0, 0), MuRat(rat(-1)), 3, mut).all_pass()) return false;
        if (verify_double_step(xin_family(1, 1), q11, 5, 1, mut).all_pass()) return false;
        return true;
    });

    criterion(8, "Desnanot-Jacobi on 200 seeded integer matrices and symbolic families, n <= 8",
              [&] {
                  oracle::Rng rng(SEED);
                  for (int t = 0; t < 200; ++t) {
                      int n = static_cast<int>(rng.integer(2, 8));
                      SymMatrix m;
                      m.n = n;
                      m.entries.assign(n, std::vector<MuPoly>(n));
                      for (int i = 0; i < n; ++i)
                          for (int j = 0; j < n; ++j)
                              m.entries[i][j] = MuPoly(rat(rng.integer(-30, 30)));
                      if (!desnanot_jacobi_check(m)) return false;
                  }
                  for (int n = 2; n <= 8; ++n) {
                      if (!desnanot_jacobi_check(build_matrix(xin_family(0, 0), n))) return false;
                      if (!desnanot_jacobi_check(build_matrix(xin_family(1, 1), n))) return false;
                  }
                  return true;
              });

    criterion(9, "guessed cofactor recurrences reproduce held-out rows 13 and 14", [&] {
        const Rational mu = rat(7, 2);
        const FamilySpec spec = xin_family(0, 1);
        // Parity-split three-term row recurrences guessed from specialized
        // cofactor data, rows 13 and 14 withheld entirely.
        AnsatzSpec odd_ansatz;
        odd_ansatz.vars = {"n", "j"};
        odd_ansatz.support = {{0, 0}, {0, -1}, {0, -2}};
        odd_ansatz.degree_bounds = {2, 6};
        odd_ansatz.mode = GuessMode::SPECIALIZED_MU;
        AnsatzSpec even_ansatz = odd_ansatz;
        even_ansatz.degree_bounds = {4, 7};

        DataMap odd_data = cofactor_rows(spec, 29, mu, 1, {13});
        auto odd_recs = guess(odd_data, odd_ansatz);
        if (odd_recs.empty()) return false;
        DataMap even_data = cofactor_rows(spec, 38, mu, 0, {14});
        auto even_recs = guess(even_data, even_ansatz);
        if (even_recs.empty()) return false;

        if (!reproduce_row(odd_recs.front(), spec, 13, mu)) return false;
        if (!reproduce_row(even_recs.front(), spec, 14, mu)) return false;

        // Seeded random data admits no recurrence under the same ansatz.
        oracle::Rng rng(SEED + 1);
        DataMap noise;
        for (long n = 1; n <= 29; ++n)
            for (long j = 1; j <= n; ++j)
                if (n % 2 == 1) noise[{n, j}] = MuRat(rng.rational(100, 13));
        return guess(noise, odd_ansatz).empty();
    });

    criterion(10, "arithmetic property suites (Pascal grid, composition law, round-trips)", [&] {
        for (long k = -5; k <= 5; ++k)
            for (long j = 0; j <= 10; ++j)
                if (!(binom_poly(rat(k), j) ==
                      binom_poly(rat(k - 1), j) + binom_poly(rat(k - 1), j - 1)))
                    return false;
        std::vector<MuPoly> bases = {MuPoly::mu_plus(rat(0)),
                                     MuPoly::mu_plus(rat(3)) * rat(1, 2)};
        for (const MuPoly& x : bases)
            for (long a = -4; a <= 4; ++a)
                for (long b = -4; b <= 4; ++b)
                    if (!(pochhammer(x, a + b) ==
                          pochhammer(x, a) * pochhammer(x + MuPoly(rat(a)), b)))
                        return false;
        oracle::Rng rng(SEED + 2);
        for (int t = 0; t < 100; ++t) {
            MuPoly a = rng.poly(3), b = rng.poly(3);
            if (b.is_zero()) continue;
            if (!(MuRat(a * b, b) == MuRat(a))) return false;
        }
        return true;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                : "ACCEPTANCE: " + std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
