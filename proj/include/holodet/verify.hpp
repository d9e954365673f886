#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holodet/det.hpp"

namespace holodet {

struct FailureWitness {
    std::string identity;  // e.g. "orthogonality i=3"
    long index = 0;
    std::string expected;
    std::string actual;
};

struct VerificationResult {
    long n = 0;
    bool pass = false;
    std::vector<FailureWitness> witnesses;
    double millis = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::string family;
    std::string range_verified;
    std::vector<VerificationResult> results;

    bool all_pass() const;
    void add(VerificationResult r) { results.push_back(std::move(r)); }
};

using QuotientFn = std::function<MuRat(long)>;

// Runs per-n checks in parallel (jobs > 1) and merges results in ascending n.
struct SuiteOptions {
    int jobs = 1;
    std::optional<Rational> mu;  // specialize entries when set
    // Applied to every matrix right after it is built. Lets property tests
    // perturb single entries and assert that the suite produces a witness.
    std::function<void(SymMatrix&)> tamper;
};

// Single-step certificate: LAST cofactors of the n x n matrix satisfy
// c_n = 1, orthogonality to rows i < n, and expansion sum = quotient(n),
// which together prove det_n / det_{n-1} = quotient(n).
VerificationReport verify_single_step(const FamilySpec& spec, const QuotientFn& quotient,
                                      long n_max, const SuiteOptions& opts = {});

// Even-only certificate on matrices of dimension 2n with
// quotient(n) = det_{2n} / det_{2n-1}.
VerificationReport verify_even_step(const FamilySpec& spec, const QuotientFn& quotient,
                                    long n_max, const SuiteOptions& opts = {});

// Double-step certificate with a pair of vectors pinned in the last two
// slots and quotient2(n) = det_n / det_{n-2}, checked for n = 2..n_max
// (step `stride`).
VerificationReport verify_double_step(const FamilySpec& spec, const QuotientFn& quotient2,
                                      long n_max, long stride = 1,
                                      const SuiteOptions& opts = {});

// First-row certificate on matrices of dimension 2n: FIRST cofactors with
// expansion sum equal to the constant target.
VerificationReport verify_first_row(const FamilySpec& spec, const MuRat& target,
                                    long n_max, const SuiteOptions& opts = {});

// Brute-force check of the Desnanot-Jacobi consequences tying the shifted
// determinant quotients together, plus the raw identity on the base family.
VerificationReport verify_quotient_derivation(long n_max, const SuiteOptions& opts = {});

}  // namespace holodet
