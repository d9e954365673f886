#include "holodet/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace holodet {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void expect_equal(VerificationResult& res, const std::string& identity, long index,
                  const MuRat& expected, const MuRat& actual) {
    if (expected == actual) return;
    res.pass = false;
    FailureWitness w;
    w.identity = identity;
    w.index = index;
    w.expected = expected.to_string();
    w.actual = actual.to_string();
    res.witnesses.push_back(std::move(w));
}

// Expected values are specialized alongside the matrix entries.
MuRat specialize(const MuRat& v, const std::optional<Rational>& mu) {
    return mu ? MuRat(v.eval(*mu)) : v;
}

MuRat row_dot(const SymMatrix& m, int row, const std::vector<MuRat>& c) {
    MuRat s;
    for (int j = 0; j < m.n; ++j) s += MuRat(m.entries[row][j]) * c[j];
    return s;
}

// Runs fn(k) for k = 0..count-1 across `jobs` workers; results land at
// their own index, so the merged order does not depend on scheduling.
template <class Fn>
std::vector<VerificationResult> run_indexed(long count, int jobs, Fn fn) {
    std::vector<VerificationResult> results(count);
    if (count == 0) return results;
    jobs = static_cast<int>(std::max<long>(1, std::min<long>(jobs, count)));
    if (jobs == 1) {
        for (long k = 0; k < count; ++k) results[k] = fn(k);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            long k;
            while ((k = next.fetch_add(1)) < count) results[k] = fn(k);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

VerificationResult check_last_cofactors(const FamilySpec& spec, long n, long dim,
                                        const MuRat& quotient, const SuiteOptions& opts) {
    auto start = Clock::now();
    VerificationResult res;
    res.n = n;
    res.pass = true;
    try {
        SymMatrix m = build_matrix(spec, static_cast<int>(dim), opts.mu);
        if (opts.tamper) opts.tamper(m);
        CofactorVector cv = cofactor_vector(m, CofactorMode::LAST);
        expect_equal(res, "normalization c_n = 1", dim, MuRat::one(), cv.values[dim - 1]);
        for (long i = 0; i + 1 < dim; ++i)
            expect_equal(res, "orthogonality row i", i + 1, MuRat::zero(),
                         row_dot(m, static_cast<int>(i), cv.values));
        expect_equal(res, "expansion sum = quotient", dim, quotient,
                     row_dot(m, static_cast<int>(dim - 1), cv.values));
    } catch (const Error& e) {
        res.pass = false;
        res.witnesses.push_back({std::string("exception: ") + e.what(), n, "", ""});
    }
    res.millis = elapsed_ms(start);
    return res;
}

std::string range_string(long lo, long hi, long stride = 1) {
    std::string s = std::to_string(lo) + ".." + std::to_string(hi);
    if (stride != 1) s += " step " + std::to_string(stride);
    return s;
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

VerificationReport verify_single_step(const FamilySpec& spec, const QuotientFn& quotient,
                                      long n_max, const SuiteOptions& opts) {
    VerificationReport rep;
    rep.suite = "single-step";
    rep.family = spec.name;
    rep.range_verified = range_string(1, n_max);
    rep.results = run_indexed(n_max, opts.jobs, [&](long k) {
        long n = k + 1;
        return check_last_cofactors(spec, n, n, specialize(quotient(n), opts.mu), opts);
    });
    return rep;
}

VerificationReport verify_even_step(const FamilySpec& spec, const QuotientFn& quotient,
                                    long n_max, const SuiteOptions& opts) {
    VerificationReport rep;
    rep.suite = "even-step";
    rep.family = spec.name;
    rep.range_verified = range_string(1, n_max);
    rep.results = run_indexed(n_max, opts.jobs, [&](long k) {
        long n = k + 1;
        return check_last_cofactors(spec, n, 2 * n, specialize(quotient(n), opts.mu), opts);
    });
    return rep;
}

VerificationReport verify_double_step(const FamilySpec& spec, const QuotientFn& quotient2,
                                      long n_max, long stride, const SuiteOptions& opts) {
    VerificationReport rep;
    rep.suite = "double-step";
    rep.family = spec.name;
    rep.range_verified = range_string(2, n_max, stride);
    std::vector<long> sizes;
    for (long n = 2; n <= n_max; n += stride) sizes.push_back(n);
    rep.results = run_indexed(static_cast<long>(sizes.size()), opts.jobs, [&](long k) {
        long n = sizes[k];
        auto start = Clock::now();
        VerificationResult res;
        res.n = n;
        res.pass = true;
        try {
            SymMatrix m = build_matrix(spec, static_cast<int>(n), opts.mu);
            if (opts.tamper) opts.tamper(m);
            auto [cp, cpp] = double_step_vectors(m);
            expect_equal(res, "pinning c'_{n-1} = 1", n - 1, MuRat::one(), cp[n - 2]);
            expect_equal(res, "pinning c'_n = 0", n, MuRat::zero(), cp[n - 1]);
            expect_equal(res, "pinning c''_{n-1} = 0", n - 1, MuRat::zero(), cpp[n - 2]);
            expect_equal(res, "pinning c''_n = 1", n, MuRat::one(), cpp[n - 1]);
            for (long i = 0; i + 2 < n; ++i) {
                expect_equal(res, "orthogonality row i (first vector)", i + 1, MuRat::zero(),
                             row_dot(m, static_cast<int>(i), cp));
                expect_equal(res, "orthogonality row i (second vector)", i + 1, MuRat::zero(),
                             row_dot(m, static_cast<int>(i), cpp));
            }
            MuRat block = row_dot(m, static_cast<int>(n - 2), cp) *
                              row_dot(m, static_cast<int>(n - 1), cpp) -
                          row_dot(m, static_cast<int>(n - 2), cpp) *
                              row_dot(m, static_cast<int>(n - 1), cp);
            expect_equal(res, "block expansion = quotient", n, specialize(quotient2(n), opts.mu), block);
        } catch (const Error& e) {
            res.pass = false;
            res.witnesses.push_back({std::string("exception: ") + e.what(), n, "", ""});
        }
        res.millis = elapsed_ms(start);
        return res;
    });
    return rep;
}

VerificationReport verify_first_row(const FamilySpec& spec, const MuRat& target, long n_max,
                                    const SuiteOptions& opts) {
    VerificationReport rep;
    rep.suite = "first-row";
    rep.family = spec.name;
    rep.range_verified = range_string(1, n_max);
    rep.results = run_indexed(n_max, opts.jobs, [&](long k) {
        long n = k + 1;
        long dim = 2 * n;
        auto start = Clock::now();
        VerificationResult res;
        res.n = n;
        res.pass = true;
        try {
            SymMatrix m = build_matrix(spec, static_cast<int>(dim), opts.mu);
            if (opts.tamper) opts.tamper(m);
            CofactorVector cv = cofactor_vector(m, CofactorMode::FIRST);
            expect_equal(res, "normalization c_1 = 1", 1, MuRat::one(), cv.values[0]);
            for (long i = 1; i < dim; ++i)
                expect_equal(res, "orthogonality row i", i + 1, MuRat::zero(),
                             row_dot(m, static_cast<int>(i), cv.values));
            expect_equal(res, "expansion sum = target", 1, specialize(target, opts.mu),
                         row_dot(m, 0, cv.values));
        } catch (const Error& e) {
            res.pass = false;
            res.witnesses.push_back({std::string("exception: ") + e.what(), n, "", ""});
        }
        res.millis = elapsed_ms(start);
        return res;
    });
    return rep;
}

VerificationReport verify_quotient_derivation(long n_max, const SuiteOptions& opts) {
    VerificationReport rep;
    rep.suite = "quotient-derivation";
    rep.family = "b00/b01/b10/b11";
    rep.range_verified = range_string(1, n_max);
    rep.results = run_indexed(n_max, opts.jobs, [&](long k) {
        long n = k + 1;
        auto start = Clock::now();
        VerificationResult res;
        res.n = n;
        res.pass = true;
        try {
            auto det_of = [&](int ro, int co, long dim) {
                return MuRat(
                    determinant(build_matrix(xin_family(ro, co), static_cast<int>(dim), opts.mu)));
            };
            // Odd-dimension singularity of the base family.
            expect_equal(res, "odd b00 determinant vanishes", 2 * n - 1, MuRat::zero(),
                         det_of(0, 0, 2 * n - 1));
            // Raw Desnanot-Jacobi identity on the base matrix.
            {
                SymMatrix m = build_matrix(xin_family(0, 0), static_cast<int>(2 * n), opts.mu);
                DesnanotJacobiWitness w;
                if (!desnanot_jacobi_check(m, &w)) {
                    res.pass = false;
                    res.witnesses.push_back({"Desnanot-Jacobi identity", 2 * n,
                                             (w.det_nw * w.det_se - w.det_ne * w.det_sw).to_string(),
                                             (w.det_full * w.det_interior).to_string()});
                }
            }
            // Even-size consequence: b00(2n) b11(2n-2) = -b01(2n-1) b10(2n-1).
            expect_equal(res, "even quotient relation", 2 * n,
                         -det_of(0, 1, 2 * n - 1) * det_of(1, 0, 2 * n - 1),
                         det_of(0, 0, 2 * n) * det_of(1, 1, 2 * n - 2));
            // Odd-size consequence: b00(2n) b11(2n) = b01(2n) b10(2n).
            expect_equal(res, "odd quotient relation", 2 * n + 1,
                         det_of(0, 1, 2 * n) * det_of(1, 0, 2 * n),
                         det_of(0, 0, 2 * n) * det_of(1, 1, 2 * n));
        } catch (const Error& e) {
            res.pass = false;
            res.witnesses.push_back({std::string("exception: ") + e.what(), n, "", ""});
        }
        res.millis = elapsed_ms(start);
        return res;
    });
    return rep;
}

}  // namespace holodet
