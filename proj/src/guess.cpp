#include "holodet/guess.hpp"

#include <algorithm>
#include <sstream>

#include "holodet/errors.hpp"

namespace holodet {

namespace {

// All exponent vectors with e[v] <= bounds[v] componentwise.
std::vector<std::vector<int>> exponent_grid(const std::vector<int>& bounds) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(bounds.size(), 0);
    while (true) {
        out.push_back(e);
        int i = 0;
        while (i < static_cast<int>(e.size()) && e[i] == bounds[i]) e[i++] = 0;
        if (i == static_cast<int>(e.size())) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact nullspace basis of the rational matrix (rows x ncols).
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> rows,
                                                      int ncols) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_of_col(ncols, -1);
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i) {
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[c] = 1;
        for (int d = 0; d < ncols; ++d)
            if (pivot_of_col[d] >= 0) v[d] = -rows[pivot_of_col[d]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

IndexTuple point_plus(const IndexTuple& p, const std::vector<int>& shift) {
    IndexTuple q(p);
    for (size_t i = 0; i < q.size(); ++i) q[i] += shift[i];
    return q;
}

}  // namespace

void Recurrence::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const RecurrenceTerm& a, const RecurrenceTerm& b) { return a.shift < b.shift; });
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const RecurrenceTerm& t) { return t.coeff.is_zero(); }),
                terms.end());
    if (terms.empty()) return;
    const int arity = static_cast<int>(vars.size()) + 1;
    // Common monomial across every term's coefficient.
    std::vector<int> common(arity, 0);
    bool first = true;
    for (const auto& t : terms) {
        auto m = t.coeff.min_exponents();
        if (first) {
            common = m;
            first = false;
        } else {
            for (int i = 0; i < arity; ++i) common[i] = std::min(common[i], m[i]);
        }
    }
    // Scalar content across every term.
    Rational g(0);
    for (const auto& t : terms) {
        Rational c = t.coeff.content();
        if (g == 0) {
            g = c;
        } else if (c != 0) {
            mpz_class num, den;
            mpz_gcd(num.get_mpz_t(), g.get_num_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), g.get_den_mpz_t(), c.get_den_mpz_t());
            g = Rational(num, den);
            g.canonicalize();
        }
    }
    if (g == 0) g = 1;
    // Sign fixed by the lexicographically largest shift's leading coefficient.
    Rational lead = terms.back().coeff.terms().rbegin()->second;
    Rational scale = (lead < 0 ? -Rational(1) : Rational(1)) / g;
    for (auto& t : terms) t.coeff = t.coeff.shift_down(common) * scale;
}

bool Recurrence::annihilates(const DataMap& data) const {
    if (terms.empty()) return false;
    for (const auto& [p, v] : data) {
        bool complete = true;
        MuRat sum;
        for (const auto& t : terms) {
            auto it = data.find(point_plus(p, t.shift));
            if (it == data.end()) {
                complete = false;
                break;
            }
            sum += MuRat(t.coeff.eval_indices(p)) * it->second;
        }
        if (complete && !sum.is_zero()) return false;
    }
    return true;
}

std::string Recurrence::to_string() const {
    std::vector<std::string> names(vars);
    names.push_back("mu");
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.to_string(names) << ") * c[";
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i) os << ",";
            os << vars[i];
            if (t.shift[i] > 0) os << "+" << t.shift[i];
            if (t.shift[i] < 0) os << t.shift[i];
        }
        os << "]";
    }
    os << " = 0";
    return os.str();
}

std::vector<Recurrence> guess(const DataMap& data, const AnsatzSpec& ansatz) {
    const int nvars = static_cast<int>(ansatz.vars.size());
    if (static_cast<int>(ansatz.degree_bounds.size()) != nvars)
        throw UsageError("degree bound count must match the variable count");
    for (const auto& s : ansatz.support)
        if (static_cast<int>(s.size()) != nvars)
            throw UsageError("support shift arity must match the variable count");
    if (ansatz.support.empty()) throw UsageError("empty ansatz support");

    std::vector<int> bounds(ansatz.degree_bounds);
    bounds.push_back(ansatz.mode == GuessMode::SYMBOLIC_MU ? ansatz.mu_degree_bound : 0);
    const auto monomials = exponent_grid(bounds);

    std::vector<std::vector<int>> support(ansatz.support);
    std::sort(support.begin(), support.end());
    const int nterms = static_cast<int>(support.size());
    const int ncols = nterms * static_cast<int>(monomials.size());

    // Base points with the full support available in the data.
    std::vector<IndexTuple> base_points;
    for (const auto& [p, v] : data) {
        bool ok = true;
        for (const auto& s : support)
            if (!data.count(point_plus(p, s))) {
                ok = false;
                break;
            }
        if (ok) base_points.push_back(p);
    }

    // Hold out every fifth base point for validation only.
    std::vector<IndexTuple> training;
    for (size_t i = 0; i < base_points.size(); ++i)
        if (i % 5 != 4) training.push_back(base_points[i]);

    if (static_cast<long>(training.size()) < 2L * ncols)
        throw InsufficientData("need at least " + std::to_string(2 * ncols) +
                               " training points for " + std::to_string(ncols) +
                               " unknowns, have " + std::to_string(training.size()));

    std::vector<std::vector<Rational>> rows;
    for (const auto& p : training) {
        // Per-unknown contribution as a rational function of mu.
        std::vector<MuRat> contrib(ncols);
        int col = 0;
        for (const auto& s : support) {
            const MuRat& d = data.at(point_plus(p, s));
            for (const auto& e : monomials) {
                Rational v(1);
                for (int i = 0; i < nvars; ++i) v *= rational_pow(Rational(p[i]), e[i]);
                contrib[col++] = d * MuRat(MuPoly::monomial(v, e[nvars]));
            }
        }
        // Clear denominators, then one scalar row per power of mu.
        MuPoly den = MuPoly::one();
        for (const auto& c : contrib)
            if (!c.is_zero()) den = poly_lcm(den, c.den());
        std::vector<MuPoly> cleared(ncols);
        int maxdeg = 0;
        for (int u = 0; u < ncols; ++u) {
            if (contrib[u].is_zero()) continue;
            cleared[u] = contrib[u].num() * den.exact_div(contrib[u].den());
            maxdeg = std::max(maxdeg, cleared[u].degree());
        }
        for (int k = 0; k <= maxdeg; ++k) {
            std::vector<Rational> row(ncols);
            bool nonzero = false;
            for (int u = 0; u < ncols; ++u) {
                row[u] = cleared[u].coeff(k);
                if (row[u] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    std::vector<Recurrence> out;
    for (const auto& v : rational_nullspace(std::move(rows), ncols)) {
        Recurrence rec;
        rec.vars = ansatz.vars;
        int col = 0;
        for (const auto& s : support) {
            RecurrenceTerm t;
            t.shift = s;
            t.coeff = MultiPoly(nvars);
            for (const auto& e : monomials) t.coeff.add_term(e, v[col++]);
            if (!t.coeff.is_zero()) rec.terms.push_back(std::move(t));
        }
        rec.normalize();
        // Validation on every base point, held-out share included.
        if (!rec.terms.empty() && rec.annihilates(data)) out.push_back(std::move(rec));
    }
    return out;
}

MuRat apply(const Recurrence& rec, const DataMap& known, const IndexTuple& frontier) {
    if (rec.terms.empty()) throw UsageError("cannot apply an empty recurrence");
    bool any_complete = false;
    for (size_t t = 0; t < rec.terms.size(); ++t) {
        IndexTuple base(frontier);
        for (size_t i = 0; i < base.size(); ++i) base[i] -= rec.terms[t].shift[i];
        bool complete = true;
        for (size_t u = 0; u < rec.terms.size(); ++u) {
            if (u == t) continue;
            if (!known.count(point_plus(base, rec.terms[u].shift))) {
                complete = false;
                break;
            }
        }
        if (!complete) continue;
        any_complete = true;
        MuRat pivot(rec.terms[t].coeff.eval_indices(base));
        if (pivot.is_zero()) continue;
        MuRat rhs;
        for (size_t u = 0; u < rec.terms.size(); ++u) {
            if (u == t) continue;
            rhs -= MuRat(rec.terms[u].coeff.eval_indices(base)) *
                   known.at(point_plus(base, rec.terms[u].shift));
        }
        return rhs / pivot;
    }
    if (any_complete)
        throw LeadingCoefficientVanishes("every usable orientation has a vanishing coefficient");
    throw MissingDependency("no orientation has its full support in the known data");
}

std::vector<ConsistencyIssue> consistency_check(const std::vector<Recurrence>& recs,
                                                const DataMap& data) {
    std::vector<ConsistencyIssue> issues;
    for (size_t r = 0; r < recs.size(); ++r) {
        for (const auto& [p, expected] : data) {
            DataMap rest(data);
            rest.erase(p);
            MuRat got;
            try {
                got = apply(recs[r], rest, p);
            } catch (const MissingDependency&) {
                continue;
            } catch (const LeadingCoefficientVanishes&) {
                continue;
            }
            if (!(got == expected)) {
                ConsistencyIssue issue;
                issue.point = p;
                issue.detail = "recurrence " + std::to_string(r) + " re-derives " +
                               got.to_string() + " but the data holds " + expected.to_string();
                issues.push_back(std::move(issue));
            }
        }
    }
    return issues;
}

}  // namespace holodet
