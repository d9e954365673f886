#include "holodet/det.hpp"

#include <algorithm>

namespace holodet {

namespace {

// Cheap complexity measure used for pivot selection over Q(mu).
int murat_weight(const MuRat& r) { return r.num().degree() + r.den().degree(); }

SymMatrix delete_rows_cols(const SymMatrix& m, int row_a, int col_a, int row_b = -1,
                           int col_b = -1) {
    SymMatrix s;
    std::vector<int> rows, cols;
    for (int i = 0; i < m.n; ++i)
        if (i != row_a && i != row_b) rows.push_back(i);
    for (int j = 0; j < m.n; ++j)
        if (j != col_a && j != col_b) cols.push_back(j);
    s.n = static_cast<int>(rows.size());
    s.entries.assign(s.n, std::vector<MuPoly>(s.n));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) s.entries[i][j] = m.entries[rows[i]][cols[j]];
    return s;
}

}  // namespace

MuPoly determinant(const SymMatrix& m) {
    int n = m.n;
    if (n == 0) return MuPoly::one();
    auto a = m.entries;
    int sign = 1;
    MuPoly prev = MuPoly::one();
    for (int k = 0; k + 1 < n; ++k) {
        // Pivot: nonzero entry of minimal degree in column k.
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            if (piv < 0 || a[i][k].degree() < a[piv][k].degree()) piv = i;
        }
        if (piv < 0) return MuPoly::zero();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss one-step identity; the division is exact in Q[mu].
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
            }
            a[i][k] = MuPoly::zero();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MuPoly minor(const SymMatrix& m, int i, int j) {
    if (i < 1 || j < 1 || i > m.n || j > m.n)
        throw IndexOutOfRange("minor index (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return determinant(delete_rows_cols(m, i - 1, j - 1));
}

std::vector<MuRat> solve_linear_system(std::vector<std::vector<MuRat>> a, std::vector<MuRat> rhs) {
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            if (piv < 0 || murat_weight(a[i][k]) < murat_weight(a[piv][k])) piv = i;
        }
        if (piv < 0) throw SingularSubmatrix("linear system is singular at column " +
                                             std::to_string(k));
        std::swap(a[piv], a[k]);
        std::swap(rhs[piv], rhs[k]);
        MuRat inv = a[k][k].inverse();
        for (int j = k; j < n; ++j) a[k][j] = a[k][j] * inv;
        rhs[k] = rhs[k] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            MuRat f = a[i][k];
            for (int j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            rhs[i] = rhs[i] - f * rhs[k];
        }
    }
    return rhs;
}

CofactorVector cofactor_vector(const SymMatrix& m, CofactorMode mode) {
    const int n = m.n;
    if (n == 0) throw IndexOutOfRange("cofactor vector of an empty matrix");
    std::vector<std::vector<MuRat>> a(n, std::vector<MuRat>(n));
    std::vector<MuRat> rhs(n);
    int row = 0;
    const int skip = (mode == CofactorMode::LAST) ? n - 1 : 0;
    for (int i = 0; i < n; ++i) {
        if (i == skip) continue;
        for (int j = 0; j < n; ++j) a[row][j] = MuRat(m.entries[i][j]);
        ++row;
    }
    const int pinned = (mode == CofactorMode::LAST) ? n - 1 : 0;
    a[n - 1][pinned] = MuRat::one();
    rhs[n - 1] = MuRat::one();
    CofactorVector cv;
    cv.n = n;
    cv.mode = mode;
    try {
        cv.values = solve_linear_system(std::move(a), std::move(rhs));
    } catch (const SingularSubmatrix&) {
        throw SingularSubmatrix("cofactor system singular: the bordered minor vanishes (n=" +
                                std::to_string(n) + ")");
    }
    return cv;
}

std::pair<std::vector<MuRat>, std::vector<MuRat>> double_step_vectors(const SymMatrix& m) {
    const int n = m.n;
    if (n < 2) throw IndexOutOfRange("double-step vectors need n >= 2");
    std::vector<MuRat> cp(n), cpp(n);
    cp[n - 2] = MuRat::one();
    cpp[n - 1] = MuRat::one();
    if (n == 2) return {cp, cpp};
    const int k = n - 2;
    // Solve M1 C = -M2 column by column; C gets bordered with I2.
    for (int which = 0; which < 2; ++which) {
        std::vector<std::vector<MuRat>> a(k, std::vector<MuRat>(k));
        std::vector<MuRat> rhs(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) a[i][j] = MuRat(m.entries[i][j]);
            rhs[i] = -MuRat(m.entries[i][k + which]);
        }
        std::vector<MuRat> col;
        try {
            col = solve_linear_system(std::move(a), std::move(rhs));
        } catch (const SingularSubmatrix&) {
            throw SingularSubmatrix("double-step leading block singular (n=" + std::to_string(n) +
                                    ")");
        }
        for (int j = 0; j < k; ++j) (which == 0 ? cp : cpp)[j] = col[j];
    }
    return {cp, cpp};
}

MuRat double_step_quotient(const SymMatrix& m) {
    auto [cp, cpp] = double_step_vectors(m);
    const int n = m.n;
    auto row_dot = [&](int i, const std::vector<MuRat>& c) {
        MuRat s;
        for (int j = 0; j < n; ++j) s += MuRat(m.entries[i][j]) * c[j];
        return s;
    };
    MuRat s1 = row_dot(n - 2, cp), s2 = row_dot(n - 1, cpp);
    MuRat s3 = row_dot(n - 2, cpp), s4 = row_dot(n - 1, cp);
    return s1 * s2 - s3 * s4;
}

bool desnanot_jacobi_check(const SymMatrix& m, DesnanotJacobiWitness* witness) {
    const int n = m.n;
    if (n < 2) throw IndexOutOfRange("Desnanot-Jacobi needs n >= 2");
    DesnanotJacobiWitness w;
    w.det_full = determinant(m);
    w.det_interior = determinant(delete_rows_cols(m, 0, 0, n - 1, n - 1));
    w.det_nw = minor(m, n, n);
    w.det_se = minor(m, 1, 1);
    w.det_ne = minor(m, n, 1);
    w.det_sw = minor(m, 1, n);
    bool ok = w.det_full * w.det_interior == w.det_nw * w.det_se - w.det_ne * w.det_sw;
    if (witness) *witness = w;
    return ok;
}

std::optional<std::vector<MuRat>> null_vector(const SymMatrix& m, int* nullity) {
    const int n = m.n;
    std::vector<std::vector<MuRat>> a(n, std::vector<MuRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = MuRat(m.entries[i][j]);
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            if (piv < 0 || murat_weight(a[i][c]) < murat_weight(a[piv][c])) piv = i;
        }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        MuRat inv = a[r][c].inverse();
        for (int j = c; j < n; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            MuRat f = a[i][c];
            for (int j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (nullity) *nullity = n - r;
    if (r == n) return std::nullopt;
    // Back-substitute with the first free column set to 1.
    int free_col = 0;
    {
        std::vector<bool> is_pivot(n, false);
        for (int c : pivot_col) is_pivot[c] = true;
        while (is_pivot[free_col]) ++free_col;
    }
    std::vector<MuRat> v(n);
    v[free_col] = MuRat::one();
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][free_col];
    // Deterministic output: last nonzero entry scaled to 1.
    for (int j = n - 1; j >= 0; --j) {
        if (!v[j].is_zero()) {
            MuRat s = v[j].inverse();
            for (auto& x : v) x = x * s;
            break;
        }
    }
    return v;
}

}  // namespace holodet
