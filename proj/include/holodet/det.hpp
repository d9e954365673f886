#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "holodet/family.hpp"

namespace holodet {

// Exact determinant by fraction-free Bareiss elimination over Q[mu].
// Every division in the elimination is exact, so no rational-function
// normalization happens in the hot loop. Empty matrix -> 1.
MuPoly determinant(const SymMatrix& m);

// Determinant of the submatrix obtained by deleting row i and column j
// (1-based, per the usual minor convention).
MuPoly minor(const SymMatrix& m, int i, int j);

enum class CofactorMode { LAST, FIRST };

/// Normalized cofactors of the expansion row.
///
/// LAST: c_j = (n,j)-cofactor / (n,n)-cofactor, so c_n = 1 and
/// sum_j c_j a_{i,j} = 0 for every i < n. FIRST expands along the first
/// row instead and normalizes c_1 = 1.
struct CofactorVector {
    int n = 0;
    CofactorMode mode = CofactorMode::LAST;
    std::vector<MuRat> values;  // index 0 .. n-1 along the columns
};

// Unique solution of the bordered linear system; throws SingularSubmatrix
// when the relevant (n-1) x (n-1) minor vanishes identically.
CofactorVector cofactor_vector(const SymMatrix& m, CofactorMode mode);

// The two certificate vectors of the double-step ansatz: columns of
// -M1^{-1} M2 bordered with the 2x2 identity, so that
// c'_{n-1} = c''_n = 1 and c'_n = c''_{n-1} = 0 and both are orthogonal
// to rows 1..n-2. Throws SingularSubmatrix when det(M1) = 0.
std::pair<std::vector<MuRat>, std::vector<MuRat>> double_step_vectors(const SymMatrix& m);

// The 2x2 combination whose value equals det(M)/det(M1):
// (sum a_{n-1,j} c'_j)(sum a_{n,j} c''_j) - (sum a_{n-1,j} c''_j)(sum a_{n,j} c'_j).
MuRat double_step_quotient(const SymMatrix& m);

struct DesnanotJacobiWitness {
    MuPoly det_full, det_interior, det_nw, det_se, det_ne, det_sw;
};

// det(M) det(interior) = det(NW) det(SE) - det(NE) det(SW), exactly.
// Returns the six determinants alongside the verdict.
bool desnanot_jacobi_check(const SymMatrix& m, DesnanotJacobiWitness* witness = nullptr);

// A nonzero kernel vector with last nonzero entry 1, or nullopt when the
// matrix is nonsingular. `nullity` (when given) receives the kernel dimension.
std::optional<std::vector<MuRat>> null_vector(const SymMatrix& m, int* nullity = nullptr);

// Exact solve of a square system over Q(mu); throws SingularSubmatrix.
std::vector<MuRat> solve_linear_system(std::vector<std::vector<MuRat>> a,
                                       std::vector<MuRat> rhs);

}  // namespace holodet
