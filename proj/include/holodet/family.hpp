#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holodet/exact_core.hpp"

namespace holodet {

/// Declarative description of one determinant family.
///
/// The (i, j) entry, with i and j the absolute row/column indices, is
///   delta_sign * [i + delta_row_offset == j + delta_col_offset]
///   + C(mu + mu_shift + i + j - 2, j + binom_col_offset).
/// An n x n matrix takes i in [row_origin, row_origin+n-1] and j in
/// [col_origin, col_origin+n-1].
struct FamilySpec {
    int delta_sign = 0;  // +1, -1, or 0 (no delta term)
    int delta_row_offset = 0;
    int delta_col_offset = 0;
    int binom_col_offset = 0;  // bottom index is j + binom_col_offset
    int row_origin = 1;
    int col_origin = 1;
    Rational mu_shift = Rational(0);
    std::string name = "custom";
};

// Named presets for the matrix families handled by this library.
FamilySpec andrews_family();                           // delta_{i,j} + C(mu+i+j-2, j), origin (1,1)
FamilySpec xin_family(int row_origin, int col_origin,  // -delta_{i,j} + C(mu+i+j-2, j)
                      const Rational& mu_shift = Rational(0));
FamilySpec t36_family();        // -delta_{i,j} + C(mu+i+j-2, j+1), origin (1,1)
FamilySpec lascoux_family(int r);  // -delta_{i,j+r-1} + C(mu+i+j-2, j+r-1), odd r >= 1

// CLI names: andrews | xin | b00 | b01 | b10 | b11 | t36 | lascoux:<r>
// ("xin" is an alias for b11; "xin:bIJ" is accepted as well).
FamilySpec family_by_name(const std::string& name);

struct SymMatrix {
    int n = 0;
    std::vector<std::vector<MuPoly>> entries;  // n x n

    const MuPoly& at(int i, int j) const;  // 0-based
    SymMatrix transposed() const;
};

// Entry at absolute indices (i, j); pure in the spec.
MuPoly entry_of(const FamilySpec& spec, int i, int j);

// n x n materialization; n = 0 is the empty matrix (determinant 1).
// When mu is given, every entry is specialized to the constant polynomial
// of its value at that point.
SymMatrix build_matrix(const FamilySpec& spec, int n,
                       const std::optional<Rational>& mu = std::nullopt);

}  // namespace holodet
