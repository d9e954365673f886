#include "holodet/family.hpp"

#include <cstdlib>

namespace holodet {

FamilySpec andrews_family() {
    FamilySpec s;
    s.delta_sign = 1;
    s.name = "andrews";
    return s;
}

FamilySpec xin_family(int row_origin, int col_origin, const Rational& mu_shift) {
    FamilySpec s;
    s.delta_sign = -1;
    s.row_origin = row_origin;
    s.col_origin = col_origin;
    s.mu_shift = mu_shift;
    s.name = "b" + std::to_string(row_origin) + std::to_string(col_origin);
    return s;
}

FamilySpec t36_family() {
    FamilySpec s;
    s.delta_sign = -1;
    s.binom_col_offset = 1;
    s.name = "t36";
    return s;
}

FamilySpec lascoux_family(int r) {
    if (r < 1 || r % 2 == 0) throw UsageError("lascoux family needs odd r >= 1");
    FamilySpec s;
    s.delta_sign = -1;
    s.delta_col_offset = r - 1;
    s.binom_col_offset = r - 1;
    s.name = "lascoux:" + std::to_string(r);
    return s;
}

FamilySpec family_by_name(const std::string& raw) {
    std::string name = raw;
    if (name.rfind("xin:", 0) == 0) name = name.substr(4);
    if (name == "andrews") return andrews_family();
    if (name == "xin" || name == "b11") return xin_family(1, 1);
    if (name == "b00") return xin_family(0, 0);
    if (name == "b01") return xin_family(0, 1);
    if (name == "b10") return xin_family(1, 0);
    if (name == "b22") return xin_family(2, 2);
    if (name == "t36") return t36_family();
    if (name.rfind("lascoux:", 0) == 0) return lascoux_family(std::atoi(name.c_str() + 8));
    throw UsageError("unknown family: '" + raw + "'");
}

const MuPoly& SymMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return entries[i][j];
}

SymMatrix SymMatrix::transposed() const {
    SymMatrix t;
    t.n = n;
    t.entries.assign(n, std::vector<MuPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.entries[j][i] = entries[i][j];
    return t;
}

MuPoly entry_of(const FamilySpec& spec, int i, int j) {
    MuPoly e = binom_poly(spec.mu_shift + (i + j - 2), j + spec.binom_col_offset);
    if (spec.delta_sign != 0 && i + spec.delta_row_offset == j + spec.delta_col_offset)
        e = e + MuPoly(Rational(spec.delta_sign));
    return e;
}

SymMatrix build_matrix(const FamilySpec& spec, int n, const std::optional<Rational>& mu) {
    if (n < 0) throw IndexOutOfRange("matrix dimension must be >= 0");
    SymMatrix m;
    m.n = n;
    m.entries.assign(n, std::vector<MuPoly>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            MuPoly e = entry_of(spec, spec.row_origin + a, spec.col_origin + b);
            m.entries[a][b] = mu ? MuPoly(e.eval(*mu)) : std::move(e);
        }
    }
    return m;
}

}  // namespace holodet
