#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holodet/multipoly.hpp"

namespace holodet {

using IndexTuple = std::vector<long>;
using DataMap = std::map<IndexTuple, MuRat>;

/// Linear recurrence with polynomial coefficients: sum over terms of
/// coeff(point, mu) * data[point + shift] = 0 at every base point.
struct RecurrenceTerm {
    std::vector<int> shift;  // one entry per index variable
    MultiPoly coeff;         // polynomial in the index variables and mu
};

struct Recurrence {
    std::vector<std::string> vars;
    std::vector<RecurrenceTerm> terms;

    // Scalar content removed, common monomial factor removed, and the
    // lexicographically largest shift's coefficient given a positive
    // leading rational. Guessing twice yields identical output.
    void normalize();

    // Exact zero at every base point whose whole support lies in data.
    bool annihilates(const DataMap& data) const;

    std::string to_string() const;
};

enum class GuessMode { SYMBOLIC_MU, SPECIALIZED_MU };

struct AnsatzSpec {
    std::vector<std::string> vars;
    std::vector<std::vector<int>> support;  // shift vectors
    std::vector<int> degree_bounds;         // max degree per index variable
    int mu_degree_bound = 0;
    GuessMode mode = GuessMode::SPECIALIZED_MU;
};

/// Basis of recurrences annihilating the data, each validated on every
/// supplied point including the held-out share (at least 20% of the base
/// points are excluded from the linear system and used only to reject
/// spurious candidates). Throws InsufficientData unless the system is
/// overdetermined by a factor of at least 2. An empty result is the
/// legitimate "no recurrence found" outcome.
std::vector<Recurrence> guess(const DataMap& data, const AnsatzSpec& ansatz);

/// The uniquely determined value at `frontier`. Each term orientation is
/// tried in order: the frontier aligned with that term, all other support
/// points looked up in `known`, and the term's coefficient required to be
/// nonzero at the base point. Throws LeadingCoefficientVanishes when every
/// orientation with complete dependencies has a vanishing coefficient, and
/// MissingDependency when no orientation has its dependencies in `known`.
MuRat apply(const Recurrence& rec, const DataMap& known, const IndexTuple& frontier);

struct ConsistencyIssue {
    IndexTuple point;
    std::string detail;
};

/// Re-derives every data point reachable by each recurrence from the
/// remaining data and reports disagreements; an empty issue list means the
/// recurrences are mutually consistent on their overlap region.
std::vector<ConsistencyIssue> consistency_check(const std::vector<Recurrence>& recs,
                                                const DataMap& data);

}  // namespace holodet
