#include "holodet/closed_forms.hpp"

#include "holodet/mu_rat.hpp"

namespace holodet {

ClosedFormId closed_form_by_name(const std::string& name) {
    if (name == "thm34q") return ClosedFormId::THM34_QUOTIENT;
    if (name == "thm35") return ClosedFormId::THM35;
    if (name == "b01") return ClosedFormId::B01;
    if (name == "b10") return ClosedFormId::B10;
    if (name == "thm36") return ClosedFormId::THM36;
    if (name == "conj34") return ClosedFormId::CONJ34;
    if (name == "q1") return ClosedFormId::Q1;
    if (name == "q2") return ClosedFormId::Q2;
    if (name == "q3") return ClosedFormId::Q3;
    if (name == "q4") return ClosedFormId::Q4;
    if (name == "qconst") return ClosedFormId::Q_CONST;
    throw UsageError("unknown closed form: '" + name + "'");
}

namespace {

template <class K>
K dispatch(ClosedFormId id, long n, const K& mu) {
    switch (id) {
        case ClosedFormId::THM34_QUOTIENT:
            return thm34_quotient(n, mu);
        case ClosedFormId::THM35:
            return thm35_value(n, mu);
        case ClosedFormId::B01:
            return b01_value(n, mu);
        case ClosedFormId::B10:
            return b10_value(n, mu);
        case ClosedFormId::THM36:
            return thm36_value(n, mu);
        case ClosedFormId::CONJ34:
            return conj34_value(n, mu);
        case ClosedFormId::Q1:
            return q_formula(1, n, mu);
        case ClosedFormId::Q2:
            return q_formula(2, n, mu);
        case ClosedFormId::Q3:
            return q_formula(3, n, mu);
        case ClosedFormId::Q4:
            return q_formula(4, n, mu);
        case ClosedFormId::Q_CONST:
            return thm36_q_constant(mu);
    }
    throw UsageError("unhandled closed form id");
}

}  // namespace

MuRat evaluate_closed_form(ClosedFormId id, long n) { return dispatch(id, n, MuRat::mu()); }

Rational evaluate_closed_form_at(ClosedFormId id, long n, const Rational& mu) {
    return dispatch(id, n, mu);
}

}  // namespace holodet
