#include "holodet/json_io.hpp"

#include <sstream>

namespace holodet {

namespace {

std::vector<int> parse_exponents(const std::string& key) {
    std::vector<int> e;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) e.push_back(std::stoi(part));
    return e;
}

IndexTuple parse_point(const std::string& key) {
    IndexTuple p;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) p.push_back(std::stol(part));
    return p;
}

std::string point_key(const IndexTuple& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace

json to_json(const MuPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(rational_to_string(p.coeff(k)));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

MuPoly mu_poly_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("polynomial JSON must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return MuPoly(std::move(coeffs));
}

json to_json(const MuRat& r) {
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

MuRat mu_rat_from_json(const json& j) {
    if (j.is_string()) return MuRat(parse_rational(j.get<std::string>()));
    if (j.is_array()) return MuRat(mu_poly_from_json(j));
    if (!j.contains("num") || !j.contains("den"))
        throw UsageError("rational function JSON needs \"num\" and \"den\"");
    return MuRat(mu_poly_from_json(j["num"]), mu_poly_from_json(j["den"]));
}

json to_json(const MultiPoly& p) {
    // Sparse map form: exponent key "e1,e2,...,emu" -> coefficient string.
    json obj = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[i]);
        }
        obj[key] = rational_to_string(c);
    }
    return obj;
}

MultiPoly multi_poly_from_json(const json& j, int nvars) {
    MultiPoly p(nvars);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto e = parse_exponents(it.key());
        if (static_cast<int>(e.size()) != nvars + 1)
            throw UsageError("exponent key arity mismatch in coefficient JSON");
        p.add_term(e, parse_rational(it.value().get<std::string>()));
    }
    return p;
}

json to_json(const Recurrence& r) {
    json terms = json::array();
    for (const auto& t : r.terms)
        terms.push_back(json{{"shift", t.shift}, {"coeff", to_json(t.coeff)}});
    return json{{"vars", r.vars}, {"terms", terms}};
}

Recurrence recurrence_from_json(const json& j) {
    Recurrence r;
    r.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& tj : j.at("terms")) {
        RecurrenceTerm t;
        t.shift = tj.at("shift").get<std::vector<int>>();
        t.coeff = multi_poly_from_json(tj.at("coeff"), static_cast<int>(r.vars.size()));
        r.terms.push_back(std::move(t));
    }
    return r;
}

json to_json(const DataMap& d) {
    json points = json::object();
    for (const auto& [p, v] : d) points[point_key(p)] = to_json(v);
    return json{{"points", points}};
}

DataMap data_map_from_json(const json& j) {
    const json& points = j.contains("points") ? j["points"] : j;
    DataMap d;
    for (auto it = points.begin(); it != points.end(); ++it)
        d.emplace(parse_point(it.key()), mu_rat_from_json(it.value()));
    return d;
}

json to_json(const VerificationReport& r) {
    json results = json::array();
    for (const auto& res : r.results) {
        json witnesses = json::array();
        for (const auto& w : res.witnesses)
            witnesses.push_back(json{{"identity", w.identity},
                                     {"index", w.index},
                                     {"expected", w.expected},
                                     {"actual", w.actual}});
        results.push_back(json{{"n", res.n},
                               {"status", res.pass ? "pass" : "fail"},
                               {"witness", witnesses},
                               {"millis", res.millis}});
    }
    return json{{"suite", r.suite},
                {"family", r.family},
                {"range_verified", r.range_verified},
                {"results", results}};
}

json to_json(const AnsatzSpec& a) {
    return json{{"vars", a.vars},
                {"support", a.support},
                {"degree_bounds", a.degree_bounds},
                {"mu_degree_bound", a.mu_degree_bound},
                {"mode", a.mode == GuessMode::SYMBOLIC_MU ? "symbolic" : "specialized"}};
}

AnsatzSpec ansatz_from_json(const json& j) {
    AnsatzSpec a;
    a.vars = j.at("vars").get<std::vector<std::string>>();
    a.support = j.at("support").get<std::vector<std::vector<int>>>();
    a.degree_bounds = j.at("degree_bounds").get<std::vector<int>>();
    a.mu_degree_bound = j.value("mu_degree_bound", 0);
    std::string mode = j.value("mode", "specialized");
    if (mode == "symbolic")
        a.mode = GuessMode::SYMBOLIC_MU;
    else if (mode == "specialized")
        a.mode = GuessMode::SPECIALIZED_MU;
    else
        throw UsageError("ansatz mode must be \"symbolic\" or \"specialized\"");
    return a;
}

}  // namespace holodet
