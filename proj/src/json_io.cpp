#include "corecount/json_io.hpp"

namespace corecount {

using nlohmann::json;

json to_json(const BetaSet& x) { return json(x.elements()); }

json to_json(const ResidueMultiset& f) {
    return json{{"t", f.modulus()}, {"counts", f.counts()}};
}

json to_json(const MarginPair& m) { return json{{"rows", m.rows}, {"cols", m.cols}}; }

json to_json(const Matching& m) { return json(m.entries); }

json to_json(const ConstraintSystem& sys) {
    return json{{"A", sys.A.rows}, {"b", sys.b}};
}

json to_json(const FibreProblem& p) {
    return json{{"s", p.s}, {"t", p.t}, {"sigma", p.sigma.str()}, {"tau", p.tau.str()}};
}

json to_json(const Quasipolynomial& q) {
    json branches = json::array();
    for (const auto& b : q.branches()) {
        json coeffs = json::array();
        for (const auto& c : b.poly.coefficients()) coeffs.push_back(to_string(c));
        json jb{{"residue", b.residue}, {"coeffs", coeffs}};
        if (b.certified_lo <= b.certified_hi)
            jb["certified"] = json::array({b.certified_lo, b.certified_hi});
        branches.push_back(std::move(jb));
    }
    return json{{"period", q.period()},
                {"anchor", q.anchor()},
                {"threshold", q.threshold()},
                {"degree", q.degree()},
                {"branches", std::move(branches)}};
}

json to_json(const VolumeReport& report) {
    return json{{"s", report.s},
                {"t", report.t},
                {"volume", to_string(report.volume)},
                {"dimension", report.dimension}};
}

json to_json(const VerifyReport& report) {
    json j{{"ok", report.ok}, {"lo", report.lo}, {"hi", report.hi}};
    if (!report.ok) {
        j["first_mismatch"] = report.first_mismatch;
        j["expected"] = to_string(report.expected);
        j["got"] = to_string(report.got);
    }
    return j;
}

FibreProblem fibre_problem_from_json(const json& j) {
    return FibreProblem(j.at("s").get<std::int64_t>(), j.at("t").get<std::int64_t>(),
                        Partition::parse(j.at("sigma").get<std::string>()),
                        Partition::parse(j.at("tau").get<std::string>()));
}

Quasipolynomial quasipoly_from_json(const json& j) {
    std::vector<QuasiBranch> branches;
    for (const auto& jb : j.at("branches")) {
        QuasiBranch b;
        b.residue = jb.at("residue").get<std::int64_t>();
        std::vector<Rat> coeffs;
        for (const auto& c : jb.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
        b.poly = ExactPolynomial(std::move(coeffs));
        if (jb.contains("certified")) {
            b.certified_lo = jb["certified"][0].get<std::int64_t>();
            b.certified_hi = jb["certified"][1].get<std::int64_t>();
        }
        branches.push_back(std::move(b));
    }
    return Quasipolynomial(j.at("period").get<std::int64_t>(), j.at("anchor").get<std::int64_t>(),
                           j.at("threshold").get<std::int64_t>(), std::move(branches));
}

}  // namespace corecount
