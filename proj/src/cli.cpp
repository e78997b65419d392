#include "corecount/cli.hpp"

#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "corecount/ehrhart.hpp"
#include "corecount/fibre.hpp"
#include "corecount/json_io.hpp"

namespace corecount {

namespace {

std::vector<std::int64_t> parse_margin_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("bad margin list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty margin list");
    return out;
}

void print_quasipoly(const Quasipolynomial& q, bool as_json, std::ostream& out,
                     const std::string& reason = {}) {
    if (as_json) {
        nlohmann::json j = to_json(q);
        if (!reason.empty()) j["reason"] = reason;
        out << j.dump() << "\n";
        return;
    }
    if (!reason.empty()) out << "zero quasipolynomial (" << reason << ")\n";
    for (const auto& b : q.branches()) {
        out << "n = " << q.period() << "k";
        std::int64_t r = b.residue % q.period();
        if (r != 0) out << "+" << r;
        out << ": " << b.poly.str();
        if (b.certified_lo <= b.certified_hi)
            out << "   [checked k = " << b.certified_lo << ".." << b.certified_hi << "]";
        out << "\n";
    }
    out << "period " << q.period() << ", degree " << q.degree() << ", exact for n >= "
        << q.threshold() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumeration of core partitions with prescribed smaller cores"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // core
    auto* cmd_core = app.add_subcommand("core", "compute the t-core of a partition");
    std::string core_partition;
    std::int64_t core_t = 1;
    cmd_core->add_option("--partition", core_partition, "partition, e.g. 5,4,3,1 (- for empty)")
        ->required();
    cmd_core->add_option("--t", core_t, "hook size t >= 1")->required()->check(CLI::PositiveNumber);

    // count
    auto* cmd_count = app.add_subcommand("count", "count m-cores with prescribed s- and t-cores");
    std::int64_t cs = 1, ct = 1, ck = 0, ccap = kDefaultBruteCap;
    std::string csigma, ctau, cmethod = "auto";
    cmd_count->add_option("--s", cs)->required()->check(CLI::PositiveNumber);
    cmd_count->add_option("--t", ct)->required()->check(CLI::PositiveNumber);
    cmd_count->add_option("--sigma", csigma, "s-core")->required();
    cmd_count->add_option("--tau", ctau, "t-core")->required();
    cmd_count->add_option("--k", ck, "length bound")->required()->check(CLI::NonNegativeNumber);
    cmd_count->add_option("--method", cmethod)->check(CLI::IsMember({"auto", "brute", "symbolic"}));
    cmd_count->add_option("--cap", ccap, "enumeration guard");

    // quasipoly
    auto* cmd_quasi = app.add_subcommand("quasipoly", "the counting quasipolynomial");
    std::int64_t qs = 1, qt = 1, qa = 1, qb = 1;
    std::string qsigma, qtau;
    bool q_divisor = false, q_novalidate = false;
    cmd_quasi->add_option("--s", qs)->check(CLI::PositiveNumber);
    cmd_quasi->add_option("--t", qt)->check(CLI::PositiveNumber);
    cmd_quasi->add_option("--sigma", qsigma);
    cmd_quasi->add_option("--tau", qtau);
    cmd_quasi->add_flag("--divisor", q_divisor, "divisor mode: count a-cores by their b-core");
    cmd_quasi->add_option("--a", qa)->check(CLI::PositiveNumber);
    cmd_quasi->add_option("--b", qb)->check(CLI::PositiveNumber);
    cmd_quasi->add_flag("--no-validate", q_novalidate, "skip the direct-enumeration re-check");

    // volume
    auto* cmd_volume = app.add_subcommand("volume", "relative volume of a transportation polytope");
    std::int64_t vs = 0, vt = 0;
    std::string vrows, vcols;
    cmd_volume->add_option("--s", vs);
    cmd_volume->add_option("--t", vt);
    cmd_volume->add_option("--rows", vrows, "explicit row margins, e.g. 2,2,2");
    cmd_volume->add_option("--cols", vcols, "explicit column margins, e.g. 3,3");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "compare quasipolynomial against brute force");
    std::int64_t ws = 1, wt = 1, wmin = 0, wmax = 0, wcap = kDefaultBruteCap;
    std::string wsigma, wtau;
    cmd_verify->add_option("--s", ws)->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--t", wt)->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--sigma", wsigma)->required();
    cmd_verify->add_option("--tau", wtau)->required();
    cmd_verify->add_option("--max-k", wmax)->required()->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--min-k", wmin)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--cap", wcap, "enumeration guard");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all t-cores of length <= k");
    std::int64_t es = 1, ek = 0, ecap = 1'000'000;
    cmd_enum->add_option("--t", es)->required()->check(CLI::PositiveNumber);
    cmd_enum->add_option("--k", ek)->required()->check(CLI::NonNegativeNumber);
    cmd_enum->add_option("--cap", ecap, "output size guard");

    std::vector<const char*> argv;
    argv.push_back("corecount");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_core->parsed()) {
            Partition p = Partition::parse(core_partition);
            Partition c = core(p, core_t);
            if (as_json)
                out << nlohmann::json{{"partition", p.str()}, {"t", core_t}, {"core", c.str()}}.dump()
                    << "\n";
            else
                out << c.str() << "\n";
            return 0;
        }

        if (cmd_count->parsed()) {
            FibreProblem prob(cs, ct, Partition::parse(csigma), Partition::parse(ctau));
            std::string note, used = cmethod;
            Int value;
            const bool brute_feasible = multichoose(prob.m(), ck) <= ccap;
            if (!prob.compatible()) note = "d-core mismatch: the fibre is empty";
            auto symbolic = [&]() {
                if (!prob.compatible()) return Int(0);
                if (ck < prob.ell0()) {
                    used = "brute (k below ell0)";
                    return count_brute(prob, ck, ccap);
                }
                return count_general(prob, ck);
            };
            if (cmethod == "brute") {
                value = count_brute(prob, ck, ccap);
            } else if (cmethod == "symbolic") {
                value = symbolic();
            } else {
                value = symbolic();
                if (brute_feasible) {
                    Int check = count_brute(prob, ck, ccap);
                    if (check != value) {
                        err << "engine mismatch: symbolic " << value.get_str() << " vs brute "
                            << check.get_str() << "\n";
                        return 3;
                    }
                    used = "auto (symbolic, brute-checked)";
                } else {
                    used = "auto (symbolic)";
                }
            }
            if (as_json) {
                nlohmann::json j = to_json(prob);
                j["k"] = ck;
                j["count"] = value.get_str();
                j["method"] = used;
                if (!note.empty()) j["note"] = note;
                out << j.dump() << "\n";
            } else {
                out << value.get_str() << "\n";
                if (!note.empty()) err << "note: " << note << "\n";
            }
            return 0;
        }

        if (cmd_quasi->parsed()) {
            if (q_divisor) {
                Quasipolynomial q = divisor_quasipoly(qa, qb, Partition::parse(qsigma));
                print_quasipoly(q, as_json, out);
                return 0;
            }
            FibreProblem prob(qs, qt, Partition::parse(qsigma), Partition::parse(qtau));
            FibreQuasipolyOptions opts;
            opts.validate_brute = !q_novalidate;
            Quasipolynomial q = fibre_quasipolynomial(prob, opts);
            print_quasipoly(q, as_json, out, prob.compatible() ? "" : "d-core mismatch");
            return 0;
        }

        if (cmd_volume->parsed()) {
            if (!vrows.empty() || !vcols.empty()) {
                TransportationSpec spec{parse_margin_list(vrows), parse_margin_list(vcols)};
                Rat v = relative_volume(spec);
                if (as_json)
                    out << nlohmann::json{{"rows", spec.rows},
                                          {"cols", spec.cols},
                                          {"volume", to_string(v)},
                                          {"dimension",
                                           (static_cast<std::int64_t>(spec.rows.size()) - 1) *
                                               (static_cast<std::int64_t>(spec.cols.size()) - 1)}}
                                 .dump()
                        << "\n";
                else
                    out << to_string(v) << "\n";
                return 0;
            }
            if (vs < 1 || vt < 1)
                throw std::invalid_argument("volume: give --s/--t or --rows/--cols");
            VolumeReport report = uniform_volume(vs, vt);
            if (as_json)
                out << to_json(report).dump() << "\n";
            else
                out << to_string(report.volume) << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            FibreProblem prob(ws, wt, Partition::parse(wsigma), Partition::parse(wtau));
            FibreQuasipolyOptions opts;
            opts.validate_brute = false;  // the whole range is checked below
            Quasipolynomial q = fibre_quasipolynomial(prob, opts);
            VerifyReport report = verify_quasipoly(
                q, [&](std::int64_t n) { return count_brute(prob, n, wcap); }, wmin, wmax);
            if (as_json) {
                out << to_json(report).dump() << "\n";
            } else if (report.ok) {
                out << "OK [" << report.lo << "," << report.hi << "]\n";
            } else {
                out << "MISMATCH at n=" << report.first_mismatch << ": expected "
                    << report.expected.get_str() << ", got " << report.got.get_str() << "\n";
            }
            return report.ok ? 0 : 1;
        }

        if (cmd_enum->parsed()) {
            if (multichoose(es, ek) > ecap) throw guard_error("enumerate: output cap exceeded");
            auto cores = enumerate_cores(es, ek);
            if (as_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& p : cores) j.push_back(p.str());
                out << j.dump() << "\n";
            } else {
                for (const auto& p : cores) out << p.str() << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace corecount
