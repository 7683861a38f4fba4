#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>

#include "polyhodge/d2sys.hpp"
#include "polyhodge/dinv.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/fan.hpp"
#include "polyhodge/json_io.hpp"
#include "polyhodge/nerve.hpp"
#include "polyhodge/selfcheck.hpp"
#include "polyhodge/system.hpp"
#include "polyhodge/toric.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;
using nlohmann::json;

namespace {

struct InputOpts {
    std::string zoo_name;
    std::string file_path;

    void attach(CLI::App* cmd) {
        auto* z = cmd->add_option("--zoo", zoo_name, "built-in polytope (see `zoo`)");
        auto* f = cmd->add_option("--file", file_path, "polytope JSON file");
        z->excludes(f);
        f->excludes(z);
    }

    Polytope load() const {
        if (!zoo_name.empty()) return zoo(zoo_name);
        if (!file_path.empty()) {
            std::ifstream in(file_path);
            if (!in) throw UnknownName("cannot open file: " + file_path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw UnknownName(std::string("malformed JSON: ") + e.what());
            }
            return polytope_from_json(j);
        }
        throw UnknownName("no input: pass --zoo NAME or --file PATH");
    }
};

json input_echo(const Polytope& p) {
    json j;
    j["name"] = p.name();
    j["dim"] = p.dim();
    j["f_vector"] = p.f_vector().counts;
    return j;
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // plain text rendering: scalar fields first, then checks as a table
    if (report.contains("input")) {
        const auto& in = report["input"];
        std::cout << "polytope: " << in["name"].get<std::string>() << "  dim " << in["dim"]
                  << "  f-vector";
        for (const auto& c : in["f_vector"]) std::cout << " " << c;
        std::cout << "\n";
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "input" || key == "checks") continue;
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
    if (report.contains("checks")) {
        std::cout << "\n" << std::left << std::setw(68) << "check" << std::setw(8) << "status"
                  << "lhs / rhs\n";
        for (const auto& c : report["checks"]) {
            std::string status = c.value("skipped", false) ? "skip"
                                 : c["pass"].get<bool>()   ? "pass"
                                                           : "FAIL";
            std::cout << std::left << std::setw(68) << c["name"].get<std::string>()
                      << std::setw(8) << status;
            if (c.contains("lhs")) std::cout << c["lhs"].get<std::string>();
            if (c.contains("rhs") && !c["rhs"].get<std::string>().empty())
                std::cout << " / " << c["rhs"].get<std::string>();
            std::cout << "\n";
        }
    }
}

json check_entry(const std::string& name, bool pass, const std::string& lhs,
                 const std::string& rhs) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    c["lhs"] = lhs;
    c["rhs"] = rhs;
    return c;
}

std::string dims_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// true if all (non-skipped) checks pass
bool checks_ok(const json& report) {
    if (!report.contains("checks")) return true;
    for (const auto& c : report["checks"])
        if (!c.value("skipped", false) && !c["pass"].get<bool>()) return false;
    return true;
}

IntVec parse_degree(const std::string& text) {
    IntVec out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(Integer(token));
    return out;
}

json run_dinv(const Polytope& p, const std::string& crosscheck) {
    json report;
    report["input"] = input_echo(p);
    auto prof = d_profile(p);
    report["dims"] = prof.dims;
    json checks = json::array();
    bool want_all = crosscheck == "all";
    if (want_all || crosscheck == "dual") {
        auto dual = d_profile_dual_route(p).dims;
        checks.push_back(
            check_entry("dual route", dual == prof.dims, dims_str(prof.dims), dims_str(dual)));
    }
    if (want_all || crosscheck == "closedform") {
        for (const auto& c : closed_form_checks(p)) {
            if (!c.applicable) continue;
            auto entry = check_entry("closed form: " + c.name, c.pass, std::to_string(c.lhs),
                                     std::to_string(c.rhs));
            // the omitted-empty-face variant is informational only
            if (c.name.find("omitted") != std::string::npos) entry["skipped"] = true;
            checks.push_back(std::move(entry));
        }
    }
    if (want_all || crosscheck == "normalfan")
        checks.push_back(check_entry("normal fan sequence", normal_fan_sequence_check(p), "", ""));
    if (want_all || crosscheck == "flags") {
        if (p.dim() < 3) {
            auto entry = check_entry("flag kernel", true, "not applicable below dim 3", "");
            entry["skipped"] = true;
            checks.push_back(std::move(entry));
        } else {
            try {
                int k = d2_via_flags(p);
                checks.push_back(check_entry("flag kernel equals direct D^2", k == prof.dims[2],
                                             std::to_string(k), std::to_string(prof.dims[2])));
            } catch (const HypothesisViolated& e) {
                auto entry = check_entry("flag kernel", true, e.what(), "");
                entry["skipped"] = true;
                checks.push_back(std::move(entry));
            }
        }
    }
    if (!checks.empty()) report["checks"] = std::move(checks);
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral Hodge-type invariants (D^k, H^{p,q}) and graded toric "
                 "deformation spaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON");

    InputOpts in_dinv, in_hodge, in_mink, in_d2, in_clean, in_cert, in_nerve, in_toric;
    std::string crosscheck = "dual";
    std::string hodge_fan = "normal";
    int nerve_ell = 3;
    std::string degree_text;
    std::string box_text;
    std::string zoo_arg;
    int criterion = 0;

    auto* cmd_dinv = app.add_subcommand("dinv", "D-invariant profile");
    cmd_dinv->fallthrough();
    in_dinv.attach(cmd_dinv);
    cmd_dinv->add_option("--crosscheck", crosscheck,
                         "dual|closedform|normalfan|flags|all (default dual)");

    auto* cmd_hodge = app.add_subcommand("hodge", "Hodge space dimensions of a fan");
    cmd_hodge->fallthrough();
    in_hodge.attach(cmd_hodge);
    cmd_hodge->add_option("--fan", hodge_fan, "normal|cone (default normal)");

    auto* cmd_mink = app.add_subcommand("minkowski", "Minkowski summand space");
    cmd_mink->fallthrough();
    in_mink.attach(cmd_mink);

    auto* cmd_d2 = app.add_subcommand("d2system", "flag equation system for D^2");
    cmd_d2->fallthrough();
    in_d2.attach(cmd_d2);

    auto* cmd_clean = app.add_subcommand("clean", "cleaning fixpoint");
    cmd_clean->fallthrough();
    in_clean.attach(cmd_clean);

    auto* cmd_cert = app.add_subcommand("certify", "vanishing certificate for D^2");
    cmd_cert->fallthrough();
    in_cert.attach(cmd_cert);

    auto* cmd_nerve = app.add_subcommand("nerve-e2", "E2 entries of the skeleton covering");
    cmd_nerve->fallthrough();
    in_nerve.attach(cmd_nerve);
    cmd_nerve->add_option("--ell", nerve_ell, "skeleton dimension (default 3)");

    auto* cmd_toric = app.add_subcommand("toric", "graded cotangent cohomology of the cone");
    cmd_toric->fallthrough();
    in_toric.attach(cmd_toric);
    auto* cmd_t1 = cmd_toric->add_subcommand("t1", "dim T^1(-R)");
    auto* cmd_t2 = cmd_toric->add_subcommand("t2", "dim T^2(-R)");
    auto* cmd_sweep = cmd_toric->add_subcommand("sweep", "degree box sweep");
    for (auto* c : {cmd_t1, cmd_t2, cmd_sweep}) c->fallthrough();
    for (auto* c : {cmd_t1, cmd_t2})
        c->add_option("--degree", degree_text, "comma-separated integers")->required();
    cmd_sweep->add_option("--box", box_text, "lo,hi bounds for every coordinate")->required();
    cmd_toric->require_subcommand(1);

    auto* cmd_zoo = app.add_subcommand("zoo", "built-in polytopes");
    cmd_zoo->fallthrough();
    cmd_zoo->add_option("name", zoo_arg, "instance to dump as JSON");

    auto* cmd_self = app.add_subcommand("selfcheck", "full regression table");
    cmd_self->fallthrough();
    cmd_self->add_option("--criterion", criterion, "run a single criterion group (1..9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    json report;
    int exit_code = 0;
    try {
        if (*cmd_dinv) {
            report = run_dinv(in_dinv.load(), crosscheck);
            if (!checks_ok(report)) exit_code = 1;
        } else if (*cmd_hodge) {
            auto p = in_hodge.load();
            report["input"] = input_echo(p);
            OrientedFan fan = (hodge_fan == "cone") ? cone_fan(p) : normal_fan(p);
            json table = json::array();
            for (int q = 0; q <= fan.ambient_dim; ++q) {
                json row = json::array();
                for (int pp = 0; pp <= fan.ambient_dim; ++pp)
                    row.push_back(hodge_number(fan, pp, q));
                table.push_back(std::move(row));
            }
            report["fan"] = hodge_fan;
            report["hpq_rows_q_cols_p"] = std::move(table);
        } else if (*cmd_mink) {
            auto p = in_mink.load();
            report["input"] = input_echo(p);
            auto space = minkowski_space(p);
            report["edges"] = space.edges.size();
            report["dimension"] = space.dimension();
            json basis = json::array();
            for (const auto& b : space.basis) {
                json row = json::array();
                for (const auto& x : b) row.push_back(rational_to_json(x));
                basis.push_back(std::move(row));
            }
            report["basis"] = std::move(basis);
        } else if (*cmd_d2) {
            auto p = in_d2.load();
            report["input"] = input_echo(p);
            if (p.dim() == 3) {
                report["route"] = "direct";
                report["kernel_dim"] = d_profile(p).dims[2];
            } else {
                auto sys = build_flag_system(p);
                report["route"] = "flag-system";
                report["variables"] = sys.vars.size();
                report["equations"] = {{"vertex_4face", sys.rows_family1},
                                       {"affine_relations", sys.rows_family2},
                                       {"reference_face", sys.rows_family3}};
                report["kernel_dim"] = kernel_basis(sys.equations).size();
            }
        } else if (*cmd_clean) {
            auto p = in_clean.load();
            report["input"] = input_echo(p);
            auto st = clean(p);
            report["clean_vertices"] = st.clean_vertices;
            report["clean_2faces"] = st.clean_2faces;
            report["everything_clean"] = st.everything_clean;
            json hist = json::array();
            for (auto [kind, idx] : st.history)
                hist.push_back(json::array({std::string(1, kind), idx}));
            report["history"] = std::move(hist);
        } else if (*cmd_cert) {
            auto p = in_cert.load();
            report["input"] = input_echo(p);
            auto v = certify_vanishing(p);
            report["verdict"] = v.vanishes_by_theorem ? "VanishesByTheorem" : "NotApplicable";
            if (!v.vanishes_by_theorem) report["reason"] = v.reason;
        } else if (*cmd_nerve) {
            auto p = in_nerve.load();
            report["input"] = input_echo(p);
            auto nv = build_nerve(p, nerve_ell);
            report["ell"] = nerve_ell;
            report["cover_faces"] = nv.cover_faces.size();
            json table = json::array();
            for (int q = 0; q <= 1; ++q)
                for (int pp = 0; pp <= nerve_ell; ++pp) {
                    json cell;
                    cell["p"] = pp;
                    cell["q"] = q;
                    cell["dim"] = e2_entry(nv, pp, q);
                    table.push_back(std::move(cell));
                }
            report["e2"] = std::move(table);
        } else if (*cmd_toric) {
            auto c = gorenstein_cone(in_toric.load());
            report["input"] = input_echo(c.lattice_polytope);
            if (*cmd_sweep) {
                auto bounds = parse_degree(box_text);
                if (bounds.size() != 2) throw UnknownName("--box wants lo,hi");
                long lo = bounds[0].get_si(), hi = bounds[1].get_si();
                if (lo > hi) throw UnknownName("--box wants lo <= hi");
                std::vector<Degree> degrees{{}};
                for (int pos = 0; pos <= c.n(); ++pos) {
                    std::vector<Degree> next;
                    for (const auto& d : degrees)
                        for (long v = lo; v <= hi; ++v) {
                            Degree e = d;
                            e.push_back(v);
                            next.push_back(std::move(e));
                        }
                    degrees.swap(next);
                }
                std::vector<json> cells(degrees.size());
#pragma omp parallel for schedule(dynamic)
                for (long long i = 0; i < static_cast<long long>(degrees.size()); ++i) {
                    json cell;
                    try {
                        cell["t1"] = t_graded(c, 1, degrees[i]);
                    } catch (const DegreeUnsupported&) {
                        cell["t1"] = "unsupported";
                    }
                    try {
                        cell["t2"] = t_graded(c, 2, degrees[i]);
                    } catch (const DegreeUnsupported&) {
                        cell["t2"] = "unsupported";
                    }
                    cells[i] = std::move(cell);
                }
                json sweep;
                for (size_t i = 0; i < degrees.size(); ++i) {
                    std::string key;
                    for (size_t j = 0; j < degrees[i].size(); ++j)
                        key += (j ? "," : "") + degrees[i][j].get_str();
                    sweep[key] = std::move(cells[i]);
                }
                report["sweep"] = std::move(sweep);
            } else {
                auto R = parse_degree(degree_text);
                if (static_cast<int>(R.size()) != c.n() + 1)
                    throw UnknownName("--degree wants " + std::to_string(c.n() + 1) +
                                      " integers for this polytope");
                int k = *cmd_t1 ? 1 : 2;
                try {
                    report[*cmd_t1 ? "t1" : "t2"] = t_graded(c, k, R);
                } catch (const DegreeUnsupported& e) {
                    report[*cmd_t1 ? "t1" : "t2"] = "unsupported";
                    report["reason"] = e.what();
                }
            }
        } else if (*cmd_zoo) {
            if (zoo_arg.empty()) {
                report["names"] = zoo_names();
            } else {
                report = polytope_to_json(zoo(zoo_arg));
            }
        } else if (*cmd_self) {
            auto results = criterion > 0 ? run_criterion(criterion) : run_selfcheck();
            json checks = json::array();
            bool all_ok = true;
            for (const auto& r : results) {
                json c = check_entry("[criterion " + std::to_string(r.criterion) + "] " + r.name,
                                     r.pass, r.lhs, r.rhs);
                checks.push_back(std::move(c));
                all_ok = all_ok && r.pass;
            }
            report["checks"] = std::move(checks);
            report["pass"] = all_ok;
            if (!all_ok) exit_code = 1;
        }
    } catch (const UnknownName& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NonIntegralVertices& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    }

    report["timing_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(report, as_json);
    return exit_code;
}
