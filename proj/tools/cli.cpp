// spinlab command-line interface.
//
// Subcommands: weights, rmatrix, lattice, verify.  All serialized numbers are
// exact "p/q" strings; JSON artifacts carry "schema":"v1".  Exit codes:
// 0 = success, 1 = verification failure, 2 = usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "spinlab/rmatrix.hpp"
#include "spinlab/sixvertex.hpp"
#include "spinlab/yangian.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace spinlab;
using json = nlohmann::ordered_json;

namespace {

json jpoly(const MPoly& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({e, q_to_string(c)});
    return {{"vars", p.table()->names}, {"terms", terms}};
}

json jrfunc(const RFunc& f) { return {{"num", jpoly(f.num())}, {"den", jpoly(f.den())}}; }

json jmatrix(const OpMatrix& m) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (auto& r : m.rows()) rows.push_back(r);
    for (auto& c : m.cols()) cols.push_back(c);
    for (size_t r = 0; r < m.nrows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.ncols(); ++c) row.push_back(jrfunc(m.at(r, c)));
        entries.push_back(row);
    }
    return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

json jreport(const Report& rep) {
    json out = json::array();
    for (auto& c : rep.checks) {
        json e{{"relation", c.relation},
               {"grade", c.grade},
               {"indices", c.indices},
               {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) e["counterexample"] = c.counterexample;
        out.push_back(e);
    }
    return out;
}

Perm parse_perm(const std::string& s, int w) {
    if (s == "id") return perm_identity(w);
    Perm p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    Perm chk = p;
    std::sort(chk.begin(), chk.end());
    if (chk != perm_identity(w))
        throw CLI::ValidationError("--sigma", "not a permutation of 1.." +
                                                  std::to_string(w));
    return p;
}

SpinProfile parse_profile(const std::vector<int>& ell) {
    for (int l : ell)
        if (l < 1) throw CLI::ValidationError("--ell", "spins must be >= 1");
    if (ell.empty()) throw CLI::ValidationError("--ell", "profile required");
    return {(int)ell.size(), ell};
}

// --- output / golden-file plumbing -----------------------------------------

struct OutOpts {
    std::string path;    // empty = stdout
    std::string golden;  // compare serialized output against golden file
    std::string write_golden;
};

void add_out_opts(CLI::App* cmd, OutOpts& o) {
    cmd->add_option("--output", o.path, "write the artifact to this file");
    cmd->add_option("--golden", o.golden,
                    "compare output byte-for-byte against "
                    "$SPINLAB_GOLDEN_DIR/<name>");
    cmd->add_option("--write-golden", o.write_golden,
                    "write output to $SPINLAB_GOLDEN_DIR/<name>");
}

std::string golden_dir() {
    const char* d = std::getenv("SPINLAB_GOLDEN_DIR");
    if (!d || !*d)
        throw CLI::ValidationError("--golden", "SPINLAB_GOLDEN_DIR is not set");
    return d;
}

int emit(const std::string& text, const OutOpts& o) {
    if (!o.write_golden.empty()) {
        std::ofstream f(golden_dir() + "/" + o.write_golden);
        if (!f) {
            std::cerr << "cannot write golden file: " << o.write_golden << "\n";
            return 1;
        }
        f << text;
    }
    if (!o.golden.empty()) {
        std::ifstream f(golden_dir() + "/" + o.golden);
        if (!f) {
            std::cerr << "golden file missing: " << o.golden << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        if (buf.str() != text) {
            std::cerr << "golden mismatch: " << o.golden << "\n";
            return 1;
        }
    }
    if (!o.path.empty()) {
        std::ofstream f(o.path);
        f << text;
    } else {
        std::cout << text;
    }
    return 0;
}

// --- parallel job runner ----------------------------------------------------
// Jobs are independent and pure; results land in a pre-indexed vector, so the
// serialized output is byte-identical for any thread count.

struct Job {
    std::string name;
    std::function<Report()> run;
};

std::vector<Report> run_jobs(const std::vector<Job>& jobs, int threads) {
    std::vector<Report> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs.size();
             i = next.fetch_add(1))
            results[i] = jobs[i].run();
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

// --- weights ----------------------------------------------------------------

int cmd_weights(const std::vector<int>& ell, int v, const std::string& sigma_s,
                bool restrict_flag, const std::string& format,
                const OutOpts& out) {
    SpinProfile prof = parse_profile(ell);
    Perm sigma = parse_perm(sigma_s, prof.w);
    Ctx cx(prof, v);
    std::ostringstream text;
    if (restrict_flag) {
        OpMatrix m = restriction_matrix(cx, sigma, v);
        if (format == "latex") {
            text << latex_matrix(m) << "\n";
        } else if (format == "ascii") {
            text << m.to_string();
        } else {
            json j{{"schema", "v1"},   {"command", "weights"},
                   {"ell", prof.ell},  {"v", v},
                   {"sigma", sigma},   {"restriction_matrix", jmatrix(m)}};
            text << j.dump(1) << "\n";
        }
    } else {
        json list = json::array();
        std::ostringstream atext;
        for (const FixedPoint& lam : enumerate_fixed_points(prof, v)) {
            WeightFunction wf = weight_function(cx, sigma, lam);
            if (format == "json") {
                list.push_back({{"sigma", sigma},
                                {"lambda", lam},
                                {"value", jpoly(wf.value)}});
            } else {
                atext << "W[";
                for (size_t i = 0; i < lam.size(); ++i)
                    atext << (i ? "," : "") << lam[i];
                atext << "] = " << wf.value.to_string() << "\n";
            }
        }
        if (format == "json") {
            json j{{"schema", "v1"}, {"command", "weights"}, {"ell", prof.ell},
                   {"v", v},         {"sigma", sigma},       {"weights", list}};
            text << j.dump(1) << "\n";
        } else {
            text << atext.str();
        }
    }
    return emit(text.str(), out);
}

// --- rmatrix ----------------------------------------------------------------

int cmd_rmatrix(const std::vector<int>& ell, int v,
                const std::string& sigma_prime_s, const std::string& sigma_s,
                bool closed_form, bool concrete, const std::string& format,
                const OutOpts& out) {
    SpinProfile prof = parse_profile(ell);
    Ctx cx(prof, v);
    std::ostringstream text;
    OpMatrix m(std::vector<Label>{}, std::vector<Label>{}, cx.vt);
    json extra;
    if (prof.w == 2 && sigma_prime_s == "id" && sigma_s == "21") {
        // specialized w=2 form in z := z_1 - z_2
        m = r_matrix_w2(cx, v, concrete);
        if (closed_form) {
            bool ok = true;
            for (int j = 0; j <= v && ok; ++j)
                for (int jp = 0; jp <= v && ok; ++jp)
                    ok = r_closed_form_w2(cx, j, jp, v, concrete) == m.at(j, jp);
            extra["closed_form_matches"] = ok;
            if (!ok) {
                std::cerr << "closed form mismatch\n";
                return 1;
            }
        }
    } else {
        Perm sp = parse_perm(sigma_prime_s, prof.w);
        Perm sg = sigma_s == "21" ? Perm{2, 1} : parse_perm(sigma_s, prof.w);
        m = r_matrix(cx, sp, sg, v, concrete).mat;
    }
    if (format == "latex") {
        text << latex_matrix(m) << "\n";
    } else if (format == "ascii") {
        text << m.to_string();
    } else {
        json j{{"schema", "v1"}, {"command", "rmatrix"}, {"ell", prof.ell},
               {"v", v},         {"matrix", jmatrix(m)}};
        for (auto& [k, val] : extra.items()) j[k] = val;
        text << j.dump(1) << "\n";
    }
    return emit(text.str(), out);
}

// --- lattice ----------------------------------------------------------------

int cmd_lattice(const std::vector<int>& ell, int v,
                const std::vector<int>& boundary, bool dump_states,
                const std::string& format, const OutOpts& out) {
    SpinProfile prof = parse_profile(ell);
    if ((int)boundary.size() != prof.w)
        throw CLI::ValidationError("--boundary", "needs w entries");
    Ctx cx(prof, v);
    std::vector<LatticeState> states;
    try {
        states = enumerate_states(prof, v, boundary);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--boundary", e.what());
    }
    MPoly pf = partition_function(cx, boundary);
    MPoly pre = tildeW_prefactor(cx, boundary);
    bool thm = pf == pre * weight_function_id(cx, boundary);
    std::ostringstream text;
    if (format == "json") {
        json st = json::array();
        if (dump_states)
            for (auto& s : states)
                st.push_back({{"vertical", s.vertical},
                              {"weight", jpoly(boltzmann_weight(cx, s))}});
        json j{{"schema", "v1"},
               {"command", "lattice"},
               {"ell", prof.ell},
               {"v", v},
               {"boundary", boundary},
               {"partition_function", jpoly(pf)},
               {"prefactor", jpoly(pre)},
               {"theorem_tildeW", thm ? "pass" : "fail"}};
        if (dump_states) j["states"] = st;
        text << j.dump(1) << "\n";
    } else {
        if (dump_states)
            for (auto& s : states)
                text << ascii_state(s)
                     << "weight = " << boltzmann_weight(cx, s).to_string()
                     << "\n\n";
        text << "partition function = " << pf.to_string() << "\n";
        text << "prefactor = " << pre.to_string() << "\n";
        text << "theorem tildeW: " << (thm ? "pass" : "fail") << "\n";
    }
    int rc = emit(text.str(), out);
    return rc != 0 ? rc : (thm ? 0 : 1);
}

// --- verify -----------------------------------------------------------------

std::vector<Job> suite_jobs(const std::string& suite,
                            const std::vector<int>& ell_opt, int vmax_opt,
                            const std::string& mode, unsigned seed,
                            int trials) {
    std::vector<Job> jobs;
    bool custom = !ell_opt.empty();
    auto want = [&](const std::string& s) {
        return suite == "all" || suite == s;
    };

    if (want("yangian")) {
        std::vector<std::pair<SpinProfile, int>> profs;
        if (custom)
            profs = {{parse_profile(ell_opt), vmax_opt}};
        else
            profs = {{{1, {2}}, 2}, {{2, {1, 2}}, 2}, {{2, {2, 2}}, 2}};
        for (auto& [p, vm] : profs) {
            SpinProfile prof = p;
            int v = vm;
            std::string tag = "yangian";
            if (mode == "randomized") {
                jobs.push_back({tag, [prof, v, seed, trials] {
                                    return verify_yangian_relations_randomized(
                                        prof, v, 2, seed, trials);
                                }});
            } else {
                jobs.push_back({tag, [prof, v] {
                                    return verify_yangian_relations_symbolic(
                                        prof, v, 2);
                                }});
            }
        }
        if (!custom) {
            jobs.push_back({"evaluation", [] { return evaluation_rep_check(3); }});
            jobs.push_back({"coproduct", [] {
                                return coproduct_factorization_check({2, {1, 2}}, 2);
                            }});
        }
    }
    if (want("properties")) {
        std::vector<std::pair<SpinProfile, int>> profs;
        if (custom)
            profs = {{parse_profile(ell_opt), vmax_opt}};
        else
            profs = {{{2, {2, 2}}, 2}, {{3, {1, 2, 1}}, 2}};
        for (auto& [p, vm] : profs) {
            SpinProfile prof = p;
            for (int v = 1; v <= vm && v <= prof.sum(); ++v)
                jobs.push_back({"properties", [prof, v] {
                                    Ctx cx(prof, v);
                                    return verify_weight_properties(cx, v);
                                }});
        }
    }
    if (want("rmatrix")) {
        SpinProfile prof = custom ? parse_profile(ell_opt) : SpinProfile{2, {2, 2}};
        int vm = custom ? vmax_opt : 2;
        jobs.push_back({"rmatrix", [prof, vm] {
                            return verify_rmatrix_properties(prof, vm);
                        }});
    }
    if (want("lattice")) {
        std::vector<std::pair<SpinProfile, int>> profs;
        if (custom)
            profs = {{parse_profile(ell_opt), vmax_opt}};
        else
            profs = {{{2, {2, 2}}, 2}, {{3, {1, 2, 1}}, 2}, {{2, {1, 3}}, 3}};
        for (auto& [p, vm] : profs) {
            SpinProfile prof = p;
            int v = vm;
            jobs.push_back(
                {"lattice", [prof, v] { return theorem_tildeW_check(prof, v); }});
        }
    }
    if (want("sixvertex")) {
        jobs.push_back({"sixvertex", [] { return check_sixvertex_identities(); }});
        int dv = custom ? vmax_opt : 3;
        for (int v = 1; v <= dv; ++v)
            jobs.push_back({"sixvertex", [v] { return check_fbasis_duality(v); }});
        for (int l = 1; l <= 2; ++l)
            for (int v = 1; v <= 2; ++v)
                jobs.push_back({"sixvertex", [l, v] { return lemma_lm_check(l, v); }});
        jobs.push_back({"sixvertex", [] { return check_rll(2); }});
        jobs.push_back({"sixvertex", [] {
                            return check_w1_identity({2, {2, 2}}, 2);
                        }});
        jobs.push_back({"sixvertex", [] { return yaybe_diagnostic(); }});
    }
    if (want("braid")) {
        SpinProfile prof = custom && (int)ell_opt.size() == 3
                               ? parse_profile(ell_opt)
                               : SpinProfile{3, {1, 1, 1}};
        int vm = custom ? std::min(vmax_opt, 1) : 1;
        for (int v = 0; v <= vm; ++v)
            jobs.push_back(
                {"braid", [prof, v] { return braid_consistency_check(prof, v); }});
    }
    return jobs;
}

int cmd_verify(const std::string& suite, const std::vector<int>& ell, int vmax,
               const std::string& mode, unsigned seed, int trials, int threads,
               const std::string& format, const OutOpts& out) {
    static const std::vector<std::string> known{
        "yangian", "properties", "rmatrix", "lattice", "sixvertex", "braid",
        "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw CLI::ValidationError("suite", "unknown suite " + suite);
    if (mode != "symbolic" && mode != "randomized")
        throw CLI::ValidationError("--mode", "symbolic or randomized");
    std::vector<Job> jobs = suite_jobs(suite, ell, vmax, mode, seed, trials);
    std::vector<Report> reports = run_jobs(jobs, threads);

    Report merged;
    for (auto& r : reports) merged.merge(r);
    bool pass = merged.all_pass();
    std::ostringstream text;
    if (format == "ascii") {
        for (auto& c : merged.checks)
            text << (c.pass ? "pass " : "FAIL ") << c.relation << " v="
                 << c.grade << "\n";
        text << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    } else {
        json j{{"schema", "v1"},       {"command", "verify"},
               {"suite", suite},       {"mode", mode},
               {"checks", jreport(merged)}, {"all_pass", pass}};
        text << j.dump(1) << "\n";
    }
    int rc = emit(text.str(), out);
    return rc != 0 ? rc : (pass ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact higher-spin Yangian / lattice-model toolkit"};
    app.require_subcommand(1);

    std::vector<int> ell;
    int v = 0, vmax = 0, threads = 1, trials = 20;
    unsigned seed = 1;
    std::string sigma = "id", sigma_prime = "id", sigma_r = "21";
    std::string format = "json", mode = "symbolic", boundary_s;
    bool restrict_flag = false, dump_states = false, closed_form = false,
         concrete = false;
    std::vector<int> boundary;
    OutOpts out;

    auto* w = app.add_subcommand("weights", "weight functions / restrictions");
    w->add_option("--ell", ell, "spin profile, e.g. 2,2")->required()->delimiter(',');
    w->add_option("--v", v, "grade")->required();
    w->add_option("--sigma", sigma, "permutation (1-based one-line, or 'id')");
    w->add_flag("--restrict", restrict_flag, "emit the restriction matrix");
    w->add_option("--format", format, "json|latex|ascii");
    w->add_option("--threads", threads, "worker threads (output independent)");
    add_out_opts(w, out);

    auto* r = app.add_subcommand("rmatrix", "R-matrices");
    r->add_option("--ell", ell, "spin profile")->required()->delimiter(',');
    r->add_option("--v", v, "grade")->required();
    r->add_option("--sigma-prime", sigma_prime, "row chamber (default id)");
    r->add_option("--sigma", sigma_r, "column chamber (default 21 at w=2)");
    r->add_flag("--closed-form", closed_form,
                "cross-check the w=2 closed form (exit 1 on mismatch)");
    r->add_flag("--concrete-spins", concrete, "substitute l_j -> ell_j");
    r->add_option("--format", format, "json|latex|ascii");
    r->add_option("--threads", threads, "worker threads (output independent)");
    add_out_opts(r, out);

    auto* lat = app.add_subcommand("lattice", "lattice states / partition function");
    lat->add_option("--ell", ell, "spin profile")->required()->delimiter(',');
    lat->add_option("--v", v, "grade")->required();
    lat->add_option("--boundary", boundary, "north boundary labels")
        ->required()
        ->delimiter(',');
    lat->add_flag("--dump-states", dump_states, "emit every state + weight");
    lat->add_option("--format", format, "json|ascii");
    lat->add_option("--threads", threads, "worker threads (output independent)");
    add_out_opts(lat, out);

    auto* ver = app.add_subcommand("verify", "verification suites");
    std::string suite;
    ver->add_option("suite", suite,
                    "yangian|properties|rmatrix|lattice|sixvertex|braid|all")
        ->required();
    ver->add_option("--ell", ell, "spin profile (default battery otherwise)")
        ->delimiter(',');
    ver->add_option("--vmax", vmax, "max grade for custom profiles");
    ver->add_option("--mode", mode, "symbolic|randomized");
    ver->add_option("--seed", seed, "randomized-mode seed");
    ver->add_option("--trials", trials, "randomized-mode trials");
    ver->add_option("--threads", threads, "worker threads (output independent)");
    ver->add_option("--format", format, "json|ascii");
    add_out_opts(ver, out);

    try {
        app.parse(argc, argv);
        if (w->parsed())
            return cmd_weights(ell, v, sigma, restrict_flag, format, out);
        if (r->parsed())
            return cmd_rmatrix(ell, v, sigma_prime, sigma_r, closed_form,
                               concrete, format, out);
        if (lat->parsed())
            return cmd_lattice(ell, v, boundary, dump_states, format, out);
        if (ver->parsed())
            return cmd_verify(suite, ell, vmax, mode, seed, trials, threads,
                              format, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
