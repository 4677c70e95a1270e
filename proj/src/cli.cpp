#include "pinnacle/cli.hpp"

#include <cstdlib>
#include <filesystem>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "pinnacle/admissible.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/lattice.hpp"
#include "pinnacle/numbers.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/textio.hpp"
#include "pinnacle/verify.hpp"

namespace pinnacle {

namespace {

using nlohmann::json;

enum class Fmt { plain, csv, js };

struct Output {
    json j;
    std::string plain;
    std::string csv; // empty -> plain is used for csv too
};

void emit(Fmt fmt, std::ostream& out, Output o) {
    if (fmt == Fmt::js) {
        o.j["schema_version"] = 1;
        out << o.j.dump(2) << '\n';
    } else if (fmt == Fmt::csv && !o.csv.empty()) {
        out << o.csv;
    } else {
        out << o.plain;
    }
}

Method parse_method(const std::string& s) {
    if (s == "auto") return Method::automatic;
    if (s == "brute") return Method::brute;
    if (s == "quadratic") return Method::quadratic;
    if (s == "linear") return Method::linear;
    if (s == "closed") return Method::closed;
    throw input_error("unknown method: " + s);
}

void cmd_pinnacles(Fmt fmt, std::ostream& out, const std::string& word_s) {
    Permutation w = parse_permutation(word_s);
    auto des = descent_set(w);
    auto peaks = peak_set(w);
    PinnacleSet pin = pinnacle_set(w);
    auto join = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    Output o;
    o.plain = "pinnacles: " + format_set(pin) + "\npeaks: " + join(peaks) +
              "\ndescents: " + join(des) + "\n";
    o.j = {{"command", "pinnacles"},
           {"word", w.word()},
           {"pinnacles", pin.values()},
           {"peaks", peaks},
           {"descents", des}};
    emit(fmt, out, std::move(o));
}

void cmd_adm_check(Fmt fmt, std::ostream& out, const std::string& set_s) {
    PinnacleSet S = parse_set(set_s);
    bool ok = is_admissible(S);
    Output o;
    o.j = {{"command", "admissible-check"}, {"set", S.values()}, {"admissible", ok}};
    o.plain = "set: " + format_set(S) + "\nadmissible: " + (ok ? "yes" : "no") + "\n";
    if (ok) {
        int mn = min_ambient_n(S);
        Permutation w = S.empty() ? Permutation::identity(1) : canonical_permutation(S);
        o.plain += "min_n: " + std::to_string(mn) + "\nwitness: " + format_permutation(w) + "\n";
        o.j["min_n"] = mn;
        o.j["witness"] = w.word();
    }
    emit(fmt, out, std::move(o));
}

void cmd_adm_list(Fmt fmt, std::ostream& out, int max_n) {
    auto sets = enumerate_admissible_upto(max_n);
    Output o;
    o.csv = "set\n";
    o.j = {{"command", "admissible-list"}, {"max_n", max_n}};
    json arr = json::array();
    for (const auto& S : sets) {
        o.plain += format_set(S) + "\n";
        o.csv += format_set(S) + "\n";
        arr.push_back(S.values());
    }
    o.j["sets"] = arr;
    emit(fmt, out, std::move(o));
}

void cmd_adm_count(Fmt fmt, std::ostream& out, int m, int d, bool with_d) {
    Count v = with_d ? count_admissible(m, d) : count_admissible_upto(m);
    Output o;
    o.plain = v.str() + "\n";
    o.j = {{"command", "admissible-count"}, {"m", m}, {"value", v.str()}};
    if (with_d) o.j["d"] = d;
    emit(fmt, out, std::move(o));
}

// triangle of admissible-set counts by (max, size), with row sums
void cmd_table_pmd(Fmt fmt, std::ostream& out, int max_m) {
    AdmissibleCountTable table(max_m);
    Output o;
    o.csv = "m,d,count\n";
    json rows = json::array();
    for (int m = 3; m <= max_m; ++m) {
        std::string line = "m=" + std::to_string(m) + ":";
        json counts = json::array();
        for (int d = 1; 2 * d < m; ++d) {
            Count v = table.at(m, d);
            line += " " + v.str();
            o.csv += std::to_string(m) + "," + std::to_string(d) + "," + v.str() + "\n";
            counts.push_back(v.str());
        }
        line += " | " + table.row_sum(m).str() + "\n";
        o.plain += line;
        rows.push_back({{"m", m}, {"counts", counts}, {"row_sum", table.row_sum(m).str()}});
    }
    o.j = {{"command", "table-pmd"}, {"max_m", max_m}, {"rows", rows}};
    emit(fmt, out, std::move(o));
}

void cmd_count(Fmt fmt, std::ostream& out, const std::string& set_s, int n,
               const std::string& method_s, const std::string& cache_file, int jobs,
               bool breakdown) {
    PinnacleSet S = parse_set(set_s);
    CountCache cache = (!cache_file.empty() && std::filesystem::exists(cache_file))
                           ? CountCache::load(cache_file)
                           : CountCache();
    BruteForceOptions bo;
    bo.jobs = jobs;
    Output o;
    o.j = {{"command", "count"}, {"set", S.values()}, {"n", n}};
    if (breakdown) {
        auto b = quadratic_count_stats(S, n, cache);
        o.plain = "value: " + b.value.str() + "\nterms_total: " + std::to_string(b.terms_total) +
                  "\nterms_nonzero: " + std::to_string(b.terms_nonzero) + "\n";
        o.j["method"] = "quadratic";
        o.j["value"] = b.value.str();
        o.j["terms_total"] = b.terms_total;
        o.j["terms_nonzero"] = b.terms_nonzero;
    } else {
        Count v = count(S, n, parse_method(method_s), cache, bo);
        o.plain = v.str() + "\n";
        o.j["method"] = method_s;
        o.j["value"] = v.str();
    }
    if (!cache_file.empty()) cache.save(cache_file);
    emit(fmt, out, std::move(o));
}

void cmd_bij_set_to_path(Fmt fmt, std::ostream& out, const std::string& set_s) {
    PinnacleSet S = parse_set(set_s);
    LatticePath P = path_of_pinnacle_set(S);
    MarkedPath mp = mark(P);
    Output o;
    o.plain = format_path(P) + "\n";
    o.j = {{"command", "bijection-set-to-path"},
           {"set", S.values()},
           {"path", format_path(P)},
           {"steps", P.steps()},
           {"marked_labels", mp.marked_labels()}};
    emit(fmt, out, std::move(o));
}

void cmd_bij_path_to_set(Fmt fmt, std::ostream& out, const std::string& path_s) {
    LatticePath P = parse_path(path_s);
    PinnacleSet S = pinnacle_set_of_path(P);
    MarkedPath mp = mark(P);
    Output o;
    o.plain = format_set(S) + "\n";
    o.j = {{"command", "bijection-path-to-set"},
           {"path", format_path(P)},
           {"set", S.values()},
           {"marked_labels", mp.marked_labels()},
           {"unmarked_labels", mp.unmarked_labels()},
           {"axis_down_steps", negative_regions(P)}};
    emit(fmt, out, std::move(o));
}

void cmd_bij_path_to_perm(Fmt fmt, std::ostream& out, const std::string& path_s) {
    LatticePath P = parse_path(path_s);
    Permutation w = zigzag_permutation_of_path(P);
    Output o;
    o.plain = format_permutation(w) + "\n";
    o.j = {{"command", "bijection-path-to-perm"},
           {"path", format_path(P)},
           {"word", w.word()},
           {"pinnacles", pinnacle_set(w).values()}};
    emit(fmt, out, std::move(o));
}

// every admissible class inside [7] with its size, ordered by |S|, then max, then lex
void cmd_table_ps7(Fmt fmt, std::ostream& out) {
    const int n = 7;
    CountCache cache;
    std::vector<std::pair<PinnacleSet, Count>> rows;
    rows.push_back({PinnacleSet(), count(PinnacleSet(), n, Method::automatic, cache)});
    for (int d = 1; 2 * d < n; ++d)
        for (int m = 2 * d + 1; m <= n; ++m)
            for (const auto& S : enumerate_admissible(m, d))
                rows.push_back({S, count(S, n, Method::automatic, cache)});
    Output o;
    o.csv = "set,value\n";
    json arr = json::array();
    for (const auto& [S, v] : rows) {
        o.plain += format_set(S) + " " + v.str() + "\n";
        o.csv += "\"" + format_set(S) + "\"," + v.str() + "\n";
        arr.push_back({{"set", S.values()}, {"value", v.str()}});
    }
    o.j = {{"command", "table-ps7"}, {"n", n}, {"rows", arr}};
    emit(fmt, out, std::move(o));
}

void cmd_table_dmax(Fmt fmt, std::ostream& out, int to) {
    Output o;
    o.csv = "n,d,tie\n";
    json arr = json::array();
    for (int n = 4; n <= to; ++n) {
        auto r = d_max(n);
        o.plain += "n=" + std::to_string(n) + ": d=" + std::to_string(r.d) +
                   (r.tie ? " (tie)" : "") + "\n";
        o.csv += std::to_string(n) + "," + std::to_string(r.d) + "," + (r.tie ? "1" : "0") + "\n";
        arr.push_back({{"n", n}, {"d", r.d}, {"tie", r.tie}});
    }
    o.j = {{"command", "table-dmax"}, {"to", to}, {"rows", arr}};
    emit(fmt, out, std::move(o));
}

void cmd_table_plateaus(Fmt fmt, std::ostream& out, int to) {
    auto pl = plateau_starts(to);
    Output o;
    o.csv = "n,d\n";
    json arr = json::array();
    for (auto [n, d] : pl) {
        o.plain += "n=" + std::to_string(n) + ": d=" + std::to_string(d) + "\n";
        o.csv += std::to_string(n) + "," + std::to_string(d) + "\n";
        arr.push_back({{"n", n}, {"d", d}});
    }
    o.j = {{"command", "table-plateaus"}, {"to", to}, {"rows", arr}};
    emit(fmt, out, std::move(o));
}

int cmd_verify(Fmt fmt, std::ostream& out, const VerifyOptions& vo) {
    VerifyReport rep = run_verify(vo);
    Output o;
    std::string suites;
    for (std::size_t i = 0; i < rep.suites_run.size(); ++i)
        suites += (i ? "," : "") + rep.suites_run[i];
    o.plain = "suites: " + suites + "\nchecks: " + std::to_string(rep.checks) +
              "\nfailures: " + std::to_string(rep.failures.size()) + "\n";
    for (const auto& f : rep.failures) o.plain += "[" + f.suite + "] " + f.detail + "\n";
    o.plain += "coverage: " + std::to_string(rep.coverage.size()) + "/" +
               std::to_string(all_public_operations().size()) + " operations\n";
    json fails = json::array();
    for (const auto& f : rep.failures) fails.push_back({{"suite", f.suite}, {"detail", f.detail}});
    o.j = {{"command", "verify"},
           {"suites", rep.suites_run},
           {"checks", rep.checks},
           {"failures", fails},
           {"coverage", std::vector<std::string>(rep.coverage.begin(), rep.coverage.end())},
           {"ok", rep.ok()}};
    emit(fmt, out, std::move(o));
    return rep.ok() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact pinnacle-set computations for permutations"};
    app.name("pinnacle");
    std::string format_s = "plain", method_s = "auto", cache_file;
    int jobs = 1;
    if (const char* env = std::getenv("PINNACLE_CACHE_FILE")) cache_file = env;
    app.add_option("--format", format_s, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--method", method_s, "counting engine for `count`")
        ->check(CLI::IsMember({"auto", "brute", "quadratic", "linear", "closed"}));
    app.add_option("--cache-file", cache_file,
                   "memo snapshot to load and update (default: $PINNACLE_CACHE_FILE)");
    app.add_option("--jobs", jobs, "worker threads for exhaustive scans")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    auto fmt = [&] {
        return format_s == "json" ? Fmt::js : format_s == "csv" ? Fmt::csv : Fmt::plain;
    };
    int rc = 0;

    // option storage must outlive parse(), so it all lives at function scope
    std::string pin_word;
    std::string check_set;
    int list_n = 0;
    int count_m = 0, count_d = 0;
    int adm_table_m = 14;
    std::string count_set;
    int count_n = 0;
    bool breakdown = false;
    std::string sp_set, ps_path, pp_path;
    int pmd_m = 14, dm_to = 22, pl_to = 200;
    VerifyOptions vo;

    auto* c_pin = app.add_subcommand("pinnacles", "descents, peaks and pinnacles of a permutation");
    c_pin->fallthrough();
    c_pin->add_option("word", pin_word, "permutation, digit word or comma list")->required();
    c_pin->callback([&] { cmd_pinnacles(fmt(), out, pin_word); });

    auto* c_adm = app.add_subcommand("admissible", "admissible pinnacle sets");
    c_adm->fallthrough();
    c_adm->require_subcommand(1);

    auto* cc = c_adm->add_subcommand("check", "admissibility, minimal ambient size, witness");
    cc->fallthrough();
    cc->add_option("set", check_set, "candidate set, e.g. {4,7,9}")->required();
    cc->callback([&] { cmd_adm_check(fmt(), out, check_set); });

    auto* cl = c_adm->add_subcommand("list", "every admissible subset of [n]");
    cl->fallthrough();
    cl->add_option("n", list_n, "ambient maximum")->required()->check(CLI::NonNegativeNumber);
    cl->callback([&] { cmd_adm_list(fmt(), out, list_n); });

    auto* cn = c_adm->add_subcommand("count", "admissible-set counts");
    cn->fallthrough();
    cn->add_option("m", count_m, "subsets of [m] (alone), or max exactly m (with d)")->required();
    auto* dopt = cn->add_option("d", count_d, "set size");
    cn->callback([&] { cmd_adm_count(fmt(), out, count_m, count_d, dopt->count() > 0); });

    auto* ct = c_adm->add_subcommand("table", "count triangle by (max, size) with row sums");
    ct->fallthrough();
    ct->add_option("--max-m", adm_table_m, "last row");
    ct->callback([&] { cmd_table_pmd(fmt(), out, adm_table_m); });

    auto* c_count = app.add_subcommand("count", "permutations of [n] with pinnacle set S");
    c_count->fallthrough();
    c_count->add_option("set", count_set, "pinnacle set, e.g. {4,7,9}")->required();
    c_count->add_option("n", count_n, "ambient size")->required();
    c_count->add_flag("--breakdown", breakdown,
                      "use the splitting recurrence and report its summand counts");
    c_count->callback(
        [&] { cmd_count(fmt(), out, count_set, count_n, method_s, cache_file, jobs, breakdown); });

    auto* c_bij = app.add_subcommand("bijection", "set <-> path <-> witness correspondence");
    c_bij->fallthrough();
    c_bij->require_subcommand(1);

    auto* sp = c_bij->add_subcommand("set-to-path", "lattice path of an admissible set");
    sp->fallthrough();
    sp->add_option("set", sp_set, "nonempty admissible set")->required();
    sp->callback([&] { cmd_bij_set_to_path(fmt(), out, sp_set); });

    auto* ps = c_bij->add_subcommand("path-to-set", "pinnacle set of a valid path");
    ps->fallthrough();
    ps->add_option("path", ps_path, "steps, e.g. DDUUUDU or 1,-1,...")->required();
    ps->callback([&] { cmd_bij_path_to_set(fmt(), out, ps_path); });

    auto* pp = c_bij->add_subcommand("path-to-perm", "zigzag witness of a valid path");
    pp->fallthrough();
    pp->add_option("path", pp_path, "steps, e.g. DDUUUDU or 1,-1,...")->required();
    pp->callback([&] { cmd_bij_path_to_perm(fmt(), out, pp_path); });

    auto* c_tab = app.add_subcommand("tables", "reference tables");
    c_tab->fallthrough();
    c_tab->require_subcommand(1);

    auto* pmd = c_tab->add_subcommand("pmd", "admissible-set count triangle");
    pmd->fallthrough();
    pmd->add_option("--max-m", pmd_m, "last row");
    pmd->callback([&] { cmd_table_pmd(fmt(), out, pmd_m); });

    auto* ps7 = c_tab->add_subcommand("pS7", "class sizes inside S_7");
    ps7->fallthrough();
    ps7->callback([&] { cmd_table_ps7(fmt(), out); });

    auto* dm = c_tab->add_subcommand("dmax", "size maximizing the largest class, per n");
    dm->fallthrough();
    dm->add_option("--to", dm_to, "last n")->check(CLI::Range(4, 100000));
    dm->callback([&] { cmd_table_dmax(fmt(), out, dm_to); });

    auto* pl = c_tab->add_subcommand("plateaus", "where the maximizing size repeats 4 times");
    pl->fallthrough();
    pl->add_option("--to", pl_to, "last n checked")->check(CLI::Range(4, 100000));
    pl->callback([&] { cmd_table_plateaus(fmt(), out, pl_to); });

    auto* c_ver = app.add_subcommand("verify", "cross-check the library against definitions");
    c_ver->fallthrough();
    c_ver->add_option("--n-max", vo.n_max, "exhaustive scan limit")->check(CLI::Range(0, 11));
    c_ver->add_option("--m-max", vo.m_max, "correspondence scan limit")->check(CLI::Range(3, 24));
    c_ver->add_option("--suite", vo.suites, "suites to run (default: all)");
    c_ver->callback([&] {
        vo.jobs = jobs;
        rc = cmd_verify(fmt(), out, vo);
    });

    try {
        std::vector<const char*> argv;
        argv.push_back("pinnacle");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err); // --help
        err << "error: " << e.get_name() << ": " << e.what() << '\n';
        return 2;
    } catch (const guard_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return rc;
}

} // namespace pinnacle
