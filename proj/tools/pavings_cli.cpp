// pavings — exact enumeration and counting of 3D combinatorial maps.
//
// Subcommands: rooted, unlabeled, enumerate, analyze, mirror-double,
// verify, compare, asympt. All output is deterministic; data goes to
// stdout, diagnostics to stderr; exit code 0 iff every requested check
// passed.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pavings/enumerate.hpp"
#include "pavings/fixtures.hpp"
#include "pavings/io.hpp"
#include "pavings/series.hpp"
#include "pavings/verify.hpp"

namespace {

using pavings::BigInt;
using pavings::json;

struct SeqRow {
    int darts;
    BigInt value;
};

int worker_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PAVINGS_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0; // library default: hardware concurrency
}

void print_sequence(const std::vector<SeqRow>& rows, const std::string& format,
                    const std::string& label) {
    if (format == "table") {
        std::cout << std::setw(6) << "darts" << "  " << label << "\n";
        for (const SeqRow& r : rows)
            std::cout << std::setw(6) << r.darts << "  " << r.value.str() << "\n";
    } else if (format == "csv") {
        std::cout << "darts," << label << "\n";
        for (const SeqRow& r : rows) std::cout << r.darts << "," << r.value.str() << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (const SeqRow& r : rows)
            arr.push_back(json{{"darts", r.darts}, {"value", r.value.str()}});
        std::cout << json{{"name", label}, {"rows", arr}}.dump(2) << "\n";
    } else if (format == "bfile") {
        // OEIS convention: index k counts structures on 2k darts
        for (const SeqRow& r : rows) std::cout << r.darts / 2 << " " << r.value.str() << "\n";
    } else {
        throw std::runtime_error("unknown format: " + format);
    }
}

std::vector<SeqRow> rooted_rows(int max_darts, const std::string& method, int limit, int workers) {
    std::vector<SeqRow> rows;
    const int cap = max_darts - max_darts % 2; // odd bound rounds down
    if (method == "recurrence") {
        const std::vector<BigInt> a = pavings::rooted_by_recurrence(cap / 2);
        for (int n = 2; n <= cap; n += 2) rows.push_back({n, a[static_cast<size_t>(n / 2)]});
    } else if (method == "series") {
        const pavings::Series p = pavings::series_p_rooted(cap);
        for (int n = 2; n <= cap; n += 2) rows.push_back({n, pavings::integer_coeff(p, n)});
    } else if (method == "oracle") {
        for (int n = 2; n <= cap; n += 2)
            rows.push_back({n, pavings::enumerate_pavings(n, false, limit, workers).rooted_count});
    } else {
        throw std::runtime_error("unknown method: " + method);
    }
    return rows;
}

std::vector<SeqRow> unlabeled_rows(int max_darts, const std::string& method, int limit,
                                   int workers) {
    std::vector<SeqRow> rows;
    const int cap = max_darts - max_darts % 2;
    if (method == "cycle-index") {
        const pavings::Series pt = pavings::series_p_tilde(cap + 2);
        for (int n = 2; n <= cap; n += 2) rows.push_back({n, pavings::integer_coeff(pt, n)});
    } else if (method == "oracle") {
        for (int n = 2; n <= cap; n += 2)
            rows.push_back({n, pavings::enumerate_pavings(n, true, limit, workers).iso_classes});
    } else {
        throw std::runtime_error("unknown method: " + method);
    }
    return rows;
}

bool rows_equal(const std::vector<SeqRow>& a, const std::vector<SeqRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].darts != b[i].darts || a[i].value != b[i].value) return false;
    return true;
}

void print_paving_report(const pavings::Paving& p, const std::string& format) {
    const pavings::PavingStats st = pavings::paving_stats(p);
    const pavings::MapStats ms = pavings::map_stats(pavings::underlying_map(p));
    if (format == "json") {
        std::cout << json{{"n", p.n},
                          {"stats", pavings::paving_stats_to_json(st)},
                          {"underlying_map", pavings::map_stats_to_json(ms)}}
                         .dump(2)
                  << "\n";
        return;
    }
    std::cout << "darts:                " << p.n << "\n"
              << "f-vector (f0..f3):    (" << st.f0 << ", " << st.f1 << ", " << st.f2 << ", "
              << st.f3 << ")\n"
              << "complexity:           " << st.complexity << "\n"
              << "euler characteristic: " << st.euler_characteristic << "\n"
              << "connected:            " << (st.connected ? "yes" : "no") << "\n"
              << "underlying map:       " << ms.components << " component(s), " << ms.vertices
              << " vertices, " << ms.edges << " edges, " << ms.faces << " faces\n";
    if (!ms.genus_per_component.empty()) {
        std::cout << "genus per component: ";
        for (long long g : ms.genus_per_component) std::cout << " " << g;
        std::cout << "\n";
    }
}

std::vector<SeqRow> computed_for_oeis(const std::string& id, long long max_n) {
    // rows indexed by OEIS n (structures on 2n darts)
    std::vector<SeqRow> rows;
    if (id == "A005411") {
        const std::vector<BigInt> a = pavings::rooted_by_recurrence(static_cast<int>(max_n));
        for (long long n = 1; n <= max_n; ++n)
            rows.push_back({static_cast<int>(n), a[static_cast<size_t>(n)]});
    } else if (id == "A002831") {
        const pavings::Series pt = pavings::series_p_tilde(static_cast<int>(2 * max_n + 2));
        for (long long n = 1; n <= max_n; ++n)
            rows.push_back({static_cast<int>(n), pavings::integer_coeff(pt, static_cast<int>(2 * n))});
    } else {
        throw std::runtime_error("unknown sequence id: " + id);
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, counting and analysis of 3D combinatorial maps (pavings)"};
    app.require_subcommand(1);

    int workers_flag = 0;
    app.add_option("--workers", workers_flag,
                   "worker thread count (default: PAVINGS_WORKERS or hardware)");

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv", "bfile"}));

    // rooted
    auto* cmd_rooted = app.add_subcommand("rooted", "rooted paving counts / free-subgroup counts");
    int rooted_max = 24;
    std::string rooted_method = "recurrence";
    bool rooted_verify = false;
    int rooted_limit = 10;
    cmd_rooted->add_option("--max-darts", rooted_max, "largest dart count (odd rounds down)");
    cmd_rooted->add_option("--method", rooted_method, "computation method")
        ->check(CLI::IsMember({"recurrence", "series", "oracle"}));
    cmd_rooted->add_flag("--verify", rooted_verify, "cross-check against an independent method");
    cmd_rooted->add_option("--limit", rooted_limit, "oracle dart-count guard");

    // unlabeled
    auto* cmd_unlabeled =
        app.add_subcommand("unlabeled", "isomorphism-class counts / conjugacy-class counts");
    int unlabeled_max = 20;
    std::string unlabeled_method = "cycle-index";
    int unlabeled_limit = 10;
    cmd_unlabeled->add_option("--max-darts", unlabeled_max, "largest dart count (odd rounds down)");
    cmd_unlabeled->add_option("--method", unlabeled_method, "computation method")
        ->check(CLI::IsMember({"cycle-index", "oracle"}));
    cmd_unlabeled->add_option("--limit", unlabeled_limit, "oracle dart-count guard");

    // enumerate
    auto* cmd_enumerate = app.add_subcommand("enumerate", "exhaustive involution-triple scan");
    int enum_darts = 4;
    bool enum_iso = false;
    std::string enum_out;
    int enum_limit = 10;
    cmd_enumerate->add_option("--darts", enum_darts, "dart count (even)");
    cmd_enumerate->add_flag("--up-to-iso", enum_iso, "classify up to isomorphism");
    cmd_enumerate->add_option("--out", enum_out, "directory for representative JSON files");
    cmd_enumerate->add_option("--limit", enum_limit, "dart-count guard");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "validate a paving file and report stats");
    std::string analyze_input;
    cmd_analyze->add_option("--input", analyze_input, "paving JSON file")->required();

    // mirror-double
    auto* cmd_mirror =
        app.add_subcommand("mirror-double", "double a map with its mirror image into a paving");
    std::string mirror_map, mirror_out;
    cmd_mirror->add_option("--map", mirror_map, "map JSON file {n, alpha, sigma}")->required();
    cmd_mirror->add_option("--out", mirror_out, "output paving JSON file");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-method verification suite");
    int verify_max = 8;
    bool inject_fault = false;
    cmd_verify->add_option("--max-darts", verify_max, "largest oracle dart count");
    cmd_verify->add_flag("--inject-fault", inject_fault, "deliberately fail one check (test hook)")
        ->group(""); // hidden

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "compare computed terms against a b-file");
    std::string compare_id;
    std::string compare_bfile;
    long long compare_max_n = 0;
    cmd_compare->add_option("--oeis", compare_id, "sequence id")
        ->check(CLI::IsMember({"A005411", "A002831"}))
        ->required();
    cmd_compare->add_option("--bfile", compare_bfile, "b-file path (default: vendored terms)");
    cmd_compare->add_option("--max-n", compare_max_n, "compare at most this many terms");

    // asympt
    auto* cmd_asympt = app.add_subcommand("asympt", "exact counts against their asymptotics");
    long long asympt_max_k = 12;
    cmd_asympt->add_option("--max-k", asympt_max_k, "largest k (counts on 2k darts)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    const int workers = worker_count(workers_flag);

    try {
        if (cmd_rooted->parsed()) {
            const std::vector<SeqRow> rows =
                rooted_rows(rooted_max, rooted_method, rooted_limit, workers);
            if (rooted_verify) {
                const std::string other = rooted_method == "recurrence" ? "series" : "recurrence";
                if (!rows_equal(rows, rooted_rows(rooted_max, other, rooted_limit, workers))) {
                    std::cerr << "verify failed: " << rooted_method << " disagrees with " << other
                              << "\n";
                    return 1;
                }
            }
            print_sequence(rows, format, "rooted");
            return 0;
        }
        if (cmd_unlabeled->parsed()) {
            print_sequence(unlabeled_rows(unlabeled_max, unlabeled_method, unlabeled_limit, workers),
                           format, "unlabeled");
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            const pavings::EnumerationReport rep =
                pavings::enumerate_pavings(enum_darts, enum_iso, enum_limit, workers);
            if (!enum_out.empty()) {
                std::filesystem::create_directories(enum_out);
                int idx = 0;
                for (const pavings::ClassRepresentative& cr : rep.class_representatives) {
                    std::ostringstream name;
                    name << enum_out << "/paving_" << rep.n << "_" << std::setw(3)
                         << std::setfill('0') << ++idx << ".json";
                    pavings::write_json_path(name.str(), pavings::paving_to_json(cr.paving));
                }
            }
            if (format == "json") {
                std::cout << pavings::enumeration_report_to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "darts:              " << rep.n << "\n"
                          << "total triples:      " << rep.total_triples.str() << "\n"
                          << "transitive triples: " << rep.transitive_triples.str() << "\n"
                          << "rooted count:       " << rep.rooted_count.str() << "\n";
                if (enum_iso) {
                    std::cout << "isomorphism classes: " << rep.iso_classes.str() << "\n";
                    int idx = 0;
                    for (const pavings::ClassRepresentative& cr : rep.class_representatives)
                        std::cout << "  class " << ++idx << ": f = (" << cr.stats.f0 << ", "
                                  << cr.stats.f1 << ", " << cr.stats.f2 << ", " << cr.stats.f3
                                  << ")\n";
                }
            }
            return 0;
        }
        if (cmd_analyze->parsed()) {
            const pavings::Paving p = pavings::paving_from_json(pavings::read_json_path(analyze_input));
            print_paving_report(p, format);
            return 0;
        }
        if (cmd_mirror->parsed()) {
            const pavings::Map2D m = pavings::map2d_from_json(pavings::read_json_path(mirror_map));
            const pavings::Paving doubled = pavings::mirror_double(m);
            if (!mirror_out.empty())
                pavings::write_json_path(mirror_out, pavings::paving_to_json(doubled));
            print_paving_report(doubled, format);
            return 0;
        }
        if (cmd_verify->parsed()) {
            const std::vector<pavings::CheckResult> checks =
                pavings::run_verify_suite(verify_max, workers, inject_fault);
            if (format == "json") {
                json arr = json::array();
                for (const pavings::CheckResult& c : checks)
                    arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const pavings::CheckResult& c : checks)
                    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << " — " << c.detail
                              << "\n";
            }
            if (!pavings::all_passed(checks)) {
                std::cerr << "verification failed\n";
                return 1;
            }
            return 0;
        }
        if (cmd_compare->parsed()) {
            std::vector<std::pair<long long, BigInt>> reference;
            if (!compare_bfile.empty()) {
                reference = pavings::read_bfile_path(compare_bfile);
            } else {
                const auto& terms = compare_id == "A005411" ? pavings::fixtures::a005411()
                                                            : pavings::fixtures::a002831();
                for (size_t i = 0; i < terms.size(); ++i)
                    reference.emplace_back(static_cast<long long>(i + 1), BigInt(terms[i]));
            }
            if (compare_max_n > 0 && static_cast<long long>(reference.size()) > compare_max_n)
                reference.resize(static_cast<size_t>(compare_max_n));
            if (reference.empty()) {
                std::cerr << "compare: no reference terms\n";
                return 1;
            }
            long long max_n = 0;
            for (const auto& [n, v] : reference) max_n = std::max(max_n, n);
            const std::vector<SeqRow> computed = computed_for_oeis(compare_id, max_n);
            for (const auto& [n, v] : reference) {
                if (n < 1 || n > static_cast<long long>(computed.size())) {
                    std::cerr << "compare: index " << n << " out of computed range\n";
                    return 1;
                }
                if (computed[static_cast<size_t>(n - 1)].value != v) {
                    std::cerr << "compare: first mismatch at n = " << n << " (b-file " << v.str()
                              << ", computed " << computed[static_cast<size_t>(n - 1)].value.str()
                              << ")\n";
                    return 1;
                }
            }
            std::cout << compare_id << ": all " << reference.size() << " terms match\n";
            return 0;
        }
        if (cmd_asympt->parsed()) {
            if (asympt_max_k < 1) throw std::runtime_error("asympt: --max-k must be >= 1");
            const pavings::Series pt =
                pavings::series_p_tilde(static_cast<int>(2 * asympt_max_k));
            std::vector<pavings::AsymptoticReport> rooted, unlabeled;
            for (long long k = 1; k <= asympt_max_k; ++k) {
                rooted.push_back(pavings::asymptotic_rooted(k));
                unlabeled.push_back(pavings::asymptotic_unlabeled(k, pt));
            }
            if (format == "json") {
                json jr = json::array(), ju = json::array();
                for (const auto& r : rooted) jr.push_back(pavings::asymptotic_report_to_json(r));
                for (const auto& r : unlabeled) ju.push_back(pavings::asymptotic_report_to_json(r));
                std::cout << json{{"rooted", jr}, {"unlabeled", ju}}.dump(2) << "\n";
            } else {
                const char* sep = format == "csv" ? "," : "  ";
                std::cout << "kind" << sep << "k" << sep << "exact" << sep << "asymptote" << sep
                          << "ratio\n";
                auto emit = [&](const char* kind, const std::vector<pavings::AsymptoticReport>& v) {
                    for (const auto& r : v) {
                        std::ostringstream asym;
                        asym.precision(12);
                        asym << r.asymptote;
                        std::cout << kind << sep << r.k << sep << r.exact.str() << sep
                                  << asym.str() << sep << std::setprecision(10) << r.ratio << "\n";
                    }
                };
                emit("rooted", rooted);
                emit("unlabeled", unlabeled);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
