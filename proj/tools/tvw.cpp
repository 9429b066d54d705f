// tvw: exact Tverberg and winding partition toolkit.
//
// Exit protocol (scriptable sweeps): 0 = run succeeded and at least one
// partition exists, 3 = run succeeded and none exists, 2 = bad input, parse
// error, or resource cap overrun, 4 = drawing or configuration degenerate
// (general position violated) and no --perturb requested, 1 = internal error
// or failed verification suite.

#include "oracles.hpp"
#include "tvw/acceptance.hpp"
#include "tvw/bounds.hpp"
#include "tvw/general_position.hpp"
#include "tvw/json_io.hpp"
#include "tvw/models.hpp"
#include "tvw/svg.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_partitions.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitFound = 0;
constexpr int kExitInput = 2;
constexpr int kExitNone = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitInternal = 1;

struct CliError : std::runtime_error {
    int code;
    CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError(kExitInput, "cannot write " + out_path);
    out << content;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Accepts "1-2,3-4" and, for single-digit vertices, the compact "12,34".
std::vector<std::pair<int, int>> parse_matching(const std::string& s) {
    std::vector<std::pair<int, int>> m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        int u = 0, v = 0;
        try {
            if (dash != std::string::npos) {
                u = std::stoi(tok.substr(0, dash));
                v = std::stoi(tok.substr(dash + 1));
            } else if (tok.size() == 2 && std::isdigit(tok[0]) && std::isdigit(tok[1])) {
                u = tok[0] - '0';
                v = tok[1] - '0';
            } else {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw CliError(kExitInput, "bad matching token \"" + tok + "\" (use u-v,u-v,...)");
        }
        m.push_back({u, v});
    }
    return m;
}

long long env_cap(long long fallback) {
    const char* s = std::getenv("TVW_CANDIDATE_CAP");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
        throw CliError(kExitInput, "TVW_CANDIDATE_CAP must be a positive integer");
    return v;
}

json base_report(const std::string& command) {
    json r;
    r["command"] = command;
    r["parameters"] = json::object();
    r["counts"] = json::object();
    return r;
}

void print_report(const json& r, const std::string& out_path) {
    std::string text = r.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) emit(out_path, text);
}

// ---- gen ----

int run_gen(const std::string& kind, int d, int q, int n, std::uint64_t seed,
            const std::string& out_path) {
    std::string doc;
    if (kind == "sierksma") {
        doc = tvw::configuration_to_json(tvw::sierksma_config(d, q));
    } else if (kind == "altmodel") {
        doc = tvw::drawing_to_json(tvw::alternating_linear_model(n));
    } else if (kind == "stardel") {
        auto [drawing, star] = tvw::star_deletion_drawing(q);
        doc = tvw::drawing_to_json(drawing, 2, star);
    } else if (kind == "random-config") {
        doc = tvw::configuration_to_json(tvw::accept::random_gp_config(d, n, seed));
    } else {
        throw CliError(kExitInput, "unknown generator \"" + kind + "\"");
    }
    emit(out_path, doc);
    return kExitFound;
}

// ---- tverberg ----

int run_tverberg(const std::string& file, int q, const std::string& mode, bool count_only,
                 int threads, const std::string& out_path) {
    tvw::PointConfiguration cfg = tvw::configuration_from_json(slurp(file));
    tvw::TverbergMode m = mode == "full" ? tvw::TverbergMode::full
                                         : tvw::TverbergMode::general_position;
    tvw::TverbergEnumOptions opts;
    opts.threads = threads;
    opts.count_only = count_only;
    opts.candidate_cap = env_cap(opts.candidate_cap);

    auto t0 = Clock::now();
    tvw::TverbergEnumeration r = tvw::enumerate_tverberg_partitions(cfg, q, m, opts);
    double wall = ms_since(t0);

    json rep = base_report("tverberg");
    rep["parameters"] = {{"file", file},
                         {"q", q},
                         {"mode", mode},
                         {"count_only", count_only},
                         {"threads", threads}};
    rep["counts"] = {{"partitions", r.count}, {"candidates_tested", r.candidates_tested}};
    if (!count_only) {
        json certs = json::array();
        for (const tvw::TverbergCertificate& c : r.certificates) {
            c.verify(cfg); // defense against enumeration bugs; throws std::logic_error
            certs.push_back(json::parse(tvw::tverberg_certificate_to_json(c)));
        }
        rep["certificates"] = std::move(certs);
    }
    rep["wall_time_ms"] = wall;
    rep["stats"] = {{"lp_pivots", r.lp.pivots}};
    print_report(rep, out_path);
    return r.count >= 1 ? kExitFound : kExitNone;
}

// ---- winding ----

int run_winding(const std::string& file, int q, const std::string& mode,
                const std::string& matching_arg, bool count_only, bool perturb, int threads,
                const std::string& out_path, const std::string& out_drawing_path) {
    tvw::Drawing dw = tvw::drawing_from_json(slurp(file));

    bool perturbed = false;
    tvw::GeneralPositionReport gp = tvw::validate_general_position(dw);
    if (!gp.ok()) {
        if (!perturb) {
            std::cerr << "drawing not in general position: " << gp.summary() << "\n";
            return kExitDegenerate;
        }
        // bounding-box-scaled initial step; the repair halves it per round
        tvw::Rat extent(1);
        for (const tvw::Point2& p : dw.placement) {
            if (abs(p.x) > extent) extent = abs(p.x);
            if (abs(p.y) > extent) extent = abs(p.y);
        }
        dw = tvw::perturb_to_general_position(dw, extent / 256);
        perturbed = true;
    }

    tvw::WindingMode m = mode == "graph" ? tvw::WindingMode::graph : tvw::WindingMode::simplex;
    tvw::WindingEnumOptions opts;
    opts.threads = threads;
    opts.count_only = count_only;
    opts.state_cap = env_cap(opts.state_cap);

    auto t0 = Clock::now();
    tvw::WindingEnumeration r;
    std::vector<std::pair<int, int>> matching;
    if (!matching_arg.empty()) {
        matching = parse_matching(matching_arg);
        r = tvw::matching_avoiding_partitions(dw, q, matching, m, opts);
    } else {
        r = tvw::enumerate_winding_partitions(dw, q, m, opts);
    }
    double wall = ms_since(t0);

    json rep = base_report("winding");
    rep["parameters"] = {{"file", file},        {"q", q},
                         {"mode", mode},        {"matching", matching_arg},
                         {"count_only", count_only}, {"perturb", perturbed},
                         {"threads", threads}};
    rep["counts"] = {{"partitions", r.count}, {"candidates", r.candidates}};
    if (!count_only) {
        json certs = json::array();
        for (const tvw::WindingCertificate& c : r.certificates) {
            if (!tvw::is_winding_partition(dw, c.faces, c.point))
                throw std::logic_error("certificate failed re-verification");
            certs.push_back(json::parse(tvw::winding_certificate_to_json(c)));
        }
        rep["certificates"] = std::move(certs);
    }
    rep["wall_time_ms"] = wall;
    rep["stats"] = {{"pruned_zero_winding", r.pruned_zero_winding}, {"states", r.states}};
    print_report(rep, out_path);
    if (perturbed && !out_drawing_path.empty()) emit(out_drawing_path, tvw::drawing_to_json(dw));
    return r.count >= 1 ? kExitFound : kExitNone;
}

// ---- bounds ----

int run_bounds(int d_max, int q_max, const std::string& out_path) {
    if (d_max < 1 || q_max < 2) throw CliError(kExitInput, "need --d-max >= 1, --q-max >= 2");
    std::ostringstream csv;
    csv << "d,q,sierksma_number,vz_lower_bound,winding_lower_bound_d2\n";
    for (int d = 1; d <= d_max; ++d)
        for (int q = 2; q <= q_max; ++q) {
            csv << d << "," << q << "," << tvw::sierksma_number(d, q) << ",";
            bool prime = tvw::is_prime(static_cast<unsigned>(q));
            if (prime) csv << tvw::vz_lower_bound(d, q);
            csv << ",";
            if (prime && d == 2) csv << tvw::winding_lower_bound_d2(q);
            csv << "\n";
        }
    emit(out_path, csv.str());
    return kExitFound;
}

// ---- render ----

int run_render(const std::string& file, const std::string& certs_file, int cert_idx,
               const std::string& out_path) {
    std::string text = slurp(file);
    std::string kind = tvw::sniff_json_kind(text);

    std::optional<json> cert_doc;
    if (!certs_file.empty()) {
        json rep = json::parse(slurp(certs_file), nullptr, false);
        if (rep.is_discarded() || !rep.contains("certificates") ||
            !rep["certificates"].is_array())
            throw CliError(kExitInput, certs_file + " has no certificates array");
        const json& arr = rep["certificates"];
        if (cert_idx < 0 || cert_idx >= static_cast<int>(arr.size()))
            throw CliError(kExitInput, "certificate index " + std::to_string(cert_idx) +
                                           " out of range (have " +
                                           std::to_string(arr.size()) + ")");
        cert_doc = arr[static_cast<std::size_t>(cert_idx)];
    }

    std::string svg;
    if (kind == "drawing") {
        tvw::Drawing dw = tvw::drawing_from_json(text);
        if (cert_doc) {
            tvw::WindingCertificate c = tvw::winding_certificate_from_json(cert_doc->dump());
            svg = tvw::render_svg(dw, &c);
        } else {
            svg = tvw::render_svg(dw);
        }
    } else {
        tvw::PointConfiguration cfg = tvw::configuration_from_json(text);
        if (cert_doc) {
            tvw::TverbergCertificate c = tvw::tverberg_certificate_from_json(cert_doc->dump());
            svg = tvw::render_svg(cfg, &c);
        } else {
            svg = tvw::render_svg(cfg);
        }
    }
    emit(out_path, svg);
    return kExitFound;
}

// ---- verify ----

int run_verify(const std::string& suite, int threads, const std::string& out_path) {
    auto t0 = Clock::now();
    std::vector<tvw::accept::CriterionResult> results = tvw::accept::run_suite(suite, threads);
    double wall = ms_since(t0);

    json rep = base_report("verify");
    rep["parameters"] = {{"suite", suite}, {"threads", threads}};
    json lines = json::array();
    int passed = 0;
    for (const tvw::accept::CriterionResult& r : results) {
        std::cout << tvw::accept::format_result_line(r) << "\n";
        if (r.pass) ++passed;
        lines.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"wall_time_ms", r.wall_ms},
                         {"detail", r.detail}});
    }
    rep["counts"] = {{"passed", passed},
                     {"failed", static_cast<int>(results.size()) - passed}};
    rep["criteria"] = std::move(lines);
    rep["wall_time_ms"] = wall;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    if (!out_path.empty()) emit(out_path, rep.dump(2) + "\n");
    return passed == static_cast<int>(results.size()) ? 0 : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Tverberg and winding partition toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let the global --threads appear after the subcommand
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores, 1 = serial reference)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a configuration or drawing");
    std::string gen_kind, gen_out;
    int gen_d = 2, gen_q = 3, gen_n = 7;
    std::uint64_t gen_seed = 1;
    gen->add_option("kind", gen_kind, "sierksma | altmodel | stardel | random-config")
        ->required();
    gen->add_option("--d", gen_d, "dimension (sierksma, random-config)");
    gen->add_option("--q", gen_q, "number of parts (sierksma, stardel)");
    gen->add_option("--n", gen_n, "point or vertex count (altmodel, random-config)");
    gen->add_option("--seed", gen_seed, "random seed (random-config)");
    gen->add_option("--out", gen_out, "output file (default: stdout)");

    // tverberg
    auto* tv = app.add_subcommand("tverberg", "enumerate Tverberg partitions");
    std::string tv_file, tv_mode = "general-position", tv_out;
    int tv_q = 0;
    bool tv_count_only = false;
    tv->add_option("file", tv_file, "configuration JSON")->required();
    tv->add_option("--q", tv_q, "number of parts")->required();
    tv->add_option("--mode", tv_mode)
        ->check(CLI::IsMember({"general-position", "full"}));
    tv->add_flag("--count-only", tv_count_only, "skip certificate output");
    tv->add_option("--out", tv_out, "also write the run report here");

    // winding
    auto* wd = app.add_subcommand("winding", "enumerate winding partitions");
    std::string wd_file, wd_mode = "simplex", wd_matching, wd_out, wd_out_drawing;
    int wd_q = 0;
    bool wd_count_only = false, wd_perturb = false;
    wd->add_option("file", wd_file, "drawing JSON")->required();
    wd->add_option("--q", wd_q, "number of parts")->required();
    wd->add_option("--mode", wd_mode)->check(CLI::IsMember({"simplex", "graph"}));
    wd->add_option("--matching", wd_matching, "faces must avoid these edges, e.g. 1-2,3-4");
    wd->add_flag("--count-only", wd_count_only, "skip certificate output");
    wd->add_flag("--perturb", wd_perturb, "repair a degenerate drawing before enumerating");
    wd->add_option("--out", wd_out, "also write the run report here");
    wd->add_option("--out-drawing", wd_out_drawing, "write the perturbed drawing here");

    // bounds
    auto* bd = app.add_subcommand("bounds", "lower-bound table as CSV");
    int bd_dmax = 5, bd_qmax = 13;
    std::string bd_out;
    bd->add_option("--d-max", bd_dmax, "largest dimension");
    bd->add_option("--q-max", bd_qmax, "largest part count");
    bd->add_option("--out", bd_out, "output file (default: stdout)");

    // render
    auto* rd = app.add_subcommand("render", "render a drawing or configuration as SVG");
    std::string rd_file, rd_certs, rd_out;
    int rd_idx = 0;
    rd->add_option("file", rd_file, "configuration or drawing JSON")->required();
    rd->add_option("--certificates-file", rd_certs, "run report with certificates");
    rd->add_option("--certificate", rd_idx, "certificate index within the report");
    rd->add_option("--out", rd_out, "output file (default: stdout)");

    // verify
    auto* vf = app.add_subcommand("verify", "run the acceptance criteria");
    std::string vf_suite = "all", vf_out;
    vf->add_option("suite", vf_suite, "paper-tables | oracles | all")
        ->check(CLI::IsMember({"paper-tables", "oracles", "all"}));
    vf->add_option("--out", vf_out, "also write the run report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_d, gen_q, gen_n, gen_seed, gen_out);
        if (tv->parsed())
            return run_tverberg(tv_file, tv_q, tv_mode, tv_count_only, threads, tv_out);
        if (wd->parsed())
            return run_winding(wd_file, wd_q, wd_mode, wd_matching, wd_count_only, wd_perturb,
                               threads, wd_out, wd_out_drawing);
        if (bd->parsed()) return run_bounds(bd_dmax, bd_qmax, bd_out);
        if (rd->parsed()) return run_render(rd_file, rd_certs, rd_idx, rd_out);
        if (vf->parsed()) return run_verify(vf_suite, threads, vf_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const tvw::NotInGeneralPositionConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const tvw::NotInGeneralPosition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const tvw::PerturbationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const tvw::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tvw::CandidateCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tvw::EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
