#include "tvw/acceptance.hpp"

#include "oracles.hpp"
#include "tvw/bounds.hpp"
#include "tvw/graph.hpp"
#include "tvw/minors.hpp"
#include "tvw/models.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_number.hpp"
#include "tvw/winding_partitions.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

namespace tvw::accept {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using Body = std::function<void(int threads, bool& pass, std::ostringstream& detail)>;

Criterion make(int id, const char* name, const char* suite, double limit_ms, Body body) {
    return Criterion{id, name, suite, [id, name, limit_ms, body](int threads) {
                         CriterionResult r;
                         r.id = id;
                         r.name = name;
                         auto t0 = Clock::now();
                         bool pass = true;
                         std::ostringstream detail;
                         try {
                             body(threads, pass, detail);
                         } catch (const std::exception& e) {
                             pass = false;
                             detail << " exception: " << e.what();
                         }
                         r.wall_ms = ms_since(t0);
                         if (limit_ms > 0 && r.wall_ms > limit_ms) {
                             pass = false;
                             detail << " [time limit " << limit_ms / 1000 << "s exceeded]";
                         }
                         r.pass = pass;
                         r.detail = detail.str();
                         return r;
                     }};
}

void expect(bool cond, bool& pass, std::ostringstream& detail, const std::string& what) {
    if (!cond) {
        pass = false;
        detail << " FAILED[" << what << "]";
    }
}

// ---- criterion bodies ----

void c1_sierksma_counts(int threads, bool& pass, std::ostringstream& detail) {
    struct Case {
        int d, q;
        long long want;
    } cases[] = {{1, 2, 1}, {1, 3, 2}, {1, 4, 6}, {2, 2, 1}, {2, 3, 4}, {2, 4, 36}};
    TverbergEnumOptions o;
    o.threads = threads;
    for (const Case& cs : cases) {
        PointConfiguration cfg = sierksma_config(cs.d, cs.q);
        TverbergEnumeration r =
            enumerate_tverberg_partitions(cfg, cs.q, TverbergMode::general_position, o);
        detail << " (" << cs.d << "," << cs.q << ")=" << r.count;
        expect(r.count == cs.want, pass, detail,
               "count(" + std::to_string(cs.d) + "," + std::to_string(cs.q) + ")");
    }
}

void c2_bound_tables(int, bool& pass, std::ostringstream& detail) {
    struct VzCase {
        int d, q;
        long long want;
    } vz_cases[] = {{1, 2, 1},   {2, 2, 1},    {3, 2, 1},      {4, 2, 1},      {5, 2, 1},
                    {1, 3, 2},   {2, 3, 2},    {3, 3, 3},      {4, 3, 4},      {5, 3, 6},
                    {2, 5, 11},  {3, 5, 64},   {4, 5, 398},    {5, 5, 2484},
                    {2, 7, 110}, {3, 7, 4694}, {4, 7, 201228}, {5, 7, 8627646}};
    for (const VzCase& c : vz_cases)
        expect(vz_lower_bound(c.d, c.q) == Int(c.want), pass, detail,
               "vz(" + std::to_string(c.d) + "," + std::to_string(c.q) + ")");
    // d=1, q in {5,7}: formula values, pinned without a table row to compare
    expect(vz_lower_bound(1, 5) == Int(2), pass, detail, "vz(1,5)");
    expect(vz_lower_bound(1, 7) == Int(3), pass, detail, "vz(1,7)");
    struct WCase {
        int q;
        long long want;
    } w_cases[] = {{3, 2}, {5, 3}, {7, 7}, {11, 49}, {13, 142}};
    for (const WCase& c : w_cases)
        expect(winding_lower_bound_d2(c.q) == Int(c.want), pass, detail,
               "winding(" + std::to_string(c.q) + ")");
    detail << " 18 table entries + 2 formula pins + 5 winding entries";
}

void c3_altmodel_counts(int threads, bool& pass, std::ostringstream& detail) {
    WindingEnumOptions o;
    o.threads = threads;
    for (int q : {3, 4}) {
        int n = 3 * q - 2;
        Drawing m = alternating_linear_model(n);
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> seen;
        for (const CandidatePoint& c : candidate_points(m))
            if (c.kind == CandidatePoint::Kind::crossing) ++seen[{c.e1, c.e2}];
        auto oracle = altmodel_interleaving_pairs(n);
        expect(seen.size() == oracle.size(), pass, detail,
               "crossing pair count n=" + std::to_string(n));
        for (const auto& [pr, cnt] : seen) {
            expect(cnt == 1, pass, detail, "multiple crossings of one pair");
            expect(oracle.count(pr) == 1, pass, detail, "unexpected crossing pair");
        }
        long long cnt = count_winding_partitions(m, q, WindingMode::simplex, o);
        long long want = q == 3 ? 4 : 36;
        detail << " K" << n << ":crossings=" << seen.size() << ",count=" << cnt;
        expect(cnt == want, pass, detail, "count K" + std::to_string(n));
    }
}

void c4_winding_point(int threads, bool& pass, std::ostringstream& detail) {
    WindingEnumOptions o;
    o.threads = threads;
    for (int q : {3, 4}) {
        int n = 3 * q - 2;
        Drawing m = alternating_linear_model(n);
        WindingEnumeration r = enumerate_winding_partitions(m, q, WindingMode::simplex, o);
        bool at_vertex = false;
        for (const WindingCertificate& c : r.certificates)
            if (c.point.kind == CandidatePoint::Kind::vertex && c.point.vertex == 2 * q - 1)
                at_vertex = true;
        detail << " q=" << q << ":vertex" << 2 * q - 1 << (at_vertex ? " witnessed" : " missing");
        expect(at_vertex, pass, detail, "winding point at vertex 2q-1, q=" + std::to_string(q));
        if (q == 3) {
            std::vector<Face> named = {Face{Face::Kind::vertex, {5}},
                                       Face{Face::Kind::cycle, {1, 2, 7}},
                                       Face{Face::Kind::cycle, {3, 4, 6}}};
            bool found = false;
            for (const WindingCertificate& c : r.certificates)
                if (c.faces == named) found = true;
            expect(found, pass, detail, "named partition {5},(1,2,7),(3,4,6)");
        }
    }
}

void c5_star_deletion(int threads, bool& pass, std::ostringstream& detail) {
    WindingEnumOptions o;
    o.threads = threads;
    for (int q : {2, 3, 4}) {
        auto [drawing, star] = star_deletion_drawing(q);
        long long cnt = count_winding_partitions(drawing, q, WindingMode::graph, o);
        detail << " q=" << q << ":count=" << cnt << "(|N|=" << star.size() << ")";
        expect(cnt == 0, pass, detail, "nonzero count at q=" + std::to_string(q));
    }
}

void c6_matching_avoiding(int threads, bool& pass, std::ostringstream& detail) {
    WindingEnumOptions o;
    o.threads = threads;
    Drawing base = alternating_linear_model(7);
    std::vector<std::pair<int, int>> M = {{1, 2}, {3, 4}, {5, 6}};
    WindingEnumeration all = matching_avoiding_partitions(base, 3, {}, WindingMode::simplex, o);
    expect(all.count == 4, pass, detail, "empty matching should not filter");
    WindingEnumeration r0 = matching_avoiding_partitions(base, 3, M, WindingMode::simplex, o);
    expect(r0.count >= 1, pass, detail, "base model");
    detail << " base=" << r0.count << "/4";
    int nonempty = r0.count >= 1 ? 1 : 0;
    for (int i = 0; i < 20; ++i) {
        Drawing j = jitter_drawing(base, 0xC0FFEEULL + i);
        WindingEnumeration r = matching_avoiding_partitions(j, 3, M, WindingMode::simplex, o);
        if (r.count >= 1) ++nonempty;
        expect(r.count >= 1, pass, detail, "variant " + std::to_string(i));
    }
    detail << " nonempty=" << nonempty << "/21";
}

void c7_tverberg_existence(int threads, bool& pass, std::ostringstream& detail) {
    TverbergEnumOptions o;
    o.threads = threads;
    int runs = 0;
    for (int d : {1, 2})
        for (int q : {2, 3})
            for (int i = 0; i < 50; ++i) {
                int n = (d + 1) * (q - 1) + 1;
                PointConfiguration cfg = random_gp_config(
                    d, n, 0x7E5Aull * 1000003 + d * 1021 + q * 131 + i);
                TverbergEnumeration r =
                    enumerate_tverberg_partitions(cfg, q, TverbergMode::general_position, o);
                expect(r.count >= 1, pass, detail,
                       "empty at d=" + std::to_string(d) + ",q=" + std::to_string(q) +
                           ",i=" + std::to_string(i));
                ++runs;
            }
    detail << " " << runs << " random configurations, all admit a partition";
}

void c8_rectilinear_equivalence(int threads, bool& pass, std::ostringstream& detail) {
    TverbergEnumOptions to;
    to.threads = threads;
    WindingEnumOptions wo;
    wo.threads = threads;
    int runs = 0;
    for (int q : {2, 3})
        for (int i = 0; i < 25; ++i) {
            int n = 3 * (q - 1) + 1;
            PointConfiguration cfg =
                random_gp_config(2, n, 0x8EC7ull * 999983 + q * 97 + i);
            TverbergEnumeration tv =
                enumerate_tverberg_partitions(cfg, q, TverbergMode::general_position, to);
            Drawing dr = straight_line_drawing(cfg);
            WindingEnumeration wr = enumerate_winding_partitions(dr, q, WindingMode::simplex, wo);
            expect(tv.count == wr.count, pass, detail,
                   "count mismatch q=" + std::to_string(q) + ",i=" + std::to_string(i));
            std::set<FacePartition> tset, wset;
            for (const TverbergCertificate& c : tv.certificates)
                tset.insert(canonical_partition(c.partition));
            for (const WindingCertificate& c : wr.certificates) {
                FacePartition parts;
                for (const Face& f : c.faces) {
                    std::vector<int> labels;
                    for (int v : f.vertices) labels.push_back(v - 1);
                    parts.push_back(std::move(labels));
                }
                wset.insert(canonical_partition(parts));
            }
            expect(tset == wset, pass, detail,
                   "partition sets differ q=" + std::to_string(q) + ",i=" + std::to_string(i));
            ++runs;
        }
    detail << " " << runs << " configurations, counts and partition sets agree";
}

void c9_full_mode_shape(int threads, bool& pass, std::ostringstream& detail) {
    TverbergEnumOptions o;
    o.threads = threads;
    int runs = 0;
    long long parts_seen = 0;
    for (int q : {2, 3})
        for (int i = 0; i < 25; ++i) {
            int n = 3 * (q - 1) + 1;
            PointConfiguration cfg =
                random_gp_config(2, n, 0xF0F0ull * 7321 + q * 11 + i);
            TverbergEnumeration r = enumerate_tverberg_partitions(cfg, q, TverbergMode::full, o);
            for (const TverbergCertificate& c : r.certificates) {
                std::set<int> covered;
                for (const auto& part : c.partition) {
                    expect(static_cast<int>(part.size()) <= 3, pass, detail, "oversized part");
                    covered.insert(part.begin(), part.end());
                }
                expect(static_cast<int>(covered.size()) == n, pass, detail, "uncovered labels");
                ++parts_seen;
            }
            ++runs;
        }
    detail << " " << runs << " full-mode runs, " << parts_seen
           << " partitions, all Radon-shaped";
}

void c10_dual_implementations(int, bool& pass, std::ostringstream& detail) {
    Rng rng(0xABCDEFull);
    int lp_agree = 0;
    for (int t = 0; t < 500; ++t) {
        int d = 1 + static_cast<int>(rng.range(0, 2));
        int n = static_cast<int>(rng.range(d + 2, 8));
        PointConfiguration c;
        c.d = d;
        for (int i = 0; i < n; ++i) {
            PointD p;
            for (int k = 0; k < d; ++k)
                p.push_back(Rat(Int(rng.range(-50, 50)), Int(rng.range(1, 8))));
            c.points.push_back(std::move(p));
        }
        int q = (n >= 6 && rng.range(0, 1)) ? 3 : 2;
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(labels[i], labels[rng.range(0, i)]);
        FacePartition parts(q);
        for (int k = 0; k < q; ++k) parts[k].push_back(labels[k]);
        for (int i = q; i < n; ++i) {
            long long slot = rng.range(0, q); // q = leave unassigned
            if (slot < q) parts[slot].push_back(labels[i]);
        }
        bool lp = hulls_intersect(c, parts).has_value();
        bool fm = fm_hulls_intersect(c, parts);
        if (lp == fm) ++lp_agree;
        expect(lp == fm, pass, detail, "hull test disagreement at t=" + std::to_string(t));
    }
    int wind_agree = 0;
    for (int t = 0; t < 1000; ++t) {
        Polyline poly = random_closed_polyline(rng, 3 + static_cast<int>(rng.range(0, 5)));
        Point2 p;
        do {
            p = Point2{Rat(Int(rng.range(-70, 70)), Int(rng.range(1, 7))),
                       Rat(Int(rng.range(-70, 70)), Int(rng.range(1, 7)))};
        } while (point_on_polyline(p, poly));
        long a = winding_number(poly, p);
        long b = winding_number_quadrant(poly, p);
        if (a == b) ++wind_agree;
        expect(a == b, pass, detail, "winding disagreement at t=" + std::to_string(t));
    }
    detail << " hulls " << lp_agree << "/500, winding " << wind_agree << "/1000";
}

void c11_two_winding(int, bool& pass, std::ostringstream& detail) {
    auto agree = [&](const Graph& g) {
        bool a = is_2winding(g);
        bool b = has_minor(g, MinorPattern::K4) || has_minor(g, MinorPattern::K23);
        return a == b;
    };
    long long checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : all_iso_classes(n)) {
            expect(agree(graph_from_mask(n, mask)), pass, detail,
                   "iso class n=" + std::to_string(n) + " mask=" + std::to_string(mask));
            ++checked;
        }
    long long exhaustive = checked;
    Rng rng(0x2Bull);
    for (int t = 0; t < 300; ++t) {
        std::uint64_t mask = rng.next() & ((1ULL << 21) - 1);
        expect(agree(graph_from_mask(7, mask)), pass, detail,
               "random n=7 mask=" + std::to_string(mask));
        ++checked;
    }
    expect(is_2winding(complete_graph(4)), pass, detail, "K4 must be 2-winding");
    Graph k23 = make_graph(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    expect(is_2winding(k23), pass, detail, "K23 must be 2-winding");
    std::vector<Graph> outerplanar;
    for (int n = 3; n <= 7; ++n) { // cycles
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
        e.push_back({n, 1});
        outerplanar.push_back(make_graph(n, e));
    }
    for (int n = 2; n <= 7; ++n) { // paths
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
        outerplanar.push_back(make_graph(n, e));
    }
    { // fan: apex joined to a path (maximal outerplanar)
        std::vector<std::pair<int, int>> e;
        for (int i = 2; i < 6; ++i) e.push_back({i, i + 1});
        for (int i = 2; i <= 6; ++i) e.push_back({1, i});
        outerplanar.push_back(make_graph(6, e));
    }
    for (const Graph& g : outerplanar)
        expect(!is_2winding(g), pass, detail, "outerplanar graph classified 2-winding");
    detail << " " << exhaustive << " exhaustive classes (n<=6) + 300 random n=7 + "
           << (2 + outerplanar.size()) << " named graphs";
}

void c12_d1_counts(int, bool& pass, std::ostringstream& detail) {
    Rng rng(0x77ull);
    for (int q = 2; q <= 6; ++q)
        for (int trial = 0; trial < 3; ++trial) {
            std::set<Rat> pool;
            while (static_cast<int>(pool.size()) < 2 * q - 1)
                pool.insert(Rat(Int(rng.range(-300, 300)), Int(rng.range(1, 12))));
            std::vector<Rat> values(pool.begin(), pool.end());
            for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
                std::swap(values[i], values[rng.range(0, i)]);
            auto r = enumerate_winding_partitions_d1(values, q);
            expect(Int(static_cast<long>(r.size())) == factorial(q - 1), pass, detail,
                   "count q=" + std::to_string(q) + " trial=" + std::to_string(trial));
            for (const WindingPartitionD1& wp : r) {
                for (const auto& face : wp.faces) {
                    if (face.size() == 1)
                        expect(values[face[0] - 1] == wp.point, pass, detail, "singleton value");
                    else {
                        const Rat& a = values[face[0] - 1];
                        const Rat& b = values[face[1] - 1];
                        expect((a <= wp.point && wp.point <= b) ||
                                   (b <= wp.point && wp.point <= a),
                               pass, detail, "pair does not straddle");
                    }
                }
            }
        }
    detail << " q=2..6, 3 trials each, counts (q-1)!";
}

} // namespace

const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> cs = {
        make(1, "sierksma-partition-counts", "paper-tables", 120000, c1_sierksma_counts),
        make(2, "lower-bound-tables", "paper-tables", 0, c2_bound_tables),
        make(3, "alternating-model-winding-counts", "paper-tables", 300000, c3_altmodel_counts),
        make(4, "alternating-model-winding-point", "paper-tables", 0, c4_winding_point),
        make(5, "star-deletion-empty", "paper-tables", 600000, c5_star_deletion),
        make(6, "matching-avoiding-nonempty", "paper-tables", 0, c6_matching_avoiding),
        make(7, "tverberg-existence-random", "oracles", 0, c7_tverberg_existence),
        make(8, "rectilinear-equivalence", "oracles", 0, c8_rectilinear_equivalence),
        make(9, "full-mode-partition-shape", "oracles", 0, c9_full_mode_shape),
        make(10, "dual-implementation-agreement", "oracles", 0, c10_dual_implementations),
        make(11, "two-winding-classification", "oracles", 0, c11_two_winding),
        make(12, "d1-partition-counts", "paper-tables", 0, c12_d1_counts),
    };
    return cs;
}

std::vector<CriterionResult> run_suite(const std::string& suite, int threads) {
    if (suite != "paper-tables" && suite != "oracles" && suite != "all")
        throw std::invalid_argument("unknown suite \"" + suite + "\"");
    std::vector<CriterionResult> out;
    for (const Criterion& c : all_criteria())
        if (suite == "all" || suite == c.suite) out.push_back(c.run(threads));
    return out;
}

std::string format_result_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6.1fs", r.wall_ms / 1000.0);
    std::string line = "criterion " + std::to_string(r.id) + " [" + r.name + "] ";
    line += r.pass ? "PASS" : "FAIL";
    line += " (";
    line += buf;
    line += ")";
    if (!r.detail.empty()) line += r.detail;
    return line;
}

} // namespace tvw::accept
