#include "oracles.hpp"

#include "tvw/general_position.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvw::accept {

// ---- Fourier-Motzkin ----

namespace {

struct Row {
    std::vector<Rat> a; // coefficients
    Rat rhs;            // a . x >= rhs (inequality) or = rhs (equality)
};

// Substitutes equalities away by Gaussian pivoting, then eliminates the
// remaining variables pairwise. Returns false on a derived contradiction.
bool fm_feasible(std::vector<Row> eqs, std::vector<Row> ineqs, int nvars) {
    std::vector<char> active(nvars, 1);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        Row& e = eqs[r];
        int pivot = -1;
        for (int v = 0; v < nvars; ++v)
            if (active[v] && e.a[v] != 0) {
                pivot = v;
                break;
            }
        if (pivot < 0) {
            if (e.rhs != 0) return false;
            continue;
        }
        active[pivot] = 0;
        Rat pc = e.a[pivot];
        auto substitute = [&](Row& t) {
            if (t.a[pivot] == 0) return;
            Rat f = Rat(t.a[pivot] / pc);
            for (int v = 0; v < nvars; ++v) t.a[v] = Rat(t.a[v] - f * e.a[v]);
            t.rhs = Rat(t.rhs - f * e.rhs);
        };
        for (std::size_t r2 = r + 1; r2 < eqs.size(); ++r2) substitute(eqs[r2]);
        for (Row& t : ineqs) substitute(t);
    }

    for (int v = 0; v < nvars; ++v) {
        if (!active[v]) continue;
        std::vector<Row> pos, neg, rest;
        for (Row& t : ineqs) {
            if (t.a[v] > 0) pos.push_back(std::move(t));
            else if (t.a[v] < 0) neg.push_back(std::move(t));
            else rest.push_back(std::move(t));
        }
        for (const Row& p : pos)
            for (const Row& q : neg) {
                // scale by -q.a[v] > 0 and p.a[v] > 0: the v terms cancel
                Row c;
                c.a.assign(nvars, Rat(0));
                Rat sp = Rat(-q.a[v]), sq = p.a[v];
                for (int w = 0; w < nvars; ++w) c.a[w] = Rat(sp * p.a[w] + sq * q.a[w]);
                c.rhs = Rat(sp * p.rhs + sq * q.rhs);
                rest.push_back(std::move(c));
            }
        ineqs = std::move(rest);
        active[v] = 0;
    }

    for (const Row& t : ineqs)
        if (t.rhs > 0) return false; // 0 >= positive
    return true;
}

} // namespace

bool fm_hulls_intersect(const PointConfiguration& c,
                        const std::vector<std::vector<int>>& parts) {
    int nvars = 0;
    for (const auto& p : parts) nvars += static_cast<int>(p.size());
    std::vector<Row> eqs, ineqs;

    // variable layout: barycentric weights, part-major
    std::vector<int> offset(parts.size());
    {
        int at = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            offset[k] = at;
            at += static_cast<int>(parts[k].size());
        }
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        Row sum;
        sum.a.assign(nvars, Rat(0));
        for (std::size_t j = 0; j < parts[k].size(); ++j) sum.a[offset[k] + j] = Rat(1);
        sum.rhs = Rat(1);
        eqs.push_back(std::move(sum));
    }
    for (std::size_t k = 1; k < parts.size(); ++k) {
        for (int t = 0; t < c.d; ++t) {
            Row r;
            r.a.assign(nvars, Rat(0));
            for (std::size_t j = 0; j < parts[0].size(); ++j)
                r.a[offset[0] + j] = c.points[parts[0][j]][t];
            for (std::size_t j = 0; j < parts[k].size(); ++j)
                r.a[offset[k] + j] = Rat(-c.points[parts[k][j]][t]);
            r.rhs = Rat(0);
            eqs.push_back(std::move(r));
        }
    }
    for (int v = 0; v < nvars; ++v) {
        Row r;
        r.a.assign(nvars, Rat(0));
        r.a[v] = Rat(1);
        r.rhs = Rat(0);
        ineqs.push_back(std::move(r));
    }
    return fm_feasible(std::move(eqs), std::move(ineqs), nvars);
}

// ---- brute-force partitions ----

void all_partitions(int n, int q, bool allow_uncovered,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> parts;
    std::function<void(int)> rec = [&](int label) {
        if (label == n) {
            if (static_cast<int>(parts.size()) == q) emit(parts);
            return;
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
            parts[k].push_back(label);
            rec(label + 1);
            parts[k].pop_back();
        }
        if (static_cast<int>(parts.size()) < q) {
            parts.push_back({label});
            rec(label + 1);
            parts.pop_back();
        }
        if (allow_uncovered) rec(label + 1);
    };
    rec(0);
}

// ---- alternating-model crossing oracle ----

std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> altmodel_interleaving_pairs(int n) {
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (int i = 1; i <= n; ++i)
        for (int k = 2; i + k <= n; ++k)
            for (int j = i + 1; j <= n; ++j)
                for (int l = 2; j + l <= n; ++l) {
                    if ((i % 2) != (j % 2)) continue; // opposite sides never meet
                    if (!(i < j && j < i + k && i + k < j + l)) continue;
                    out.insert({{i, i + k}, {j, j + l}});
                }
    return out;
}

// ---- random configurations ----

PointConfiguration random_gp_config(int d, int n, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PointConfiguration c;
        c.d = d;
        for (int i = 0; i < n; ++i) {
            PointD p;
            for (int t = 0; t < d; ++t)
                p.push_back(Rat(Int(rng.range(-4000, 4000)), Int(rng.range(1, 40))));
            c.points.push_back(std::move(p));
        }
        if (check_affine_general_position(c)) return c;
    }
    throw std::runtime_error("could not sample a general-position configuration");
}

Drawing straight_line_drawing(const PointConfiguration& c) {
    if (c.d != 2) throw std::invalid_argument("straight-line drawing needs d = 2");
    int n = static_cast<int>(c.points.size());
    Drawing dr;
    dr.graph = complete_graph(n);
    for (const PointD& p : c.points) dr.placement.push_back(Point2{p[0], p[1]});
    for (const auto& e : dr.graph.edges)
        dr.routes.emplace(e, Polyline{{dr.placement[e.first - 1], dr.placement[e.second - 1]}});
    return dr;
}

Drawing jitter_drawing(const Drawing& d, std::uint64_t seed) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        Drawing j = d;
        int slot = 0;
        for (auto& [e, poly] : j.routes) {
            (void)e;
            for (std::size_t i = 1; i + 1 < poly.pts.size(); ++i) {
                std::uint64_t h = mix64(seed ^ (static_cast<std::uint64_t>(attempt) << 48) ^
                                        (static_cast<std::uint64_t>(slot) << 16) ^ i);
                long long ax = static_cast<long long>(h % 257) - 128;
                long long ay = static_cast<long long>((h >> 32) % 257) - 128;
                poly.pts[i].x = Rat(poly.pts[i].x + Rat(Int(ax), Int(512)));
                poly.pts[i].y = Rat(poly.pts[i].y + Rat(Int(ay), Int(512)));
            }
            ++slot;
        }
        try {
            validate_drawing_structure(j);
            if (validate_general_position(j).ok()) return j;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("could not jitter the drawing into general position");
}

// ---- labeled-graph isomorphism classes ----

namespace {

int pair_bit(int n, int u, int v) {
    // 0-based u < v; bits in lexicographic pair order
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == u && b == v) return idx;
            ++idx;
        }
    return -1;
}

} // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (mask & (1ULL << idx)) edges.push_back({a + 1, b + 1});
            ++idx;
        }
    return make_graph(n, edges);
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    // precompute bit index per pair
    std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) bit[a][b] = bit[b][a] = pair_bit(n, a, b);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t m = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mask & (1ULL << bit[a][b])) m |= 1ULL << bit[perm[a]][perm[b]];
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::uint64_t> all_iso_classes(int n) {
    int bits = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask)
        classes.insert(canonical_mask(n, mask));
    return std::vector<std::uint64_t>(classes.begin(), classes.end());
}

// ---- random closed polylines ----

Polyline random_closed_polyline(Rng& rng, int segments) {
    if (segments < 3) throw std::invalid_argument("need at least 3 segments");
    while (true) {
        std::vector<Point2> pts;
        for (int i = 0; i < segments; ++i)
            pts.push_back(Point2{Rat(Int(rng.range(-60, 60)), Int(rng.range(1, 6))),
                                 Rat(Int(rng.range(-60, 60)), Int(rng.range(1, 6)))});
        bool ok = true;
        for (int i = 0; i + 1 < segments; ++i)
            if (pts[i] == pts[i + 1]) ok = false;
        if (pts.back() == pts.front()) ok = false;
        if (!ok) continue;
        pts.push_back(pts.front());
        return Polyline{std::move(pts)};
    }
}

} // namespace tvw::accept
