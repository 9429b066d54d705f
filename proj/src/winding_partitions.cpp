#include "tvw/winding_partitions.hpp"

#include "tvw/parallel.hpp"
#include "tvw/predicates.hpp"
#include "tvw/winding_number.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace tvw {

std::vector<CandidatePoint> candidate_points(const Drawing& d) {
    validate_drawing_structure(d);
    GeneralPositionReport rep = validate_general_position(d);
    if (!rep.ok()) throw NotInGeneralPosition(rep);

    std::vector<CandidatePoint> out;
    for (int v = 1; v <= d.graph.n; ++v) {
        CandidatePoint c;
        c.kind = CandidatePoint::Kind::vertex;
        c.vertex = v;
        c.where = d.point_of(v);
        out.push_back(c);
    }
    std::vector<std::pair<int, int>> edges(d.graph.edges.begin(), d.graph.edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, e] = edges[j];
            if (a == c || a == e || b == c || b == e) continue;
            const Polyline& ri = d.route_of(a, b);
            const Polyline& rj = d.route_of(c, e);
            for (std::size_t s = 0; s + 1 < ri.pts.size(); ++s) {
                for (std::size_t t = 0; t + 1 < rj.pts.size(); ++t) {
                    SegIntersection in = segment_intersection(ri.pts[s], ri.pts[s + 1],
                                                              rj.pts[t], rj.pts[t + 1]);
                    if (in.kind != SegKind::transversal) continue;
                    CandidatePoint cp;
                    cp.kind = CandidatePoint::Kind::crossing;
                    cp.where = *in.point;
                    cp.e1 = edges[i];
                    cp.e2 = edges[j];
                    out.push_back(cp);
                }
            }
        }
    }
    return out;
}

Face canonical_face(Face f) {
    auto& v = f.vertices;
    if (f.kind == Face::Kind::cycle) {
        auto it = std::min_element(v.begin(), v.end());
        std::rotate(v.begin(), it, v.end());
        std::vector<int> rev = v;
        std::reverse(rev.begin() + 1, rev.end());
        if (rev < v) v = rev;
        return f;
    }
    if (v.size() == 1) {
        f.kind = Face::Kind::vertex;
        return f;
    }
    if (v.size() == 2) {
        f.kind = Face::Kind::edge;
        if (v[0] > v[1]) std::swap(v[0], v[1]);
        return f;
    }
    f.kind = Face::Kind::path;
    std::vector<int> rev(v.rbegin(), v.rend());
    if (rev < v) v = rev;
    return f;
}

namespace {

using FaceKey = std::vector<Face>;

struct CapCounter {
    std::atomic<long long> used{0};
    long long cap;
    explicit CapCounter(long long c) : cap(c) {}
};

// Backtracking search rooted at one candidate point. All mutable state is
// local to the worker; the drawing and adjacency lists are shared read-only.
struct CandidateSearch {
    const Drawing& dw;
    const std::vector<std::vector<int>>& adj;
    int q;
    WindingMode mode;
    bool count_only;
    const CandidatePoint& cand;
    CapCounter& cap;

    std::vector<char> avail;
    int avail_count = 0;
    int pending_cycles = 0; // cycles still owed once the containment faces are fixed
    std::vector<Face> base_faces;
    std::vector<Face> cycle_faces;
    std::vector<long> cycle_winds;
    std::map<std::vector<int>, long> wind_memo;
    std::map<FaceKey, WindingCertificate> found;
    long long states = 0;
    long long pruned = 0;

    CandidateSearch(const Drawing& d, const std::vector<std::vector<int>>& a, int q_,
                    WindingMode m, bool co, const CandidatePoint& c, CapCounter& cc)
        : dw(d), adj(a), q(q_), mode(m), count_only(co), cand(c), cap(cc) {}

    void bump() {
        ++states;
        if ((states & 1023) == 0) {
            long long g = cap.used.fetch_add(1024, std::memory_order_relaxed) + 1024;
            if (g > cap.cap) throw EnumerationCapExceeded(cap.cap);
        }
    }

    void take(int v) {
        avail[v] = 0;
        --avail_count;
    }
    void give(int v) {
        avail[v] = 1;
        ++avail_count;
    }

    long winding_of(const std::vector<int>& cycle) {
        auto it = wind_memo.find(cycle);
        if (it != wind_memo.end()) return it->second;
        long w = winding_number(cycle_image(dw, cycle), cand.where);
        wind_memo.emplace(cycle, w);
        return w;
    }

    void run() {
        avail.assign(dw.graph.n + 1, 1);
        avail_count = dw.graph.n;
        if (cand.kind == CandidatePoint::Kind::vertex) {
            int v = cand.vertex;
            take(v);
            pending_cycles = q - 1;
            if (mode == WindingMode::simplex) {
                base_faces.push_back(canonical_face(Face{Face::Kind::vertex, {v}}));
                fill_cycles(q - 1, 0);
                base_faces.pop_back();
            } else {
                paths_through_vertex(v);
            }
            give(v);
        } else {
            if (q < 2) return;
            auto [a, b] = cand.e1;
            auto [c, e] = cand.e2;
            take(a), take(b), take(c), take(e);
            pending_cycles = q - 2;
            if (mode == WindingMode::simplex) {
                base_faces.push_back(canonical_face(Face{Face::Kind::edge, {a, b}}));
                base_faces.push_back(canonical_face(Face{Face::Kind::edge, {c, e}}));
                fill_cycles(q - 2, 0);
                base_faces.clear();
            } else {
                paths_through_edge(cand.e1, [&] {
                    paths_through_edge(cand.e2, [&] { fill_cycles(q - 2, 0); });
                });
            }
            give(a), give(b), give(c), give(e);
        }
    }

    // ---- cycle filler: vertex-disjoint winding cycles, minima increasing ----

    void fill_cycles(int left, int min_allowed) {
        bump();
        if (left == 0) {
            complete();
            return;
        }
        if (avail_count < 3 * left) return; // each remaining cycle needs 3 fresh vertices
        int maxlen = mode == WindingMode::simplex ? 3 : dw.graph.n;
        if (mode == WindingMode::simplex) {
            // coverage is mandatory, so the next cycle starts at the smallest free vertex
            for (int m = 1; m <= dw.graph.n; ++m) {
                if (!avail[m]) continue;
                start_cycle(m, left, maxlen);
                break;
            }
        } else {
            for (int m = min_allowed + 1; m <= dw.graph.n; ++m) {
                if (!avail[m]) continue;
                start_cycle(m, left, maxlen);
            }
        }
    }

    void start_cycle(int m, int left, int maxlen) {
        std::vector<int> path{m};
        take(m);
        extend_cycle(path, m, left, maxlen);
        give(m);
    }

    void extend_cycle(std::vector<int>& path, int m, int left, int maxlen) {
        bump();
        int u = path.back();
        if (path.size() >= 3 && dw.graph.has_edge(u, m) && path[1] < path.back()) {
            long w = winding_of(path);
            if (w == 0) {
                ++pruned;
            } else {
                cycle_faces.push_back(Face{Face::Kind::cycle, path});
                cycle_winds.push_back(w);
                fill_cycles(left - 1, m);
                cycle_faces.pop_back();
                cycle_winds.pop_back();
            }
        }
        if (static_cast<int>(path.size()) >= maxlen) return;
        if (avail_count - 1 < 3 * (left - 1)) return; // growing starves the remaining cycles
        for (int w : adj[u]) {
            if (w <= m || !avail[w]) continue;
            take(w);
            path.push_back(w);
            extend_cycle(path, m, left, maxlen);
            path.pop_back();
            give(w);
        }
    }

    // ---- graph-mode containment faces ----

    // Simple paths through v, each exactly once: the path is
    // reverse(armL) + v + armR with armL empty, or both arms nonempty and
    // armL[0] < armR[0].
    void paths_through_vertex(int v) {
        std::vector<int> armR;
        grow_armR(v, v, armR);
    }

    void grow_armR(int v, int u, std::vector<int>& armR) {
        bump();
        emit_vertex_path(v, {}, armR);
        if (!armR.empty()) {
            std::vector<int> armL;
            grow_armL(v, v, armR, armL);
        }
        if (avail_count - 1 < 3 * pending_cycles) return; // longer arms starve the cycles
        for (int w : adj[u]) {
            if (!avail[w]) continue;
            take(w);
            armR.push_back(w);
            grow_armR(v, w, armR);
            armR.pop_back();
            give(w);
        }
    }

    void grow_armL(int v, int u, const std::vector<int>& armR, std::vector<int>& armL) {
        bump();
        if (!armL.empty()) emit_vertex_path(v, armL, armR);
        if (avail_count - 1 < 3 * pending_cycles) return;
        for (int w : adj[u]) {
            if (!avail[w]) continue;
            if (armL.empty() && w >= armR[0]) continue;
            take(w);
            armL.push_back(w);
            grow_armL(v, w, armR, armL);
            armL.pop_back();
            give(w);
        }
    }

    void emit_vertex_path(int v, const std::vector<int>& armL, const std::vector<int>& armR) {
        std::vector<int> seq;
        seq.reserve(armL.size() + 1 + armR.size());
        seq.insert(seq.end(), armL.rbegin(), armL.rend());
        seq.push_back(v);
        seq.insert(seq.end(), armR.begin(), armR.end());
        base_faces.push_back(canonical_face(Face{Face::Kind::path, std::move(seq)}));
        fill_cycles(q - 1, 0);
        base_faces.pop_back();
    }

    // Simple paths containing the edge {e.first, e.second}, each exactly once:
    // reverse(armA) + e.first + e.second + armB. Both endpoints are already
    // marked unavailable by the caller.
    void paths_through_edge(std::pair<int, int> e, const std::function<void()>& next) {
        std::vector<int> armA, armB;
        grow_armA(e, armA, armB, next);
    }

    void grow_armA(std::pair<int, int> e, std::vector<int>& armA, std::vector<int>& armB,
                   const std::function<void()>& next) {
        bump();
        grow_armB(e, armA, armB, next);
        if (avail_count - 1 < 3 * pending_cycles) return;
        int u = armA.empty() ? e.first : armA.back();
        for (int w : adj[u]) {
            if (!avail[w]) continue;
            take(w);
            armA.push_back(w);
            grow_armA(e, armA, armB, next);
            armA.pop_back();
            give(w);
        }
    }

    void grow_armB(std::pair<int, int> e, std::vector<int>& armA, std::vector<int>& armB,
                   const std::function<void()>& next) {
        bump();
        {
            std::vector<int> seq;
            seq.reserve(armA.size() + 2 + armB.size());
            seq.insert(seq.end(), armA.rbegin(), armA.rend());
            seq.push_back(e.first);
            seq.push_back(e.second);
            seq.insert(seq.end(), armB.begin(), armB.end());
            base_faces.push_back(canonical_face(Face{Face::Kind::path, std::move(seq)}));
            next();
            base_faces.pop_back();
        }
        if (avail_count - 1 < 3 * pending_cycles) return;
        int u = armB.empty() ? e.second : armB.back();
        for (int w : adj[u]) {
            if (!avail[w]) continue;
            take(w);
            armB.push_back(w);
            grow_armB(e, armA, armB, next);
            armB.pop_back();
            give(w);
        }
    }

    void complete() {
        std::vector<std::pair<Face, WindingEvidence>> items;
        items.reserve(base_faces.size() + cycle_faces.size());
        for (const Face& f : base_faces)
            items.push_back({f, WindingEvidence{WindingEvidence::Kind::containment, 0}});
        for (std::size_t i = 0; i < cycle_faces.size(); ++i)
            items.push_back({canonical_face(cycle_faces[i]),
                             WindingEvidence{WindingEvidence::Kind::winding, cycle_winds[i]}});
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        FaceKey key;
        key.reserve(items.size());
        for (const auto& it : items) key.push_back(it.first);
        if (found.count(key)) return;
        WindingCertificate cert;
        if (!count_only) {
            cert.faces = key;
            cert.point = cand;
            cert.evidence.reserve(items.size());
            for (const auto& it : items) cert.evidence.push_back(it.second);
        }
        found.emplace(std::move(key), std::move(cert));
    }
};

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

} // namespace

WindingEnumeration enumerate_winding_partitions(const Drawing& d, int q, WindingMode mode,
                                                const WindingEnumOptions& opts) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (mode == WindingMode::simplex) {
        int n = 3 * q - 2;
        if (d.graph.n != n || static_cast<int>(d.graph.edges.size()) != n * (n - 1) / 2)
            throw WrongGraphError("simplex mode requires the complete graph on 3q-2 vertices");
    }
    std::vector<CandidatePoint> cands = candidate_points(d);
    std::vector<std::vector<int>> adj = adjacency(d.graph);
    CapCounter cap(opts.state_cap);

    struct Slot {
        std::map<FaceKey, WindingCertificate> found;
        long long states = 0, pruned = 0;
    };
    std::vector<Slot> slots(cands.size());
    std::mutex err_mutex;
    std::exception_ptr err;

    parallel_for_indexed(opts.threads, cands.size(), [&](std::size_t i) {
        try {
            CandidateSearch cs(d, adj, q, mode, opts.count_only, cands[i], cap);
            cs.run();
            slots[i].found = std::move(cs.found);
            slots[i].states = cs.states;
            slots[i].pruned = cs.pruned;
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);

    WindingEnumeration out;
    out.candidates = static_cast<long long>(cands.size());
    std::map<FaceKey, WindingCertificate> merged;
    for (Slot& s : slots) {
        out.states += s.states;
        out.pruned_zero_winding += s.pruned;
        for (auto& kv : s.found) merged.emplace(std::move(kv.first), std::move(kv.second));
    }
    out.count = static_cast<long long>(merged.size());
    if (!opts.count_only) {
        out.certificates.reserve(merged.size());
        for (auto& kv : merged) out.certificates.push_back(std::move(kv.second));
    }
    return out;
}

long long count_winding_partitions(const Drawing& d, int q, WindingMode mode,
                                   const WindingEnumOptions& opts) {
    WindingEnumOptions o = opts;
    o.count_only = true;
    return enumerate_winding_partitions(d, q, mode, o).count;
}

namespace {

void validate_candidate(const Drawing& d, const CandidatePoint& point) {
    if (point.kind == CandidatePoint::Kind::vertex) {
        if (point.vertex < 1 || point.vertex > d.graph.n)
            throw std::invalid_argument("candidate vertex out of range");
        if (!(point.where == d.point_of(point.vertex)))
            throw std::invalid_argument("candidate location does not match the vertex image");
        return;
    }
    auto e1 = normalized_edge(point.e1.first, point.e1.second);
    auto e2 = normalized_edge(point.e2.first, point.e2.second);
    if (!d.graph.has_edge(e1.first, e1.second) || !d.graph.has_edge(e2.first, e2.second))
        throw std::invalid_argument("candidate crossing edges are not edges of the graph");
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
        e1.second == e2.second)
        throw std::invalid_argument("candidate crossing edges must be vertex-disjoint");
    if (!point_on_polyline(point.where, d.route_of(e1.first, e1.second)) ||
        !point_on_polyline(point.where, d.route_of(e2.first, e2.second)))
        throw std::invalid_argument("candidate location does not lie on both edge routes");
}

void validate_face(const Drawing& d, const Face& f) {
    if (f.vertices.empty()) throw std::invalid_argument("face has no vertices");
    for (int v : f.vertices)
        if (v < 1 || v > d.graph.n) throw std::invalid_argument("face vertex out of range");
    std::set<int> distinct(f.vertices.begin(), f.vertices.end());
    if (distinct.size() != f.vertices.size())
        throw std::invalid_argument("face repeats a vertex");
    switch (f.kind) {
        case Face::Kind::vertex:
            if (f.vertices.size() != 1)
                throw std::invalid_argument("vertex face must have exactly one vertex");
            break;
        case Face::Kind::edge:
            if (f.vertices.size() != 2 || !d.graph.has_edge(f.vertices[0], f.vertices[1]))
                throw std::invalid_argument("edge face must be an edge of the graph");
            break;
        case Face::Kind::path:
            for (std::size_t i = 0; i + 1 < f.vertices.size(); ++i)
                if (!d.graph.has_edge(f.vertices[i], f.vertices[i + 1]))
                    throw std::invalid_argument("path face uses a missing edge");
            break;
        case Face::Kind::cycle:
            if (f.vertices.size() < 3)
                throw std::invalid_argument("cycle face needs at least three vertices");
            for (std::size_t i = 0; i < f.vertices.size(); ++i)
                if (!d.graph.has_edge(f.vertices[i], f.vertices[(i + 1) % f.vertices.size()]))
                    throw std::invalid_argument("cycle face uses a missing edge");
            break;
    }
}

} // namespace

std::optional<WindingCertificate> is_winding_partition(const Drawing& d,
                                                       const std::vector<Face>& faces,
                                                       const CandidatePoint& point) {
    validate_drawing_structure(d);
    GeneralPositionReport rep = validate_general_position(d);
    if (!rep.ok()) throw NotInGeneralPosition(rep);
    validate_candidate(d, point);
    if (faces.empty()) throw std::invalid_argument("partition has no faces");

    std::set<int> used;
    for (const Face& f : faces) {
        validate_face(d, f);
        for (int v : f.vertices) {
            if (!used.insert(v).second) throw OverlappingFacesError();
        }
    }

    std::vector<std::pair<Face, WindingEvidence>> items;
    for (const Face& f : faces) {
        Face cf = canonical_face(f);
        WindingEvidence ev{WindingEvidence::Kind::containment, 0};
        if (cf.kind == Face::Kind::vertex) {
            if (!(point.where == d.point_of(cf.vertices[0]))) return std::nullopt;
        } else if (cf.kind == Face::Kind::edge || cf.kind == Face::Kind::path) {
            if (!point_on_polyline(point.where, path_image(d, f.vertices))) return std::nullopt;
        } else {
            Polyline img = cycle_image(d, f.vertices);
            if (!point_on_polyline(point.where, img)) {
                long w = winding_number(img, point.where);
                if (w == 0) return std::nullopt;
                ev = WindingEvidence{WindingEvidence::Kind::winding, w};
            }
        }
        items.push_back({std::move(cf), ev});
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    WindingCertificate cert;
    cert.point = point;
    for (auto& it : items) {
        cert.faces.push_back(std::move(it.first));
        cert.evidence.push_back(it.second);
    }
    return cert;
}

std::vector<WindingPartitionD1> enumerate_winding_partitions_d1(const std::vector<Rat>& values,
                                                                int q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (static_cast<int>(values.size()) != 2 * q - 1)
        throw std::invalid_argument("expected exactly 2q-1 values");
    int n = 2 * q - 1;

    std::vector<Rat> ps = values;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    auto value_of = [&](int label) -> const Rat& { return values[label - 1]; };
    std::map<std::vector<std::vector<int>>, Rat> found;

    std::vector<std::vector<int>> chosen;
    std::vector<char> used(n + 1, 0);
    // Faces are picked in increasing order of their minimum label, so each
    // face set is generated exactly once in canonical form.
    std::function<void(const Rat&, int, int)> rec = [&](const Rat& p, int min_label, int left) {
        if (left == 0) {
            found.emplace(chosen, p);
            return;
        }
        for (int l = min_label; l <= n; ++l) {
            if (used[l]) continue;
            used[l] = 1;
            if (value_of(l) == p) {
                chosen.push_back({l});
                rec(p, l + 1, left - 1);
                chosen.pop_back();
            }
            for (int m = l + 1; m <= n; ++m) {
                if (used[m]) continue;
                const Rat& a = value_of(l);
                const Rat& b = value_of(m);
                if ((a <= p && p <= b) || (b <= p && p <= a)) {
                    used[m] = 1;
                    chosen.push_back({l, m});
                    rec(p, l + 1, left - 1);
                    chosen.pop_back();
                    used[m] = 0;
                }
            }
            used[l] = 0;
        }
    };
    for (const Rat& p : ps) rec(p, 1, q);

    std::vector<WindingPartitionD1> out;
    out.reserve(found.size());
    for (const auto& kv : found) out.push_back(WindingPartitionD1{kv.first, kv.second});
    return out;
}

WindingEnumeration matching_avoiding_partitions(const Drawing& d, int q,
                                                const std::vector<std::pair<int, int>>& matching,
                                                WindingMode mode,
                                                const WindingEnumOptions& opts) {
    std::set<int> touched;
    for (const auto& e : matching) {
        auto ne = normalized_edge(e.first, e.second);
        if (!d.graph.has_edge(ne.first, ne.second))
            throw std::invalid_argument("matching edge is not an edge of the graph");
        if (!touched.insert(ne.first).second || !touched.insert(ne.second).second)
            throw std::invalid_argument("matching edges must be pairwise vertex-disjoint");
    }

    WindingEnumOptions inner = opts;
    inner.count_only = false;
    WindingEnumeration res = enumerate_winding_partitions(d, q, mode, inner);

    auto face_hits_matching = [&](const Face& f) {
        for (const auto& e : matching) {
            bool ha = false, hb = false;
            for (int v : f.vertices) {
                if (v == e.first) ha = true;
                if (v == e.second) hb = true;
            }
            if (ha && hb) return true;
        }
        return false;
    };

    WindingEnumeration out;
    out.candidates = res.candidates;
    out.states = res.states;
    out.pruned_zero_winding = res.pruned_zero_winding;
    for (auto& cert : res.certificates) {
        bool keep = true;
        for (const Face& f : cert.faces)
            if (face_hits_matching(f)) {
                keep = false;
                break;
            }
        if (keep) out.certificates.push_back(std::move(cert));
    }
    out.count = static_cast<long long>(out.certificates.size());
    if (opts.count_only) out.certificates.clear();
    return out;
}

} // namespace tvw
