#include "gr/detectors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gr {

namespace {

void check_color(const ColoredCompleteGraph& g, int c) {
    if (c < 1 || c > g.k()) throw std::out_of_range("color out of range");
}

// Centers ordered by descending color degree: fails fast on dense classes.
std::vector<int> centers_by_degree(const ColorClassView& view) {
    std::vector<int> order(view.graph->n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return view.adj[a].count() > view.adj[b].count();
    });
    return order;
}

// Exact search for a matching of `need` disjoint edges inside the color class
// restricted to `avail`. Branches on the first vertex: skip it or match it.
bool find_matching(const ColorClassView& view, Bitset avail, int need,
                   std::vector<int>& edges, uint64_t& nodes) {
    if (need == 0) return true;
    ++nodes;
    if (avail.count() < 2 * need) return false;
    int u = avail.first();
    if (u < 0) return false;
    avail.reset(u);
    Bitset nbrs = view.adj[u] & avail;
    bool ok = false;
    nbrs.for_each([&](int w) {
        if (ok) return;
        Bitset rest = avail;
        rest.reset(w);
        edges.push_back(u);
        edges.push_back(w);
        if (find_matching(view, rest, need - 1, edges, nodes)) {
            ok = true;
            return;
        }
        edges.pop_back();
        edges.pop_back();
    });
    if (ok) return true;
    // u unmatched
    return find_matching(view, avail, need, edges, nodes);
}

// Exact search for a path on `m` vertices inside `avail`, extending from the
// back of `path`. When `close_to` >= 0 the full path must additionally close
// back to that vertex (cycle search).
bool extend_path(const ColorClassView& view, const Bitset& avail, Bitset& used,
                 std::vector<int>& path, int m, int close_to, uint64_t& nodes) {
    ++nodes;
    if (static_cast<int>(path.size()) == m)
        return close_to < 0 || view.adj[path.back()].test(close_to);
    Bitset cand = view.adj[path.back()] & avail;
    bool ok = false;
    cand.for_each([&](int w) {
        if (ok || used.test(w)) return;
        used.set(w);
        path.push_back(w);
        if (extend_path(view, avail, used, path, m, close_to, nodes)) {
            ok = true;
            return;
        }
        path.pop_back();
        used.reset(w);
    });
    return ok;
}

bool find_path_in(const ColorClassView& view, const Bitset& avail, int m,
                  std::vector<int>& path, uint64_t& nodes) {
    Bitset used(view.graph->n());
    bool ok = false;
    avail.for_each([&](int s) {
        if (ok) return;
        path.assign(1, s);
        used.clear();
        used.set(s);
        if (extend_path(view, avail, used, path, m, -1, nodes)) ok = true;
    });
    if (!ok) path.clear();
    return ok;
}

// Cycle on m vertices inside avail; canonical form starts at the least cycle
// vertex, so higher-numbered vertices only.
bool find_cycle_in(const ColorClassView& view, const Bitset& avail, int m,
                   std::vector<int>& cyc, uint64_t& nodes) {
    Bitset used(view.graph->n());
    bool ok = false;
    avail.for_each([&](int s) {
        if (ok) return;
        Bitset higher(view.graph->n());
        avail.for_each([&](int v) { if (v > s) higher.set(v); });
        higher.set(s);
        cyc.assign(1, s);
        used.clear();
        used.set(s);
        if (extend_path(view, higher, used, cyc, m, s, nodes)) ok = true;
    });
    if (!ok) cyc.clear();
    return ok;
}

}  // namespace

DetectionReport find_rainbow_triangle(const ColoredCompleteGraph& g) {
    DetectionReport r{PatternKind::Rainbow, 3, -1};
    int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            int cuv = g.color(u, v);
            for (int w = v + 1; w < n; ++w) {
                ++r.nodes_explored;
                if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
                int cuw = g.color(u, w), cvw = g.color(v, w);
                if (cuv != cuw && cuv != cvw && cuw != cvw) {
                    r.witness = {u, v, w};
                    return r;
                }
            }
        }
    return r;
}

DetectionReport find_mono_fan(const ColoredCompleteGraph& g, int c, int n) {
    check_color(g, c);
    if (n < 1) throw std::invalid_argument("fan needs n >= 1");
    DetectionReport r{PatternKind::Fan, n, c};
    ColorClassView view(g, c);
    for (int v : centers_by_degree(view)) {
        if (view.adj[v].count() < 2 * n) continue;
        std::vector<int> edges;
        if (find_matching(view, view.adj[v], n, edges, r.nodes_explored)) {
            edges.insert(edges.begin(), v);
            r.witness = std::move(edges);
            return r;
        }
    }
    return r;
}

DetectionReport find_mono_kipas(const ColoredCompleteGraph& g, int c, int m) {
    check_color(g, c);
    if (m < 2) throw std::invalid_argument("kipas needs m >= 2");
    DetectionReport r{PatternKind::Kipas, m, c};
    ColorClassView view(g, c);
    for (int v : centers_by_degree(view)) {
        if (view.adj[v].count() < m) continue;
        std::vector<int> path;
        if (find_path_in(view, view.adj[v], m, path, r.nodes_explored)) {
            path.insert(path.begin(), v);
            r.witness = std::move(path);
            return r;
        }
    }
    return r;
}

DetectionReport find_mono_wheel(const ColoredCompleteGraph& g, int c, int m) {
    check_color(g, c);
    if (m < 3) throw std::invalid_argument("wheel needs m >= 3");
    DetectionReport r{PatternKind::Wheel, m, c};
    ColorClassView view(g, c);
    for (int v : centers_by_degree(view)) {
        if (view.adj[v].count() < m) continue;
        std::vector<int> cyc;
        if (find_cycle_in(view, view.adj[v], m, cyc, r.nodes_explored)) {
            cyc.insert(cyc.begin(), v);
            r.witness = std::move(cyc);
            return r;
        }
    }
    return r;
}

DetectionReport find_mono_star(const ColoredCompleteGraph& g, int c, int n) {
    check_color(g, c);
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    DetectionReport r{PatternKind::Star, n, c};
    for (int v = 0; v < g.n(); ++v) {
        ++r.nodes_explored;
        Bitset nbrs = g.color_neighbors(v, c);
        if (nbrs.count() >= n) {
            std::vector<int> w{v};
            nbrs.for_each([&](int u) {
                if (static_cast<int>(w.size()) <= n) w.push_back(u);
            });
            w.resize(n + 1);
            r.witness = std::move(w);
            return r;
        }
    }
    return r;
}

DetectionReport find_mono_subdivided_star(const ColoredCompleteGraph& g, int c, int n) {
    check_color(g, c);
    if (n < 2) throw std::invalid_argument("subdivided star needs n >= 2");
    DetectionReport r{PatternKind::SubdividedStar, n, c};
    ColorClassView view(g, c);
    for (int v : centers_by_degree(view)) {
        int deg = view.adj[v].count();
        if (deg < n) continue;
        bool done = false;
        view.adj[v].for_each([&](int u) {
            if (done) return;
            view.adj[u].for_each([&](int x) {
                if (done || x == v) return;
                ++r.nodes_explored;
                int avail = deg - (view.adj[v].test(x) ? 1 : 0);
                if (avail < n) return;
                std::vector<int> w{v, u};
                view.adj[v].for_each([&](int y) {
                    if (static_cast<int>(w.size()) < n + 1 && y != u && y != x) w.push_back(y);
                });
                w.push_back(x);
                r.witness = std::move(w);
                done = true;
            });
        });
        if (done) return r;
    }
    return r;
}

DetectionReport find_mono_triangle(const ColoredCompleteGraph& g, int c) {
    check_color(g, c);
    DetectionReport r{PatternKind::Triangle, 3, c};
    ColorClassView view(g, c);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (!view.adj[u].test(v)) continue;
            ++r.nodes_explored;
            Bitset common = view.adj[u] & view.adj[v];
            int w = common.first();
            if (w >= 0) {
                r.witness = {u, v, w};
                return r;
            }
        }
    }
    return r;
}

DetectionReport find_mono_path(const ColoredCompleteGraph& g, int c, int m) {
    check_color(g, c);
    if (m < 2) throw std::invalid_argument("path needs m >= 2");
    DetectionReport r{PatternKind::Path, m, c};
    ColorClassView view(g, c);
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    std::vector<int> path;
    if (find_path_in(view, all, m, path, r.nodes_explored)) r.witness = std::move(path);
    return r;
}

DetectionReport embed_oracle(const ColoredCompleteGraph& g, int c, const PatternGraph& pattern) {
    check_color(g, c);
    if (pattern.n > 9) throw std::invalid_argument("embedding oracle is limited to 9 pattern vertices");
    DetectionReport r{pattern.kind, pattern.param, c};

    // Order pattern vertices so each (after the first) touches a placed one.
    std::vector<std::vector<int>> padj(pattern.n);
    for (auto [a, b] : pattern.edges) {
        padj[a].push_back(b);
        padj[b].push_back(a);
    }
    std::vector<int> order, pos(pattern.n, -1);
    for (int seed = 0; seed < pattern.n; ++seed) {
        if (pos[seed] != -1) continue;
        pos[seed] = static_cast<int>(order.size());
        order.push_back(seed);
        for (size_t qi = order.size() - 1; qi < order.size(); ++qi)
            for (int w : padj[order[qi]])
                if (pos[w] == -1) {
                    pos[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
    }

    ColorClassView view(g, c);
    std::vector<int> map(pattern.n, -1);
    Bitset used(g.n());

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == pattern.n) return true;
        int p = order[depth];
        ++r.nodes_explored;
        Bitset cand(g.n());
        bool constrained = false;
        for (int q : padj[p]) {
            if (map[q] < 0) continue;
            if (!constrained) {
                cand = view.adj[map[q]];
                constrained = true;
            } else {
                cand &= view.adj[map[q]];
            }
        }
        if (!constrained)
            for (int v = 0; v < g.n(); ++v) cand.set(v);
        bool ok = false;
        cand.for_each([&](int v) {
            if (ok || used.test(v)) return;
            if (view.adj[v].count() < static_cast<int>(padj[p].size())) return;
            map[p] = v;
            used.set(v);
            if (self(self, depth + 1)) {
                ok = true;
                return;
            }
            map[p] = -1;
            used.reset(v);
        });
        return ok;
    };

    if (rec(rec, 0)) {
        std::vector<int> w(pattern.n);
        for (int p = 0; p < pattern.n; ++p) w[p] = map[p];
        r.witness = std::move(w);
    }
    return r;
}

DetectionReport find_pattern(const ColoredCompleteGraph& g, int c, PatternKind kind, int param) {
    switch (kind) {
        case PatternKind::Rainbow: return find_rainbow_triangle(g);
        case PatternKind::Fan: return find_mono_fan(g, c, param);
        case PatternKind::Kipas: return find_mono_kipas(g, c, param);
        case PatternKind::Wheel: return find_mono_wheel(g, c, param);
        case PatternKind::Star: return find_mono_star(g, c, param);
        case PatternKind::SubdividedStar: return find_mono_subdivided_star(g, c, param);
        case PatternKind::Triangle: return find_mono_triangle(g, c);
        case PatternKind::Path: return find_mono_path(g, c, param);
        case PatternKind::Clique: return embed_oracle(g, c, clique_pattern(param));
    }
    throw std::logic_error("unreachable");
}

bool check_witness(const ColoredCompleteGraph& g, const DetectionReport& r) {
    if (!r.witness) return false;
    const auto& w = *r.witness;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) return false;
    auto mono = [&](int u, int v) { return g.has_edge(u, v) && g.color(u, v) == r.color; };
    switch (r.kind) {
        case PatternKind::Rainbow: {
            if (w.size() != 3) return false;
            if (!g.has_edge(w[0], w[1]) || !g.has_edge(w[0], w[2]) || !g.has_edge(w[1], w[2]))
                return false;
            int a = g.color(w[0], w[1]), b = g.color(w[0], w[2]), c = g.color(w[1], w[2]);
            return a != b && a != c && b != c;
        }
        case PatternKind::Fan: {
            if (static_cast<int>(w.size()) != 1 + 2 * r.param) return false;
            for (int i = 0; i < r.param; ++i) {
                int a = w[1 + 2 * i], b = w[2 + 2 * i];
                if (!mono(w[0], a) || !mono(w[0], b) || !mono(a, b)) return false;
            }
            return true;
        }
        case PatternKind::Kipas: {
            if (static_cast<int>(w.size()) != 1 + r.param) return false;
            for (int i = 1; i <= r.param; ++i) {
                if (!mono(w[0], w[i])) return false;
                if (i < r.param && !mono(w[i], w[i + 1])) return false;
            }
            return true;
        }
        case PatternKind::Wheel: {
            if (static_cast<int>(w.size()) != 1 + r.param) return false;
            for (int i = 1; i <= r.param; ++i) {
                if (!mono(w[0], w[i])) return false;
                if (!mono(w[i], i < r.param ? w[i + 1] : w[1])) return false;
            }
            return true;
        }
        case PatternKind::Star: {
            if (static_cast<int>(w.size()) != 1 + r.param) return false;
            for (int i = 1; i <= r.param; ++i)
                if (!mono(w[0], w[i])) return false;
            return true;
        }
        case PatternKind::SubdividedStar: {
            if (static_cast<int>(w.size()) != r.param + 2) return false;
            for (int i = 1; i <= r.param; ++i)
                if (!mono(w[0], w[i])) return false;
            return mono(w[1], w[r.param + 1]);
        }
        case PatternKind::Triangle:
            return w.size() == 3 && mono(w[0], w[1]) && mono(w[0], w[2]) && mono(w[1], w[2]);
        case PatternKind::Path: {
            if (static_cast<int>(w.size()) != r.param) return false;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (!mono(w[i], w[i + 1])) return false;
            return true;
        }
        case PatternKind::Clique: {
            if (static_cast<int>(w.size()) != r.param) return false;
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = i + 1; j < w.size(); ++j)
                    if (!mono(w[i], w[j])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace gr
