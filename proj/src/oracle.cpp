#include "gr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gr/constructions.hpp"

namespace gr {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<std::pair<int, int>> edge_list(int n) {
    // Column-major: when edge (u,v) is placed, every edge inside {0..u} x {v}
    // and {0..u-1} choose 2 is already placed, so triangles close early.
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) e.emplace_back(u, v);
    return e;
}

}  // namespace

int ramsey2_exact(const PatternGraph& p1, const PatternGraph& p2, int n_max) {
    require(p1.n <= 8 && p2.n <= 8, "patterns up to 8 vertices");
    require(n_max >= 1 && n_max <= 7, "n_max must be in [1,7]");
    for (int n = 1; n <= n_max; ++n) {
        if (n == 1) {
            if (p1.n <= 1 || p2.n <= 1) return 1;
            continue;
        }
        auto edges = edge_list(n);
        int free_edges = static_cast<int>(edges.size()) - 1;
        ColoredCompleteGraph g(n, 2, 1);
        bool all_good = true;
        for (long long mask = 0; mask < (1LL << free_edges) && all_good; ++mask) {
            for (int i = 0; i < free_edges; ++i) {
                auto [u, v] = edges[i + 1];
                g.set_color(u, v, (mask >> i & 1) ? 2 : 1);
            }
            // Edge {0,1} is pinned to color 1; checking both role orders
            // covers the colorings with it in color 2.
            bool direct = embed_oracle(g, 1, p1).found() || embed_oracle(g, 2, p2).found();
            bool swapped = embed_oracle(g, 1, p2).found() || embed_oracle(g, 2, p1).found();
            all_good = direct && swapped;
        }
        if (all_good) return n;
    }
    return n_max + 1;
}

namespace {

struct GallaiEnum {
    const PatternGraph& pattern;
    int k;
    std::vector<std::pair<int, int>> edges;
    ColoredCompleteGraph g;

    GallaiEnum(const PatternGraph& p, int k, int n)
        : pattern(p), k(k), edges(edge_list(n)), g(n, k, 1) {}

    // True if some rainbow-free completion from edge index e lacks a
    // monochromatic copy of the pattern.
    bool bad_exists(size_t e) {
        if (e == edges.size()) {
            for (int c = 1; c <= k; ++c)
                if (embed_oracle(g, c, pattern).found()) return false;
            return true;
        }
        auto [u, v] = edges[e];
        int hi = e == 0 ? 1 : k;  // edge {0,1} pinned to color 1
        for (int c = 1; c <= hi; ++c) {
            bool rainbow = false;
            for (int t = 0; t < u && !rainbow; ++t) {
                int a = g.color(t, u), b = g.color(t, v);
                rainbow = a != b && a != c && b != c;
            }
            if (rainbow) continue;
            g.set_color(u, v, c);
            if (bad_exists(e + 1)) return true;
        }
        return false;
    }
};

}  // namespace

int gallai_ramsey_exhaustive(const PatternGraph& pattern, int k, int n_max) {
    require(pattern.n <= 9, "pattern up to 9 vertices");
    require(k >= 1, "k >= 1");
    require(n_max >= 1 && n_max <= 6, "n_max must be in [1,6]");
    for (int n = 1; n <= n_max; ++n) {
        if (n == 1) {
            if (pattern.n <= 1) return 1;
            continue;
        }
        GallaiEnum e(pattern, k, n);
        if (!e.bad_exists(0)) return n;
    }
    return n_max + 1;
}

namespace {

bool kipas_free(const ColoredCompleteGraph& g, int m) {
    return !find_mono_kipas(g, 1, m).found() && !find_mono_kipas(g, 2, m).found();
}

ColoredCompleteGraph grow_by_one(const ColoredCompleteGraph& g, std::mt19937_64& rng) {
    ColoredCompleteGraph out(g.n() + 1, 2, 1);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) out.set_color(u, v, g.color(u, v));
    int w = g.n();
    for (int u = 0; u < w; ++u) {
        // Greedy: join u in whichever color it currently sees less of.
        int d1 = out.color_degree(u, 1), d2 = out.color_degree(u, 2);
        int c = d1 < d2 ? 1 : d2 < d1 ? 2 : 1 + static_cast<int>(rng() & 1);
        out.set_color(u, w, c);
    }
    return out;
}

}  // namespace

ColoredCompleteGraph heuristic_base_search(int m, const SearchBudget& budget) {
    require(m >= 6, "heuristic_base_search needs m >= 6");
    ColoredCompleteGraph seed = default_kipas_base(m);
    if (!kipas_free(seed, m)) throw std::logic_error("seed graph failed verification");
    ColoredCompleteGraph best = seed;
    for (int r = 0; r < std::max(1, budget.restarts); ++r) {
        std::mt19937_64 rng(budget.seed + static_cast<uint64_t>(r));
        ColoredCompleteGraph cur = seed;
        for (long long step = 0; step < budget.steps; ++step) {
            if (rng() % 5 == 0) {
                ColoredCompleteGraph grown = grow_by_one(cur, rng);
                if (kipas_free(grown, m)) cur = std::move(grown);
            } else {
                int u = static_cast<int>(rng() % cur.n());
                int v = static_cast<int>(rng() % cur.n());
                if (u == v) continue;
                int c = cur.color(u, v);
                cur.set_color(u, v, 3 - c);
                if (!kipas_free(cur, m)) cur.set_color(u, v, c);
            }
            if (cur.n() > best.n()) best = cur;
        }
    }
    if (!kipas_free(best, m)) throw std::logic_error("search produced an unverified graph");
    return best;
}

FanWitnessReport fan_lower_witness_check() {
    ColoredCompleteGraph g = contract_fan_base();
    FanWitnessReport rep;
    auto p = fan_pattern(3);
    auto d1 = find_mono_fan(g, 1, 3), d2 = find_mono_fan(g, 2, 3);
    auto o1 = embed_oracle(g, 1, p), o2 = embed_oracle(g, 2, p);
    rep.color1_absent = !d1.found();
    rep.color2_absent = !d2.found();
    rep.oracles_agree = d1.found() == o1.found() && d2.found() == o2.found();
    return rep;
}

ColoredCompleteGraph random_coloring(int n, int k, std::mt19937_64& rng) {
    ColoredCompleteGraph g(n, k, 1);
    std::uniform_int_distribution<int> pick(1, k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_color(u, v, pick(rng));
    return g;
}

ColoredCompleteGraph random_gallai_coloring(int n, int k, std::mt19937_64& rng) {
    require(k <= 62, "too many colors for the mask sampler");
    auto edges = edge_list(n);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        ColoredCompleteGraph g(n, k, 1);
        bool ok = true;
        for (auto [u, v] : edges) {
            uint64_t allowed = (k == 62 ? ~0ULL : (1ULL << (k + 1)) - 2);  // bits 1..k
            for (int t = 0; t < u; ++t) {
                int a = g.color(t, u), b = g.color(t, v);
                if (a != b) allowed &= (1ULL << a) | (1ULL << b);
            }
            int cnt = __builtin_popcountll(allowed);
            if (cnt == 0) { ok = false; break; }
            int idx = static_cast<int>(rng() % static_cast<uint64_t>(cnt));
            int c = 0;
            for (int bit = 1; bit <= k; ++bit)
                if (allowed >> bit & 1 && idx-- == 0) { c = bit; break; }
            g.set_color(u, v, c);
        }
        if (ok) return g;
    }
    throw std::runtime_error("rainbow-free sampler failed to converge");
}

namespace {

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

ColoredCompleteGraph lemma2_random_instance(int m, int max_part, std::mt19937_64& rng) {
    require(m >= 4 && m % 2 == 0, "lemma2_random_instance needs even m >= 4");
    require(max_part >= 1, "max_part >= 1");
    std::uniform_int_distribution<int> part_size(1, max_part);
    std::vector<int> sz(5), off(6, 0);
    for (int i = 0; i < 5; ++i) {
        sz[i] = part_size(rng);
        off[i + 1] = off[i] + sz[i];
    }
    int n = off[5];
    ColoredCompleteGraph g(n, 2, 2);
    for (int bi = 0; bi < 5; ++bi)
        for (int bj = bi + 1; bj < 5; ++bj) {
            int c = std::min(bj - bi, 5 - (bj - bi)) == 1 ? 1 : 2;
            for (int u = off[bi]; u < off[bi + 1]; ++u)
                for (int v = off[bj]; v < off[bj + 1]; ++v) g.set_color(u, v, c);
        }
    // Random red subgraphs inside V2 and V5, respecting both hypotheses:
    // degree <= m/2-1 and red component order <= m-1.
    for (int b : {1, 4}) {
        int s = sz[b];
        if (s < 2) continue;
        std::vector<int> deg(s, 0);
        Dsu dsu(s);
        std::uniform_int_distribution<int> pick(0, s - 1);
        for (int t = 0; t < 3 * s * s; ++t) {
            int a = pick(rng), c = pick(rng);
            if (a == c) continue;
            if (g.color(off[b] + a, off[b] + c) == 1) continue;
            if (deg[a] + 1 > m / 2 - 1 || deg[c] + 1 > m / 2 - 1) continue;
            int ra = dsu.find(a), rc = dsu.find(c);
            if (ra != rc && dsu.size[ra] + dsu.size[rc] > m - 1) continue;
            g.set_color(off[b] + a, off[b] + c, 1);
            ++deg[a];
            ++deg[c];
            dsu.unite(a, c);
        }
    }
    return g;
}

}  // namespace gr
