#include "gr/recipe.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gr/certificate.hpp"

namespace gr {

namespace {

constexpr long long kMaxExpandVertices = 20000;  // 400 MB color matrix

RecipePtr make(Recipe r) { return std::make_shared<const Recipe>(std::move(r)); }

void validate(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Pentagon:
            if (r.a < 1 || r.b < 1) throw std::invalid_argument("pentagon colors must be >= 1");
            if (r.a == r.b) throw std::invalid_argument("pentagon cycle and chord colors must differ");
            break;
        case Recipe::Kind::Clique:
            if (r.a < 1) throw std::invalid_argument("clique size must be >= 1");
            if (r.b < 1) throw std::invalid_argument("clique color must be >= 1");
            break;
        case Recipe::Kind::Circulant: {
            if (r.a < 3) throw std::invalid_argument("circulant size must be >= 3");
            if (static_cast<int>(r.distance_colors.size()) != r.a / 2)
                throw std::invalid_argument("circulant needs one color per distance 1.." +
                                            std::to_string(r.a / 2));
            for (int c : r.distance_colors)
                if (c < 1) throw std::invalid_argument("circulant colors must be >= 1");
            break;
        }
        case Recipe::Kind::BlowUp:
            if (!r.base) throw std::invalid_argument("blow-up needs a base");
            if (static_cast<long long>(r.children.size()) != vertex_count(*r.base))
                throw std::invalid_argument(
                    "blow-up parts list length " + std::to_string(r.children.size()) +
                    " does not match base vertex count " + std::to_string(vertex_count(*r.base)));
            break;
        case Recipe::Kind::Join:
            if (r.children.size() != 2) throw std::invalid_argument("join needs two children");
            if (r.a < 1) throw std::invalid_argument("join color must be >= 1");
            break;
        case Recipe::Kind::AddApex:
            if (!r.base) throw std::invalid_argument("apex needs a base");
            if (r.a < 1) throw std::invalid_argument("apex color must be >= 1");
            break;
        case Recipe::Kind::Base:
            if (!r.graph) throw std::invalid_argument("base node has no graph");
            break;
    }
}

// Writes the expansion of r into g at vertex offset; returns vertex count used.
long long emit(const Recipe& r, ColoredCompleteGraph& g, long long off) {
    validate(r);
    switch (r.kind) {
        case Recipe::Kind::Pentagon: {
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    int d = std::min(j - i, 5 - (j - i));
                    g.set_color(static_cast<int>(off + i), static_cast<int>(off + j),
                                d == 1 ? r.a : r.b);
                }
            return 5;
        }
        case Recipe::Kind::Clique: {
            for (int i = 0; i < r.a; ++i)
                for (int j = i + 1; j < r.a; ++j)
                    g.set_color(static_cast<int>(off + i), static_cast<int>(off + j), r.b);
            return r.a;
        }
        case Recipe::Kind::Circulant: {
            for (int i = 0; i < r.a; ++i)
                for (int j = i + 1; j < r.a; ++j) {
                    int d = std::min(j - i, r.a - (j - i));
                    g.set_color(static_cast<int>(off + i), static_cast<int>(off + j),
                                r.distance_colors[d - 1]);
                }
            return r.a;
        }
        case Recipe::Kind::BlowUp: {
            int bn = static_cast<int>(vertex_count(*r.base));
            ColoredCompleteGraph base = expand(*r.base, std::max(color_span(*r.base), 1));
            std::vector<long long> start(bn + 1);
            long long cur = off;
            for (int i = 0; i < bn; ++i) {
                start[i] = cur;
                cur += emit(*r.children[i], g, cur);
            }
            start[bn] = cur;
            for (int i = 0; i < bn; ++i)
                for (int j = i + 1; j < bn; ++j) {
                    int c = base.color(i, j);
                    for (long long u = start[i]; u < start[i + 1]; ++u)
                        for (long long v = start[j]; v < start[j + 1]; ++v)
                            g.set_color(static_cast<int>(u), static_cast<int>(v), c);
                }
            return cur - off;
        }
        case Recipe::Kind::Join: {
            long long ln = emit(*r.children[0], g, off);
            long long rn = emit(*r.children[1], g, off + ln);
            for (long long u = off; u < off + ln; ++u)
                for (long long v = off + ln; v < off + ln + rn; ++v)
                    g.set_color(static_cast<int>(u), static_cast<int>(v), r.a);
            return ln + rn;
        }
        case Recipe::Kind::AddApex: {
            long long bn = emit(*r.base, g, off);
            for (long long u = off; u < off + bn; ++u)
                g.set_color(static_cast<int>(u), static_cast<int>(off + bn), r.a);
            return bn + 1;
        }
        case Recipe::Kind::Base: {
            const auto& h = *r.graph;
            for (int i = 0; i < h.n(); ++i)
                for (int j = i + 1; j < h.n(); ++j)
                    g.set_color(static_cast<int>(off + i), static_cast<int>(off + j), h.color(i, j));
            return h.n();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

RecipePtr pentagon(int cycle_color, int chord_color) {
    Recipe r{Recipe::Kind::Pentagon};
    r.a = cycle_color;
    r.b = chord_color;
    validate(r);
    return make(std::move(r));
}

RecipePtr clique(int size, int color) {
    Recipe r{Recipe::Kind::Clique};
    r.a = size;
    r.b = color;
    validate(r);
    return make(std::move(r));
}

RecipePtr circulant(int size, std::vector<int> distance_colors) {
    Recipe r{Recipe::Kind::Circulant};
    r.a = size;
    r.distance_colors = std::move(distance_colors);
    validate(r);
    return make(std::move(r));
}

RecipePtr blow_up(RecipePtr base, std::vector<RecipePtr> parts) {
    Recipe r{Recipe::Kind::BlowUp};
    r.base = std::move(base);
    r.children = std::move(parts);
    validate(r);
    return make(std::move(r));
}

RecipePtr join(RecipePtr left, RecipePtr right, int color) {
    Recipe r{Recipe::Kind::Join};
    r.children = {std::move(left), std::move(right)};
    r.a = color;
    validate(r);
    return make(std::move(r));
}

RecipePtr add_apex(RecipePtr base, int color) {
    Recipe r{Recipe::Kind::AddApex};
    r.base = std::move(base);
    r.a = color;
    validate(r);
    return make(std::move(r));
}

RecipePtr wrap_graph(std::shared_ptr<const ColoredCompleteGraph> g) {
    Recipe r{Recipe::Kind::Base};
    r.graph = std::move(g);
    validate(r);
    return make(std::move(r));
}

long long vertex_count(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Pentagon: return 5;
        case Recipe::Kind::Clique: return r.a;
        case Recipe::Kind::Circulant: return r.a;
        case Recipe::Kind::BlowUp: {
            long long total = 0;
            for (const auto& p : r.children) total += vertex_count(*p);
            return total;
        }
        case Recipe::Kind::Join: return vertex_count(*r.children[0]) + vertex_count(*r.children[1]);
        case Recipe::Kind::AddApex: return vertex_count(*r.base) + 1;
        case Recipe::Kind::Base: return r.graph->n();
    }
    throw std::logic_error("unreachable");
}

int color_span(const Recipe& r) {
    int span = 0;
    switch (r.kind) {
        case Recipe::Kind::Pentagon: span = std::max(r.a, r.b); break;
        case Recipe::Kind::Clique: span = r.b; break;
        case Recipe::Kind::Circulant:
            for (int c : r.distance_colors) span = std::max(span, c);
            break;
        case Recipe::Kind::BlowUp:
            span = color_span(*r.base);
            for (const auto& p : r.children) span = std::max(span, color_span(*p));
            break;
        case Recipe::Kind::Join:
            span = std::max({r.a, color_span(*r.children[0]), color_span(*r.children[1])});
            break;
        case Recipe::Kind::AddApex: span = std::max(r.a, color_span(*r.base)); break;
        case Recipe::Kind::Base: span = r.graph->k(); break;
    }
    return span;
}

ColoredCompleteGraph expand(const Recipe& r) { return expand(r, color_span(r)); }

ColoredCompleteGraph expand(const Recipe& r, int ambient_colors) {
    validate(r);
    long long n = vertex_count(r);
    if (n > kMaxExpandVertices)
        throw std::invalid_argument("expansion has " + std::to_string(n) +
                                    " vertices, beyond the in-memory limit of " +
                                    std::to_string(kMaxExpandVertices));
    int span = color_span(r);
    if (ambient_colors < span)
        throw std::invalid_argument("recipe uses color " + std::to_string(span) +
                                    " beyond the ambient color count " + std::to_string(ambient_colors));
    ColoredCompleteGraph g(static_cast<int>(n), ambient_colors, 1);
    long long used = emit(r, g, 0);
    if (used != n) throw std::logic_error("expansion size mismatch");
    return g;
}

namespace {

RecipePtr parse_recipe_stream(std::istream& in) {
    std::map<std::string, RecipePtr> defs;
    RecipePtr last;
    std::string line;
    int lineno = 0;
    auto ref = [&](const std::string& id) -> RecipePtr {
        auto it = defs.find(id);
        if (it == defs.end())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown recipe id '" + id + "'");
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string id, kind;
        if (!(ls >> id)) continue;
        if (!(ls >> kind))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing node kind");
        RecipePtr node;
        if (kind == "pentagon") {
            int a, b;
            if (!(ls >> a >> b))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": pentagon needs two colors");
            node = pentagon(a, b);
        } else if (kind == "clique") {
            int s, c;
            if (!(ls >> s >> c))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": clique needs size and color");
            node = clique(s, c);
        } else if (kind == "circulant") {
            int s;
            if (!(ls >> s))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": circulant needs a size");
            std::vector<int> dc;
            int c;
            while (ls >> c) dc.push_back(c);
            node = circulant(s, std::move(dc));
        } else if (kind == "blowup") {
            std::string baseid, pid;
            if (!(ls >> baseid))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": blowup needs a base id");
            std::vector<RecipePtr> parts;
            while (ls >> pid) parts.push_back(ref(pid));
            node = blow_up(ref(baseid), std::move(parts));
        } else if (kind == "join") {
            std::string l, rr;
            int c;
            if (!(ls >> l >> rr >> c))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": join needs two ids and a color");
            node = join(ref(l), ref(rr), c);
        } else if (kind == "apex") {
            std::string b;
            int c;
            if (!(ls >> b >> c))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": apex needs an id and a color");
            node = add_apex(ref(b), c);
        } else if (kind == "base") {
            std::string path;
            if (!(ls >> path))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": base needs a certificate path");
            node = wrap_graph(std::make_shared<ColoredCompleteGraph>(read_certificate_file(path)));
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown node kind '" + kind + "'");
        }
        defs[id] = node;
        last = node;
    }
    if (!last) throw std::invalid_argument("empty recipe");
    return last;
}

}  // namespace

RecipePtr parse_recipe(std::istream& in) { return parse_recipe_stream(in); }

RecipePtr parse_recipe_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return parse_recipe_stream(in);
}

}  // namespace gr
