#include "gr/bounds.hpp"

#include <algorithm>

namespace gr {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

long long pow5(int e) {
    require(e >= 0, "pow5 needs e >= 0");
    long long r = 1;
    while (e-- > 0) r *= 5;
    return r;
}

long long conj_fan(int k) {
    require(k >= 2, "conj_fan needs k >= 2");
    if (k % 2 == 0) return 14 * pow5((k - 2) / 2) - 1;
    return 33 * pow5((k - 3) / 2);
}

long long thm_fan_lower(int k) {
    require(k >= 2 && k % 2 == 0, "thm_fan_lower covers even k >= 2");
    if (k == 2) return 14;
    return 14 * pow5((k - 2) / 2) + 1;
}

long long conj_kipas(int k, int m, long long r2) {
    require(k >= 2 && m >= 2, "conj_kipas needs k >= 2, m >= 2");
    if (k % 2 == 1) return std::max(2 * (r2 - 1), 5LL * m) * pow5((k - 3) / 2) + 1;
    if (m % 2 == 1) return (r2 - 1) * pow5((k - 2) / 2) + 1;
    return r2 + (m / 2) * (pow5(k / 2) - 5);
}

long long conj_wheel(int k, int m, long long r2) {
    require(k >= 2, "conj_wheel needs k >= 2");
    require(m >= 4 && m % 2 == 0, "conj_wheel covers even m >= 4");
    if (k % 2 == 0) return (r2 - 1) * pow5((k - 2) / 2) + 1;
    return 2 * (r2 - 1) * pow5((k - 3) / 2) + 1;
}

namespace {

// Size+1 of the even tower: base of r2-1 vertices, (k-2)/2 pentagon levels.
long long even_tower_bound(int half_levels, int m, long long r2) {
    if (m % 4 == 0)
        return r2 + 5 * (m - 2) * (pow5(half_levels) - 1) - (m - 4) * 2 * half_levels;
    return r2 + 5 * (m - 1) * (pow5(half_levels) - 1) - (m - 2) * 2 * half_levels;
}

// Same with the tower running at m-1 (even) while the base dodges K̂_m (odd m).
long long odd_m_tower_bound(int half_levels, int m, long long r2) {
    if (m % 4 == 1)
        return r2 + 5 * (m - 3) * (pow5(half_levels) - 1) - (m - 5) * 2 * half_levels;
    return r2 + 5 * (m - 2) * (pow5(half_levels) - 1) - (m - 3) * 2 * half_levels;
}

}  // namespace

long long thm_kipas_wheel_lower(int k, int m, long long r2) {
    require(k >= 2, "thm_kipas_wheel_lower needs k >= 2");
    require(m >= 6 && m % 2 == 0, "thm_kipas_wheel_lower covers even m >= 6");
    if (k == 3) return std::max(2 * r2 - 1, 5LL * m + 1);
    if (k % 2 == 0) return even_tower_bound((k - 2) / 2, m, r2);
    return 2 * even_tower_bound((k - 3) / 2, m, r2) - 1;
}

long long thm_odd_m_lower(int k, int m, long long r2) {
    require(k >= 2, "thm_odd_m_lower needs k >= 2");
    require(m >= 7 && m % 2 == 1, "thm_odd_m_lower covers odd m >= 7");
    if (k == 3) return std::max(2 * r2 - 1, 5LL * m + 1);
    if (k % 2 == 0) return odd_m_tower_bound((k - 2) / 2, m, r2);
    return 2 * odd_m_tower_bound((k - 3) / 2, m, r2) - 1;
}

StarValues star_values(int n, int k) {
    require(n >= 6 && n % 2 == 0, "star_values needs even n >= 6");
    require(k >= 3, "star_values needs k >= 3");
    return {5LL * n / 2 + k - 6, 2LL * n + k - 5};
}

const std::vector<KnownValue>& known_values() {
    static const std::vector<KnownValue> table = {
        {"R2(W6)", 19},  // two-color Ramsey number of the 6-spoke wheel
        {"R2(F3)", 14},  // R(F3, F3)
    };
    return table;
}

long long known_value(const std::string& name) {
    for (const auto& kv : known_values())
        if (name == kv.name) return kv.value;
    throw std::invalid_argument("no stored value for " + name);
}

BoundRecord certify(const ColoredCompleteGraph& g, const std::vector<PatternQuery>& checks,
                    const std::string& name) {
    for (const auto& q : checks) {
        if (q.kind == PatternKind::Rainbow) {
            auto r = find_rainbow_triangle(g);
            if (r.found())
                throw CertificationError(name + ": rainbow triangle present", std::move(r));
            continue;
        }
        for (int c : q.colors) {
            auto r = find_pattern(g, c, q.kind, q.param);
            if (r.found())
                throw CertificationError(name + ": color-" + std::to_string(c) + " " +
                                             pattern_name(q.kind) + " present",
                                         std::move(r));
        }
    }
    BoundRecord rec;
    rec.name = name;
    rec.vertices = g.n();
    rec.bound = g.n() + 1;
    rec.checks = checks;
    return rec;
}

}  // namespace gr
