#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gr/colored_graph.hpp"
#include "gr/constructions.hpp"
#include "gr/detectors.hpp"

namespace gr {

// ---- closed forms ----------------------------------------------------------
// r2 always denotes the relevant 2-color Ramsey number, supplied by the
// caller; these functions never guess it.

long long pow5(int e);

// Conjectured fan values (even k: 14*5^{(k-2)/2} - 1; odd k: 33*5^{(k-3)/2}).
long long conj_fan(int k);
// Proven fan lower bound for even k (14 at k = 2, else 14*5^{(k-2)/2} + 1).
long long thm_fan_lower(int k);

long long conj_kipas(int k, int m, long long r2);
long long conj_wheel(int k, int m, long long r2);

// Kipas/wheel lower bound for even m >= 6 (the tower built over a base of
// size r2 - 1).
long long thm_kipas_wheel_lower(int k, int m, long long r2);
// Kipas lower bound for odd m >= 7.
long long thm_odd_m_lower(int k, int m, long long r2);

// For the star constructions on even n: the bound certified by the big graph
// (its order plus one) and the one certified by the w-extension (w's degree
// plus one). At k = 3 these cover the plain star as well.
struct StarValues {
    long long graph_bound;   // 5n/2 + k - 6
    long long degree_bound;  // 2n + k - 5
};
StarValues star_values(int n, int k);

// Small 2-color Ramsey numbers the formulas are instantiated with.
struct KnownValue {
    const char* name;
    long long value;
};
const std::vector<KnownValue>& known_values();
long long known_value(const std::string& name);

// ---- certification ---------------------------------------------------------

class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, DetectionReport witness)
        : std::runtime_error(what), witness(std::move(witness)) {}
    DetectionReport witness;
};

struct BoundRecord {
    std::string name;
    int vertices = 0;
    long long bound = 0;  // vertices + 1
    std::vector<PatternQuery> checks;  // everything that was verified
};

// Runs every query exactly; any hit aborts with the witness attached. A
// returned record means the whole verification suite came back empty.
BoundRecord certify(const ColoredCompleteGraph& g, const std::vector<PatternQuery>& checks,
                    const std::string& name);

}  // namespace gr
