#pragma once

#include <cstdint>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/modp.hpp"
#include "spreadlab/poly.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

/// The binomial x_i y_j - x_j y_i attached to the edge {i,j}, i < j, inside
/// K[x_1..x_n, y_1..y_n].
struct EdgeBinomial {
    int i = 0;
    int j = 0;
    bool operator==(const EdgeBinomial&) const = default;
};

/// One binomial per edge, in sorted edge order.
struct GeneratorSystem {
    int n = 0; // ambient vertex count: 2n variables
    std::vector<EdgeBinomial> gens;
};

GeneratorSystem build_system(const Graph& g);
GeneratorSystem subsystem(const GeneratorSystem& sys, const std::vector<int>& indices);

enum class FieldMode { prime, exact_rational };

/// How the engine evaluates: random points over F_p (fast, probabilistic,
/// stabilized by the max-over-trials rule), or exact rational points with a
/// symbolic fraction-free oracle as the final word.
struct FieldConfig {
    FieldMode mode = FieldMode::prime;
    std::uint64_t prime = modp::kDefaultPrime;
    int trials = 4;
    std::uint64_t seed = 1;
    int symbolic_cap = 24; // max generator count for the symbolic oracle

    void validate() const; // throws PreconditionError
};

struct RankCertificate {
    int rank = 0;
    FieldMode mode = FieldMode::prime;
    std::uint64_t prime = 0;                  // 0 in exact-rational mode
    std::vector<std::uint64_t> witness_point; // 2n field elements (or small ints)
    std::vector<int> minor_rows;              // generator indices of the witness minor
    std::vector<int> minor_cols;              // variable indices of the witness minor
    int trials_agreeing = 0;
    bool escalated = false;              // prime trials disagreed, exact path ran
    bool symbolically_confirmed = false; // Bareiss oracle ran and matched
    bool probabilistic_only = false;     // exact mode above the symbolic cap
};

/// Exact Jacobian of the system at a rational point: row for f_{ij} has
/// y_j at x_i, -y_i at x_j, -x_j at y_i, x_i at y_j, zeros elsewhere.
std::vector<std::vector<Rational>> jacobian_at(const GeneratorSystem& sys,
                                               const std::vector<Rational>& point);

/// Jacobian of the system with symbolic entries, in 2n variables.
std::vector<std::vector<Poly>> symbolic_jacobian(const GeneratorSystem& sys);

/// Rank of the symbolic Jacobian over the rational function field — the
/// generic rank, exactly.
int symbolic_jacobian_rank(const GeneratorSystem& sys);

/// Generic rank of the Jacobian = trdeg of the field the generators span.
/// Prime mode: max of the ranks at cfg.trials random points, with the last
/// two trials required to agree; disagreement escalates to the exact path.
RankCertificate generic_rank(const GeneratorSystem& sys, const FieldConfig& cfg);

/// Re-derive the certificate's claim: the cited minor is nonsingular at the
/// witness point.
bool recheck_certificate(const GeneratorSystem& sys, const RankCertificate& cert);

/// Scan the generators in the given order, keeping one exactly when it
/// strictly raises the generic rank. The kept set is a transcendence base:
/// its size equals generic_rank(sys) and every kept prefix is independent.
std::vector<int> greedy_transcendence_base(const GeneratorSystem& sys,
                                           const std::vector<int>& order,
                                           const FieldConfig& cfg);

/// Edge binomial as a polynomial in 2n variables (x_1..x_n, y_1..y_n).
Poly edge_binomial_poly(int n, int i, int j);

/// Symbolic expansion of f_ab f_cd - f_ac f_bd + f_ad f_bc; true iff it is
/// identically zero (it must be — this is the Pluecker identity).
bool plucker_check(int a, int b, int c, int d);

} // namespace spreadlab
