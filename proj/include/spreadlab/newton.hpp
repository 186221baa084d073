#pragma once

#include <optional>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

/// Monomial ideal given by the exponent vectors of its generators. For this
/// tool the generators come from initial_ideal_closed and are all of total
/// degree 2 with the pattern e_i + e_{n+j}, i < j.
struct MonomialIdeal {
    int ambient_dim = 0;
    std::vector<std::vector<int>> generators;
};

/// Lead terms x_i y_j of the edge binomials under the diagonal lex order
/// x_1 > ... > x_n > y_1 > ... > y_n. Only meaningful when the labeling is
/// closed (that is what makes these the full initial ideal in every power),
/// so non-closed inputs are rejected.
MonomialIdeal initial_ideal_closed(const Graph& g);

/// conv(generators) + R_{>=0}^{2n}. The recession cone is implicit; faces
/// are probed lazily by mcd_via_lp, no hull is computed here.
struct NewtonRegion {
    MonomialIdeal ideal;
};

NewtonRegion newton_region(const MonomialIdeal& m);

/// Algebraic route: rank of the exponent matrix over Q, minus one.
/// Requires a nonempty, equigenerated ideal.
int mcd_via_rank(const MonomialIdeal& m);

struct CompactFaceReport {
    int mcd = -1;
    std::vector<int> witness_subset;      // generator indices spanning the face
    std::vector<Rational> witness_normal; // strictly positive certifying normal
    std::optional<int> rank_route_value;  // filled for equigenerated input
};

/// Geometric route: a subset S of generators spans a compact face iff some
/// strictly positive w attains its minimum over the generators exactly on S.
/// Subsets are enumerated largest-first; feasibility of each candidate is an
/// exact rational LP. Capped at 16 generators.
CompactFaceReport mcd_via_lp(const MonomialIdeal& m);

/// Does the normal satisfy the emitted certificate's defining system
/// exactly: w.a = c on the subset, w.b >= c+1 off it, w_k >= 1?
bool witness_satisfies_lp(const MonomialIdeal& m, const std::vector<int>& subset,
                          const std::vector<Rational>& normal);

/// Scaling-robust check: w > 0 and the argmin set of w over the generators
/// is exactly the subset.
bool witness_certifies_face(const MonomialIdeal& m, const std::vector<int>& subset,
                            const std::vector<Rational>& normal);

/// mcd by both routes (asserted equal), plus one.
int closed_spread_via_newton(const Graph& g);

} // namespace spreadlab
