#include "spreadlab/newton.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spreadlab/errors.hpp"
#include "spreadlab/linalg.hpp"
#include "spreadlab/simplex.hpp"

namespace spreadlab {

MonomialIdeal initial_ideal_closed(const Graph& g) {
    if (auto bad = closed_violation(g)) {
        const auto [i, j, k] = *bad;
        throw PreconditionError("graph is not closed under its labeling: triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") violates the condition");
    }
    MonomialIdeal m;
    m.ambient_dim = 2 * g.n;
    for (const auto& [i, j] : g.edges) {
        std::vector<int> e(static_cast<std::size_t>(2 * g.n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        e[static_cast<std::size_t>(g.n + j - 1)] = 1;
        m.generators.push_back(std::move(e));
    }
    return m;
}

NewtonRegion newton_region(const MonomialIdeal& m) { return NewtonRegion{m}; }

namespace {

int total_degree(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

// affine dimension of the chosen generators (rank of the translated set)
int affine_dim(const MonomialIdeal& m, const std::vector<int>& subset) {
    if (subset.empty()) return -1;
    const auto& base = m.generators[static_cast<std::size_t>(subset[0])];
    std::vector<std::vector<long long>> rows;
    for (std::size_t k = 1; k < subset.size(); ++k) {
        std::vector<long long> row(base.size());
        const auto& g = m.generators[static_cast<std::size_t>(subset[k])];
        for (std::size_t c = 0; c < base.size(); ++c)
            row[c] = static_cast<long long>(g[c]) - base[c];
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return 0;
    return integer_matrix_rank(rows);
}

// Feasibility of: w.a = c on S, w.b >= c+1 off S, w_k >= 1. Encoded with
// w = 1 + u, c = cp - cm, one slack per off-S row; all variables >= 0.
std::optional<std::vector<Rational>> face_normal(const MonomialIdeal& m,
                                                 const std::vector<int>& subset) {
    const int d = m.ambient_dim;
    const int total = static_cast<int>(m.generators.size());
    std::vector<bool> in_subset(static_cast<std::size_t>(total), false);
    for (int k : subset) in_subset[static_cast<std::size_t>(k)] = true;
    const int off = total - static_cast<int>(subset.size());

    const int cols = d + 2 + off; // u_1..u_d, cp, cm, slacks
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    int slack = 0;
    for (int k = 0; k < total; ++k) {
        const auto& a = m.generators[static_cast<std::size_t>(k)];
        std::vector<Rational> row(static_cast<std::size_t>(cols), Rational(0));
        for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] = a[static_cast<std::size_t>(c)];
        row[static_cast<std::size_t>(d)] = -1;     // cp
        row[static_cast<std::size_t>(d + 1)] = 1;  // cm
        if (in_subset[static_cast<std::size_t>(k)]) {
            A.push_back(std::move(row));
            b.emplace_back(-total_degree(a));
        } else {
            row[static_cast<std::size_t>(d + 2 + slack)] = -1;
            ++slack;
            A.push_back(std::move(row));
            b.emplace_back(1 - total_degree(a));
        }
    }
    auto res = phase_one_feasible(std::move(A), std::move(b));
    if (!res.feasible) return std::nullopt;
    std::vector<Rational> w(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) w[static_cast<std::size_t>(c)] = res.x[static_cast<std::size_t>(c)] + 1;
    return w;
}

Rational dot(const std::vector<Rational>& w, const std::vector<int>& a) {
    Rational s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * a[k];
    return s;
}

} // namespace

int mcd_via_rank(const MonomialIdeal& m) {
    if (m.generators.empty())
        throw PreconditionError("mcd is undefined for the empty monomial ideal");
    const int deg = total_degree(m.generators.front());
    for (const auto& g : m.generators)
        if (total_degree(g) != deg)
            throw PreconditionError("rank route requires equigenerated input");
    std::vector<std::vector<long long>> rows;
    rows.reserve(m.generators.size());
    for (const auto& g : m.generators)
        rows.emplace_back(g.begin(), g.end());
    return integer_matrix_rank(rows) - 1;
}

CompactFaceReport mcd_via_lp(const MonomialIdeal& m) {
    if (m.generators.empty())
        throw PreconditionError("mcd is undefined for the empty monomial ideal");
    const int total = static_cast<int>(m.generators.size());
    if (total > 16)
        throw PreconditionError("compact-face enumeration capped at 16 generators");

    CompactFaceReport report;
    {
        const int deg = total_degree(m.generators.front());
        bool equigenerated = true;
        for (const auto& g : m.generators)
            if (total_degree(g) != deg) equigenerated = false;
        if (equigenerated) report.rank_route_value = mcd_via_rank(m);
    }

    // no compact face can exceed the affine dimension of the generators:
    // every compact face is the convex hull of some of them
    std::vector<int> all(static_cast<std::size_t>(total));
    std::iota(all.begin(), all.end(), 0);
    const int upper = affine_dim(m, all);

    int best = -1;
    for (int size = total; size >= 1 && best < size - 1 && best < upper; --size) {
        // subsets of this size in lexicographic order
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            const int d = affine_dim(m, pick);
            if (d > best) {
                if (auto w = face_normal(m, pick)) {
                    best = d;
                    report.witness_subset = pick;
                    report.witness_normal = std::move(*w);
                    if (best == upper) break;
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    report.mcd = best;
    if (best < 0)
        throw PreconditionError("no compact face found; inconsistent input");
    if (!witness_satisfies_lp(m, report.witness_subset, report.witness_normal))
        throw VerificationError("emitted face witness failed its own recheck");
    return report;
}

bool witness_satisfies_lp(const MonomialIdeal& m, const std::vector<int>& subset,
                          const std::vector<Rational>& normal) {
    if (subset.empty()) return false;
    for (const auto& wk : normal)
        if (wk < 1) return false;
    std::vector<bool> in_subset(m.generators.size(), false);
    for (int k : subset) in_subset[static_cast<std::size_t>(k)] = true;
    const Rational c = dot(normal, m.generators[static_cast<std::size_t>(subset[0])]);
    for (std::size_t k = 0; k < m.generators.size(); ++k) {
        const Rational v = dot(normal, m.generators[k]);
        if (in_subset[k] ? (v != c) : (v < c + 1)) return false;
    }
    return true;
}

bool witness_certifies_face(const MonomialIdeal& m, const std::vector<int>& subset,
                            const std::vector<Rational>& normal) {
    if (subset.empty()) return false;
    for (const auto& wk : normal)
        if (wk <= 0) return false;
    std::vector<bool> in_subset(m.generators.size(), false);
    for (int k : subset) in_subset[static_cast<std::size_t>(k)] = true;
    const Rational c = dot(normal, m.generators[static_cast<std::size_t>(subset[0])]);
    for (std::size_t k = 0; k < m.generators.size(); ++k) {
        const Rational v = dot(normal, m.generators[k]);
        if (in_subset[k] ? (v != c) : (v <= c)) return false;
    }
    return true;
}

int closed_spread_via_newton(const Graph& g) {
    const MonomialIdeal m = initial_ideal_closed(g);
    if (m.generators.empty())
        throw PreconditionError("graph has no edges; the Newton route needs a "
                                "nonempty initial ideal");
    const int rank_route = mcd_via_rank(m);
    const CompactFaceReport lp = mcd_via_lp(m);
    if (rank_route != lp.mcd)
        throw VerificationError(
            "compact-face routes disagree: rank route says " +
            std::to_string(rank_route) + ", LP route says " + std::to_string(lp.mcd) +
            " with a face on " + std::to_string(lp.witness_subset.size()) +
            " generators");
    return rank_route + 1;
}

} // namespace spreadlab
