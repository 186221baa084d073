#include "spreadlab/simplex.hpp"

#include <stdexcept>

namespace spreadlab {

SimplexResult phase_one_feasible(std::vector<std::vector<Rational>> A,
                                 std::vector<Rational> b) {
    const int m = static_cast<int>(A.size());
    if (m == 0) return {true, {}};
    const int n = static_cast<int>(A[0].size());

    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(A[static_cast<std::size_t>(i)].size()) != n)
            throw std::logic_error("ragged constraint matrix");
        if (b[static_cast<std::size_t>(i)] < 0) {
            for (auto& v : A[static_cast<std::size_t>(i)]) v = -v;
            b[static_cast<std::size_t>(i)] = -b[static_cast<std::size_t>(i)];
        }
    }

    // tableau over columns [original | artificial | rhs]
    const int width = n + m + 1;
    std::vector<std::vector<Rational>> T(
        static_cast<std::size_t>(m + 1), std::vector<Rational>(static_cast<std::size_t>(width), Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] = b[static_cast<std::size_t>(i)];
    }
    // objective: minimize the artificial sum; reduced costs for the
    // all-artificial basis are the negated column sums
    auto& obj = T[static_cast<std::size_t>(m)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < width; ++j)
            if (j < n || j == width - 1)
                obj[static_cast<std::size_t>(j)] -= T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (obj[static_cast<std::size_t>(j)] < 0) { enter = j; break; } // Bland: lowest index
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            const Rational& a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (a <= 0) continue;
            Rational ratio = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] / a;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-one objective unbounded"); // cannot happen
        // pivot
        const Rational pv = T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(enter)];
        for (int j = 0; j < width; ++j) T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)] /= pv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const Rational f = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (f == 0) continue;
            for (int j = 0; j < width; ++j)
                T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    SimplexResult out;
    // objective value is -obj[rhs]; feasible iff the artificials vanish
    out.feasible = obj[static_cast<std::size_t>(width - 1)] == 0;
    if (out.feasible) {
        out.x.assign(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[static_cast<std::size_t>(i)] < n)
                out.x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)];
    }
    return out;
}

} // namespace spreadlab
