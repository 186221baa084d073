#include "spreadlab/linalg.hpp"

#include "spreadlab/modp.hpp"

namespace spreadlab {

EliminationResult rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                             std::uint64_t p) {
    EliminationResult out;
    if (m.empty()) return out;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> perm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) perm[static_cast<std::size_t>(i)] = i;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
        std::swap(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(pivot)]);
        out.pivot_rows.push_back(perm[static_cast<std::size_t>(r)]);
        out.pivot_cols.push_back(c);
        const std::uint64_t inv = modp::inv(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p, p);
        for (int i = r + 1; i < rows; ++i) {
            const std::uint64_t f = modp::mul(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p, inv, p);
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    modp::sub(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p,
                              modp::mul(f, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p, p), p);
        }
        ++r;
    }
    out.rank = r;
    return out;
}

EliminationResult rank_rational(std::vector<std::vector<Rational>> m) {
    EliminationResult out;
    if (m.empty()) return out;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> perm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) perm[static_cast<std::size_t>(i)] = i;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
        std::swap(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(pivot)]);
        out.pivot_rows.push_back(perm[static_cast<std::size_t>(r)]);
        out.pivot_cols.push_back(c);
        const Rational& pv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) continue;
            const Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / pv;
            for (int j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    out.rank = r;
    return out;
}

int integer_matrix_rank(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<Rational>> q;
    q.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Rational> qr;
        qr.reserve(row.size());
        for (long long v : row) qr.emplace_back(v);
        q.push_back(std::move(qr));
    }
    return rank_rational(std::move(q)).rank;
}

namespace {

template <class T, class Extract>
std::vector<std::vector<T>> submatrix(const std::vector<std::vector<T>>& m,
                                      const std::vector<int>& rows,
                                      const std::vector<int>& cols,
                                      Extract extract) {
    std::vector<std::vector<T>> s;
    s.reserve(rows.size());
    for (int i : rows) {
        std::vector<T> row;
        row.reserve(cols.size());
        for (int j : cols)
            row.push_back(extract(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        s.push_back(std::move(row));
    }
    return s;
}

} // namespace

bool minor_invertible_mod_p(const std::vector<std::vector<std::uint64_t>>& m,
                            const std::vector<int>& rows,
                            const std::vector<int>& cols, std::uint64_t p) {
    if (rows.size() != cols.size()) return false;
    auto s = submatrix(m, rows, cols, [](std::uint64_t v) { return v; });
    return rank_mod_p(std::move(s), p).rank == static_cast<int>(rows.size());
}

bool minor_invertible_rational(const std::vector<std::vector<Rational>>& m,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols) {
    if (rows.size() != cols.size()) return false;
    auto s = submatrix(m, rows, cols, [](const Rational& v) { return v; });
    return rank_rational(std::move(s)).rank == static_cast<int>(rows.size());
}

} // namespace spreadlab
