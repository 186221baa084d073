#include "spreadlab/poly.hpp"

#include <stdexcept>

namespace spreadlab {

Poly Poly::constant(int nvars, Integer c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(m), Integer(1));
    return p;
}

void Poly::add_term(Monomial m, Integer c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

Poly Poly::exact_div(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("polynomial division by zero");
    Poly quotient(nvars_);
    Poly rem = *this;
    const auto& dlead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial q(rlead.first.size());
        for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] = rlead.first[k] - dlead.first[k];
            if (q[k] < 0) throw std::logic_error("polynomial division is not exact");
        }
        if (rlead.second % dlead.second != 0)
            throw std::logic_error("polynomial division is not exact");
        Integer qc = rlead.second / dlead.second;
        Poly t(nvars_);
        t.terms_.emplace(q, qc);
        quotient.add_term(std::move(q), std::move(qc));
        rem = rem - t * divisor;
    }
    return quotient;
}

Integer Poly::evaluate(const std::vector<Integer>& point) const {
    Integer acc = 0;
    for (const auto& [m, c] : terms_) {
        Integer t = c;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (int e = 0; e < m[k]; ++e) t *= point[k];
        acc += t;
    }
    return acc;
}

int bareiss_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    const int nv = m[0][0].nvars();
    Poly prev = Poly::constant(nv, 1);
    int r = 0;
    while (r < rows && r < cols) {
        // sparsest nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        std::size_t best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = r; j < cols; ++j) {
                const auto& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e.is_zero()) continue;
                if (pi < 0 || e.term_count() < best) {
                    pi = i;
                    pj = j;
                    best = e.term_count();
                }
            }
        if (pi < 0) break;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pi)]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        const Poly pivot = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i)
            for (int j = r + 1; j < cols; ++j) {
                Poly num = pivot * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                           m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                               m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    num.is_zero() ? Poly(nv) : num.exact_div(prev);
            }
        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace spreadlab
