#include "spreadlab/algebra.hpp"

#include <algorithm>
#include <string>

#include "spreadlab/errors.hpp"
#include "spreadlab/linalg.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

GeneratorSystem build_system(const Graph& g) {
    GeneratorSystem sys;
    sys.n = g.n;
    sys.gens.reserve(g.edges.size());
    for (const auto& [i, j] : g.edges) sys.gens.push_back(EdgeBinomial{i, j});
    return sys;
}

GeneratorSystem subsystem(const GeneratorSystem& sys, const std::vector<int>& indices) {
    GeneratorSystem sub;
    sub.n = sys.n;
    sub.gens.reserve(indices.size());
    for (int k : indices) sub.gens.push_back(sys.gens.at(static_cast<std::size_t>(k)));
    return sub;
}

void FieldConfig::validate() const {
    if (trials < 2) throw PreconditionError("field config needs trials >= 2");
    if (mode == FieldMode::prime) {
        if (prime <= (std::uint64_t{1} << 30))
            throw PreconditionError("prime must exceed 2^30");
        if (!modp::is_prime(prime))
            throw PreconditionError(std::to_string(prime) + " is not prime");
    }
    if (symbolic_cap < 0) throw PreconditionError("symbolic cap must be nonnegative");
}

std::vector<std::vector<Rational>> jacobian_at(const GeneratorSystem& sys,
                                               const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(2 * sys.n))
        throw PreconditionError("evaluation point must have 2n coordinates");
    std::vector<std::vector<Rational>> m(
        sys.gens.size(), std::vector<Rational>(static_cast<std::size_t>(2 * sys.n), Rational(0)));
    const int n = sys.n;
    for (std::size_t r = 0; r < sys.gens.size(); ++r) {
        const auto [i, j] = sys.gens[r];
        const auto x = [&](int v) { return point[static_cast<std::size_t>(v - 1)]; };
        const auto y = [&](int v) { return point[static_cast<std::size_t>(n + v - 1)]; };
        m[r][static_cast<std::size_t>(i - 1)] = y(j);
        m[r][static_cast<std::size_t>(j - 1)] = -y(i);
        m[r][static_cast<std::size_t>(n + i - 1)] = -x(j);
        m[r][static_cast<std::size_t>(n + j - 1)] = x(i);
    }
    return m;
}

namespace {

std::vector<std::vector<std::uint64_t>> jacobian_mod_p(
    const GeneratorSystem& sys, const std::vector<std::uint64_t>& point,
    std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m(
        sys.gens.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(2 * sys.n), 0));
    const int n = sys.n;
    for (std::size_t r = 0; r < sys.gens.size(); ++r) {
        const auto [i, j] = sys.gens[r];
        const std::uint64_t xi = point[static_cast<std::size_t>(i - 1)];
        const std::uint64_t xj = point[static_cast<std::size_t>(j - 1)];
        const std::uint64_t yi = point[static_cast<std::size_t>(n + i - 1)];
        const std::uint64_t yj = point[static_cast<std::size_t>(n + j - 1)];
        m[r][static_cast<std::size_t>(i - 1)] = yj;
        m[r][static_cast<std::size_t>(j - 1)] = modp::neg(yi, p);
        m[r][static_cast<std::size_t>(n + i - 1)] = modp::neg(xj, p);
        m[r][static_cast<std::size_t>(n + j - 1)] = xi;
    }
    return m;
}

std::vector<std::uint64_t> sample_point(std::uint64_t seed, std::size_t len,
                                        std::uint64_t lo, std::uint64_t hi) {
    Rng rng(seed);
    std::vector<std::uint64_t> p(len);
    for (auto& v : p) v = lo + rng.below(hi - lo + 1);
    return p;
}

struct Trial {
    int rank = 0;
    std::vector<std::uint64_t> point;
    std::vector<int> rows, cols;
};

Trial prime_trial(const GeneratorSystem& sys, std::uint64_t p, std::uint64_t seed) {
    Trial t;
    t.point = sample_point(seed, static_cast<std::size_t>(2 * sys.n), 1, p - 1);
    auto elim = rank_mod_p(jacobian_mod_p(sys, t.point, p), p);
    t.rank = elim.rank;
    t.rows = std::move(elim.pivot_rows);
    t.cols = std::move(elim.pivot_cols);
    return t;
}

Trial rational_trial(const GeneratorSystem& sys, std::uint64_t seed) {
    Trial t;
    t.point = sample_point(seed, static_cast<std::size_t>(2 * sys.n), 1,
                           std::uint64_t{1} << 20);
    std::vector<Rational> rp;
    rp.reserve(t.point.size());
    for (auto v : t.point) rp.emplace_back(v);
    auto elim = rank_rational(jacobian_at(sys, rp));
    t.rank = elim.rank;
    t.rows = std::move(elim.pivot_rows);
    t.cols = std::move(elim.pivot_cols);
    return t;
}

} // namespace

std::vector<std::vector<Poly>> symbolic_jacobian(const GeneratorSystem& sys) {
    const int nv = 2 * sys.n;
    std::vector<std::vector<Poly>> m(sys.gens.size(),
                                     std::vector<Poly>(static_cast<std::size_t>(nv), Poly(nv)));
    const int n = sys.n;
    for (std::size_t r = 0; r < sys.gens.size(); ++r) {
        const auto [i, j] = sys.gens[r];
        m[r][static_cast<std::size_t>(i - 1)] = Poly::variable(nv, n + j - 1);
        m[r][static_cast<std::size_t>(j - 1)] = -Poly::variable(nv, n + i - 1);
        m[r][static_cast<std::size_t>(n + i - 1)] = -Poly::variable(nv, j - 1);
        m[r][static_cast<std::size_t>(n + j - 1)] = Poly::variable(nv, i - 1);
    }
    return m;
}

int symbolic_jacobian_rank(const GeneratorSystem& sys) {
    if (sys.gens.empty()) return 0;
    return bareiss_rank(symbolic_jacobian(sys));
}

RankCertificate generic_rank(const GeneratorSystem& sys, const FieldConfig& cfg) {
    cfg.validate();
    RankCertificate cert;
    cert.mode = cfg.mode;
    cert.prime = cfg.mode == FieldMode::prime ? cfg.prime : 0;
    if (sys.gens.empty()) {
        cert.trials_agreeing = cfg.trials;
        return cert;
    }

    bool exact_path = cfg.mode == FieldMode::exact_rational;
    if (cfg.mode == FieldMode::prime) {
        std::vector<int> ranks;
        Trial best;
        for (int t = 0; t < cfg.trials; ++t) {
            Trial tr = prime_trial(sys, cfg.prime, derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
            if (tr.rank > best.rank || t == 0) best = tr;
            ranks.push_back(tr.rank);
        }
        if (ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) {
            cert.rank = best.rank;
            cert.witness_point = std::move(best.point);
            cert.minor_rows = std::move(best.rows);
            cert.minor_cols = std::move(best.cols);
            cert.trials_agreeing = static_cast<int>(
                std::count(ranks.begin(), ranks.end(), cert.rank));
            return cert;
        }
        exact_path = true; // unstable trials: escalate
        cert.escalated = true;
    }

    cert.mode = FieldMode::exact_rational;
    cert.prime = 0;
    Trial best;
    std::vector<int> ranks;
    for (int t = 0; t < 2; ++t) {
        Trial tr = rational_trial(sys, derive_seed(cfg.seed, 0x1000 + static_cast<std::uint64_t>(t)));
        if (tr.rank > best.rank || t == 0) best = tr;
        ranks.push_back(tr.rank);
    }
    if (static_cast<int>(sys.gens.size()) <= cfg.symbolic_cap) {
        const int exact = symbolic_jacobian_rank(sys);
        for (int extra = 0; best.rank < exact && extra < 8; ++extra) {
            Trial tr = rational_trial(
                sys, derive_seed(cfg.seed, 0x2000 + static_cast<std::uint64_t>(extra)));
            if (tr.rank > best.rank) best = tr;
            ranks.push_back(tr.rank);
        }
        if (best.rank != exact)
            throw VerificationError(
                "symbolic rank " + std::to_string(exact) +
                " not attained by any sampled point (best " +
                std::to_string(best.rank) + ")");
        cert.symbolically_confirmed = true;
    } else {
        cert.probabilistic_only = true;
    }
    cert.rank = best.rank;
    cert.witness_point = std::move(best.point);
    cert.minor_rows = std::move(best.rows);
    cert.minor_cols = std::move(best.cols);
    cert.trials_agreeing =
        static_cast<int>(std::count(ranks.begin(), ranks.end(), cert.rank));
    return cert;
}

bool recheck_certificate(const GeneratorSystem& sys, const RankCertificate& cert) {
    if (cert.rank == 0)
        return cert.minor_rows.empty() && cert.minor_cols.empty();
    if (cert.minor_rows.size() != static_cast<std::size_t>(cert.rank) ||
        cert.minor_cols.size() != static_cast<std::size_t>(cert.rank))
        return false;
    if (cert.mode == FieldMode::prime) {
        auto m = jacobian_mod_p(sys, cert.witness_point, cert.prime);
        return minor_invertible_mod_p(m, cert.minor_rows, cert.minor_cols, cert.prime);
    }
    std::vector<Rational> rp;
    rp.reserve(cert.witness_point.size());
    for (auto v : cert.witness_point) rp.emplace_back(v);
    auto m = jacobian_at(sys, rp);
    return minor_invertible_rational(m, cert.minor_rows, cert.minor_cols);
}

std::vector<int> greedy_transcendence_base(const GeneratorSystem& sys,
                                           const std::vector<int>& order,
                                           const FieldConfig& cfg) {
    cfg.validate();
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k))
                throw PreconditionError("order must be a permutation of the generators");
        if (order.size() != sys.gens.size())
            throw PreconditionError("order must be a permutation of the generators");
    }
    std::vector<int> kept;
    int current = 0;
    for (std::size_t step = 0; step < order.size(); ++step) {
        std::vector<int> candidate = kept;
        candidate.push_back(order[step]);
        FieldConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0xba5e0000 + static_cast<std::uint64_t>(step));
        const int r = generic_rank(subsystem(sys, candidate), sub).rank;
        if (r > current) {
            kept = std::move(candidate);
            current = r;
        }
    }
    return kept;
}

Poly edge_binomial_poly(int n, int i, int j) {
    const int nv = 2 * n;
    Poly f(nv);
    Poly::Monomial a(static_cast<std::size_t>(nv), 0), b(static_cast<std::size_t>(nv), 0);
    a[static_cast<std::size_t>(i - 1)] = 1;
    a[static_cast<std::size_t>(n + j - 1)] = 1; // x_i y_j
    b[static_cast<std::size_t>(j - 1)] = 1;
    b[static_cast<std::size_t>(n + i - 1)] = 1; // x_j y_i
    f.add_term(std::move(a), Integer(1));
    f.add_term(std::move(b), Integer(-1));
    return f;
}

bool plucker_check(int a, int b, int c, int d) {
    if (!(0 < a && a < b && b < c && c < d))
        throw PreconditionError("plucker check needs vertices a < b < c < d");
    const int n = d;
    const Poly fab = edge_binomial_poly(n, a, b), fcd = edge_binomial_poly(n, c, d),
               fac = edge_binomial_poly(n, a, c), fbd = edge_binomial_poly(n, b, d),
               fad = edge_binomial_poly(n, a, d), fbc = edge_binomial_poly(n, b, c);
    return (fab * fcd - fac * fbd + fad * fbc).is_zero();
}

} // namespace spreadlab
