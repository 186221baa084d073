#pragma once

#include <map>
#include <vector>

#include "spreadlab/rational.hpp"

namespace spreadlab {

/// Sparse multivariate polynomial over Z. Monomials are exponent vectors of
/// fixed length; the map's lexicographic vector order serves as the monomial
/// order (it is multiplicative and well-founded, which is all exact division
/// needs).
class Poly {
  public:
    using Monomial = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, Integer c);
    static Poly variable(int nvars, int index); // 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Integer>& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const = default;

    /// Quotient of an exact division (throws std::logic_error if the divisor
    /// does not divide *this evenly — a broken fraction-free invariant).
    Poly exact_div(const Poly& divisor) const;

    /// Substitute integer values for all variables.
    Integer evaluate(const std::vector<Integer>& point) const;

    void add_term(Monomial m, Integer c);

  private:
    int nvars_ = 0;
    std::map<Monomial, Integer> terms_;
};

/// Rank of a polynomial matrix over the rational function field, by
/// fraction-free (Bareiss) elimination with full pivoting. Entries stay in
/// Z[x]; every division is exact.
int bareiss_rank(std::vector<std::vector<Poly>> m);

} // namespace spreadlab
