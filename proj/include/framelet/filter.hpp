#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "framelet/rational.hpp"

namespace framelet {

using Index = std::vector<long>;  // lattice point in Z^d
using MultiIndex = std::vector<unsigned>;

struct RadicandMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Axis-aligned bounding box [lo_1,hi_1] x ... x [lo_d,hi_d].
struct Box {
    Index lo, hi;
    bool contains(const Index& k) const;
    long volume() const;
};

// Finitely supported filter on Z^d with exact coefficients.  The stored
// value at k is coeff(k) * sqrt(radicand); radicand is a square-free
// positive integer (1 = rational filter).  Zero coefficients are never
// stored and the radicand of the zero filter is 1.
class Filter {
public:
    explicit Filter(int dim, Integer radicand = 1);

    int dim() const { return dim_; }
    const Integer& radicand() const { return radicand_; }
    const std::map<Index, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational at(const Index& k) const;
    void set(const Index& k, const Rational& v);

    // Tight bounding box of the nonzero coefficients; nullopt for zero filter.
    std::optional<Box> support() const;

    // sum of coefficients times sqrt(radicand), as a (rational, radicand) pair
    Rational coeff_sum() const;

    bool operator==(const Filter& other) const;

    Filter scaled(const Rational& c) const;
    // multiply by sqrt(k)*c, renormalizing the radicand
    Filter radical_scaled(const Rational& c, const Integer& k) const;
    Filter negated() const;

private:
    int dim_;
    Integer radicand_;
    std::map<Index, Rational> coeffs_;
    void normalize_radicand();
};

Filter delta(int dim);

Filter add(const Filter& u, const Filter& v);
Filter sub(const Filter& u, const Filter& v);
Filter convolve(const Filter& u, const Filter& v);

// u*(k) = conj(u(-k)); index reversal for real coefficients
Filter star(const Filter& u);

// Laurent polynomial prod_i (1 - z_i)^{mu_i}
Filter nabla_delta(const MultiIndex& mu, int dim);

// u^(xi) = sqrt(radicand) * sum u(k) exp(-i k.xi), double precision
std::complex<double> evaluate_at(const Filter& u, const std::vector<double>& xi);

// k^mu as an exact integer
Integer index_power(const Index& k, const MultiIndex& mu);

// all mu in N_0^d with |mu| == total, graded-lex order (here: lex within the
// fixed degree, first component most significant, descending)
std::vector<MultiIndex> multi_indices_of_degree(int dim, unsigned total);

// all mu with |mu| < below, ordered by degree then as above
std::vector<MultiIndex> multi_indices_below(int dim, unsigned below);

}  // namespace framelet
