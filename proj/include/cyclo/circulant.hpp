#pragma once

/**
 * @file circulant.hpp
 * @brief Circulant matrices, their determinants, and the annihilator system.
 *
 * C(a_0, ..., a_{n-1}) has entry (i, j) = a_{(j - i) mod n}: each row is the
 * previous one rotated right. Its eigenvalues are f(w) over the n-th roots of
 * unity w, with f(x) = a_0 + a_1 x + ... + a_{n-1} x^{n-1} the associated
 * polynomial. Grouping the roots by order gives
 *
 *     det C = prod_{d | n} Res(Phi_d, f),
 *
 * which is exact and needs no complex arithmetic.
 */

#include "cyclo/exactmath.hpp"
#include "cyclo/periodic.hpp"

#include <cstdint>
#include <vector>

namespace cyclo {

class Circulant {
public:
    explicit Circulant(std::vector<Rational> first_row);

    [[nodiscard]] std::size_t size() const { return first_row_.size(); }
    [[nodiscard]] const std::vector<Rational>& first_row() const { return first_row_; }
    [[nodiscard]] RatPoly associated_poly() const { return RatPoly(first_row_); }

private:
    std::vector<Rational> first_row_;
};

RatMatrix to_matrix(const Circulant& c);

/// Bareiss determinant of the full matrix.
Rational circ_det_bareiss(const Circulant& c);
/// prod_{d|n} Res(Phi_d, f).
Rational circ_det_resultant(const Circulant& c);
/// Both routes, asserted equal (std::logic_error otherwise).
Rational circ_det(const Circulant& c);

struct Singularity {
    bool singular = false;
    std::vector<std::uint64_t> witnesses;  ///< divisors d of n with Phi_d | f
};

Singularity is_singular(const Circulant& c);

struct AnnihilatorSystem {
    RatMatrix matrix;                            ///< M[j][k] = y(j + k)
    std::vector<std::vector<Rational>> basis;    ///< nullspace of M
};

/// Coefficient vectors a with sum_k a_k y(x + k) == 0 for every x.
AnnihilatorSystem annihilator_system(const PeriodicSeq& seq);

/// Nullspace dimension equals n - sum_{d in support} phi(d), and is nonzero
/// exactly when the decomposition support misses some divisor of n.
bool annihilator_consistency(const PeriodicSeq& seq);

}  // namespace cyclo
