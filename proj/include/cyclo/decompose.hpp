#pragma once

/**
 * @file decompose.hpp
 * @brief Direct-sum decomposition of period-n sequences into ker Phi_d(E).
 *
 * On the grid, the operator algebra is Q[x]/(x^n - 1). Since x^n - 1 is the
 * product of the pairwise coprime Phi_d (d | n), each kernel ker Phi_d(E) has
 * an idempotent projector pi_d = R_d * Q_d mod (x^n - 1), where
 * Q_d = (x^n - 1) / Phi_d and R_d is the inverse of Q_d modulo Phi_d. The
 * projectors are mutually orthogonal and sum to the identity, so every
 * period-n sequence splits uniquely as sum_d pi_d(E) y.
 */

#include "cyclo/cyclotomic.hpp"
#include "cyclo/periodic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace cyclo {

struct ProjectorSet {
    std::uint64_t n = 0;
    std::map<std::uint64_t, ShiftPoly> projectors;  ///< d -> pi_d, deg < n
};

/// Builds and verifies (idempotence, orthogonality, completeness) the projectors for n.
ProjectorSet build_projectors(std::uint64_t n);

/// Memoized, verified projectors; safe to call concurrently.
std::shared_ptr<const ProjectorSet> projectors_for(std::uint64_t n);

struct ProjectorCheck {
    bool idempotent = true;
    bool orthogonal = true;
    bool complete = true;
    [[nodiscard]] bool ok() const { return idempotent && orthogonal && complete; }
};

/// Checks the three projector identities exactly, modulo x^n - 1.
ProjectorCheck check_projectors(const ProjectorSet& set);

struct Decomposition {
    std::uint64_t n = 0;
    std::map<std::uint64_t, PeriodicSeq> components;  ///< one entry per divisor of n
};

Decomposition decompose(const PeriodicSeq& seq);
/// Decomposition against an explicit projector set with matching n.
Decomposition decompose(const PeriodicSeq& seq, const ProjectorSet& set);

PeriodicSeq reconstruct(const Decomposition& dec);
/// Divisors whose component is nonzero, ascending.
std::vector<std::uint64_t> support(const Decomposition& dec);
/// prod_{d in support} Phi_d; 1 for the zero sequence.
RatPoly minimal_annihilator(const PeriodicSeq& seq);
/// dim ker Phi_d(E) inside the grid space P_n, i.e. phi(d). Requires d | n.
std::uint64_t kernel_dimension(std::uint64_t n, std::uint64_t d);

}  // namespace cyclo
