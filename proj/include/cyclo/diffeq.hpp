#pragma once

/**
 * @file diffeq.hpp
 * @brief Periodic solutions of constant-coefficient difference equations P(E) y = 0.
 *
 * Existence of an integer-periodic solution is decided exactly: it holds iff
 * some Phi_d divides P over Q. Roots of modulus one that are not roots of
 * unity (solutions of non-integer period) can only be screened: an exact
 * necessary condition on P and its reversal, confirmed numerically through
 * companion-matrix eigenvalues.
 */

#include "cyclo/cyclotomic.hpp"
#include "cyclo/periodic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cyclo {

enum class UnitModulusFlag {
    none,
    necessary_condition_met,
    numerically_confirmed,
};

std::string to_string(UnitModulusFlag flag);

/// Eigenvalue moduli within this distance of 1 count as unit modulus.
inline constexpr double kUnitModulusTolerance = 1e-8;

struct DiffEqReport {
    RatPoly char_poly;
    std::map<std::uint64_t, unsigned> cyclotomic_factors;  ///< d -> multiplicity
    RatPoly residual;
    bool has_integer_periodic = false;
    bool is_cyclotomic_equation = false;
    std::optional<std::uint64_t> common_period;  ///< lcm of the factor indices, cyclotomic equations only
    UnitModulusFlag unit_modulus_flag = UnitModulusFlag::none;
    std::map<std::uint64_t, PeriodicSeq> sample_solutions;  ///< one per cyclotomic factor
};

/// Requires deg p >= 1 and p(0) != 0.
DiffEqReport analyze(const RatPoly& p);

/// The d-periodic sequence generated by the Phi_d recurrence from (1, 0, ..., 0).
PeriodicSeq synth_solution(std::uint64_t d);

UnitModulusFlag unit_modulus_screen(const RatPoly& p);

std::string periodicity_verdict(const DiffEqReport& report);

}  // namespace cyclo
