#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Totient, divisors, Moebius, and exact cyclotomic polynomials.
 *
 * Phi_n is built from the factorization x^n - 1 = prod_{d|n} Phi_d by
 * dividing x^n - 1 exactly by every Phi_d with d a proper divisor of n.
 * Results are memoized in a CyclotomicTable; the table is append-only and
 * guarded by a mutex, so one instance can be shared between threads.
 */

#include "cyclo/exactmath.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo {

std::uint64_t euler_phi(std::uint64_t n);
/// Ascending list of all positive divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t lcm_of(const std::vector<std::uint64_t>& values);

class CyclotomicTable {
public:
    /// Phi_n, monic with integer coefficients and degree phi(n).
    RatPoly get(std::uint64_t n);

private:
    const RatPoly& get_locked(std::uint64_t n);

    std::mutex mutex_;
    std::map<std::uint64_t, RatPoly> memo_;
};

/// Process-wide table used by the free functions below.
CyclotomicTable& shared_cyclotomic_table();

RatPoly cyclotomic(std::uint64_t n);

/// Independent construction prod_{d|n} (x^{n/d} - 1)^{mu(d)}: the factors
/// with mu = +1 are multiplied out, then divided exactly by those with mu = -1.
RatPoly cyclotomic_mobius_oracle(std::uint64_t n);

struct UnityFactor {
    std::uint64_t d;
    RatPoly phi;
};

/// The factors Phi_d of x^n - 1, one per divisor d, ascending.
std::vector<UnityFactor> factor_unity(std::uint64_t n);

/// All d with phi(d) == m, searched over d <= 2 m^2 (plus d in {1, 2}).
std::vector<std::uint64_t> totient_preimage(std::uint64_t m);

/// Returns d if p == Phi_d.
std::optional<std::uint64_t> is_cyclotomic(const RatPoly& p);

struct CyclotomicFactorization {
    std::map<std::uint64_t, unsigned> factors;  ///< d -> multiplicity
    RatPoly residual;                           ///< no cyclotomic factor left
};

/// Divides out every Phi_d | p with multiplicity; p == residual * prod Phi_d^mult.
CyclotomicFactorization cyclotomic_factors(const RatPoly& p);

}  // namespace cyclo
