#pragma once

/**
 * @file periodic.hpp
 * @brief Exact periodic sequences on Z/nZ and the shift-operator calculus.
 *
 * A PeriodicSeq stores one period y(0), ..., y(n-1); y(x) for any integer x
 * is values[x mod n]. The shift E acts by rotation, so a polynomial P(E)
 * acts through Q[x]/(x^n - 1).
 */

#include "cyclo/exactmath.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace cyclo {

class PeriodicSeq {
public:
    PeriodicSeq() = default;
    explicit PeriodicSeq(std::vector<Rational> values);
    PeriodicSeq(std::initializer_list<long> values);

    static PeriodicSeq zero(std::size_t n);

    [[nodiscard]] std::size_t period() const { return values_.size(); }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    /// y(x) for any integer x.
    [[nodiscard]] const Rational& at(long long x) const;
    [[nodiscard]] bool is_zero() const;

    friend PeriodicSeq operator+(const PeriodicSeq& a, const PeriodicSeq& b);
    friend PeriodicSeq operator-(const PeriodicSeq& a, const PeriodicSeq& b);
    friend PeriodicSeq operator-(const PeriodicSeq& a);
    friend PeriodicSeq operator*(const Rational& c, const PeriodicSeq& a);
    friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b) = default;

private:
    std::vector<Rational> values_;
};

/// A polynomial in the shift operator, sum c_i E^i.
struct ShiftPoly {
    RatPoly poly;
};

/// The same sequence declared with a multiple of its period.
PeriodicSeq extend(const PeriodicSeq& seq, std::size_t new_period);

/// E^h: result[k] = values[(k + h) mod n]; h may be negative.
PeriodicSeq shift(const PeriodicSeq& seq, long long h);
/// P(E) y, pointwise sum_i c_i y(k + i).
PeriodicSeq apply(const ShiftPoly& op, const PeriodicSeq& seq);
inline PeriodicSeq apply(const RatPoly& op, const PeriodicSeq& seq) { return apply(ShiftPoly{op}, seq); }

/// Least p (a divisor of the declared period) with E^p y == y.
std::size_t fundamental_period(const PeriodicSeq& seq);
/// E^q y == -y. Requires 2q | n.
bool is_antiperiodic(const PeriodicSeq& seq, std::size_t q);

struct HalvingSplit {
    PeriodicSeq periodic;      ///< (y + E^{n/2} y) / 2, (n/2)-periodic
    PeriodicSeq antiperiodic;  ///< (y - E^{n/2} y) / 2, (n/2)-antiperiodic
};

/// Requires an even period; periodic + antiperiodic == seq.
HalvingSplit halving_split(const PeriodicSeq& seq);

struct FrequencyBin {
    std::size_t k;
    std::size_t order;  ///< n / gcd(n, k): order of the root of unity e^{2 pi i k / n}
};

FrequencyBin frequency_bin(std::size_t n, std::size_t k);

/// Floating-point oracle: DFT bins grouped by root-of-unity order d and
/// inverse-transformed per group. Group d approximates the ker Phi_d(E)
/// component of seq.
std::map<std::uint64_t, std::vector<std::complex<double>>> dft_group_oracle(const PeriodicSeq& seq);

}  // namespace cyclo
