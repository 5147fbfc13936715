#pragma once

/// @file random.hpp
/// @brief Seeded generators for small exact inputs (property suites and tests).

#include "cyclo/exactmath.hpp"
#include "cyclo/periodic.hpp"

#include <cstdint>
#include <random>

namespace cyclo {

class InputGenerator {
public:
    explicit InputGenerator(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// num/den with |num| <= max_num, 1 <= den <= max_den.
    Rational rational(long max_num = 9, long max_den = 5) {
        Rational r(integer(-max_num, max_num), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    /// Polynomial of exact degree `degree` with small integer coefficients.
    RatPoly int_poly(std::size_t degree, long bound = 5) {
        std::vector<Rational> c(degree + 1);
        for (auto& x : c) x = integer(-bound, bound);
        while (c.back() == 0) c.back() = integer(-bound, bound);
        return RatPoly(std::move(c));
    }

    /// Polynomial of degree <= max_degree (possibly zero) with small rational coefficients.
    RatPoly rat_poly(std::size_t max_degree) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
        for (auto& x : c) x = rational();
        return RatPoly(std::move(c));
    }

    PeriodicSeq sequence(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = rational();
        return PeriodicSeq(std::move(v));
    }

    std::vector<Rational> int_vector(std::size_t n, long lo, long hi) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = integer(lo, hi);
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace cyclo
