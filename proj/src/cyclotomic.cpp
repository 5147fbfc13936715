#include "cyclo/cyclotomic.hpp"

#include <numeric>

namespace cyclo {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " requires n >= 1");
}

/// phi(k) for every k <= limit.
std::vector<std::uint64_t> totient_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), std::uint64_t{0});
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;  // composite, already touched
        for (std::uint64_t k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
    }
    return phi;
}

std::uint64_t candidate_bound(std::uint64_t m) {
    return std::max<std::uint64_t>(2, 2 * m * m);
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n, "euler_phi");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require_positive(n, "divisors");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

int mobius(std::uint64_t n) {
    require_positive(n, "mobius");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& values) {
    std::uint64_t acc = 1;
    for (auto v : values) acc = std::lcm(acc, v);
    return acc;
}

// ---------------------------------------------------------------------------

RatPoly CyclotomicTable::get(std::uint64_t n) {
    require_positive(n, "cyclotomic");
    std::lock_guard lock(mutex_);
    return get_locked(n);
}

const RatPoly& CyclotomicTable::get_locked(std::uint64_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;

    RatPoly phi = RatPoly::unity_minus_one(n);
    for (auto d : divisors(n)) {
        if (d == n) break;
        phi = exact_divide(phi, get_locked(d));
    }
    if (!phi.is_monic() || !phi.has_integer_coeffs() ||
        static_cast<std::uint64_t>(phi.degree()) != euler_phi(n))
        throw std::logic_error("cyclotomic construction produced a malformed polynomial");
    return memo_.emplace(n, std::move(phi)).first->second;
}

CyclotomicTable& shared_cyclotomic_table() {
    static CyclotomicTable table;
    return table;
}

RatPoly cyclotomic(std::uint64_t n) {
    return shared_cyclotomic_table().get(n);
}

RatPoly cyclotomic_mobius_oracle(std::uint64_t n) {
    require_positive(n, "cyclotomic_mobius_oracle");
    RatPoly numerator = RatPoly::constant(1);
    RatPoly denominator = RatPoly::constant(1);
    for (auto d : divisors(n)) {
        int mu = mobius(d);
        if (mu == 1) numerator = numerator * RatPoly::unity_minus_one(n / d);
        else if (mu == -1) denominator = denominator * RatPoly::unity_minus_one(n / d);
    }
    return exact_divide(numerator, denominator);
}

std::vector<UnityFactor> factor_unity(std::uint64_t n) {
    std::vector<UnityFactor> out;
    for (auto d : divisors(n)) out.push_back({d, cyclotomic(d)});
    return out;
}

std::vector<std::uint64_t> totient_preimage(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    if (m == 0) return out;
    const auto phi = totient_sieve(candidate_bound(m));
    for (std::uint64_t d = 1; d < phi.size(); ++d)
        if (phi[d] == m) out.push_back(d);
    return out;
}

std::optional<std::uint64_t> is_cyclotomic(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("is_cyclotomic of the zero polynomial");
    if (p.degree() < 1 || !p.is_monic() || !p.has_integer_coeffs()) return std::nullopt;
    for (auto d : totient_preimage(static_cast<std::uint64_t>(p.degree())))
        if (cyclotomic(d) == p) return d;
    return std::nullopt;
}

CyclotomicFactorization cyclotomic_factors(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("cyclotomic_factors of the zero polynomial");
    CyclotomicFactorization out{{}, p};
    if (p.degree() < 1) return out;

    const auto m = static_cast<std::uint64_t>(p.degree());
    const auto phi = totient_sieve(candidate_bound(m));
    for (std::uint64_t d = 1; d < phi.size(); ++d) {
        if (phi[d] > static_cast<std::uint64_t>(out.residual.degree())) continue;
        const RatPoly f = cyclotomic(d);
        while (out.residual.degree() >= f.degree()) {
            auto [q, r] = divmod(out.residual, f);
            if (!r.is_zero()) break;
            out.residual = std::move(q);
            ++out.factors[d];
        }
    }
    return out;
}

}  // namespace cyclo
