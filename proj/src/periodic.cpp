#include "cyclo/periodic.hpp"

#include "cyclo/cyclotomic.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace cyclo {

namespace {

std::size_t wrap(long long x, std::size_t n) {
    const auto m = static_cast<long long>(n);
    return static_cast<std::size_t>(((x % m) + m) % m);
}

void require_same_period(const PeriodicSeq& a, const PeriodicSeq& b) {
    if (a.period() != b.period()) throw DomainError("sequences have different declared periods");
}

}  // namespace

PeriodicSeq::PeriodicSeq(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("a periodic sequence needs a period >= 1");
    for (auto& v : values_) v.canonicalize();
}

PeriodicSeq::PeriodicSeq(std::initializer_list<long> values) {
    if (values.size() == 0) throw DomainError("a periodic sequence needs a period >= 1");
    for (long v : values) values_.emplace_back(v);
}

PeriodicSeq PeriodicSeq::zero(std::size_t n) {
    return PeriodicSeq(std::vector<Rational>(n));
}

const Rational& PeriodicSeq::at(long long x) const {
    return values_[wrap(x, values_.size())];
}

bool PeriodicSeq::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

PeriodicSeq operator+(const PeriodicSeq& a, const PeriodicSeq& b) {
    require_same_period(a, b);
    std::vector<Rational> v(a.period());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] + b.values_[k];
    return PeriodicSeq(std::move(v));
}

PeriodicSeq operator-(const PeriodicSeq& a) {
    std::vector<Rational> v(a.period());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -a.values_[k];
    return PeriodicSeq(std::move(v));
}

PeriodicSeq operator-(const PeriodicSeq& a, const PeriodicSeq& b) {
    return a + (-b);
}

PeriodicSeq operator*(const Rational& c, const PeriodicSeq& a) {
    std::vector<Rational> v(a.period());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * a.values_[k];
    return PeriodicSeq(std::move(v));
}

PeriodicSeq extend(const PeriodicSeq& seq, std::size_t new_period) {
    if (new_period == 0 || new_period % seq.period() != 0)
        throw DomainError("extended period must be a multiple of the declared period");
    std::vector<Rational> v(new_period);
    for (std::size_t k = 0; k < new_period; ++k) v[k] = seq.values()[k % seq.period()];
    return PeriodicSeq(std::move(v));
}

PeriodicSeq shift(const PeriodicSeq& seq, long long h) {
    const std::size_t n = seq.period();
    std::vector<Rational> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = seq.at(static_cast<long long>(k) + h);
    return PeriodicSeq(std::move(v));
}

PeriodicSeq apply(const ShiftPoly& op, const PeriodicSeq& seq) {
    const std::size_t n = seq.period();
    const auto& c = op.poly.coeffs();
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * seq.values()[(k + i) % n];
    }
    return PeriodicSeq(std::move(v));
}

std::size_t fundamental_period(const PeriodicSeq& seq) {
    for (auto p : divisors(seq.period())) {
        const std::size_t n = seq.period();
        bool periodic = true;
        for (std::size_t k = 0; k < n && periodic; ++k) periodic = seq.values()[k] == seq.values()[(k + p) % n];
        if (periodic) return p;
    }
    return seq.period();
}

bool is_antiperiodic(const PeriodicSeq& seq, std::size_t q) {
    const std::size_t n = seq.period();
    if (q == 0 || n % (2 * q) != 0) throw DomainError("antiperiod q requires 2q to divide the period");
    for (std::size_t k = 0; k < n; ++k)
        if (seq.values()[(k + q) % n] != -seq.values()[k]) return false;
    return true;
}

HalvingSplit halving_split(const PeriodicSeq& seq) {
    const std::size_t n = seq.period();
    if (n % 2 != 0) throw DomainError("halving split requires an even period");
    const PeriodicSeq half = shift(seq, static_cast<long long>(n / 2));
    const Rational one_half(1, 2);
    return {one_half * (seq + half), one_half * (seq - half)};
}

FrequencyBin frequency_bin(std::size_t n, std::size_t k) {
    if (n == 0 || k >= n) throw DomainError("frequency bin out of range");
    return {k, n / std::gcd(n, k)};
}

std::map<std::uint64_t, std::vector<std::complex<double>>> dft_group_oracle(const PeriodicSeq& seq) {
    using cplx = std::complex<double>;
    const std::size_t n = seq.period();
    const double two_pi = 2.0 * std::numbers::pi;

    std::vector<cplx> spectrum(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0;
        for (std::size_t x = 0; x < n; ++x) {
            const double angle = -two_pi * static_cast<double>((k * x) % n) / static_cast<double>(n);
            acc += seq.values()[x].get_d() * std::polar(1.0, angle);
        }
        spectrum[k] = acc;
    }

    std::map<std::uint64_t, std::vector<cplx>> groups;
    for (auto d : divisors(n)) groups[d].assign(n, cplx{});
    for (std::size_t k = 0; k < n; ++k) {
        auto& group = groups[frequency_bin(n, k).order];
        for (std::size_t x = 0; x < n; ++x) {
            const double angle = two_pi * static_cast<double>((k * x) % n) / static_cast<double>(n);
            group[x] += spectrum[k] * std::polar(1.0, angle) / static_cast<double>(n);
        }
    }
    return groups;
}

}  // namespace cyclo
