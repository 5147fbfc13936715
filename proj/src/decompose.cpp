#include "cyclo/decompose.hpp"

#include <mutex>

namespace cyclo {

namespace {

RatPoly mul_mod(const RatPoly& a, const RatPoly& b, const RatPoly& modulus) {
    return (a * b) % modulus;
}

}  // namespace

ProjectorSet build_projectors(std::uint64_t n) {
    if (n == 0) throw DomainError("build_projectors requires n >= 1");
    const RatPoly unity = RatPoly::unity_minus_one(n);

    ProjectorSet set{n, {}};
    for (auto d : divisors(n)) {
        const RatPoly phi = cyclotomic(d);
        const RatPoly cofactor = exact_divide(unity, phi);
        const Bezout bz = xgcd(cofactor, phi);
        if (bz.gcd != RatPoly::constant(1))
            throw std::logic_error("cofactor and cyclotomic factor are not coprime");
        set.projectors.emplace(d, ShiftPoly{mul_mod(bz.u, cofactor, unity)});
    }
    if (!check_projectors(set).ok()) throw std::logic_error("projector identities violated");
    return set;
}

std::shared_ptr<const ProjectorSet> projectors_for(std::uint64_t n) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const ProjectorSet>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const ProjectorSet>(build_projectors(n));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(built)).first->second;
}

ProjectorCheck check_projectors(const ProjectorSet& set) {
    const RatPoly unity = RatPoly::unity_minus_one(set.n);
    ProjectorCheck out;
    RatPoly total;
    for (auto i = set.projectors.begin(); i != set.projectors.end(); ++i) {
        const RatPoly& p = i->second.poly;
        total = total + p;
        if (mul_mod(p, p, unity) != p % unity) out.idempotent = false;
        for (auto j = std::next(i); j != set.projectors.end(); ++j)
            if (!mul_mod(p, j->second.poly, unity).is_zero()) out.orthogonal = false;
    }
    if (total % unity != RatPoly::constant(1) % unity) out.complete = false;
    return out;
}

Decomposition decompose(const PeriodicSeq& seq) {
    return decompose(seq, *projectors_for(seq.period()));
}

Decomposition decompose(const PeriodicSeq& seq, const ProjectorSet& set) {
    if (set.n != seq.period()) throw DomainError("projector set does not match the sequence period");
    Decomposition dec{set.n, {}};
    for (const auto& [d, pi] : set.projectors) dec.components.emplace(d, apply(pi, seq));
    return dec;
}

PeriodicSeq reconstruct(const Decomposition& dec) {
    PeriodicSeq sum = PeriodicSeq::zero(dec.n);
    for (const auto& [d, component] : dec.components) sum = sum + component;
    return sum;
}

std::vector<std::uint64_t> support(const Decomposition& dec) {
    std::vector<std::uint64_t> out;
    for (const auto& [d, component] : dec.components)
        if (!component.is_zero()) out.push_back(d);
    return out;
}

RatPoly minimal_annihilator(const PeriodicSeq& seq) {
    RatPoly product = RatPoly::constant(1);
    for (auto d : support(decompose(seq))) product = product * cyclotomic(d);
    return product;
}

std::uint64_t kernel_dimension(std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0 || n % d != 0) throw DomainError("kernel_dimension requires d | n");
    return euler_phi(d);
}

}  // namespace cyclo
