/// @file acceptance.cpp
/// @brief Exit-gate suite: one PASS/FAIL line per acceptance criterion.
///
/// Each criterion runs at its pinned bound, tolerance and time budget. The
/// process exits nonzero if any criterion fails.

#include "cyclo/circulant.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/decompose.hpp"
#include "cyclo/diffeq.hpp"
#include "cyclo/random.hpp"
#include "cyclo/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace cyclo;

namespace {

constexpr double kOracleTolerance = 1e-9;

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  ///< 0 means untimed
    std::function<Verdict()> body;
};

Verdict golden_table() {
    Verdict v;
    const std::vector<RatPoly> listed = {
        {-1, 1},          {1, 1},          {1, 1, 1},       {1, 0, 1},
        {1, 1, 1, 1, 1},  {1, -1, 1},      {1, 1, 1, 1, 1, 1, 1},
        {1, 0, 0, 0, 1},  {1, 0, 0, 1, 0, 0, 1},            {1, -1, 1, -1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, -1, 0, 1},
    };
    for (std::uint64_t n = 1; n <= 12; ++n)
        v.require(cyclotomic(n) == listed[n - 1], "Phi_" + std::to_string(n) + " mismatch");
    return v;
}

Verdict factorization_identity() {
    Verdict v;
    for (std::uint64_t n = 1; n <= 200; ++n) {
        RatPoly prod = RatPoly::constant(1);
        for (auto d : divisors(n)) prod = prod * cyclotomic(d);
        v.require(prod == RatPoly::unity_minus_one(n), "product != x^n - 1 at n=" + std::to_string(n));
    }
    for (std::uint64_t n = 1; n <= 64; ++n)
        v.require(cyclotomic(n) == cyclotomic_mobius_oracle(n), "Moebius oracle disagrees at n=" + std::to_string(n));
    return v;
}

Verdict projector_algebra() {
    Verdict v;
    for (std::uint64_t n = 1; n <= 48; ++n) {
        const ProjectorSet set = build_projectors(n);
        const RatPoly unity = RatPoly::unity_minus_one(n);
        const std::string at = " at n=" + std::to_string(n);
        v.require(set.projectors.size() == divisors(n).size(), "missing projector" + at);
        RatPoly total;
        for (const auto& [d, pi] : set.projectors) {
            v.require(pi.poly.degree() < static_cast<long>(n), "projector degree" + at);
            v.require((pi.poly * pi.poly) % unity == pi.poly, "idempotence, d=" + std::to_string(d) + at);
            for (const auto& [e, other] : set.projectors)
                if (e != d) v.require(((pi.poly * other.poly) % unity).is_zero(), "orthogonality" + at);
            total = total + pi.poly;
        }
        v.require(total % unity == RatPoly{1} % unity, "completeness" + at);
    }
    return v;
}

Verdict decomposition_round_trip() {
    Verdict v;
    InputGenerator gen(4);
    for (std::uint64_t n = 1; n <= 24; ++n) {
        for (int i = 0; i < 100; ++i) {
            const PeriodicSeq s = gen.sequence(n);
            const Decomposition dec = decompose(s);
            const std::string at = " at n=" + std::to_string(n);
            v.require(reconstruct(dec) == s, "reconstruction" + at);
            for (const auto& [d, c] : dec.components) {
                v.require(apply(cyclotomic(d), c).is_zero(), "annihilation" + at);
                v.require(c.is_zero() || fundamental_period(c) == d, "component period" + at);
            }
            v.require(fundamental_period(s) == lcm_of(support(dec)), "lcm of support" + at);
        }
    }
    return v;
}

Verdict oracle_agreement() {
    Verdict v;
    InputGenerator gen(5);
    double worst = 0;
    for (std::uint64_t n = 1; n <= 64; ++n) {
        for (int i = 0; i < 20; ++i) {
            const PeriodicSeq s = gen.sequence(n);
            const Decomposition dec = decompose(s);
            const auto groups = dft_group_oracle(s);
            for (const auto& [d, c] : dec.components)
                for (std::size_t k = 0; k < n; ++k) {
                    worst = std::max(worst, std::abs(groups.at(d)[k] - c.values()[k].get_d()));
                    worst = std::max(worst, std::abs(groups.at(d)[k].imag()));
                }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.3g", worst);
    v.require(worst <= kOracleTolerance, buf);
    if (v.ok) v.detail = buf;
    return v;
}

Verdict worked_example() {
    Verdict v;
    const DiffEqReport r = analyze(RatPoly{1, 2, 2, 1});
    v.require(r.cyclotomic_factors == std::map<std::uint64_t, unsigned>{{2, 1}, {3, 1}}, "factor set");
    v.require(r.residual.degree() == 0, "residual not constant");
    v.require(r.is_cyclotomic_equation, "not a cyclotomic equation");
    v.require(r.common_period == 6u, "common period");
    for (std::uint64_t d : {2, 3}) {
        const PeriodicSeq s = r.sample_solutions.at(d);
        v.require(apply(cyclotomic(d), s).is_zero(), "sample not annihilated by Phi_d");
        v.require(apply(r.char_poly, s).is_zero(), "sample not annihilated by P");
    }
    return v;
}

void circulant_case(Verdict& v, const std::vector<Rational>& row) {
    const Circulant c(row);
    const Rational by_elim = circ_det_bareiss(c);
    const bool gcd_nontrivial = gcd(c.associated_poly(), RatPoly::unity_minus_one(row.size())).degree() >= 1;
    v.require(by_elim == circ_det_resultant(c), "determinant routes disagree");
    v.require(is_singular(c).singular == (by_elim == 0), "singular flag vs det");
    v.require(gcd_nontrivial == (by_elim == 0), "gcd criterion vs det");
}

Verdict circulant_cross_checks() {
    Verdict v;
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Rational> row(n, Rational(-1));
        while (true) {
            circulant_case(v, row);
            ++exhaustive;
            std::size_t k = 0;
            while (k < n && row[k] == 1) row[k++] = -1;
            if (k == n) break;
            row[k] += 1;
        }
    }
    v.require(exhaustive == 3 + 9 + 27, "exhaustive enumeration incomplete");

    InputGenerator gen(6);
    for (int i = 0; i < 1000; ++i)
        circulant_case(v, gen.int_vector(static_cast<std::size_t>(gen.integer(1, 8)), -2, 2));

    const Singularity example = is_singular(Circulant({-1, 1}));
    v.require(example.singular && example.witnesses == std::vector<std::uint64_t>{1}, "C(-1,1) witness");
    return v;
}

Verdict annihilator_dimension() {
    Verdict v;
    InputGenerator gen(7);
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        std::vector<Rational> unit(n);
        unit[0] = 1;
        const PeriodicSeq delta(unit);
        v.require(annihilator_system(delta).basis.empty(), "delta nullspace not trivial" + at);
        v.require(annihilator_consistency(delta), "delta dimension identity" + at);

        for (int i = 0; i < 200; ++i) {
            PeriodicSeq s = gen.sequence(n);
            // Half the samples drop random components so that the nullspace is nontrivial.
            if (i % 2) {
                Decomposition dec = decompose(s);
                for (auto& [d, c] : dec.components)
                    if (gen.coin()) c = PeriodicSeq::zero(n);
                s = reconstruct(dec);
            }
            std::uint64_t cyclic_dim = 0;
            for (auto d : support(decompose(s))) cyclic_dim += euler_phi(d);
            v.require(annihilator_system(s).basis.size() == n - cyclic_dim, "nullity" + at);
            v.require(annihilator_consistency(s), "consistency" + at);
        }
    }
    return v;
}

Verdict full_selfcheck() {
    Verdict v;
    SelfcheckOptions opts;
    opts.max_n = 24;
    for (const auto& r : run_selfcheck(opts))
        v.require(r.passed(), r.name + " failed on " + r.failure.value_or(""));
    return v;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden cyclotomic table n=1..12", 1.0, golden_table},
        {2, "prod Phi_d = x^n-1 (n<=200), Moebius oracle (n<=64)", 10.0, factorization_identity},
        {3, "projector idempotence/orthogonality/completeness (n<=48)", 30.0, projector_algebra},
        {4, "decomposition round trip, 100 seqs per n<=24", 30.0, decomposition_round_trip},
        {5, "DFT oracle agreement <= 1e-9 (n<=64, 20 seqs)", 20.0, oracle_agreement},
        {6, "worked example 1+2x+2x^2+x^3", 0.0, worked_example},
        {7, "circulant det routes, singularity, C(-1,1)", 30.0, circulant_cross_checks},
        {8, "annihilator nullity = n - sum phi(d) (200 per n<=12)", 20.0, annihilator_dimension},
        {9, "selfcheck --max-n 24", 60.0, full_selfcheck},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.body();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
            v.ok = false;
            v.detail = "over time budget";
        }
        failures += v.ok ? 0 : 1;
        std::printf("[%s] %d. %s (%.2fs%s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                    c.budget_seconds > 0 ? (" / " + std::to_string(static_cast<int>(c.budget_seconds)) + "s").c_str() : "",
                    v.detail.empty() ? "" : ": ", v.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
