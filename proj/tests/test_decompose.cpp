#include "cyclo/decompose.hpp"
#include "cyclo/random.hpp"

#include <doctest.h>

#include <cmath>
#include <future>

using namespace cyclo;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

RatPoly twelfths(std::initializer_list<long> numerators) {
    std::vector<Rational> c;
    for (long v : numerators) c.push_back(q(v, 12));
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("projectors for small n") {
    auto p1 = build_projectors(1);
    REQUIRE(p1.projectors.size() == 1);
    CHECK(p1.projectors.at(1).poly == RatPoly{1});

    auto p2 = build_projectors(2);
    CHECK(p2.projectors.at(1).poly == RatPoly(std::vector<Rational>{q(1, 2), q(1, 2)}));
    CHECK(p2.projectors.at(2).poly == RatPoly(std::vector<Rational>{q(1, 2), q(-1, 2)}));

    CHECK_THROWS_AS(build_projectors(0), DomainError);
}

TEST_CASE("projectors for n = 12 match independently computed values") {
    // Frozen from an independent CAS run of the same construction.
    const std::map<std::uint64_t, RatPoly> expected = {
        {1, twelfths({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})},
        {2, twelfths({1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1})},
        {3, twelfths({2, -1, -1, 2, -1, -1, 2, -1, -1, 2, -1, -1})},
        {4, twelfths({2, 0, -2, 0, 2, 0, -2, 0, 2, 0, -2})},
        {6, twelfths({2, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1})},
        {12, twelfths({4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2})},
    };
    auto set = build_projectors(12);
    REQUIRE(set.projectors.size() == 6);
    for (const auto& [d, pi] : expected) {
        CAPTURE(d);
        CHECK(set.projectors.at(d).poly == pi);
        CHECK(pi.degree() < 12);
    }
}

TEST_CASE("projector identities up to 48") {
    for (std::uint64_t n = 1; n <= 48; ++n) {
        CAPTURE(n);
        const auto check = check_projectors(*projectors_for(n));
        REQUIRE(check.idempotent);
        REQUIRE(check.orthogonal);
        REQUIRE(check.complete);
    }
}

TEST_CASE("check_projectors flags a sign error") {
    ProjectorSet set = build_projectors(6);
    set.projectors.at(6).poly = -set.projectors.at(6).poly;
    const auto check = check_projectors(set);
    CHECK_FALSE(check.idempotent);
    CHECK_FALSE(check.complete);
}

TEST_CASE("decompose examples") {
    auto c = decompose(PeriodicSeq{7, 7, 7, 7});
    CHECK(c.components.at(1) == PeriodicSeq{7, 7, 7, 7});
    CHECK(c.components.at(2).is_zero());
    CHECK(c.components.at(4).is_zero());
    CHECK(support(c) == std::vector<std::uint64_t>{1});

    auto d = decompose(PeriodicSeq{1, 0});
    CHECK(d.components.at(1) == PeriodicSeq(std::vector<Rational>{q(1, 2), q(1, 2)}));
    CHECK(d.components.at(2) == PeriodicSeq(std::vector<Rational>{q(1, 2), q(-1, 2)}));
    CHECK(reconstruct(d) == PeriodicSeq{1, 0});
    CHECK(support(d) == std::vector<std::uint64_t>{1, 2});

    CHECK(support(decompose(PeriodicSeq{1, -1})) == std::vector<std::uint64_t>{2});
    CHECK(reconstruct(decompose(PeriodicSeq::zero(5))).is_zero());
    CHECK(support(decompose(PeriodicSeq::zero(5))).empty());

    CHECK_THROWS_AS(decompose(PeriodicSeq{1, 2, 3}, build_projectors(2)), DomainError);
}

TEST_CASE("minimal annihilator") {
    CHECK(minimal_annihilator(PeriodicSeq{1, -1, 1, -1}) == RatPoly{1, 1});
    CHECK(minimal_annihilator(PeriodicSeq{5, 5, 5}) == RatPoly{-1, 1});
    CHECK(minimal_annihilator(PeriodicSeq{1, 0}) == RatPoly{-1, 0, 1});
    CHECK(minimal_annihilator(PeriodicSeq::zero(3)) == RatPoly{1});

    // No proper sub-product of the support annihilates.
    PeriodicSeq s{3, 1, -2, 0, 5, 1};
    const auto supp = support(decompose(s));
    REQUIRE(apply(minimal_annihilator(s), s).is_zero());
    for (std::size_t skip = 0; skip < supp.size(); ++skip) {
        RatPoly partial = RatPoly::constant(1);
        for (std::size_t i = 0; i < supp.size(); ++i)
            if (i != skip) partial = partial * cyclotomic(supp[i]);
        CHECK_FALSE(apply(partial, s).is_zero());
    }
}

TEST_CASE("kernel dimension") {
    CHECK(kernel_dimension(12, 12) == 4);
    CHECK(kernel_dimension(12, 1) == 1);
    std::uint64_t sum = 0;
    for (auto d : divisors(12)) sum += kernel_dimension(12, d);
    CHECK(sum == 12);
    CHECK_THROWS_AS(kernel_dimension(12, 5), DomainError);
}

TEST_CASE("properties: round trip, annihilation, periods, oracle, antiperiods") {
    InputGenerator gen(99);
    for (std::uint64_t n = 1; n <= 24; ++n) {
        for (int i = 0; i < 30; ++i) {
            PeriodicSeq s = gen.sequence(n);
            Decomposition dec = decompose(s);
            REQUIRE(reconstruct(dec) == s);

            const auto groups = dft_group_oracle(s);
            for (const auto& [d, c] : dec.components) {
                REQUIRE(apply(cyclotomic(d), c).is_zero());
                if (!c.is_zero()) REQUIRE(fundamental_period(c) == d);
                for (std::size_t k = 0; k < n; ++k) REQUIRE(std::abs(groups.at(d)[k] - c.values()[k].get_d()) <= 1e-9);
                if (d >= 2 && (d & (d - 1)) == 0 && !c.is_zero()) REQUIRE(is_antiperiodic(c, d / 2));
            }
            REQUIRE(fundamental_period(s) == lcm_of(support(dec)));
        }
    }
}

TEST_CASE("concurrent decomposition is deterministic") {
    InputGenerator gen(3);
    std::vector<PeriodicSeq> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(gen.sequence(static_cast<std::size_t>(gen.integer(1, 30))));

    std::vector<std::future<std::vector<std::uint64_t>>> futures;
    for (const auto& s : inputs)
        futures.push_back(std::async(std::launch::async, [&s] { return support(decompose(s)); }));
    for (std::size_t i = 0; i < inputs.size(); ++i) CHECK(futures[i].get() == support(decompose(inputs[i])));
}
