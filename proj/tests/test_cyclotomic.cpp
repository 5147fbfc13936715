#include "cyclo/cyclotomic.hpp"
#include "cyclo/random.hpp"

#include <doctest.h>

#include <numeric>
#include <thread>

using namespace cyclo;

namespace {

std::uint64_t brute_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

}  // namespace

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(11) == 10);
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
    CHECK(divisors(36) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(lcm_of({2, 3}) == 6);
    CHECK(lcm_of({}) == 1);

    CHECK_THROWS_AS(euler_phi(0), DomainError);
    CHECK_THROWS_AS(divisors(0), DomainError);
    CHECK_THROWS_AS(mobius(0), DomainError);
}

TEST_CASE("totient matches brute force and sums over divisors") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        REQUIRE(euler_phi(n) == brute_phi(n));
        std::uint64_t sum = 0;
        for (auto d : divisors(n)) sum += euler_phi(d);
        REQUIRE(sum == n);
    }
}

TEST_CASE("the twelve listed cyclotomic polynomials") {
    const std::vector<RatPoly> listed = {
        {-1, 1},
        {1, 1},
        {1, 1, 1},
        {1, 0, 1},
        {1, 1, 1, 1, 1},
        {1, -1, 1},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 0, 0, 0, 1},
        {1, 0, 0, 1, 0, 0, 1},
        {1, -1, 1, -1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 0, -1, 0, 1},
    };
    for (std::uint64_t n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(cyclotomic(n) == listed[n - 1]);
        CHECK(cyclotomic_mobius_oracle(n) == listed[n - 1]);
    }
    CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("cyclotomic table shape and unity factorization up to 200") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CAPTURE(n);
        const RatPoly p = cyclotomic(n);
        REQUIRE(p.is_monic());
        REQUIRE(p.has_integer_coeffs());
        REQUIRE(static_cast<std::uint64_t>(p.degree()) == euler_phi(n));
        RatPoly prod = RatPoly::constant(1);
        for (const auto& f : factor_unity(n)) prod = prod * f.phi;
        REQUIRE(prod == RatPoly::unity_minus_one(n));
    }
    for (std::uint64_t n = 1; n <= 64; ++n) REQUIRE(cyclotomic(n) == cyclotomic_mobius_oracle(n));
}

TEST_CASE("factor_unity") {
    auto f1 = factor_unity(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].d == 1);
    CHECK(f1[0].phi == RatPoly{-1, 1});

    auto f2 = factor_unity(2);
    REQUIRE(f2.size() == 2);
    CHECK(f2[1].phi == RatPoly{1, 1});

    auto f12 = factor_unity(12);
    REQUIRE(f12.size() == 6);
    const std::vector<RatPoly> expected = {{-1, 1}, {1, 1}, {1, 1, 1}, {1, 0, 1}, {1, -1, 1}, {1, 0, -1, 0, 1}};
    for (std::size_t i = 0; i < 6; ++i) CHECK(f12[i].phi == expected[i]);
}

TEST_CASE("is_cyclotomic") {
    CHECK(is_cyclotomic(RatPoly{1, 0, -1, 0, 1}) == 12u);
    CHECK(is_cyclotomic(RatPoly{-2, 0, 1}) == std::nullopt);
    CHECK(is_cyclotomic(RatPoly{1, 1}) == 2u);
    CHECK(is_cyclotomic(RatPoly{-1, 1}) == 1u);
    CHECK(is_cyclotomic(RatPoly{5}) == std::nullopt);
    CHECK(is_cyclotomic(RatPoly{2, 2}) == std::nullopt);  // not monic
    CHECK(is_cyclotomic(RatPoly{1, 2, 1}) == std::nullopt);
    CHECK_THROWS_AS(is_cyclotomic(RatPoly{}), DomainError);

    for (std::uint64_t n = 1; n <= 100; ++n) REQUIRE(is_cyclotomic(cyclotomic(n)) == n);
}

TEST_CASE("totient preimage") {
    CHECK(totient_preimage(1) == std::vector<std::uint64_t>{1, 2});
    CHECK(totient_preimage(2) == std::vector<std::uint64_t>{3, 4, 6});
    CHECK(totient_preimage(4) == std::vector<std::uint64_t>{5, 8, 10, 12});
    CHECK(totient_preimage(3).empty());
}

TEST_CASE("cyclotomic_factors") {
    auto a = cyclotomic_factors(RatPoly{1, 2, 2, 1});
    CHECK(a.factors == std::map<std::uint64_t, unsigned>{{2, 1}, {3, 1}});
    CHECK(a.residual == RatPoly{1});

    auto b = cyclotomic_factors(RatPoly{-2, 1});
    CHECK(b.factors.empty());
    CHECK(b.residual == RatPoly{-2, 1});

    auto c = cyclotomic_factors(RatPoly{1, 2, 1});
    CHECK(c.factors == std::map<std::uint64_t, unsigned>{{2, 2}});
    CHECK(c.residual == RatPoly{1});

    // Non-monic input keeps its content in the residual.
    auto d = cyclotomic_factors(RatPoly{-3, 3});
    CHECK(d.factors == std::map<std::uint64_t, unsigned>{{1, 1}});
    CHECK(d.residual == RatPoly{3});

    CHECK_THROWS_AS(cyclotomic_factors(RatPoly{}), DomainError);
}

TEST_CASE("cyclotomic_factors reconstruction on random products") {
    InputGenerator gen(77);
    for (int i = 0; i < 200; ++i) {
        RatPoly p = gen.int_poly(static_cast<std::size_t>(gen.integer(0, 3)));
        std::map<std::uint64_t, unsigned> planted;
        for (long k = gen.integer(0, 4); k > 0; --k) {
            auto d = static_cast<std::uint64_t>(gen.integer(1, 20));
            p = p * cyclotomic(d);
            ++planted[d];
        }
        auto [factors, residual] = cyclotomic_factors(p);
        RatPoly rebuilt = residual;
        for (const auto& [d, mult] : factors) {
            REQUIRE(mult >= planted[d]);
            for (unsigned k = 0; k < mult; ++k) rebuilt = rebuilt * cyclotomic(d);
        }
        REQUIRE(rebuilt == p);
        REQUIRE(cyclotomic_factors(residual).factors.empty());
    }
}

TEST_CASE("shared table gives identical results across threads") {
    CyclotomicTable table;
    std::vector<std::vector<RatPoly>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] {
            for (std::uint64_t n = 60; n >= 1; --n) results[t].push_back(table.get(n));
        });
    }
    for (auto& w : workers) w.join();
    for (std::size_t t = 1; t < results.size(); ++t) CHECK(results[t] == results[0]);
    CHECK(results[0].back() == RatPoly{-1, 1});
}
