#include "cyclo/io.hpp"
#include "cyclo/random.hpp"

#include <doctest.h>

using namespace cyclo;

TEST_CASE("sequence JSON") {
    PeriodicSeq s = parse_sequence(R"({"period": 3, "values": ["1", "0", "-1/2"]})");
    CHECK(s == PeriodicSeq(std::vector<Rational>{1, 0, Rational(-1, 2)}));
    CHECK(sequence_to_json(s).dump() == R"({"period":3,"values":["1","0","-1/2"]})");

    // Plain integers are tolerated; non-canonical strings are normalized.
    CHECK(parse_sequence(R"({"period": 2, "values": [3, "2/4"]})") ==
          PeriodicSeq(std::vector<Rational>{3, Rational(1, 2)}));

    CHECK_THROWS_AS(parse_sequence(R"({"period": 3, "values": ["1"]})"), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"period": 0, "values": []})"), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"values": ["1"]})"), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"period": 1, "values": [0.5]})"), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"period": 1, "values": ["x"]})"), ParseError);
    CHECK_THROWS_AS(parse_sequence(R"({"period": 1, )"), ParseError);
}

TEST_CASE("sequence CSV") {
    CHECK(parse_sequence("1,0,-1/2\n") == PeriodicSeq(std::vector<Rational>{1, 0, Rational(-1, 2)}));
    CHECK(parse_sequence(" 5 ") == PeriodicSeq{5});
    CHECK(sequence_to_csv(PeriodicSeq{1, -1}) == "1,-1");
    CHECK_THROWS_AS(parse_sequence("1,2\n3,4\n"), ParseError);
    CHECK_THROWS_AS(parse_sequence(""), ParseError);
    CHECK_THROWS_AS(parse_sequence("1,,2"), ParseError);
    CHECK_THROWS_AS(read_sequence_file("/nonexistent/seq.json"), ParseError);
}

TEST_CASE("rational encodings round-trip bit-exactly") {
    InputGenerator gen(12);
    for (int i = 0; i < 300; ++i) {
        PeriodicSeq s = gen.sequence(static_cast<std::size_t>(gen.integer(1, 16)));
        const std::string json = sequence_to_json(s).dump();
        REQUIRE(parse_sequence(json) == s);
        REQUIRE(sequence_to_json(parse_sequence(json)).dump() == json);
        REQUIRE(sequence_to_csv(parse_sequence(sequence_to_csv(s))) == sequence_to_csv(s));
    }
}

TEST_CASE("report JSON schema") {
    Json j = report_to_json(analyze(RatPoly{1, 2, 2, 1}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"char_poly", "cyclotomic_factors", "residual", "has_integer_periodic",
                                           "is_cyclotomic_equation", "common_period", "unit_modulus_flag",
                                           "sample_solutions", "verdict"});
    CHECK(j["cyclotomic_factors"].dump() == R"({"2":1,"3":1})");
    CHECK(j["common_period"] == 6);
    CHECK(j["sample_solutions"]["3"]["values"].dump() == R"(["1","0","-1"])");

    Json none = report_to_json(analyze(RatPoly{-2, 1}));
    CHECK(none["common_period"].is_null());
    CHECK(none["unit_modulus_flag"] == "none");
}

TEST_CASE("decomposition JSON keeps divisors in ascending order") {
    Json j = decomposition_to_json(decompose(PeriodicSeq(std::vector<Rational>(12, Rational(1)))));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
}
