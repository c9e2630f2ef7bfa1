#include <catch2/catch_amalgamated.hpp>

#include "relkit/io.hpp"
#include "relkit/random.hpp"
#include "relkit/report.hpp"
#include "support/helpers.hpp"

using namespace relkit;
using testutil::rel;
using testutil::worked_example;

TEST_CASE("relation JSON round trip", "[io]") {
    const auto a = worked_example();
    const Json j = io::relation_to_json(a);
    REQUIRE(io::relation_from_json<Rational>(j) == a);

    SECTION("dependent pairs are canonicalised on load") {
        Json raw;
        raw["n"] = 2;
        raw["pairs"] = Json::array({Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}),
                                    Json::array({Json::array({"2", "0"}), Json::array({"0", "2"})})});
        REQUIRE(io::relation_from_json<Rational>(raw).dim() == 1);
    }
    SECTION("parse errors carry context") {
        REQUIRE_THROWS_AS(io::relation_from_json<Rational>(Json::object()), ParseError);
        Json bad;
        bad["n"] = 1;
        bad["pairs"] = Json::array({Json::array({Json::array({"1"}), Json::array({"x"})})});
        REQUIRE_THROWS_AS(io::relation_from_json<Rational>(bad), ParseError);
        bad["pairs"] = Json::array({Json::array({Json::array({"1", "2"}), Json::array({"0"})})});
        REQUIRE_THROWS_AS(io::relation_from_json<Rational>(bad), ParseError);
    }
}

TEST_CASE("matrix JSON", "[io]") {
    Mat<Rational> m(2, 2);
    m(0, 0) = Rational(1, 2); m(0, 1) = Rational(0);
    m(1, 0) = Rational(-3); m(1, 1) = Rational(7, 5);
    REQUIRE(io::matrix_from_json<Rational>(io::matrix_to_json(m)) == m);
    REQUIRE_THROWS_AS(io::matrix_from_json<Rational>(Json::parse("[[\"1\"],[\"1\",\"2\"]]")),
                      ParseError);
    REQUIRE_THROWS_AS(io::matrix_from_json<Rational>(Json::parse("[[1]]")), ParseError);
}

TEST_CASE("weyr characteristic JSON", "[io]") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto wc = random_weyr<Rational>(rng, 10);
        const Json j = io::weyr_to_json(wc);
        REQUIRE(io::weyr_from_json<Rational>(j) == wc);
    }
    SECTION("trailing zeros are rejected") {
        REQUIRE_THROWS_AS(
            io::weyr_from_json<Rational>(Json::parse(R"({"B":[1,0],"W":{},"A":[],"C":[]})")),
            MalformedCharacteristic);
    }
    SECTION("increasing sequences are rejected") {
        REQUIRE_THROWS_AS(
            io::weyr_from_json<Rational>(Json::parse(R"({"B":[],"W":{"1":[1,2]},"A":[],"C":[]})")),
            MalformedCharacteristic);
    }
    SECTION("gaussian eigenvalue keys") {
        using G = GaussianRational;
        WeyrCharacteristic<G> wc;
        wc.W.emplace(G(Rational(1, 2), Rational(-3)), WeyrSeq({2, 1}));
        REQUIRE(io::weyr_from_json<G>(io::weyr_to_json(wc)) == wc);
    }
}

TEST_CASE("pencil JSON", "[io]") {
    const Json j = Json::parse(R"({"E":[["1","0"],["0","0"]],"F":[["1","0"],["0","1"]]})");
    const auto p = io::pencil_from_json<Rational>(j);
    REQUIRE(io::pencil_to_json(p) == j);
    REQUIRE_THROWS_AS(io::pencil_from_json<Rational>(Json::object()), ParseError);
}

TEST_CASE("seeded instances survive serialisation and reanalysis", "[io]") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        const auto inst = random_relation<Rational>(rng, 9);
        const Json j = io::relation_to_json(inst.relation);
        const auto reloaded = io::relation_from_json<Rational>(j);
        REQUIRE(reloaded == inst.relation);
        REQUIRE(io::weyr_to_json(decompose(reloaded).weyr) == io::weyr_to_json(inst.weyr));
    }
}

TEST_CASE("report output is byte-stable and self-verifying", "[io][report]") {
    const auto a = worked_example();
    const auto d = decompose(a);
    const Json r1 = report::analysis_json(a, d);
    const Json r2 = report::analysis_json(a, decompose(a));
    REQUIRE(r1.dump(2) == r2.dump(2));
    REQUIRE(r1["verification"]["reducing"].get<bool>());
    REQUIRE(r1["verification"]["chain_pairs"].get<bool>());
    REQUIRE(r1["verification"]["dimension_ledger"].get<bool>());
    REQUIRE(r1["verification"]["multishift_certificate"].get<bool>());
    REQUIRE(r1["weyr"] == Json::parse(R"({"B":[1,1],"W":{},"A":[1],"C":[]})"));
    REQUIRE(r1["decomposition"]["dimensions"]["A_S"].get<int>() == 3);
    REQUIRE(r1["decomposition"]["dimensions"]["J_inf"].get<int>() == 1);

    const std::string text = report::analysis_text(a, d);
    REQUIRE(text.find("sigma_pi = {inf}") != std::string::npos);
    REQUIRE(text.find("singular chains") != std::string::npos);
    REQUIRE(text.find("multishift_cert=ok") != std::string::npos);
}
