#include <catch2/catch_amalgamated.hpp>

#include "relkit/random.hpp"
#include "relkit/relation.hpp"
#include "support/helpers.hpp"

using namespace relkit;
using testutil::mat;
using testutil::rel;
using testutil::span;
using testutil::vec;
using testutil::worked_example;

TEST_CASE("parts of a relation", "[relation]") {
    SECTION("worked example") {
        const auto a = worked_example();
        const auto p = parts(a);
        REQUIRE(p.dom == span({{1, 0, 0}, {0, 1, 0}}));
        REQUIRE(p.ran == Subspace<Rational>::full(3));
        REQUIRE(p.ker == span({{0, 1, 0}}));
        REQUIRE(p.mul == span({{1, 0, 0}, {0, 1, -1}}));
    }
    SECTION("identity") {
        const auto a = LinearRelation<Rational>::identity(2);
        const auto p = parts(a);
        REQUIRE(p.dom == Subspace<Rational>::full(2));
        REQUIRE(p.ran == Subspace<Rational>::full(2));
        REQUIRE(p.ker.is_zero());
        REQUIRE(p.mul.is_zero());
    }
    SECTION("purely multivalued") {
        const auto a = rel(1, {{{0}, {1}}});
        REQUIRE(domain_of(a).is_zero());
        REQUIRE(mul_of(a) == span({{1}}));
    }
}

TEST_CASE("inverse, shift, scalar multiple", "[relation]") {
    REQUIRE(inverse(rel(2, {{{1, 0}, {0, 1}}})) == rel(2, {{{0, 1}, {1, 0}}}));
    SECTION("shifting the identity by one gives the zero operator graph") {
        const auto a = shift(LinearRelation<Rational>::identity(2), Rational(1));
        REQUIRE(a == LinearRelation<Rational>::graph_of(Mat<Rational>::Zero(2, 2)));
    }
    REQUIRE(shift(rel(2, {{{0, 1}, {1, 0}}}), Rational(2)) == rel(2, {{{0, 1}, {1, -2}}}));
    REQUIRE(scalar_mul(Rational(3), rel(1, {{{1}, {2}}})) == rel(1, {{{1}, {6}}}));
    SECTION("involutions") {
        Rng rng(5);
        for (int t = 0; t < 10; ++t) {
            const auto inst = random_relation<Rational>(rng, 6);
            const auto& a = inst.relation;
            REQUIRE(inverse(inverse(a)) == a);
            REQUIRE(shift(shift(a, Rational(t)), Rational(-t)) == a);
            REQUIRE(shift(a, Rational(t)).dim() == a.dim());
            const auto pi = parts(inverse(a));
            const auto pa = parts(a);
            REQUIRE(pi.dom == pa.ran);
            REQUIRE(pi.mul == pa.ker);
        }
    }
}

TEST_CASE("composition, powers and sums", "[relation]") {
    const auto a = rel(1, {{{0}, {1}}});
    REQUIRE(power(a, 1) == a);
    REQUIRE(power(a, 0) == LinearRelation<Rational>::identity(1));
    SECTION("mul A^2 keeps the multivalued line") {
        const auto a2 = power(a, 2);
        REQUIRE(a2 == a);
        REQUIRE(mul_of(a2) == span({{1}}));
    }
    REQUIRE(compose(LinearRelation<Rational>::identity(3), worked_example()) == worked_example());
    REQUIRE_THROWS_AS(compose(a, LinearRelation<Rational>::identity(2)), AmbientMismatch);

    SECTION("power recursion on random relations") {
        Rng rng(77);
        for (int t = 0; t < 8; ++t) {
            const auto inst = random_relation<Rational>(rng, 6);
            const auto& r = inst.relation;
            LinearRelation<Rational> pk = LinearRelation<Rational>::identity(r.n());
            for (int k = 0; k < 4; ++k) {
                const auto next = power(r, k + 1);
                REQUIRE(next == compose(r, pk));
                REQUIRE(next == compose(pk, r));
                pk = next;
            }
        }
    }
    SECTION("composition is associative") {
        Rng rng(101);
        for (int t = 0; t < 3; ++t) {
            const auto r1 = random_relation<Rational>(rng, 5).relation;
            if (r1.n() == 0) continue;
            Rng rng2(200 + t), rng3(300 + t);
            const auto r2 = apply_transform(r1, random_transform<Rational>(rng2, r1.n()));
            const auto r3 = inverse(r1);
            REQUIRE(compose(compose(r1, r2), r3) == compose(r1, compose(r2, r3)));
        }
    }
    SECTION("operator-like sum matches matrix addition on graphs") {
        const auto m1 = mat({{1, 2}, {0, 1}});
        const auto m2 = mat({{0, 1}, {1, 1}});
        REQUIRE(rel_sum(LinearRelation<Rational>::graph_of(m1),
                        LinearRelation<Rational>::graph_of(m2)) ==
                LinearRelation<Rational>::graph_of(Mat<Rational>(m1 + m2)));
    }
    SECTION("operator-like sum intersects domains") {
        const auto mv = rel(1, {{{0}, {1}}});
        REQUIRE(rel_sum(mv, LinearRelation<Rational>::identity(1)) == mv);
    }
    SECTION("scalar multiple by zero flattens the range") {
        const auto a = rel(2, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}});
        const auto z = scalar_mul(Rational(0), a);
        REQUIRE(z == rel(2, {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}}));
    }
    SECTION("componentwise sum is the graph sum") {
        const auto b = rel(1, {{{1}, {0}}});
        const auto c = cw_sum(a, b);
        REQUIRE(c.dim() == 2);
        REQUIRE(c.graph() == sum(a.graph(), b.graph()));
    }
}

TEST_CASE("graph restriction", "[relation]") {
    const auto a = worked_example();
    REQUIRE(restrict_to(a, Subspace<Rational>::full(3)) == a);
    REQUIRE(restrict_to(a, Subspace<Rational>::zero(3)) ==
            LinearRelation<Rational>::zero_relation(3));
    SECTION("worked example: restriction to span{e1,e2} is the singular part") {
        const auto as = restrict_to(a, span({{1, 0, 0}, {0, 1, 0}}));
        REQUIRE(as == rel(3, {{{0, 0, 0}, {1, 0, 0}},
                              {{1, 0, 0}, {0, 1, 0}},
                              {{0, 1, 0}, {0, 0, 0}}}));
    }
    SECTION("restrictions are subrelations") {
        Rng rng(11);
        for (int t = 0; t < 10; ++t) {
            const auto inst = random_relation<Rational>(rng, 6);
            const auto& r = inst.relation;
            if (r.n() == 0) continue;
            Mat<Rational> m(r.n(), 2);
            for (Eigen::Index i = 0; i < r.n(); ++i)
                for (Eigen::Index j = 0; j < 2; ++j) m(i, j) = Rational((t + 3 * i + j) % 5 - 2);
            const auto x = column_space<Rational>(m);
            REQUIRE(r.graph().contains(restrict_to(r, x).graph()));
        }
    }
}

TEST_CASE("reducing sum verification", "[relation]") {
    const auto a = worked_example();
    SECTION("a valid two-space decomposition of the worked example") {
        const auto check = verify_reducing(a, {span({{1, 0, 0}, {0, 1, 0}}), span({{0, 1, -1}})});
        REQUIRE(check.ok);
        REQUIRE(check.decomposition.components.size() == 2);
        REQUIRE(check.decomposition.components[0] ==
                restrict_to(a, span({{1, 0, 0}, {0, 1, 0}})));
        REQUIRE(check.decomposition.components[1] == rel(3, {{{0, 0, 0}, {0, -1, 1}}}));
    }
    SECTION("a failing attempt: spaces that work but graphs that do not") {
        const auto check = verify_reducing(a, {span({{1, 0, 0}, {0, 1, 0}}), span({{0, 0, 1}})});
        REQUIRE(!check.ok);
        REQUIRE(check.failure == ReducingFailure::SumNotEqualA);
    }
    SECTION("overlapping spaces are rejected before anything else") {
        const auto check = verify_reducing(a, {span({{1, 0, 0}}), span({{1, 0, 0}, {0, 1, 0}})});
        REQUIRE(!check.ok);
        REQUIRE(check.failure == ReducingFailure::NotDirect);
    }
    SECTION("spaces that miss the carrier") {
        const auto check = verify_reducing(a, {span({{1, 0, 0}, {0, 1, 0}})});
        REQUIRE(!check.ok);
        REQUIRE(check.failure == ReducingFailure::DoesNotSpan);
    }
    SECTION("the single space dom A + ran A is trivially reducing") {
        const auto check = verify_reducing(a, {carrier_of(a)});
        REQUIRE(check.ok);
        REQUIRE(check.decomposition.components.size() == 1);
        REQUIRE(check.decomposition.components[0] == a);
    }
}
