#include <catch2/catch_amalgamated.hpp>

#include "relkit/linalg.hpp"
#include "relkit/polymat.hpp"
#include "relkit/rootfind.hpp"
#include "relkit/scalar.hpp"

using namespace relkit;

namespace {

Poly<Rational> poly(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return Poly<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[scalar]") {
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(FieldTraits<Rational>::str(Rational(2, 4)) == "1/2");
    REQUIRE(field_inverse(Rational(3, 7)) == Rational(7, 3));
    REQUIRE_THROWS_AS(field_inverse(Rational(0)), DivisionByZero);
    REQUIRE(field_div(Rational(1), Rational(-4)) == Rational(-1, 4));
    REQUIRE_THROWS_AS(field_div(Rational(1), Rational(0)), DivisionByZero);

    // association invariance on a fixed sample
    const Rational a(7, 3), b(-2, 5), c(11, 4);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
}

TEST_CASE("rational parsing is strict and canonical", "[scalar]") {
    REQUIRE(FieldTraits<Rational>::parse("2/4") == Rational(1, 2));
    REQUIRE(FieldTraits<Rational>::parse("-6/4") == Rational(-3, 2));
    REQUIRE(FieldTraits<Rational>::str(FieldTraits<Rational>::parse("1/-2")) == "-1/2");
    REQUIRE(FieldTraits<Rational>::parse("-0") == Rational(0));
    for (const char* bad : {"1/0", "1//2", "/2", "1/", "--1", "1-2", "2/+3", "", "0x1", "1.5"})
        REQUIRE_THROWS_AS(FieldTraits<Rational>::parse(bad), ParseError);
}

TEST_CASE("gaussian rationals: arithmetic, parsing, printing", "[scalar]") {
    using G = GaussianRational;
    const G i = G::i();
    REQUIRE(i * i == G(-1));
    REQUIRE(FieldTraits<G>::str(G(Rational(1, 2), Rational(3, 4))) == "1/2+3/4i");
    REQUIRE(FieldTraits<G>::str(G(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4i");
    REQUIRE(FieldTraits<G>::parse("1/2+3/4i") == G(Rational(1, 2), Rational(3, 4)));
    REQUIRE(FieldTraits<G>::parse("-2/3-5i") == G(Rational(-2, 3), Rational(-5)));
    REQUIRE(FieldTraits<G>::parse("7/3") == G(Rational(7, 3)));
    REQUIRE(FieldTraits<G>::parse("0+1i") == i);
    REQUIRE_THROWS_AS(FieldTraits<G>::parse("1/2+x"), ParseError);
    REQUIRE(field_inverse(G(Rational(0), Rational(2))) == G(Rational(0), Rational(-1, 2)));
    REQUIRE_THROWS_AS(field_inverse(G(0)), DivisionByZero);

    // round trip through canonical strings
    for (const G& g : {G(Rational(5)), G(Rational(0), Rational(1)), G(Rational(-1, 2), Rational(2, 7))})
        REQUIRE(FieldTraits<G>::parse(FieldTraits<G>::str(g)) == g);
}

TEST_CASE("polynomial basics", "[poly]") {
    const auto p = poly({2, -3, 1});  // x^2 - 3x + 2
    REQUIRE(p.degree() == 2);
    REQUIRE(p.eval(Rational(1)) == Rational(0));
    REQUIRE(p.eval(Rational(3)) == Rational(2));
    REQUIRE(p.monic() == p);
    REQUIRE((p * Rational(4)).monic() == p);  // monic is idempotent and scale-free

    auto [q, r] = Poly<Rational>::divmod(p, poly({-1, 1}));
    REQUIRE(r.is_zero());
    REQUIRE(q == poly({-2, 1}));

    REQUIRE(poly_gcd(p, poly({-1, 1})) == poly({-1, 1}));
    REQUIRE(squarefree_part(poly({0, 0, 1})) == poly({0, 1}));
}

TEST_CASE("rational roots with multiplicities and residual factors", "[roots]") {
    SECTION("x^2 - 3x + 2 factors completely") {
        auto split = poly_roots(poly({2, -3, 1}));
        REQUIRE(split.residual.empty());
        REQUIRE(split.roots == std::vector<std::pair<Rational, int>>{{Rational(1), 1}, {Rational(2), 1}});
    }
    SECTION("x^2 + 1 is irreducible over the rationals") {
        auto split = poly_roots(poly({1, 0, 1}));
        REQUIRE(split.roots.empty());
        REQUIRE(split.residual.size() == 1);
        REQUIRE(split.residual[0] == poly({1, 0, 1}));
    }
    SECTION("x^3 - x^2 = x^2 (x - 1)") {
        // oracle: expand x^2*(x-1) and compare before trusting the roots
        REQUIRE(poly({0, 0, 1}) * poly({-1, 1}) == poly({0, 0, -1, 1}));
        auto split = poly_roots(poly({0, 0, -1, 1}));
        REQUIRE(split.residual.empty());
        REQUIRE(split.roots ==
                std::vector<std::pair<Rational, int>>{{Rational(0), 2}, {Rational(1), 1}});
    }
    SECTION("every reported root evaluates to exactly zero") {
        // (x - 3/7)^2 (x + 5) (x^2 + 2)
        auto p = poly({-3, 7}) * poly({-3, 7}) * poly({5, 1}) * poly({2, 0, 1});
        auto split = poly_roots(p);
        REQUIRE(split.roots.size() == 2);
        for (const auto& [r, m] : split.roots) REQUIRE(p.eval(r) == Rational(0));
        REQUIRE(split.roots[0] == std::make_pair(Rational(-5), 1));
        REQUIRE(split.roots[1] == std::make_pair(Rational(3, 7), 2));
        REQUIRE(split.residual == std::vector<Poly<Rational>>{poly({2, 0, 1}).monic()});
    }
    SECTION("zero polynomial is rejected") {
        REQUIRE_THROWS_AS(poly_roots(Poly<Rational>()), ZeroPolynomial);
    }
    SECTION("huge extreme coefficients take the modular path") {
        // denominator made of two primes beyond the trial-division budget
        const Integer p1("2147483647"), p2("998244353");
        std::vector<Rational> c{Rational(-7), Rational(Integer(p1 * p2))};
        Poly<Rational> f = Poly<Rational>(c) * poly({-3, 1});
        auto split = poly_roots(f);
        REQUIRE(split.residual.empty());
        REQUIRE(split.roots.size() == 2);
        REQUIRE(split.roots[0] == std::make_pair(Rational(Integer(7), Integer(p1 * p2)), 1));
        REQUIRE(split.roots[1] == std::make_pair(Rational(3), 1));
    }
}

TEST_CASE("gaussian rational roots", "[roots]") {
    using G = GaussianRational;
    auto gpoly = [](std::initializer_list<G> ascending) {
        return Poly<G>(std::vector<G>(ascending));
    };
    SECTION("x^2 + 1 splits over Q(i)") {
        auto split = poly_roots(gpoly({G(1), G(0), G(1)}));
        REQUIRE(split.residual.empty());
        REQUIRE(split.roots.size() == 2);
        REQUIRE(split.roots[0].first == G(Rational(0), Rational(-1)));
        REQUIRE(split.roots[1].first == G(Rational(0), Rational(1)));
    }
    SECTION("mixed roots (x - (1/2 + 3/4 i)) (x + i) (x - 2)") {
        const G r1(Rational(1, 2), Rational(3, 4)), r2(Rational(0), Rational(-1)), r3(Rational(2));
        auto p = gpoly({-r1, G(1)}) * gpoly({-r2, G(1)}) * gpoly({-r3, G(1)});
        auto split = poly_roots(p);
        REQUIRE(split.residual.empty());
        REQUIRE(split.roots.size() == 3);
        for (const auto& [r, m] : split.roots) {
            REQUIRE(p.eval(r) == G(0));
            REQUIRE(m == 1);
        }
    }
    SECTION("x^2 - 2 stays unsplit even over Q(i)") {
        auto split = poly_roots(gpoly({G(-2), G(0), G(1)}));
        REQUIRE(split.roots.empty());
        REQUIRE(split.residual.size() == 1);
    }
}

namespace {

PolyMat<Rational> pmat(std::initializer_list<std::initializer_list<Poly<Rational>>> rows) {
    PolyMat<Rational> m;
    for (const auto& r : rows) m.emplace_back(r);
    return m;
}

}  // namespace

TEST_CASE("function field pivots", "[polymat]") {
    const auto L = poly({0, 1});  // the variable
    SECTION("1x1") {
        auto res = function_field_pivots(pmat({{L}}));
        REQUIRE(res.generic_rank == 1);
        REQUIRE(res.pivots == std::vector<Poly<Rational>>{L});
    }
    SECTION("diagonal") {
        auto res = function_field_pivots(pmat({{poly({1}), poly({0})}, {poly({0}), poly({-2, 1})}}));
        REQUIRE(res.generic_rank == 2);
        REQUIRE(res.pivots == std::vector<Poly<Rational>>{poly({-2, 1})});
    }
    SECTION("rank one with dependent rows") {
        auto res = function_field_pivots(pmat({{L, poly({1})}, {L * L, L}}));
        REQUIRE(res.generic_rank == 1);
        bool has_var = false;
        for (const auto& p : res.pivots)
            if (p == L) has_var = true;
        REQUIRE(has_var);
    }
    SECTION("rank at non-root points matches the generic rank") {
        // deterministic pseudo-random degree-<=1 matrices
        std::uint64_t state = 12345;
        auto rnd = [&]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<int>((state >> 33) % 7) - 3;
        };
        for (int trial = 0; trial < 25; ++trial) {
            const int rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
            PolyMat<Rational> m(rows, std::vector<Poly<Rational>>(cols));
            for (auto& r : m)
                for (auto& e : r) e = Poly<Rational>({Rational(rnd()), Rational(rnd())});
            const auto res = function_field_pivots(m);
            int checked = 0;
            for (int s = -10; s <= 10 && checked < 5; ++s) {
                const Rational x(s);
                bool is_root = false;
                for (const auto& p : res.pivots)
                    if (p.eval(x) == Rational(0)) is_root = true;
                if (is_root) continue;
                ++checked;
                Mat<Rational> at_x(rows, cols);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) at_x(i, j) = m[i][j].eval(x);
                REQUIRE(rank_of<Rational>(at_x) == res.generic_rank);
            }
            REQUIRE(checked == 5);
        }
    }
}

TEST_CASE("polynomial determinant and resultant", "[polymat]") {
    const auto L = poly({0, 1});
    REQUIRE(poly_det(pmat({{L, poly({1})}, {poly({1}), L}})) == poly({-1, 0, 1}));
    REQUIRE(poly_det(pmat({{L, L}, {L, L}})).is_zero());
    // resultant of coprime polynomials is a nonzero constant here:
    // f = x^2 + 1, g = x - 1 as polynomials in x with rational coefficients
    std::vector<Poly<Rational>> f{poly({1}), poly({0}), poly({1})};
    std::vector<Poly<Rational>> g{poly({-1}), poly({1})};
    const auto res = poly_resultant(f, g);
    REQUIRE(!res.is_zero());
    REQUIRE(res.degree() == 0);
    REQUIRE(res[0] == Rational(2));  // f(1) with lc(g)^deg f = 1
}
