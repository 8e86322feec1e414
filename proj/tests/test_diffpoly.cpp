#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace diffalg;
using tu::P;

namespace {

RingPtr qy() { return tu::ring(tu::QQ(), {"y"}); }
RingPtr qtY() { return tu::ring(tu::Qt(), {"Y"}); }

} // namespace

TEST_CASE("poly arithmetic basics") {
    auto r = qy();
    CHECK((P(r, "y") + P(r, "-y")).is_zero());
    CHECK(P(r, "y' * y'") == P(r, "y'^2"));
    CHECK(P(r, "(y-1)(y+1)") == P(r, "y^2 - 1"));
    CHECK_THROWS_AS(P(r, "y") + P(qtY(), "Y"), RingMismatch);
}

TEST_CASE("order conventions") {
    auto r = qy();
    CHECK(DiffPoly::zero(r).order() == ORDER_NEG_INF);
    CHECK(P(r, "5").order() == -1);
    CHECK(P(r, "y").order() == 0);
    CHECK(P(r, "y''' + y").order() == 3);
}

TEST_CASE("total derivation, worked example over Q(t)") {
    auto r = qtY();
    // f = t (Y')^2 + Y Y''  ->  (Y')^2 + 2t Y' Y'' + Y' Y'' + Y Y'''
    DiffPoly f = P(r, "t*(Y')^2 + Y*Y''");
    CHECK(f.total_derive() == P(r, "Y'^2 + 2t*Y'*Y'' + Y'*Y'' + Y*Y'''"));
    CHECK(P(r, "5").total_derive().is_zero());
}

TEST_CASE("total derivation, displayed example with two indeterminates") {
    auto r = tu::ring(tu::Qt("x"), {"y1", "y2"});
    DiffPoly f = P(r, "(y2*y1' + 1)*y1''^2 + y1'^2*y2'^3*y1'' + y1*y2^3 + x");
    DiffPoly df = P(r, "(2(y2*y1'+1)y1'' + y1'^2*y2'^3)*y1''' + (y2*y1''+y2'*y1')*y1''^2 "
                       "+ (2y1'*y1''*y2'^3 + 3y1'^2*y2'^2*y2'')*y1'' + y1'*y2^3 + 3y1*y2^2*y2' + 1");
    CHECK(f.total_derive() == df);

    // elimination ranking with y1 > y2
    Ranking rk = Ranking::make(Ranking::Kind::Elimination, {1, 0});
    Decomposition d = decompose(f, rk);
    CHECK(d.leader == Derivative{0, 2});
    CHECK(d.rank_degree == 2);
    CHECK(d.initial == P(r, "y2*y1' + 1"));
    CHECK(d.separant == P(r, "2(y2*y1'+1)*y1'' + y1'^2*y2'^3"));
    // leader of the derivative is the derivative of the leader; its initial is the separant
    Decomposition dd = decompose(f.total_derive(), rk);
    CHECK(dd.leader == Derivative{0, 3});
    CHECK(dd.rank_degree == 1);
    CHECK(dd.initial == d.separant);
}

TEST_CASE("compare_derivatives on both ranking kinds") {
    Ranking orderly = Ranking::make(Ranking::Kind::Orderly, {0, 1});     // y1 < y2
    Ranking elim = Ranking::make(Ranking::Kind::Elimination, {0, 1});    // y1 < y2
    Derivative y1p{0, 1}, y2{1, 0}, y2p{1, 1};
    CHECK(compare_derivatives(orderly, y1p, y2) == Cmp::GT);
    CHECK(compare_derivatives(orderly, y1p, y2p) == Cmp::LT);
    CHECK(compare_derivatives(elim, y1p, y2) == Cmp::LT);
    CHECK(compare_derivatives(elim, y1p, y2p) == Cmp::LT);
    CHECK(compare_derivatives(orderly, y2, y2.raised()) == Cmp::LT);
}

TEST_CASE("ranking axioms and totality (randomized)") {
    tu::Rng rng(11);
    std::vector<Ranking> rks = {Ranking::make(Ranking::Kind::Orderly, {0, 1, 2}),
                                Ranking::make(Ranking::Kind::Orderly, {2, 0, 1}),
                                Ranking::make(Ranking::Kind::Elimination, {1, 2, 0})};
    for (auto& rk : rks) {
        for (int i = 0; i < 1000; ++i) {
            Derivative u{rng.uniform(0, 2), rng.uniform(0, 5)};
            Derivative v{rng.uniform(0, 2), rng.uniform(0, 5)};
            Derivative w{rng.uniform(0, 2), rng.uniform(0, 5)};
            // totality & antisymmetry
            Cmp uv = rk.compare(u, v), vu = rk.compare(v, u);
            CHECK(((uv == Cmp::EQ && vu == Cmp::EQ && u == v) ||
                   (uv == Cmp::LT && vu == Cmp::GT) || (uv == Cmp::GT && vu == Cmp::LT)));
            // transitivity
            if (rk.compare(u, v) != Cmp::GT && rk.compare(v, w) != Cmp::GT)
                CHECK(rk.compare(u, w) != Cmp::GT);
            // axiom 1: u^(p) > u for p > 0
            CHECK(rk.compare(u, u.raised(rng.uniform(1, 4))) == Cmp::LT);
            // axiom 2: u >= v => u' >= v'
            if (rk.compare(u, v) != Cmp::LT)
                CHECK(rk.compare(u.raised(), v.raised()) != Cmp::LT);
        }
    }
}

TEST_CASE("decompose on single-indeterminate examples") {
    auto r = qy();
    Ranking rk = Ranking::orderly(1);

    SECTION("h_p worked example") {
        DiffPoly p = P(r, "y*(y')^2 + y' + 1");
        Decomposition d = decompose(p, rk);
        CHECK(d.leader == Derivative{0, 1});
        CHECK(d.rank_degree == 2);
        CHECK(d.initial == P(r, "y"));
        CHECK(d.separant == P(r, "2y*y' + 1"));
        CHECK(h_poly(p, rk) == P(r, "y*(2y*y'+1)"));
    }

    SECTION("linear") {
        Decomposition d = decompose(P(r, "y"), rk);
        CHECK(d.leader == Derivative{0, 0});
        CHECK(d.rank_degree == 1);
        CHECK(d.initial == P(r, "1"));
        CHECK(d.separant == P(r, "1"));
    }

    CHECK_THROWS_AS(decompose(P(r, "5"), rk), ConstantPolynomial);
}

TEST_CASE("decompose reconstitutes the polynomial (randomized)") {
    tu::Rng rng(13);
    auto r = tu::ring(tu::Qt(), {"y1", "y2"});
    Ranking rk = Ranking::orderly(2);
    for (int i = 0; i < 300; ++i) {
        DiffPoly f = tu::random_diffpoly(rng, r, 3, 3, 4);
        if (f.in_K()) continue;
        Decomposition d = decompose(f, rk);
        DiffPoly rebuilt = d.initial * DiffPoly::var(r, d.leader).pow(d.rank_degree);
        for (unsigned k = 0; k < d.rank_degree; ++k)
            rebuilt = rebuilt + f.coeff_of_power(d.leader, k) * DiffPoly::var(r, d.leader).pow(k);
        CHECK(rebuilt == f);
        CHECK(compare_poly_rank(d.initial, f, rk) == Cmp::LT);
        CHECK(compare_poly_rank(d.separant, f, rk) == Cmp::LT);
    }
}

TEST_CASE("total derivation properties (randomized)") {
    tu::Rng rng(17);
    auto r = tu::ring(tu::Qt(), {"y1", "y2"});
    Ranking rk = Ranking::orderly(2);
    for (int i = 0; i < 1000; ++i) {
        DiffPoly f = tu::random_diffpoly(rng, r, 2, 2, 3);
        DiffPoly g = tu::random_diffpoly(rng, r, 2, 2, 3);
        CHECK((f + g).total_derive() == f.total_derive() + g.total_derive());
        CHECK((f * g).total_derive() == f * g.total_derive() + g * f.total_derive());
        if (!f.in_K()) {
            CHECK(f.total_derive().order() == f.order() + 1);
            Decomposition d = decompose(f, rk);
            Decomposition dd = decompose(f.total_derive(), rk);
            CHECK(dd.leader == d.leader.raised());
            CHECK(dd.initial == d.separant);
        } else if (!f.is_zero()) {
            int od = f.total_derive().order();
            CHECK((od == ORDER_NEG_INF || od == -1));
        }
    }
}

TEST_CASE("rank comparison of polynomials") {
    auto r = qy();
    Ranking rk = Ranking::orderly(1);
    CHECK(compare_poly_rank(P(r, "y'"), P(r, "y^2"), rk) == Cmp::GT);
    CHECK(compare_poly_rank(P(r, "y^2"), P(r, "y^3"), rk) == Cmp::LT);
    CHECK(compare_poly_rank(P(r, "5"), P(r, "y"), rk) == Cmp::LT);
    CHECK(compare_poly_rank(DiffPoly::zero(r), P(r, "5"), rk) == Cmp::LT);
    CHECK(compare_poly_rank(P(r, "3"), P(r, "5"), rk) == Cmp::EQ);
}

TEST_CASE("reducedness") {
    auto r = tu::ring(tu::QQ(), {"y1", "y2"});
    Ranking orderly = Ranking::orderly(2);
    Ranking elim_y1_top = Ranking::make(Ranking::Kind::Elimination, {1, 0}); // y1 > y2
    DiffPoly f = P(r, "y1' + y2"), g = P(r, "y2' + y1");
    CHECK(is_reduced(f, g, orderly, ReducedMode::Fully));
    CHECK_FALSE(is_reduced(f, g, elim_y1_top, ReducedMode::Partially));
    CHECK(is_reduced(P(r, "y1"), P(r, "y1"), orderly, ReducedMode::Partially));
    CHECK_FALSE(is_reduced(P(r, "y1"), P(r, "y1"), orderly, ReducedMode::Fully));
    CHECK_THROWS_AS(is_reduced(f, P(r, "7"), orderly, ReducedMode::Fully), ConstantPolynomial);
}

TEST_CASE("printer is deterministic and round-trips") {
    auto r = qtY();
    Ranking rk = Ranking::orderly(1);
    DiffPoly f = P(r, "t*Y'^2 + Y*Y'' - 2");
    std::string s = f.to_string(rk);
    CHECK(s == "Y*Y'' + t*Y'^2 - 2");
    CHECK(P(r, s) == f);
    CHECK(P(r, "Y^(4) + Y^4").to_string(rk) == "Y^(4) + Y^4");
    CHECK(P(r, "δ(Y^2 - 2)") == P(r, "2Y*Y'"));
}
