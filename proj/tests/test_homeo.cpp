#include <doctest.h>

#include "hcs/homeo.hpp"
#include "support/fixtures.hpp"

using namespace hcs;

namespace {

MatchedNestPair perturbed_pair(int depth, int levels, unsigned seed = 42) {
    auto lx = LengthModel::canonical(depth);
    auto ly = fixtures::perturbed(lx, seed);
    return build_matched_nests(lx, ly, levels);
}

}  // namespace

TEST_CASE("eta: identical nests give eta == 1; perturbed pairs stay in bounds") {
    auto m = LengthModel::canonical(5);
    auto idpair = build_matched_nests(m, m, 3);
    for (int n = 1; n <= 3; ++n) {
        auto eta = make_eta(idpair, n);
        for (const auto& p : eta.pieces) CHECK(p.eta == Rat(1));
        CHECK(eta.eval(Rat(1, 3)) == Rat(1));  // off-partition
    }
    auto pair = perturbed_pair(5, 4);
    for (int n = 1; n <= 4; ++n) {
        auto eta = make_eta(pair, n);
        CHECK(eta.bounds_ok());
        const Rat eps = pow2_inv(static_cast<unsigned>(n) + 1);
        for (const auto& p : eta.pieces) CHECK(rat_abs(p.eta - 1) < eps);
    }
}

TEST_CASE("eta is exactly 1 on the maximizer child") {
    auto pair = perturbed_pair(5, 4);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& b : pair.level(n)) {
            const NestBlock& par = pair.level(n - 1)[b.parent];
            if (b.max_x == par.max_x) CHECK(b.ratio == Rat(1));
        }
    }
}

TEST_CASE("apply_shear: knot, endpoints and off-square identity") {
    // hand-built shear: one piece on [0,1] with eta = 11/10, B = 1/2
    auto m = LengthModel::from_values(make_cantor(Scheme::MiddleThird, 1),
                                      {Rat(1, 2), Rat(1, 2)});
    auto bump = make_bump(m, Interval{Rat(0), Rat(1)});
    VerticalShear h(1, {{Interval{Rat(0), Rat(1)}, Rat(11, 10), bump}});

    CHECK(h.apply({Rat(1, 4), Rat(1, 2)}) == PlanePoint{Rat(1, 4), Rat(11, 20)});
    CHECK(h.apply({Rat(1, 4), Rat(1)}) == PlanePoint{Rat(1, 4), Rat(1)});
    CHECK(h.apply({Rat(1, 4), Rat(0)}) == PlanePoint{Rat(1, 4), Rat(0)});
    CHECK(h.apply({Rat(2), Rat(1, 2)}) == PlanePoint{Rat(2), Rat(1, 2)});   // outside
    CHECK(h.apply({Rat(1, 4), Rat(3, 2)}) == PlanePoint{Rat(1, 4), Rat(3, 2)});
    // piecewise linear above the knot: y = 3/4 -> 1 - (1-0.55)/(1-0.5) * 1/4
    CHECK(h.apply({Rat(1, 4), Rat(3, 4)}).y == 1 - Rat(9, 10) * Rat(1, 4));

    SUBCASE("eta == 1 is the identity") {
        VerticalShear id(1, {{Interval{Rat(0), Rat(1)}, Rat(1), bump}});
        for (int i = 0; i <= 4; ++i) {
            PlanePoint p{rat(i, 4), rat(i, 4)};
            CHECK(id.apply(p) == p);
        }
    }
}

TEST_CASE("shear inverse is exact on a grid") {
    auto pair = perturbed_pair(5, 3);
    auto res = compose_and_bound(pair, 3, 20);
    for (const auto& h : res.map.shears()) {
        auto inv = h.inverted();
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                PlanePoint p{rat(i, 20), rat(j, 20)};
                PlanePoint q = inv.apply(h.apply(p));
                CHECK(q == p);
            }
        }
    }
}

TEST_CASE("shear preserves vertical order at hair tips") {
    auto pair = perturbed_pair(5, 3);
    auto res = compose_and_bound(pair, 3, 10);
    const auto& lx = pair.lx();
    const auto& leaves = lx.cantor().leaves();
    const Rat scale = Rat(1, 2) / pair.level(0)[0].max_x;
    for (const auto& h : res.map.shears()) {
        for (std::size_t i = 0; i < lx.leaf_count(); i += 37) {
            Rat x = leaves[i].midpoint();
            Rat tip = lx.value(i) * scale;
            PlanePoint lowimg = h.apply({x, tip / 2});
            PlanePoint tipimg = h.apply({x, tip});
            if (tip > 0) CHECK(lowimg.y < tipimg.y);
        }
    }
}

TEST_CASE("identical nests give the identity composition with zero bounds") {
    auto m = LengthModel::canonical(5);
    auto pair = build_matched_nests(m, m, 3);
    auto res = compose_and_bound(pair, 3, 50);
    for (const auto& d : res.report.step_sup_displacement) CHECK(d == Rat(0));
    PlanePoint p{Rat(1, 3), Rat(2, 5)};
    CHECK(res.map.apply(p) == p);
}

TEST_CASE("per-step sup displacement <= 2^-n on grid plus tips") {
    auto pair = perturbed_pair(6, 5);
    auto res = compose_and_bound(pair, 5, 60);
    REQUIRE(res.report.step_sup_displacement.size() == 5);
    CHECK(res.report.displacement_ok);
    for (int n = 1; n <= 5; ++n)
        CHECK(res.report.step_sup_displacement[n - 1] <= pow2_inv(n));
}

TEST_CASE("lipschitz partial products: exact values and monotonicity") {
    auto prods = lipschitz_partial_products(25);
    REQUIRE(prods.size() == 25);
    CHECK(prods[0] == Rat(1, 2));
    CHECK(prods[1] == Rat(3, 8));
    for (std::size_t i = 1; i < prods.size(); ++i) CHECK(prods[i] < prods[i - 1]);
    double p25 = rat_to_double(prods[24]);
    CHECK(p25 > 0.288788);
    CHECK(p25 < 0.288789);
}

TEST_CASE("transfer_length") {
    auto lx = LengthModel::canonical(6);
    SUBCASE("identical nests: output equals input") {
        auto pair = build_matched_nests(lx, lx, 3);
        auto out = transfer_length(pair, 3, lx);
        CHECK(out.values() == lx.values());
    }
    SUBCASE("scaled lY = c lX: output = c lX exactly") {
        std::vector<Rat> scaled;
        for (const auto& v : lx.values()) scaled.push_back(v * Rat(3, 7));
        auto ly = LengthModel::from_values(lx.cantor_ptr(), std::move(scaled));
        auto pair = build_matched_nests(lx, ly, 3);
        auto out = transfer_length(pair, 3, lx);
        for (std::size_t i = 0; i < out.leaf_count(); ++i)
            CHECK(out.value(i) == lx.value(i) * Rat(3, 7));
    }
    SUBCASE("perturbed pair: transferred block maxima equal Y's recorded maxima") {
        auto ly = fixtures::perturbed(lx, 42);
        auto pair = build_matched_nests(lx, ly, 6);
        auto out = transfer_length(pair, 6, lx);
        for (const auto& b : pair.level(6))
            CHECK(out.range_max(b.x_first, b.x_last) == b.max_y);
    }
    SUBCASE("zero-set preservation") {
        auto ly = fixtures::perturbed(lx, 42);
        auto pair = build_matched_nests(lx, ly, 4);
        auto out = transfer_length(pair, 4, lx);
        for (std::size_t i = 0; i < out.leaf_count(); ++i)
            CHECK((out.value(i) == 0) == (lx.value(i) == 0));
    }
}

TEST_CASE("the composition carries every hair tip to its transferred height") {
    auto lx = LengthModel::canonical(6);
    auto ly = fixtures::perturbed(lx, 42);
    auto pair = build_matched_nests(lx, ly, 6);
    auto res = compose_and_bound(pair, 6, 2);
    const Rat scale_x = Rat(1, 2) / pair.level(0)[0].max_x;
    const Rat scale_y = Rat(1, 2) / pair.level(0)[0].max_y;
    const auto& leaves = lx.cantor().leaves();
    for (int n = 1; n <= 6; ++n) {
        for (const auto& b : pair.level(n)) {
            const Rat factor = scale_y * b.max_y / b.max_x;
            for (std::size_t i = b.x_first; i <= b.x_last; i += 11) {
                PlanePoint tip{leaves[i].midpoint(), lx.value(i) * scale_x};
                PlanePoint img = res.map.apply_prefix(tip, n);
                CHECK(img.y == factor * lx.value(i));
            }
        }
    }
}

TEST_CASE("cumulative eta factors telescope to Max ratios") {
    auto pair = perturbed_pair(6, 6);
    auto res = compose_and_bound(pair, 6, 10);
    const auto& cf = res.map.cumulative_factors();
    for (const auto& b : pair.level(6)) {
        const Rat expect = b.max_y / b.max_x * pair.level(0)[0].max_x / pair.level(0)[0].max_y;
        for (std::size_t i = b.x_first; i <= b.x_last; ++i) CHECK(cf[i] == expect);
    }
}
