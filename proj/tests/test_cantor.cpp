#include <doctest.h>

#include "hcs/cantor.hpp"

using namespace hcs;

TEST_CASE("canonical depth 1 is the single interval [0,1]") {
    auto c = CantorApprox::build(Scheme::Canonical, 1);
    REQUIRE(c.level(1).size() == 1);
    CHECK(c.level(1)[0] == Interval{Rat(0), Rat(1)});
}

TEST_CASE("canonical depth 2: three intervals of length 1/5") {
    auto c = CantorApprox::build(Scheme::Canonical, 2);
    REQUIRE(c.level(2).size() == 3);
    CHECK(c.level(2)[0] == Interval{Rat(0), Rat(1, 5)});
    CHECK(c.level(2)[1] == Interval{Rat(2, 5), Rat(3, 5)});
    CHECK(c.level(2)[2] == Interval{Rat(4, 5), Rat(1)});
}

TEST_CASE("middle-third depth 2") {
    auto c = CantorApprox::build(Scheme::MiddleThird, 2);
    REQUIRE(c.level(2).size() == 4);
    CHECK(c.level(2)[0] == Interval{Rat(0), Rat(1, 9)});
    CHECK(c.level(2)[1] == Interval{Rat(2, 9), Rat(1, 3)});
    CHECK(c.level(2)[2] == Interval{Rat(2, 3), Rat(7, 9)});
    CHECK(c.level(2)[3] == Interval{Rat(8, 9), Rat(1)});
}

TEST_CASE("level sizes: (2k-1)!! and 2^k; interval count cap") {
    auto c = CantorApprox::build(Scheme::Canonical, 4);
    CHECK(c.level(0).size() == 1);
    CHECK(c.level(1).size() == 1);
    CHECK(c.level(2).size() == 3);
    CHECK(c.level(3).size() == 15);
    CHECK(c.level(4).size() == 105);
    CHECK_NOTHROW(CantorApprox::build(Scheme::Canonical, 7));  // 135135 leaves
    CHECK_THROWS_AS(CantorApprox::build(Scheme::Canonical, 8), ResourceError);
    CHECK_THROWS_AS(CantorApprox::build(Scheme::Canonical, 4, 50), ResourceError);
}

TEST_CASE("address_to_interval") {
    auto c = CantorApprox::build(Scheme::Canonical, 4);
    CHECK(c.address_to_interval({1}) == Interval{Rat(0), Rat(1)});
    CHECK(c.address_to_interval({1, 2}) == Interval{Rat(2, 5), Rat(3, 5)});
    CHECK(c.address_to_interval({1, 1, 1, 1}).lo == Rat(0));
    CHECK_THROWS_AS(c.address_to_interval({1, 4}), AddressError);   // 4 > 2*2-1
    CHECK_THROWS_AS(c.address_to_interval({2}), AddressError);      // 2 > 2*1-1
    CHECK_THROWS_AS(c.address_to_interval({1, 1, 1, 1, 1}), AddressError);
}

TEST_CASE("address <-> index is a bijection at every level") {
    for (Scheme s : {Scheme::Canonical, Scheme::MiddleThird}) {
        auto c = CantorApprox::build(s, 4);
        for (int k = 0; k <= 4; ++k) {
            for (std::size_t i = 0; i < c.level(k).size(); ++i) {
                Address a = c.index_to_address(k, i);
                CHECK(c.address_to_index(a) == i);
                CHECK(c.address_to_interval(a) == c.level(k)[i]);
            }
        }
    }
}

TEST_CASE("prefix containment is monotone") {
    auto c = CantorApprox::build(Scheme::Canonical, 4);
    Address a = {1, 2, 3, 4};
    for (std::size_t k = 1; k < a.size(); ++k) {
        Address prefix(a.begin(), a.begin() + k);
        Address longer(a.begin(), a.begin() + k + 1);
        CHECK(c.address_to_interval(prefix).contains(c.address_to_interval(longer)));
    }
}

TEST_CASE("is_endpoint semantics at the current depth") {
    auto c2 = CantorApprox::build(Scheme::Canonical, 2);
    CHECK(c2.is_endpoint(Rat(1, 5)));
    CHECK_THROWS_AS(c2.is_endpoint(Rat(1, 2)), DomainError);
    auto m1 = CantorApprox::build(Scheme::MiddleThird, 1);
    CHECK(m1.is_endpoint(Rat(1, 3)));
}

TEST_CASE("children: formula oracle for the middle-third scheme") {
    auto c = CantorApprox::build(Scheme::MiddleThird, 6);
    SUBCASE("worked example p=3 q=1 j=2") {
        CHECK(c.children({3, 1, 2}) == std::vector<int>{5, 6, 7, 8});
    }
    SUBCASE("p must exceed q") {
        CHECK_THROWS_AS(c.children({2, 2, 1}), ContractError);
    }
    SUBCASE("containment equals the closed-range formula for all p <= 6") {
        for (int q = 0; q < 6; ++q) {
            for (int p = q + 1; p <= 6; ++p) {
                for (int j = 1; j <= static_cast<int>(c.level(q).size()); ++j) {
                    auto got = c.children({p, q, j});
                    std::vector<int> expect;
                    for (int i = (1 << (p - q)) * (j - 1) + 1; i <= (1 << (p - q)) * j; ++i)
                        expect.push_back(i);
                    CHECK(got == expect);
                }
            }
        }
    }
}

TEST_CASE("children: canonical depth-2 inside [0,1]") {
    auto c = CantorApprox::build(Scheme::Canonical, 2);
    CHECK(c.children({2, 1, 1}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("nesting and exact lengths") {
    for (Scheme s : {Scheme::Canonical, Scheme::MiddleThird}) {
        auto c = CantorApprox::build(s, 5);
        CHECK_NOTHROW(c.validate());
        // canonical level-k length == prod_{j=2..k} 1/(4j-3)
        if (s == Scheme::Canonical) {
            Rat len(1);
            for (int k = 2; k <= 5; ++k) {
                len /= 4 * k - 3;
                for (const auto& iv : c.level(k)) CHECK(iv.length() == len);
            }
        } else {
            for (int k = 0; k <= 5; ++k)
                for (const auto& iv : c.level(k)) CHECK(iv.length() == pow3_inv(k));
        }
    }
}

TEST_CASE("address-uniform layout cells reproduce the published spacing") {
    auto c = CantorApprox::build(Scheme::Canonical, 4);
    auto cells = c.layout_cells(4, XLayout::AddressUniform);
    REQUIRE(cells.size() == 105);
    CHECK(cells[0].midpoint() == Rat(1, 560));
    CHECK(cells[1].midpoint() == rat(4, 560));
    CHECK(cells[2].midpoint() == rat(7, 560));
    CHECK(cells[52].midpoint() == Rat(1, 2));
    auto l2 = c.layout_cells(2, XLayout::AddressUniform);
    CHECK(l2[1] == Interval{Rat(3, 8), Rat(5, 8)});
}
