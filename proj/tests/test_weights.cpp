#include <algorithm>
#include <map>
#include <random>

#include "brauer/weights.hpp"
#include "doctest.h"

using namespace brauer;

TEST_CASE("context validation") {
    CHECK_THROWS(Context(0, 2, 0));
    CHECK_THROWS(Context(4, 2, 2));
    CHECK_THROWS(Context(4, 2, 9));
    CHECK(Context(4, 7, 5).delta() == 2);    // residue storage
    CHECK(Context(4, -1, 5).delta() == 4);
    CHECK(Context(4, -3, 0).delta() == -3);  // characteristic 0 keeps delta
}

TEST_CASE("weights trim and pad") {
    CHECK(Weight({6, 2, 4, -3, 1, -2, 0, 0}) == Weight({6, 2, 4, -3, 1, -2}));
    CHECK(Weight({1, 0, 2}).length() == 3);
    CHECK(Weight({1, 0, 2}).at(5) == 0);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("conjugate examples and involution") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({5, 3, 3, 2, 1, 1})) == Partition({6, 4, 3, 1, 1}));
    CHECK(conjugate(Partition({2})) == Partition({1, 1}));
    for (int m = 0; m <= 20; ++m)
        for (const auto& p : partitions_of(m)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("content sequence") {
    CHECK(content_sequence(Weight({6, 4, -2, 3, 5}), Context(5, 2, 0)) ==
          std::vector<int>{-5, -2, 5, 1, 0});
    CHECK(content_sequence(Weight(std::vector<int>{}), Context(3, 2, 0)) ==
          std::vector<int>{1, 2, 3});
    CHECK(content_sequence(Weight({2}), Context(2, 2, 0)) == std::vector<int>{-1, 2});
    CHECK_THROWS(content_sequence(Weight({1, 1, 1}), Context(2, 2, 0)));
}

TEST_CASE("content difference identity") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        std::vector<int> a(n), b(n);
        for (int& x : a) x = val(rng);
        for (int& x : b) x = val(rng);
        const Context ctx(n, val(rng), 0);
        const auto ca = content_sequence(Weight(a), ctx);
        const auto cb = content_sequence(Weight(b), ctx);
        for (int i = 0; i < n; ++i) CHECK(ca[i] - cb[i] == b[i] - a[i]);
    }
}

TEST_CASE("box contents") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(box_contents(Partition({2, 1}))) == std::vector<int>{-1, 0, 1});
    CHECK(box_contents(Partition{}).empty());
    CHECK(sorted(box_contents(Partition({2}))) == std::vector<int>{-1, 0});

    // closed form vs row-by-row sum, exhaustive through degree 12
    for (int m = 0; m <= 12; ++m) {
        for (const auto& lam : partitions_of(m)) {
            long long direct = 0;
            for (int c : box_contents(lam)) direct += c;
            long long formula = 0;
            for (int i = 1; i <= lam.rows(); ++i)
                formula += static_cast<long long>(lam.part(i)) * i -
                           static_cast<long long>(lam.part(i)) * (lam.part(i) + 1) / 2;
            CHECK(direct == formula);
        }
    }
}

TEST_CASE("skew boxes") {
    const auto boxes = skew_boxes(Partition({4, 4, 2}), Partition({4, 3, 1}));
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0] == SkewBox{2, 4, -2});
    CHECK(boxes[1] == SkewBox{3, 2, 1});
    CHECK(skew_boxes(Partition({3, 1}), Partition({3, 1})).empty());
    const auto two = skew_boxes(Partition({2}), Partition{});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == SkewBox{1, 1, 0});
    CHECK(two[1] == SkewBox{1, 2, -1});
    CHECK_THROWS(skew_boxes(Partition({2}), Partition({3})));
}

TEST_CASE("skew contents of the two sides are disjoint") {
    for (int dm = 0; dm <= 8; ++dm) {
        for (int dl = 0; dl <= 8; ++dl) {
            for (const auto& lam : partitions_of(dl)) {
                for (const auto& mu : partitions_of(dm)) {
                    const Partition nu = intersect(lam, mu);
                    std::map<int, int> seen;
                    for (const auto& b : skew_boxes(lam, nu)) seen[b.content] = 1;
                    for (const auto& b : skew_boxes(mu, nu)) {
                        CHECK(seen.find(b.content) == seen.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("label set") {
    CHECK(enumerate_label_set(Context(2, 2, 0)) ==
          std::vector<Partition>{Partition({2}), Partition({1, 1}), Partition{}});
    CHECK(enumerate_label_set(Context(3, 2, 0)) ==
          std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1}),
                                 Partition({1})});
    CHECK(enumerate_label_set(Context(1, 2, 0)) == std::vector<Partition>{Partition({1})});
    CHECK_THROWS(enumerate_label_set(Context(2, 0, 0)));
    CHECK_THROWS(enumerate_label_set(Context(2, 5, 5)));  // residue 0 in characteristic 5
}

TEST_CASE("dominance") {
    CHECK(is_dominant(Weight({4, 4, 2})));
    CHECK_FALSE(is_dominant(Weight({6, 2, 4, -3, 1, -2})));
    CHECK(is_dominant(Weight({0, 0, 0})));
}

TEST_CASE("weight text form") {
    CHECK(format_weight(parse_weight("6,4,-2,3,5")) == "6,4,-2,3,5");
    CHECK(parse_weight("") == Weight(std::vector<int>{}));
    CHECK(format_partition(Partition{}) == "");
    CHECK(parse_partition("4,4,2") == Partition({4, 4, 2}));
    CHECK_THROWS(parse_partition("4,x"));
}
