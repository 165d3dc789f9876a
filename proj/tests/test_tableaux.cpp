#include "doctest.h"

#include <map>
#include <set>

#include "klspecht/tableaux.hpp"

using namespace klspecht;

namespace {

// f^lambda by the branching rule, independent of the hook formula
long long branching_count(const std::vector<int>& parts, std::map<std::vector<int>, long long>& memo) {
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    long long total = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (r + 1 < parts.size() && parts[r + 1] == parts[r]) continue;
        auto smaller = parts;
        if (--smaller[r] == 0) smaller.pop_back();
        total += branching_count(smaller, memo);
    }
    return memo[parts] = total;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("partition parsing") {
    auto p = Partition::parse("3,1,1");
    CHECK(p.size() == 5);
    CHECK(p.rows() == 3);
    CHECK(p.str() == "3,1,1");
    CHECK(Partition::parse(" 2 , 2 ").is_rectangle());
    CHECK_THROWS_AS(Partition::parse("1,3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,0"), ParseError);
}

TEST_CASE("partitions_of counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("removable boxes") {
    auto boxes = removable_boxes(Partition::parse("6,6,3,1"));
    REQUIRE(boxes.size() == 3);
    CHECK(boxes[0] == Box{2, 6});
    CHECK(boxes[1] == Box{3, 3});
    CHECK(boxes[2] == Box{4, 1});

    auto row = removable_boxes(Partition({5}));
    REQUIRE(row.size() == 1);
    CHECK(row[0] == Box{1, 5});

    auto hook = removable_boxes(Partition::parse("3,1,1"));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0] == Box{1, 3});
    CHECK(hook[1] == Box{3, 1});

    CHECK_THROWS(removable_boxes(Partition()));
    CHECK(remove_box(Partition::parse("3,1,1"), 2) == Partition::parse("3,1"));
}

TEST_CASE("tableau literals") {
    auto t = StandardTableau::parse("1,4,5/2/3");
    CHECK(t.shape() == Partition::parse("3,1,1"));
    CHECK(t.str() == "1,4,5/2/3");
    CHECK(t.find(4) == Box{1, 2});
    CHECK_THROWS_AS(StandardTableau::parse("1,3/2,2"), ParseError);
    CHECK_THROWS_AS(StandardTableau::parse("2,1"), ParseError);
    CHECK_THROWS_AS(StandardTableau::parse("1,2/3,4,5"), ParseError);
}

TEST_CASE("index") {
    CHECK(index(StandardTableau::parse("1,4,5/2/3")) == 1);
    CHECK(index(StandardTableau::parse("1,2,3/4/5")) == 2);
    for (const auto& t : enumerate_syt(Partition::parse("3,3"))) CHECK(index(t) == 1);
}

TEST_CASE("total index ordering on (3,1,1)") {
    auto a = StandardTableau::parse("1,4,5/2/3");
    auto b = StandardTableau::parse("1,3,5/2/4");
    CHECK(total_index_cmp(a, b) == std::strong_ordering::less);
    CHECK(total_index_cmp(a, a) == std::strong_ordering::equal);
    CHECK_THROWS(total_index_cmp(a, StandardTableau::parse("1,2/3,4/5")));

    std::vector<std::string> listed;
    for (const auto& t : enumerate_syt(Partition::parse("3,1,1"))) listed.push_back(t.str());
    CHECK(listed == std::vector<std::string>{"1,4,5/2/3", "1,3,5/2/4", "1,2,5/3/4", "1,3,4/2/5", "1,2,4/3/5",
                                             "1,2,3/4/5"});
}

TEST_CASE("enumeration is strictly increasing and index-monotone") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& shape : partitions_of(n)) {
            auto all = enumerate_syt(shape);
            for (std::size_t k = 1; k < all.size(); ++k) {
                CHECK(total_index_cmp(all[k - 1], all[k]) == std::strong_ordering::less);
                CHECK(index(all[k - 1]) <= index(all[k]));
            }
        }
    }
}

TEST_CASE("descent sets") {
    CHECK(descent_set(StandardTableau::parse("1,3,4/2,5")) == std::vector<int>{1, 4});
    CHECK(descent_set(StandardTableau::parse("1,2,3,4")).empty());
    CHECK(descent_set(StandardTableau::parse("1/2/3/4")) == std::vector<int>{1, 2, 3});
    CHECK(has_descent(StandardTableau::parse("1,3/2"), 1));
}

TEST_CASE("delete_largest and add_box") {
    auto [a, i] = delete_largest(StandardTableau::parse("1,4,5/2/3"));
    CHECK(a.str() == "1,4/2/3");
    CHECK(i == 1);
    auto [b, k] = delete_largest(StandardTableau::parse("1,2,3/4/5"));
    CHECK(b.str() == "1,2,3/4");
    CHECK(k == 2);
    CHECK(add_box(b, 3).str() == "1,2,3/4/5");
}

TEST_CASE("delete_largest is a bijection from each index class") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& shape : partitions_of(n)) {
            const int r = static_cast<int>(removable_boxes(shape).size());
            std::vector<std::set<std::string>> images(r + 1);
            std::vector<int> sizes(r + 1, 0);
            for (const auto& t : enumerate_syt(shape)) {
                auto [smaller, i] = delete_largest(t);
                CHECK(smaller.shape() == remove_box(shape, i));
                images[i].insert(smaller.str());
                ++sizes[i];
            }
            for (int i = 1; i <= r; ++i) {
                CHECK(static_cast<int>(images[i].size()) == sizes[i]);
                CHECK(sizes[i] == count_syt(remove_box(shape, i)));
            }
        }
    }
}

TEST_CASE("counting standard tableaux") {
    CHECK(count_syt(Partition::parse("3,1,1")) == 6);
    CHECK(count_syt(Partition({7})) == 1);
    CHECK(count_syt(Partition::parse("2,2")) == 2);
    std::map<std::vector<int>, long long> memo;
    for (int n = 1; n <= 8; ++n) {
        long long squares = 0;
        for (const auto& shape : partitions_of(n)) {
            const long long f = count_syt(shape);
            CHECK(f == branching_count(shape.parts(), memo));
            CHECK(static_cast<long long>(enumerate_syt(shape).size()) == f);
            squares += f * f;
        }
        CHECK(squares == factorial(n));
    }
}
