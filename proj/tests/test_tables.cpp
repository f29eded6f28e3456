#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "permpoly/classify.hpp"
#include "permpoly/criteria.hpp"
#include "permpoly/table_families.hpp"

using namespace permpoly;

namespace {

void check_table_matches_search(std::uint32_t q, std::uint32_t n,
                                std::size_t expected_count) {
    auto F = make_field_from_order(q);
    auto expansion = expand_table_union(F, n);
    auto search = classify_normalized(F, n);
    INFO("q=", q, " n=", n);
    CHECK(expansion.size() == expected_count);
    CHECK(expansion == search.polynomials);
    // and every individual row lands inside the search output
    std::set<std::vector<Elem>> found(search.polynomials.begin(), search.polynomials.end());
    for (const auto& id : table_rows_for(*F, n))
        for (const auto& coeffs : expand_table_family(F, id)) {
            INFO("row ", id);
            CHECK(found.count(coeffs) == 1);
        }
}

}  // namespace

TEST_CASE("row registry basics") {
    CHECK_THROWS_AS(table_row("nonsense"), UnknownFamily);
    auto F11 = make_field(11, 1);
    CHECK(table_rows_for(*F11, 6) ==
          std::vector<std::string>{"d6-1", "d6-2", "d6-3", "d6-4"});
    CHECK(table_rows_for(*F11, 2).empty());
    CHECK_THROWS_AS(expand_table_family(F11, "d6-9"), UnknownFamily);

    CHECK(expand_table_family(F11, "d6-1") ==
          std::vector<std::vector<Elem>>{{0, 2, 0, 0, 0, 0, 1}, {0, 9, 0, 0, 0, 0, 1}});
    CHECK(expand_table_family(F11, "d6-3").size() == 10);  // 2 signs x 5 squares
}

TEST_CASE("degree-6 row counts") {
    auto F9 = make_field(3, 2);
    CHECK(expand_table_family(F9, "d6-5").size() == 48);   // 8 a-values x 6 b-values
    CHECK(expand_table_family(F9, "d6-6").size() == 72);   // 8 x 9
    CHECK(expand_table_family(F9, "d6-7").size() == 288);  // both roots x 2 signs x 72
    CHECK(expand_table_family(F9, "d6-8").size() == 144);  // both roots x 72
    auto F27 = make_field(3, 3);
    CHECK(expand_table_family(F27, "d6-9").size() == 702);  // 26 x 27
}

TEST_CASE("every expanded member permutes") {
    for (auto [q, n] : {std::pair{11u, 6u}, {9u, 6u}, {7u, 5u}, {13u, 5u}, {8u, 4u}}) {
        auto F = make_field_from_order(q);
        for (const auto& coeffs : expand_table_union(F, n))
            CHECK(is_pp_bruteforce(Poly(F, coeffs)).is_pp);
    }
}

TEST_CASE("degree-6 tables reproduce the searches exactly") {
    check_table_matches_search(11, 6, 24);
    check_table_matches_search(9, 6, 552);
}

TEST_CASE("lower-degree tables reproduce the searches exactly") {
    // (q, n, count) for every field in the verification grid with a
    // nonempty degree range
    check_table_matches_search(4, 2, 1);
    check_table_matches_search(5, 2, 0);
    check_table_matches_search(5, 3, 1);
    check_table_matches_search(7, 2, 0);
    check_table_matches_search(7, 3, 0);
    check_table_matches_search(7, 4, 2);
    check_table_matches_search(7, 5, 15);
    check_table_matches_search(8, 2, 1);
    check_table_matches_search(8, 3, 1);
    check_table_matches_search(8, 4, 22);
    check_table_matches_search(8, 5, 8);
    check_table_matches_search(9, 2, 0);
    check_table_matches_search(9, 3, 5);
    check_table_matches_search(9, 4, 0);
    check_table_matches_search(9, 5, 3);
    check_table_matches_search(13, 2, 0);
    check_table_matches_search(13, 3, 0);
    check_table_matches_search(13, 4, 0);
    check_table_matches_search(13, 5, 19);
}

TEST_CASE("square-root-bearing rows cover both roots") {
    auto F9 = make_field(3, 2);
    auto sqrt2_row = expand_table_family(F9, "x5-sqrt2");
    REQUIRE(sqrt2_row.size() == 2);
    CHECK(sqrt2_row[0][1] != sqrt2_row[1][1]);
    CHECK(F9->mul(sqrt2_row[0][1], sqrt2_row[0][1]) == F9->from_int(2));
    CHECK(F9->mul(sqrt2_row[1][1], sqrt2_row[1][1]) == F9->from_int(2));
}
