#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "wfano/errors.hpp"
#include "wfano/points.hpp"

using namespace wfano;

namespace {

using Coords = std::vector<std::vector<std::string>>;

Coords frame() {
    return {{"1", "0", "0", "0"},
            {"0", "1", "0", "0"},
            {"0", "0", "1", "0"},
            {"0", "0", "0", "1"},
            {"1", "1", "1", "1"}};
}

}  // namespace

TEST_CASE("numeric invariants of point blow-ups") {
    CHECK(points_k3(7) == 8);
    CHECK(points_k3(8) == 0);
    CHECK(points_k3(0) == 64);
    for (long long d = 0; d <= 12; ++d) CHECK((points_k3(d) > 0) == (d <= 7));

    CHECK(numeric_verdict(3, 1) == PointsVerdict::fano);
    CHECK(numeric_verdict(4, 1) == PointsVerdict::fano);
    CHECK(numeric_verdict(4, 2) == PointsVerdict::never);
    CHECK(numeric_verdict(3, 7) == PointsVerdict::candidate_weak_fano);
    CHECK(numeric_verdict(3, 8) == PointsVerdict::never);
    for (long long k = 4; k <= 8; ++k) {
        for (long long d = 2; d <= 10; ++d) {
            CHECK(numeric_verdict(k, d) == PointsVerdict::never);
        }
    }
}

TEST_CASE("exact rank computation") {
    CHECK(matrix_rank({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}) == 3);
    CHECK(matrix_rank({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 0, 1}}) == 2);
    CHECK(matrix_rank({{0, 0, 0, 0}}) == 0);
    // big entries stay exact
    BigInt huge = BigInt("123456789012345678901234567890");
    CHECK(matrix_rank({{huge, 0, 0, 0}, {2 * huge, 0, 0, 0}}) == 1);
}

TEST_CASE("incidence checks") {
    SUBCASE("projective frame is in general position") {
        auto rep = incidence_check(make_point_config(frame()));
        CHECK(rep.collinear_triples.empty());
        CHECK(rep.coplanar_quintuples.empty());
        CHECK(rep.passes);
        CHECK(rep.twisted_cubic_condition == "not checked");
    }

    SUBCASE("three points on an axis") {
        auto rep = incidence_check(make_point_config({{"1", "0", "0", "0"},
                                                      {"1", "1", "0", "0"},
                                                      {"1", "2", "0", "0"},
                                                      {"0", "0", "1", "0"}}));
        REQUIRE(rep.collinear_triples.size() == 1);
        CHECK(rep.collinear_triples[0] == std::array<int, 3>{0, 1, 2});
        CHECK_FALSE(rep.passes);
    }

    SUBCASE("five points with vanishing last coordinate are coplanar") {
        auto rep = incidence_check(make_point_config({{"1", "0", "0", "0"},
                                                      {"0", "1", "0", "0"},
                                                      {"0", "0", "1", "0"},
                                                      {"1", "1", "1", "0"},
                                                      {"1", "2", "3", "0"},
                                                      {"0", "0", "0", "1"}}));
        CHECK(rep.coplanar_quintuples.size() == 1);
        CHECK(rep.coplanar_quintuples[0] == std::array<int, 5>{0, 1, 2, 3, 4});
    }

    SUBCASE("rational coordinates") {
        auto rep = incidence_check(make_point_config({{"1/2", "0", "0", "0"},
                                                      {"1/3", "2/3", "0", "0"},
                                                      {"1", "4", "0", "0"},
                                                      {"0", "0", "-5/7", "0"}}));
        // (1:0:0:0), (1:2:0:0), (1:4:0:0) are collinear
        REQUIRE(rep.collinear_triples.size() == 1);
        CHECK(rep.collinear_triples[0] == std::array<int, 3>{0, 1, 2});
    }
}

TEST_CASE("incidence report is invariant under scaling and permutation") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coord(-4, 4), npts(4, 7), scale_num(1, 9);

    auto report_signature = [](const IncidenceReport& rep,
                               const std::vector<int>& relabel) {
        std::set<std::set<int>> tri, quint;
        for (auto& t : rep.collinear_triples) {
            tri.insert({relabel[t[0]], relabel[t[1]], relabel[t[2]]});
        }
        for (auto& q : rep.coplanar_quintuples) {
            quint.insert({relabel[q[0]], relabel[q[1]], relabel[q[2]], relabel[q[3]], relabel[q[4]]});
        }
        return std::pair(tri, quint);
    };

    int done = 0;
    while (done < 100) {
        int n = npts(rng);
        Coords coords(n, std::vector<std::string>(4));
        for (auto& p : coords) {
            for (auto& c : p) c = std::to_string(coord(rng));
        }
        PointConfig cfg;
        try {
            cfg = make_point_config(coords);
        } catch (const parse_error&) {
            continue;  // zero vector or coincident points; draw again
        }
        ++done;
        auto base = incidence_check(cfg);

        // scale each point by a random nonzero rational and permute the list
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Coords scaled(n);
        for (int i = 0; i < n; ++i) {
            int num = scale_num(rng), den = scale_num(rng);
            int sign = (rng() % 2 == 0) ? 1 : -1;
            for (const auto& c : coords[perm[i]]) {
                long long v = std::stoll(c) * sign * num;
                scaled[i].push_back(std::to_string(v) + "/" + std::to_string(den));
            }
        }
        auto moved = incidence_check(make_point_config(scaled));

        // moved point i is base point perm[i], so map moved indices back
        std::vector<int> identity(n);
        for (int i = 0; i < n; ++i) identity[i] = i;
        CHECK(report_signature(base, identity) == report_signature(moved, perm));
    }
}

TEST_CASE("point file parsing") {
    CHECK_NOTHROW(parse_point_file(
        R"([["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["1","1","1","1"]])"));
    CHECK_THROWS_AS(parse_point_file("not json"), parse_error);
    CHECK_THROWS_AS(parse_point_file(R"({"points": []})"), parse_error);
    CHECK_THROWS_AS(parse_point_file(R"([["1","0","0",0]])"), parse_error);          // bare number
    CHECK_THROWS_AS(parse_point_file(R"([["1","0","0"],["0","1","0"]])"), parse_error);  // k = 2
    CHECK_THROWS_AS(parse_point_file(R"([["0","0","0","0"]])"), parse_error);        // zero vector
    CHECK_THROWS_AS(parse_point_file(R"([["1","0","0","0"],["2","0","0","0"]])"),
                    parse_error);  // coincident
    CHECK_THROWS_AS(parse_point_file(R"([["1/0","0","0","1"]])"), parse_error);
    CHECK_THROWS_AS(parse_point_file(R"([["1","0","0","0"],["0","1","0"]])"), parse_error);
    CHECK_THROWS_AS(make_point_config({{"1", "0", "0", "1.5"}}), parse_error);
}
