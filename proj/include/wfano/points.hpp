#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wfano {

using BigInt = boost::multiprecision::cpp_int;

/// Configuration of points in P^k with exact integer homogeneous coordinates
/// (denominators are cleared per point on construction; projective scaling is
/// free).  Requires k >= 3, nonzero vectors, and pairwise distinct points.
struct PointConfig {
    int dim = 3;  // ambient dimension k; coordinates have k+1 entries
    std::vector<std::vector<BigInt>> points;
};

/// Builds a validated configuration from rational coordinate strings, each a
/// signed decimal integer or "p/q" fraction.
PointConfig make_point_config(const std::vector<std::vector<std::string>>& coords);

/// Parses the JSON point file: an array of points, each an array of k+1
/// strings.  Throws parse_error on malformed input.
PointConfig parse_point_file(const std::string& json_text);

/// (-K)^3 = 64 - 8d for the blow-up of d points in P^3.
long long points_k3(long long d);

enum class PointsVerdict { fano, candidate_weak_fano, never };

std::string to_text(PointsVerdict v);

/// Numeric part of the classification: fano iff d = 1; for k = 3 and
/// 2 <= d <= 7 the verdict still depends on the point positions; for k >= 4
/// and d >= 2 the line through two points already meets K non-negatively.
PointsVerdict numeric_verdict(long long k, long long d);

struct IncidenceReport {
    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<std::array<int, 5>> coplanar_quintuples;
    bool passes = false;                        // both lists empty
    std::string twisted_cubic_condition = "not checked";
};

/// Exact rank tests over the rationals: collinear triples have coordinate
/// matrix rank <= 2, coplanar 5-tuples rank <= 3.  Requires dim = 3.
IncidenceReport incidence_check(const PointConfig& cfg);

/// Rank of an integer matrix by fraction-free elimination.
int matrix_rank(std::vector<std::vector<BigInt>> m);

}  // namespace wfano
