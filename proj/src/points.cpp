#include "wfano/points.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

#include "wfano/errors.hpp"

namespace wfano {

namespace {

struct Rational {
    BigInt num;
    BigInt den;  // > 0
};

Rational parse_rational(const std::string& text) {
    auto parse_bigint = [](const std::string& s) -> BigInt {
        if (s.empty()) throw parse_error("empty coordinate");
        size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (start == s.size()) throw parse_error("bad coordinate '" + s + "'");
        for (size_t i = start; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i]))) {
                throw parse_error("bad coordinate '" + s + "'");
            }
        }
        BigInt v(s.substr(start));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    size_t slash = text.find('/');
    if (slash == std::string::npos) return {parse_bigint(text), 1};
    Rational r{parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1))};
    if (r.den == 0) throw parse_error("zero denominator in '" + text + "'");
    if (r.den < 0) {
        r.den = -r.den;
        r.num = -r.num;
    }
    return r;
}

bool proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace

PointConfig make_point_config(const std::vector<std::vector<std::string>>& coords) {
    if (coords.empty()) throw parse_error("point configuration is empty");
    size_t width = coords.front().size();
    if (width < 4) throw parse_error("points need at least 4 homogeneous coordinates (k >= 3)");

    PointConfig cfg;
    cfg.dim = static_cast<int>(width) - 1;
    for (const auto& raw : coords) {
        if (raw.size() != width) {
            throw parse_error("all points must have the same number of coordinates");
        }
        std::vector<Rational> rats;
        rats.reserve(width);
        BigInt den_product = 1;
        for (const std::string& s : raw) {
            rats.push_back(parse_rational(s));
            den_product *= rats.back().den;
        }
        // Clear denominators point by point; projective classes are unchanged.
        std::vector<BigInt> v(width);
        bool nonzero = false;
        for (size_t i = 0; i < width; ++i) {
            v[i] = rats[i].num * (den_product / rats[i].den);
            if (v[i] != 0) nonzero = true;
        }
        if (!nonzero) throw parse_error("point with all coordinates zero");
        cfg.points.push_back(std::move(v));
    }
    for (size_t i = 0; i < cfg.points.size(); ++i) {
        for (size_t j = i + 1; j < cfg.points.size(); ++j) {
            if (proportional(cfg.points[i], cfg.points[j])) {
                throw parse_error("points " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " coincide");
            }
        }
    }
    return cfg;
}

PointConfig parse_point_file(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("point file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw parse_error("point file must be a JSON array of points");
    std::vector<std::vector<std::string>> coords;
    for (const auto& pt : doc) {
        if (!pt.is_array()) throw parse_error("each point must be an array of strings");
        std::vector<std::string> row;
        for (const auto& coord : pt) {
            if (!coord.is_string()) {
                throw parse_error("coordinates must be strings (\"3\" or \"p/q\")");
            }
            row.push_back(coord.get<std::string>());
        }
        coords.push_back(std::move(row));
    }
    return make_point_config(coords);
}

long long points_k3(long long d) { return 64 - 8 * d; }

std::string to_text(PointsVerdict v) {
    switch (v) {
        case PointsVerdict::fano: return "fano";
        case PointsVerdict::candidate_weak_fano: return "candidate-weak-fano";
        case PointsVerdict::never: return "never";
    }
    return "?";
}

PointsVerdict numeric_verdict(long long k, long long d) {
    if (k < 3 || d < 1) throw invalid_class("numeric_verdict: needs k >= 3, d >= 1");
    if (d == 1) return PointsVerdict::fano;
    if (k == 3 && d <= 7) return PointsVerdict::candidate_weak_fano;
    return PointsVerdict::never;
}

int matrix_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            BigInt f1 = m[rank][col], f2 = m[r][col];
            for (size_t cc = col; cc < cols; ++cc) {
                m[r][cc] = m[r][cc] * f1 - m[rank][cc] * f2;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

IncidenceReport incidence_check(const PointConfig& cfg) {
    if (cfg.dim != 3) throw invalid_class("incidence_check: requires ambient dimension 3");
    IncidenceReport rep;
    const int n = static_cast<int>(cfg.points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (matrix_rank({cfg.points[i], cfg.points[j], cfg.points[k]}) <= 2) {
                    rep.collinear_triples.push_back({i, j, k});
                }
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    for (int e = d + 1; e < n; ++e) {
                        if (matrix_rank({cfg.points[a], cfg.points[b], cfg.points[c],
                                         cfg.points[d], cfg.points[e]}) <= 3) {
                            rep.coplanar_quintuples.push_back({a, b, c, d, e});
                        }
                    }
                }
            }
        }
    }
    rep.passes = rep.collinear_triples.empty() && rep.coplanar_quintuples.empty();
    return rep;
}

}  // namespace wfano
