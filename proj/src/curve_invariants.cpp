#include "wfano/curve_invariants.hpp"

#include <utility>

#include "wfano/errors.hpp"

namespace wfano {

CurveType checked_curve(long long g, long long d) {
    if (g < 0) throw invalid_class("genus must be >= 0, got " + std::to_string(g));
    if (d < 1) throw invalid_class("degree must be >= 1, got " + std::to_string(d));
    return CurveType{g, d};
}

std::string to_text(const CurveType& c) {
    return "(" + std::to_string(c.g) + "," + std::to_string(c.d) + ")";
}

long long k3(CurveType c) { return 62 - 8 * c.d + 2 * c.g; }

long long k2e(CurveType c) { return 2 + 4 * c.d - 2 * c.g; }

long long dim_anticanonical(CurveType c) {
    return exact_div(k3(c), 2, "dim_anticanonical") + 2;
}

long long containment_bound(CurveType c, long long n) {
    if (n * c.d <= 2 * c.g - 2) {
        throw hypothesis_not_met("containment_bound: needs n > (2g-2)/d, got n = " +
                                 std::to_string(n) + " for " + to_text(c));
    }
    long long veronese = exact_div((n + 1) * (n + 2) * (n + 3), 6, "containment_bound");
    return veronese - n * c.d - 2 + c.g;
}

SurfaceMembership min_surface_tests(CurveType c) {
    SurfaceMembership s;
    s.in_plane = (2 * c.g - 2 < c.d) && (c.d < 3 + c.g);
    s.in_quadric = (2 * c.g - 2 < 2 * c.d) && (2 * c.d < 9 + c.g);
    s.in_cubic = (2 * c.g - 2 < 3 * c.d) && (3 * c.d < 19 + c.g);
    if (c.g == 19 && c.d == 12) s.in_cubic = true;  // unique cubic, found by a refined count
    return s;
}

bool castelnuovo_ok(CurveType c) {
    return c.g < (c.d * c.d) / 4 - c.d + 1;
}

bool mori_ok(CurveType c) { return 8 * c.g < c.d * c.d; }

long long lebarz_quadrisecants(CurveType c) {
    long long d = c.d, g = c.g;
    // A line meets an irreducible curve of degree <= 3 in at most 3 points,
    // so there are no quadrisecants; the closed form below is an excess
    // intersection number there (it gives 1 for a line) and only counts
    // honestly from degree 4 on.
    if (d <= 3) return 0;
    long long quartic_term =
        exact_div((d - 2) * (d - 3) * (d - 3) * (d - 4), 12, "lebarz_quadrisecants");
    long long genus_term =
        exact_div((d * d - 7 * d + 13 - g) * g, 2, "lebarz_quadrisecants");
    return quartic_term - genus_term;
}

LinkageType make_linkage(long long n1, long long n2) {
    if (n1 < 1 || n2 < 1) {
        throw degree_error("linkage surface degrees must be >= 1");
    }
    if (n1 > n2) std::swap(n1, n2);
    return LinkageType{n1, n2};
}

CurveType linkage_residual(CurveType c, LinkageType t) {
    long long d_res = t.n1 * t.n2 - c.d;
    if (d_res < 0) {
        throw degree_error("linkage_residual: degree " + std::to_string(c.d) +
                           " exceeds the complete intersection degree " +
                           std::to_string(t.n1 * t.n2));
    }
    long long drop = (t.n1 + t.n2 - 4) * (c.d - d_res);
    long long g_res = c.g - exact_div(drop, 2, "linkage_residual");
    if (g_res < -1) {
        throw infeasible_linkage("linkage_residual: residual genus " +
                                 std::to_string(g_res) + " below -1");
    }
    return CurveType{g_res, d_res};
}

long long ci_genus(LinkageType t) {
    return exact_div(t.n1 * t.n2 * (t.n1 + t.n2 - 4), 2, "ci_genus") + 1;
}

long long union_secancy(long long g, long long g_prime, long long g_union) {
    long long s = g_union - g - g_prime + 1;
    if (s < 0) {
        throw inconsistent_genera("union_secancy: negative intersection " +
                                  std::to_string(s));
    }
    return s;
}

std::string MoriPolynomial::str() const {
    std::string s = "n^2";
    auto term = [&](long long coeff, const std::string& mono) {
        if (coeff == 0) return;
        s += coeff > 0 ? " + " : " - ";
        long long a = coeff > 0 ? coeff : -coeff;
        if (mono.empty()) {
            s += std::to_string(a);
        } else if (a == 1) {
            s += mono;
        } else {
            s += std::to_string(a) + mono;
        }
    };
    term(c1, "n");
    term(c0, "");
    return s;
}

MoriPolynomial mori_polynomial(CurveType c) {
    return MoriPolynomial{1, -2 * (16 - c.d), c.d * c.d - 8 * c.g};
}

long long ruled_contraction_k3(long long k3_x, long long a) {
    return k3_x + 4 * a + 6;
}

}  // namespace wfano
