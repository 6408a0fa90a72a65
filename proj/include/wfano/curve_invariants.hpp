#pragma once

#include <compare>
#include <string>

namespace wfano {

/// Genus/degree pair of a space curve.  Plain aggregate: user-facing inputs
/// are validated with checked_curve, while linkage residuals may legitimately
/// carry arithmetic genus -1 (a two-component degenerate curve).
struct CurveType {
    long long g = 0;
    long long d = 1;

    bool operator==(const CurveType&) const = default;
    auto operator<=>(const CurveType&) const = default;
};

/// Validates g >= 0, d >= 1; throws invalid_class otherwise.
CurveType checked_curve(long long g, long long d);

std::string to_text(const CurveType& c);  // "(g,d)"

/// (-K_X)^3 = 62 - 8d + 2g for the blow-up of P^3 along a (g,d) curve.
/// Positive iff 4d - 30 <= g (the boundary 4d - 30 = g gives 2).
long long k3(CurveType c);

/// K_X^2.E = 2 + 4d - 2g.
long long k2e(CurveType c);

/// dim |-K_X| = k3/2 + 2 = 33 - 4d + g.
long long dim_anticanonical(CurveType c);

/// Lower bound (n+1)(n+2)(n+3)/6 - nd - 2 + g for the projective dimension of
/// the system of degree-n surfaces through the curve.  Requires n*d > 2g - 2
/// strictly; throws hypothesis_not_met on the boundary (callers handle the
/// (19,12) case separately).
long long containment_bound(CurveType c, long long n);

struct SurfaceMembership {
    bool in_plane = false;
    bool in_quadric = false;
    bool in_cubic = false;
};

/// Riemann-Roch containment ranges: plane 2g-2 < d < 3+g, quadric
/// (2g-2)/2 < d < (9+g)/2, cubic (2g-2)/3 < d < (19+g)/3 (exact integer
/// comparisons), plus the hard-coded (19,12) cubic exception.
SurfaceMembership min_surface_tests(CurveType c);

/// Castelnuovo bound for curves not on a quadric: g < floor(d^2/4) - d + 1.
bool castelnuovo_ok(CurveType c);

/// 8g < d^2; also the smooth-quartic existence predicate.
bool mori_ok(CurveType c);

/// Number of 4-secant lines counted with multiplicity:
/// (d-2)(d-3)^2(d-4)/12 - (d^2-7d+13-g)g/2, exact.  For d <= 3 no line can
/// be a quadrisecant and the count is 0 (the closed form only applies from
/// degree 4).
long long lebarz_quadrisecants(CurveType c);

/// Complete-intersection type [n1,n2]; normalized so n1 <= n2.
struct LinkageType {
    long long n1 = 1;
    long long n2 = 1;
    bool operator==(const LinkageType&) const = default;
};

LinkageType make_linkage(long long n1, long long n2);

/// Residual curve of c under a linkage of type t:
///   d' = n1*n2 - d,  g' = g - (n1+n2-4)(d-d')/2.
/// Involution on its feasible domain.  Errors: d' < 0 degree_error,
/// odd product parity_error, g' < -1 infeasible_linkage.
CurveType linkage_residual(CurveType c, LinkageType t);

/// Genus of the full [n1,n2] complete intersection: n1*n2*(n1+n2-4)/2 + 1.
long long ci_genus(LinkageType t);

/// C.C' = g(C u C') - g - g' + 1; throws inconsistent_genera when negative.
long long union_secancy(long long g, long long g_prime, long long g_union);

/// P(n) = n^2 - 2(16-d) n + (d^2 - 8g).  P(0) > 0 iff mori_ok.
struct MoriPolynomial {
    long long c2 = 1;
    long long c1 = 0;
    long long c0 = 0;

    long long eval(long long n) const { return c2 * n * n + c1 * n + c0; }
    std::string str() const;  // e.g. "n^2 - 10n + 9"
    bool operator==(const MoriPolynomial&) const = default;
};

MoriPolynomial mori_polynomial(CurveType c);

/// K^3 of the target after contracting a ruled divisor onto a curve whose
/// normal bundle splits with degree a: k3_x + 4a + 6.
long long ruled_contraction_k3(long long k3_x, long long a);

}  // namespace wfano
