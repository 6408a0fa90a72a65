#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wfano/curve_invariants.hpp"
#include "wfano/divisor_class.hpp"

namespace wfano {

enum class SurfaceCategory { fano, weak_fano_small, weak_fano_divisorial, not_nef };

std::string to_text(SurfaceCategory c);

/// Extremal curve class r = m*l - n*f on the blow-up.
struct ExtremalRay {
    long long m = 1;
    long long n = 0;
    bool operator==(const ExtremalRay&) const = default;
};

/// Verdict for a curve presented on a specific ambient surface.
/// four_secants is the count of lattice classes meeting the curve exactly
/// 4 times (cubic / quartic models); witnesses are the classes achieving the
/// maximal secancy.
struct SurfaceClassification {
    CurveType curve;
    SurfaceCategory category = SurfaceCategory::fano;
    ExtremalRay ray;
    std::optional<long long> four_secants;
    bool covering_family = false;
    long long dim_anti_lower = 0;
    std::vector<DivisorClass> witnesses;
    std::optional<DivisorClass> source_class;
};

/// Plane curve of degree d: g = (d-1)(d-2)/2, r = l - d*f.
/// fano for d <= 3, divisorial at d = 4, not nef for d >= 5.
SurfaceClassification classify_plane(long long d);

/// Bidegree (a,b) on a smooth quadric, a >= b >= 1 and a >= 2 (else planar):
/// g = (a-1)(b-1), d = a+b, r = l - a*f.
SurfaceClassification classify_quadric(long long a, long long b);

/// Curve a*s + (2a+e)*f0 on the quadric cone, e in {0,1}; requires
/// (a,e) = (2,1) or a >= 3.  g = (a-1)(a+e-1), d = 2a+e, r = l - (a+e)*f.
SurfaceClassification classify_cone(long long a, long long e);

/// Curve class on the cubic model (n = 6).  Normalizes via cremona_normalize,
/// rejects classes cut out by quadrics (-2K - C effective), and reads the
/// verdict off the maximal secancy a of the 27 line classes:
///   a <= 3 fano; a = 4 weak Fano, small when (-4K - C)^2 > 0 and divisorial
///   when it is 0; a >= 5 not nef.
SurfaceClassification classify_cubic(const DivisorClass& c);

/// All canonical classes on the cubic model with every line secancy <= 4 and
/// not contained in a quadric: 4 fano, 9 small, 3 divisorial cases.  Ordered
/// by category, then (g,d), then class.
std::vector<SurfaceClassification> enumerate_cubic_cases();

/// Secancy report on the singular rational quartic model (n = 12).
/// Admissible iff max line / conic / twisted-cubic secancies are <= 4 / 8 / 12.
struct QuarticModelReport {
    SurfaceClassification base;
    long long max_line_secancy = 0;    // max m_i
    long long max_conic_secancy = 0;   // max over pairs of k - m_i - m_j
    long long max_cubic_secancy = 0;   // max over 5-subsets of 2k - sum m
    bool admissible = false;
};

/// Requires sum m_i = 3k - 1 (smooth image) and m_i >= 0; d = k + 1.
QuarticModelReport classify_quartic_model(const DivisorClass& c);

/// A curve presented on one of the five supported ambient surfaces.
struct OnPlane { long long d; };
struct OnSmoothQuadric { long long a, b; };
struct OnQuadricCone { long long a, e; };
struct OnNormalCubic { DivisorClass cls; };          // n = 6
struct OnRationalQuartic { DivisorClass cls; };      // n = 12

using AmbientCurve =
    std::variant<OnPlane, OnSmoothQuadric, OnQuadricCone, OnNormalCubic, OnRationalQuartic>;

/// Dispatches to the classifier matching the presentation.
SurfaceClassification classify_ambient(const AmbientCurve& curve);

/// All canonical (non-increasing multiplicities) admissible quartic-model
/// classes of the given type.  k is forced to d - 1.
std::vector<DivisorClass> quartic_search(CurveType c);

/// Embedded catalog of thirteen quartic-model classes, one per type that
/// lies on no cubic, with the two secancy columns k - m11 - m12 and
/// 2k - (m8 + ... + m12).
struct QuarticCatalogRow {
    CurveType curve;
    DivisorClass cls;
    long long conic_column = 0;
    long long cubic_column = 0;
};

const std::vector<QuarticCatalogRow>& quartic_catalog();

}  // namespace wfano
