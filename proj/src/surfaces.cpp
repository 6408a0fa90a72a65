#include "wfano/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "wfano/errors.hpp"
#include "wfano/lattice_model.hpp"

namespace wfano {

std::string to_text(SurfaceCategory c) {
    switch (c) {
        case SurfaceCategory::fano: return "fano";
        case SurfaceCategory::weak_fano_small: return "weak-fano-small";
        case SurfaceCategory::weak_fano_divisorial: return "weak-fano-divisorial";
        case SurfaceCategory::not_nef: return "not-nef";
    }
    return "?";
}

namespace {

SurfaceCategory category_from_ray(long long n) {
    if (n <= 3) return SurfaceCategory::fano;
    if (n == 4) return SurfaceCategory::weak_fano_divisorial;
    return SurfaceCategory::not_nef;
}

}  // namespace

SurfaceClassification classify_plane(long long d) {
    if (d < 1) throw invalid_class("classify_plane: degree must be >= 1");
    SurfaceClassification out;
    out.curve = CurveType{(d - 1) * (d - 2) / 2, d};
    out.ray = ExtremalRay{1, d};
    out.category = category_from_ray(d);
    out.covering_family = d >= 2;  // lines of the plane meeting C d times
    out.dim_anti_lower = dim_anticanonical(out.curve);
    return out;
}

SurfaceClassification classify_quadric(long long a, long long b) {
    if (b < 1 || a < b || a < 2) {
        throw invalid_bidegree("classify_quadric: needs a >= b >= 1 and a >= 2, got (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
    SurfaceClassification out;
    out.curve = CurveType{(a - 1) * (b - 1), a + b};
    out.ray = ExtremalRay{1, a};
    out.category = category_from_ray(a);
    out.covering_family = true;  // the a-secant ruling sweeps the quadric
    out.dim_anti_lower = dim_anticanonical(out.curve);
    return out;
}

SurfaceClassification classify_cone(long long a, long long e) {
    bool ok = (a == 2 && e == 1) || (a >= 3 && (e == 0 || e == 1));
    if (!ok) {
        throw invalid_cone_class("classify_cone: needs (a,e) = (2,1) or a >= 3 with e in {0,1}");
    }
    SurfaceClassification out;
    out.curve = CurveType{(a - 1) * (a + e - 1), 2 * a + e};
    out.ray = ExtremalRay{1, a + e};
    out.category = category_from_ray(a + e);
    out.covering_family = true;  // the rules through the vertex sweep the cone
    out.dim_anti_lower = dim_anticanonical(out.curve);
    return out;
}

SurfaceClassification classify_cubic(const DivisorClass& c) {
    if (c.n_points() != 6) throw invalid_class("classify_cubic: expects n = 6");
    const DivisorClass cls = cremona_normalize(c);
    const LatticeModel model = LatticeModel::cubic();
    const DivisorClass minus_k = -model.canonical;

    long long d = intersect(cls, minus_k);
    if (d < 1) throw invalid_class("classify_cubic: class has degree " + std::to_string(d));
    if (is_effective_cubic(2 * minus_k - cls)) {
        throw quadric_containment("classify_cubic: -2K - C is effective, the curve lies on a quadric");
    }
    long long g = adjunction_genus(cls, model);

    SurfaceClassification out;
    out.curve = CurveType{g, d};
    out.source_class = cls;
    out.dim_anti_lower = 33 - 4 * d + g;

    long long max_secancy = 0;
    long long fours = 0;
    for (const DivisorClass& line : twenty_seven_lines()) {
        long long s = intersect(line, cls);
        if (s == 4) ++fours;
        if (s > max_secancy) {
            max_secancy = s;
            out.witnesses.clear();
        }
        if (s == max_secancy) out.witnesses.push_back(line);
    }
    out.ray = ExtremalRay{1, max_secancy};
    out.four_secants = fours;

    if (max_secancy <= 3) {
        out.category = SurfaceCategory::fano;
    } else if (max_secancy >= 5) {
        out.category = SurfaceCategory::not_nef;
    } else {
        // Restriction of -K_X to the cubic: H|_S = -K_S, E|_S = C, so
        // A = -4K - C.  A^2 = 0 exactly when the 4-secant family sweeps the
        // surface (divisorial contraction); A^2 > 0 leaves finitely many.
        const DivisorClass a = 4 * minus_k - cls;
        long long a_sq = self_intersection(a);
        out.category = a_sq == 0 ? SurfaceCategory::weak_fano_divisorial
                                 : SurfaceCategory::weak_fano_small;
        out.covering_family = a_sq == 0;
    }
    return out;
}

std::vector<SurfaceClassification> enumerate_cubic_cases() {
    std::vector<SurfaceClassification> out;
    // Secancy caps force m1 <= 4 and k <= 4 + m5 + m6 <= 12; brute force over
    // sorted canonical tuples is tiny.
    std::vector<long long> m(6);
    for (long long k = 1; k <= 12; ++k) {
        std::function<void(int, long long)> rec = [&](int idx, long long cap) {
            if (idx == 6) {
                if (k < m[0] + m[1] + m[2]) return;                 // canonical form
                if (m[0] > 4) return;                                // E_1 secancy
                if (k - m[4] - m[5] > 4) return;                     // line through p5,p6
                if (2 * k - (m[1] + m[2] + m[3] + m[4] + m[5]) > 4) return;  // conic
                DivisorClass cls(k, m);
                long long d = 3 * k - (m[0] + m[1] + m[2] + m[3] + m[4] + m[5]);
                if (d < 1) return;
                try {
                    out.push_back(classify_cubic(cls));
                } catch (const quadric_containment&) {
                    // cut out by a quadric: belongs to the low-degree study
                }
                return;
            }
            for (long long v = 0; v <= cap; ++v) {
                m[idx] = v;
                rec(idx + 1, v);
            }
        };
        rec(0, std::min<long long>(4, k));
    }
    std::sort(out.begin(), out.end(), [](const SurfaceClassification& x,
                                         const SurfaceClassification& y) {
        auto key = [](const SurfaceClassification& s) {
            return std::tuple(static_cast<int>(s.category), s.curve.g, s.curve.d,
                              s.source_class->deg_l, s.source_class->mults);
        };
        return key(x) < key(y);
    });
    return out;
}

QuarticModelReport classify_quartic_model(const DivisorClass& c) {
    if (c.n_points() != 12) throw invalid_class("classify_quartic_model: expects n = 12");
    for (long long mi : c.mults) {
        if (mi < 0) throw invalid_class("classify_quartic_model: negative multiplicity");
    }
    const LatticeModel model = LatticeModel::rational_quartic();
    long long k = c.deg_l;
    long long msum = 0;
    for (long long mi : c.mults) msum += mi;
    if (msum != 3 * k - 1) {
        throw non_smooth_image("classify_quartic_model: sum m = " + std::to_string(msum) +
                               " but smooth image needs 3k - 1 = " + std::to_string(3 * k - 1));
    }

    QuarticModelReport rep;
    rep.base.curve = CurveType{adjunction_genus(c, model), k + 1};  // d = C.H = k + 1
    rep.base.source_class = c;
    rep.base.dim_anti_lower = 33 - 4 * rep.base.curve.d + rep.base.curve.g;

    const auto& q = quartic_model_classes();
    auto scan = [&](const std::vector<DivisorClass>& classes, long long& best,
                    std::vector<DivisorClass>& witnesses) {
        best = 0;
        std::vector<DivisorClass> w;
        for (const DivisorClass& cl : classes) {
            long long s = intersect(cl, c);
            if (s > best) {
                best = s;
                w.clear();
            }
            if (s == best) w.push_back(cl);
        }
        witnesses.insert(witnesses.end(), w.begin(), w.end());
    };
    scan(q.lines, rep.max_line_secancy, rep.base.witnesses);
    scan(q.conics, rep.max_conic_secancy, rep.base.witnesses);
    scan(q.twisted_cubics, rep.max_cubic_secancy, rep.base.witnesses);

    rep.admissible = rep.max_line_secancy <= 4 && rep.max_conic_secancy <= 8 &&
                     rep.max_cubic_secancy <= 12;
    rep.base.category = rep.admissible ? SurfaceCategory::weak_fano_small
                                       : SurfaceCategory::not_nef;
    rep.base.covering_family = false;  // only finitely many low-degree curves on Q

    // Worst observed ratio n/m among the three families, ties to lower degree.
    ExtremalRay ray{1, rep.max_line_secancy};
    if (rep.max_conic_secancy * ray.m > ray.n * 2) ray = ExtremalRay{2, rep.max_conic_secancy};
    if (rep.max_cubic_secancy * ray.m > ray.n * 3) ray = ExtremalRay{3, rep.max_cubic_secancy};
    rep.base.ray = ray;
    return rep;
}

SurfaceClassification classify_ambient(const AmbientCurve& curve) {
    return std::visit(
        [](const auto& c) -> SurfaceClassification {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, OnPlane>) {
                return classify_plane(c.d);
            } else if constexpr (std::is_same_v<T, OnSmoothQuadric>) {
                return classify_quadric(c.a, c.b);
            } else if constexpr (std::is_same_v<T, OnQuadricCone>) {
                return classify_cone(c.a, c.e);
            } else if constexpr (std::is_same_v<T, OnNormalCubic>) {
                return classify_cubic(c.cls);
            } else {
                return classify_quartic_model(c.cls).base;
            }
        },
        curve);
}

const std::vector<QuarticCatalogRow>& quartic_catalog() {
    static const std::vector<QuarticCatalogRow> rows = [] {
        auto row = [](long long g, long long d, long long k,
                      std::vector<long long> m, long long conic, long long cubic) {
            return QuarticCatalogRow{CurveType{g, d}, DivisorClass(k, std::move(m)), conic, cubic};
        };
        return std::vector<QuarticCatalogRow>{
            row(0, 7, 6, {3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0}, 6, 10),
            row(1, 7, 6, {3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0, 0}, 6, 10),
            row(2, 7, 6, {2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0, 0}, 6, 9),
            row(2, 8, 7, {3, 3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0}, 7, 10),
            row(3, 8, 7, {3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0}, 7, 10),
            row(4, 8, 7, {3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0}, 7, 9),
            row(5, 8, 7, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0}, 7, 8),
            row(6, 9, 8, {3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0}, 7, 10),
            row(7, 9, 8, {3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0}, 7, 9),
            row(8, 9, 8, {3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0}, 6, 8),
            row(10, 10, 9, {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1}, 7, 10),
            row(11, 10, 9, {3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1}, 6, 9),
            row(14, 11, 10, {3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2}, 6, 10),
        };
    }();
    return rows;
}

std::vector<DivisorClass> quartic_search(CurveType c) {
    std::vector<DivisorClass> out;
    long long k = c.d - 1;  // d = k + 1 on this model
    long long target = 3 * k - 1;
    if (k < 1 || target < 0) return out;

    std::vector<long long> m(12);
    std::function<void(int, long long, long long)> rec = [&](int idx, long long cap,
                                                             long long left) {
        if (idx == 12) {
            if (left != 0) return;
            DivisorClass cls(k, m);
            QuarticModelReport rep = classify_quartic_model(cls);
            if (rep.admissible && rep.base.curve.g == c.g) out.push_back(cls);
            return;
        }
        long long hi = std::min(cap, left);
        // remaining slots cannot absorb more than hi each
        for (long long v = hi; v >= 0; --v) {
            if (v * (12 - idx) < left) break;
            m[idx] = v;
            rec(idx + 1, v, left - v);
        }
    };
    rec(0, 4, target);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wfano
