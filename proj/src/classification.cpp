#include "wfano/classification.hpp"

#include <algorithm>
#include <map>

#include "wfano/errors.hpp"

namespace wfano {

std::string to_text(ASetLabel a) {
    switch (a) {
        case ASetLabel::A0: return "A0";
        case ASetLabel::A1: return "A1";
        case ASetLabel::A2: return "A2";
        case ASetLabel::A3: return "A3";
        case ASetLabel::A4: return "A4";
    }
    return "?";
}

std::string to_text(Verdict v) {
    switch (v) {
        case Verdict::fano_conditional: return "fano-conditional";
        case Verdict::weak_fano_conditional: return "weak-fano-conditional";
        case Verdict::weak_fano_unconditional: return "weak-fano-unconditional";
        case Verdict::never_weak_fano: return "never-weak-fano";
        case Verdict::out_of_range: return "out-of-range";
        case Verdict::not_in_table: return "not-in-table";
    }
    return "?";
}

std::string to_text(SecantCondition c) {
    switch (c) {
        case SecantCondition::no_4_secant_line: return "no-4-secant-line";
        case SecantCondition::no_5_secant_line: return "no-5-secant-line";
        case SecantCondition::no_9_secant_conic: return "no-9-secant-conic";
        case SecantCondition::no_13_secant_cubic: return "no-13-secant-cubic";
        case SecantCondition::smooth_quartic_containment: return "smooth-quartic-containment";
    }
    return "?";
}

std::string to_text(AnticanonicalType t) {
    switch (t) {
        case AnticanonicalType::ample: return "ample";
        case AnticanonicalType::small: return "small";
        case AnticanonicalType::divisorial: return "divisorial";
    }
    return "?";
}

std::string to_text(Genericity g) {
    switch (g) {
        case Genericity::always: return "always";
        case Genericity::open_nonempty: return "open-nonempty";
        case Genericity::unknown: return "unknown";
    }
    return "?";
}

namespace {

// Master table: (g, d) -> minimal containing surface degree and set.
// Curves of every catalogued type exist; nothing outside is claimed.
const std::vector<CatalogRow> kCatalog = {
    {{0, 1}, 1, ASetLabel::A1},  {{0, 2}, 1, ASetLabel::A1},
    {{0, 3}, 2, ASetLabel::A1},  {{0, 4}, 2, ASetLabel::A1},
    {{0, 5}, 3, ASetLabel::A3},  {{0, 6}, 3, ASetLabel::A3},
    {{0, 7}, 4, ASetLabel::A4},
    {{1, 3}, 1, ASetLabel::A1},  {{1, 4}, 2, ASetLabel::A1},
    {{1, 5}, 3, ASetLabel::A2},  {{1, 6}, 3, ASetLabel::A3},
    {{1, 7}, 4, ASetLabel::A4},
    {{2, 5}, 2, ASetLabel::A1},  {{2, 6}, 3, ASetLabel::A3},
    {{2, 7}, 4, ASetLabel::A4},  {{2, 8}, 4, ASetLabel::A4},
    {{3, 4}, 1, ASetLabel::A3},  {{3, 6}, 3, ASetLabel::A2},
    {{3, 7}, 3, ASetLabel::A3},  {{3, 8}, 4, ASetLabel::A4},
    {{4, 6}, 2, ASetLabel::A1},  {{4, 7}, 3, ASetLabel::A3},
    {{4, 8}, 4, ASetLabel::A4},
    {{5, 7}, 3, ASetLabel::A2},  {{5, 8}, 4, ASetLabel::A4},
    {{6, 5}, 1, ASetLabel::A0},  {{6, 7}, 2, ASetLabel::A3},
    {{6, 8}, 3, ASetLabel::A3},  {{6, 9}, 4, ASetLabel::A4},
    {{7, 8}, 3, ASetLabel::A3},  {{7, 9}, 4, ASetLabel::A4},
    {{8, 8}, 2, ASetLabel::A0},  {{8, 9}, 4, ASetLabel::A4},
    {{9, 8}, 2, ASetLabel::A3},  {{9, 9}, 3, ASetLabel::A3},
    {{10, 6}, 1, ASetLabel::A0}, {{10, 9}, 3, ASetLabel::A2},
    {{10, 10}, 4, ASetLabel::A4},
    {{11, 10}, 4, ASetLabel::A4},
    {{12, 9}, 2, ASetLabel::A0}, {{12, 10}, 3, ASetLabel::A3},
    {{14, 11}, 4, ASetLabel::A4},
    {{19, 12}, 3, ASetLabel::A3},
};

std::optional<CatalogRow> find_row(CurveType c) {
    for (const CatalogRow& row : kCatalog) {
        if (row.curve == c) return row;
    }
    return std::nullopt;
}

// Pairs whose anticanonical morphism contracts a divisor for every good member.
const std::vector<CurveType> kDivisorialPairs = {
    {3, 4}, {6, 7}, {9, 8}, {12, 10}, {19, 12}};

bool is_divisorial_pair(CurveType c) {
    return std::find(kDivisorialPairs.begin(), kDivisorialPairs.end(), c) !=
           kDivisorialPairs.end();
}

}  // namespace

const std::vector<CatalogRow>& curve_catalog() { return kCatalog; }

const std::vector<CurveType>& aset_members(ASetLabel label) {
    static const std::map<ASetLabel, std::vector<CurveType>> sets = [] {
        std::map<ASetLabel, std::vector<CurveType>> m;
        for (const CatalogRow& row : kCatalog) m[row.label].push_back(row.curve);
        return m;
    }();
    return sets.at(label);
}

std::optional<ASetLabel> aset(CurveType c) {
    auto row = find_row(c);
    if (!row) return std::nullopt;
    return row->label;
}

namespace {

const std::vector<std::pair<CurveType, LinkDescriptor>> kLinkCatalog = {
    // Curves on a plane or a quadric (ample cases; no flop).
    {{0, 1}, {"P^2-bundle over P^1", std::nullopt, false, "classical"}},
    {{0, 2}, {"quadric threefold Q^3", std::nullopt, false, "classical"}},
    {{1, 3}, {"singular Fano threefold (E5 contraction of the plane)", std::nullopt, false, "classical"}},
    {{0, 3}, {"P^1-bundle over P^2 (bisecant fibres)", std::nullopt, false, "classical"}},
    {{1, 4}, {"del Pezzo fibration over P^1 (pencil of quadrics)", std::nullopt, false, "classical"}},
    {{0, 4}, {"V_5 in P^6, (-K)^3 = 40", std::nullopt, false, "classical"}},
    {{2, 5}, {"V_4 in P^5, (-K)^3 = 32", std::nullopt, false, "classical"}},
    {{4, 6}, {"terminal Fano threefold (E3/E4 contraction)", std::nullopt, false, "classical"}},
    // Curves on a cubic, ample for the general member (no flop).
    {{1, 5}, {"quadric Q in P^4", CurveType{1, 5}, false, "MM p.117; Pan L.4"}},
    {{3, 6}, {"P^3 (cubo-cubic transformation)", CurveType{3, 6}, false, "Katz"}},
    {{5, 7}, {"conic bundle (6-secant conics)", std::nullopt, false, "Isk; CS App. A"}},
    {{10, 9}, {"del Pezzo fibration of degree 3", std::nullopt, false, "classical"}},
    // Curves on a cubic, small anticanonical morphism (flop).
    {{0, 5}, {"P^3", std::nullopt, true, "CM Prop. 2.9; SR"}},
    {{0, 6}, {"Y_22 (Fano of genus 12)", std::nullopt, true, "T (2.8.1)"}},
    {{1, 6}, {"dP6 fibration", std::nullopt, true, "JPR2 Prop. 6.5(27)"}},
    {{2, 6}, {"conic bundle (6-secant conics)", std::nullopt, true, "JPR2 Thm. 7.14(16)"}},
    {{3, 7}, {"Y_16 (Fano of genus 9)", std::nullopt, true, "Isk (6.1); KPZ"}},
    {{4, 7}, {"dP5 fibration", std::nullopt, true, "JPR2 Prop. 6.5(28)"}},
    {{6, 8}, {"terminal Fano, (-K)^3 = 12 (E3 contraction)", std::nullopt, true, "CM 3.2 case 4"}},
    {{7, 8}, {"dP4 fibration", std::nullopt, true, "JPR2 Prop. 6.5(29)"}},
    {{9, 9}, {"terminal Fano, (-K)^3 = 21/2 (E5 contraction)", std::nullopt, true, "CM 3.3 case 3"}},
    // Curves on a quartic but no cubic (flop in every case).
    {{0, 7}, {"(0,7) in P^3", CurveType{0, 7}, true, "CM 90"}},
    {{1, 7}, {"(1,7) in X_22", CurveType{1, 7}, true, "CM 98"}},
    {{2, 7}, {"(0,5) in V_4", CurveType{0, 5}, true, "CM 103"}},
    {{2, 8}, {"(2,8) in P^3", CurveType{2, 8}, true, "CM 49"}},
    {{3, 8}, {"(3,8) in P^3", CurveType{3, 8}, true, "CM 75"}},
    {{4, 8}, {"(4,10) in V_5", CurveType{4, 10}, true, "CM 89"}},
    {{5, 8}, {"(5,8) in P^3", CurveType{5, 8}, true, "CM 99"}},
    {{6, 9}, {"(6,9) in P^3", CurveType{6, 9}, true, "CM 50"}},
    {{7, 9}, {"(0,3) in X_12", CurveType{0, 3}, true, "IP p.103"}},
    {{8, 9}, {"dP5 fibration", std::nullopt, true, "JPR2 Prop. 6.5(25)"}},
    {{10, 10}, {"(10,10) in P^3", CurveType{10, 10}, true, "CM 51"}},
    {{11, 10}, {"(11,10) in P^3", CurveType{11, 10}, true, "CM 76"}},
    {{14, 11}, {"(14,11) in P^3", CurveType{14, 11}, true, "CM 52"}},
};

}  // namespace

std::optional<LinkDescriptor> link_descriptor(CurveType c) {
    for (const auto& [curve, link] : kLinkCatalog) {
        if (curve == c) return link;
    }
    return std::nullopt;
}

ClassificationRecord classify(CurveType c) {
    checked_curve(c.g, c.d);
    ClassificationRecord rec;
    rec.curve = c;
    rec.k3 = k3(c);
    rec.dim_anti = dim_anticanonical(c);
    rec.label = aset(c);
    rec.link = link_descriptor(c);

    if (rec.label) {
        switch (*rec.label) {
            case ASetLabel::A0:
                rec.verdict = Verdict::never_weak_fano;
                rec.genericity = Genericity::always;
                rec.notes.push_back("a covering family of curves meets -K negatively on the forced surface");
                break;
            case ASetLabel::A1:
                rec.verdict = Verdict::fano_conditional;  // empty condition set: always Fano
                rec.anticanonical_type = AnticanonicalType::ample;
                rec.genericity = Genericity::always;
                break;
            case ASetLabel::A2:
                if (c == CurveType{3, 6}) {
                    rec.verdict = Verdict::weak_fano_unconditional;
                    rec.genericity = Genericity::always;
                    rec.notes.push_back("ample (not merely nef) exactly when there is no 4-secant line");
                } else {
                    rec.verdict = Verdict::fano_conditional;
                    rec.conditions = {SecantCondition::no_4_secant_line};
                    rec.genericity = Genericity::open_nonempty;
                    rec.notes.push_back("ample and nef coincide for this type: a 4-secant line defeats both");
                }
                rec.anticanonical_type = AnticanonicalType::ample;
                break;
            case ASetLabel::A3:
                rec.verdict = Verdict::weak_fano_conditional;
                rec.conditions = {SecantCondition::no_5_secant_line,
                                  SecantCondition::smooth_quartic_containment};
                rec.anticanonical_type = is_divisorial_pair(c) ? AnticanonicalType::divisorial
                                                               : AnticanonicalType::small;
                rec.genericity = Genericity::open_nonempty;
                break;
            case ASetLabel::A4:
                rec.verdict = Verdict::weak_fano_conditional;
                rec.conditions = {SecantCondition::no_5_secant_line,
                                  SecantCondition::no_9_secant_conic,
                                  SecantCondition::no_13_secant_cubic,
                                  SecantCondition::smooth_quartic_containment};
                rec.anticanonical_type = AnticanonicalType::small;
                rec.genericity = Genericity::open_nonempty;
                break;
        }
        if (c == CurveType{12, 10}) {
            // Residuals of the unique cubic against a pencil of quartics give a
            // pencil of 8-secant conics; the contraction is always divisorial.
            LiaisonWitness w;
            w.type = make_linkage(3, 4);
            w.residual = linkage_residual(c, w.type);
            w.secancy = union_secancy(c.g, w.residual.g, ci_genus(w.type));
            rec.liaison = w;
            rec.notes.push_back("a pencil of 8-secant conics sweeps the unique cubic through the curve");
        }
        if (c == CurveType{19, 12}) {
            rec.notes.push_back("complete intersection of the unique cubic with a quartic");
        }
        return rec;
    }

    if (c == CurveType{15, 11}) {
        // The unique cubic through the curve, cut against a quartic, leaves a
        // residual line; the union has genus 19, so the line is a 5-secant.
        rec.verdict = Verdict::never_weak_fano;
        rec.genericity = Genericity::always;
        LiaisonWitness w;
        w.type = make_linkage(3, 4);
        w.residual = linkage_residual(c, w.type);
        w.secancy = union_secancy(c.g, w.residual.g, ci_genus(w.type));
        rec.liaison = w;
        rec.notes.push_back("every curve of this type admits a 5-secant line");
        return rec;
    }

    if (rec.k3 <= 0) {
        rec.verdict = Verdict::never_weak_fano;
        rec.genericity = Genericity::always;
        rec.notes.push_back("(-K)^3 = " + std::to_string(rec.k3) + " is not positive, so -K is never big and nef");
        return rec;
    }

    if (c.g <= 14) {
        rec.verdict = Verdict::not_in_table;  // in range but no smooth curve of this type
        rec.genericity = Genericity::unknown;
    } else {
        rec.verdict = Verdict::out_of_range;
        rec.genericity = Genericity::unknown;
    }
    return rec;
}

namespace {

std::string possible_reason(const MoriPolynomial& p, int n) {
    return "P(" + std::to_string(n) + ") = " + std::to_string(p.eval(n)) + " > 0";
}

SecantVerdict analyze_degree(CurveType c, int surface_degree, int n) {
    SecantVerdict v;
    v.degree = n;
    const MoriPolynomial p = mori_polynomial(c);

    if (surface_degree <= 2) {
        // The curve is forced onto a plane or quadric, where every curve of
        // degree n meets it in at most 4n points.
        v.possible = false;
        v.reason = "the ambient surface of degree <= 2 caps secancy at 4n";
        return v;
    }

    const long long in_cubics = 12 - c.d;    // ceiling when the curve lies on a cubic
    const long long in_quartics = 16 - c.d;  // ceiling when it only lies on quartics

    if (surface_degree == 3) {
        if (n > in_cubics) {
            v.possible = false;
            v.reason = "a bad curve lies in every cubic through the curve, forcing degree <= " +
                       std::to_string(in_cubics);
            return v;
        }
        if (n == in_cubics) {
            // The union would be the full cubic-quartic intersection.
            if (n >= 2) {
                v.possible = false;
                v.reason = "complete-intersection residual meets the curve at most 3n+2 <= 4n times";
                return v;
            }
            long long res_g = c.g - 15;  // [3,4] residual line, d' = 1
            v.possible = res_g >= 0;
            v.reason = v.possible ? "residual line of the [3,4] intersection can be a 5-secant"
                                  : "the [3,4] residual line would have genus " + std::to_string(res_g);
            return v;
        }
        if (n == 2 && c.d < 9) {
            v.possible = false;
            v.reason = "the plane of a 9-secant conic would meet the curve in 9 > d points";
            return v;
        }
        v.possible = p.eval(n) > 0;
        v.reason = v.possible ? possible_reason(p, n)
                              : "P(" + std::to_string(n) + ") = " + std::to_string(p.eval(n)) +
                                    " leaves no room for a rational bad curve";
        return v;
    }

    // surface_degree == 4: the curve only lies on quartics, but a special
    // member may still sit on a cubic, so a degree 12-d bad curve has two
    // configurations (complete intersection with that cubic, or not).
    if (n > in_quartics) {
        v.possible = false;
        v.reason = "a bad curve lies in every quartic through the curve, forcing degree <= " +
                   std::to_string(in_quartics);
        return v;
    }
    if (n == in_quartics) {
        // Forced [4,4] complete intersection: residual genus g - 4d + 32 >= 2
        // caps the secancy at 4n + 2 - 2g' < 4n.
        v.possible = false;
        v.reason = "the [4,4] residual has genus >= 2, capping secancy below 4n";
        return v;
    }
    std::string ci_note;
    if (n == in_cubics) {
        if (n >= 2) {
            ci_note = "; a [3,4] complete-intersection configuration is capped at 3n+2 <= 4n";
        } else {
            long long res_g = c.g - 15;  // [3,4] residual line
            if (res_g >= 0) {
                v.possible = true;
                v.reason = "residual line of a [3,4] intersection can be a 5-secant";
                return v;
            }
            ci_note = "; the [3,4] residual line would have genus " + std::to_string(res_g);
        }
    }
    if (n == 2 && c.d < 9) {
        v.possible = false;
        v.reason = "the plane of a 9-secant conic would meet the curve in 9 > d points";
        return v;
    }
    v.possible = p.eval(n) > 0;
    v.reason = v.possible ? possible_reason(p, n)
                          : "P(" + std::to_string(n) + ") = " + std::to_string(p.eval(n)) +
                                " leaves no room for a rational bad curve" + ci_note;
    if (v.possible && n == 3) v.reason += "; the bad cubic must be a twisted cubic";
    return v;
}

}  // namespace

SecantAnalysis secant_possibility(CurveType c) {
    auto row = find_row(c);
    if (!row || (row->label != ASetLabel::A3 && row->label != ASetLabel::A4)) {
        throw unsupported_pair("secant_possibility: " + to_text(c) +
                               " is not in A3 or A4");
    }
    SecantAnalysis out;
    out.curve = c;
    for (int n = 1; n <= 3; ++n) {
        out.verdicts[n - 1] = analyze_degree(c, row->surface_degree, n);
    }
    return out;
}

}  // namespace wfano
