// Acceptance suite: every check prints one [PASS]/[FAIL] line.  Expected
// values are frozen literally here, independent of the library's embedded
// catalogs, so the two transcriptions guard each other.

#include <algorithm>
#include <array>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wfano/classification.hpp"
#include "wfano/curve_invariants.hpp"
#include "wfano/divisor_class.hpp"
#include "wfano/errors.hpp"
#include "wfano/lattice_model.hpp"
#include "wfano/points.hpp"
#include "wfano/surfaces.hpp"

using namespace wfano;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << "\n       " << detail;
    std::cout << "\n";
    if (!pass) ++g_failures;
}

using Pair = std::pair<long long, long long>;
using PairSet = std::set<Pair>;

const PairSet kA0{{6, 5}, {10, 6}, {8, 8}, {12, 9}};
const PairSet kA1{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}, {4, 6}};
const PairSet kA2{{1, 5}, {3, 6}, {5, 7}, {10, 9}};
const PairSet kA3{{0, 5}, {0, 6}, {1, 6}, {2, 6}, {3, 4}, {3, 7}, {4, 7},
                  {6, 7}, {6, 8}, {7, 8}, {9, 8}, {9, 9}, {12, 10}, {19, 12}};
const PairSet kA4{{0, 7}, {1, 7}, {2, 7}, {2, 8}, {3, 8}, {4, 8}, {5, 8},
                  {6, 9}, {7, 9}, {8, 9}, {10, 10}, {11, 10}, {14, 11}};

std::string pair_text(Pair p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

// --- criterion 1: partition of the classification table ---------------------

void criterion1() {
    std::array<PairSet, 5> got;
    for (long long g = 0; g <= 19; ++g) {
        for (long long d = 1; d <= 12; ++d) {
            auto rec = classify(CurveType{g, d});
            if (rec.label) got[static_cast<int>(*rec.label)].insert({g, d});
        }
    }
    std::ostringstream detail;
    bool pass = true;
    const std::array<const PairSet*, 5> expected{&kA0, &kA1, &kA2, &kA3, &kA4};
    for (int i = 0; i < 5; ++i) {
        if (got[i] != *expected[i]) {
            pass = false;
            detail << "A" << i << " mismatch;";
        }
    }
    long long total = got[0].size() + got[1].size() + got[2].size() + got[3].size() + got[4].size();
    if (total != 43) {
        pass = false;
        detail << " total " << total << " != 43";
    }
    report(1, "classification scan partitions the 43 pairs into 4/8/4/14/13 sets", pass,
           detail.str());
}

// --- criterion 2: the sixteen cubic cases -----------------------------------

struct CubicRow {
    SurfaceCategory category;
    long long g, d, k;
    std::array<long long, 6> m;
    long long four_secants;  // -1 for the ample rows
    long long dim;           // -1 where no bound is tabulated
};

const std::vector<CubicRow> kCubicRows = {
    {SurfaceCategory::fano, 1, 5, 3, {1, 1, 1, 1, 0, 0}, -1, 14},
    {SurfaceCategory::fano, 3, 6, 4, {1, 1, 1, 1, 1, 1}, -1, 12},
    {SurfaceCategory::fano, 5, 7, 6, {2, 2, 2, 2, 2, 1}, -1, 10},
    {SurfaceCategory::fano, 10, 9, 9, {3, 3, 3, 3, 3, 3}, -1, 7},
    {SurfaceCategory::weak_fano_small, 0, 5, 2, {1, 0, 0, 0, 0, 0}, 1, 13},
    {SurfaceCategory::weak_fano_small, 0, 6, 2, {0, 0, 0, 0, 0, 0}, 6, 9},
    {SurfaceCategory::weak_fano_small, 1, 6, 3, {1, 1, 1, 0, 0, 0}, 3, 10},
    {SurfaceCategory::weak_fano_small, 2, 6, 4, {2, 1, 1, 1, 1, 0}, 1, 11},
    {SurfaceCategory::weak_fano_small, 3, 7, 4, {1, 1, 1, 1, 1, 0}, 5, 8},
    {SurfaceCategory::weak_fano_small, 4, 7, 5, {2, 2, 1, 1, 1, 1}, 2, 9},
    {SurfaceCategory::weak_fano_small, 6, 8, 6, {2, 2, 2, 2, 1, 1}, 5, 7},
    {SurfaceCategory::weak_fano_small, 7, 8, 7, {3, 2, 2, 2, 2, 2}, 1, 8},
    {SurfaceCategory::weak_fano_small, 9, 9, 7, {2, 2, 2, 2, 2, 2}, 6, 6},
    {SurfaceCategory::weak_fano_divisorial, 5, 8, 6, {2, 2, 2, 2, 2, 0}, 10, -1},
    {SurfaceCategory::weak_fano_divisorial, 12, 10, 9, {3, 3, 3, 3, 3, 2}, 10, -1},
    {SurfaceCategory::weak_fano_divisorial, 19, 12, 12, {4, 4, 4, 4, 4, 4}, 27, -1},
};

void criterion2() {
    auto cases = enumerate_cubic_cases();
    std::ostringstream detail;
    bool pass = cases.size() == 16;
    if (!pass) detail << "got " << cases.size() << " cases;";
    for (size_t i = 0; pass && i < kCubicRows.size(); ++i) {
        const auto& want = kCubicRows[i];
        const auto& have = cases[i];
        std::vector<long long> wm(want.m.begin(), want.m.end());
        if (have.category != want.category || have.curve.g != want.g ||
            have.curve.d != want.d || have.source_class->deg_l != want.k ||
            have.source_class->mults != wm) {
            pass = false;
            detail << "row " << i << " is " << pair_text({have.curve.g, have.curve.d})
                   << " class " << to_text(*have.source_class) << ", expected "
                   << pair_text({want.g, want.d});
            break;
        }
        if (want.four_secants >= 0 && *have.four_secants != want.four_secants) {
            pass = false;
            detail << "row " << i << " has " << *have.four_secants << " 4-secants, expected "
                   << want.four_secants;
            break;
        }
        if (want.dim >= 0 && have.dim_anti_lower != want.dim) {
            pass = false;
            detail << "row " << i << " dim bound " << have.dim_anti_lower << ", expected "
                   << want.dim;
            break;
        }
    }
    report(2, "cubic enumeration reproduces all sixteen rows with counts and bounds", pass,
           detail.str());
}

// --- criterion 3: quadrisecant formula cross-check --------------------------

void criterion3() {
    std::ostringstream detail;
    bool pass = true;
    for (const auto& row : kCubicRows) {
        if (row.category == SurfaceCategory::fano) continue;
        long long formula = lebarz_quadrisecants(CurveType{row.g, row.d});
        if (formula != row.four_secants) {
            pass = false;
            detail << pair_text({row.g, row.d}) << " formula " << formula << " != lattice "
                   << row.four_secants << "; ";
        }
    }
    for (const auto& set : {kA1, kA2}) {
        for (Pair p : set) {
            long long formula = lebarz_quadrisecants(CurveType{p.first, p.second});
            if (formula != 0) {
                pass = false;
                detail << "count at " << pair_text(p) << " is " << formula << ", expected 0; ";
            }
        }
    }
    report(3, "quadrisecant formula matches the 12 lattice counts and vanishes on the ample sets",
           pass, detail.str());
}

// --- criterion 4: singular-quartic rows --------------------------------------

struct QuarticRow {
    long long g, d, k;
    std::array<long long, 12> m;
    long long conic, cubic;
};

const std::vector<QuarticRow> kQuarticRows = {
    {0, 7, 6, {3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0}, 6, 10},
    {1, 7, 6, {3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0, 0}, 6, 10},
    {2, 7, 6, {2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0, 0}, 6, 9},
    {2, 8, 7, {3, 3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0}, 7, 10},
    {3, 8, 7, {3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0}, 7, 10},
    {4, 8, 7, {3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0}, 7, 9},
    {5, 8, 7, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0}, 7, 8},
    {6, 9, 8, {3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0}, 7, 10},
    {7, 9, 8, {3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0}, 7, 9},
    {8, 9, 8, {3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0}, 6, 8},
    {10, 10, 9, {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1}, 7, 10},
    {11, 10, 9, {3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1}, 6, 9},
    {14, 11, 10, {3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2}, 6, 10},
};

void criterion4() {
    std::ostringstream detail;
    bool pass = true;
    for (const auto& row : kQuarticRows) {
        std::vector<long long> m(row.m.begin(), row.m.end());
        DivisorClass cls(row.k, m);
        long long msum = 0, max_m = 0, genus = (row.k - 1) * (row.k - 2) / 2;
        for (long long mi : m) {
            msum += mi;
            max_m = std::max(max_m, mi);
            genus -= mi * (mi - 1) / 2;
        }
        long long conic = row.k - m[10] - m[11];
        long long cubic = 2 * row.k - (m[7] + m[8] + m[9] + m[10] + m[11]);
        std::string tag = pair_text({row.g, row.d});
        if (msum != 3 * row.k - 1) { pass = false; detail << tag << " sum m; "; }
        if (row.d != row.k + 1) { pass = false; detail << tag << " degree; "; }
        if (genus != row.g) { pass = false; detail << tag << " genus; "; }
        if (max_m > 4) { pass = false; detail << tag << " line secancy; "; }
        if (conic != row.conic) { pass = false; detail << tag << " conic column; "; }
        if (cubic != row.cubic) { pass = false; detail << tag << " cubic column; "; }
        auto rep = classify_quartic_model(cls);
        if (!rep.admissible || rep.base.curve != CurveType{row.g, row.d}) {
            pass = false;
            detail << tag << " model verdict; ";
        }
        auto found = quartic_search(CurveType{row.g, row.d});
        if (std::find(found.begin(), found.end(), cls) == found.end()) {
            pass = false;
            detail << tag << " not found by search; ";
        }
    }
    report(4, "all thirteen singular-quartic rows verify and are recovered by the search", pass,
           detail.str());
}

// --- criterion 5: bad-curve possibility sets ---------------------------------

void criterion5() {
    std::ostringstream detail;
    bool pass = true;

    PairSet cubic_possible, conic_possible, line_impossible_a4;
    for (const auto& set : {kA3, kA4}) {
        for (Pair p : set) {
            auto a = secant_possibility(CurveType{p.first, p.second});
            if (a.verdicts[2].possible) cubic_possible.insert(p);
            if (a.verdicts[1].possible) conic_possible.insert(p);
        }
    }
    for (Pair p : kA4) {
        auto a = secant_possibility(CurveType{p.first, p.second});
        if (!a.verdicts[0].possible) line_impossible_a4.insert(p);
    }

    if (cubic_possible != PairSet{{0, 7}, {2, 8}, {3, 8}}) {
        pass = false;
        detail << "13-secant twisted-cubic set wrong; ";
    }
    if (conic_possible != PairSet{{6, 9}, {7, 9}}) {
        pass = false;
        detail << "9-secant conic set wrong; ";
    }
    if (line_impossible_a4 != PairSet{{14, 11}}) {
        pass = false;
        detail << "5-secant line exceptions wrong; ";
    }
    // (n-1)(n-9) expanded
    if (!(mori_polynomial(CurveType{14, 11}) == MoriPolynomial{1, -(1 + 9), 1 * 9})) {
        pass = false;
        detail << "P_{14,11} != (n-1)(n-9); ";
    }
    report(5, "secant possibility sets match and P_{14,11} = (n-1)(n-9)", pass, detail.str());
}

// --- criterion 6: plane / quadric / cone lists --------------------------------

void criterion6() {
    PairSet fano, divisorial, quadric_not_nef;
    auto add = [](PairSet& s, const SurfaceClassification& c) {
        s.insert({c.curve.g, c.curve.d});
    };
    for (long long d = 1; d <= 10; ++d) {
        auto s = classify_plane(d);
        if (s.category == SurfaceCategory::fano) add(fano, s);
        if (s.category == SurfaceCategory::weak_fano_divisorial) add(divisorial, s);
    }
    for (long long a = 2; a <= 20; ++a) {
        for (long long b = 1; b <= a; ++b) {
            auto s = classify_quadric(a, b);
            if (s.category == SurfaceCategory::fano) add(fano, s);
            if (s.category == SurfaceCategory::weak_fano_divisorial) add(divisorial, s);
            if (s.category == SurfaceCategory::not_nef && 4 * s.curve.d - 30 <= s.curve.g &&
                s.curve.g <= 14) {
                add(quadric_not_nef, s);
            }
        }
    }
    add(fano, classify_cone(2, 1));
    for (long long a = 3; a <= 20; ++a) {
        for (long long e = 0; e <= 1; ++e) {
            auto s = classify_cone(a, e);
            if (s.category == SurfaceCategory::fano) add(fano, s);
            if (s.category == SurfaceCategory::weak_fano_divisorial) add(divisorial, s);
        }
    }

    std::ostringstream detail;
    bool pass = true;
    if (fano != kA1) {
        pass = false;
        detail << "ample list wrong; ";
    }
    if (divisorial != PairSet{{3, 4}, {0, 5}, {3, 6}, {6, 7}, {9, 8}}) {
        pass = false;
        detail << "divisorial list wrong; ";
    }
    if (quadric_not_nef != PairSet{{0, 6}, {0, 7}, {4, 7}, {5, 8}, {6, 9},
                                   {8, 8}, {10, 9}, {12, 9}, {12, 10}, {14, 11}}) {
        pass = false;
        detail << "quadric not-nef list wrong; ";
    }
    report(6, "plane/quadric/cone classifiers reproduce the three catalogue lists", pass,
           detail.str());
}

// --- criterion 7: spot invariants ---------------------------------------------

void criterion7() {
    std::ostringstream detail;
    bool pass = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << what << "; ";
        }
    };
    expect(k3(CurveType{6, 8}) == 10, "k3(6,8)");
    expect(k3(CurveType{0, 4}) == 30, "k3(0,4)");
    expect(ruled_contraction_k3(30, 1) == 40, "ruled_contraction_k3(30,1)");
    expect(ruled_contraction_k3(26, 0) == 32, "ruled_contraction_k3(26,0)");

    auto r1511 = classify(CurveType{15, 11});
    expect(r1511.verdict == Verdict::never_weak_fano, "(15,11) verdict");
    expect(r1511.liaison && r1511.liaison->residual == CurveType{0, 1} &&
               r1511.liaison->secancy == 5,
           "(15,11) liaison witness");

    auto r1210 = classify(CurveType{12, 10});
    expect(r1210.anticanonical_type == AnticanonicalType::divisorial, "(12,10) divisorial");
    expect(r1210.liaison && r1210.liaison->residual == CurveType{0, 2} &&
               r1210.liaison->secancy == 8,
           "(12,10) liaison witness");
    report(7, "spot invariants", pass, detail.str());
}

// --- criterion 8: property suites ----------------------------------------------

void criterion8() {
    std::ostringstream detail;
    bool pass = true;
    std::mt19937 rng(20120301);

    {  // normalization invariance, 10^4 random classes
        std::uniform_int_distribution<long long> kd(-20, 20), md(-10, 10);
        const DivisorClass minus_k = -canonical_class(6);
        for (int i = 0; i < 10000 && pass; ++i) {
            std::vector<long long> m(6);
            for (auto& v : m) v = md(rng);
            DivisorClass c(kd(rng), m);
            DivisorClass n = cremona_normalize(c);
            if (cremona_normalize(n) != n || intersect(c, minus_k) != intersect(n, minus_k) ||
                adjunction_genus(c) != adjunction_genus(n)) {
                pass = false;
                detail << "normalization broke at " << to_text(c) << "; ";
            }
        }
    }

    {  // linkage involution, 10^3 feasible inputs
        std::uniform_int_distribution<long long> gd(0, 40), dd(1, 20), nd(1, 6);
        int done = 0;
        while (done < 1000 && pass) {
            CurveType c{gd(rng), dd(rng)};
            LinkageType t = make_linkage(nd(rng), nd(rng));
            CurveType r;
            try {
                r = linkage_residual(c, t);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (r.g < 0 || r.d < 1) continue;
            ++done;
            if (linkage_residual(r, t) != c) {
                pass = false;
                detail << "linkage involution broke at " << to_text(c) << "; ";
            }
        }
    }

    {  // adjunction parity on every enumerated class
        auto parity_ok = [](const DivisorClass& d) {
            long long s = self_intersection(d) + intersect(d, canonical_class(d.n_points()));
            return s % 2 == 0;
        };
        for (const auto& line : twenty_seven_lines()) {
            if (!parity_ok(line)) { pass = false; detail << "parity (27 lines); "; }
        }
        for (const auto& s : enumerate_cubic_cases()) {
            if (!parity_ok(*s.source_class)) { pass = false; detail << "parity (cubic rows); "; }
        }
        const auto& q = quartic_model_classes();
        for (const auto& group : {q.lines, q.conics, q.twisted_cubics}) {
            for (const auto& d : group) {
                if (!parity_ok(d)) { pass = false; detail << "parity (quartic classes); "; }
            }
        }
        for (const auto& row : quartic_catalog()) {
            if (!parity_ok(row.cls)) { pass = false; detail << "parity (quartic rows); "; }
        }
    }

    {  // incidence predicates invariant under scaling and permutation, 10^2 configs
        std::uniform_int_distribution<int> coord(-4, 4), npts(4, 7), sc(1, 9);
        auto signature = [](const IncidenceReport& rep, const std::vector<int>& relabel) {
            std::set<std::set<int>> tri, quint;
            for (auto& t : rep.collinear_triples)
                tri.insert({relabel[t[0]], relabel[t[1]], relabel[t[2]]});
            for (auto& qq : rep.coplanar_quintuples)
                quint.insert({relabel[qq[0]], relabel[qq[1]], relabel[qq[2]], relabel[qq[3]],
                              relabel[qq[4]]});
            return std::pair(tri, quint);
        };
        int done = 0;
        while (done < 100 && pass) {
            int n = npts(rng);
            std::vector<std::vector<std::string>> coords(n, std::vector<std::string>(4));
            for (auto& p : coords)
                for (auto& c : p) c = std::to_string(coord(rng));
            PointConfig cfg;
            try {
                cfg = make_point_config(coords);
            } catch (const parse_error&) {
                continue;
            }
            ++done;
            auto base = incidence_check(cfg);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<std::string>> scaled(n);
            for (int i = 0; i < n; ++i) {
                int num = sc(rng), den = sc(rng), sign = (rng() % 2 == 0) ? 1 : -1;
                for (const auto& c : coords[perm[i]]) {
                    scaled[i].push_back(std::to_string(std::stoll(c) * sign * num) + "/" +
                                        std::to_string(den));
                }
            }
            auto moved = incidence_check(make_point_config(scaled));
            std::vector<int> identity(n);
            for (int i = 0; i < n; ++i) identity[i] = i;
            if (signature(base, identity) != signature(moved, perm)) {
                pass = false;
                detail << "incidence invariance broke; ";
            }
        }
    }
    report(8, "property suites (normalization, linkage involution, parity, incidence)", pass,
           detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << g_failures << " criterion(s) failed\n";
    }
    return g_failures;
}
