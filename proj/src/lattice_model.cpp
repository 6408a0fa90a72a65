#include "wfano/lattice_model.hpp"

#include <algorithm>
#include <functional>

#include "wfano/errors.hpp"

namespace wfano {

DivisorClass canonical_class(int n) {
    return DivisorClass(-3, std::vector<long long>(n, -1));
}

LatticeModel LatticeModel::cubic() {
    LatticeModel m;
    m.kind = ModelKind::cubic;
    m.n = 6;
    m.canonical = canonical_class(6);
    m.hyperplane = -m.canonical;  // H = -K, H.H = 3
    return m;
}

LatticeModel LatticeModel::rational_quartic() {
    LatticeModel m;
    m.kind = ModelKind::rational_quartic;
    m.n = 12;
    m.canonical = canonical_class(12);
    m.hyperplane = DivisorClass(4, std::vector<long long>(12, 1));
    m.elliptic = DivisorClass(3, std::vector<long long>(12, 1));  // Gamma = -K
    return m;
}

LatticeModel LatticeModel::generic(int n) {
    if (n < 0) throw invalid_class("generic model needs n >= 0");
    LatticeModel m;
    m.kind = ModelKind::generic;
    m.n = n;
    m.canonical = canonical_class(n);
    return m;
}

long long adjunction_genus(const DivisorClass& d, const LatticeModel& model) {
    if (d.n_points() != model.n) {
        throw dimension_mismatch("adjunction_genus: class has " +
                                 std::to_string(d.n_points()) +
                                 " points, model has " + std::to_string(model.n));
    }
    long long s = self_intersection(d) + intersect(d, model.canonical);
    if (s % 2 != 0) throw invalid_class("adjunction_genus: D.D + D.K is odd");
    return s / 2 + 1;
}

long long adjunction_genus(const DivisorClass& d) {
    return adjunction_genus(d, LatticeModel::generic(d.n_points()));
}

namespace {

DivisorClass exceptional(int n, int i) {
    // E_i as a stored class: a = 0, b_i = -1 (class convention a*L - sum b E).
    DivisorClass d(0, std::vector<long long>(n, 0));
    d.mults[i] = -1;
    return d;
}

DivisorClass line_between(int n, int i, int j) {
    DivisorClass d(1, std::vector<long long>(n, 0));
    d.mults[i] = 1;
    d.mults[j] = 1;
    return d;
}

DivisorClass conic_missing(int n, int i) {
    // 2L - sum_{j != i} E_j
    DivisorClass d(2, std::vector<long long>(n, 1));
    d.mults[i] = 0;
    return d;
}

}  // namespace

const std::vector<DivisorClass>& twenty_seven_lines() {
    static const std::vector<DivisorClass> lines = [] {
        std::vector<DivisorClass> out;
        out.reserve(27);
        for (int i = 0; i < 6; ++i) out.push_back(exceptional(6, i));
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) out.push_back(line_between(6, i, j));
        for (int i = 0; i < 6; ++i) out.push_back(conic_missing(6, i));
        return out;
    }();
    return lines;
}

DivisorClass cremona_normalize(DivisorClass c) {
    if (c.n_points() != 6) throw invalid_class("cremona_normalize: expects n = 6");
    auto resort = [&] { std::sort(c.mults.begin(), c.mults.end(), std::greater<>()); };
    resort();
    while (c.deg_l < c.mults[0] + c.mults[1] + c.mults[2]) {
        long long k = c.deg_l;
        long long m1 = c.mults[0], m2 = c.mults[1], m3 = c.mults[2];
        c.deg_l = 2 * k - m1 - m2 - m3;
        c.mults[0] = k - m2 - m3;
        c.mults[1] = k - m1 - m3;
        c.mults[2] = k - m1 - m2;
        resort();
    }
    return c;
}

namespace {

// Depth-first search for a multiset of line classes summing to the target.
// budget = target.(-K); each line consumes exactly 1 of it.  Every line
// contributes 0..2 to deg_l and -1..1 to each multiplicity, which gives the
// reachability bounds used for pruning.
bool effective_dfs(const DivisorClass& target, long long budget, size_t idx) {
    if (target.is_zero()) return true;
    if (budget <= 0) return false;
    if (target.deg_l < 0 || target.deg_l > 2 * budget) return false;
    for (long long b : target.mults) {
        if (b > budget || b < -budget) return false;
    }
    const auto& lines = twenty_seven_lines();
    if (idx == lines.size()) return false;
    DivisorClass rest = target;
    for (long long c = 0; c <= budget; ++c) {
        if (effective_dfs(rest, budget - c, idx + 1)) return true;
        if (c < budget) rest = rest - lines[idx];
    }
    return false;
}

}  // namespace

bool is_effective_cubic(const DivisorClass& d) {
    if (d.n_points() != 6) throw invalid_class("is_effective_cubic: expects n = 6");
    const DivisorClass minus_k = -canonical_class(6);
    long long budget = intersect(d, minus_k);
    if (budget < 0) return false;
    if (budget == 0) return d.is_zero();
    return effective_dfs(d, budget, 0);
}

const QuarticModelClasses& quartic_model_classes() {
    static const QuarticModelClasses cls = [] {
        QuarticModelClasses out;
        for (int i = 0; i < 12; ++i) out.lines.push_back(exceptional(12, i));
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j) out.conics.push_back(line_between(12, i, j));
        // 2L - E_{i1} - ... - E_{i5} over the C(12,5) = 792 five-subsets,
        // lexicographic.
        std::vector<int> pick(5);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == 5) {
                DivisorClass d(2, std::vector<long long>(12, 0));
                for (int p : pick) d.mults[p] = 1;
                out.twisted_cubics.push_back(d);
                return;
            }
            for (int i = start; i < 12; ++i) {
                pick[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        return out;
    }();
    return cls;
}

}  // namespace wfano
