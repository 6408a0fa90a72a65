#pragma once

#include <optional>
#include <vector>

#include "wfano/divisor_class.hpp"

namespace wfano {

enum class ModelKind { cubic, rational_quartic, generic };

/// Fixed named classes of a plane blow-up model.  Two concrete models are
/// used throughout:
///   cubic            n = 6,  K = -3L + sum E_i,  H = -K  (H.H = 3)
///   rational_quartic n = 12, K as above, H = 4L - sum E_i (H.H = 4),
///                    plus the contracted elliptic class Gamma = 3L - sum E_i
///                    (Gamma.Gamma = -3, H.Gamma = 0).
struct LatticeModel {
    ModelKind kind;
    int n;
    DivisorClass canonical;                  // K
    std::optional<DivisorClass> hyperplane;  // H (cubic / rational quartic)
    std::optional<DivisorClass> elliptic;    // Gamma (rational quartic only)

    static LatticeModel cubic();
    static LatticeModel rational_quartic();
    static LatticeModel generic(int n);
};

/// Canonical class -3L + sum E_i of an n-point blow-up, as stored data.
DivisorClass canonical_class(int n);

/// Adjunction: g = (D.D + D.K)/2 + 1.  Throws parity_error when D.D + D.K is
/// odd (cannot happen for integer classes on these lattices, but checked).
long long adjunction_genus(const DivisorClass& d, const LatticeModel& model);
long long adjunction_genus(const DivisorClass& d);

/// The 27 (-1)-classes on the cubic model, in fixed order: E_1..E_6, then
/// L-E_i-E_j for i<j lexicographic, then 2L-E_1-...-E_6+E_i for i = 1..6.
const std::vector<DivisorClass>& twenty_seven_lines();

/// Canonical representative under sorting and the quadratic move
///   (k; m1..m6) -> (2k-m1-m2-m3; k-m2-m3, k-m1-m3, k-m1-m2, m4, m5, m6)
/// applied while k < m1+m2+m3 on the sorted vector.  k strictly decreases at
/// each move and the orbit is finite, so this terminates.  Preserves
/// d = 3k - sum m and the adjunction genus.
DivisorClass cremona_normalize(DivisorClass c);

/// True iff d is a non-negative integer combination of the 27 line classes.
/// Each line class pairs to 1 with -K, so any decomposition of d uses exactly
/// d.(-K) summands; the search is bounded by that budget.
bool is_effective_cubic(const DivisorClass& d);

struct QuarticModelClasses {
    std::vector<DivisorClass> lines;           // 12: E_i
    std::vector<DivisorClass> conics;          // 66: L - E_i - E_j
    std::vector<DivisorClass> twisted_cubics;  // 792: 2L - E_{i1} - ... - E_{i5}
};

/// Low-degree curve classes on the singular rational quartic model (n = 12).
/// Every class pairs to 1 with Gamma, and to 1 / 2 / 3 with H respectively.
const QuarticModelClasses& quartic_model_classes();

}  // namespace wfano
