#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wfano/curve_invariants.hpp"

namespace wfano {

enum class ASetLabel { A0, A1, A2, A3, A4 };

std::string to_text(ASetLabel a);

/// Members of one of the five sets partitioning the classification table.
const std::vector<CurveType>& aset_members(ASetLabel label);

/// Label of c when it is one of the 43 catalogued pairs.
std::optional<ASetLabel> aset(CurveType c);

/// One row of the master table: the pair, the minimal degree of a surface
/// containing a general curve of that type (1..4), and its set.
struct CatalogRow {
    CurveType curve;
    int surface_degree;
    ASetLabel label;
};

const std::vector<CatalogRow>& curve_catalog();

enum class Verdict {
    fano_conditional,        // Fano exactly when the listed conditions hold
    weak_fano_conditional,   // weak Fano exactly when the listed conditions hold
    weak_fano_unconditional,
    never_weak_fano,
    out_of_range,            // outside the catalogued range; no claim
    not_in_table,            // in range, but no smooth curve of this type
};

std::string to_text(Verdict v);

enum class SecantCondition {
    no_4_secant_line,
    no_5_secant_line,
    no_9_secant_conic,
    no_13_secant_cubic,
    smooth_quartic_containment,
};

std::string to_text(SecantCondition c);

enum class AnticanonicalType { ample, small, divisorial };

std::string to_text(AnticanonicalType t);

enum class Genericity { always, open_nonempty, unknown };

std::string to_text(Genericity g);

/// End product of the two-step birational surgery starting from the blow-up.
struct LinkDescriptor {
    std::string target;
    std::optional<CurveType> target_curve;
    bool has_flop = false;
    std::string source_citation;
};

/// Residual-curve argument attached to the special liaison cases.
struct LiaisonWitness {
    LinkageType type;
    CurveType residual;
    long long secancy = 0;  // intersection of the residual with the curve
};

struct ClassificationRecord {
    CurveType curve;
    std::optional<ASetLabel> label;
    long long k3 = 0;
    long long dim_anti = 0;
    Verdict verdict = Verdict::out_of_range;
    std::vector<SecantCondition> conditions;
    std::optional<AnticanonicalType> anticanonical_type;  // for the generic member
    Genericity genericity = Genericity::unknown;
    std::optional<LinkDescriptor> link;
    std::optional<LiaisonWitness> liaison;
    std::vector<std::string> notes;
};

/// Full verdict for a (g,d) pair; throws invalid_class for g < 0 or d < 1.
ClassificationRecord classify(CurveType c);

struct SecantVerdict {
    int degree = 1;  // candidate bad curve degree n; secancy threshold 4n+1
    bool possible = false;
    std::string reason;
};

struct SecantAnalysis {
    CurveType curve;
    std::array<SecantVerdict, 3> verdicts;  // n = 1, 2, 3
};

/// Possibility analysis for (4n+1)-secant degree-n curves, n = 1..3, for
/// pairs in A3 u A4; throws unsupported_pair elsewhere.
SecantAnalysis secant_possibility(CurveType c);

/// Embedded link catalog; absent for pairs with no catalogued link (the
/// crossed-out pairs and the divisorial contractions).
std::optional<LinkDescriptor> link_descriptor(CurveType c);

}  // namespace wfano
