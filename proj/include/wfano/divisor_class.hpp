#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wfano {

/// Integer divisor class a*L - sum b_i * E_i on the blow-up of the plane at
/// n points.  Stored as (a; b_1..b_n); a positive b_i means multiplicity b_i
/// at the i-th point.  Values are immutable by convention; all operations
/// are pure.
struct DivisorClass {
    long long deg_l = 0;            // coefficient a of L
    std::vector<long long> mults;   // b_1..b_n

    DivisorClass() = default;
    DivisorClass(long long a, std::vector<long long> b)
        : deg_l(a), mults(std::move(b)) {}

    int n_points() const { return static_cast<int>(mults.size()); }

    bool operator==(const DivisorClass&) const = default;
    auto operator<=>(const DivisorClass&) const = default;

    bool is_zero() const;
};

/// Diagonal pairing: d1.d2 = a1*a2 - sum b1_i*b2_i.
/// Throws dimension_mismatch when the point counts differ.
long long intersect(const DivisorClass& d1, const DivisorClass& d2);

inline long long self_intersection(const DivisorClass& d) { return intersect(d, d); }

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator*(long long c, const DivisorClass& x);
DivisorClass operator-(const DivisorClass& x);

/// Text encoding "k;m1,m2,...,mn" with signed decimal integers.
std::string to_text(const DivisorClass& d);
DivisorClass parse_class(std::string_view text);

}  // namespace wfano
