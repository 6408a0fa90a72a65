#include "wfano/divisor_class.hpp"

#include <algorithm>
#include <charconv>

#include "wfano/errors.hpp"

namespace wfano {

bool DivisorClass::is_zero() const {
    if (deg_l != 0) return false;
    return std::all_of(mults.begin(), mults.end(), [](long long m) { return m == 0; });
}

long long intersect(const DivisorClass& d1, const DivisorClass& d2) {
    if (d1.n_points() != d2.n_points()) {
        throw dimension_mismatch("intersect: classes live on blow-ups of " +
                                 std::to_string(d1.n_points()) + " and " +
                                 std::to_string(d2.n_points()) + " points");
    }
    long long acc = d1.deg_l * d2.deg_l;
    for (int i = 0; i < d1.n_points(); ++i) acc -= d1.mults[i] * d2.mults[i];
    return acc;
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.n_points() != y.n_points()) throw dimension_mismatch("operator+: point counts differ");
    DivisorClass r = x;
    r.deg_l += y.deg_l;
    for (int i = 0; i < r.n_points(); ++i) r.mults[i] += y.mults[i];
    return r;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.n_points() != y.n_points()) throw dimension_mismatch("operator-: point counts differ");
    DivisorClass r = x;
    r.deg_l -= y.deg_l;
    for (int i = 0; i < r.n_points(); ++i) r.mults[i] -= y.mults[i];
    return r;
}

DivisorClass operator*(long long c, const DivisorClass& x) {
    DivisorClass r = x;
    r.deg_l *= c;
    for (auto& m : r.mults) m *= c;
    return r;
}

DivisorClass operator-(const DivisorClass& x) { return -1 * x; }

std::string to_text(const DivisorClass& d) {
    std::string s = std::to_string(d.deg_l);
    s += ';';
    for (int i = 0; i < d.n_points(); ++i) {
        if (i) s += ',';
        s += std::to_string(d.mults[i]);
    }
    return s;
}

namespace {

long long parse_int(std::string_view tok) {
    // std::from_chars accepts a leading '-' but not '+' or blanks.
    size_t begin = tok.find_first_not_of(" \t");
    size_t end = tok.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw parse_error("empty integer in class text");
    tok = tok.substr(begin, end - begin + 1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw parse_error("bad integer '" + std::string(tok) + "' in class text");
    }
    return value;
}

}  // namespace

DivisorClass parse_class(std::string_view text) {
    size_t semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw parse_error("class text must look like \"k;m1,...,mn\"");
    }
    DivisorClass d;
    d.deg_l = parse_int(text.substr(0, semi));
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        d.mults.push_back(parse_int(tok));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (d.mults.empty()) throw parse_error("class text has no multiplicities");
    return d;
}

}  // namespace wfano
