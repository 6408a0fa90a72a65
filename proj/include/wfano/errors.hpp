#pragma once

#include <stdexcept>
#include <string>

namespace wfano {

// Exact arithmetic everywhere: a failed precondition or a non-integral
// division is a correctness signal, never something to round away.

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_class : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degree_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct infeasible_linkage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct inconsistent_genera : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Riemann-Roch style bounds refuse inputs outside their hypotheses instead of
// silently extrapolating.
struct hypothesis_not_met : std::domain_error {
    using std::domain_error::domain_error;
};

struct quadric_containment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_bidegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_cone_class : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct non_smooth_image : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_pair : std::domain_error {
    using std::domain_error::domain_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Checked exact division; remainder != 0 throws.
inline long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw parity_error(std::string(what) + ": " + std::to_string(num) +
                           " is not divisible by " + std::to_string(den));
    }
    return num / den;
}

}  // namespace wfano
