#include "tempo/zone.hpp"

#include <cmath>
#include <stdexcept>

namespace tempo {

bool Bound::is_infinite() const { return std::isinf(value); }

Bound bound_add(const Bound& x, const Bound& y) {
    if (x.is_infinite() && y.is_infinite() && (x.value > 0) != (y.value > 0)) {
        throw std::invalid_argument("cannot add opposite infinite bounds");
    }
    return Bound{x.value + y.value, x.strict || y.strict};
}

bool Range::contains(double x) const {
    const bool above = lower.strict ? x > lower.value : x >= lower.value;
    const bool below = upper.strict ? x < upper.value : x <= upper.value;
    return above && below;
}

MatchZone MatchZone::empty_zone() {
    MatchZone z;
    z.empty = true;
    z.t = z.t_prime = z.diff = Range{Bound{0.0, true}, Bound{0.0, true}};
    return z;
}

MatchZone MatchZone::whole() {
    MatchZone z;
    z.t.lower = Bound{0.0, false};
    z.diff.lower = Bound{0.0, true};
    return z;
}

namespace {

// Internal 3x3 difference-bound form over x0 = 0, x1 = t, x2 = t_prime.
// m[i][j] is an upper bound on x_i - x_j; +inf means unconstrained.

Bound negate_lower(const Bound& lower) {
    return Bound{-lower.value, lower.strict};
}

Bound lower_from_entry(const Bound& entry) {
    return Bound{-entry.value + 0.0, entry.strict};  // +0.0 clears -0.0
}

Bound clean_upper(const Bound& entry) {
    return Bound{entry.value + 0.0, entry.strict};
}

// True if a is a tighter upper bound than b.
bool tighter(const Bound& a, const Bound& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.strict && !b.strict;
}

// min for DBM entries; +inf legs contribute no constraint.
Bound entry_min(const Bound& a, const Bound& b) { return tighter(a, b) ? a : b; }

Bound entry_add(const Bound& a, const Bound& b) {
    if (a.value == std::numeric_limits<double>::infinity() ||
        b.value == std::numeric_limits<double>::infinity()) {
        return Bound::infinite();
    }
    return Bound{a.value + b.value, a.strict || b.strict};
}

}  // namespace

MatchZone normalize_zone(const MatchZone& z) {
    if (z.empty) {
        return MatchZone::empty_zone();
    }

    Bound m[3][3];
    m[0][0] = m[1][1] = m[2][2] = Bound{0.0, false};
    m[1][0] = z.t.upper;
    m[0][1] = negate_lower(z.t.lower);
    m[2][0] = z.t_prime.upper;
    m[0][2] = negate_lower(z.t_prime.lower);
    m[2][1] = z.diff.upper;
    m[1][2] = negate_lower(z.diff.lower);

    // A -inf entry is an unsatisfiable constraint on its own.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (m[i][j].value == -std::numeric_limits<double>::infinity()) {
                return MatchZone::empty_zone();
            }
        }
    }

    // Shortest paths over three nodes: one Floyd-Warshall sweep is exact.
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m[i][j] = entry_min(m[i][j], entry_add(m[i][k], m[k][j]));
            }
        }
    }

    for (int i = 0; i < 3; ++i) {
        if (m[i][i].value < 0.0 || (m[i][i].value == 0.0 && m[i][i].strict)) {
            return MatchZone::empty_zone();
        }
    }

    MatchZone out;
    out.t = Range{lower_from_entry(m[0][1]), clean_upper(m[1][0])};
    out.t_prime = Range{lower_from_entry(m[0][2]), clean_upper(m[2][0])};
    out.diff = Range{lower_from_entry(m[1][2]), clean_upper(m[2][1])};
    return out;
}

bool zone_contains(const MatchZone& z, double t, double t_prime) {
    if (z.empty) {
        return false;
    }
    return z.t.contains(t) && z.t_prime.contains(t_prime) && z.diff.contains(t_prime - t);
}

bool zone_equal(const MatchZone& a, const MatchZone& b) {
    if (a.empty || b.empty) {
        return a.empty == b.empty;
    }
    return a.t == b.t && a.t_prime == b.t_prime && a.diff == b.diff;
}

namespace {

int compare_bound(const Bound& a, const Bound& b) {
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.strict != b.strict) return a.strict ? -1 : 1;
    return 0;
}

int compare_range(const Range& a, const Range& b) {
    if (int c = compare_bound(a.lower, b.lower)) return c;
    return compare_bound(a.upper, b.upper);
}

}  // namespace

bool zone_less(const MatchZone& a, const MatchZone& b) {
    if (a.empty != b.empty) return a.empty;
    if (a.empty) return false;
    if (int c = compare_range(a.t, b.t)) return c < 0;
    if (int c = compare_range(a.t_prime, b.t_prime)) return c < 0;
    return compare_range(a.diff, b.diff) < 0;
}

}  // namespace tempo
