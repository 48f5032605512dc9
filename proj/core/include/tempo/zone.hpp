#ifndef TEMPO_ZONE_HPP
#define TEMPO_ZONE_HPP

#include <limits>
#include <string>

namespace tempo {

/// An extended-real bound with strictness. Interpretation depends on the
/// side it is used on: as an upper bound, (v, strict) means `x < v` and
/// (v, non-strict) means `x <= v`; as a lower bound, `x > v` / `x >= v`.
/// Infinite values are always strict.
struct Bound {
    double value = 0.0;
    bool strict = false;

    static constexpr Bound infinite() {
        return Bound{std::numeric_limits<double>::infinity(), true};
    }
    static constexpr Bound minus_infinite() {
        return Bound{-std::numeric_limits<double>::infinity(), true};
    }

    bool is_infinite() const;

    friend bool operator==(const Bound&, const Bound&) = default;
};

/// Sum of two bounds: values add, strictness joins with OR.
/// Throws std::invalid_argument on (+inf) + (-inf).
Bound bound_add(const Bound& x, const Bound& y);

/// Lower/upper bound pair for one quantity.
struct Range {
    Bound lower = Bound::minus_infinite();
    Bound upper = Bound::infinite();

    /// True iff `x` satisfies both bounds with their strictness.
    bool contains(double x) const;

    friend bool operator==(const Range&, const Range&) = default;
};

/// One element of a match set: the conjunction of bounds on the interval
/// start `t`, the interval end `t_prime`, and the duration `t_prime - t`.
/// A zone is either flagged empty or carries six mutually consistent bounds
/// (after normalize_zone).
struct MatchZone {
    Range t;
    Range t_prime;
    Range diff;
    bool empty = false;

    /// The canonical empty zone.
    static MatchZone empty_zone();

    /// Unconstrained zone seeded with the match-set invariants t >= 0 and
    /// t_prime - t > 0.
    static MatchZone whole();

    friend bool operator==(const MatchZone&, const MatchZone&) = default;
};

/// Tightest equivalent form of `z`: closes the three quantities under the
/// triangle rules of the relation t_prime = t + diff, and flags the zone
/// empty when any lower bound crosses its upper bound. Idempotent.
MatchZone normalize_zone(const MatchZone& z);

/// Pointwise membership. Requires a normalized, non-empty zone.
bool zone_contains(const MatchZone& z, double t, double t_prime);

/// Bound-for-bound equality of normalized zones. The empty zone equals only
/// the empty zone.
bool zone_equal(const MatchZone& a, const MatchZone& b);

/// Deterministic total order on normalized zones, for dedup sets and sorted
/// comparisons.
bool zone_less(const MatchZone& a, const MatchZone& b);

}  // namespace tempo

#endif  // TEMPO_ZONE_HPP
