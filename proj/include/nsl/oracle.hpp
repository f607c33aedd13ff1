#pragma once

// Brute-force reference computations over explicit finite integer ranges.
// Nothing here depends on the windowed representation in nsl/ideal.hpp except
// the conversion helpers at the bottom.

#include <span>
#include <utility>
#include <vector>

#include "nsl/error.hpp"

namespace nsl {
class RelativeIdeal;
}

namespace nsl::oracle {

/// Membership of S on [0, bound], bound = (smallest generator) * (largest
/// generator), which exceeds the Frobenius number of any gcd-1 set.
struct OracleSemigroup {
    std::vector<Int> generators;
    std::vector<bool> member;
    Int frobenius = -1;

    bool contains(Int z) const {
        if (z < 0) return false;
        if (z >= static_cast<Int>(member.size())) return true;
        return member[static_cast<std::size_t>(z)];
    }
    std::vector<Int> gaps() const;
};

OracleSemigroup oracle_semigroup(std::span<const Int> generators);

/// X ∩ [lo, hi] for a set X with no elements below lo and every integer
/// above hi.
struct ExplicitSet {
    Int lo = 0;
    Int hi = -1;
    std::vector<bool> member;

    bool contains(Int z) const {
        if (z < lo) return false;
        if (z > hi) return true;
        return member[static_cast<std::size_t>(z - lo)];
    }
    /// Smallest element; hi + 1 when the explicit range holds none.
    Int minimum() const;
    /// Smallest c with every integer ≥ c in the set.
    Int conductor() const;
    std::vector<Int> elements() const;

    friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;
};

/// [-2(F+2), 3(F+2)].
std::pair<Int, Int> default_range(const OracleSemigroup& S);

ExplicitSet explicit_semigroup(const OracleSemigroup& S, Int lo, Int hi);
ExplicitSet explicit_from_generators(const OracleSemigroup& S, std::span<const Int> generators,
                                     Int lo, Int hi);

/// {x + t : x ∈ X} re-expressed over [lo, hi]. Throws WindowTooNarrow if the
/// shifted set does not fit.
ExplicitSet shifted(const ExplicitSet& X, Int t, Int lo, Int hi);

/// Translate so the minimum is 0, over the default range.
ExplicitSet normalized(const ExplicitSet& X, const OracleSemigroup& S);

/// { z : z + K ⊆ H } over H's range, by scanning every z and every k.
/// Throws WindowTooNarrow when the result would leak outside the range.
ExplicitSet oracle_colon(const ExplicitSet& H, const ExplicitSet& K, const OracleSemigroup& S);

/// Every subset of [1, F] (0 forced) that is literally S-stable, as normalized
/// explicit sets. Throws EnumerationLimitExceeded when F > limit.
std::vector<ExplicitSet> oracle_enumerate(const OracleSemigroup& S, Int limit = 20);

/// { F - z : z ∉ S } over [lo, hi].
ExplicitSet oracle_canonical(const OracleSemigroup& S, Int lo, Int hi);

// Conversions for differential checks.
ExplicitSet to_explicit(const RelativeIdeal& I, Int lo, Int hi);
bool same_set(const RelativeIdeal& I, const ExplicitSet& X);

} // namespace nsl::oracle
