#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nsl/duality.hpp"
#include "nsl/orbit.hpp"

namespace nsl {

/// Per-ideal results computed by the classification kernel.
struct IdealSummary {
    bool s_reflexive = false;
    bool k_reflexive = false;
    std::size_t principal_class_size = 1;
    std::size_t canonical_class_size = 1;
    bool principal_collapsed = false;
    bool canonical_collapsed = false;
    /// Two-element canonical classes: the representatives are directly
    /// linked through K(S). Vacuously true otherwise.
    bool canonical_pair_linked = true;
    std::size_t mixed_orbit_size = 1;

    friend bool operator==(const IdealSummary&, const IdealSummary&) = default;
};

struct ClassificationReport {
    SemigroupPtr semigroup;
    std::size_t ideal_count = 0;
    std::size_t s_reflexive_count = 0;
    std::size_t k_reflexive_count = 0;
    std::size_t principal_collapsed_count = 0;
    std::size_t canonical_collapsed_count = 0;
    std::map<std::size_t, std::size_t> principal_class_histogram;
    std::map<std::size_t, std::size_t> canonical_class_histogram;
    std::size_t max_mixed_orbit = 0;
    std::optional<RelativeIdeal> max_mixed_orbit_witness;
    /// Ideals with k_closure(I) != I; empty means every ideal is K(S)-reflexive.
    std::vector<RelativeIdeal> non_k_reflexive;
    bool canonical_pairs_linked = true;

    bool universal_k_reflexivity() const { return non_k_reflexive.empty(); }

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
    Int enumeration_limit = 20;
    std::size_t orbit_cap = kDefaultOrbitCap;
};

IdealSummary summarize_ideal(const RelativeIdeal& I, std::size_t orbit_cap = kDefaultOrbitCap);

/// OpenMP sweep over every normalized ideal. Throws EnumerationLimitExceeded
/// when F(S) exceeds the configured limit.
ClassificationReport classify(const SemigroupPtr& S, const ClassifyOptions& options = {});

/// Single-threaded reference for classify(); results must match exactly.
ClassificationReport classify_serial(const SemigroupPtr& S, const ClassifyOptions& options = {});

/// Row-major table of colon(ideals[i], ideals[j]), computed in parallel.
std::vector<RelativeIdeal> colon_table(std::span<const RelativeIdeal> ideals);
std::vector<RelativeIdeal> colon_table_serial(std::span<const RelativeIdeal> ideals);

/// Threads an OpenMP parallel region would use; 1 without OpenMP.
int parallel_thread_count();

} // namespace nsl
