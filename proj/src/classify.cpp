#include "nsl/classify.hpp"

#include <array>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsl {

namespace {

constexpr std::array<DualityOp, 2> kBothOps{DualityOp::Star, DualityOp::KDual};

void check_limit(const SemigroupPtr& S, const ClassifyOptions& options) {
    if (S->frobenius() > options.enumeration_limit)
        throw Error(ErrorKind::EnumerationLimitExceeded,
                    "F(S) = " + std::to_string(S->frobenius()) + " exceeds enumeration limit " +
                        std::to_string(options.enumeration_limit));
}

ClassificationReport reduce(const SemigroupPtr& S, const std::vector<RelativeIdeal>& ideals,
                            const std::vector<IdealSummary>& summaries) {
    ClassificationReport r;
    r.semigroup = S;
    r.ideal_count = ideals.size();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& s = summaries[i];
        r.s_reflexive_count += s.s_reflexive;
        r.k_reflexive_count += s.k_reflexive;
        r.principal_collapsed_count += s.principal_collapsed;
        r.canonical_collapsed_count += s.canonical_collapsed;
        ++r.principal_class_histogram[s.principal_class_size];
        ++r.canonical_class_histogram[s.canonical_class_size];
        r.canonical_pairs_linked = r.canonical_pairs_linked && s.canonical_pair_linked;
        if (!s.k_reflexive) r.non_k_reflexive.push_back(ideals[i]);
        if (s.mixed_orbit_size > r.max_mixed_orbit) {
            r.max_mixed_orbit = s.mixed_orbit_size;
            r.max_mixed_orbit_witness = ideals[i];
        }
    }
    return r;
}

} // namespace

IdealSummary summarize_ideal(const RelativeIdeal& I, std::size_t orbit_cap) {
    IdealSummary s;
    const auto principal = principal_liaison_class(I);
    const auto canonical = canonical_liaison_class(I);
    s.s_reflexive = principal.reflexive;
    s.k_reflexive = canonical.reflexive;
    s.principal_class_size = principal.representatives.size();
    s.canonical_class_size = canonical.representatives.size();
    s.principal_collapsed = principal.collapsed;
    s.canonical_collapsed = canonical.collapsed;
    if (canonical.representatives.size() == 2)
        s.canonical_pair_linked = is_directly_linked(canonical.representatives[0], *canonical.partner,
                                                     *canonical.linking_ideal);
    s.mixed_orbit_size = mixed_orbit(I, kBothOps, orbit_cap).nodes.size();
    return s;
}

ClassificationReport classify(const SemigroupPtr& S, const ClassifyOptions& options) {
    check_limit(S, options);
    const auto ideals = enumerate_normalized_ideals(S);
    std::vector<IdealSummary> summaries(ideals.size());
    const auto n = static_cast<std::ptrdiff_t>(ideals.size());

    // Exceptions may not leave a parallel region; keep the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            summaries[static_cast<std::size_t>(i)] =
                summarize_ideal(ideals[static_cast<std::size_t>(i)], options.orbit_cap);
        } catch (...) {
#pragma omp critical(nsl_classify_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    return reduce(S, ideals, summaries);
}

ClassificationReport classify_serial(const SemigroupPtr& S, const ClassifyOptions& options) {
    check_limit(S, options);
    const auto ideals = enumerate_normalized_ideals(S);
    std::vector<IdealSummary> summaries;
    summaries.reserve(ideals.size());
    for (const auto& I : ideals) summaries.push_back(summarize_ideal(I, options.orbit_cap));
    return reduce(S, ideals, summaries);
}

std::vector<RelativeIdeal> colon_table(std::span<const RelativeIdeal> ideals) {
    if (ideals.empty()) return {};
    for (const auto& I : ideals)
        if (!(I.semigroup() == ideals.front().semigroup()))
            throw Error(ErrorKind::AmbientMismatch, "colon table needs a single ambient semigroup");
    const std::size_t n = ideals.size();
    std::vector<RelativeIdeal> table(n * n, ideals.front());
    const auto total = static_cast<std::ptrdiff_t>(n * n);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        table[idx] = colon(ideals[idx / n], ideals[idx % n]);
    }
    return table;
}

std::vector<RelativeIdeal> colon_table_serial(std::span<const RelativeIdeal> ideals) {
    std::vector<RelativeIdeal> table;
    table.reserve(ideals.size() * ideals.size());
    for (const auto& H : ideals)
        for (const auto& K : ideals) table.push_back(colon(H, K));
    return table;
}

int parallel_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace nsl
