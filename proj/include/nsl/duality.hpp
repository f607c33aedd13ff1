#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsl/ideal.hpp"

namespace nsl {

enum class Theory { Principal, Canonical };

/// Which linking ideals verify_chain accepts.
enum class LinkFamily {
    Any,       // arbitrary relative ideals
    Principal, // translates a + S
    Canonical, // translates a + K(S)
    Mixed,     // a + S or a + K(S)
};

/// Liaison class of an ideal modulo translation, under one of the two
/// linking families.
struct LiaisonClassResult {
    Theory theory;
    bool reflexive = false;
    /// Normalized; first entry is I^nor. At most two entries.
    std::vector<RelativeIdeal> representatives;
    /// S or K(S) (untranslated) when a direct link exists.
    std::optional<RelativeIdeal> linking_ideal;
    /// linking_ideal - I^nor, the unnormalized partner.
    std::optional<RelativeIdeal> partner;
    /// Canonical theory only: normalize(K - (K - I)). Equal to I^nor whenever
    /// I is K(S)-reflexive, so it is never the second class member.
    std::optional<RelativeIdeal> closure_representative;
    /// Reflexive, but the partner normalizes onto I^nor.
    bool collapsed = false;
    std::string note;
};

RelativeIdeal s_dual(const RelativeIdeal& I);
RelativeIdeal s_biclosure(const RelativeIdeal& I);
bool is_s_reflexive(const RelativeIdeal& I);

/// K(S) = { F(S) - z : z ∉ S }, normalized (min 0).
RelativeIdeal canonical_ideal(const SemigroupPtr& S);
RelativeIdeal shifted_canonical(const SemigroupPtr& S, Int a);

RelativeIdeal k_dual(const RelativeIdeal& I);
RelativeIdeal k_closure(const RelativeIdeal& I);
bool is_k_reflexive(const RelativeIdeal& I);

/// J = L - I and I = L - J. Throws AmbientMismatch.
bool is_directly_linked(const RelativeIdeal& I, const RelativeIdeal& J, const RelativeIdeal& L);

LiaisonClassResult principal_liaison_class(const RelativeIdeal& I);
LiaisonClassResult canonical_liaison_class(const RelativeIdeal& I);

/// ideals[k-1] and ideals[k] directly linked by links[k-1] for every k, each
/// link drawn from `family`, and an even number of links when `require_even`.
/// Throws LengthMismatch unless ideals.size() == links.size() + 1.
bool verify_chain(const std::vector<RelativeIdeal>& ideals,
                  const std::vector<RelativeIdeal>& links,
                  bool require_even,
                  LinkFamily family = LinkFamily::Any);

std::string_view to_string(Theory theory);

} // namespace nsl
