#include "nsl/duality.hpp"

namespace nsl {

std::string_view to_string(Theory theory) {
    return theory == Theory::Principal ? "principal" : "canonical";
}

RelativeIdeal s_dual(const RelativeIdeal& I) {
    return colon(principal_ideal(I.ambient()), I);
}

RelativeIdeal s_biclosure(const RelativeIdeal& I) { return s_dual(s_dual(I)); }

bool is_s_reflexive(const RelativeIdeal& I) { return equals(I, s_biclosure(I)); }

RelativeIdeal canonical_ideal(const SemigroupPtr& S) {
    const Int F = S->frobenius();
    Window w(S->window_size());
    for (std::size_t o = 0; o < w.size(); ++o)
        w[o] = !S->contains(F - static_cast<Int>(o));
    return {S, 0, std::move(w)};
}

RelativeIdeal shifted_canonical(const SemigroupPtr& S, Int a) {
    return canonical_ideal(S).translate(a);
}

RelativeIdeal k_dual(const RelativeIdeal& I) {
    return colon(canonical_ideal(I.ambient()), I);
}

RelativeIdeal k_closure(const RelativeIdeal& I) { return k_dual(k_dual(I)); }

bool is_k_reflexive(const RelativeIdeal& I) { return equals(I, k_closure(I)); }

bool is_directly_linked(const RelativeIdeal& I, const RelativeIdeal& J, const RelativeIdeal& L) {
    return equals(colon(L, I), J) && equals(colon(L, J), I);
}

namespace {

LiaisonClassResult classify_with(Theory theory, const RelativeIdeal& I, const RelativeIdeal& link,
                                 bool reflexive) {
    LiaisonClassResult r;
    r.theory = theory;
    const RelativeIdeal base = I.normalize();
    r.reflexive = reflexive;
    r.representatives.push_back(base);
    if (I.semigroup().is_natural())
        r.note = "S = N: every pair of relative ideals is directly linked; one universal class";
    if (!reflexive) return r;

    RelativeIdeal partner = colon(link, base);
    RelativeIdeal partner_nor = partner.normalize();
    r.linking_ideal = link;
    r.partner = partner;
    if (isomorphic(partner_nor, base))
        r.collapsed = true;
    else
        r.representatives.push_back(std::move(partner_nor));
    return r;
}

bool in_family(const RelativeIdeal& L, LinkFamily family) {
    auto principal = [&] { return L.window() == L.semigroup().membership_window(); };
    auto canonical = [&] { return L.window() == canonical_ideal(L.ambient()).window(); };
    switch (family) {
    case LinkFamily::Any: return true;
    case LinkFamily::Principal: return principal();
    case LinkFamily::Canonical: return canonical();
    case LinkFamily::Mixed: return principal() || canonical();
    }
    return false;
}

} // namespace

LiaisonClassResult principal_liaison_class(const RelativeIdeal& I) {
    return classify_with(Theory::Principal, I, principal_ideal(I.ambient()), is_s_reflexive(I));
}

LiaisonClassResult canonical_liaison_class(const RelativeIdeal& I) {
    const RelativeIdeal closure = k_closure(I);
    auto r = classify_with(Theory::Canonical, I, canonical_ideal(I.ambient()), equals(I, closure));
    r.closure_representative = closure.normalize();
    return r;
}

bool verify_chain(const std::vector<RelativeIdeal>& ideals,
                  const std::vector<RelativeIdeal>& links,
                  bool require_even,
                  LinkFamily family) {
    if (ideals.size() != links.size() + 1)
        throw Error(ErrorKind::LengthMismatch,
                    "chain needs one more ideal than links (" + std::to_string(ideals.size()) +
                        " ideals, " + std::to_string(links.size()) + " links)");
    if (require_even && links.size() % 2 != 0) return false;
    for (std::size_t k = 0; k < links.size(); ++k) {
        if (!in_family(links[k], family)) return false;
        if (!is_directly_linked(ideals[k], ideals[k + 1], links[k])) return false;
    }
    return true;
}

} // namespace nsl
