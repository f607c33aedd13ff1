#include "nsl/ideal.hpp"

#include <algorithm>
#include <cassert>

namespace nsl {

namespace {

void require_same_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (a.ambient() != b.ambient() && !(a.semigroup() == b.semigroup()))
        throw Error(ErrorKind::AmbientMismatch, "ideals live over different semigroups");
}

} // namespace

RelativeIdeal::RelativeIdeal(SemigroupPtr ambient, Int min_element, Window window)
    : ambient_(std::move(ambient)), min_(min_element), window_(std::move(window)) {
    assert(window_.size() == ambient_->window_size());
    assert(window_.empty() || window_[0]);
}

bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (a.ambient_ != b.ambient_ && !(*a.ambient_ == *b.ambient_)) return false;
    return a.min_ == b.min_ && a.window_ == b.window_;
}

RelativeIdeal ideal_from_generators(const SemigroupPtr& S, std::span<const Int> generators) {
    if (generators.empty())
        throw Error(ErrorKind::EmptyInput, "ideal generator list is empty");
    const Int m = *std::min_element(generators.begin(), generators.end());
    Window w(S->window_size(), false);
    for (std::size_t o = 0; o < w.size(); ++o) {
        const Int z = m + static_cast<Int>(o);
        for (Int g : generators)
            if (S->contains(z - g)) {
                w[o] = true;
                break;
            }
    }
    return {S, m, std::move(w)};
}

RelativeIdeal principal_ideal(const SemigroupPtr& S) {
    return {S, 0, S->membership_window()};
}

bool equals(const RelativeIdeal& I, const RelativeIdeal& J) {
    require_same_ambient(I, J);
    return I.min_element() == J.min_element() && I.window() == J.window();
}

bool isomorphic(const RelativeIdeal& I, const RelativeIdeal& J) {
    require_same_ambient(I, J);
    return I.window() == J.window();
}

bool is_subset(const RelativeIdeal& I, const RelativeIdeal& J) {
    require_same_ambient(I, J);
    if (I.min_element() < J.min_element()) return false;
    // Past J's window every integer is in J, so only I's window can fail.
    const auto n = static_cast<Int>(I.window().size());
    for (Int o = 0; o < n; ++o)
        if (I.window()[static_cast<std::size_t>(o)] && !J.contains(I.min_element() + o))
            return false;
    return true;
}

RelativeIdeal colon(const RelativeIdeal& H, const RelativeIdeal& K) {
    require_same_ambient(H, K);
    const auto& S = H.ambient();
    const Int F = S->frobenius();
    const Int lo = H.min_element() - K.min_element();
    const Int hi = H.min_element() + F - K.min_element();

    // Candidate z in [lo, hi]; anything above hi is in the result, anything
    // below lo sends min(K) under min(H). Elements of K past its window land
    // in H's tail for every candidate.
    std::vector<bool> in_result(static_cast<std::size_t>(hi - lo + 1), false);
    for (Int z = lo; z <= hi; ++z) {
        bool ok = true;
        for (std::size_t o = 0; o < K.window().size() && ok; ++o)
            if (K.window()[o] && !H.contains(z + K.min_element() + static_cast<Int>(o))) ok = false;
        in_result[static_cast<std::size_t>(z - lo)] = ok;
    }

    Int m = hi + 1;
    for (Int z = lo; z <= hi; ++z)
        if (in_result[static_cast<std::size_t>(z - lo)]) {
            m = z;
            break;
        }

    Window w(S->window_size(), true);
    for (std::size_t o = 0; o < w.size(); ++o) {
        const Int z = m + static_cast<Int>(o);
        if (z <= hi) w[o] = in_result[static_cast<std::size_t>(z - lo)];
    }
    return {S, m, std::move(w)};
}

IdealGenerators minimal_ideal_generators(const RelativeIdeal& I) {
    const auto& S = I.semigroup();
    const auto& w = I.window();
    IdealGenerators out;
    if (w.empty()) {
        out.generators.push_back(I.min_element());
        return out;
    }
    for (std::size_t o = 0; o < w.size(); ++o) {
        if (!w[o]) continue;
        bool reachable = false;
        for (std::size_t s = 1; s <= o && !reachable; ++s)
            reachable = S.contains(static_cast<Int>(s)) && w[o - s];
        if (!reachable) out.generators.push_back(I.min_element() + static_cast<Int>(o));
    }
    return out;
}

bool is_stable_window(const NumericalSemigroup& S, const Window& window) {
    if (window.size() != S.window_size()) return false;
    if (window.empty()) return true;
    if (!window[0]) return false;
    for (std::size_t o = 0; o < window.size(); ++o) {
        if (!window[o]) continue;
        for (std::size_t t = o + 1; t < window.size(); ++t)
            if (S.contains(static_cast<Int>(t - o)) && !window[t]) return false;
    }
    return true;
}

} // namespace nsl
