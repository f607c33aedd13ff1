#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nsl/semigroup.hpp"

namespace nsl {

/// Offset window over [0, F(S)]: bit o is set iff min(I) + o ∈ I.
using Window = std::vector<bool>;

/// A relative ideal I of S in canonical form (min(I), window). Every integer
/// above min(I) + F(S) belongs to I. Two ideals over the same S are equal as
/// sets iff their (min, window) pairs coincide.
class RelativeIdeal {
public:
    /// Wraps an already S-stable window; `window[0]` must be set and
    /// `window.size()` must equal F(S) + 1.
    RelativeIdeal(SemigroupPtr ambient, Int min_element, Window window);

    const SemigroupPtr& ambient() const noexcept { return ambient_; }
    const NumericalSemigroup& semigroup() const noexcept { return *ambient_; }
    Int min_element() const noexcept { return min_; }
    const Window& window() const noexcept { return window_; }
    bool is_normalized() const noexcept { return min_ == 0; }

    bool contains(Int z) const noexcept {
        if (z < min_) return false;
        Int o = z - min_;
        if (o >= static_cast<Int>(window_.size())) return true;
        return window_[static_cast<std::size_t>(o)];
    }

    RelativeIdeal translate(Int t) const { return {ambient_, min_ + t, window_}; }
    RelativeIdeal normalize() const { return {ambient_, 0, window_}; }

    /// Set equality; ideals over different ambients compare unequal.
    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b);

private:
    SemigroupPtr ambient_;
    Int min_;
    Window window_;
};

struct IdealGenerators {
    std::vector<Int> generators;
};

RelativeIdeal ideal_from_generators(const SemigroupPtr& S, std::span<const Int> generators);

inline RelativeIdeal ideal_from_generators(const SemigroupPtr& S, std::initializer_list<Int> generators) {
    return ideal_from_generators(S, std::span<const Int>(generators.begin(), generators.size()));
}

/// S as a relative ideal of itself.
RelativeIdeal principal_ideal(const SemigroupPtr& S);

/// Both throw AmbientMismatch when I and J live over different semigroups.
bool equals(const RelativeIdeal& I, const RelativeIdeal& J);
bool isomorphic(const RelativeIdeal& I, const RelativeIdeal& J);

/// I ⊆ J.
bool is_subset(const RelativeIdeal& I, const RelativeIdeal& J);

/// H - K = { z : z + K ⊆ H }.
RelativeIdeal colon(const RelativeIdeal& H, const RelativeIdeal& K);

/// I \ (I + (S \ {0})), sorted ascending.
IdealGenerators minimal_ideal_generators(const RelativeIdeal& I);

/// True when `window` has offset 0 set and is closed under adding members of S
/// inside the window.
bool is_stable_window(const NumericalSemigroup& S, const Window& window);

struct WindowHash {
    std::size_t operator()(const Window& w) const noexcept { return std::hash<Window>{}(w); }
};

} // namespace nsl
