#pragma once

#include <memory>
#include <span>
#include <vector>

#include "nsl/error.hpp"

namespace nsl {

/// A numerical semigroup S ⊆ ℕ with finite complement, stored through its
/// membership table on [0, F(S)]. Immutable after construction.
class NumericalSemigroup {
public:
    /// Builds the submonoid generated by `gens`. Duplicates and redundant
    /// generators are dropped. Throws EmptyInput or GcdNotOne.
    static NumericalSemigroup from_generators(std::span<const Int> gens);

    const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }
    Int frobenius() const noexcept { return frobenius_; }
    const std::vector<Int>& gaps() const noexcept { return gaps_; }
    Int multiplicity() const noexcept { return multiplicity_; }

    /// Length of the membership window [0, F(S)]; zero for ℕ.
    std::size_t window_size() const noexcept { return membership_.size(); }
    const std::vector<bool>& membership_window() const noexcept { return membership_; }

    bool is_natural() const noexcept { return frobenius_ == -1; }

    bool contains(Int z) const noexcept {
        if (z < 0) return false;
        if (z > frobenius_) return true;
        return membership_[static_cast<std::size_t>(z)];
    }

    /// Least member of each residue class mod n, indexed by residue.
    /// Throws NotAMember unless n is a positive member.
    std::vector<Int> apery_set(Int n) const;

    /// Checks the z / F(S)-z pairing and the window form of K(S) = S;
    /// throws std::logic_error if the two disagree.
    bool is_symmetric() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.minimal_generators_ == b.minimal_generators_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<Int> minimal_generators_;
    Int frobenius_ = -1;
    std::vector<Int> gaps_;
    Int multiplicity_ = 1;
    std::vector<bool> membership_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr semigroup_from_generators(std::span<const Int> gens);

inline SemigroupPtr semigroup_from_generators(std::initializer_list<Int> gens) {
    return semigroup_from_generators(std::span<const Int>(gens.begin(), gens.size()));
}

} // namespace nsl
