#include "nsl/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace nsl {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorKind::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
    if (gens.empty())
        throw Error(ErrorKind::EmptyInput, "generator list is empty");
    for (Int g : gens)
        if (g < 1)
            throw Error(ErrorKind::EmptyInput,
                        "generators must be positive, got " + std::to_string(g));

    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Int g = 0;
    for (Int x : sorted) g = std::gcd(g, x);
    if (g != 1)
        throw Error(ErrorKind::GcdNotOne,
                    "gcd of generators is " + std::to_string(g) + ", complement would be infinite");

    NumericalSemigroup S;
    S.multiplicity_ = sorted.front();

    // Sieve upward; once `multiplicity` consecutive members appear, every
    // larger integer is a member.
    std::vector<bool> member{true};
    Int run = 0;
    Int last_gap = -1;
    for (Int i = 1; run < S.multiplicity_; ++i) {
        bool in = false;
        for (Int x : sorted) {
            if (x > i) break;
            if (member[static_cast<std::size_t>(i - x)]) {
                in = true;
                break;
            }
        }
        member.push_back(in);
        if (in) {
            ++run;
        } else {
            run = 0;
            last_gap = i;
        }
    }
    S.frobenius_ = last_gap;
    S.membership_.assign(member.begin(), member.begin() + (last_gap + 1));
    for (Int i = 1; i <= last_gap; ++i)
        if (!S.membership_[static_cast<std::size_t>(i)]) S.gaps_.push_back(i);

    for (Int x : sorted) {
        bool decomposable = false;
        for (Int a = 1; a <= x / 2 && !decomposable; ++a)
            decomposable = S.contains(a) && S.contains(x - a);
        if (!decomposable) S.minimal_generators_.push_back(x);
    }
    return S;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
    if (n <= 0 || !contains(n))
        throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not a positive member");
    std::vector<Int> apery(static_cast<std::size_t>(n), -1);
    Int found = 0;
    for (Int z = 0; found < n; ++z) {
        auto r = static_cast<std::size_t>(z % n);
        if (apery[r] < 0 && contains(z)) {
            apery[r] = z;
            ++found;
        }
    }
    return apery;
}

bool NumericalSemigroup::is_symmetric() const {
    // Outside [0, F] the pairing always holds: one side is negative, the
    // other exceeds F.
    bool pairing = true;
    for (Int z = 0; z <= frobenius_; ++z)
        if (contains(z) == contains(frobenius_ - z)) pairing = false;

    // K(S) has offset o iff F - o is not a member.
    bool canonical_equals_s = true;
    for (Int o = 0; o <= frobenius_; ++o)
        if (!contains(frobenius_ - o) != contains(o)) canonical_equals_s = false;

    if (pairing != canonical_equals_s)
        throw std::logic_error("symmetry tests disagree");
    return pairing;
}

SemigroupPtr semigroup_from_generators(std::span<const Int> gens) {
    return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}

} // namespace nsl
