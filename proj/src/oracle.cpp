#include "nsl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nsl/ideal.hpp"

namespace nsl::oracle {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::WindowTooNarrow, what);
}

void require_representable(const ExplicitSet& X, const char* name) {
    require(X.hi >= X.lo && X.member.size() == static_cast<std::size_t>(X.hi - X.lo + 1),
            std::string(name) + ": malformed range");
    require(!X.member.front(), std::string(name) + ": lower bound is a member, set may extend below");
}

} // namespace

std::vector<Int> OracleSemigroup::gaps() const {
    std::vector<Int> out;
    for (Int z = 1; z <= frobenius; ++z)
        if (!contains(z)) out.push_back(z);
    return out;
}

OracleSemigroup oracle_semigroup(std::span<const Int> generators) {
    if (generators.empty()) throw Error(ErrorKind::EmptyInput, "generator list is empty");
    Int g = 0;
    for (Int x : generators) {
        if (x < 1) throw Error(ErrorKind::EmptyInput, "generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(g));

    OracleSemigroup S;
    S.generators.assign(generators.begin(), generators.end());
    const Int lo = *std::min_element(generators.begin(), generators.end());
    const Int hi = *std::max_element(generators.begin(), generators.end());
    const Int bound = lo * hi;
    S.member.assign(static_cast<std::size_t>(bound + 1), false);
    S.member[0] = true;
    // Forward closure: every reachable sum up to the bound.
    for (Int i = 0; i <= bound; ++i) {
        if (!S.member[static_cast<std::size_t>(i)]) continue;
        for (Int x : generators)
            if (i + x <= bound) S.member[static_cast<std::size_t>(i + x)] = true;
    }
    for (Int i = bound; i >= 0; --i)
        if (!S.member[static_cast<std::size_t>(i)]) {
            S.frobenius = i;
            break;
        }
    return S;
}

Int ExplicitSet::minimum() const {
    for (Int z = lo; z <= hi; ++z)
        if (contains(z)) return z;
    return hi + 1;
}

Int ExplicitSet::conductor() const {
    Int c = hi + 1;
    while (c - 1 >= lo && contains(c - 1)) --c;
    return c;
}

std::vector<Int> ExplicitSet::elements() const {
    std::vector<Int> out;
    for (Int z = lo; z <= hi; ++z)
        if (contains(z)) out.push_back(z);
    return out;
}

std::pair<Int, Int> default_range(const OracleSemigroup& S) {
    const Int w = S.frobenius + 2;
    return {-2 * w, 3 * w};
}

ExplicitSet explicit_semigroup(const OracleSemigroup& S, Int lo, Int hi) {
    ExplicitSet X{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1))};
    for (Int z = lo; z <= hi; ++z) X.member[static_cast<std::size_t>(z - lo)] = S.contains(z);
    return X;
}

ExplicitSet explicit_from_generators(const OracleSemigroup& S, std::span<const Int> generators,
                                     Int lo, Int hi) {
    if (generators.empty()) throw Error(ErrorKind::EmptyInput, "ideal generator list is empty");
    ExplicitSet X{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1))};
    for (Int z = lo; z <= hi; ++z)
        X.member[static_cast<std::size_t>(z - lo)] =
            std::any_of(generators.begin(), generators.end(), [&](Int g) { return S.contains(z - g); });
    require_representable(X, "generated ideal");
    require(X.contains(hi) && X.conductor() <= hi, "generated ideal: tail not reached by upper bound");
    return X;
}

ExplicitSet shifted(const ExplicitSet& X, Int t, Int lo, Int hi) {
    require(X.minimum() + t > lo && X.conductor() + t <= hi, "shifted set does not fit in range");
    ExplicitSet Y{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1))};
    for (Int z = lo; z <= hi; ++z) Y.member[static_cast<std::size_t>(z - lo)] = X.contains(z - t);
    return Y;
}

ExplicitSet normalized(const ExplicitSet& X, const OracleSemigroup& S) {
    auto [lo, hi] = default_range(S);
    return shifted(X, -X.minimum(), lo, hi);
}

ExplicitSet oracle_colon(const ExplicitSet& H, const ExplicitSet& K, const OracleSemigroup& S) {
    require_representable(H, "colon lhs");
    require_representable(K, "colon rhs");
    require(H.hi - H.lo >= 4 * (S.frobenius + 2), "colon lhs: range narrower than 4(F+2)");

    const Int c_h = H.conductor();
    const Int min_k = K.minimum();
    // Nothing below H.lo and everything above H.hi must be decided already.
    require(H.lo + min_k <= H.minimum(), "colon: result may have elements below range");
    require(H.hi + 1 + min_k >= c_h, "colon: result tail starts above range");

    ExplicitSet R{H.lo, H.hi, std::vector<bool>(H.member.size())};
    for (Int z = H.lo; z <= H.hi; ++z) {
        bool ok = true;
        for (Int k = K.lo; k <= K.hi && ok; ++k)
            if (K.contains(k) && !H.contains(z + k)) ok = false;
        // Every k > K.hi lies in K; all z + k must land in H.
        if (ok && z + K.hi + 1 < c_h) ok = false;
        R.member[static_cast<std::size_t>(z - H.lo)] = ok;
    }
    return R;
}

std::vector<ExplicitSet> oracle_enumerate(const OracleSemigroup& S, Int limit) {
    const Int F = S.frobenius;
    if (F > limit)
        throw Error(ErrorKind::EnumerationLimitExceeded,
                    "F(S) = " + std::to_string(F) + " exceeds oracle limit " + std::to_string(limit));
    auto [lo, hi] = default_range(S);
    std::vector<ExplicitSet> out;
    if (F < 0) {
        out.push_back(explicit_semigroup(S, lo, hi));
        return out;
    }
    const std::uint64_t subsets = std::uint64_t{1} << F;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        auto in = [&](Int o) { return o == 0 || (o <= F && ((mask >> (o - 1)) & 1U)) || o > F; };
        bool stable = true;
        for (Int o = 0; o <= F && stable; ++o) {
            if (!in(o)) continue;
            for (Int s = 1; o + s <= F && stable; ++s)
                if (S.contains(s) && !in(o + s)) stable = false;
        }
        if (!stable) continue;
        ExplicitSet X{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1))};
        for (Int z = lo; z <= hi; ++z) X.member[static_cast<std::size_t>(z - lo)] = z >= 0 && in(z);
        out.push_back(std::move(X));
    }
    return out;
}

ExplicitSet oracle_canonical(const OracleSemigroup& S, Int lo, Int hi) {
    const Int F = S.frobenius;
    // Reflections of z < F - hi must all exceed hi, and z > F - lo must all
    // be members so nothing lands below lo.
    require(hi > F && lo < 0, "canonical: range must cover [0, F(S)]");
    ExplicitSet X{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1), false)};
    for (Int z = F - hi; z <= F - lo; ++z)
        if (!S.contains(z)) X.member[static_cast<std::size_t>(F - z - lo)] = true;
    return X;
}

ExplicitSet to_explicit(const RelativeIdeal& I, Int lo, Int hi) {
    require(I.min_element() > lo &&
                I.min_element() + static_cast<Int>(I.window().size()) <= hi,
            "ideal does not fit in range");
    ExplicitSet X{lo, hi, std::vector<bool>(static_cast<std::size_t>(hi - lo + 1))};
    for (Int z = lo; z <= hi; ++z) X.member[static_cast<std::size_t>(z - lo)] = I.contains(z);
    return X;
}

bool same_set(const RelativeIdeal& I, const ExplicitSet& X) {
    if (X.minimum() != I.min_element()) return false;
    if (I.min_element() + static_cast<Int>(I.window().size()) > X.hi + 1) return false;
    for (Int z = X.lo; z <= X.hi; ++z)
        if (X.contains(z) != I.contains(z)) return false;
    return true;
}

} // namespace nsl::oracle
