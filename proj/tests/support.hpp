#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "nsl/semigroup.hpp"

namespace nsl::test {

/// Fixed corpus used by the exhaustive suites.
inline std::vector<std::vector<Int>> corpus() {
    return {{2, 3}, {3, 4, 5}, {3, 5}, {4, 5, 7}, {5, 6, 8}, {4, 6, 9}};
}

inline SemigroupPtr sg(std::initializer_list<Int> gens) { return semigroup_from_generators(gens); }
inline SemigroupPtr sg(const std::vector<Int>& gens) { return semigroup_from_generators(gens); }

/// Random gcd-1 generator sets with Frobenius number at most `max_frobenius`.
class SemigroupGen {
public:
    explicit SemigroupGen(unsigned seed, Int max_frobenius = 14) : rng_(seed), max_f_(max_frobenius) {}

    SemigroupPtr next() {
        std::uniform_int_distribution<Int> count(1, 4), value(2, 11);
        while (true) {
            std::vector<Int> gens(static_cast<std::size_t>(count(rng_)));
            for (auto& g : gens) g = value(rng_);
            Int g = 0;
            for (Int x : gens) g = std::gcd(g, x);
            if (g != 1) continue;
            auto S = semigroup_from_generators(gens);
            if (S->frobenius() <= max_f_) return S;
        }
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
    Int max_f_;
};

} // namespace nsl::test
