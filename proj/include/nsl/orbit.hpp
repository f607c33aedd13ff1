#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nsl/ideal.hpp"

namespace nsl {

/// Duality operators acting on normalized ideals: star is S - ·, kdual is K(S) - ·.
enum class DualityOp { Star, KDual };

std::string_view to_string(DualityOp op);

/// normalize(op(I)).
RelativeIdeal apply_normalized(DualityOp op, const RelativeIdeal& I);

struct OrbitEdge {
    std::size_t from;
    std::size_t to;
    DualityOp op;

    friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

/// Breadth-first closure of a normalized seed under a set of duality
/// operators. Nodes are distinct normalized ideals; node 0 is the seed.
struct OrbitGraph {
    std::vector<RelativeIdeal> nodes;
    std::vector<OrbitEdge> edges;
    std::size_t start = 0;
    std::vector<DualityOp> ops;

    /// Index reached from `node` along `op`, or nodes.size() if `op` was not
    /// part of the closure.
    std::size_t image(std::size_t node, DualityOp op) const;

    /// Nodes n with image(image(n, op), op) != n.
    std::vector<std::size_t> involution_defects(DualityOp op) const;

    /// Connected components of the undirected graph formed by `op` edges,
    /// optionally keeping only nodes satisfying `keep`.
    std::vector<std::vector<std::size_t>> components(DualityOp op,
                                                     const std::vector<bool>& keep = {}) const;
};

inline constexpr std::size_t kDefaultOrbitCap = 10000;

/// Throws CapExceeded if more than `cap` nodes are discovered.
OrbitGraph mixed_orbit(const RelativeIdeal& seed, std::span<const DualityOp> ops,
                       std::size_t cap = kDefaultOrbitCap);

/// All normalized relative ideals of S, in lexicographic window order.
/// Backtracks over offsets 1..F(S), forcing o whenever o - o' ∈ S for a chosen o'.
std::vector<RelativeIdeal> enumerate_normalized_ideals(const SemigroupPtr& S);

} // namespace nsl
