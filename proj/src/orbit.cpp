#include "nsl/orbit.hpp"

#include <deque>
#include <unordered_map>

#include "nsl/duality.hpp"

namespace nsl {

std::string_view to_string(DualityOp op) { return op == DualityOp::Star ? "star" : "kdual"; }

RelativeIdeal apply_normalized(DualityOp op, const RelativeIdeal& I) {
    return (op == DualityOp::Star ? s_dual(I) : k_dual(I)).normalize();
}

std::size_t OrbitGraph::image(std::size_t node, DualityOp op) const {
    for (const auto& e : edges)
        if (e.from == node && e.op == op) return e.to;
    return nodes.size();
}

std::vector<std::size_t> OrbitGraph::involution_defects(DualityOp op) const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        std::size_t once = image(n, op);
        if (once == nodes.size()) continue;
        if (image(once, op) != n) out.push_back(n);
    }
    return out;
}

std::vector<std::vector<std::size_t>> OrbitGraph::components(DualityOp op,
                                                             const std::vector<bool>& keep) const {
    auto kept = [&](std::size_t n) { return keep.empty() || keep[n]; };
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& e : edges) {
        if (e.op != op || !kept(e.from) || !kept(e.to)) continue;
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        if (seen[n] || !kept(n)) continue;
        std::vector<std::size_t> comp{n}, stack{n};
        seen[n] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                    stack.push_back(y);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

OrbitGraph mixed_orbit(const RelativeIdeal& seed, std::span<const DualityOp> ops, std::size_t cap) {
    if (cap == 0) throw Error(ErrorKind::CapExceeded, "orbit cap must be positive");
    OrbitGraph g;
    g.ops.assign(ops.begin(), ops.end());
    std::unordered_map<Window, std::size_t, WindowHash> index;

    g.nodes.push_back(seed.normalize());
    index.emplace(g.nodes.front().window(), 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t n = queue.front();
        queue.pop_front();
        for (DualityOp op : g.ops) {
            RelativeIdeal next = apply_normalized(op, g.nodes[n]);
            auto [it, fresh] = index.emplace(next.window(), g.nodes.size());
            if (fresh) {
                if (g.nodes.size() >= cap)
                    throw Error(ErrorKind::CapExceeded,
                                "orbit exceeded cap of " + std::to_string(cap) + " nodes");
                g.nodes.push_back(std::move(next));
                queue.push_back(it->second);
            }
            g.edges.push_back({n, it->second, op});
        }
    }
    return g;
}

std::vector<RelativeIdeal> enumerate_normalized_ideals(const SemigroupPtr& S) {
    const std::size_t n = S->window_size();
    std::vector<RelativeIdeal> out;
    if (n == 0) {
        out.emplace_back(S, 0, Window{});
        return out;
    }

    Window w(n, false);
    w[0] = true;
    // Recursive backtracking; excluded branch first gives lexicographic order.
    auto forced = [&](std::size_t o) {
        for (std::size_t p = 0; p < o; ++p)
            if (w[p] && S->contains(static_cast<Int>(o - p))) return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t o) -> void {
        if (o == n) {
            out.emplace_back(S, 0, w);
            return;
        }
        if (!forced(o)) {
            w[o] = false;
            self(self, o + 1);
        }
        w[o] = true;
        self(self, o + 1);
        w[o] = false;
    };
    rec(rec, 1);
    return out;
}

} // namespace nsl
