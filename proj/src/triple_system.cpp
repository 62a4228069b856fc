#include "trexp/triple_system.hpp"

#include <algorithm>
#include <string>

namespace trexp {

TripleSystem::TripleSystem(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
    nbr_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    shadow_adj_.assign(static_cast<std::size_t>(n), 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
}

TripleSystem::TripleSystem(int n, std::span<const Triple> edges) : TripleSystem(n) {
    auto at = [&](Vertex a, Vertex b) -> Mask& {
        return nbr_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(b)];
    };
    edges_.reserve(edges.size());
    for (const Triple& raw : edges) {
        Triple t(raw[0], raw[1], raw[2]);
        auto name = [&] {
            return "{" + std::to_string(raw[0]) + "," + std::to_string(raw[1]) + "," +
                   std::to_string(raw[2]) + "}";
        };
        if (t[0] < 0 || t[2] >= n) throw InputError("triple " + name() + " has a vertex outside [0," +
                                                     std::to_string(n) + ")");
        if (!t.distinct()) throw InputError("triple " + name() + " repeats a vertex");
        if (contains(t)) throw InputError("duplicate triple " + name());
        const Vertex a = t[0], b = t[1], c = t[2];
        at(a, b) |= bit(c);
        at(b, a) |= bit(c);
        at(a, c) |= bit(b);
        at(c, a) |= bit(b);
        at(b, c) |= bit(a);
        at(c, b) |= bit(a);
        shadow_adj_[static_cast<std::size_t>(a)] |= bit(b) | bit(c);
        shadow_adj_[static_cast<std::size_t>(b)] |= bit(a) | bit(c);
        shadow_adj_[static_cast<std::size_t>(c)] |= bit(a) | bit(b);
        ++degree_[static_cast<std::size_t>(a)];
        ++degree_[static_cast<std::size_t>(b)];
        ++degree_[static_cast<std::size_t>(c)];
        edges_.push_back(t);
    }
    std::sort(edges_.begin(), edges_.end());
}

int TripleSystem::max_codegree() const {
    int best = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) best = std::max(best, codegree(u, v));
    return best;
}

TripleSystem TripleSystem::without(std::span<const Triple> removed) const {
    std::vector<Triple> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Triple> rest;
    std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                        std::back_inserter(rest));
    return TripleSystem(n_, rest);
}

std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(binom(n, 3)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.emplace_back(a, b, c);
    return out;
}

TripleSystem complete_triple_system(int n) { return TripleSystem(n, all_triples(n)); }

}  // namespace trexp
