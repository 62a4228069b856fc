#include "trexp/matching.hpp"

namespace trexp {

namespace {

// Kuhn's augmenting path from left vertex i; owner[x] = left index holding x.
bool augment(const std::vector<Mask>& cand, std::size_t i, Mask& visited, std::vector<int>& owner) {
    Mask options = cand[i] & ~visited;
    while (options) {
        int x = lowest(options);
        options &= options - 1;
        visited |= bit(x);
        int& o = owner[static_cast<std::size_t>(x)];
        if (o < 0 || augment(cand, static_cast<std::size_t>(o), visited, owner)) {
            o = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_sdr(const std::vector<Mask>& candidates) {
    std::vector<int> owner(kMaxVertices, -1);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!candidates[i]) return std::nullopt;
        Mask visited = 0;
        if (!augment(candidates, i, visited, owner)) return std::nullopt;
    }
    std::vector<Vertex> rep(candidates.size(), -1);
    for (int x = 0; x < kMaxVertices; ++x)
        if (owner[static_cast<std::size_t>(x)] >= 0) rep[static_cast<std::size_t>(owner[static_cast<std::size_t>(x)])] = x;
    return rep;
}

std::optional<std::vector<Vertex>> lex_least_sdr(const std::vector<Mask>& candidates) {
    if (!find_sdr(candidates)) return std::nullopt;
    std::vector<Mask> work = candidates;
    std::vector<Vertex> rep(candidates.size(), -1);
    for (std::size_t i = 0; i < work.size(); ++i) {
        Mask options = work[i];
        while (options) {
            int x = lowest(options);
            options &= options - 1;
            std::vector<Mask> trial = work;
            trial[i] = bit(x);
            for (std::size_t j = i + 1; j < trial.size(); ++j) trial[j] &= ~bit(x);
            if (find_sdr(trial)) {
                work = std::move(trial);
                rep[i] = x;
                break;
            }
        }
    }
    return rep;
}

}  // namespace trexp
