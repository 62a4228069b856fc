#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trexp {

using Vertex = int;
using Mask = std::uint64_t;

/// Bitset-backed structures hold at most this many vertices.
inline constexpr int kMaxVertices = 64;

/// Malformed or out-of-contract input (maps to CLI exit code 5).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A hypothesis of a structural statement failed validation.
class HypothesisError : public InputError {
public:
    HypothesisError(std::string hypothesis, const std::string& what)
        : InputError(what), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// A search exceeded its node or wall-clock budget (CLI exit code 4).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// Iterate set bits of a mask in increasing order.
template <class Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
    while (m) {
        fn(std::countr_zero(m));
        m &= m - 1;
    }
}

inline std::vector<Vertex> mask_to_vector(Mask m) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

inline Mask vector_to_mask(const std::vector<Vertex>& vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return m;
}

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

/// Unordered vertex triple, stored sorted ascending.
struct Triple {
    std::array<Vertex, 3> v{};

    Triple() = default;
    Triple(Vertex a, Vertex b, Vertex c);

    Vertex operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
    bool contains(const Edge& e) const { return contains(e.u) && contains(e.v); }
    bool distinct() const { return v[0] != v[1] && v[1] != v[2]; }
    Mask mask() const { return bit(v[0]) | bit(v[1]) | bit(v[2]); }
    /// The three pairs in lexicographic order.
    std::array<Edge, 3> pairs() const {
        return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
    }
    /// The vertex of this triple not in pair e (e must be contained).
    Vertex third(const Edge& e) const;
    auto operator<=>(const Triple&) const = default;
};

inline Triple::Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    if (v[0] > v[1]) std::swap(v[0], v[1]);
    if (v[1] > v[2]) std::swap(v[1], v[2]);
    if (v[0] > v[1]) std::swap(v[0], v[1]);
}

inline Vertex Triple::third(const Edge& e) const {
    for (Vertex x : v)
        if (x != e.u && x != e.v) return x;
    return -1;
}

/// Binomial coefficient for small arguments; C(n,k) = 0 when k > n or n < 0.
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace trexp
