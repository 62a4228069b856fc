#include "trexp/canon.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace trexp {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

// Equitable refinement: split cells by neighbour counts into every cell until
// stable. Cell order and split order depend only on isomorphism-invariant data.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Mask> cell_masks;
        cell_masks.reserve(cells.size());
        for (const auto& c : cells) cell_masks.push_back(vector_to_mask(c));
        Partition next;
        next.reserve(cells.size());
        for (const auto& c : cells) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> keyed;
            keyed.reserve(c.size());
            for (Vertex v : c) {
                std::vector<int> sig(cell_masks.size());
                for (std::size_t i = 0; i < cell_masks.size(); ++i)
                    sig[i] = popcount(g.neighbors(v) & cell_masks[i]);
                keyed.emplace_back(std::move(sig), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<Vertex> part;
                    for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
                    std::sort(part.begin(), part.end());
                    next.push_back(std::move(part));
                    start = i;
                }
            }
        }
        changed = next.size() != cells.size();
        cells = std::move(next);
    }
}

struct Leaf {
    std::vector<Mask> rows;  // adjacency of relabelled graph
    std::vector<Vertex> labeling;
};

std::vector<Mask> relabeled_rows(const Graph& g, const std::vector<Vertex>& labeling) {
    std::vector<Mask> rows(static_cast<std::size_t>(g.n()), 0);
    for (const Edge& e : g.edges()) {
        Vertex a = labeling[static_cast<std::size_t>(e.u)], b = labeling[static_cast<std::size_t>(e.v)];
        rows[static_cast<std::size_t>(a)] |= bit(b);
        rows[static_cast<std::size_t>(b)] |= bit(a);
    }
    return rows;
}

bool twins(const Graph& g, Vertex a, Vertex b) {
    return (g.neighbors(a) & ~bit(b)) == (g.neighbors(b) & ~bit(a));
}

void search(const Graph& g, Partition cells, std::optional<Leaf>& best) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) {
            target = i;
            break;
        }
    if (target == cells.size()) {
        std::vector<Vertex> labeling(static_cast<std::size_t>(g.n()));
        for (std::size_t i = 0; i < cells.size(); ++i)
            labeling[static_cast<std::size_t>(cells[i][0])] = static_cast<Vertex>(i);
        auto rows = relabeled_rows(g, labeling);
        if (!best || rows < best->rows) best = Leaf{std::move(rows), std::move(labeling)};
        return;
    }
    const auto cell = cells[target];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
        // Swapping two twins is an automorphism fixing the current partition,
        // so their subtrees give the same certificates.
        bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); });
        if (redundant) continue;
        tried.push_back(v);
        Partition next;
        next.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != target) {
                next.push_back(cells[i]);
                continue;
            }
            next.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : cell)
                if (w != v) rest.push_back(w);
            next.push_back(std::move(rest));
        }
        search(g, std::move(next), best);
    }
}

Leaf canonical_leaf(const Graph& g, Partition initial) {
    std::optional<Leaf> best;
    if (g.n() == 0) return Leaf{};
    search(g, std::move(initial), best);
    return *best;
}

Partition unit_partition(int n) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return Partition{std::move(all)};
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    Leaf leaf = canonical_leaf(g, unit_partition(g.n()));
    CanonicalForm out;
    out.labeling = leaf.labeling;
    out.graph = g.relabeled(leaf.labeling);
    out.key = std::to_string(g.n()) + ":";
    for (std::size_t i = 0; i < out.graph.edges().size(); ++i) {
        const Edge& e = out.graph.edges()[i];
        if (i) out.key += ",";
        out.key += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.size() != b.size()) return false;
    return canonical_form(a).key == canonical_form(b).key;
}

Mask automorphism_orbit(const Graph& g, Vertex v) {
    auto pinned = [&](Vertex x) {
        Partition p;
        std::vector<Vertex> rest;
        for (int i = 0; i < g.n(); ++i)
            if (i != x) rest.push_back(i);
        p.push_back({x});
        if (!rest.empty()) p.push_back(std::move(rest));
        return canonical_leaf(g, std::move(p)).rows;
    };
    auto base = pinned(v);
    Mask orbit = bit(v);
    for (int w = 0; w < g.n(); ++w)
        if (w != v && g.degree(w) == g.degree(v) && pinned(w) == base) orbit |= bit(w);
    return orbit;
}

std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------

OrderlyGenerator::OrderlyGenerator(int n, int r) : n_(n), r_(r) {
    if (r != 2 && r != 3) throw InputError("orderly generation supports r in {2,3}");
    if (n < 0 || binom(n, r) > 64) throw InputError("orderly generation needs C(n,r) <= 64");
    // colex order: all subsets of {0..m-1} precede those containing m
    for (int c = 0; c < n; ++c) {
        if (r == 2) {
            for (int a = 0; a < c; ++a) subsets_.push_back(bit(a) | bit(c));
        } else {
            for (int b = 0; b < c; ++b)
                for (int a = 0; a < b; ++a) subsets_.push_back(bit(a) | bit(b) | bit(c));
        }
    }
}

int OrderlyGenerator::rank(Mask s) const {
    const int a = lowest(s);
    s &= s - 1;
    const int b = lowest(s);
    if (r_ == 2) return b * (b - 1) / 2 + a;
    s &= s - 1;
    const int c = lowest(s);
    return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

// Assigns canonical labels 0,1,... to old vertices. After labelling depth+1
// vertices the bits of every subset inside the labelled prefix are known, and
// these form a prefix of the permuted code; compare block by block.
bool OrderlyGenerator::beats_identity(std::uint64_t code, std::vector<Vertex>& order, Mask used,
                                      int depth) const {
    if (depth == n_) return false;
    const int block_start = static_cast<int>(binom(depth, r_));
    const int block_len = static_cast<int>(binom(depth, r_ - 1));
    const std::uint64_t id_block =
        block_len == 0 ? 0 : (code >> block_start) & low_mask(block_len);
    for (int x = 0; x < n_; ++x) {
        if ((used >> x) & 1U) continue;
        std::uint64_t block = 0;
        for (int j = 0; j < block_len; ++j) {
            Mask s = subsets_[static_cast<std::size_t>(block_start + j)];
            Mask image = bit(x);
            for_each_bit(s & ~bit(depth), [&](int lbl) { image |= bit(order[static_cast<std::size_t>(lbl)]); });
            if ((code >> rank(image)) & 1U) block |= std::uint64_t{1} << j;
        }
        if (block != id_block) {
            std::uint64_t diff = block ^ id_block;
            if (block & diff & (~diff + 1)) return true;  // permuted string is larger
            continue;
        }
        order[static_cast<std::size_t>(depth)] = x;
        if (beats_identity(code, order, used | bit(x), depth + 1)) return true;
    }
    return false;
}

bool OrderlyGenerator::is_canonical(std::uint64_t code) const {
    std::vector<Vertex> order(static_cast<std::size_t>(n_), -1);
    return !beats_identity(code, order, 0, 0);
}

void OrderlyGenerator::enumerate(const std::function<bool(std::uint64_t, int)>& visit) const {
    std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t code, int last) {
        if (!visit(code, last)) return;
        for (int p = last + 1; p < positions(); ++p) {
            std::uint64_t child = code | (std::uint64_t{1} << p);
            if (is_canonical(child)) rec(child, p);
        }
    };
    rec(0, -1);
}

Graph graph_from_code(const OrderlyGenerator& gen, std::uint64_t code) {
    std::vector<Edge> es;
    for_each_bit(code, [&](int p) {
        auto vs = mask_to_vector(gen.subset(p));
        es.emplace_back(vs[0], vs[1]);
    });
    return Graph(gen.n(), es);
}

}  // namespace trexp
