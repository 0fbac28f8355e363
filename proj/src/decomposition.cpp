#include "mbd/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <random>
#include <unordered_map>

namespace mbd {

int RootedTree::root() const {
    int r = -1;
    for (size_t v = 0; v < parent.size(); ++v) {
        if (parent[v] < 0) {
            if (r >= 0) throw PreconditionError("tree has two roots");
            r = int(v);
        }
    }
    if (r < 0) throw PreconditionError("tree has no root");
    return r;
}

int RootedTree::depth_of(int v) const {
    int d = 0;
    while (parent[v] >= 0) {
        v = parent[v];
        ++d;
        if (d > int(parent.size())) throw PreconditionError("tree has a parent cycle");
    }
    return d;
}

int RootedTree::depth() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v) d = std::max(d, depth_of(v));
    return d;
}

bool RootedTree::is_leaf(int v) const {
    for (int u = 0; u < vertex_count(); ++u)
        if (parent[u] == v) return false;
    return true;
}

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> ch(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        if (parent[v] >= 0) ch[parent[v]].push_back(v);
    return ch;
}

std::vector<int> RootedTree::leaves() const {
    std::vector<char> has_child(vertex_count(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        if (parent[v] >= 0) has_child[parent[v]] = 1;
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!has_child[v]) out.push_back(v);
    return out;
}

void RootedTree::validate() const {
    if (parent.empty()) throw PreconditionError("empty tree");
    (void)root();
    for (int v = 0; v < vertex_count(); ++v) {
        if (parent[v] >= vertex_count()) throw PreconditionError("tree parent out of range");
        (void)depth_of(v);
    }
}

int subtree_size(const DepthDecomposition& d, const std::vector<int>& X) {
    std::vector<char> mark(d.tree.vertex_count(), 0);
    int count = 0;
    for (int x : X) {
        auto it = d.f.find(x);
        if (it == d.f.end()) throw InputError("element " + std::to_string(x) + " is not mapped");
        int v = it->second;
        while (d.tree.parent[v] >= 0 && !mark[v]) {
            mark[v] = 1;
            ++count;
            v = d.tree.parent[v];
        }
    }
    return count;
}

std::string ValidateResult::describe() const {
    if (pass) return "pass";
    if (!reason.empty()) return "fail: " + reason;
    std::string s = "fail: r(X)=" + std::to_string(witness_rank) +
                    " > " + std::to_string(witness_allowance) + " for X={";
    for (size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
    return s + "}";
}

namespace {

struct PathMasks {
    // Bitmask of non-root vertices on the root path of each element,
    // indexed by ground position.  Only usable when the tree is small.
    std::vector<uint64_t> mask;
};

std::optional<PathMasks> path_masks(const Matroid& m, const DepthDecomposition& d) {
    if (d.tree.vertex_count() > 64) return std::nullopt;
    PathMasks pm;
    pm.mask.reserve(m.size());
    for (int e : m.ground()) {
        int v = d.f.at(e);
        uint64_t mask = 0;
        while (d.tree.parent[v] >= 0) {
            mask |= uint64_t(1) << v;
            v = d.tree.parent[v];
        }
        pm.mask.push_back(mask);
    }
    return pm;
}

// Depth-first subset walk in ascending id order; reports the first failure.
bool walk_subsets(const Matroid& m, const PathMasks& pm, bool independent_only,
                  std::vector<int>& cur, uint64_t cur_mask, size_t start, ValidateResult& out) {
    const std::vector<int>& ground = m.ground();
    for (size_t i = start; i < ground.size(); ++i) {
        cur.push_back(ground[i]);
        uint64_t mask = cur_mask | pm.mask[i];
        int r = m.rank(cur);
        bool extend = true;
        if (independent_only && r < int(cur.size())) {
            extend = false;  // dependent: covered by a maximal independent subset
        } else if (r > std::popcount(mask)) {
            out.pass = false;
            out.witness = cur;
            out.witness_rank = r;
            out.witness_allowance = std::popcount(mask);
            return false;
        }
        if (extend && !walk_subsets(m, pm, independent_only, cur, mask, i + 1, out)) return false;
        cur.pop_back();
    }
    return true;
}

}  // namespace

ValidateResult validate(const Matroid& m, const DepthDecomposition& d, const ValidateOptions& opts) {
    ValidateResult res;
    d.tree.validate();
    for (int e : m.ground()) {
        auto it = d.f.find(e);
        if (it == d.f.end()) {
            res.pass = false;
            res.reason = "element " + std::to_string(e) + " is unmapped";
            return res;
        }
        if (it->second < 0 || it->second >= d.tree.vertex_count()) {
            res.pass = false;
            res.reason = "element " + std::to_string(e) + " maps outside the tree";
            return res;
        }
    }
    if (d.tree.edge_count() != m.rank()) {
        res.pass = false;
        res.reason = "tree has " + std::to_string(d.tree.edge_count()) + " edges but r(M) = " +
                     std::to_string(m.rank());
        return res;
    }

    if (opts.mode == ValidateOptions::Mode::sampled) {
        std::mt19937_64 rng(opts.seed);
        for (long s = 0; s < opts.samples; ++s) {
            std::vector<int> X;
            for (int e : m.ground())
                if (rng() & 1) X.push_back(e);
            int r = m.rank(X);
            int cap = subtree_size(d, X);
            if (r > cap) {
                res.pass = false;
                res.witness = X;
                res.witness_rank = r;
                res.witness_allowance = cap;
                return res;
            }
        }
        return res;
    }

    if (opts.mode == ValidateOptions::Mode::exhaustive && m.size() > 22)
        throw GuardError("exhaustive validation is limited to 22 elements");
    auto pm = path_masks(m, d);
    if (!pm) throw GuardError("validation needs a tree with at most 64 vertices");
    std::vector<int> cur;
    walk_subsets(m, *pm, opts.mode == ValidateOptions::Mode::independent_only, cur, 0, 0, res);
    return res;
}

DepthDecomposition normalize_to_leaves(const Matroid& m, const DepthDecomposition& d) {
    ValidateResult v = validate(m, d);
    if (!v.pass) throw InputError("normalize_to_leaves: input decomposition is invalid: " + v.describe());

    // Lowest-index descendant leaf of each vertex.
    int V = d.tree.vertex_count();
    std::vector<int> desc_leaf(V, -1);
    // Vertices in decreasing depth order so children are resolved first.
    std::vector<int> order(V);
    for (int i = 0; i < V; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return d.tree.depth_of(a) > d.tree.depth_of(b);
    });
    auto ch = d.tree.children();
    for (int v2 : order) {
        if (ch[v2].empty()) {
            desc_leaf[v2] = v2;
        } else {
            int best = std::numeric_limits<int>::max();
            for (int c : ch[v2]) best = std::min(best, desc_leaf[c]);
            desc_leaf[v2] = best;
        }
    }
    DepthDecomposition out = d;
    for (auto& [e, v2] : out.f) v2 = desc_leaf[v2];
    return out;
}

namespace {

// Assembly helpers for the recursive construction.  Working trees always
// have their root at vertex 0; the public entry points renumber vertices
// canonically at the end.

DepthDecomposition step0_tree(const Matroid& m) {
    DepthDecomposition d;
    d.tree.parent = {-1};
    for (int e : m.ground()) d.f[e] = 0;
    return d;
}

DepthDecomposition step1_tree(const Matroid& m) {
    DepthDecomposition d;
    d.tree.parent = {-1, 0};
    for (int e : m.ground()) d.f[e] = 1;
    return d;
}

// New root above the old one; e lands on the old root.
DepthDecomposition extend_root(const DepthDecomposition& child, int e) {
    DepthDecomposition d;
    d.tree.parent.resize(child.tree.vertex_count() + 1);
    d.tree.parent[0] = -1;
    for (int v = 0; v < child.tree.vertex_count(); ++v)
        d.tree.parent[v + 1] = child.tree.parent[v] < 0 ? 0 : child.tree.parent[v] + 1;
    for (auto [el, v] : child.f) d.f[el] = v + 1;
    d.f[e] = 1;
    return d;
}

// Smallest element mapped into the subtree of each vertex (INT_MAX if none).
std::vector<int> subtree_min_element(const DepthDecomposition& d) {
    int V = d.tree.vertex_count();
    std::vector<int> best(V, std::numeric_limits<int>::max());
    for (auto [e, v] : d.f) best[v] = std::min(best[v], e);
    std::vector<int> order(V);
    for (int i = 0; i < V; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return d.tree.depth_of(a) > d.tree.depth_of(b);
    });
    for (int v : order)
        if (d.tree.parent[v] >= 0) best[d.tree.parent[v]] = std::min(best[d.tree.parent[v]], best[v]);
    return best;
}

// The leaf reached from the root by always descending into the child whose
// subtree holds the smallest element.
int designated_leaf(const DepthDecomposition& d) {
    std::vector<int> best = subtree_min_element(d);
    auto ch = d.tree.children();
    int v = d.tree.root();
    while (!ch[v].empty()) {
        int pick = ch[v][0];
        for (int c : ch[v])
            if (best[c] < best[pick] || (best[c] == best[pick] && c < pick)) pick = c;
        v = pick;
    }
    return v;
}

// Identify the roots of all parts into a single vertex.  With `add_root` a
// fresh root is placed above the identified vertex.  Elements mapped onto
// identified roots (other than `attach_elem`) come from rank-0 parts; they
// are re-homed onto the designated leaf so that non-base elements always sit
// on leaves, which never shrinks any T*(X).
DepthDecomposition glue(const std::vector<DepthDecomposition>& parts, bool add_root,
                        std::optional<int> attach_elem) {
    DepthDecomposition d;
    int merged = add_root ? 1 : 0;
    if (add_root) d.tree.parent.push_back(-1);
    d.tree.parent.push_back(add_root ? 0 : -1);  // the identified root
    for (const auto& part : parts) {
        int off = d.tree.vertex_count();
        for (int v = 1; v < part.tree.vertex_count(); ++v)
            d.tree.parent.push_back(part.tree.parent[v] == 0 ? merged : part.tree.parent[v] + off - 1);
        for (auto [e, v] : part.f) d.f[e] = v == 0 ? merged : v + off - 1;
    }
    if (attach_elem) d.f[*attach_elem] = merged;

    if (d.tree.vertex_count() > merged + 1) {
        int leaf = -1;
        for (auto& [e, v] : d.f) {
            if (v != merged) continue;
            if (attach_elem && e == *attach_elem) continue;
            if (leaf < 0) leaf = designated_leaf(d);
            v = leaf;
        }
    }
    return d;
}

// Stable renumbering: breadth-first from the root, children ordered by the
// smallest element in their subtree.
DepthDecomposition canonicalized(const DepthDecomposition& d) {
    std::vector<int> best = subtree_min_element(d);
    auto ch = d.tree.children();
    std::vector<int> new_id(d.tree.vertex_count(), -1);
    std::vector<int> queue{d.tree.root()};
    new_id[d.tree.root()] = 0;
    int next = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        std::vector<int> kids = ch[v];
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            if (best[a] != best[b]) return best[a] < best[b];
            return a < b;
        });
        for (int c : kids) {
            new_id[c] = next++;
            queue.push_back(c);
        }
    }
    DepthDecomposition out;
    out.tree.parent.assign(d.tree.vertex_count(), -1);
    for (int v = 0; v < d.tree.vertex_count(); ++v)
        if (d.tree.parent[v] >= 0) out.tree.parent[new_id[v]] = new_id[d.tree.parent[v]];
    for (auto [e, v] : d.f) out.f[e] = new_id[v];
    return out;
}

bool is_circuit_of(const Matroid& m, const std::vector<int>& C) {
    if (C.empty()) return false;
    if (m.rank(C) != int(C.size()) - 1) return false;
    for (int x : C) {
        std::vector<int> rest;
        for (int y : C)
            if (y != x) rest.push_back(y);
        if (!m.is_independent(rest)) return false;
    }
    return true;
}

// A circuit through e of length >= 3, from a greedy base avoiding e and
// everything parallel to it.  Connectivity (rank >= 2) guarantees existence;
// failures surface as PreconditionError rather than being patched over.
std::vector<int> circuit_through_of_length3(const Matroid& m, int e) {
    std::vector<int> forbidden{e};
    for (int f : m.ground())
        if (f != e && m.is_parallel(e, f)) forbidden.push_back(f);
    std::vector<int> base = m.greedy_base(forbidden);
    std::vector<int> circuit = m.fundamental_circuit(base, e);
    if (circuit.size() < 3)
        throw PreconditionError("no circuit of length >= 3 through element " + std::to_string(e) +
                                " in a connected matroid of rank >= 2");
    return circuit;
}

int min_excluding(const std::vector<int>& v, int skip) {
    int best = std::numeric_limits<int>::max();
    for (int x : v)
        if (x != skip) best = std::min(best, x);
    return best;
}

DepthDecomposition construct_impl(const Matroid& m, const std::vector<int>& C, int e,
                                  ConstructStats& stats) {
    ++stats.calls;
    if (m.rank() == 0) return step0_tree(m);
    if (m.rank() == 1) return step1_tree(m);

    if (C.size() <= 2) {
        std::vector<int> C2 = circuit_through_of_length3(m, e);
        stats.largest_circuit = std::max(stats.largest_circuit, int(C2.size()));
        return construct_impl(m, C2, e, stats);
    }

    Matroid contracted = m.contracted({e});
    std::vector<std::vector<int>> comps = contracted.components();

    std::vector<int> c_rest;
    for (int x : C)
        if (x != e) c_rest.push_back(x);

    if (comps.size() <= 1) {
        DepthDecomposition child = construct_impl(contracted, c_rest, min_excluding(C, e), stats);
        return extend_root(child, e);
    }

    // The contraction split; handle the component holding C\{e} first, then
    // the others, each through a circuit of m confined to it.
    size_t comp0 = comps.size();
    for (size_t i = 0; i < comps.size(); ++i) {
        if (std::binary_search(comps[i].begin(), comps[i].end(), c_rest[0])) {
            comp0 = i;
            break;
        }
    }
    if (comp0 == comps.size()) throw PreconditionError("circuit lost during contraction");
    for (int x : c_rest)
        if (!std::binary_search(comps[comp0].begin(), comps[comp0].end(), x))
            throw PreconditionError("contracted circuit crosses components");

    std::vector<DepthDecomposition> parts;
    parts.push_back(
        construct_impl(contracted.restricted(comps[comp0]), c_rest, min_excluding(C, e), stats));
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i == comp0) continue;
        std::vector<int> ci = find_circuit_through(m, e, comps[i]);
        stats.largest_circuit = std::max(stats.largest_circuit, int(ci.size()));
        if (stats.record_step5) stats.step5_sites.push_back({e, comps[i], ci});
        std::vector<int> ci_rest;
        for (int x : ci)
            if (x != e) ci_rest.push_back(x);
        parts.push_back(construct_impl(contracted.restricted(comps[i]), ci_rest,
                                       min_excluding(ci, e), stats));
    }
    return glue(parts, /*add_root=*/true, e);
}

}  // namespace

DepthDecomposition construct(const Matroid& m, const std::vector<int>& C, int e,
                             ConstructStats* stats) {
    if (m.components().size() > 1)
        throw PreconditionError("construct requires a connected matroid; use decompose");
    if (!is_circuit_of(m, C)) throw PreconditionError("C is not a circuit of M");
    if (std::find(C.begin(), C.end(), e) == C.end())
        throw PreconditionError("e is not an element of C");
    if (m.rank() >= 2 && m.rank({e}) == 0) throw PreconditionError("e is a loop");

    ConstructStats local;
    ConstructStats& s = stats ? *stats : local;
    s.largest_circuit = std::max(s.largest_circuit, int(C.size()));
    return canonicalized(construct_impl(m, C, e, s));
}

DepthDecomposition decompose(const Matroid& m, ConstructStats* stats) {
    ConstructStats local;
    ConstructStats& s = stats ? *stats : local;

    std::vector<DepthDecomposition> parts;
    std::vector<int> loop_elements;
    for (const std::vector<int>& comp : m.components()) {
        Matroid sub = m.restricted(comp);
        if (sub.rank() == 0) {
            loop_elements.insert(loop_elements.end(), comp.begin(), comp.end());
        } else if (sub.size() == 1) {
            parts.push_back(step1_tree(sub));  // a lone coloop has no circuit
        } else {
            std::vector<int> base = sub.greedy_base();
            int e0 = -1;
            for (int x : comp) {
                if (!std::binary_search(base.begin(), base.end(), x)) {
                    e0 = x;
                    break;
                }
            }
            if (e0 < 0) throw PreconditionError("multi-element component without a circuit");
            std::vector<int> C = sub.fundamental_circuit(base, e0);
            s.largest_circuit = std::max(s.largest_circuit, int(C.size()));
            parts.push_back(construct_impl(sub, C, min_excluding(C, -1), s));
        }
    }

    DepthDecomposition d = glue(parts, /*add_root=*/false, std::nullopt);
    if (d.tree.edge_count() > 0 && !loop_elements.empty()) {
        int leaf = designated_leaf(d);
        for (int e : loop_elements) d.f[e] = leaf;
    } else {
        for (int e : loop_elements) d.f[e] = 0;
    }
    return canonicalized(d);
}

std::vector<int> find_circuit_through(const Matroid& m, int e, const std::vector<int>& part) {
    if (!m.contains(e)) throw InputError("element outside ground set");
    std::vector<int> p;
    for (int x : part)
        if (x != e) p.push_back(x);
    std::vector<int> base = m.restricted(p).greedy_base();
    std::vector<int> with_e = base;
    with_e.push_back(e);
    if (m.is_independent(with_e))
        throw PreconditionError("no circuit through " + std::to_string(e) +
                                " inside the given part");
    return m.fundamental_circuit(base, e);
}

namespace {

// Searches for f: elements -> leaves(T) making (T, f) a valid decomposition.
// The binding constraints are X = f^{-1}(S) over leaf subsets S, so blocks
// are grown element by element under those rank caps.
class AssignmentSearch {
public:
    AssignmentSearch(const RootedTree& tree, const std::vector<int>& rank_table, int n)
        : rank_table_(rank_table), n_(n) {
        leaves_ = tree.leaves();
        int L = int(leaves_.size());
        std::vector<uint32_t> path(L, 0);
        for (int i = 0; i < L; ++i) {
            int v = leaves_[i];
            while (tree.parent[v] >= 0) {
                path[i] |= uint32_t(1) << v;
                v = tree.parent[v];
            }
        }
        cap_.assign(size_t(1) << L, 0);
        union_.assign(size_t(1) << L, 0);
        for (uint32_t S = 1; S < (uint32_t(1) << L); ++S) cap_[S] = std::popcount(path_union(path, S));
        subsets_with_.resize(L);
        for (uint32_t S = 1; S < (uint32_t(1) << L); ++S)
            for (int l = 0; l < L; ++l)
                if (S >> l & 1) subsets_with_[l].push_back(S);
        blocks_.assign(L, 0);
    }

    bool run() { return dfs(0, int(leaves_.size())); }

private:
    static uint32_t path_union(const std::vector<uint32_t>& path, uint32_t S) {
        uint32_t u = 0;
        for (int l = 0; S; ++l, S >>= 1)
            if (S & 1) u |= path[l];
        return u;
    }

    bool dfs(int elem, int empty_blocks) {
        if (elem == n_) return empty_blocks == 0;
        if (n_ - elem < empty_blocks) return false;  // cannot cover every leaf
        for (int l = 0; l < int(leaves_.size()); ++l) {
            bool was_empty = blocks_[l] == 0;
            bool ok = true;
            for (uint32_t S : subsets_with_[l]) {
                if (rank_table_[union_[S] | (uint32_t(1) << elem)] > cap_[S]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            blocks_[l] |= uint32_t(1) << elem;
            for (uint32_t S : subsets_with_[l]) union_[S] |= uint32_t(1) << elem;
            if (dfs(elem + 1, empty_blocks - (was_empty ? 1 : 0))) return true;
            blocks_[l] &= ~(uint32_t(1) << elem);
            for (uint32_t S : subsets_with_[l]) union_[S] &= ~(uint32_t(1) << elem);
        }
        return false;
    }

    const std::vector<int>& rank_table_;
    int n_;
    std::vector<int> leaves_;
    std::vector<int> cap_;
    std::vector<uint32_t> union_;
    std::vector<std::vector<uint32_t>> subsets_with_;
    std::vector<uint32_t> blocks_;
};

}  // namespace

std::vector<std::vector<int>> all_rooted_trees(int vertices) {
    if (vertices <= 0) throw InputError("tree enumeration needs at least one vertex");
    std::vector<std::vector<int>> out;
    if (vertices == 1) {
        out.push_back({-1});
        return out;
    }
    // Canonical level-sequence generation: start from the path, repeatedly
    // rewind the last level > 2 onto its previous attachable position.
    std::vector<int> s(vertices);
    for (int i = 0; i < vertices; ++i) s[i] = i + 1;
    while (true) {
        std::vector<int> parent(vertices, -1);
        for (int i = 1; i < vertices; ++i) {
            for (int j = i - 1; j >= 0; --j) {
                if (s[j] == s[i] - 1) {
                    parent[i] = j;
                    break;
                }
            }
        }
        out.push_back(parent);
        int p = -1;
        for (int i = vertices - 1; i >= 1; --i) {
            if (s[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (s[i] == s[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < vertices; ++i) s[i] = s[i - (p - q)];
    }
    return out;
}

std::optional<int> branch_depth_exact(const Matroid& m, int d_max, bool relax_guard) {
    int r = m.rank();
    int n = m.size();
    int r_cap = relax_guard ? 8 : 5;
    int n_cap = relax_guard ? 12 : 10;
    if (r > r_cap || n > n_cap)
        throw GuardError("branch_depth_exact guard exceeded (rank " + std::to_string(r) +
                         ", elements " + std::to_string(n) + ")");
    if (d_max < 0) return std::nullopt;
    if (r == 0) return 0;

    std::vector<int> rank_table(size_t(1) << n, 0);
    const std::vector<int>& ground = m.ground();
    std::vector<int> subset;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) subset.push_back(ground[i]);
        rank_table[mask] = m.rank(subset);
    }

    std::vector<std::vector<int>> trees = all_rooted_trees(r + 1);
    std::vector<int> tree_depth(trees.size());
    for (size_t t = 0; t < trees.size(); ++t) {
        RootedTree rt{trees[t]};
        tree_depth[t] = rt.depth();
    }
    for (int d = 1; d <= std::min(d_max, r); ++d) {
        for (size_t t = 0; t < trees.size(); ++t) {
            if (tree_depth[t] != d) continue;
            RootedTree rt{trees[t]};
            AssignmentSearch search(rt, rank_table, n);
            if (search.run()) return d;
        }
    }
    return std::nullopt;
}

int tree_depth_exact(const Graph& g) {
    if (g.n > 12) throw GuardError("tree_depth_exact is limited to 12 vertices");
    if (g.n == 0) return 0;
    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    std::unordered_map<uint32_t, int> memo;

    auto components_of = [&](uint32_t mask) {
        std::vector<uint32_t> comps;
        uint32_t left = mask;
        while (left) {
            uint32_t comp = left & -left;
            while (true) {
                uint32_t grown = comp;
                for (int v = 0; v < g.n; ++v)
                    if (comp >> v & 1) grown |= adj[v] & mask;
                if (grown == comp) break;
                comp = grown;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    };

    std::function<int(uint32_t)> td = [&](uint32_t mask) -> int {
        if (std::popcount(mask) <= 1) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<uint32_t> comps = components_of(mask);
        int result;
        if (comps.size() > 1) {
            result = 0;
            for (uint32_t c : comps) result = std::max(result, td(c));
        } else {
            result = std::numeric_limits<int>::max();
            for (int v = 0; v < g.n; ++v)
                if (mask >> v & 1) result = std::min(result, td(mask & ~(uint32_t(1) << v)));
            result += 1;
        }
        memo.emplace(mask, result);
        return result;
    };

    uint32_t all = g.n == 32 ? ~uint32_t(0) : (uint32_t(1) << g.n) - 1;
    return td(all);
}

}  // namespace mbd
