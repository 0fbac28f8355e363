#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/matroid.hpp"

namespace mbd {

struct RootedTree {
    std::vector<int> parent;  // parent[v]; -1 exactly for the root

    int vertex_count() const { return int(parent.size()); }
    int edge_count() const { return int(parent.size()) - 1; }
    int root() const;
    int depth_of(int v) const;
    int depth() const;
    bool is_leaf(int v) const;
    std::vector<std::vector<int>> children() const;
    std::vector<int> leaves() const;
    void validate() const;
};

/// A rooted tree T with a map f from matroid elements to tree vertices.
/// Valid for M when the tree has r(M) edges and r(X) never exceeds the edge
/// count of the union of root-to-f(x) paths.
struct DepthDecomposition {
    RootedTree tree;
    std::map<int, int> f;  // element id -> tree vertex

    int depth() const { return tree.depth(); }
};

/// Edge count of the union of root-to-f(x) paths over x in X.
int subtree_size(const DepthDecomposition& d, const std::vector<int>& X);

struct ValidateOptions {
    enum class Mode { exhaustive, independent_only, sampled };
    Mode mode = Mode::independent_only;
    long samples = 2000;
    uint64_t seed = 1;
};

struct ValidateResult {
    bool pass = true;
    std::string reason;        // set on structural failures
    std::vector<int> witness;  // subset violating the rank condition
    int witness_rank = 0;
    int witness_allowance = 0;

    std::string describe() const;
};

/// Checks both decomposition conditions.  Exhaustive mode walks every subset
/// (ground sets of at most 22); independent-only mode walks independent sets
/// only, which is equivalent: a maximal independent X' in X has r(X') = r(X)
/// and T*(X') inside T*(X), so any violation is witnessed by an independent
/// set.  Sampled mode draws `samples` uniform subsets from `seed`.
ValidateResult validate(const Matroid& m, const DepthDecomposition& d,
                        const ValidateOptions& opts = {});

/// Remaps every element onto a leaf (the lowest-index descendant leaf of its
/// current vertex).  The input must be valid; the output stays valid because
/// moving images away from the root can only grow T*(X).
DepthDecomposition normalize_to_leaves(const Matroid& m, const DepthDecomposition& d);

struct ConstructStats {
    long calls = 0;           // recursive invocations of the construction
    int largest_circuit = 0;  // largest circuit materialized during the run

    struct Step5Site {
        int e;
        std::vector<int> part;
        std::vector<int> circuit;
    };
    bool record_step5 = false;
    std::vector<Step5Site> step5_sites;
};

/// The recursive decomposition routine for a connected matroid M, one of its
/// circuits C and a non-loop element e of C.  Returns a valid decomposition
/// whose injectively-mapped elements form a base, with depth at most
/// 4^bd(M).
DepthDecomposition construct(const Matroid& m, const std::vector<int>& C, int e,
                             ConstructStats* stats = nullptr);

/// Wrapper for arbitrary matroids: decomposes the connectivity components
/// and glues the resulting trees at a common root.
DepthDecomposition decompose(const Matroid& m, ConstructStats* stats = nullptr);

/// A circuit of M containing e and confined to part + {e}, found as the
/// fundamental circuit of e with respect to a greedy base of M|part.
/// Throws PreconditionError when no such circuit exists.
std::vector<int> find_circuit_through(const Matroid& m, int e, const std::vector<int>& part);

/// Exact branch-depth by enumerating rooted trees with r(M) edges up to
/// isomorphism (canonical level sequences) and searching leaf assignments.
/// Returns nullopt when the value exceeds d_max.  Guarded to r <= 5 and
/// n <= 10; `relax_guard` raises the guard to r <= 8, n <= 12.
std::optional<int> branch_depth_exact(const Matroid& m, int d_max, bool relax_guard = false);

/// Exact graph tree-depth, edge convention (a single vertex has depth 0),
/// by memoized recursion over vertex subsets.  Guarded to 12 vertices.
int tree_depth_exact(const Graph& g);

/// All rooted trees on `vertices` vertices up to isomorphism, as parent
/// arrays (vertex 0 is the root), generated from canonical level sequences.
std::vector<std::vector<int>> all_rooted_trees(int vertices);

}  // namespace mbd
