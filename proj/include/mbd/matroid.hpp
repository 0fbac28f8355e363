#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbd/common.hpp"
#include "mbd/gf.hpp"
#include "mbd/graph.hpp"

namespace mbd {

/// Representation behind the rank oracle.  An implementation answers rank
/// queries on subsets of a fixed universe [0, universe_size); Matroid layers
/// minor views (alive set + contracted set) on top of it.
class MatroidRep {
public:
    virtual ~MatroidRep() = default;
    virtual int universe_size() const = 0;
    /// Rank of a subset of the universe, given as sorted unique ids.
    virtual int rank_of(const std::vector<int>& sorted_ids) const = 0;
    virtual std::string kind() const = 0;
};

/// A finite matroid given by a rank oracle.
///
/// Element ids are stable: a freshly built matroid has ground set 0..n-1,
/// and minor views keep the surviving elements' original ids.
class Matroid {
public:
    Matroid();  // the empty matroid

    static Matroid linear(const GaloisField& field, int rows,
                          std::vector<std::vector<uint8_t>> columns);
    static Matroid graphic(const Graph& g);
    static Matroid from_circuits(int n, std::vector<std::vector<int>> circuits);
    static Matroid uniform(int rank, int n);
    /// The rank-3 point/line encoding of a graph with k parallel copies of
    /// each vertex point (k >= 1; the public graph encoding requires k >= 2).
    static Matroid rank3(const Graph& g, int k);
    static Matroid from_rep(std::shared_ptr<const MatroidRep> rep);

    const std::vector<int>& ground() const { return alive_; }
    int size() const { return int(alive_.size()); }
    bool contains(int e) const;
    int rank() const { return rank_; }
    std::string kind() const { return rep_->kind(); }
    const MatroidRep& rep() const { return *rep_; }
    const std::vector<int>& contracted_set() const { return contracted_; }
    bool is_view() const;

    const std::vector<std::string>& labels() const { return *labels_; }
    Matroid with_labels(std::vector<std::string> labels) const;

    /// Rank of X (treated as a set; duplicates are ignored).
    int rank(const std::vector<int>& X) const;
    bool is_independent(const std::vector<int>& X) const;
    std::vector<int> closure(const std::vector<int>& X) const;
    std::pair<std::vector<int>, std::vector<int>> loops_and_bridges() const;
    bool is_parallel(int e, int f) const;

    /// Maximal independent set found by scanning elements in ascending id
    /// order, skipping `forbidden`.  Throws PreconditionError when the result
    /// fails to span the matroid.
    std::vector<int> greedy_base(const std::vector<int>& forbidden = {}) const;

    /// The unique circuit inside base+{e}.  Requires `base` independent and
    /// base+{e} dependent (any independent set works, not only maximal ones).
    std::vector<int> fundamental_circuit(const std::vector<int>& base, int e) const;

    /// Partition of the ground set into connectivity components, each sorted,
    /// ordered by smallest element.  Loops are singleton components.
    std::vector<std::vector<int>> components() const;

    Matroid contracted(const std::vector<int>& F) const;
    Matroid deleted(const std::vector<int>& F) const;
    Matroid restricted(const std::vector<int>& F) const;

    /// All circuits of size <= max_size (every circuit if max_size < 0),
    /// by brute-force enumeration.  Guarded to ground sets of at most 20.
    std::vector<std::vector<int>> circuits(int max_size = -1) const;

    /// Re-materializes this (possibly view) matroid as a circuit-listed
    /// matroid over the same element ids, for cross-checks.
    Matroid materialized_circuit_listed() const;

    // Representation accessors; each throws InputError when the matroid is
    // not of the corresponding kind.
    const GaloisField& linear_field() const;
    int linear_rows() const;
    std::vector<std::vector<uint8_t>> linear_columns() const;
    const Graph& graphic_graph() const;
    std::vector<std::vector<int>> listed_circuits() const;
    struct Rank3Params {
        Graph graph;
        int k = 0;
    };
    Rank3Params rank3_params() const;

private:
    Matroid(std::shared_ptr<const MatroidRep> rep, std::vector<int> alive,
            std::vector<int> contracted);

    int rep_rank(std::vector<int> sorted_ids) const;
    std::vector<int> checked_subset(const std::vector<int>& X) const;

    std::shared_ptr<const MatroidRep> rep_;
    std::vector<int> alive_;       // sorted ids present in this view
    std::vector<int> contracted_;  // sorted ids contracted away
    int contracted_rank_ = 0;
    int rank_ = 0;
    std::shared_ptr<const std::vector<std::string>> labels_;
};

struct CircuitAxiomsVerdict {
    bool pass = true;
    std::string axiom;  // "C1", "C2" or "C3" when failing
    std::vector<int> c1, c2;
    int e = -1, f = -1;
    std::string describe() const;
};

/// Checks (C1), (C2) and strong circuit elimination (C3) for a set family
/// over [0, n).  n is limited to 64.
CircuitAxiomsVerdict circuit_axioms_check(int n, const std::vector<std::vector<int>>& family);

}  // namespace mbd
