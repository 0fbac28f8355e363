#include "mbd/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "mbd/linalg.hpp"
#include "mbd/union_find.hpp"

namespace mbd {
namespace {

std::vector<int> normalize_set(std::vector<int> X) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    return X;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

namespace detail {

class LinearRep : public MatroidRep {
public:
    LinearRep(GaloisField field, int rows, std::vector<std::vector<uint8_t>> cols)
        : field_(std::move(field)), rows_(rows), cols_(std::move(cols)) {
        if (rows_ < 0) throw InputError("linear matroid: negative row count");
        for (const auto& c : cols_) {
            if (int(c.size()) != rows_) throw InputError("linear matroid: ragged columns");
            for (uint8_t x : c)
                if (x >= field_.q()) throw InputError("linear matroid: entry outside field");
        }
        if (field_.q() == 2 && rows_ <= 64) {
            bits_.reserve(cols_.size());
            for (const auto& c : cols_) {
                uint64_t b = 0;
                for (int r = 0; r < rows_; ++r)
                    if (c[r]) b |= uint64_t(1) << r;
                bits_.push_back(b);
            }
        }
    }

    int universe_size() const override { return int(cols_.size()); }
    std::string kind() const override { return "linear"; }

    int rank_of(const std::vector<int>& ids) const override {
        if (!bits_.empty()) {
            // GF(2): columns as bit rows, xor elimination.
            uint64_t basis[64];
            int rank = 0;
            for (int id : ids) {
                uint64_t v = bits_[id];
                for (int i = 0; i < rank; ++i) {
                    uint64_t low = basis[i] & -basis[i];
                    if (v & low) v ^= basis[i];
                }
                if (v) basis[rank++] = v;
            }
            return rank;
        }
        std::vector<std::vector<uint8_t>> vecs;
        vecs.reserve(ids.size());
        for (int id : ids) vecs.push_back(cols_[id]);
        return matrix_rank(std::move(vecs), field_);
    }

    const GaloisField& field() const { return field_; }
    int rows() const { return rows_; }
    const std::vector<std::vector<uint8_t>>& columns() const { return cols_; }

private:
    GaloisField field_;
    int rows_;
    std::vector<std::vector<uint8_t>> cols_;
    std::vector<uint64_t> bits_;
};

class GraphicRep : public MatroidRep {
public:
    explicit GraphicRep(Graph g) : graph_(std::move(g)) {}

    int universe_size() const override { return int(graph_.edges.size()); }
    std::string kind() const override { return "graphic"; }

    int rank_of(const std::vector<int>& ids) const override {
        // rank = touched vertices - forest components
        UnionFind uf(graph_.n);
        int rank = 0;
        for (int id : ids) {
            auto [u, v] = graph_.edges[id];
            if (uf.unite(u, v)) ++rank;
        }
        return rank;
    }

    const Graph& graph() const { return graph_; }

private:
    Graph graph_;
};

class CircuitsRep : public MatroidRep {
public:
    CircuitsRep(int n, std::vector<std::vector<int>> circuits) : n_(n) {
        if (n < 0 || n > 63) throw GuardError("circuit-listed matroid supports at most 63 elements");
        masks_.reserve(circuits.size());
        for (auto& c : circuits) {
            c = normalize_set(std::move(c));
            if (c.empty()) throw InputError("circuit family violates (C1): empty circuit");
            uint64_t m = 0;
            for (int e : c) {
                if (e < 0 || e >= n) throw InputError("circuit element out of range");
                m |= uint64_t(1) << e;
            }
            masks_.push_back(m);
        }
        std::sort(masks_.begin(), masks_.end());
        masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
        for (size_t i = 0; i < masks_.size(); ++i)
            for (size_t j = 0; j < masks_.size(); ++j)
                if (i != j && (masks_[i] & masks_[j]) == masks_[i])
                    throw InputError("circuit family violates (C2): nested circuits");
        by_element_.resize(n);
        for (size_t i = 0; i < masks_.size(); ++i)
            for (int e = 0; e < n; ++e)
                if (masks_[i] >> e & 1) by_element_[e].push_back(int(i));
    }

    std::vector<std::vector<int>> circuit_list() const {
        std::vector<std::vector<int>> out;
        out.reserve(masks_.size());
        for (uint64_t m : masks_) {
            std::vector<int> c;
            for (int e = 0; e < n_; ++e)
                if (m >> e & 1) c.push_back(e);
            out.push_back(std::move(c));
        }
        return out;
    }

    int universe_size() const override { return n_; }
    std::string kind() const override { return "circuits"; }

    int rank_of(const std::vector<int>& ids) const override {
        // Greedy in id order; correct for any matroid rank function.
        uint64_t cur = 0;
        int rank = 0;
        for (int id : ids) {
            uint64_t cand = cur | uint64_t(1) << id;
            bool dependent = false;
            for (int ci : by_element_[id]) {
                if ((masks_[ci] & cand) == masks_[ci]) {
                    dependent = true;
                    break;
                }
            }
            if (!dependent) {
                cur = cand;
                ++rank;
            }
        }
        return rank;
    }

private:
    int n_;
    std::vector<uint64_t> masks_;
    std::vector<std::vector<int>> by_element_;
};

class UniformRep : public MatroidRep {
public:
    UniformRep(int rank, int n) : rank_(rank), n_(n) {
        if (rank < 0 || n < 0 || rank > n) throw InputError("uniform matroid requires 0 <= rank <= n");
    }

    int universe_size() const override { return n_; }
    std::string kind() const override { return "uniform"; }
    int rank_of(const std::vector<int>& ids) const override {
        return std::min(int(ids.size()), rank_);
    }

private:
    int rank_, n_;
};

// Rank-3 point/line encoding: each parallel class is a point of a rank-3
// geometry whose only non-trivial lines are the triples
// {class(u), class(v), class(uv)} for edges uv.
class Rank3Rep : public MatroidRep {
public:
    Rank3Rep(const Graph& g, int k)
        : graph_(g), k_(k), n_vertices_(g.n), n_edges_(int(g.edges.size())) {
        if (k < 1) throw InputError("rank-3 encoding requires k >= 1");
        int n = universe_size();
        class_of_.resize(n);
        for (int v = 0; v < g.n; ++v)
            for (int i = 0; i < k; ++i) class_of_[v * k + i] = v;
        for (int e = 0; e < n_edges_; ++e) class_of_[g.n * k + e] = g.n + e;
        for (int e = 0; e < n_edges_; ++e) {
            auto [u, v] = g.edges[e];
            lines_.insert(line_key(u, v, g.n + e));
        }
    }

    int universe_size() const override { return n_vertices_ * k_ + n_edges_; }
    std::string kind() const override { return "rank3"; }

    int rank_of(const std::vector<int>& ids) const override {
        int cls[3];
        int distinct = 0;
        for (int id : ids) {
            int c = class_of_[id];
            bool seen = false;
            for (int i = 0; i < distinct; ++i) seen = seen || cls[i] == c;
            if (seen) continue;
            if (distinct == 3) return 3;  // four distinct points are never collinear
            cls[distinct++] = c;
        }
        if (distinct < 3) return distinct;
        return lines_.count(line_key(cls[0], cls[1], cls[2])) ? 2 : 3;
    }

    int parallel_class(int id) const { return class_of_[id]; }
    const Graph& graph() const { return graph_; }
    int k() const { return k_; }

private:
    uint64_t line_key(int a, int b, int c) const {
        int x[3] = {a, b, c};
        std::sort(x, x + 3);
        uint64_t base = uint64_t(n_vertices_ + n_edges_);
        return (uint64_t(x[0]) * base + x[1]) * base + x[2];
    }

    Graph graph_;
    int k_, n_vertices_, n_edges_;
    std::vector<int> class_of_;
    std::unordered_set<uint64_t> lines_;
};

}  // namespace detail

namespace {

template <typename Rep>
const Rep& rep_as(const Matroid& m, const char* required) {
    const Rep* r = dynamic_cast<const Rep*>(&m.rep());
    if (!r)
        throw InputError(std::string("this operation requires a ") + required +
                         " matroid, got " + m.kind());
    return *r;
}

}  // namespace

Matroid::Matroid() : Matroid(std::make_shared<detail::UniformRep>(0, 0), {}, {}) {}

Matroid::Matroid(std::shared_ptr<const MatroidRep> rep, std::vector<int> alive,
                 std::vector<int> contracted)
    : rep_(std::move(rep)), alive_(std::move(alive)), contracted_(std::move(contracted)) {
    contracted_rank_ = contracted_.empty() ? 0 : rep_->rank_of(contracted_);
    rank_ = rep_rank(sorted_union(alive_, {})) ;
    labels_ = std::make_shared<const std::vector<std::string>>();
}

Matroid Matroid::from_rep(std::shared_ptr<const MatroidRep> rep) {
    std::vector<int> alive(rep->universe_size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = int(i);
    return Matroid(std::move(rep), std::move(alive), {});
}

Matroid Matroid::linear(const GaloisField& field, int rows,
                        std::vector<std::vector<uint8_t>> columns) {
    return from_rep(std::make_shared<detail::LinearRep>(field, rows, std::move(columns)));
}

Matroid Matroid::graphic(const Graph& g) {
    return from_rep(std::make_shared<detail::GraphicRep>(g));
}

Matroid Matroid::from_circuits(int n, std::vector<std::vector<int>> circuits) {
    return from_rep(std::make_shared<detail::CircuitsRep>(n, std::move(circuits)));
}

Matroid Matroid::uniform(int rank, int n) {
    return from_rep(std::make_shared<detail::UniformRep>(rank, n));
}

Matroid Matroid::rank3(const Graph& g, int k) {
    return from_rep(std::make_shared<detail::Rank3Rep>(g, k));
}

const GaloisField& Matroid::linear_field() const {
    return rep_as<detail::LinearRep>(*this, "linear").field();
}

int Matroid::linear_rows() const { return rep_as<detail::LinearRep>(*this, "linear").rows(); }

std::vector<std::vector<uint8_t>> Matroid::linear_columns() const {
    return rep_as<detail::LinearRep>(*this, "linear").columns();
}

const Graph& Matroid::graphic_graph() const {
    return rep_as<detail::GraphicRep>(*this, "graphic").graph();
}

std::vector<std::vector<int>> Matroid::listed_circuits() const {
    return rep_as<detail::CircuitsRep>(*this, "circuit-listed").circuit_list();
}

Matroid::Rank3Params Matroid::rank3_params() const {
    const auto& rep = rep_as<detail::Rank3Rep>(*this, "rank3");
    return {rep.graph(), rep.k()};
}

bool Matroid::contains(int e) const {
    return std::binary_search(alive_.begin(), alive_.end(), e);
}

bool Matroid::is_view() const {
    return !contracted_.empty() || int(alive_.size()) != rep_->universe_size();
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
    if (int(labels.size()) != rep_->universe_size())
        throw InputError("labels must cover the whole ground set");
    Matroid m = *this;
    m.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    return m;
}

int Matroid::rep_rank(std::vector<int> sorted_ids) const {
    if (contracted_.empty()) return rep_->rank_of(sorted_ids);
    return rep_->rank_of(sorted_union(sorted_ids, contracted_)) - contracted_rank_;
}

std::vector<int> Matroid::checked_subset(const std::vector<int>& X) const {
    std::vector<int> s = normalize_set(X);
    for (int e : s)
        if (!contains(e))
            throw InputError("element " + std::to_string(e) + " is outside the ground set");
    return s;
}

int Matroid::rank(const std::vector<int>& X) const { return rep_rank(checked_subset(X)); }

bool Matroid::is_independent(const std::vector<int>& X) const {
    std::vector<int> s = checked_subset(X);
    return rep_rank(s) == int(s.size());
}

std::vector<int> Matroid::closure(const std::vector<int>& X) const {
    std::vector<int> s = checked_subset(X);
    int r = rep_rank(s);
    std::vector<int> out;
    for (int e : alive_) {
        if (std::binary_search(s.begin(), s.end(), e)) {
            out.push_back(e);
            continue;
        }
        if (rep_rank(sorted_union(s, {e})) == r) out.push_back(e);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> Matroid::loops_and_bridges() const {
    std::vector<int> loops, bridges;
    for (int e : alive_) {
        if (rep_rank({e}) == 0) loops.push_back(e);
    }
    for (int e : alive_) {
        std::vector<int> rest;
        rest.reserve(alive_.size() - 1);
        for (int x : alive_)
            if (x != e) rest.push_back(x);
        if (rep_rank(rest) == rank_ - 1) bridges.push_back(e);
    }
    return {loops, bridges};
}

bool Matroid::is_parallel(int e, int f) const {
    if (e == f) throw InputError("is_parallel requires two distinct elements");
    if (!contains(e) || !contains(f)) throw InputError("element outside ground set");
    if (rep_rank({e}) == 0 || rep_rank({f}) == 0) return false;
    return rep_rank(e < f ? std::vector<int>{e, f} : std::vector<int>{f, e}) == 1;
}

std::vector<int> Matroid::greedy_base(const std::vector<int>& forbidden) const {
    std::vector<int> bad = normalize_set(forbidden);
    std::vector<int> base;
    for (int e : alive_) {
        if (std::binary_search(bad.begin(), bad.end(), e)) continue;
        std::vector<int> cand = sorted_union(base, {e});
        if (rep_rank(cand) == int(cand.size())) base = std::move(cand);
    }
    if (rep_rank(base) != rank_)
        throw PreconditionError("greedy_base: forbidden elements leave no spanning base");
    return base;
}

std::vector<int> Matroid::fundamental_circuit(const std::vector<int>& base, int e) const {
    std::vector<int> b = checked_subset(base);
    if (!contains(e)) throw InputError("element outside ground set");
    if (std::binary_search(b.begin(), b.end(), e))
        throw PreconditionError("fundamental_circuit: e already in the base");
    if (rep_rank(b) != int(b.size()))
        throw PreconditionError("fundamental_circuit: given base is dependent");
    std::vector<int> all = sorted_union(b, {e});
    if (rep_rank(all) == int(all.size()))
        throw PreconditionError("fundamental_circuit: base + e is independent (e is a coloop here)");
    // Keep e and every f whose removal restores independence.
    std::vector<int> circuit{e};
    for (int f : b) {
        std::vector<int> without;
        without.reserve(all.size() - 1);
        for (int x : all)
            if (x != f) without.push_back(x);
        if (rep_rank(without) == int(without.size())) circuit.push_back(f);
    }
    return normalize_set(std::move(circuit));
}

std::vector<std::vector<int>> Matroid::components() const {
    if (alive_.empty()) return {};
    std::vector<int> pos_of(alive_.back() + 1, -1);
    for (size_t i = 0; i < alive_.size(); ++i) pos_of[alive_[i]] = int(i);

    UnionFind uf(int(alive_.size()));
    std::vector<int> base = greedy_base();
    for (int e : alive_) {
        if (std::binary_search(base.begin(), base.end(), e)) continue;
        std::vector<int> circuit = fundamental_circuit(base, e);
        for (size_t i = 1; i < circuit.size(); ++i)
            uf.unite(pos_of[circuit[0]], pos_of[circuit[i]]);
    }
    std::vector<std::vector<int>> by_root(alive_.size());
    for (size_t i = 0; i < alive_.size(); ++i) by_root[uf.find(int(i))].push_back(alive_[i]);
    std::vector<std::vector<int>> comps;
    for (auto& c : by_root)
        if (!c.empty()) comps.push_back(std::move(c));
    return comps;
}

Matroid Matroid::contracted(const std::vector<int>& F) const {
    std::vector<int> f = checked_subset(F);
    std::vector<int> alive;
    std::set_difference(alive_.begin(), alive_.end(), f.begin(), f.end(),
                        std::back_inserter(alive));
    Matroid m(rep_, std::move(alive), sorted_union(contracted_, f));
    m.labels_ = labels_;
    return m;
}

Matroid Matroid::deleted(const std::vector<int>& F) const {
    std::vector<int> f = checked_subset(F);
    std::vector<int> alive;
    std::set_difference(alive_.begin(), alive_.end(), f.begin(), f.end(),
                        std::back_inserter(alive));
    Matroid m(rep_, std::move(alive), contracted_);
    m.labels_ = labels_;
    return m;
}

Matroid Matroid::restricted(const std::vector<int>& F) const {
    std::vector<int> f = checked_subset(F);
    Matroid m(rep_, std::move(f), contracted_);
    m.labels_ = labels_;
    return m;
}

std::vector<std::vector<int>> Matroid::circuits(int max_size) const {
    int n = size();
    if (n > 20) throw GuardError("circuit enumeration is limited to 20 elements");
    if (max_size < 0) max_size = n;

    std::vector<uint32_t> found_masks;
    std::vector<std::vector<int>> found;
    std::vector<int> comb;
    // Subsets in increasing size: a dependent set containing no smaller
    // circuit is itself a circuit.
    for (int s = 1; s <= std::min(max_size, n); ++s) {
        comb.assign(s, 0);
        for (int i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            uint32_t mask = 0;
            for (int i : comb) mask |= uint32_t(1) << i;
            bool pruned = false;
            for (uint32_t fm : found_masks) {
                if ((fm & mask) == fm) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) {
                std::vector<int> ids(s);
                for (int i = 0; i < s; ++i) ids[i] = alive_[comb[i]];
                if (rep_rank(ids) < s) {
                    found_masks.push_back(mask);
                    found.push_back(std::move(ids));
                }
            }
            // next combination
            int i = s - 1;
            while (i >= 0 && comb[i] == n - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return found;
}

Matroid Matroid::materialized_circuit_listed() const {
    int universe = rep_->universe_size();
    Matroid fresh = from_circuits(universe, circuits());
    return fresh.restricted(alive_);
}

std::string CircuitAxiomsVerdict::describe() const {
    if (pass) return "pass";
    auto set_str = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    std::string s = "fail (" + axiom + ")";
    if (!c1.empty()) s += " C1=" + set_str(c1);
    if (!c2.empty()) s += " C2=" + set_str(c2);
    if (e >= 0) s += " e=" + std::to_string(e);
    if (f >= 0) s += " f=" + std::to_string(f);
    return s;
}

CircuitAxiomsVerdict circuit_axioms_check(int n, const std::vector<std::vector<int>>& family) {
    if (n < 0 || n > 64) throw GuardError("circuit_axioms_check supports at most 64 elements");
    CircuitAxiomsVerdict verdict;

    std::vector<uint64_t> masks;
    std::vector<std::vector<int>> sets;
    masks.reserve(family.size());
    for (const auto& c : family) {
        std::vector<int> s = normalize_set(c);
        if (s.empty()) {
            verdict.pass = false;
            verdict.axiom = "C1";
            return verdict;
        }
        uint64_t m = 0;
        for (int e : s) {
            if (e < 0 || e >= n) throw InputError("circuit element out of range");
            m |= uint64_t(1) << e;
        }
        masks.push_back(m);
        sets.push_back(std::move(s));
    }

    for (size_t i = 0; i < masks.size(); ++i) {
        for (size_t j = 0; j < masks.size(); ++j) {
            if (i == j || masks[i] != (masks[i] & masks[j]) || masks[i] == masks[j]) continue;
            verdict.pass = false;
            verdict.axiom = "C2";
            verdict.c1 = sets[i];
            verdict.c2 = sets[j];
            return verdict;
        }
    }

    std::unordered_set<uint64_t> is_circuit(masks.begin(), masks.end());
    auto has_circuit_through = [&](uint64_t allowed, int f) {
        // Look for a circuit containing f inside `allowed` by enumerating
        // submasks of allowed\{f} joined with f.
        uint64_t fbit = uint64_t(1) << f;
        uint64_t rest = allowed & ~fbit;
        uint64_t sub = rest;
        while (true) {
            if (is_circuit.count(sub | fbit)) return true;
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        return false;
    };

    for (size_t i = 0; i < masks.size(); ++i) {
        for (size_t j = i + 1; j < masks.size(); ++j) {
            uint64_t inter = masks[i] & masks[j];
            if (inter == 0) continue;
            uint64_t uni = masks[i] | masks[j];
            for (uint64_t eb = inter; eb; eb &= eb - 1) {
                int e = __builtin_ctzll(eb);
                uint64_t allowed = uni & ~(uint64_t(1) << e);
                for (uint64_t fb = uni & ~inter; fb; fb &= fb - 1) {
                    int f = __builtin_ctzll(fb);
                    if (!has_circuit_through(allowed, f)) {
                        verdict.pass = false;
                        verdict.axiom = "C3";
                        // report with f on the C1 side
                        bool f_in_i = (masks[i] >> f) & 1;
                        verdict.c1 = f_in_i ? sets[i] : sets[j];
                        verdict.c2 = f_in_i ? sets[j] : sets[i];
                        verdict.e = e;
                        verdict.f = f;
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

}  // namespace mbd
