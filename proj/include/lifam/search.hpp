#pragma once
//
// Exact maximum-family search over set systems and subspace families, plus the
// constructive partition of a t-wise intersecting family into a cross-
// intersecting pair and a (t-1)-wise remainder.
//
// Pairwise problems reduce to maximum clique in a compatibility graph over the
// admissible candidates (edge iff the intersection size or dimension lies in
// L, plus incomparability when the antichain flag is set); the solver is a
// branch-and-bound with greedy-coloring upper bounds. t-wise problems (set
// systems only) use plain backtracking with incrementally maintained
// (t-1)-fold intersection masks. Everything is exact and single-threaded;
// witnesses are deterministic.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifam/bounds.hpp"
#include "lifam/exactnum.hpp"
#include "lifam/qspace.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::search {

// ---------------------------------------------------------------------------
// Problem and result types.

struct Budget {
    std::optional<double> seconds;             // wall-clock limit
    std::optional<std::uint64_t> max_nodes;    // node limit

    bool unlimited() const { return !seconds && !max_nodes; }
};

// Candidate lists above this size are refused unless the problem raises the
// cap explicitly; keeps the quadratic adjacency build and the search itself at
// desk scale.
inline constexpr std::size_t default_candidate_cap = 16384;

struct SearchProblem {
    bool subspaces = false;      // false: subsets of [n]; true: subspaces of GF(q)^n
    unsigned n = 0;
    unsigned q = 2;              // used only when subspaces
    setfamily::IntersectionSpec spec;
    bool sperner = false;        // additionally require an inclusion antichain
    std::optional<std::size_t> candidate_cap;
    Budget budget;

    std::size_t cap() const { return candidate_cap.value_or(default_candidate_cap); }

    void validate() const {
        spec.validate();
        if (n == 0) throw std::invalid_argument("ambient size n must be positive");
        if (!subspaces && n > 24)
            throw std::invalid_argument("set universe limited to n <= 24 (2^n candidates)");
        if (subspaces && spec.mode == setfamily::Mode::t_wise && spec.t >= 3)
            throw std::invalid_argument("t-wise search is defined for set systems only");
    }

    bounds::ProblemShape shape() const {
        bounds::ProblemShape p;
        p.subspaces = subspaces;
        p.n = n;
        p.q = q;
        p.spec = spec;
        p.sperner = sperner;
        p.max_member_size = n;
        if (spec.size_rule == setfamily::SizeRule::in_k ||
            spec.size_rule == setfamily::SizeRule::snevily)
            p.max_member_size = spec.kset->empty() ? 0 : std::min(n, spec.kset->back());
        return p;
    }
};

struct SearchResult {
    std::size_t optimum = 0;             // best family size found (exact if completed)
    std::optional<setfamily::SubsetFamily> witness_sets;       // set problems
    std::optional<qspace::SubspaceFamily> witness_subspaces;   // subspace problems
    std::uint64_t nodes_explored = 0;
    bool completed = true;               // false iff a budget cut the search short
    std::vector<bounds::BoundReport> bound_reports;
};

// ---------------------------------------------------------------------------
// Candidate generation: every subset of [n] (or subspace of GF(q)^n) passing
// the unary size rule, in canonical order (ascending bitmask / qspace order).

inline bool size_rule_admits(const setfamily::IntersectionSpec& spec, unsigned size) {
    switch (spec.size_rule) {
        case setfamily::SizeRule::none: return true;
        case setfamily::SizeRule::in_k:
        case setfamily::SizeRule::snevily: return spec.k_contains(size);
        case setfamily::SizeRule::not_in_l: return !spec.l_contains(size);
    }
    return false;
}

inline std::vector<setfamily::Subset> build_set_candidates(const SearchProblem& p) {
    p.validate();
    if (p.subspaces) throw std::invalid_argument("set candidates requested for a subspace problem");
    std::vector<setfamily::Subset> out;
    const setfamily::Subset full = setfamily::full_mask(p.n);
    for (setfamily::Subset m = 0;; ++m) {
        if (size_rule_admits(p.spec, setfamily::set_size(m))) {
            out.push_back(m);
            if (out.size() > p.cap())
                throw std::length_error("candidate list exceeds cap (" +
                                        std::to_string(p.cap()) + ")");
        }
        if (m == full) break;
    }
    return out;
}

inline std::vector<qspace::Subspace> build_subspace_candidates(const SearchProblem& p) {
    p.validate();
    if (!p.subspaces)
        throw std::invalid_argument("subspace candidates requested for a set problem");
    std::vector<qspace::Subspace> out;
    for (qspace::Subspace& s : qspace::enumerate_subspaces(p.n, p.q)) {
        if (size_rule_admits(p.spec, s.dim())) {
            out.push_back(std::move(s));
            if (out.size() > p.cap())
                throw std::length_error("candidate list exceeds cap (" +
                                        std::to_string(p.cap()) + ")");
        }
    }
    return out;
}

// Number of admissible candidates, for reporting.
inline std::size_t count_candidates(const SearchProblem& p) {
    return p.subspaces ? build_subspace_candidates(p).size() : build_set_candidates(p).size();
}

// ---------------------------------------------------------------------------
// Internal: deadline/node bookkeeping shared by both solvers.

namespace detail {

using Clock = std::chrono::steady_clock;

struct Ticker {
    std::optional<Clock::time_point> deadline;
    std::optional<std::uint64_t> max_nodes;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    explicit Ticker(const Budget& b) {
        if (b.seconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.seconds));
        max_nodes = b.max_nodes;
    }

    // Counts one search node; returns false once the budget is exhausted.
    bool tick() {
        ++nodes;
        if (exhausted) return false;
        if (max_nodes && nodes > *max_nodes) exhausted = true;
        if (deadline && (nodes & 1023) == 0 && Clock::now() >= *deadline) exhausted = true;
        return !exhausted;
    }
};

// Fixed-size bitset over search vertices.
struct VertexSet {
    std::vector<std::uint64_t> w;

    explicit VertexSet(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}

    void insert(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void erase(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool contains(std::size_t i) const {
        return (w[i >> 6] >> (i & 63)) & 1;
    }
    bool empty() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    // this &= other
    void intersect(const VertexSet& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t word = 0; word < w.size(); ++word) {
            std::uint64_t x = w[word];
            while (x) {
                fn((word << 6) + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

// Exact maximum clique, Tomita-style: vertices preordered by descending
// degree (ties by original index); at each node the candidate set is greedily
// colored in that order and branches are explored from the highest color
// down, pruning when |R| + color <= |best|.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(std::size_t n_vertices, Ticker& ticker)
        : n_(n_vertices), ticker_(ticker), adj_(n_vertices, VertexSet(n_vertices)) {}

    void add_edge(std::size_t u, std::size_t v) {
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    // Returns the best clique found as original vertex ids (exact maximum when
    // the ticker was not exhausted), deterministically.
    std::vector<std::size_t> solve() {
        order_vertices();
        VertexSet all(n_);
        for (std::size_t i = 0; i < n_; ++i) all.insert(i);
        std::vector<std::size_t> r;
        expand(all, r);
        std::vector<std::size_t> out;
        out.reserve(best_.size());
        for (std::size_t v : best_) out.push_back(label_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::size_t n_;
    Ticker& ticker_;
    std::vector<VertexSet> adj_;     // over relabeled vertices after order_vertices
    std::vector<std::size_t> label_; // relabeled vertex -> original id
    std::vector<std::size_t> best_;  // relabeled ids

    void order_vertices() {
        std::vector<std::size_t> deg(n_, 0), perm(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            deg[i] = adj_[i].count();
            perm[i] = i;
        }
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return deg[a] > deg[b];
        });
        // perm[new] = old; rebuild adjacency under the new labels.
        std::vector<std::size_t> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) pos[perm[i]] = i;
        std::vector<VertexSet> relabeled(n_, VertexSet(n_));
        for (std::size_t old_u = 0; old_u < n_; ++old_u)
            adj_[old_u].for_each([&](std::size_t old_v) {
                relabeled[pos[old_u]].insert(pos[old_v]);
            });
        adj_ = std::move(relabeled);
        label_ = std::move(perm);
    }

    void expand(const VertexSet& p, std::vector<std::size_t>& r) {
        if (!ticker_.tick()) return;

        // Greedy coloring of p in ascending vertex order, then branch in
        // color order: the prune below needs every unbranched vertex to carry
        // a color no larger than the current one.
        std::vector<std::size_t> scratch;
        p.for_each([&](std::size_t v) { scratch.push_back(v); });
        std::vector<VertexSet> classes;
        std::vector<std::vector<std::size_t>> class_members;
        for (std::size_t v : scratch) {
            std::size_t c = 0;
            while (true) {
                if (c == classes.size()) {
                    classes.emplace_back(n_);
                    class_members.emplace_back();
                }
                VertexSet probe = classes[c];
                probe.intersect(adj_[v]);
                if (probe.empty()) break;
                ++c;
            }
            classes[c].insert(v);
            class_members[c].push_back(v);
        }
        std::vector<std::size_t> verts;
        std::vector<unsigned> color;
        verts.reserve(scratch.size());
        color.reserve(scratch.size());
        for (std::size_t c = 0; c < class_members.size(); ++c)
            for (std::size_t v : class_members[c]) {
                verts.push_back(v);
                color.push_back(static_cast<unsigned>(c) + 1);
            }

        // Branch highest color first.
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (r.size() + color[i] <= best_.size()) return;
            std::size_t v = verts[i];
            r.push_back(v);
            if (r.size() > best_.size()) best_ = r;  // r is itself a clique
            VertexSet next = p;
            next.intersect(adj_[v]);
            // Only vertices later discarded stay out: drop all already-branched.
            for (std::size_t j = i; j < verts.size(); ++j) next.erase(verts[j]);
            if (!next.empty()) expand(next, r);
            r.pop_back();
            if (ticker_.exhausted) return;
        }
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Pairwise maximum: exact maximum clique in the compatibility graph.

inline SearchResult max_pairwise_family(const SearchProblem& p) {
    p.validate();
    if (p.spec.mode != setfamily::Mode::pairwise && p.spec.t != 2)
        throw std::invalid_argument("pairwise search requires a pairwise problem");

    SearchResult res;
    detail::Ticker ticker(p.budget);

    if (!p.subspaces) {
        const std::vector<setfamily::Subset> cand = build_set_candidates(p);
        detail::MaxCliqueSolver solver(cand.size(), ticker);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (!p.spec.l_contains(setfamily::intersection_size(cand[i], cand[j]))) continue;
                if (p.sperner && (setfamily::subset_of(cand[i], cand[j]) ||
                                  setfamily::subset_of(cand[j], cand[i])))
                    continue;
                solver.add_edge(i, j);
            }
        std::vector<std::size_t> clique = solver.solve();
        std::vector<setfamily::Subset> members;
        members.reserve(clique.size());
        for (std::size_t i : clique) members.push_back(cand[i]);
        res.witness_sets = setfamily::SubsetFamily(p.n, std::move(members));
        res.optimum = clique.size();
    } else {
        const std::vector<qspace::Subspace> cand = build_subspace_candidates(p);
        detail::MaxCliqueSolver solver(cand.size(), ticker);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (!p.spec.l_contains(qspace::intersection_dim(cand[i], cand[j]))) continue;
                if (p.sperner && (qspace::subspace_leq(cand[i], cand[j]) ||
                                  qspace::subspace_leq(cand[j], cand[i])))
                    continue;
                solver.add_edge(i, j);
            }
        std::vector<std::size_t> clique = solver.solve();
        std::vector<qspace::Subspace> members;
        members.reserve(clique.size());
        for (std::size_t i : clique) members.push_back(cand[i]);
        res.witness_subspaces = qspace::SubspaceFamily(p.n, p.q, std::move(members));
        res.optimum = clique.size();
    }

    res.nodes_explored = ticker.nodes;
    res.completed = !ticker.exhausted;
    res.bound_reports = bounds::applicable_bounds(p.shape());
    return res;
}

// ---------------------------------------------------------------------------
// t-wise maximum (set systems): backtracking over candidates in canonical
// order. The partial family keeps every j-fold intersection mask for
// j <= t-1, so feasibility of a new member is one popcount per stored
// (t-1)-fold mask.

inline SearchResult max_twise_family(const SearchProblem& p) {
    p.validate();
    if (p.subspaces) throw std::invalid_argument("t-wise search is defined for set systems only");
    const unsigned t = p.spec.t;

    const std::vector<setfamily::Subset> cand = build_set_candidates(p);
    const std::size_t n_cand = cand.size();

    detail::Ticker ticker(p.budget);

    // levels[j] holds the (j+1)-fold intersection masks of the current partial
    // family, j = 0..t-2; level sizes are restored on backtrack.
    std::vector<std::vector<setfamily::Subset>> levels(t >= 2 ? t - 1 : 1);
    std::vector<std::size_t> chosen, best;

    auto feasible = [&](setfamily::Subset v) {
        if (chosen.size() >= static_cast<std::size_t>(t) - 1)
            for (setfamily::Subset m : levels[t - 2])
                if (!p.spec.l_contains(setfamily::intersection_size(m, v))) return false;
        if (p.sperner)
            for (std::size_t i : chosen)
                if (setfamily::subset_of(cand[i], v) || setfamily::subset_of(v, cand[i]))
                    return false;
        return true;
    };

    // Per-push undo records: the pre-push size of every level.
    struct Undo {
        std::vector<std::size_t> level_sizes;
    };
    std::vector<Undo> undo_stack;

    auto do_push = [&](std::size_t idx) {
        Undo u;
        for (auto& lv : levels) u.level_sizes.push_back(lv.size());
        undo_stack.push_back(std::move(u));
        const setfamily::Subset v = cand[idx];
        // extend deepest levels first so level j-1 is still the pre-push state
        for (std::size_t j = levels.size(); j-- > 1;) {
            const std::size_t had = undo_stack.back().level_sizes[j - 1];
            for (std::size_t e = 0; e < had; ++e) levels[j].push_back(levels[j - 1][e] & v);
        }
        levels[0].push_back(v);
        chosen.push_back(idx);
    };

    auto do_pop = [&]() {
        const Undo& u = undo_stack.back();
        for (std::size_t j = 0; j < levels.size(); ++j) levels[j].resize(u.level_sizes[j]);
        undo_stack.pop_back();
        chosen.pop_back();
    };

    // Depth-first: at each step extend with the next candidate index or skip.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (!ticker.tick()) return;
        if (chosen.size() > best.size()) best = chosen;
        for (std::size_t i = next; i < n_cand; ++i) {
            if (chosen.size() + (n_cand - i) <= best.size()) return;  // count bound
            if (!feasible(cand[i])) continue;
            do_push(i);
            self(self, i + 1);
            do_pop();
            if (ticker.exhausted) return;
        }
    };
    rec(rec, 0);

    SearchResult res;
    std::vector<setfamily::Subset> members;
    members.reserve(best.size());
    for (std::size_t i : best) members.push_back(cand[i]);
    res.witness_sets = setfamily::SubsetFamily(p.n, std::move(members));
    res.optimum = best.size();
    res.nodes_explored = ticker.nodes;
    res.completed = !ticker.exhausted;
    res.bound_reports = bounds::applicable_bounds(p.shape());
    return res;
}

// Dispatch on the problem's mode.
inline SearchResult max_family(const SearchProblem& p) {
    if (p.spec.mode == setfamily::Mode::t_wise && p.spec.t >= 3) return max_twise_family(p);
    return max_pairwise_family(p);
}

// ---------------------------------------------------------------------------
// Constructive partition of a t-wise L-intersecting family A (member sizes
// outside L) into:
//   B — a prefix block (the "seed": the first k+1 members after reordering so
//       they realize the global intersection, k = max member size) plus every
//       member later extracted by the loop below, each with a companion set
//       C_i ⊆ B_i;
//   F — the remaining members, which are (t-1)-wise L-intersecting by
//       construction (the loop only stops when no violating tuple is left).
//
// Loop step: among the not-yet-extracted members (in order), find the
// lexicographically first index tuple i_1 < ... < i_{t-1} whose intersection
// has size outside L; extract member i_1 into B with C = that intersection.
//
// The report checks each advertised property of the output separately. The
// all-pairs cross property (|B_i ∩ C_j| ∈ L for every i ≠ j) is genuinely
// guaranteed only for pairs where C_j comes from an extracted tuple and B_i
// is not itself a member of that tuple — those intersections are t-fold
// intersections of distinct members of A. Seed companions equal their seed
// members, and a t-wise hypothesis with t >= 3 says nothing about plain
// pairwise intersections, so the unrestricted claim can fail on valid inputs
// (e.g. A = {12, 34, 13, 24}, t = 3, L = {0}: the seed holds two members
// meeting in one point). Both versions are reported.

struct PartitionCrossWitness {
    std::size_t i, j;   // 0-based positions within B, i != j
    unsigned value;     // |B_i ∩ C_j|
};

struct PartitionReport {
    std::size_t seed_count = 0;         // seed block length, min(k+1, |A|)
    std::size_t extracted_count = 0;    // members extracted by the loop
    bool seed_identity = true;          // B_i = C_i on the seed block
    bool seed_realizes_core = true;     // ∩ seed = ∩ A
    bool nesting = true;                // C_i ⊆ B_i for every i
    bool diagonal_outside_l = true;     // |C_i| ∉ L for every i
    bool cross_all_in_l = true;         // |B_i ∩ C_j| ∈ L for every i ≠ j
    bool cross_guaranteed_in_l = true;  // same, restricted to controlled pairs (see above)
    bool remainder_ok = true;           // F is (t-1)-wise L-intersecting
    bool totality = true;               // B and F partition A
    std::optional<PartitionCrossWitness> cross_witness;       // first cross_all failure
    std::optional<PartitionCrossWitness> guaranteed_witness;  // first controlled-pair failure

    // Every checked property, including the unrestricted cross claim.
    bool all_green() const {
        return seed_identity && seed_realizes_core && nesting && diagonal_outside_l &&
               cross_all_in_l && cross_guaranteed_in_l && remainder_ok && totality;
    }
    // The properties the construction actually promises.
    bool guaranteed_green() const {
        return seed_identity && seed_realizes_core && nesting && diagonal_outside_l &&
               cross_guaranteed_in_l && remainder_ok && totality;
    }
};

struct PartitionResult {
    setfamily::SubsetFamily b;
    std::vector<setfamily::Subset> c;   // companion sets, aligned with b (may repeat)
    setfamily::SubsetFamily f;
    PartitionReport report;
};

inline PartitionResult twise_partition(const setfamily::SubsetFamily& a,
                                       const std::vector<unsigned>& lset, unsigned t) {
    if (lset.empty()) throw std::invalid_argument("L must be nonempty");
    for (std::size_t i = 1; i < lset.size(); ++i)
        if (lset[i] <= lset[i - 1]) throw std::invalid_argument("L must be strictly increasing");
    if (t < 2) throw std::invalid_argument("t must be at least 2");

    auto in_l = [&](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };

    // Preconditions, with witnesses in the message.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (in_l(setfamily::set_size(a[i])))
            throw std::invalid_argument("member #" + std::to_string(i + 1) + " has size " +
                                        std::to_string(setfamily::set_size(a[i])) +
                                        ", which lies in L");
    if (auto w = setfamily::find_t_wise_violation(a, lset, t)) {
        std::string msg = "family is not " + std::to_string(t) + "-wise intersecting in L: members";
        for (std::size_t i : w->indices) msg += " #" + std::to_string(i + 1);
        msg += " meet in " + std::to_string(w->value) + " elements";
        throw std::invalid_argument(msg);
    }

    PartitionResult out;
    if (a.empty()) {
        out.b = setfamily::SubsetFamily(a.ground_n(), {});
        out.f = setfamily::SubsetFamily(a.ground_n(), {});
        return out;
    }

    unsigned k = 0;
    for (setfamily::Subset m : a.members()) k = std::max(k, setfamily::set_size(m));
    const std::size_t seed_count = std::min<std::size_t>(std::size_t(k) + 1, a.size());

    // Reorder: realizing chain first (greedy first-shrinking-member walk down
    // to the global intersection), then everyone else in original order.
    std::vector<std::size_t> order;
    {
        std::vector<char> used(a.size(), 0);
        for (std::size_t i : setfamily::realizing_prefix_indices(a)) {
            order.push_back(i);
            used[i] = 1;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!used[i]) order.push_back(i);
    }

    // Seed block, then the extraction loop over the remaining pool.
    std::vector<std::size_t> b_pos(order.begin(), order.begin() + seed_count);
    std::vector<setfamily::Subset> c_masks;
    for (std::size_t i = 0; i < seed_count; ++i) c_masks.push_back(a[order[i]]);
    std::vector<std::vector<std::size_t>> tuples;  // per extracted member: tuple positions in a

    std::vector<std::size_t> pool(order.begin() + seed_count, order.end());
    while (pool.size() + 1 >= static_cast<std::size_t>(t)) {
        std::optional<std::vector<std::size_t>> hit;
        setfamily::Subset hit_mask = 0;
        setfamily::detail::for_each_combination(
            pool.size(), t - 1, [&](const std::vector<std::size_t>& idx) {
                setfamily::Subset m = a[pool[idx[0]]];
                for (std::size_t i = 1; i < idx.size(); ++i) m &= a[pool[idx[i]]];
                if (!in_l(setfamily::set_size(m))) {
                    hit = idx;
                    hit_mask = m;
                    return false;
                }
                return true;
            });
        if (!hit) break;
        std::vector<std::size_t> tuple_pos;
        for (std::size_t i : *hit) tuple_pos.push_back(pool[i]);
        b_pos.push_back(tuple_pos[0]);
        c_masks.push_back(hit_mask);
        tuples.push_back(std::move(tuple_pos));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>((*hit)[0]));
    }

    std::vector<setfamily::Subset> b_masks, f_masks;
    for (std::size_t i : b_pos) b_masks.push_back(a[i]);
    for (std::size_t i : pool) f_masks.push_back(a[i]);
    out.b = setfamily::SubsetFamily(a.ground_n(), b_masks);
    out.c = c_masks;
    out.f = setfamily::SubsetFamily(a.ground_n(), f_masks);

    // Honest verification of every advertised property.
    PartitionReport& rep = out.report;
    rep.seed_count = seed_count;
    rep.extracted_count = b_pos.size() - seed_count;

    for (std::size_t i = 0; i < seed_count; ++i)
        if (b_masks[i] != c_masks[i]) rep.seed_identity = false;

    setfamily::Subset global = setfamily::full_mask(a.ground_n());
    for (setfamily::Subset m : a.members()) global &= m;
    setfamily::Subset seed_core = setfamily::full_mask(a.ground_n());
    for (std::size_t i = 0; i < seed_count; ++i) seed_core &= b_masks[i];
    rep.seed_realizes_core = (seed_core == global);

    for (std::size_t i = 0; i < b_masks.size(); ++i) {
        if (!setfamily::subset_of(c_masks[i], b_masks[i])) rep.nesting = false;
        if (in_l(setfamily::set_size(c_masks[i]))) rep.diagonal_outside_l = false;
    }

    for (std::size_t i = 0; i < b_masks.size() && !rep.cross_witness; ++i)
        for (std::size_t j = 0; j < b_masks.size(); ++j) {
            if (i == j) continue;
            unsigned v = setfamily::intersection_size(b_masks[i], c_masks[j]);
            if (!in_l(v)) {
                rep.cross_all_in_l = false;
                rep.cross_witness = PartitionCrossWitness{i, j, v};
                break;
            }
        }
    for (std::size_t j = seed_count; j < b_masks.size() && !rep.guaranteed_witness; ++j) {
        const std::vector<std::size_t>& tup = tuples[j - seed_count];
        for (std::size_t i = 0; i < b_masks.size(); ++i) {
            if (i == j) continue;
            if (std::find(tup.begin(), tup.end(), b_pos[i]) != tup.end()) continue;
            unsigned v = setfamily::intersection_size(b_masks[i], c_masks[j]);
            if (!in_l(v)) {
                rep.cross_guaranteed_in_l = false;
                rep.guaranteed_witness = PartitionCrossWitness{i, j, v};
                break;
            }
        }
    }

    if (t == 2) {
        // (t-1)-wise with t-1 = 1: every member's own size must lie in L.
        for (setfamily::Subset m : out.f.members())
            if (!in_l(setfamily::set_size(m))) rep.remainder_ok = false;
    } else {
        rep.remainder_ok = setfamily::is_t_wise_l_intersecting(out.f, lset, t - 1);
    }

    rep.totality = (out.b.size() + out.f.size() == a.size());
    {
        std::vector<setfamily::Subset> got = b_masks, want(a.members());
        got.insert(got.end(), f_masks.begin(), f_masks.end());
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) rep.totality = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bound conformance: every theorem whose hypotheses the problem satisfies must
// dominate the family size the search produced, even when the search ran out
// of budget (a found family is feasible regardless of completeness).

struct BoundConformance {
    bounds::BoundReport report;
    bool respected = true;  // meaningful when report.hypotheses_met
    bool tight = false;     // found size sits exactly at the bound's edge
};

struct ConformanceReport {
    std::size_t size_checked = 0;
    bool completed = true;
    std::vector<BoundConformance> entries;
    std::size_t violation_count = 0;

    bool all_respected() const { return violation_count == 0; }
};

inline ConformanceReport verify_bounds(const SearchResult& r, const SearchProblem& p) {
    ConformanceReport out;
    out.size_checked = r.optimum;
    out.completed = r.completed;
    const Natural sz = static_cast<unsigned long long>(r.optimum);
    for (bounds::BoundReport& br : bounds::applicable_bounds(p.shape())) {
        BoundConformance e;
        e.report = std::move(br);
        if (e.report.hypotheses_met) {
            e.respected = e.report.strict ? sz < e.report.value : sz <= e.report.value;
            e.tight = e.report.strict ? sz + 1 == e.report.value : sz == e.report.value;
            if (!e.respected) ++out.violation_count;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace lifam::search
