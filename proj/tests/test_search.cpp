// Tests for the exact maximum-family search: frozen candidate counts and
// optima on tight configurations, exhaustive-oracle equivalence, budget
// behavior, bound conformance, and the constructive t-wise partition with its
// itemized property report.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lifam/search.hpp"
#include "support/oracles.hpp"

using namespace lifam;
using setfamily::Subset;

namespace {

search::SearchProblem make_problem(unsigned n, std::vector<unsigned> l,
                                   setfamily::SizeRule rule = setfamily::SizeRule::none,
                                   std::optional<std::vector<unsigned>> k = std::nullopt,
                                   unsigned t = 2, bool sperner = false) {
    search::SearchProblem p;
    p.n = n;
    p.spec.lset = std::move(l);
    p.spec.kset = std::move(k);
    p.spec.size_rule = rule;
    p.spec.t = t;
    p.spec.mode = (t >= 3) ? setfamily::Mode::t_wise : setfamily::Mode::pairwise;
    p.sperner = sperner;
    p.validate();
    return p;
}

search::SearchProblem make_qproblem(unsigned n, unsigned q, std::vector<unsigned> l,
                                    setfamily::SizeRule rule = setfamily::SizeRule::none,
                                    std::optional<std::vector<unsigned>> k = std::nullopt,
                                    bool sperner = false) {
    search::SearchProblem p;
    p.subspaces = true;
    p.n = n;
    p.q = q;
    p.spec.lset = std::move(l);
    p.spec.kset = std::move(k);
    p.spec.size_rule = rule;
    p.sperner = sperner;
    p.validate();
    return p;
}

// The solved witness must be a feasible family for the problem.
void require_valid_witness(const search::SearchResult& r, const search::SearchProblem& p) {
    if (!p.subspaces) {
        REQUIRE(r.witness_sets.has_value());
        const setfamily::SubsetFamily& w = *r.witness_sets;
        REQUIRE(w.size() == r.optimum);
        REQUIRE(setfamily::check_size_rule(w, p.spec));
        if (p.spec.mode == setfamily::Mode::t_wise && p.spec.t >= 3)
            REQUIRE(setfamily::is_t_wise_l_intersecting(w, p.spec.lset, p.spec.t));
        else
            REQUIRE(setfamily::is_l_intersecting(w, p.spec.lset));
        if (p.sperner) REQUIRE(setfamily::is_sperner_sets(w));
    } else {
        REQUIRE(r.witness_subspaces.has_value());
        const qspace::SubspaceFamily& w = *r.witness_subspaces;
        REQUIRE(w.size() == r.optimum);
        REQUIRE(qspace::check_dim_rule(w, p.spec));
        REQUIRE(qspace::is_l_intersecting(w, p.spec.lset));
        if (p.sperner) REQUIRE(qspace::is_sperner_subspaces(w));
    }
}

// Relabel a subset under a permutation of the ground set (0-based old -> new).
Subset permute_mask(Subset m, const std::vector<unsigned>& perm) {
    Subset out = 0;
    for (unsigned b = 0; b < perm.size(); ++b)
        if (m & (Subset(1) << b)) out |= Subset(1) << perm[b];
    return out;
}

setfamily::SubsetFamily fam(unsigned n, const std::vector<std::vector<unsigned>>& members) {
    std::vector<Subset> masks;
    for (const auto& m : members) masks.push_back(setfamily::subset_from_elements(m));
    return setfamily::SubsetFamily(n, masks);
}

}  // namespace

// ---------------------------------------------------------------------------
// Candidate generation.

TEST_CASE("candidate lists honor the size rule, order, and cap") {
    // Sizes outside {0,1} leave exactly 2^6 - 1 - 6 of the 64 subsets.
    auto p = make_problem(6, {0, 1}, setfamily::SizeRule::not_in_l);
    auto cand = search::build_set_candidates(p);
    CHECK(cand.size() == 57);
    CHECK(std::is_sorted(cand.begin(), cand.end()));
    for (Subset m : cand) CHECK(setfamily::set_size(m) >= 2);

    // Dimension-2 subspaces of GF(2)^3: the 7 planes.
    auto pq = make_qproblem(3, 2, {1}, setfamily::SizeRule::in_k, std::vector<unsigned>{2});
    CHECK(search::build_subspace_candidates(pq).size() == 7);

    // An empty size menu admits nothing.
    auto pe = make_problem(5, {1}, setfamily::SizeRule::in_k, std::vector<unsigned>{});
    CHECK(search::build_set_candidates(pe).empty());

    // No rule: every subset, including the empty one, in mask order.
    auto pn = make_problem(4, {1});
    auto all = search::build_set_candidates(pn);
    REQUIRE(all.size() == 16);
    CHECK(all.front() == 0);
    CHECK(all.back() == setfamily::full_mask(4));

    // The cap rejects oversized candidate lists.
    auto pc = make_problem(5, {1});
    pc.candidate_cap = 10;
    CHECK_THROWS_AS(search::build_set_candidates(pc), std::length_error);

    CHECK(search::count_candidates(p) == 57);
}

TEST_CASE("problem validation rejects malformed universes") {
    search::SearchProblem p;
    p.n = 0;
    p.spec.lset = {1};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.n = 25;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);  // sets capped at n <= 24
    p.n = 25;
    p.subspaces = true;
    CHECK_NOTHROW(p.validate());  // subspace universes are capped by enumeration instead
    p.spec.t = 3;
    p.spec.mode = setfamily::Mode::t_wise;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);  // no t-wise subspace search
    CHECK_THROWS_AS(search::max_twise_family(p), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Pairwise maxima on configurations whose exact optimum is known.

TEST_CASE("uniform single-intersection maxima: stars are optimal") {
    // 2-sets of [5] meeting pairwise in one point: a star through one point.
    auto p = make_problem(5, {1}, setfamily::SizeRule::in_k, std::vector<unsigned>{2});
    auto r = search::max_pairwise_family(p);
    CHECK(r.optimum == 4);
    CHECK(r.completed);
    CHECK(r.nodes_explored > 0);
    require_valid_witness(r, p);

    // 3-sets of [6] meeting pairwise in 1 or 2 points.
    auto p2 = make_problem(6, {1, 2}, setfamily::SizeRule::in_k, std::vector<unsigned>{3});
    auto r2 = search::max_pairwise_family(p2);
    CHECK(r2.optimum == 10);
    CHECK(r2.completed);
    require_valid_witness(r2, p2);
}

TEST_CASE("initial-segment L with sizes outside L: all s-subsets win") {
    auto p = make_problem(6, {0, 1}, setfamily::SizeRule::not_in_l);
    auto r = search::max_pairwise_family(p);
    CHECK(r.optimum == 15);
    CHECK(r.completed);
    require_valid_witness(r, p);
    // The witness must be exactly the fifteen 2-subsets: 15 distinct members,
    // each of size 2, and C(6,2) = 15.
    for (Subset m : r.witness_sets->members()) CHECK(setfamily::set_size(m) == 2);
}

TEST_CASE("single intersection size without a size rule: sunflower of size n") {
    auto p = make_problem(5, {1});
    auto r = search::max_pairwise_family(p);
    CHECK(r.optimum == 5);
    CHECK(r.completed);
    require_valid_witness(r, p);
}

TEST_CASE("subspace maxima: hyperplanes and lines") {
    // Subspaces of GF(2)^3 with pairwise intersection dimension 1 and
    // dimensions outside {1}: the 7 planes pairwise meet in lines.
    auto p = make_qproblem(3, 2, {1}, setfamily::SizeRule::not_in_l);
    auto r = search::max_pairwise_family(p);
    CHECK(r.optimum == 7);
    CHECK(r.completed);
    require_valid_witness(r, p);
    for (const auto& s : r.witness_subspaces->members()) CHECK(s.dim() == 2);

    // Lines of GF(3)^2 pairwise meet in dimension 0; the plane itself cannot
    // join them (it meets each line in dimension 1).
    auto p2 = make_qproblem(2, 3, {0}, setfamily::SizeRule::not_in_l);
    auto r2 = search::max_pairwise_family(p2);
    CHECK(r2.optimum == 4);
    for (const auto& s : r2.witness_subspaces->members()) CHECK(s.dim() == 1);
}

TEST_CASE("antichain flag tightens the feasible set to Sperner families") {
    // Over [4] with every intersection size admissible, all 16 subsets form a
    // feasible family; demanding an antichain cuts this to C(4,2) = 6.
    auto p = make_problem(4, {0, 1, 2, 3});
    CHECK(search::max_pairwise_family(p).optimum == 16);
    auto ps = make_problem(4, {0, 1, 2, 3}, setfamily::SizeRule::none, std::nullopt, 2, true);
    auto rs = search::max_pairwise_family(ps);
    CHECK(rs.optimum == 6);
    require_valid_witness(rs, ps);

    // All 5 subspaces of GF(2)^2 are pairwise admissible with every dimension
    // allowed; the antichain flag leaves only the 3 lines.
    auto pq = make_qproblem(2, 2, {0, 1, 2});
    CHECK(search::max_pairwise_family(pq).optimum == 5);
    auto pqs = make_qproblem(2, 2, {0, 1, 2}, setfamily::SizeRule::none, std::nullopt, true);
    CHECK(search::max_pairwise_family(pqs).optimum == 3);
}

TEST_CASE("zero candidates yield an empty optimum") {
    auto p = make_problem(5, {1}, setfamily::SizeRule::in_k, std::vector<unsigned>{});
    auto r = search::max_pairwise_family(p);
    CHECK(r.optimum == 0);
    CHECK(r.completed);
    REQUIRE(r.witness_sets.has_value());
    CHECK(r.witness_sets->empty());
}

// ---------------------------------------------------------------------------
// Exhaustive-oracle equivalence.

TEST_CASE("pairwise search equals exhaustive enumeration on small instances") {
    std::mt19937_64 rng(20240817);
    const std::vector<setfamily::SizeRule> rules = {
        setfamily::SizeRule::none, setfamily::SizeRule::not_in_l, setfamily::SizeRule::in_k};
    unsigned tested = 0;
    while (tested < 50) {
        unsigned n = 3 + static_cast<unsigned>(rng() % 3);  // 3..5
        std::vector<unsigned> l;
        for (unsigned v = 0; v <= n; ++v)
            if (rng() % 3 == 0) l.push_back(v);
        if (l.empty()) l.push_back(static_cast<unsigned>(rng() % (n + 1)));
        setfamily::SizeRule rule = rules[rng() % rules.size()];
        std::optional<std::vector<unsigned>> k;
        if (rule == setfamily::SizeRule::in_k) {
            std::vector<unsigned> ks;
            for (unsigned v = 1; v <= n; ++v)
                if (rng() % 2 == 0) ks.push_back(v);
            k = std::move(ks);
        }
        bool sperner = (rng() % 4 == 0);

        search::SearchProblem p;
        p.n = n;
        p.spec.lset = l;
        p.spec.kset = k;
        p.spec.size_rule = rule;
        p.sperner = sperner;
        p.validate();

        auto cand = search::build_set_candidates(p);
        if (cand.size() > 20) continue;

        // Independent adjacency + exhaustive subset check.
        std::vector<std::uint64_t> adj(cand.size(), 0);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = 0; j < cand.size(); ++j) {
                if (i == j) continue;
                bool ok = p.spec.l_contains(setfamily::intersection_size(cand[i], cand[j]));
                if (sperner && (setfamily::subset_of(cand[i], cand[j]) ||
                                setfamily::subset_of(cand[j], cand[i])))
                    ok = false;
                if (ok) adj[i] |= std::uint64_t(1) << j;
            }
        auto [expect, mask] = oracles::brute_max_clique_bits(adj);
        (void)mask;

        auto r = search::max_pairwise_family(p);
        INFO("n=" << n << " candidates=" << cand.size() << " tested=" << tested);
        REQUIRE(r.completed);
        REQUIRE(r.optimum == expect);
        require_valid_witness(r, p);
        ++tested;
    }
}

TEST_CASE("t-wise search equals exhaustive enumeration on small instances") {
    std::mt19937_64 rng(987654);
    unsigned tested = 0;
    while (tested < 12) {
        unsigned n = 3 + static_cast<unsigned>(rng() % 2);  // 3..4
        std::vector<unsigned> l;
        for (unsigned v = 0; v <= 2; ++v)
            if (rng() % 2 == 0) l.push_back(v);
        if (l.empty()) l.push_back(0);

        search::SearchProblem p;
        p.n = n;
        p.spec.lset = l;
        p.spec.t = 3;
        p.spec.mode = setfamily::Mode::t_wise;
        p.spec.size_rule = (rng() % 2 == 0) ? setfamily::SizeRule::none
                                            : setfamily::SizeRule::not_in_l;
        p.validate();

        auto cand = search::build_set_candidates(p);
        if (cand.size() > 15) continue;

        unsigned expect = oracles::brute_max_t_wise(cand, n, l, 3);
        auto r = search::max_twise_family(p);
        INFO("n=" << n << " candidates=" << cand.size() << " tested=" << tested);
        REQUIRE(r.completed);
        REQUIRE(r.optimum == expect);
        require_valid_witness(r, p);
        ++tested;
    }
}

TEST_CASE("three-wise maxima: frozen small instance and feasibility floor") {
    // All sizes >= 1 on [4], any 3 distinct members must meet in 0 elements.
    auto p = make_problem(4, {0}, setfamily::SizeRule::not_in_l, std::nullopt, 3);
    auto r = search::max_twise_family(p);
    CHECK(r.optimum == 6);
    CHECK(r.completed);
    require_valid_witness(r, p);

    // A family smaller than t is vacuously feasible: with a single admissible
    // candidate the optimum is min(t-1, 1) = 1.
    auto p1 = make_problem(4, {0}, setfamily::SizeRule::in_k, std::vector<unsigned>{4}, 3);
    CHECK(search::max_twise_family(p1).optimum == 1);
}

TEST_CASE("t-wise search with t = 2 agrees with pairwise search") {
    std::mt19937_64 rng(4242);
    for (unsigned trial = 0; trial < 10; ++trial) {
        unsigned n = 3 + static_cast<unsigned>(rng() % 3);  // 3..5
        std::vector<unsigned> l;
        for (unsigned v = 0; v <= n; ++v)
            if (rng() % 3 == 0) l.push_back(v);
        if (l.empty()) l.push_back(1);

        search::SearchProblem pw;
        pw.n = n;
        pw.spec.lset = l;
        pw.validate();

        search::SearchProblem tw = pw;
        tw.spec.t = 2;
        tw.spec.mode = setfamily::Mode::t_wise;

        auto a = search::max_pairwise_family(pw);
        auto b = search::max_twise_family(tw);
        INFO("n=" << n << " trial=" << trial);
        CHECK(a.optimum == b.optimum);
        // max_family dispatches t = 2 to the pairwise solver.
        CHECK(search::max_family(tw).optimum == a.optimum);
    }
}

// ---------------------------------------------------------------------------
// Invariance and budgets.

TEST_CASE("witness feasibility is invariant under ground-set relabeling") {
    std::mt19937_64 rng(777);
    auto p = make_problem(6, {0, 1}, setfamily::SizeRule::not_in_l);
    auto r = search::max_pairwise_family(p);
    require_valid_witness(r, p);
    std::vector<unsigned> perm(6);
    std::iota(perm.begin(), perm.end(), 0u);
    for (unsigned trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Subset> relabeled;
        for (Subset m : r.witness_sets->members()) relabeled.push_back(permute_mask(m, perm));
        setfamily::SubsetFamily w(6, relabeled);
        CHECK(setfamily::is_l_intersecting(w, p.spec.lset));
        CHECK(setfamily::check_size_rule(w, p.spec));
    }
}

TEST_CASE("node budgets stop the search with an honest incomplete flag") {
    auto p = make_problem(8, {0, 1, 2});
    p.budget.max_nodes = 5;
    auto r = search::max_pairwise_family(p);
    CHECK_FALSE(r.completed);
    CHECK(r.nodes_explored >= 5);
    require_valid_witness(r, p);  // best-found is still feasible

    auto pt = make_problem(8, {0, 1, 2}, setfamily::SizeRule::none, std::nullopt, 3);
    pt.budget.max_nodes = 5;
    auto rt = search::max_twise_family(pt);
    CHECK_FALSE(rt.completed);
    require_valid_witness(rt, pt);

    // A generous node budget changes nothing.
    auto p2 = make_problem(4, {1}, setfamily::SizeRule::in_k, std::vector<unsigned>{2});
    p2.budget.max_nodes = 1'000'000;
    auto r2 = search::max_pairwise_family(p2);
    CHECK(r2.completed);
    CHECK(r2.optimum == 3);  // 2-sets of [4] pairwise meeting in a point
}

TEST_CASE("time budgets stop branch-heavy instances") {
    // This instance needs tens of thousands of nodes to prove optimality, so
    // an already-expired deadline trips at the first periodic clock check.
    auto p = make_problem(8, {1, 3});
    p.budget.seconds = 1e-6;
    auto r = search::max_pairwise_family(p);
    CHECK_FALSE(r.completed);
    require_valid_witness(r, p);

    // The same instance completes without the deadline, well past the point
    // where the budgeted run was cut off.
    auto full = search::max_pairwise_family(make_problem(8, {1, 3}));
    CHECK(full.completed);
    CHECK(full.optimum == 9);
    CHECK(full.nodes_explored > r.nodes_explored);
}

// ---------------------------------------------------------------------------
// Bound conformance.

TEST_CASE("completed searches never exceed an applicable bound") {
    std::mt19937_64 rng(5150);
    const std::vector<setfamily::SizeRule> rules = {
        setfamily::SizeRule::none, setfamily::SizeRule::not_in_l, setfamily::SizeRule::in_k,
        setfamily::SizeRule::snevily};
    unsigned tested = 0;
    while (tested < 25) {
        unsigned n = 4 + static_cast<unsigned>(rng() % 3);  // 4..6
        unsigned s = 1 + static_cast<unsigned>(rng() % 2);  // |L| in 1..2
        // L: an s-subset of {0..s} (drop one value at random).
        std::vector<unsigned> l;
        unsigned skip = static_cast<unsigned>(rng() % (s + 1));
        for (unsigned v = 0; v <= s; ++v)
            if (v != skip) l.push_back(v);
        setfamily::SizeRule rule = rules[rng() % rules.size()];
        std::optional<std::vector<unsigned>> k;
        if (rule == setfamily::SizeRule::in_k || rule == setfamily::SizeRule::snevily) {
            std::vector<unsigned> ks;
            for (unsigned v = l.back() + 1; v <= n; ++v)
                if (rng() % 2 == 0) ks.push_back(v);
            if (ks.empty()) ks.push_back(l.back() + 1);
            k = std::move(ks);
        }
        unsigned t = 2 + static_cast<unsigned>(rng() % 2);

        search::SearchProblem p;
        p.n = n;
        p.spec.lset = l;
        p.spec.kset = k;
        p.spec.size_rule = rule;
        p.spec.t = t;
        p.spec.mode = (t >= 3) ? setfamily::Mode::t_wise : setfamily::Mode::pairwise;
        p.validate();
        p.budget.seconds = 1.0;

        auto r = search::max_family(p);
        auto conf = search::verify_bounds(r, p);
        INFO("n=" << n << " rule=" << static_cast<int>(rule) << " t=" << t
                  << " optimum=" << r.optimum << " completed=" << r.completed);
        CHECK(conf.violation_count == 0);
        CHECK(conf.all_respected());
        CHECK(conf.size_checked == r.optimum);
        ++tested;
    }
}

TEST_CASE("conformance reports flag tight bounds") {
    auto p = make_problem(6, {0, 1}, setfamily::SizeRule::not_in_l);
    auto conf = search::verify_bounds(search::max_pairwise_family(p), p);
    CHECK(conf.size_checked == 15);
    bool saw_tight = false;
    for (const auto& e : conf.entries) {
        CHECK((e.respected || !e.report.hypotheses_met));
        if (e.report.hypotheses_met && e.tight && !e.report.strict) {
            CHECK(e.report.value == 15);
            saw_tight = true;
        }
    }
    CHECK(saw_tight);

    auto p2 = make_problem(5, {1});
    auto conf2 = search::verify_bounds(search::max_pairwise_family(p2), p2);
    CHECK(conf2.size_checked == 5);
    bool tight5 = false;
    for (const auto& e : conf2.entries)
        if (e.report.hypotheses_met && e.tight && e.report.value == 5) tight5 = true;
    CHECK(tight5);
}

// ---------------------------------------------------------------------------
// The constructive partition.

TEST_CASE("partition rejects precondition violations with witnesses") {
    // Triple {1,2},{1,3},{1,4} meets in {1}: not 3-wise intersecting in {0}.
    auto a = fam(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}});
    CHECK_THROWS_WITH(search::twise_partition(a, {0}, 3),
                      Catch::Matchers::ContainsSubstring("3-wise") &&
                          Catch::Matchers::ContainsSubstring("#1") &&
                          Catch::Matchers::ContainsSubstring("#2") &&
                          Catch::Matchers::ContainsSubstring("#3"));

    // A member whose size lies in L.
    auto b = fam(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_WITH(search::twise_partition(b, {0, 2}, 3),
                      Catch::Matchers::ContainsSubstring("size 2"));

    CHECK_THROWS_AS(search::twise_partition(a, {}, 3), std::invalid_argument);
    CHECK_THROWS_AS(search::twise_partition(a, {1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(search::twise_partition(a, {0}, 1), std::invalid_argument);
}

TEST_CASE("partition: quiet loop keeps the seed and the untouched remainder") {
    // 3-wise {0}-intersecting; the only pool tuple has an admissible
    // intersection, so nothing is extracted: B is the 3-member seed.
    auto a = fam(4, {{1}, {2}, {3}, {4}, {1, 2}});
    auto r = search::twise_partition(a, {0}, 3);
    CHECK(r.b.size() == 3);
    CHECK(r.f.size() == 2);
    CHECK(r.report.seed_count == 3);
    CHECK(r.report.extracted_count == 0);
    CHECK(r.report.all_green());
    CHECK(r.report.guaranteed_green());
}

TEST_CASE("partition: extraction step records the tuple intersection") {
    // Seed {1,2},{3,4},{5,6}; pool pair {1,7},{3,7} meets in {7}, so {1,7} is
    // extracted with companion {7}, leaving {3,7} as the remainder.
    auto a = fam(7, {{1, 2}, {3, 4}, {5, 6}, {1, 7}, {3, 7}});
    auto r = search::twise_partition(a, {0}, 3);
    REQUIRE(r.b.size() == 4);
    CHECK(r.report.seed_count == 3);
    CHECK(r.report.extracted_count == 1);
    CHECK(r.b[3] == setfamily::subset_from_elements({1, 7}));
    CHECK(r.c[3] == setfamily::subset_from_elements({7}));
    REQUIRE(r.f.size() == 1);
    CHECK(r.f[0] == setfamily::subset_from_elements({3, 7}));
    CHECK(r.report.guaranteed_green());
    CHECK(r.report.totality);
    CHECK(r.report.remainder_ok);
    // The extracted member {1,7} meets the seed companion {1,2} in one point,
    // outside L = {0}: the unrestricted cross claim fails here, and the report
    // says so rather than papering over it.
    CHECK_FALSE(r.report.cross_all_in_l);
    REQUIRE(r.report.cross_witness.has_value());
    CHECK(r.report.cross_witness->i == 3);
    CHECK(r.report.cross_witness->j == 0);
    CHECK(r.report.cross_witness->value == 1);
}

TEST_CASE("partition: seed pairs are not constrained by a 3-wise hypothesis") {
    // Every triple meets in 0 elements, but some pairs meet in one point; any
    // 3-member seed therefore contains a pair with intersection size outside
    // L = {0}, so the unrestricted cross claim cannot hold for this input, no
    // matter how the seed is chosen. The guaranteed (tuple-controlled) claim
    // still holds.
    auto a = fam(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}});
    auto r = search::twise_partition(a, {0}, 3);
    CHECK(r.report.seed_count == 3);
    CHECK(r.report.seed_identity);
    CHECK(r.report.seed_realizes_core);
    CHECK(r.report.nesting);
    CHECK(r.report.diagonal_outside_l);
    CHECK(r.report.remainder_ok);
    CHECK(r.report.totality);
    CHECK(r.report.cross_guaranteed_in_l);
    CHECK(r.report.guaranteed_green());
    CHECK_FALSE(r.report.cross_all_in_l);
    CHECK_FALSE(r.report.all_green());
    REQUIRE(r.report.cross_witness.has_value());
    // The violating pair sits inside the seed block.
    CHECK(r.report.cross_witness->i < 3);
    CHECK(r.report.cross_witness->j < 3);
    CHECK(r.report.cross_witness->value == 1);
}

TEST_CASE("partition with t = 2 consumes everything into the cross pair") {
    auto a = fam(5, {{1, 2}, {1, 3}, {1, 4}});
    auto r = search::twise_partition(a, {1}, 2);
    CHECK(r.b.size() == 3);
    CHECK(r.f.empty());
    CHECK(r.report.all_green());
}

TEST_CASE("partition of an empty family is trivial") {
    auto r = search::twise_partition(setfamily::SubsetFamily(4, {}), {0}, 3);
    CHECK(r.b.empty());
    CHECK(r.f.empty());
    CHECK(r.c.empty());
    CHECK(r.report.all_green());
}

TEST_CASE("partition guarantees hold on solver-produced families") {
    // Witnesses of the t-wise solver are t-wise intersecting families with
    // sizes outside L by construction — exactly the partition's precondition.
    for (unsigned n = 4; n <= 5; ++n)
        for (const auto& l : {std::vector<unsigned>{0}, std::vector<unsigned>{0, 1}}) {
            auto p = make_problem(n, l, setfamily::SizeRule::not_in_l, std::nullopt, 3);
            auto sol = search::max_twise_family(p);
            REQUIRE(sol.completed);
            REQUIRE_FALSE(sol.witness_sets->empty());

            auto r = search::twise_partition(*sol.witness_sets, l, 3);
            INFO("n=" << n << " |L|=" << l.size() << " family=" << sol.witness_sets->size());
            CHECK(r.report.guaranteed_green());
            CHECK(r.report.totality);
            CHECK(r.b.size() + r.f.size() == sol.witness_sets->size());
            CHECK(r.c.size() == r.b.size());
            // Companions nest in their members and avoid L on the diagonal.
            for (std::size_t i = 0; i < r.b.size(); ++i) {
                CHECK(setfamily::subset_of(r.c[i], r.b[i]));
                CHECK(std::find(l.begin(), l.end(), setfamily::set_size(r.c[i])) == l.end());
            }
        }
}
