#pragma once

// Grid sweeps: enumerate a family of search instances over ranges of ground-set
// size, intersection-set size, size rule, and intersection arity; solve each
// one exactly (within a per-instance budget) and confront the found optimum
// with every applicable bound.
//
// The grid, in deterministic order (n, then t, then s, then L in lexicographic
// order, then size rule):
//   - n sweeps [n_lo, n_hi]
//   - t sweeps [t_lo, t_hi] (arity >= 3 engages the t-wise solver; skipped for
//     subspace universes, where only pairwise search is supported)
//   - s sweeps 1..s_max and L ranges over all size-s subsets of {0..s_max-1}
//   - size rules default to all four; rules that need a size menu get
//     K = {max(L)+1, ..., n} synthesized (instances where that menu would be
//     empty are skipped)
//
// Instances whose candidate list would exceed the configured cap are counted
// as skipped rather than aborting the sweep.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lifam/search.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::scan {

struct ScanOptions {
    bool subspaces = false;
    unsigned q = 2;
    unsigned n_lo = 4;
    unsigned n_hi = 6;
    unsigned s_max = 2;
    std::vector<setfamily::SizeRule> rules;  // empty means all four
    unsigned t_lo = 2;
    unsigned t_hi = 2;
    bool sperner = false;
    std::optional<double> instance_seconds = 1.0;
    std::optional<std::uint64_t> instance_max_nodes;
    std::optional<std::size_t> candidate_cap;
};

struct ScanRecord {
    search::SearchProblem problem;
    search::SearchResult result;
    search::ConformanceReport conformance;
};

struct ScanSummary {
    std::size_t instances = 0;   // records emitted
    std::size_t skipped = 0;     // candidate list over the cap
    std::size_t incomplete = 0;  // budget ran out before the proof closed
    std::size_t violations = 0;  // total bound-conformance violations found
};

namespace detail {

inline std::vector<setfamily::SizeRule> effective_rules(const ScanOptions& opt) {
    if (!opt.rules.empty()) return opt.rules;
    return {setfamily::SizeRule::none, setfamily::SizeRule::in_k,
            setfamily::SizeRule::not_in_l, setfamily::SizeRule::snevily};
}

}  // namespace detail

// Materializes the instance grid in its deterministic order.  Every returned
// problem has already passed validation, so a bad option set fails here,
// before any instance is run.
inline std::vector<search::SearchProblem> build_grid(const ScanOptions& opt) {
    if (opt.t_lo < 2)
        throw std::invalid_argument("intersection arity must be at least 2");
    std::vector<setfamily::SizeRule> rules = detail::effective_rules(opt);

    std::vector<std::vector<unsigned>> lsets;
    for (unsigned s = 1; s <= opt.s_max; ++s) {
        setfamily::detail::for_each_combination(
            opt.s_max, s, [&](const std::vector<std::size_t>& idx) {
                std::vector<unsigned> l(idx.begin(), idx.end());
                lsets.push_back(std::move(l));
                return true;
            });
    }

    std::vector<search::SearchProblem> grid;
    for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
        for (unsigned t = opt.t_lo; t <= opt.t_hi; ++t) {
            if (opt.subspaces && t >= 3) continue;
            for (const std::vector<unsigned>& lset : lsets) {
                for (setfamily::SizeRule rule : rules) {
                    search::SearchProblem p;
                    p.subspaces = opt.subspaces;
                    p.n = n;
                    p.q = opt.q;
                    p.sperner = opt.sperner;
                    p.spec.lset = lset;
                    p.spec.t = t;
                    p.spec.mode = t >= 3 ? setfamily::Mode::t_wise
                                         : setfamily::Mode::pairwise;
                    p.spec.size_rule = rule;
                    if (rule == setfamily::SizeRule::in_k ||
                        rule == setfamily::SizeRule::snevily) {
                        std::vector<unsigned> kset;
                        for (unsigned v = lset.back() + 1; v <= n; ++v)
                            kset.push_back(v);
                        if (kset.empty() && rule == setfamily::SizeRule::snevily)
                            continue;  // rule demands a nonempty size menu
                        p.spec.kset = std::move(kset);
                    }
                    if (opt.candidate_cap) p.candidate_cap = *opt.candidate_cap;
                    p.budget.seconds = opt.instance_seconds;
                    p.budget.max_nodes = opt.instance_max_nodes;
                    p.validate();
                    grid.push_back(std::move(p));
                }
            }
        }
    }
    return grid;
}

// Runs every grid instance in order, invoking emit(record) for each one that
// produced a result.  Instances are solved one at a time; records therefore
// arrive in deterministic grid order.
template <typename Fn>
ScanSummary run_scan(const ScanOptions& opt, Fn&& emit) {
    std::vector<search::SearchProblem> grid = build_grid(opt);
    ScanSummary summary;
    for (const search::SearchProblem& p : grid) {
        ScanRecord rec;
        rec.problem = p;
        try {
            rec.result = search::max_family(p);
        } catch (const std::length_error&) {
            ++summary.skipped;
            continue;
        }
        rec.conformance = search::verify_bounds(rec.result, p);
        ++summary.instances;
        if (!rec.result.completed) ++summary.incomplete;
        summary.violations += rec.conformance.violation_count;
        emit(rec);
    }
    return summary;
}

}  // namespace lifam::scan
