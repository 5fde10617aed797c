#pragma once

// Exact upper bounds for L-intersecting families of sets and of subspaces,
// each tagged with the classical result it evaluates. Every bound is computed
// unconditionally; `hypotheses_met` records whether the theorem's stated
// preconditions hold for the given problem shape, with human-readable notes
// for each unmet one.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lifam/exactnum.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::bounds {

using exactnum::binom;
using exactnum::binom_sum;
using exactnum::power;
using exactnum::qbinom;
using exactnum::qbinom_sum;

enum class Theorem {
    ekr,                    // k-uniform intersecting, n >= 2k: C(n-1, k-1)
    ray_wilson,             // k-uniform, |L| = s: C(n, s)
    frankl_wilson,          // |L| = s: sum_{i<=s} C(n, i)
    alon_babai_suzuki,      // sizes in K, |K| = r, each k_i > s-r: sum_{i=s-r+1..s} C(n, i)
    grolmusz_sudakov,       // t-wise: (t-1) * frankl_wilson (or the K-refined sum)
    snevily_positive,       // min L >= 1: sum_{i<=s} C(n-1, i)
    snevily_initial,        // L = {0..s-1}, sizes >= s: C(n, s)
    snevily_large_n,        // sizes not in L, n >= large_n_threshold: C(n, s)
    snevily_large_n_twise,  // t-wise variant: (t-1) * C(n, s)
    liu_zhang_xiao,         // n >= large_n_threshold: sum_{i<=s} C(n-l1, i)
    polymethod,             // sizes not in L: sum_{i<=s} C(n-1, i)
    deza_frankl,            // q-analogue of ekr: qbinom(n-1, k-1)
    frankl_graham,          // k-uniform subspaces: qbinom(n, s)
    lefmann,                // subspaces: sum_{i<=s} qbinom(n, i)
    q_alon_babai_suzuki,    // dims in K: sum_{i=s-r+1..s} qbinom(n, i)
    q_large_n_strict,       // min L >= 1, q-threshold: strictly below qbinom(n, s)
    q_sperner_large_n,      // antichain, q-threshold: at most qbinom(n, s)
    q_sperner,              // antichain of subspaces: qbinom(n, floor(n/2))
};

inline const char* theorem_id(Theorem t) {
    switch (t) {
        case Theorem::ekr: return "ekr";
        case Theorem::ray_wilson: return "ray-wilson";
        case Theorem::frankl_wilson: return "frankl-wilson";
        case Theorem::alon_babai_suzuki: return "alon-babai-suzuki";
        case Theorem::grolmusz_sudakov: return "grolmusz-sudakov";
        case Theorem::snevily_positive: return "snevily-positive";
        case Theorem::snevily_initial: return "snevily-initial";
        case Theorem::snevily_large_n: return "snevily-large-n";
        case Theorem::snevily_large_n_twise: return "snevily-large-n-twise";
        case Theorem::liu_zhang_xiao: return "liu-zhang-xiao";
        case Theorem::polymethod: return "polymethod";
        case Theorem::deza_frankl: return "deza-frankl";
        case Theorem::frankl_graham: return "frankl-graham";
        case Theorem::lefmann: return "lefmann";
        case Theorem::q_alon_babai_suzuki: return "q-alon-babai-suzuki";
        case Theorem::q_large_n_strict: return "q-large-n-strict";
        case Theorem::q_sperner_large_n: return "q-sperner-large-n";
        case Theorem::q_sperner: return "q-sperner";
    }
    return "?";
}

struct BoundReport {
    Theorem theorem;
    Natural value;
    bool hypotheses_met = false;
    bool strict = false;  // true: |family| < value; false: |family| <= value
    std::vector<std::string> notes;

    const char* id() const { return theorem_id(theorem); }
};

// ---------------------------------------------------------------------------
// Individual bounds. Each returns the value unconditionally and sets
// hypotheses_met from whatever inputs it receives.

inline BoundReport ekr_bound(unsigned n, unsigned k) {
    BoundReport r{Theorem::ekr, binom(n == 0 ? 0 : n - 1, static_cast<long long>(k) - 1)};
    r.hypotheses_met = (n >= 2 * k) && k >= 1;
    if (n < 2 * k) r.notes.push_back("requires n >= 2k");
    return r;
}

inline BoundReport ray_wilson_bound(unsigned n, unsigned s) {
    BoundReport r{Theorem::ray_wilson, binom(n, s)};
    r.hypotheses_met = true;  // uniformity is a problem-shape question; see applicable_bounds
    return r;
}

inline BoundReport frankl_wilson_bound(unsigned n, unsigned s) {
    BoundReport r{Theorem::frankl_wilson, binom_sum(n, 0, s)};
    r.hypotheses_met = true;
    return r;
}

inline BoundReport alon_babai_suzuki_bound(unsigned n, unsigned s, unsigned r_sizes) {
    BoundReport r{Theorem::alon_babai_suzuki,
                  binom_sum(n, static_cast<long long>(s) - r_sizes + 1, s)};
    r.hypotheses_met = true;  // the k_i > s - r condition needs K; see applicable_bounds
    return r;
}

inline BoundReport grolmusz_sudakov_bound(unsigned n, unsigned s, unsigned t,
                                          std::optional<unsigned> r_sizes = std::nullopt) {
    Natural base = r_sizes ? binom_sum(n, static_cast<long long>(s) - *r_sizes + 1, s)
                           : binom_sum(n, 0, s);
    BoundReport r{Theorem::grolmusz_sudakov, Natural(t - 1) * base};
    r.hypotheses_met = t >= 2;
    if (t < 2) r.notes.push_back("requires t >= 2");
    return r;
}

inline BoundReport snevily_positive_bound(unsigned n, unsigned s,
                                          std::optional<unsigned> l1 = std::nullopt) {
    BoundReport r{Theorem::snevily_positive, binom_sum(n == 0 ? 0 : n - 1, 0, s)};
    r.hypotheses_met = !l1 || *l1 >= 1;
    if (l1 && *l1 < 1) r.notes.push_back("requires min(L) >= 1");
    return r;
}

inline BoundReport snevily_initial_bound(unsigned n, unsigned s) {
    BoundReport r{Theorem::snevily_initial, binom(n, s)};
    r.hypotheses_met = true;  // L = {0..s-1} and sizes >= s checked by applicable_bounds
    return r;
}

// Threshold n above which the max-size bound C(n,s) for sizes-outside-L
// families is proven: binom(k^2, l1+1) * s + l1.
inline Natural large_n_threshold(unsigned k, unsigned s, unsigned l1) {
    return binom(static_cast<unsigned long long>(k) * k, static_cast<long long>(l1) + 1) * s + l1;
}

inline BoundReport snevily_large_n_bound(unsigned n, unsigned s, unsigned l1, unsigned k,
                                         bool sizes_outside_l) {
    BoundReport r{Theorem::snevily_large_n, binom(n, s)};
    Natural thresh = large_n_threshold(k, s, l1);
    r.hypotheses_met = sizes_outside_l && Natural(n) >= thresh;
    if (!sizes_outside_l) r.notes.push_back("requires member sizes outside L");
    if (Natural(n) < thresh)
        r.notes.push_back("requires n >= " + thresh.str() + " (large-n threshold)");
    return r;
}

inline BoundReport snevily_large_n_twise_bound(unsigned n, unsigned s, unsigned l1, unsigned k,
                                               unsigned t, bool sizes_outside_l) {
    BoundReport r{Theorem::snevily_large_n_twise, Natural(t - 1) * binom(n, s)};
    Natural thresh = large_n_threshold(k, s, l1);
    r.hypotheses_met = t >= 2 && sizes_outside_l && Natural(n) >= thresh;
    if (!sizes_outside_l) r.notes.push_back("requires member sizes outside L");
    if (Natural(n) < thresh)
        r.notes.push_back("requires n >= " + thresh.str() + " (large-n threshold)");
    return r;
}

inline BoundReport liu_zhang_xiao_bound(unsigned n, unsigned s, unsigned l1,
                                        std::optional<unsigned> k = std::nullopt) {
    BoundReport r{Theorem::liu_zhang_xiao, binom_sum(n >= l1 ? n - l1 : 0, 0, s)};
    if (k) {
        Natural thresh = large_n_threshold(*k, s, l1);
        r.hypotheses_met = Natural(n) >= thresh;
        if (Natural(n) < thresh)
            r.notes.push_back("requires n >= " + thresh.str() + " (large-n threshold)");
    } else {
        r.hypotheses_met = false;
        r.notes.push_back("threshold needs the maximum member size k");
    }
    return r;
}

inline BoundReport polymethod_bound(unsigned n, unsigned s, bool sizes_outside_l = true) {
    BoundReport r{Theorem::polymethod, binom_sum(n == 0 ? 0 : n - 1, 0, s)};
    r.hypotheses_met = sizes_outside_l;
    if (!sizes_outside_l) r.notes.push_back("requires member sizes outside L");
    return r;
}

// sum_{i<=s} C(n-2, i) <= C(n, s): holds whenever n >= s^2. Returns the
// comparison outcome for any inputs.
inline bool binom_prefix_sum_le(unsigned n, unsigned s) {
    return binom_sum(n >= 2 ? n - 2 : 0, 0, s) <= binom(n, s);
}

// ---------------------------------------------------------------------------
// Subspace (q-analogue) bounds.

inline BoundReport deza_frankl_bound(unsigned n, unsigned k, unsigned q) {
    BoundReport r{Theorem::deza_frankl,
                  qbinom(n == 0 ? 0 : n - 1, static_cast<long long>(k) - 1, q)};
    r.hypotheses_met = (n >= 2 * k) && k >= 1;
    if (n < 2 * k) r.notes.push_back("requires n >= 2k");
    return r;
}

inline BoundReport frankl_graham_bound(unsigned n, unsigned s, unsigned q) {
    BoundReport r{Theorem::frankl_graham, qbinom(n, s, q)};
    r.hypotheses_met = true;  // dimension uniformity checked by applicable_bounds
    return r;
}

inline BoundReport lefmann_bound(unsigned n, unsigned s, unsigned q) {
    BoundReport r{Theorem::lefmann, qbinom_sum(n, 0, s, q)};
    r.hypotheses_met = true;
    return r;
}

inline BoundReport q_alon_babai_suzuki_bound(unsigned n, unsigned s, unsigned r_sizes,
                                             unsigned q) {
    BoundReport r{Theorem::q_alon_babai_suzuki,
                  qbinom_sum(n, static_cast<long long>(s) - r_sizes + 1, s, q)};
    r.hypotheses_met = true;
    return r;
}

// q-analogue threshold: q^(n-l1) >= (q^s - 1) * qbinom(k^2, l1+1, q) + 1
// together with n >= 2s + 1. Exact integer comparison, no logarithms.
inline bool q_large_n_threshold_met(unsigned n, unsigned s, unsigned l1, unsigned k,
                                    unsigned q) {
    if (n < 2 * s + 1) return false;
    if (n < l1) return false;
    Natural lhs = power(q, n - l1);
    Natural rhs =
        (power(q, s) - 1) * qbinom(static_cast<unsigned long long>(k) * k,
                                   static_cast<long long>(l1) + 1, q) +
        1;
    return lhs >= rhs;
}

inline BoundReport q_large_n_strict_bound(unsigned n, unsigned s, unsigned l1, unsigned k,
                                          unsigned q) {
    BoundReport r{Theorem::q_large_n_strict, qbinom(n, s, q)};
    r.strict = true;
    bool thresh = q_large_n_threshold_met(n, s, l1, k, q);
    r.hypotheses_met = l1 >= 1 && thresh;
    if (l1 < 1) r.notes.push_back("requires min(L) >= 1");
    if (!thresh) r.notes.push_back("q-analogue large-n threshold not met");
    return r;
}

inline BoundReport q_sperner_large_n_bound(unsigned n, unsigned s, unsigned l1, unsigned k,
                                           unsigned q, bool sperner_guaranteed) {
    BoundReport r{Theorem::q_sperner_large_n, qbinom(n, s, q)};
    bool thresh = q_large_n_threshold_met(n, s, l1, k, q);
    r.hypotheses_met = sperner_guaranteed && thresh;
    if (!sperner_guaranteed) r.notes.push_back("requires an antichain (no member contains another)");
    if (!thresh) r.notes.push_back("q-analogue large-n threshold not met");
    return r;
}

inline BoundReport q_sperner_bound(unsigned n, unsigned q) {
    BoundReport r{Theorem::q_sperner, qbinom(n, n / 2, q)};
    r.hypotheses_met = true;  // antichain-ness checked by applicable_bounds
    return r;
}

// sum_{i<=s} qbinom(n-1, i, q) < qbinom(n, s, q): holds whenever n >= 2s+1,
// s >= 1, q >= 2. Returns the comparison outcome for any inputs.
inline bool qbinom_prefix_sum_lt(unsigned n, unsigned s, unsigned q) {
    return qbinom_sum(n == 0 ? 0 : n - 1, 0, s, q) < qbinom(n, s, q);
}

// ---------------------------------------------------------------------------
// Problem-shape evaluation: which theorems apply to a search problem, with
// hypotheses evaluated against the candidate universe.

struct ProblemShape {
    bool subspaces = false;
    unsigned n = 0;
    unsigned q = 2;  // meaningful only when subspaces
    setfamily::IntersectionSpec spec;
    bool sperner = false;
    // Largest member size (set size or subspace dimension) any candidate can
    // have; used for the large-n thresholds. 0 means "not known".
    unsigned max_member_size = 0;
};

namespace detail {

// Does the size rule force every member size outside L?
inline bool rule_forces_sizes_outside_l(const setfamily::IntersectionSpec& spec) {
    using setfamily::SizeRule;
    switch (spec.size_rule) {
        case SizeRule::not_in_l: return true;
        case SizeRule::snevily: return true;  // sizes in K, max L < min K
        case SizeRule::in_k: {
            for (unsigned k : *spec.kset)
                if (spec.l_contains(k)) return false;
            return true;
        }
        case SizeRule::none: return false;
    }
    return false;
}

// Does the size rule force uniform member size k? Returns it if so.
inline std::optional<unsigned> rule_uniform_size(const setfamily::IntersectionSpec& spec) {
    using setfamily::SizeRule;
    if ((spec.size_rule == SizeRule::in_k || spec.size_rule == SizeRule::snevily) &&
        spec.kset->size() == 1)
        return (*spec.kset)[0];
    return std::nullopt;
}

inline bool l_is_initial_segment(const setfamily::IntersectionSpec& spec) {
    for (unsigned i = 0; i < spec.s(); ++i)
        if (spec.lset[i] != i) return false;
    return true;
}

// Does the size rule force every member size >= s?
inline bool rule_forces_sizes_at_least(const setfamily::IntersectionSpec& spec, unsigned s) {
    using setfamily::SizeRule;
    switch (spec.size_rule) {
        case SizeRule::in_k:
        case SizeRule::snevily:
            // An empty K admits no member sizes at all; vacuously >= s.
            return spec.kset->empty() || (*spec.kset)[0] >= s;
        case SizeRule::not_in_l:
            // sizes avoid L; if L contains all of 0..s-1 the size must be >= s
            for (unsigned v = 0; v < s; ++v)
                if (!spec.l_contains(v)) return false;
            return true;
        case SizeRule::none: return false;
    }
    return false;
}

}  // namespace detail

// Evaluates every theorem matching the problem's universe and mode. Bounds are
// returned sorted ascending by value (ties keep enum order). Nothing matches a
// t-wise subspace problem; the list is empty there.
inline std::vector<BoundReport> applicable_bounds(const ProblemShape& p) {
    const auto& spec = p.spec;
    spec.validate();
    const unsigned s = spec.s();
    const unsigned l1 = spec.l1();
    const unsigned kmax = p.max_member_size;
    const bool outside_l = detail::rule_forces_sizes_outside_l(spec);
    const auto uniform = detail::rule_uniform_size(spec);
    const bool twise = spec.mode == setfamily::Mode::t_wise && spec.t >= 3;
    // L-intersecting + sizes outside L forces an antichain (equal-size distinct
    // members never nest; unequal sizes would put |A_i| = |A_i ∩ A_j| in L).
    const bool sperner_guaranteed = p.sperner || (!twise && (outside_l || uniform.has_value()));

    std::vector<BoundReport> out;

    if (!p.subspaces && !twise) {
        // pairwise set-system bounds
        {
            unsigned k = uniform.value_or(0);
            BoundReport r = ekr_bound(p.n, k ? k : kmax);
            r.hypotheses_met = r.hypotheses_met && uniform.has_value() && l1 >= 1;
            if (!uniform) r.notes.push_back("requires uniform member size (K a singleton)");
            if (l1 < 1) r.notes.push_back("requires intersecting members (min(L) >= 1)");
            out.push_back(std::move(r));
        }
        {
            BoundReport r = ray_wilson_bound(p.n, s);
            r.hypotheses_met = uniform.has_value();
            if (!uniform) r.notes.push_back("requires uniform member size (K a singleton)");
            out.push_back(std::move(r));
        }
        out.push_back(frankl_wilson_bound(p.n, s));
        if (spec.kset) {
            unsigned r_sizes = static_cast<unsigned>(spec.kset->size());
            BoundReport r = alon_babai_suzuki_bound(p.n, s, r_sizes);
            bool cond = spec.size_rule == setfamily::SizeRule::in_k ||
                        spec.size_rule == setfamily::SizeRule::snevily;
            for (unsigned k : *spec.kset)
                if (static_cast<long long>(k) <= static_cast<long long>(s) - r_sizes)
                    cond = false;
            r.hypotheses_met = cond;
            if (!cond) r.notes.push_back("requires sizes in K with every k_i > s - |K|");
            out.push_back(std::move(r));
        }
        out.push_back(snevily_positive_bound(p.n, s, l1));
        {
            BoundReport r = snevily_initial_bound(p.n, s);
            bool initial = detail::l_is_initial_segment(spec);
            bool sizes_ok = detail::rule_forces_sizes_at_least(spec, s) &&
                            (spec.size_rule != setfamily::SizeRule::none);
            r.hypotheses_met = initial && sizes_ok;
            if (!initial) r.notes.push_back("requires L = {0..s-1}");
            if (!sizes_ok) r.notes.push_back("requires a size rule forcing sizes >= s");
            out.push_back(std::move(r));
        }
        out.push_back(snevily_large_n_bound(p.n, s, l1, kmax, outside_l));
        out.push_back(liu_zhang_xiao_bound(p.n, s, l1, kmax));
        out.push_back(polymethod_bound(p.n, s, outside_l));
    }
    if (!p.subspaces && twise) {
        // Use the K-refined sum when the size rule guarantees its hypothesis.
        std::optional<unsigned> r_sizes;
        if (spec.kset && (spec.size_rule == setfamily::SizeRule::in_k ||
                          spec.size_rule == setfamily::SizeRule::snevily)) {
            unsigned r = static_cast<unsigned>(spec.kset->size());
            bool cond = true;
            for (unsigned k : *spec.kset)
                if (static_cast<long long>(k) <= static_cast<long long>(s) - r) cond = false;
            if (cond) r_sizes = r;
        }
        out.push_back(grolmusz_sudakov_bound(p.n, s, spec.t, r_sizes));
        out.push_back(snevily_large_n_twise_bound(p.n, s, l1, kmax, spec.t, outside_l));
    }
    if (p.subspaces && !twise) {
        {
            unsigned k = uniform.value_or(kmax);
            BoundReport r = deza_frankl_bound(p.n, k, p.q);
            r.hypotheses_met = r.hypotheses_met && uniform.has_value() && l1 >= 1;
            if (!uniform) r.notes.push_back("requires uniform dimension (K a singleton)");
            if (l1 < 1) r.notes.push_back("requires intersecting members (min(L) >= 1)");
            out.push_back(std::move(r));
        }
        {
            BoundReport r = frankl_graham_bound(p.n, s, p.q);
            r.hypotheses_met = uniform.has_value();
            if (!uniform) r.notes.push_back("requires uniform dimension (K a singleton)");
            out.push_back(std::move(r));
        }
        out.push_back(lefmann_bound(p.n, s, p.q));
        if (spec.kset) {
            unsigned r_sizes = static_cast<unsigned>(spec.kset->size());
            BoundReport r = q_alon_babai_suzuki_bound(p.n, s, r_sizes, p.q);
            bool cond = spec.size_rule == setfamily::SizeRule::in_k ||
                        spec.size_rule == setfamily::SizeRule::snevily;
            for (unsigned k : *spec.kset)
                if (static_cast<long long>(k) <= static_cast<long long>(s) - r_sizes)
                    cond = false;
            r.hypotheses_met = cond;
            if (!cond) r.notes.push_back("requires dimensions in K with every k_i > s - |K|");
            out.push_back(std::move(r));
        }
        out.push_back(q_large_n_strict_bound(p.n, s, l1, kmax, p.q));
        out.push_back(q_sperner_large_n_bound(p.n, s, l1, kmax, p.q, sperner_guaranteed));
        {
            BoundReport r = q_sperner_bound(p.n, p.q);
            r.hypotheses_met = sperner_guaranteed;
            if (!sperner_guaranteed)
                r.notes.push_back("requires an antichain (no member contains another)");
            out.push_back(std::move(r));
        }
    }
    // t-wise subspace problems: no implemented theorem applies.

    std::stable_sort(out.begin(), out.end(),
                     [](const BoundReport& a, const BoundReport& b) { return a.value < b.value; });
    return out;
}

}  // namespace lifam::bounds
