#pragma once

// Finite set systems over a ground set [n] = {1..n}, n <= 64.
// Members are bitmasks (bit j-1 <=> element j), so intersection sizes are
// popcounts and all family predicates are word operations.

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lifam::setfamily {

using Subset = std::uint64_t;

inline Subset full_mask(unsigned n) {
    return n >= 64 ? ~Subset(0) : ((Subset(1) << n) - 1);
}

inline unsigned set_size(Subset a) { return static_cast<unsigned>(std::popcount(a)); }

inline unsigned intersection_size(Subset a, Subset b) {
    return static_cast<unsigned>(std::popcount(a & b));
}

inline bool subset_of(Subset a, Subset b) { return (a & b) == a; }

// Ascending 1-based element list.
inline std::vector<unsigned> elements(Subset m) {
    std::vector<unsigned> out;
    while (m) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(m));
        out.push_back(bit + 1);
        m &= m - 1;
    }
    return out;
}

inline Subset subset_from_elements(const std::vector<unsigned>& elems) {
    Subset m = 0;
    for (unsigned e : elems) {
        if (e < 1 || e > 64) throw std::invalid_argument("element out of range 1..64");
        m |= Subset(1) << (e - 1);
    }
    return m;
}

namespace detail {

// Visit all t-element index combinations of {0..m-1} in lexicographic order;
// fn returns false to abort early. Returns false iff aborted.
template <typename Fn>
bool for_each_combination(std::size_t m, std::size_t t, Fn&& fn) {
    if (t > m) return true;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        // advance
        std::size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - t) {
                ++idx[i];
                for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
        if (t == 0) return true;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SubsetFamily: distinct members over [n], insertion order preserved.

class SubsetFamily {
public:
    SubsetFamily() = default;

    SubsetFamily(unsigned ground_n, std::vector<Subset> members)
        : n_(ground_n), members_(std::move(members)) {
        if (n_ > 64) throw std::invalid_argument("ground set size exceeds 64");
        const Subset full = full_mask(n_);
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if ((members_[i] & ~full) != 0)
                throw std::invalid_argument("member " + std::to_string(i + 1) +
                                            " uses elements outside the ground set");
            for (std::size_t j = 0; j < i; ++j)
                if (members_[i] == members_[j])
                    throw std::invalid_argument("duplicate member at positions " +
                                                std::to_string(j + 1) + " and " +
                                                std::to_string(i + 1));
        }
    }

    unsigned ground_n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Subset operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Subset>& members() const { return members_; }

    bool contains_member(Subset s) const {
        for (Subset m : members_)
            if (m == s) return true;
        return false;
    }

    // Text format:
    //   set-family n=<n>
    //   <ascending elements, space separated; "-" for the empty set>
    //   ...
    // A blank line or EOF ends the member list.
    static SubsetFamily parse(std::istream& in) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("line 1: empty input");
        unsigned n = parse_header(line, "set-family");
        std::vector<Subset> members;
        std::size_t lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (is_blank(line)) break;
            members.push_back(parse_member_line(line, n, lineno));
        }
        return SubsetFamily(n, std::move(members));
    }

    void write(std::ostream& out) const {
        out << "set-family n=" << n_ << "\n";
        for (Subset m : members_) {
            if (m == 0) {
                out << "-\n";
                continue;
            }
            bool first = true;
            for (unsigned e : elements(m)) {
                if (!first) out << ' ';
                out << e;
                first = false;
            }
            out << "\n";
        }
    }

    static bool is_blank(const std::string& line) {
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) return false;
        return true;
    }

    // Shared by the subspace format: parses "<tag> n=<n>" (plus optional trailing
    // "key=value" fields returned to the caller via the out-parameter).
    static unsigned parse_header(const std::string& line, const std::string& tag,
                                 std::string* rest = nullptr) {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word != tag) throw std::runtime_error("line 1: expected '" + tag + "' header");
        ls >> word;
        if (word.rfind("n=", 0) != 0) throw std::runtime_error("line 1: expected n=<count>");
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(word.substr(2)));
        } catch (...) {
            throw std::runtime_error("line 1: bad ground set size '" + word.substr(2) + "'");
        }
        if (rest) {
            std::string tail;
            std::getline(ls, tail);
            *rest = tail;
        }
        return n;
    }

private:
    static Subset parse_member_line(const std::string& line, unsigned n, std::size_t lineno) {
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "-") {
            std::string extra;
            if (ls >> extra)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": unexpected token after '-'");
            return 0;
        }
        Subset m = 0;
        long long prev = 0;
        std::istringstream vs(line);
        long long v;
        while (vs >> v) {
            if (v < 1 || v > static_cast<long long>(n))
                throw std::runtime_error("line " + std::to_string(lineno) + ": element " +
                                         std::to_string(v) + " outside 1.." + std::to_string(n));
            if (v <= prev)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": elements must be strictly ascending");
            m |= Subset(1) << (v - 1);
            prev = v;
        }
        if (!vs.eof())
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad element token");
        if (m == 0)
            throw std::runtime_error("line " + std::to_string(lineno) + ": empty member line");
        return m;
    }

    unsigned n_ = 0;
    std::vector<Subset> members_;
};

// ---------------------------------------------------------------------------
// Intersection constraints.

enum class Mode { pairwise, t_wise };
enum class SizeRule { none, in_k, not_in_l, snevily };

inline const char* mode_name(Mode m) { return m == Mode::pairwise ? "pairwise" : "t-wise"; }

inline const char* size_rule_name(SizeRule r) {
    switch (r) {
        case SizeRule::none: return "none";
        case SizeRule::in_k: return "in-K";
        case SizeRule::not_in_l: return "not-in-L";
        case SizeRule::snevily: return "snevily";
    }
    return "?";
}

struct IntersectionSpec {
    std::vector<unsigned> lset;                  // strictly increasing, nonempty
    std::optional<std::vector<unsigned>> kset;   // strictly increasing, positive
    unsigned t = 2;
    Mode mode = Mode::pairwise;
    SizeRule size_rule = SizeRule::none;

    unsigned s() const { return static_cast<unsigned>(lset.size()); }
    unsigned l1() const { return lset.front(); }
    unsigned lmax() const { return lset.back(); }

    bool l_contains(unsigned v) const {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    }
    bool k_contains(unsigned v) const {
        if (!kset) return false;
        for (unsigned k : *kset)
            if (k == v) return true;
        return false;
    }

    void validate() const {
        if (lset.empty()) throw std::invalid_argument("L must be nonempty");
        for (std::size_t i = 1; i < lset.size(); ++i)
            if (lset[i] <= lset[i - 1])
                throw std::invalid_argument("L must be strictly increasing");
        if (kset) {
            if (!kset->empty() && (*kset)[0] == 0)
                throw std::invalid_argument("K must contain positive sizes only");
            for (std::size_t i = 1; i < kset->size(); ++i)
                if ((*kset)[i] <= (*kset)[i - 1])
                    throw std::invalid_argument("K must be strictly increasing");
        }
        if (t < 2) throw std::invalid_argument("t must be at least 2");
        if ((size_rule == SizeRule::in_k || size_rule == SizeRule::snevily) && !kset)
            throw std::invalid_argument("size rule requires K");
        if (size_rule == SizeRule::snevily) {
            if (kset->empty())
                throw std::invalid_argument("snevily rule requires a nonempty K");
            if (lset.back() >= (*kset)[0])
                throw std::invalid_argument("snevily rule requires max(L) < min(K)");
        }
    }
};

// ---------------------------------------------------------------------------
// Predicates, with witness-producing variants for reporting.

struct PairWitness {
    std::size_t i, j;    // 0-based member indices
    unsigned value;      // offending intersection size
};

struct TupleWitness {
    std::vector<std::size_t> indices;
    unsigned value;
};

inline std::optional<PairWitness> find_pairwise_violation(const SubsetFamily& f,
                                                          const std::vector<unsigned>& lset) {
    auto in_l = [&](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            unsigned c = intersection_size(f[i], f[j]);
            if (!in_l(c)) return PairWitness{i, j, c};
        }
    return std::nullopt;
}

inline bool is_l_intersecting(const SubsetFamily& f, const std::vector<unsigned>& lset) {
    return !find_pairwise_violation(f, lset).has_value();
}

// t-wise: every t distinct members intersect in a size from L.
// Vacuously true when the family has fewer than t members.
inline std::optional<TupleWitness> find_t_wise_violation(const SubsetFamily& f,
                                                         const std::vector<unsigned>& lset,
                                                         unsigned t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    auto in_l = [&](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };
    std::optional<TupleWitness> found;
    detail::for_each_combination(f.size(), t, [&](const std::vector<std::size_t>& idx) {
        Subset m = f[idx[0]];
        for (std::size_t i = 1; i < idx.size(); ++i) m &= f[idx[i]];
        unsigned c = set_size(m);
        if (!in_l(c)) {
            found = TupleWitness{idx, c};
            return false;
        }
        return true;
    });
    return found;
}

inline bool is_t_wise_l_intersecting(const SubsetFamily& f, const std::vector<unsigned>& lset,
                                     unsigned t) {
    return !find_t_wise_violation(f, lset, t).has_value();
}

inline std::vector<unsigned> size_profile(const SubsetFamily& f) {
    std::vector<unsigned> out;
    out.reserve(f.size());
    for (Subset m : f.members()) out.push_back(set_size(m));
    return out;
}

struct SizeWitness {
    std::size_t index;
    unsigned size;
};

inline std::optional<SizeWitness> find_size_rule_violation(const SubsetFamily& f,
                                                           const IntersectionSpec& spec) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        unsigned sz = set_size(f[i]);
        bool ok = true;
        switch (spec.size_rule) {
            case SizeRule::none: ok = true; break;
            case SizeRule::in_k:
            case SizeRule::snevily: ok = spec.k_contains(sz); break;
            case SizeRule::not_in_l: ok = !spec.l_contains(sz); break;
        }
        if (!ok) return SizeWitness{i, sz};
    }
    return std::nullopt;
}

inline bool check_size_rule(const SubsetFamily& f, const IntersectionSpec& spec) {
    return !find_size_rule_violation(f, spec).has_value();
}

// Antichain under inclusion: no member contained in another.
inline std::optional<PairWitness> find_sperner_violation(const SubsetFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && subset_of(f[i], f[j]))
                return PairWitness{i, j, set_size(f[i])};
    return std::nullopt;
}

inline bool is_sperner_sets(const SubsetFamily& f) {
    return !find_sperner_violation(f).has_value();
}

// ---------------------------------------------------------------------------
// Greedy chain toward the global intersection.
//
// Returns indices i_0 = 0 < i_1 < ... whose running intersection equals the
// intersection of the whole family; each appended index is the first (in
// stored order) that strictly shrinks the running intersection, so at most
// |A_{i_0}| + 1 <= max-member-size + 1 indices are returned.
inline std::vector<std::size_t> realizing_prefix_indices(const SubsetFamily& f) {
    if (f.empty()) throw std::invalid_argument("family is empty");
    Subset target = full_mask(f.ground_n());
    for (Subset m : f.members()) target &= m;
    std::vector<std::size_t> chain{0};
    Subset running = f[0];
    while (running != target) {
        bool advanced = false;
        for (std::size_t i = 1; i < f.size(); ++i) {
            if ((running & f[i]) != running) {
                chain.push_back(i);
                running &= f[i];
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("realizing prefix: no shrinking member (unreachable)");
    }
    return chain;
}

// Extracts a subfamily of at most k+1 members (k = max member size) whose
// intersection is empty. Requires the whole family to have empty intersection.
inline SubsetFamily helly_reduce(const SubsetFamily& f) {
    if (f.empty()) throw std::invalid_argument("helly_reduce: family is empty");
    Subset global = full_mask(f.ground_n());
    for (Subset m : f.members()) global &= m;
    if (global != 0)
        throw std::invalid_argument("helly_reduce: global intersection is nonempty");
    std::vector<Subset> picked;
    for (std::size_t i : realizing_prefix_indices(f)) picked.push_back(f[i]);
    return SubsetFamily(f.ground_n(), std::move(picked));
}

// ---------------------------------------------------------------------------
// Core overlap: if H has empty global intersection and F (not a member of H)
// meets every member of H in at least l1 >= 1 elements, then F meets the
// union of H in at least l1 + 1 elements. Preconditions are rejected with a
// message naming the first failure; the return value is the claim itself.
inline bool core_overlap_check(const SubsetFamily& h, Subset f, unsigned l1) {
    if (l1 < 1) throw std::invalid_argument("core_overlap_check: l1 must be positive");
    if (h.empty()) throw std::invalid_argument("core_overlap_check: H is empty");
    Subset global = full_mask(h.ground_n());
    Subset uni = 0;
    for (Subset m : h.members()) {
        global &= m;
        uni |= m;
    }
    if (global != 0)
        throw std::invalid_argument("core_overlap_check: H has nonempty global intersection");
    if (h.contains_member(f))
        throw std::invalid_argument("core_overlap_check: F is a member of H");
    for (std::size_t i = 0; i < h.size(); ++i)
        if (intersection_size(f, h[i]) < l1)
            throw std::invalid_argument("core_overlap_check: |F ∩ H_" + std::to_string(i + 1) +
                                        "| < l1");
    return intersection_size(uni, f) >= l1 + 1;
}

// Union size of t >= 2 pairwise-intersecting sets is at most k + (t-1)(k-1),
// k = max member size. Preconditions rejected with the offending pair named.
inline bool union_size_check(const SubsetFamily& h) {
    if (h.size() < 2) throw std::invalid_argument("union_size_check: need at least 2 members");
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
            if ((h[i] & h[j]) == 0)
                throw std::invalid_argument("union_size_check: members " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1) + " are disjoint");
    unsigned k = 0;
    Subset uni = 0;
    for (Subset m : h.members()) {
        k = std::max(k, set_size(m));
        uni |= m;
    }
    const unsigned t = static_cast<unsigned>(h.size());
    return set_size(uni) <= k + (t - 1) * (k - 1);
}

}  // namespace lifam::setfamily
