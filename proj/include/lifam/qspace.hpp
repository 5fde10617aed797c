#pragma once

// Subspaces of GF(q)^n for prime q <= 7: canonical reduced-row-echelon bases,
// exact lattice operations (sum rank, intersection, containment), direct
// enumeration of every subspace of a given dimension, families with a text
// format, intersection predicates over dimensions, and the exact LYM weight
// for antichains of subspaces.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lifam/exactnum.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::qspace {

using Vec = std::vector<std::uint8_t>;  // one coordinate per entry, values < q
using Mat = std::vector<Vec>;

namespace detail {

inline void require_field(unsigned q) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw std::invalid_argument("q must be a prime in {2, 3, 5, 7}");
}

inline std::uint8_t fneg(std::uint8_t a, unsigned q) {
    return static_cast<std::uint8_t>(a == 0 ? 0 : q - a);
}

inline std::uint8_t fmul(std::uint8_t a, std::uint8_t b, unsigned q) {
    return static_cast<std::uint8_t>((unsigned(a) * b) % q);
}

inline std::uint8_t finv(std::uint8_t a, unsigned q) {
    for (unsigned x = 1; x < q; ++x)
        if ((unsigned(a) * x) % q == 1) return static_cast<std::uint8_t>(x);
    throw std::invalid_argument("zero has no inverse");
}

// row_i += c * row_j, elementwise mod q
inline void add_scaled_row(Vec& dst, const Vec& src, std::uint8_t c, unsigned q) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint8_t>((dst[i] + unsigned(c) * src[i]) % q);
}

// In-place reduced row echelon form; returns the rank. Zero rows are dropped,
// pivots are 1 with zeros above and below, rows ordered by pivot column, so
// equal row spans produce identical matrices.
inline unsigned rref(Mat& rows, unsigned n, unsigned q) {
    unsigned r = 0;
    for (unsigned col = 0; col < n && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint8_t inv = finv(rows[r][col], q);
        for (auto& v : rows[r]) v = fmul(v, inv, q);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            add_scaled_row(rows[i], rows[r], fneg(rows[i][col], q), q);
        }
        ++r;
    }
    rows.resize(r);
    return r;
}

}  // namespace detail

// A subspace of GF(q)^n held in canonical reduced-row-echelon form, so two
// Subspace values are equal exactly when they are the same subspace.
class Subspace {
public:
    Subspace(unsigned n, unsigned q, Mat generators) : n_(n), q_(q) {
        detail::require_field(q);
        if (n == 0 || n > 64) throw std::invalid_argument("ambient dimension must be in 1..64");
        for (const Vec& v : generators) {
            if (v.size() != n)
                throw std::invalid_argument("generator length differs from the ambient dimension");
            for (std::uint8_t e : v)
                if (e >= q) throw std::invalid_argument("generator entry is not reduced mod q");
        }
        rows_ = std::move(generators);
        detail::rref(rows_, n_, q_);
    }

    static Subspace zero(unsigned n, unsigned q) { return Subspace(n, q, {}); }

    unsigned ambient_n() const { return n_; }
    unsigned q() const { return q_; }
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    const Mat& rows() const { return rows_; }

    bool contains(Vec v) const {
        if (v.size() != n_) throw std::invalid_argument("vector length differs from ambient");
        for (const Vec& row : rows_) {
            unsigned piv = pivot_of(row);
            if (v[piv] != 0) detail::add_scaled_row(v, row, detail::fneg(v[piv], q_), q_);
        }
        for (std::uint8_t e : v)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // (dim, row-major entries) lexicographic order; total on fixed (n, q).
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
        return a.rows_ < b.rows_;
    }

private:
    static unsigned pivot_of(const Vec& row) {
        for (unsigned i = 0; i < row.size(); ++i)
            if (row[i] != 0) return i;
        throw std::logic_error("canonical basis holds a zero row");
    }

    unsigned n_;
    unsigned q_;
    Mat rows_;
};

namespace detail {

inline void require_same_space(const Subspace& a, const Subspace& b) {
    if (a.ambient_n() != b.ambient_n() || a.q() != b.q())
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

}  // namespace detail

// dim(U + W) by stacking both canonical bases and re-reducing.
inline unsigned sum_dim(const Subspace& u, const Subspace& w) {
    detail::require_same_space(u, w);
    Mat stacked = u.rows();
    stacked.insert(stacked.end(), w.rows().begin(), w.rows().end());
    return detail::rref(stacked, u.ambient_n(), u.q());
}

// dim(U cap W) = dim U + dim W - dim(U + W); exact, no enumeration.
inline unsigned intersection_dim(const Subspace& u, const Subspace& w) {
    return u.dim() + w.dim() - sum_dim(u, w);
}

// U cap W as a subspace, by row reduction of the doubled matrix
//   [u | u]  for u in basis(U)
//   [w | 0]  for w in basis(W):
// rows whose left half eliminates to zero have right halves spanning U cap W.
inline Subspace intersection(const Subspace& u, const Subspace& w) {
    detail::require_same_space(u, w);
    const unsigned n = u.ambient_n();
    const unsigned q = u.q();
    Mat doubled;
    for (const Vec& r : u.rows()) {
        Vec row(2 * n, 0);
        for (unsigned i = 0; i < n; ++i) row[i] = row[n + i] = r[i];
        doubled.push_back(std::move(row));
    }
    for (const Vec& r : w.rows()) {
        Vec row(2 * n, 0);
        for (unsigned i = 0; i < n; ++i) row[i] = r[i];
        doubled.push_back(std::move(row));
    }
    detail::rref(doubled, 2 * n, q);
    Mat inter;
    for (const Vec& row : doubled) {
        bool left_zero = true;
        for (unsigned i = 0; i < n; ++i)
            if (row[i] != 0) {
                left_zero = false;
                break;
            }
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace(n, q, std::move(inter));
}

// U <= W as subspaces: every basis vector of U lies in W.
inline bool subspace_leq(const Subspace& u, const Subspace& w) {
    detail::require_same_space(u, w);
    if (u.dim() > w.dim()) return false;
    for (const Vec& r : u.rows())
        if (!w.contains(r)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration. Every subspace has a unique RREF basis, determined by its
// pivot-column set and the free entries right of each pivot (and outside the
// pivot columns); walking all pivot sets and all free-entry assignments emits
// each subspace exactly once. Refuses ambient spaces whose subspace count
// exceeds the cap, since the result would not fit in memory anyway.

inline constexpr unsigned long long enumeration_cap = 1ull << 20;

inline std::vector<Subspace> enumerate_subspaces(unsigned n, unsigned q,
                                                 std::optional<unsigned> dim = std::nullopt) {
    detail::require_field(q);
    if (n == 0 || n > 64) throw std::invalid_argument("ambient dimension must be in 1..64");
    Natural total = 0;
    if (dim) {
        total = exactnum::qbinom(n, static_cast<long long>(*dim), q);
    } else {
        for (unsigned k = 0; k <= n; ++k) total += exactnum::qbinom(n, k, q);
    }
    if (total > enumeration_cap)
        throw std::invalid_argument("enumeration would emit " + total.str() +
                                    " subspaces, beyond the cap of " +
                                    std::to_string(enumeration_cap));

    std::vector<Subspace> out;
    unsigned klo = dim ? *dim : 0u;
    unsigned khi = dim ? *dim : n;
    for (unsigned k = klo; k <= khi && k <= n; ++k) {
        if (k == 0) {
            out.push_back(Subspace::zero(n, q));
            continue;
        }
        setfamily::detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& piv) {
            // free positions (row i, column j): j > piv[i], j not a pivot
            std::vector<std::pair<unsigned, unsigned>> free_cells;
            std::vector<bool> is_pivot(n, false);
            for (std::size_t p : piv) is_pivot[p] = true;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = static_cast<unsigned>(piv[i]) + 1; j < n; ++j)
                    if (!is_pivot[j]) free_cells.emplace_back(i, j);

            Mat rows(k, Vec(n, 0));
            for (unsigned i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            std::vector<std::uint8_t> counter(free_cells.size(), 0);
            while (true) {
                for (std::size_t c = 0; c < free_cells.size(); ++c)
                    rows[free_cells[c].first][free_cells[c].second] = counter[c];
                out.push_back(Subspace(n, q, rows));
                // odometer advance
                std::size_t c = 0;
                while (c < counter.size()) {
                    if (++counter[c] < q) break;
                    counter[c] = 0;
                    ++c;
                }
                if (c == counter.size()) break;
            }
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Families of distinct subspaces, insertion order preserved.

class SubspaceFamily {
public:
    SubspaceFamily(unsigned n, unsigned q, std::vector<Subspace> members)
        : n_(n), q_(q), members_(std::move(members)) {
        detail::require_field(q);
        if (n == 0 || n > 64) throw std::invalid_argument("ambient dimension must be in 1..64");
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i].ambient_n() != n_ || members_[i].q() != q_)
                throw std::invalid_argument("member " + std::to_string(i + 1) +
                                            " lives in a different ambient space");
            for (std::size_t j = 0; j < i; ++j)
                if (members_[i] == members_[j])
                    throw std::invalid_argument("duplicate member at positions " +
                                                std::to_string(j + 1) + " and " +
                                                std::to_string(i + 1));
        }
    }

    unsigned ambient_n() const { return n_; }
    unsigned q() const { return q_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const Subspace& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Subspace>& members() const { return members_; }

    std::vector<unsigned> dims() const {
        std::vector<unsigned> out;
        out.reserve(members_.size());
        for (const Subspace& s : members_) out.push_back(s.dim());
        return out;
    }

    // Text format:
    //   subspace-family n=<n> q=<q>
    //   <basis blocks: one digit row per line, length n, entries < q;
    //    a single "-" line is the zero subspace; one blank line separates
    //    members; a second consecutive blank line or end of input ends the
    //    family>
    static SubspaceFamily parse(std::istream& in) {
        std::string line;
        unsigned line_no = 0;
        auto fail = [&](const std::string& why) {
            return std::runtime_error("line " + std::to_string(line_no) + ": " + why);
        };
        if (!std::getline(in, line)) throw std::runtime_error("empty input");
        ++line_no;
        std::string rest;
        unsigned n = setfamily::SubsetFamily::parse_header(line, "subspace-family", &rest);
        unsigned q = 0;
        {
            std::istringstream hs(rest);
            std::string kv;
            while (hs >> kv) {
                if (kv.rfind("q=", 0) != 0) throw fail("unknown header field '" + kv + "'");
                try {
                    q = static_cast<unsigned>(std::stoul(kv.substr(2)));
                } catch (const std::exception&) {
                    throw fail("malformed header value in '" + kv + "'");
                }
            }
        }
        if (n == 0) throw fail("header must set n");
        if (q == 0) throw fail("header must set q=<q>");
        if (q != 2 && q != 3 && q != 5 && q != 7)
            throw fail("q must be a prime in {2, 3, 5, 7}");

        std::vector<Subspace> members;
        Mat block;
        bool block_open = false;
        bool prev_blank = false;
        auto flush = [&]() {
            if (!block_open) return;
            members.push_back(Subspace(n, q, std::move(block)));
            block.clear();
            block_open = false;
        };
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (setfamily::SubsetFamily::is_blank(line)) {
                if (prev_blank) break;  // double blank terminates the family
                flush();
                prev_blank = true;
                continue;
            }
            prev_blank = false;
            if (line == "-") {
                if (block_open) throw fail("zero-subspace marker inside a basis block");
                members.push_back(Subspace::zero(n, q));
                // consume the member; the next blank line is just a separator
                block_open = false;
                // a "-" must be followed by a blank line or end of input
                if (std::getline(in, line)) {
                    ++line_no;
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (!setfamily::SubsetFamily::is_blank(line))
                        throw fail("zero-subspace marker must stand alone");
                    prev_blank = true;
                } else {
                    break;
                }
                continue;
            }
            if (line.size() != n) throw fail("basis row has length " +
                                             std::to_string(line.size()) + ", expected " +
                                             std::to_string(n));
            Vec row(n);
            for (unsigned i = 0; i < n; ++i) {
                char c = line[i];
                if (c < '0' || c > '9') throw fail("basis row holds a non-digit");
                unsigned v = static_cast<unsigned>(c - '0');
                if (v >= q) throw fail("basis entry " + std::to_string(v) +
                                       " is not reduced mod " + std::to_string(q));
                row[i] = static_cast<std::uint8_t>(v);
            }
            block.push_back(std::move(row));
            block_open = true;
        }
        flush();
        try {
            return SubspaceFamily(n, q, std::move(members));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("line ") + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }

    void write(std::ostream& out) const {
        out << "subspace-family n=" << n_ << " q=" << q_ << '\n';
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i > 0) out << '\n';
            if (members_[i].dim() == 0) {
                out << "-\n";
                continue;
            }
            for (const Vec& row : members_[i].rows()) {
                for (std::uint8_t e : row) out << char('0' + e);
                out << '\n';
            }
        }
    }

private:
    unsigned n_;
    unsigned q_;
    std::vector<Subspace> members_;
};

// ---------------------------------------------------------------------------
// Intersection predicates over dimensions, mirroring the set-system ones.

inline std::optional<setfamily::PairWitness> find_pairwise_violation(
    const SubspaceFamily& f, const std::vector<unsigned>& lset) {
    auto in_l = [&](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            unsigned d = intersection_dim(f[i], f[j]);
            if (!in_l(d)) return setfamily::PairWitness{i, j, d};
        }
    return std::nullopt;
}

inline bool is_l_intersecting(const SubspaceFamily& f, const std::vector<unsigned>& lset) {
    return !find_pairwise_violation(f, lset).has_value();
}

// t-wise: every t distinct members meet in a subspace whose dimension is in L.
// Vacuously true when the family has fewer than t members.
inline std::optional<setfamily::TupleWitness> find_t_wise_violation(
    const SubspaceFamily& f, const std::vector<unsigned>& lset, unsigned t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    auto in_l = [&](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };
    std::optional<setfamily::TupleWitness> witness;
    setfamily::detail::for_each_combination(
        f.size(), t, [&](const std::vector<std::size_t>& idx) {
            Subspace meet = f[idx[0]];
            for (std::size_t i = 1; i < idx.size(); ++i) meet = intersection(meet, f[idx[i]]);
            if (!in_l(meet.dim())) {
                witness = setfamily::TupleWitness{idx, meet.dim()};
                return false;
            }
            return true;
        });
    return witness;
}

inline bool is_t_wise_l_intersecting(const SubspaceFamily& f, const std::vector<unsigned>& lset,
                                     unsigned t) {
    return !find_t_wise_violation(f, lset, t).has_value();
}

// Dimension rule (mirrors the member-size rule for sets).
inline std::optional<setfamily::SizeWitness> find_dim_rule_violation(
    const SubspaceFamily& f, const setfamily::IntersectionSpec& spec) {
    using setfamily::SizeRule;
    if (spec.size_rule == SizeRule::none) return std::nullopt;
    for (std::size_t i = 0; i < f.size(); ++i) {
        unsigned d = f[i].dim();
        bool ok = true;
        switch (spec.size_rule) {
            case SizeRule::in_k:
            case SizeRule::snevily: ok = spec.k_contains(d); break;
            case SizeRule::not_in_l: ok = !spec.l_contains(d); break;
            case SizeRule::none: break;
        }
        if (!ok) return setfamily::SizeWitness{i, d};
    }
    return std::nullopt;
}

inline bool check_dim_rule(const SubspaceFamily& f, const setfamily::IntersectionSpec& spec) {
    return !find_dim_rule_violation(f, spec).has_value();
}

// Antichain under inclusion: first containment of member i inside member j,
// with the inner member's dimension as the witness value.
inline std::optional<setfamily::PairWitness> find_sperner_violation(const SubspaceFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (i == j) continue;
            if (subspace_leq(f[i], f[j])) return setfamily::PairWitness{i, j, f[i].dim()};
        }
    return std::nullopt;
}

inline bool is_sperner_subspaces(const SubspaceFamily& f) {
    return !find_sperner_violation(f).has_value();
}

// Exact LYM weight sum_i 1 / qbinom(n, dim U_i, q) for an antichain; at most 1
// with equality exactly on full middle layers. Containments make the sum
// meaningless, so they are rejected.
inline Rational lym_sum(const SubspaceFamily& f) {
    if (auto v = find_sperner_violation(f))
        throw std::invalid_argument("family is not an antichain: member " +
                                    std::to_string(v->i + 1) + " lies inside member " +
                                    std::to_string(v->j + 1));
    Rational total = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        total += Rational(1) / Rational(exactnum::qbinom(f.ambient_n(), f[i].dim(), f.q()));
    return total;
}

// Antichain size against the middle-layer cap qbinom(n, floor(n/2), q).
struct AntichainBoundReport {
    bool is_antichain = false;
    std::optional<setfamily::PairWitness> containment;
    Natural bound = 0;
    bool within_bound = false;
    bool tight = false;               // size equals the cap
    bool middle_layers_only = false;  // every dim is floor(n/2) or ceil(n/2)
};

inline AntichainBoundReport q_sperner_check(const SubspaceFamily& f) {
    AntichainBoundReport rep;
    rep.containment = find_sperner_violation(f);
    rep.is_antichain = !rep.containment.has_value();
    rep.bound = exactnum::qbinom(f.ambient_n(), f.ambient_n() / 2, f.q());
    rep.within_bound = rep.is_antichain && Natural(f.size()) <= rep.bound;
    rep.tight = rep.is_antichain && Natural(f.size()) == rep.bound;
    rep.middle_layers_only = true;
    unsigned lo = f.ambient_n() / 2;
    unsigned hi = (f.ambient_n() + 1) / 2;
    for (unsigned d : f.dims())
        if (d != lo && d != hi) rep.middle_layers_only = false;
    return rep;
}

}  // namespace lifam::qspace
