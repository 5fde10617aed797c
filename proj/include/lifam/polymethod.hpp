#pragma once

// Multilinear polynomials over the rationals with exact arithmetic, used to
// certify upper bounds on cross-intersecting set pairs: each set pair (A_i,
// B_i) yields a product of linear forms that vanishes on the characteristic
// vector of B_j exactly when the intersection size lands in L. Exact Gaussian
// elimination over the monomial basis then witnesses linear independence, and
// the whole computation serializes to a text certificate that can be replayed
// and re-checked from scratch.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifam/exactnum.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::polymethod {

using setfamily::Subset;

// Canonical monomial order: lower total degree first, then plain integer
// order on the variable mask. Deterministic, so pivot choices replay exactly.
struct MonomialLess {
    bool operator()(Subset a, Subset b) const {
        int pa = std::popcount(a);
        int pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    }
};

// A multilinear polynomial in variables x_1..x_n (element e <-> bit e-1),
// stored as monomial-mask -> rational coefficient with zeros pruned.
class MultilinearPoly {
public:
    using TermMap = std::map<Subset, Rational, MonomialLess>;

    explicit MultilinearPoly(unsigned n) : n_(n) {
        if (n == 0 || n > 64) throw std::invalid_argument("variable count must be in 1..64");
    }

    static MultilinearPoly constant(unsigned n, const Rational& c) {
        MultilinearPoly p(n);
        p.add_term(0, c);
        return p;
    }

    unsigned n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, unsigned(std::popcount(m)));
        return d;
    }

    void add_term(Subset monomial, const Rational& coef) {
        if ((monomial & ~setfamily::full_mask(n_)) != 0)
            throw std::invalid_argument("monomial uses a variable beyond x_n");
        if (coef == 0) return;
        auto it = terms_.find(monomial);
        if (it == terms_.end()) {
            terms_.emplace(monomial, coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Multiply by the linear form (sum_{j in vars} x_j + c), reducing every
    // square via x_j^2 = x_j so the result stays multilinear.
    void multiply_linear(Subset vars, const Rational& c) {
        if ((vars & ~setfamily::full_mask(n_)) != 0)
            throw std::invalid_argument("linear form uses a variable beyond x_n");
        TermMap next;
        auto accumulate = [&next](Subset m, const Rational& v) {
            auto it = next.find(m);
            if (it == next.end()) {
                next.emplace(m, v);
            } else {
                it->second += v;
                if (it->second == 0) next.erase(it);
            }
        };
        for (const auto& [m, coef] : terms_) {
            if (c != 0) accumulate(m, coef * c);
            Subset rest = vars;
            while (rest) {
                Subset bit = rest & (~rest + 1);
                rest ^= bit;
                accumulate(m | bit, coef);  // x_j * x_j = x_j when bit is in m
            }
        }
        terms_ = std::move(next);
    }

    void add_scaled(const MultilinearPoly& other, const Rational& factor) {
        if (factor == 0) return;
        for (const auto& [m, c] : other.terms_) add_term(m, c * factor);
    }

    // Value at the 0/1 characteristic vector of b: every monomial inside b
    // evaluates to 1, everything else to 0.
    Rational evaluate_on_set(Subset b) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_)
            if (setfamily::subset_of(m, b)) total += c;
        return total;
    }

    // One term per line, "coef : e1 e2 ..." with "-" for the constant monomial.
    void write(std::ostream& out) const {
        for (const auto& [m, c] : terms_) {
            out << c << " : ";
            if (m == 0) {
                out << "-";
            } else {
                bool first = true;
                for (unsigned e : setfamily::elements(m)) {
                    if (!first) out << ' ';
                    out << e;
                    first = false;
                }
            }
            out << '\n';
        }
    }

private:
    unsigned n_;
    TermMap terms_;
};

// f_A(x) = prod_{l in lset} (sum_{j in A} x_j - l), multilinear-reduced.
// Evaluated on the characteristic vector of B this is prod (|A cap B| - l):
// zero exactly when the intersection size lies in lset.
inline MultilinearPoly intersection_poly(Subset a, const std::vector<unsigned>& lset,
                                         unsigned n) {
    MultilinearPoly p = MultilinearPoly::constant(n, 1);
    for (unsigned l : lset) p.multiply_linear(a, -Rational(l));
    return p;
}

// g_R(x) = (1 - x_n) * prod_{j in R, j != n} x_j for a set R containing the
// last element n. Expanded: +1 on R\{n}, -1 on R.
inline MultilinearPoly pinned_monomial_poly(Subset r, unsigned n) {
    Subset last = Subset{1} << (n - 1);
    if ((r & last) == 0)
        throw std::invalid_argument("pinned index set must contain the last element");
    MultilinearPoly p(n);
    p.add_term(r & ~last, 1);
    p.add_term(r, -1);
    return p;
}

// All R subseteq [n] with n in R and |R| <= s, in canonical monomial order.
// There are sum_{i<=s-1} C(n-1, i) of them.
inline std::vector<Subset> pinned_index_sets(unsigned n, unsigned s) {
    Subset last = Subset{1} << (n - 1);
    std::vector<Subset> out;
    for (unsigned size = 1; size <= s && size <= n; ++size)
        setfamily::detail::for_each_combination(
            n - 1, size - 1, [&](const std::vector<std::size_t>& idx) {
                Subset rest = 0;
                for (std::size_t i : idx) rest |= Subset{1} << i;
                out.push_back(rest | last);
                return true;
            });
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination over the monomial basis.

struct EliminationResult {
    // For each input row in order: its pivot monomial after reduction by all
    // earlier pivots, or nullopt if the row reduced to zero (dependent).
    std::vector<std::optional<Subset>> pivots;
    unsigned rank = 0;
};

inline EliminationResult eliminate(const std::vector<MultilinearPoly>& polys) {
    EliminationResult result;
    // pivot monomial -> fully reduced row owning it
    std::map<Subset, MultilinearPoly, MonomialLess> basis;
    for (const MultilinearPoly& p : polys) {
        MultilinearPoly row = p;
        for (const auto& [piv, prow] : basis) {
            auto it = row.terms().find(piv);
            if (it == row.terms().end()) continue;
            Rational factor = -(it->second / prow.terms().at(piv));
            row.add_scaled(prow, factor);
        }
        if (row.is_zero()) {
            result.pivots.push_back(std::nullopt);
        } else {
            Subset piv = row.terms().begin()->first;  // least monomial
            result.pivots.push_back(piv);
            ++result.rank;
            basis.emplace(piv, std::move(row));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Certification: given same-length families (A_1..A_m), (B_1..B_m) over the
// same ground set and a target list L, verify
//   (i)  |A_i cap B_i| not in L for every i,
//   (ii) |A_j cap B_i| in L for every i != j,
// re-derive both facts through polynomial evaluation, and establish by exact
// elimination that the m intersection polynomials together with the pinned
// monomials are linearly independent inside the degree-<=s space. Since there
// are sum_{i<=s-1} C(n-1,i) pinned polynomials in a space of dimension
// sum_{i<=s} C(n,i), independence caps m at sum_{i<=s} C(n-1,i).

struct CertificateReport {
    bool ok = false;
    unsigned n = 0;
    unsigned s = 0;
    unsigned m = 0;        // number of set pairs
    unsigned q_count = 0;  // number of pinned polynomials
    unsigned rank = 0;     // joint rank of all m + q_count polynomials
    Natural ambient = 0;       // sum_{i<=s} C(n, i)
    Natural family_bound = 0;  // sum_{i<=s} C(n-1, i)
    std::vector<std::string> failures;
    std::vector<MultilinearPoly> polys;  // intersection polys first, then pinned
    std::vector<std::optional<Subset>> pivots;

    bool bound_holds() const { return Natural(m) <= family_bound; }
};

inline CertificateReport certify(const setfamily::SubsetFamily& a,
                                 const setfamily::SubsetFamily& b,
                                 const std::vector<unsigned>& lset) {
    if (lset.empty()) throw std::invalid_argument("L must be nonempty");
    for (std::size_t i = 1; i < lset.size(); ++i)
        if (lset[i] <= lset[i - 1])
            throw std::invalid_argument("L must be strictly increasing");

    CertificateReport rep;
    rep.n = a.ground_n();
    rep.s = static_cast<unsigned>(lset.size());
    rep.m = static_cast<unsigned>(a.size());
    if (b.ground_n() != a.ground_n()) {
        rep.failures.push_back("families live on different ground sets");
        return rep;
    }
    if (b.size() != a.size()) {
        rep.failures.push_back("families have different lengths");
        return rep;
    }
    if (a.size() == 0) {
        rep.failures.push_back("families are empty");
        return rep;
    }

    auto in_l = [&lset](unsigned v) {
        for (unsigned l : lset)
            if (l == v) return true;
        return false;
    };

    // Set-level conditions with finger-pointing witnesses.
    for (unsigned i = 0; i < rep.m; ++i) {
        unsigned v = setfamily::intersection_size(a[i], b[i]);
        if (in_l(v))
            rep.failures.push_back("diagonal condition fails at index " + std::to_string(i) +
                                   ": |A_i cap B_i| = " + std::to_string(v) + " lies in L");
    }
    for (unsigned i = 0; i < rep.m; ++i)
        for (unsigned j = 0; j < rep.m; ++j) {
            if (i == j) continue;
            unsigned v = setfamily::intersection_size(a[j], b[i]);
            if (!in_l(v))
                rep.failures.push_back("cross condition fails at pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + "): |A_j cap B_i| = " +
                                       std::to_string(v) + " is outside L");
        }

    // Build the polynomials and re-check the vanishing pattern by evaluation.
    for (unsigned j = 0; j < rep.m; ++j)
        rep.polys.push_back(intersection_poly(a[j], lset, rep.n));
    for (unsigned i = 0; i < rep.m; ++i)
        for (unsigned j = 0; j < rep.m; ++j) {
            Rational v = rep.polys[j].evaluate_on_set(b[i]);
            bool should_vanish = (i != j);
            if (should_vanish && v != 0)
                rep.failures.push_back("evaluation pattern fails at (" + std::to_string(i) +
                                       ", " + std::to_string(j) +
                                       "): off-diagonal value is nonzero");
            if (!should_vanish && v == 0)
                rep.failures.push_back("evaluation pattern fails at (" + std::to_string(i) +
                                       ", " + std::to_string(i) + "): diagonal value is zero");
        }

    std::vector<Subset> q = pinned_index_sets(rep.n, rep.s);
    rep.q_count = static_cast<unsigned>(q.size());
    for (Subset r : q) rep.polys.push_back(pinned_monomial_poly(r, rep.n));

    EliminationResult elim = eliminate(rep.polys);
    rep.pivots = std::move(elim.pivots);
    rep.rank = elim.rank;
    if (rep.rank != rep.m + rep.q_count)
        rep.failures.push_back("polynomials are linearly dependent: rank " +
                               std::to_string(rep.rank) + " < " +
                               std::to_string(rep.m + rep.q_count));

    rep.ambient = exactnum::binom_sum(rep.n, 0, rep.s);
    rep.family_bound = exactnum::binom_sum(rep.n - 1, 0, rep.s);
    rep.ok = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Text serialization and replay. The certificate carries the polynomials, the
// claimed pivot per row, and the claimed rank; replaying re-runs the exact
// elimination from the serialized polynomials and compares every claim.

namespace detail {

inline std::string monomial_text(Subset m) {
    if (m == 0) return "-";
    std::string out;
    for (unsigned e : setfamily::elements(m)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

inline Subset parse_monomial(const std::string& text, unsigned n, unsigned line_no) {
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r'))
        trimmed.pop_back();
    if (trimmed == "-") return 0;
    std::istringstream in(trimmed);
    Subset m = 0;
    unsigned long long e;
    while (in >> e) {
        if (e < 1 || e > n)
            throw std::runtime_error("certificate line " + std::to_string(line_no) +
                                     ": element out of range");
        m |= Subset{1} << (e - 1);
    }
    if (!in.eof())
        throw std::runtime_error("certificate line " + std::to_string(line_no) +
                                 ": malformed monomial");
    return m;
}

}  // namespace detail

inline void write_certificate(const CertificateReport& rep, std::ostream& out) {
    out << "independence-certificate n=" << rep.n << " s=" << rep.s << " m=" << rep.m
        << " q=" << rep.q_count << '\n';
    for (std::size_t i = 0; i < rep.polys.size(); ++i) {
        out << "poly " << (i + 1) << " of " << rep.polys.size() << '\n';
        rep.polys[i].write(out);
        out << "end\n";
    }
    for (std::size_t i = 0; i < rep.pivots.size(); ++i) {
        out << "pivot " << (i + 1) << " : ";
        if (rep.pivots[i])
            out << detail::monomial_text(*rep.pivots[i]);
        else
            out << "dependent";
        out << '\n';
    }
    out << "rank " << rep.rank << '\n';
    out << "ambient " << rep.ambient << '\n';
    out << "family-bound " << rep.family_bound << '\n';
    out << "verdict " << (rep.rank == rep.m + rep.q_count ? "independent" : "dependent")
        << '\n';
}

struct ReplayResult {
    bool ok = false;
    std::string detail;  // first mismatch or parse problem, empty when ok
};

// Re-run the elimination from the serialized polynomials and compare the
// certificate's pivot, rank, dimension, and verdict claims against the
// recomputed values. Parse problems throw; claim mismatches come back in the
// result so the caller can surface which line lied.
inline ReplayResult replay_certificate(std::istream& in) {
    unsigned line_no = 0;
    std::string line;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };
    auto fail_parse = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error("certificate line " + std::to_string(line_no) + ": " + why);
    };

    if (!next_line()) throw std::runtime_error("certificate is empty");
    unsigned n = 0, s = 0, m = 0, q = 0;
    {
        std::istringstream hdr(line);
        std::string tag;
        hdr >> tag;
        if (tag != "independence-certificate") throw fail_parse("missing header");
        std::string kv;
        while (hdr >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw fail_parse("malformed header field");
            std::string key = kv.substr(0, eq);
            unsigned value = 0;
            try {
                value = static_cast<unsigned>(std::stoul(kv.substr(eq + 1)));
            } catch (const std::exception&) {
                throw fail_parse("malformed header value");
            }
            if (key == "n") n = value;
            else if (key == "s") s = value;
            else if (key == "m") m = value;
            else if (key == "q") q = value;
            else throw fail_parse("unknown header field " + key);
        }
    }
    if (n == 0 || n > 64) throw fail_parse("header needs n in 1..64");
    if (s == 0) throw fail_parse("header needs s >= 1");

    std::vector<MultilinearPoly> polys;
    std::vector<std::optional<Subset>> claimed_pivots;
    std::optional<unsigned> claimed_rank;
    std::optional<Natural> claimed_ambient, claimed_family_bound;
    std::optional<std::string> claimed_verdict;

    while (next_line()) {
        if (setfamily::SubsetFamily::is_blank(line)) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "poly") {
            MultilinearPoly p(n);
            while (true) {
                if (!next_line()) throw fail_parse("unterminated poly block");
                if (line == "end") break;
                auto colon = line.find(" : ");
                if (colon == std::string::npos) throw fail_parse("expected 'coef : monomial'");
                Rational coef;
                try {
                    coef = Rational(line.substr(0, colon));
                } catch (const std::exception&) {
                    throw fail_parse("malformed coefficient");
                }
                p.add_term(detail::parse_monomial(line.substr(colon + 3), n, line_no), coef);
            }
            polys.push_back(std::move(p));
        } else if (word == "pivot") {
            unsigned idx;
            std::string colon;
            if (!(ls >> idx >> colon) || colon != ":") throw fail_parse("malformed pivot line");
            if (idx != claimed_pivots.size() + 1) throw fail_parse("pivot rows out of order");
            std::string rest;
            std::getline(ls, rest);
            while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            if (rest == "dependent")
                claimed_pivots.push_back(std::nullopt);
            else
                claimed_pivots.push_back(detail::parse_monomial(rest, n, line_no));
        } else if (word == "rank") {
            unsigned r;
            if (!(ls >> r)) throw fail_parse("malformed rank line");
            claimed_rank = r;
        } else if (word == "ambient") {
            std::string v;
            if (!(ls >> v)) throw fail_parse("malformed ambient line");
            claimed_ambient = Natural(v);
        } else if (word == "family-bound") {
            std::string v;
            if (!(ls >> v)) throw fail_parse("malformed family-bound line");
            claimed_family_bound = Natural(v);
        } else if (word == "verdict") {
            std::string v;
            if (!(ls >> v)) throw fail_parse("malformed verdict line");
            claimed_verdict = v;
        } else {
            throw fail_parse("unknown directive " + word);
        }
    }

    ReplayResult out;
    if (polys.size() != std::size_t(m) + q) {
        out.detail = "certificate lists " + std::to_string(polys.size()) +
                     " polynomials but the header promises " + std::to_string(m + q);
        return out;
    }
    if (!claimed_rank || !claimed_verdict || !claimed_ambient || !claimed_family_bound) {
        out.detail = "certificate is missing a rank, ambient, family-bound, or verdict line";
        return out;
    }

    EliminationResult elim = eliminate(polys);
    if (claimed_pivots.size() != elim.pivots.size()) {
        out.detail = "certificate has " + std::to_string(claimed_pivots.size()) +
                     " pivot lines for " + std::to_string(elim.pivots.size()) + " rows";
        return out;
    }
    for (std::size_t i = 0; i < elim.pivots.size(); ++i)
        if (claimed_pivots[i] != elim.pivots[i]) {
            out.detail = "pivot claim for row " + std::to_string(i + 1) +
                         " does not match the recomputed elimination";
            return out;
        }
    if (*claimed_rank != elim.rank) {
        out.detail = "rank claim " + std::to_string(*claimed_rank) +
                     " does not match recomputed rank " + std::to_string(elim.rank);
        return out;
    }
    if (*claimed_ambient != exactnum::binom_sum(n, 0, s)) {
        out.detail = "ambient dimension claim does not match sum_{i<=s} C(n,i)";
        return out;
    }
    if (*claimed_family_bound != exactnum::binom_sum(n - 1, 0, s)) {
        out.detail = "family-bound claim does not match sum_{i<=s} C(n-1,i)";
        return out;
    }
    std::string expect_verdict = (elim.rank == polys.size()) ? "independent" : "dependent";
    if (*claimed_verdict != expect_verdict) {
        out.detail = "verdict claim '" + *claimed_verdict + "' does not match recomputed '" +
                     expect_verdict + "'";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace lifam::polymethod
