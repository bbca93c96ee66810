#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace macjack {

// Compositions and partitions are standardized to carry explicit trailing
// zeros to length N; display elides them.
using Composition = std::vector<int>;

struct Partition {
    std::vector<int> parts;  // weakly decreasing, may include zeros

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw InvalidParams("partition parts must be weakly decreasing");
        for (int x : parts)
            if (x < 0) throw InvalidParams("partition parts must be nonnegative");
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const {  // number of nonzero parts
        int l = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i] > 0) l = static_cast<int>(i) + 1;
        return l;
    }
    int num_entries() const { return static_cast<int>(parts.size()); }
    int part(int i) const {  // 1-based, zero beyond the stored length
        return (i >= 1 && i <= num_entries()) ? parts[static_cast<size_t>(i - 1)] : 0;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= (parts.empty() ? 0 : parts[0]); ++j) {
            int cnt = 0;
            for (int p : parts)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    Partition padded(int n) const {
        std::vector<int> p = parts;
        while (static_cast<int>(p.size()) < n) p.push_back(0);
        return Partition(std::move(p));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        int n = std::max(a.num_entries(), b.num_entries());
        for (int i = 1; i <= n; ++i)
            if (a.part(i) != b.part(i)) return false;
        return true;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {  // container ordering only
        int n = std::max(a.num_entries(), b.num_entries());
        for (int i = 1; i <= n; ++i)
            if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
        return false;
    }
};

inline Partition sorted_desc(const Composition& alpha) {
    std::vector<int> p = alpha;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

inline int comp_size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

// Dominance on equal-size sequences: all partial sums of a >= those of b.
inline bool dominates_weak(const std::vector<int>& a, const std::vector<int>& b) {
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

// The order "alpha rhd beta": |alpha| = |beta| and either alpha+ strictly
// dominates beta+, or the rearrangements agree and alpha strictly dominates
// beta entrywise as compositions.
inline bool comp_rhd(const Composition& a, const Composition& b) {
    if (comp_size(a) != comp_size(b) || a == b) return false;
    auto ap = sorted_desc(a).parts, bp = sorted_desc(b).parts;
    if (ap != bp) return dominates_weak(ap, bp);
    return dominates_weak(a, b);
}

// Total refinement of rhd: compare partial-sum vectors of the sorted parts
// lexicographically, then partial sums of the compositions, then identity.
// Returns <0, 0, >0 with "larger" meaning rhd-higher.
inline int comp_cmp_total(const Composition& a, const Composition& b) {
    int sa = comp_size(a), sb = comp_size(b);
    if (sa != sb) return sa < sb ? -1 : 1;  // higher degree ranks higher
    auto ap = sorted_desc(a).parts, bp = sorted_desc(b).parts;
    size_t n = std::max(ap.size(), bp.size());
    long pa = 0, pb = 0;
    for (size_t i = 0; i < n; ++i) {
        pa += i < ap.size() ? ap[i] : 0;
        pb += i < bp.size() ? bp[i] : 0;
        if (pa != pb) return pa < pb ? -1 : 1;
    }
    pa = pb = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa != pb) return pa < pb ? -1 : 1;
    }
    return 0;
}

// Rank function r(alpha, i), 1-based i.
inline int rank(const Composition& alpha, int i) {
    if (i < 1 || i > static_cast<int>(alpha.size())) throw InvalidParams("rank: index out of range");
    int ai = alpha[static_cast<size_t>(i - 1)];
    int r = 0;
    for (int j = 0; j < static_cast<int>(alpha.size()); ++j) {
        if (alpha[static_cast<size_t>(j)] > ai) ++r;
        if (j < i && alpha[static_cast<size_t>(j)] == ai) ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Tableaux.  French convention: row 1 is the bottom row, boxes at (row, col)
// for 1 <= row <= l(tau), 1 <= col <= tau_row.  RSYT entries are {1..N},
// strictly decreasing along rows and up columns.
// ---------------------------------------------------------------------------

enum class TabKind { RSYT, RST, Filling };

struct Tableau {
    Partition shape;
    int N = 0;
    std::vector<int> row_, col_;  // entry i (1-based) sits at (row_[i-1], col_[i-1])

    Tableau() = default;
    Tableau(Partition sh, std::vector<int> rows, std::vector<int> cols)
        : shape(std::move(sh)), N(static_cast<int>(rows.size())), row_(std::move(rows)), col_(std::move(cols)) {}

    int row_of(int i) const { return row_[static_cast<size_t>(i - 1)]; }
    int col_of(int i) const { return col_[static_cast<size_t>(i - 1)]; }
    int content(int i) const { return col_of(i) - row_of(i); }

    std::vector<int> content_vector() const {
        std::vector<int> c(static_cast<size_t>(N));
        for (int i = 1; i <= N; ++i) c[static_cast<size_t>(i - 1)] = content(i);
        return c;
    }

    int entry_at(int r, int c) const {
        for (int i = 1; i <= N; ++i)
            if (row_of(i) == r && col_of(i) == c) return i;
        throw InvalidParams("no entry at (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }

    // Tableau with entries i and i+1 exchanged (the S^{(i)} of the action formulas).
    Tableau exchanged(int i) const {
        Tableau t = *this;
        std::swap(t.row_[static_cast<size_t>(i - 1)], t.row_[static_cast<size_t>(i)]);
        std::swap(t.col_[static_cast<size_t>(i - 1)], t.col_[static_cast<size_t>(i)]);
        return t;
    }

    bool is_rst() const {  // strictly decreasing along rows
        for (int r = 1; r <= shape.num_entries(); ++r) {
            for (int c = 1; c < shape.part(r); ++c)
                if (entry_at(r, c) <= entry_at(r, c + 1)) return false;
        }
        return true;
    }
    bool is_rsyt() const {  // also strictly decreasing up the columns
        if (!is_rst()) return false;
        Partition conj = shape.conjugate();
        for (int c = 1; c <= conj.num_entries(); ++c)
            for (int r = 1; r < conj.part(c); ++r)
                if (entry_at(r, c) <= entry_at(r + 1, c)) return false;
        return true;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.row_ == b.row_ && a.col_ == b.col_;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        return std::make_pair(a.row_, a.col_) < std::make_pair(b.row_, b.col_);
    }
};

// inv-maximal element: N, N-1, ..., 1 entered column by column.
inline Tableau tableau_s0(const Partition& tau) {
    int N = tau.size();
    std::vector<int> rows(static_cast<size_t>(N)), cols(static_cast<size_t>(N));
    Partition conj = tau.conjugate();
    int next = N;
    for (int c = 1; c <= conj.num_entries(); ++c) {
        for (int r = 1; r <= conj.part(c); ++r) {
            rows[static_cast<size_t>(next - 1)] = r;
            cols[static_cast<size_t>(next - 1)] = c;
            --next;
        }
    }
    return Tableau(tau, std::move(rows), std::move(cols));
}

// inv-minimal element: N, N-1, ..., 1 entered row by row.
inline Tableau tableau_s1(const Partition& tau) {
    int N = tau.size();
    std::vector<int> rows(static_cast<size_t>(N)), cols(static_cast<size_t>(N));
    int next = N;
    for (int r = 1; r <= tau.num_entries(); ++r) {
        for (int c = 1; c <= tau.part(r); ++c) {
            rows[static_cast<size_t>(next - 1)] = r;
            cols[static_cast<size_t>(next - 1)] = c;
            --next;
        }
    }
    return Tableau(tau, std::move(rows), std::move(cols));
}

// An RSYT is uniquely determined by its content vector.
inline Tableau rsyt_from_content(const Partition& tau, const std::vector<int>& contents) {
    int N = tau.size();
    if (static_cast<int>(contents.size()) != N) throw InvalidParams("content vector length mismatch");
    std::vector<int> rows(static_cast<size_t>(N), 0), cols(static_cast<size_t>(N), 0);
    std::vector<std::vector<bool>> used(static_cast<size_t>(tau.num_entries()) + 2);
    for (int r = 1; r <= tau.num_entries(); ++r)
        used[static_cast<size_t>(r)] = std::vector<bool>(static_cast<size_t>(tau.part(r)) + 1, false);
    for (int i = 1; i <= N; ++i) {
        int c = contents[static_cast<size_t>(i - 1)];
        bool placed = false;
        for (int r = 1; r <= tau.num_entries() && !placed; ++r) {
            int col = c + r;
            if (col >= 1 && col <= tau.part(r) && !used[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                rows[static_cast<size_t>(i - 1)] = r;
                cols[static_cast<size_t>(i - 1)] = col;
                used[static_cast<size_t>(r)][static_cast<size_t>(col)] = true;
                placed = true;
            }
        }
        if (!placed) throw InvalidParams("content vector does not match shape");
    }
    Tableau t(tau, std::move(rows), std::move(cols));
    if (!t.is_rsyt()) throw InvalidParams("content vector does not describe an RSYT");
    return t;
}

inline std::vector<Tableau> enumerate_rsyt(const Partition& tau) {
    // entry 1 always occupies a removable corner; peel corners as entries
    // increase, so entry N ends at (1,1)
    int N = tau.size();
    std::vector<Tableau> out;
    std::vector<int> rows(static_cast<size_t>(N)), cols(static_cast<size_t>(N));
    std::vector<int> sh = tau.parts;
    std::function<void(int)> rec = [&](int entry) {
        if (entry > N) {
            out.emplace_back(tau, rows, cols);
            return;
        }
        for (int r = 1; r <= static_cast<int>(sh.size()); ++r) {
            int len = sh[static_cast<size_t>(r - 1)];
            if (len == 0) continue;
            bool corner = (r == static_cast<int>(sh.size())) || (sh[static_cast<size_t>(r)] < len);
            if (!corner) continue;
            rows[static_cast<size_t>(entry - 1)] = r;
            cols[static_cast<size_t>(entry - 1)] = len;
            sh[static_cast<size_t>(r - 1)]--;
            rec(entry + 1);
            sh[static_cast<size_t>(r - 1)]++;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Tableau> enumerate_rst(const Partition& tau) {
    // choose the set of entries per row; each row is then sorted descending
    int N = tau.size();
    int l = tau.num_entries();
    std::vector<Tableau> out;
    std::vector<int> rows(static_cast<size_t>(N), 0), cols(static_cast<size_t>(N), 0);
    std::function<void(int, std::vector<int>&)> rec = [&](int r, std::vector<int>& remaining) {
        if (r > l) {
            out.emplace_back(tau, rows, cols);
            return;
        }
        int need = tau.part(r);
        if (need == 0) {
            rec(r + 1, remaining);
            return;
        }
        std::vector<int> mask(remaining.size(), 0);
        std::fill(mask.end() - need, mask.end(), 1);
        std::sort(mask.begin(), mask.end());
        do {
            std::vector<int> chosen, rest;
            for (size_t i = 0; i < remaining.size(); ++i)
                (mask[i] ? chosen : rest).push_back(remaining[i]);
            std::sort(chosen.begin(), chosen.end(), std::greater<int>());
            for (int c = 1; c <= need; ++c) {
                int e = chosen[static_cast<size_t>(c - 1)];
                rows[static_cast<size_t>(e - 1)] = r;
                cols[static_cast<size_t>(e - 1)] = c;
            }
            rec(r + 1, rest);
        } while (std::next_permutation(mask.begin(), mask.end()));
    };
    std::vector<int> all(static_cast<size_t>(N));
    std::iota(all.begin(), all.end(), 1);
    rec(1, all);
    std::sort(out.begin(), out.end());
    return out;
}

enum class InvKind { Inv, Inv0 };

inline int inversions(const Tableau& S, InvKind kind) {
    int count = 0;
    for (int i = 1; i <= S.N; ++i)
        for (int j = i + 1; j <= S.N; ++j) {
            if (kind == InvKind::Inv) {
                if (S.content(i) >= S.content(j) + 2) ++count;
            } else {
                if (S.row_of(i) < S.row_of(j)) ++count;
            }
        }
    return count;
}

// Reverse lattice permutation alpha(S): alpha_i = v(row of i) with v(1) = 0
// and v(j) = m + (j-2) m0 for j >= 2.
inline Composition reverse_lattice_permutation(const Tableau& S, int m, int m0) {
    if (m0 != 0 && m % m0 != 0) throw InvalidParams("m0 must divide m");
    Composition alpha(static_cast<size_t>(S.N), 0);
    for (int i = 1; i <= S.N; ++i) {
        int r = S.row_of(i);
        alpha[static_cast<size_t>(i - 1)] = (r == 1) ? 0 : m + (r - 2) * m0;
    }
    return alpha;
}

// ---------------------------------------------------------------------------
// Quasistaircase partitions
// ---------------------------------------------------------------------------

struct QuasistaircaseParams {
    int m, n, p, K, s, nu;
};

// qs(m,n,p,K,s,nu) = [((K-1)m+p)^nu, ((K-2)m+p)^n, ..., p^n, 0^s]
inline Partition quasistaircase(const QuasistaircaseParams& qp) {
    if (qp.K < 1) throw InvalidParams("quasistaircase: K >= 1 required");
    if (qp.nu < 1 || qp.nu > qp.n) throw InvalidParams("quasistaircase: 1 <= nu <= n required");
    if (qp.m < 0 || qp.p < 0 || qp.s < 0) throw InvalidParams("quasistaircase: negative parameter");
    std::vector<int> parts;
    for (int c = 0; c < qp.nu; ++c) parts.push_back((qp.K - 1) * qp.m + qp.p);
    for (int step = qp.K - 2; step >= 0; --step)
        for (int c = 0; c < qp.n; ++c) parts.push_back(step * qp.m + qp.p);
    for (int c = 0; c < qp.s; ++c) parts.push_back(0);
    return Partition(std::move(parts));
}

// The (N, m, n) description of Section 5.2 with all derived data.
struct QSFamily {
    int N, m, n;
    int d, m0, n0, l, tau_l;
    Rat kappa0;

    QSFamily(int N_, int m_, int n_) : N(N_), m(m_), n(n_) {
        if (n < 2 || n > N) throw InvalidParams("quasistaircase family: 2 <= n <= N required");
        if (m <= 0) throw InvalidParams("quasistaircase family: m >= 1 required");
        if (m % n == 0) throw InvalidParams("quasistaircase family: m/n must not be an integer");
        d = std::gcd(m, n);
        m0 = m / d;
        n0 = n / d;
        kappa0 = Rat(-m, n);
        kappa0.canonicalize();
        if (n0 < 2) throw InvalidParams("quasistaircase family: n0 >= 2 required");
        l = (N - n + 1 + (n0 - 1) - 1) / (n0 - 1) + 1;  // ceil((N-n+1)/(n0-1)) + 1
        tau_l = N - (n - 1) - (l - 2) * (n0 - 1);
        if (tau_l < 1 || tau_l > n0 - 1)
            throw InvalidParams("quasistaircase family: tau_l out of range for N=" + std::to_string(N) +
                                ", m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }

    Partition tau() const {
        std::vector<int> p{n - 1};
        for (int i = 0; i < l - 2; ++i) p.push_back(n0 - 1);
        p.push_back(tau_l);
        return Partition(std::move(p));
    }

    Partition mu() const { return quasistaircase({m0, n0 - 1, m, l - 1, n - 1, tau_l}).padded(N); }

    // minimal column-strict type lambda = ((l-1)^{tau_l}, ..., 1^{tau_2}, 0^{tau_1})
    Partition lambda_min() const {
        Partition t = tau();
        std::vector<int> p;
        for (int r = t.num_entries(); r >= 1; --r)
            for (int c = 0; c < t.part(r); ++c) p.push_back(r - 1);
        return Partition(std::move(p));
    }
};

// lambda_min for an arbitrary shape (row i of tau filled with i-1).
inline Partition minimal_type(const Partition& tau) {
    std::vector<int> p;
    for (int r = tau.num_entries(); r >= 1; --r)
        for (int c = 0; c < tau.part(r); ++c) p.push_back(r - 1);
    return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// Floors |_alpha, S_| and the column-strict test
// ---------------------------------------------------------------------------

// Grid indexed [row-1][col-1] holding alpha^+_i in the cell of entry i.
inline std::vector<std::vector<int>> fill_floor(const Composition& alpha, const Tableau& S) {
    if (static_cast<int>(alpha.size()) != S.N)
        throw InvalidParams("fill_floor: |alpha| support incompatible with N");
    Partition ap = sorted_desc(alpha);
    std::vector<std::vector<int>> grid(static_cast<size_t>(S.shape.num_entries()));
    for (int r = 1; r <= S.shape.num_entries(); ++r)
        grid[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(S.shape.part(r)), 0);
    for (int i = 1; i <= S.N; ++i)
        grid[static_cast<size_t>(S.row_of(i) - 1)][static_cast<size_t>(S.col_of(i) - 1)] = ap.part(i);
    return grid;
}

// Entries increase strictly up each column and are nondecreasing along rows.
inline bool column_strict(const std::vector<std::vector<int>>& grid) {
    for (size_t r = 0; r < grid.size(); ++r) {
        for (size_t c = 0; c + 1 < grid[r].size(); ++c)
            if (grid[r][c] > grid[r][c + 1]) return false;
        if (r + 1 < grid.size())
            for (size_t c = 0; c < grid[r + 1].size() && c < grid[r].size(); ++c)
                if (grid[r + 1][c] <= grid[r][c]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

inline std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    size_t i = 0;
    int len = static_cast<int>(p.parts.size());
    while (i < p.parts.size()) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        if (!first) os << ",";
        first = false;
        os << p.parts[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    (void)len;
    os << "]";
    return os.str();
}

inline std::string composition_to_string(const Composition& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

inline Composition parse_composition(const std::string& text) {
    Composition out;
    std::string body = text;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (piece.empty()) continue;
        out.push_back(std::stoi(piece));
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string body = text;
    if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (piece.empty()) continue;
        size_t caret = piece.find('^');
        int value = std::stoi(piece.substr(0, caret));
        int mult = caret == std::string::npos ? 1 : std::stoi(piece.substr(caret + 1));
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

// Rows printed top row first, bottom row last (French notation on screen).
inline std::string tableau_to_string(const Tableau& S) {
    std::ostringstream os;
    for (int r = S.shape.num_entries(); r >= 1; --r) {
        if (S.shape.part(r) == 0) continue;
        for (int c = 1; c <= S.shape.part(r); ++c) {
            if (c > 1) os << " ";
            os << S.entry_at(r, c);
        }
        if (r > 1) os << "\n";
    }
    return os.str();
}

// A shape's enumerated tableaux plus index lookups; the canonical key of an
// RSYT is its content vector.
struct ShapeCtx {
    Partition tau;
    std::vector<Tableau> tabs;
    std::map<std::vector<int>, int> index_by_content;

    explicit ShapeCtx(const Partition& shape) : tau(shape), tabs(enumerate_rsyt(shape)) {
        for (size_t i = 0; i < tabs.size(); ++i)
            index_by_content[tabs[i].content_vector()] = static_cast<int>(i);
    }

    int size() const { return static_cast<int>(tabs.size()); }
    const Tableau& tab(int i) const { return tabs[static_cast<size_t>(i)]; }
    int index_of(const Tableau& S) const {
        auto it = index_by_content.find(S.content_vector());
        if (it == index_by_content.end()) throw InvalidParams("tableau not of this shape");
        return it->second;
    }
    int s0_index() const { return index_of(tableau_s0(tau)); }
    int s1_index() const { return index_of(tableau_s1(tau)); }
};

// Stable per-shape context registry: tableaux are enumerated once per shape
// and every module refers to the same ShapeCtx instance.
inline const ShapeCtx& shape_ctx(const Partition& tau) {
    static std::mutex mu;
    static std::map<std::vector<int>, ShapeCtx*> registry;
    std::vector<int> key = tau.parts;
    while (!key.empty() && key.back() == 0) key.pop_back();
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, new ShapeCtx(tau)).first;
    return *it->second;
}

inline std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// All distinct compositions with N entries whose sorted form equals lambda.
inline std::vector<Composition> rearrangements(const Partition& lambda, int N) {
    std::vector<int> base = lambda.padded(N).parts;
    std::sort(base.begin(), base.end());
    std::vector<Composition> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace macjack
