#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "combin.hpp"
#include "param_rat.hpp"

namespace macjack {

// Ring context: main variables x1..x_nx plus auxiliary y1..y_ny, z1..z_nz.
// The auxiliary variables only appear through special-point substitutions.
struct XRing {
    int nx = 0;
    int ny = 0;
    int nz = 0;

    int nvars() const { return nx + ny + nz; }
    int xi(int i) const { return i - 1; }            // 1-based x_i -> slot
    int yi(int j) const { return nx + j - 1; }       // 1-based y_j -> slot
    int zi(int j) const { return nx + ny + j - 1; }  // 1-based z_j -> slot

    std::string var_name(int slot) const {
        if (slot < nx) return "x" + std::to_string(slot + 1);
        if (slot < nx + ny) return "y" + std::to_string(slot - nx + 1);
        return "z" + std::to_string(slot - nx - ny + 1);
    }

    friend bool operator==(const XRing& a, const XRing& b) {
        return a.nx == b.nx && a.ny == b.ny && a.nz == b.nz;
    }
    friend bool operator!=(const XRing& a, const XRing& b) { return !(a == b); }
};

using Mono = std::vector<int>;

// Sparse multivariate polynomial over ParamRat.  Invariant: no stored zero
// coefficients; all monomials have ring.nvars() slots.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(XRing ring) : ring_(ring) {}
    XPoly(XRing ring, const ParamRat& c) : ring_(ring) {
        if (!c.is_zero()) terms_[Mono(static_cast<size_t>(ring.nvars()), 0)] = c;
    }

    static XPoly monomial(const XRing& ring, const Mono& m, const ParamRat& c) {
        XPoly p(ring);
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }
    static XPoly var(const XRing& ring, int slot, int e = 1) {
        Mono m(static_cast<size_t>(ring.nvars()), 0);
        m[static_cast<size_t>(slot)] = e;
        return monomial(ring, m, ParamRat(1));
    }
    static XPoly x(const XRing& ring, int i, int e = 1) { return var(ring, ring.xi(i), e); }
    static XPoly y(const XRing& ring, int j, int e = 1) { return var(ring, ring.yi(j), e); }
    static XPoly z(const XRing& ring, int j, int e = 1) { return var(ring, ring.zi(j), e); }

    // x^alpha for a composition with nx entries
    static XPoly x_monomial(const XRing& ring, const Composition& alpha, const ParamRat& c = ParamRat(1)) {
        Mono m(static_cast<size_t>(ring.nvars()), 0);
        for (size_t i = 0; i < alpha.size(); ++i) m[i] = alpha[i];
        return monomial(ring, m, c);
    }

    const XRing& ring() const { return ring_; }
    const std::map<Mono, ParamRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    ParamRat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ParamRat() : it->second;
    }
    ParamRat coeff_x(const Composition& alpha) const {
        Mono m(static_cast<size_t>(ring_.nvars()), 0);
        for (size_t i = 0; i < alpha.size(); ++i) m[i] = alpha[i];
        return coeff(m);
    }

    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
        return d;
    }
    int x_degree(const Mono& m) const {
        return std::accumulate(m.begin(), m.begin() + ring_.nx, 0);
    }
    bool is_homogeneous_x() const {
        int d = -1;
        for (auto& [m, c] : terms_) {
            int dm = x_degree(m);
            if (d < 0) d = dm;
            if (dm != d) return false;
        }
        return true;
    }

    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        a.check_ring(b);
        XPoly out = a.terms_.size() >= b.terms_.size() ? a : b;
        const XPoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
        out.ring_ = a.ring_.nvars() ? a.ring_ : b.ring_;
        for (auto& [m, c] : small.terms_) out.add_term(m, c);
        return out;
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) {
        a.check_ring(b);
        XPoly out = a;
        out.ring_ = a.ring_.nvars() ? a.ring_ : b.ring_;
        for (auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }
    XPoly operator-() const {
        XPoly out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        a.check_ring(b);
        XPoly out(a.ring_.nvars() ? a.ring_ : b.ring_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Mono m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }
    XPoly scaled(const ParamRat& c) const {
        XPoly out(ring_);
        if (c.is_zero()) return out;
        for (auto& [m, k] : terms_) {
            ParamRat v = k * c;
            if (!v.is_zero()) out.terms_[m] = v;
        }
        return out;
    }

    friend bool operator==(const XPoly& a, const XPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    void add_term(const Mono& m, const ParamRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // --- variable permutations -------------------------------------------

    XPoly swap_x(int i, int j) const {  // right action of the transposition s_{ij}
        XPoly out(ring_);
        int si = ring_.xi(i), sj = ring_.xi(j);
        for (auto& [m, c] : terms_) {
            Mono mm = m;
            std::swap(mm[static_cast<size_t>(si)], mm[static_cast<size_t>(sj)]);
            out.add_term(mm, c);
        }
        return out;
    }

    // p(x sigma): variable in slot i receives the exponent of slot perm[i]
    // where perm is a permutation of {1..nx}; equivalently x_i -> x_{perm(i)}.
    XPoly permute_x(const std::vector<int>& perm) const {
        XPoly out(ring_);
        for (auto& [m, c] : terms_) {
            Mono mm = m;
            for (int i = 1; i <= ring_.nx; ++i)
                mm[static_cast<size_t>(perm[static_cast<size_t>(i - 1)] - 1)] = m[static_cast<size_t>(i - 1)];
            out.add_term(mm, c);
        }
        return out;
    }

    XPoly derivative_x(int i) const {
        XPoly out(ring_);
        int slot = ring_.xi(i);
        for (auto& [m, c] : terms_) {
            int e = m[static_cast<size_t>(slot)];
            if (e == 0) continue;
            Mono mm = m;
            mm[static_cast<size_t>(slot)] = e - 1;
            out.add_term(mm, c * ParamRat(Rat(e)));
        }
        return out;
    }

    // --- substitution (x variables only; y/z pass through) ----------------

    XPoly substitute_x(const std::vector<XPoly>& point) const {
        if (static_cast<int>(point.size()) != ring_.nx)
            throw InvalidParams("substitute: point length must equal the number of x variables");
        XPoly out(ring_);
        std::vector<std::vector<XPoly>> powers(point.size());  // powers[i][e] = point_i^e
        for (size_t i = 0; i < point.size(); ++i) powers[i].push_back(XPoly(ring_, ParamRat(1)));
        for (auto& [m, c] : terms_) {
            // aux variables keep their exponents
            Mono aux(static_cast<size_t>(ring_.nvars()), 0);
            for (int s = ring_.nx; s < ring_.nvars(); ++s) aux[static_cast<size_t>(s)] = m[static_cast<size_t>(s)];
            XPoly term = XPoly::monomial(ring_, aux, c);
            for (int i = 0; i < ring_.nx; ++i) {
                int e = m[static_cast<size_t>(i)];
                if (e == 0) continue;
                auto& pw = powers[static_cast<size_t>(i)];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[static_cast<size_t>(i)]);
                term = term * pw[static_cast<size_t>(e)];
            }
            out = out + term;
        }
        return out;
    }

    // --- exact division ----------------------------------------------------

    XPoly exact_divide(const XPoly& q) const {
        check_ring(q);
        if (q.is_zero()) throw DivisionByZero("exact_divide by zero polynomial");
        XPoly rem = *this, quot(ring_);
        auto qlead = q.terms_.rbegin();  // largest monomial under lex
        ParamRat qlc_inv = qlead->second.inverse();
        while (!rem.is_zero()) {
            auto rlead = rem.terms_.rbegin();
            Mono diff(rlead->first.size());
            bool divisible = true;
            for (size_t i = 0; i < diff.size(); ++i) {
                diff[i] = rlead->first[i] - qlead->first[i];
                if (diff[i] < 0) {
                    divisible = false;
                    break;
                }
            }
            if (!divisible)
                throw NotDivisible("exact_divide: remainder is nonzero");
            ParamRat c = rlead->second * qlc_inv;
            quot.add_term(diff, c);
            XPoly sub = q.mul_monomial(diff, c);
            rem = rem - sub;
        }
        return quot;
    }

    XPoly mul_monomial(const Mono& m, const ParamRat& c) const {
        XPoly out(ring_);
        if (c.is_zero()) return out;
        for (auto& [mm, cc] : terms_) {
            Mono prod = mm;
            for (size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
            ParamRat v = cc * c;
            if (!v.is_zero()) out.terms_[prod] = v;
        }
        return out;
    }

    // divided difference (p - p s_{ij}) / (x_i - x_j) as a right operator
    XPoly divided_difference(int i, int j) const {
        if (i == j) throw InvalidParams("divided_difference: indices must differ");
        XPoly num = *this - swap_x(i, j);
        if (num.is_zero()) return XPoly(ring_);
        XPoly den = XPoly::x(ring_, i) - XPoly::x(ring_, j);
        return num.exact_divide(den);  // antisymmetry guarantees exactness
    }

    // --- leading term under the rhd-refined total order --------------------

    std::pair<Composition, ParamRat> leading_term_x() const {
        if (is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
        const Mono* best = nullptr;
        Composition best_x;
        for (auto& [m, c] : terms_) {
            Composition mx(m.begin(), m.begin() + ring_.nx);
            if (!best || comp_cmp_total(mx, best_x) > 0) {
                best = &m;
                best_x = mx;
            }
        }
        return {best_x, terms_.at(*best)};
    }

    // --- specialization -----------------------------------------------------

    XPoly specialize(const SpecMap& m) const {
        XPoly out(ring_);
        for (auto& [mono, c] : terms_) {
            ParamRat v;
            try {
                v = m.apply(c);
            } catch (const PoleAtSpecialization& e) {
                std::ostringstream os;
                os << e.what() << " (coefficient of ";
                bool any = false;
                for (size_t s = 0; s < mono.size(); ++s)
                    if (mono[s]) {
                        if (any) os << "*";
                        os << ring_.var_name(static_cast<int>(s)) << "^" << mono[s];
                        any = true;
                    }
                if (!any) os << "1";
                os << ")";
                throw PoleAtSpecialization(os.str());
            }
            out.add_term(mono, v);
        }
        return out;
    }

    // --- text / JSON forms --------------------------------------------------

    std::string to_text() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest monomial first for readability
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            std::string cs = it->second.to_string();
            bool needs_parens = cs.find_first_of("+-/ ") != std::string::npos;
            bool has_vars = std::any_of(it->first.begin(), it->first.end(), [](int e) { return e != 0; });
            bool unit_coeff = cs == "1" && has_vars;
            if (!unit_coeff) os << (needs_parens ? "(" + cs + ")" : cs);
            bool first_var = unit_coeff;
            for (size_t s = 0; s < it->first.size(); ++s) {
                int e = it->first[s];
                if (e == 0) continue;
                if (!first_var)
                    os << "*";
                first_var = false;
                os << ring_.var_name(static_cast<int>(s));
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    static XPoly parse_text(const XRing& ring, const std::string& text, int conductor = 1) {
        XPoly out(ring);
        if (text == "0") return out;
        // split into terms on " + " at paren depth 0
        std::vector<std::string> term_texts;
        {
            int depth = 0;
            size_t start = 0;
            for (size_t i = 0; i < text.size(); ++i) {
                if (text[i] == '(') ++depth;
                if (text[i] == ')') --depth;
                if (depth == 0 && text.compare(i, 3, " + ") == 0) {
                    term_texts.push_back(text.substr(start, i - start));
                    i += 2;
                    start = i + 1;
                }
            }
            term_texts.push_back(text.substr(start));
        }
        for (auto& tt : term_texts) {
            // split the term on '*' at depth 0
            std::vector<std::string> pieces;
            int depth = 0;
            size_t start = 0;
            for (size_t i = 0; i < tt.size(); ++i) {
                if (tt[i] == '(') ++depth;
                if (tt[i] == ')') --depth;
                if (depth == 0 && tt[i] == '*') {
                    pieces.push_back(tt.substr(start, i - start));
                    start = i + 1;
                }
            }
            pieces.push_back(tt.substr(start));
            Mono m(static_cast<size_t>(ring.nvars()), 0);
            std::string coeff_text;
            for (auto& piece : pieces) {
                // main variables look like x3, y1, z2, optionally ^e
                bool is_var = piece.size() >= 2 && (piece[0] == 'x' || piece[0] == 'y' || piece[0] == 'z') &&
                              std::isdigit(static_cast<unsigned char>(piece[1]));
                if (is_var) {
                    size_t caret = piece.find('^');
                    int idx = std::stoi(piece.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                    int e = caret == std::string::npos ? 1 : std::stoi(piece.substr(caret + 1));
                    int slot = piece[0] == 'x' ? ring.xi(idx) : piece[0] == 'y' ? ring.yi(idx) : ring.zi(idx);
                    m[static_cast<size_t>(slot)] += e;
                } else {
                    if (!coeff_text.empty()) coeff_text += "*";
                    coeff_text += piece;
                }
            }
            ParamRat c = coeff_text.empty() ? ParamRat(1) : ParamRat::parse(coeff_text, conductor);
            out.add_term(m, c);
        }
        return out;
    }

private:
    XRing ring_;
    std::map<Mono, ParamRat> terms_;

    void check_ring(const XPoly& other) const {
        if (ring_.nvars() && other.ring_.nvars() && ring_ != other.ring_)
            throw ShapeMismatch("XPoly ring mismatch");
    }
};

inline XPoly operator*(const XPoly& p, const ParamRat& c) { return p.scaled(c); }
inline XPoly operator*(const ParamRat& c, const XPoly& p) { return p.scaled(c); }

// Operation wrappers named as in the module contracts.
inline std::pair<Composition, ParamRat> leading_term(const XPoly& p) { return p.leading_term_x(); }
inline XPoly substitute(const XPoly& p, const std::vector<XPoly>& point) { return p.substitute_x(point); }
inline XPoly exact_divide(const XPoly& p, const XPoly& q) { return p.exact_divide(q); }
inline XPoly divided_difference(const XPoly& p, int i, int j) { return p.divided_difference(i, j); }

}  // namespace macjack
