#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>

#include "param_poly.hpp"

namespace macjack {

// Exact rational function in the parameter symbols over a cyclotomic field.
// Canonical form: gcd-reduced, denominator nonzero and monic under the
// canonical monomial order, so equality is coordinate-wise.
class ParamRat {
public:
    ParamRat() : num_(), den_(PPoly::one()) {}
    ParamRat(long n) : num_(PPoly::constant(CycNum(n))), den_(PPoly::one()) {}  // NOLINT
    ParamRat(const Rat& r) : num_(PPoly::constant(CycNum(r))), den_(PPoly::one()) {}  // NOLINT
    ParamRat(const CycNum& c) : num_(PPoly::constant(c)), den_(PPoly::one()) {}  // NOLINT
    ParamRat(const PPoly& p) : num_(p), den_(PPoly::one()) {}  // NOLINT
    ParamRat(PPoly num, PPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static ParamRat symbol(Param s, int e = 1) {
        if (e >= 0) return ParamRat(PPoly::symbol(s, e));
        return ParamRat(PPoly::one(), PPoly::symbol(s, -e));
    }
    static ParamRat kappa() { return symbol(P_KAPPA); }
    static ParamRat q() { return symbol(P_Q); }
    static ParamRat t() { return symbol(P_T); }
    static ParamRat u() { return symbol(P_U); }

    const PPoly& num() const { return num_; }
    const PPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_rational() const {
        return is_constant() && (num_.is_zero() || num_.leading().second.is_rational());
    }
    Rat rational_value() const {
        if (num_.is_zero()) return Rat(0);
        if (!is_rational()) throw MacjackError("ParamRat is not a plain rational");
        return num_.leading().second.rational_value();
    }
    CycNum constant_value() const {
        if (num_.is_zero()) return CycNum(0);
        if (!is_constant()) throw MacjackError("ParamRat is not constant");
        return num_.leading().second;
    }

    friend ParamRat operator+(const ParamRat& a, const ParamRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return ParamRat(a.num_ + b.num_, a.den_);
        return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamRat operator-(const ParamRat& a, const ParamRat& b) { return a + (-b); }
    ParamRat operator-() const {
        ParamRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend ParamRat operator*(const ParamRat& a, const ParamRat& b) {
        if (a.is_zero() || b.is_zero()) return ParamRat();
        // cross-cancel before multiplying to keep intermediates small
        PPoly g1 = ppoly_gcd(a.num_, b.den_);
        PPoly g2 = ppoly_gcd(b.num_, a.den_);
        PPoly n = ppoly_divexact(a.num_, g1) * ppoly_divexact(b.num_, g2);
        PPoly d = ppoly_divexact(a.den_, g2) * ppoly_divexact(b.den_, g1);
        ParamRat r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.make_den_monic();
        return r;
    }
    friend ParamRat operator/(const ParamRat& a, const ParamRat& b) { return a * b.inverse(); }

    ParamRat inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        ParamRat r;
        r.num_ = den_;
        r.den_ = num_;
        r.make_den_monic();
        return r;
    }

    ParamRat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ParamRat acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const ParamRat& a, const ParamRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

    std::string to_string() const;
    // `conductor` interprets the symbol z as zeta_conductor; documents that
    // serialize cyclotomic scalars carry the conductor alongside the text.
    static ParamRat parse(const std::string& text, int conductor = 1);

private:
    PPoly num_, den_;

    void make_den_monic() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        CycNum lc = den_.leading().second;
        if (!lc.is_one()) {
            CycNum inv = lc.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = PPoly::one();
            return;
        }
        PPoly g = ppoly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = ppoly_divexact(num_, g);
            den_ = ppoly_divexact(den_, g);
        }
        make_den_monic();
    }
};

enum class RatOp { Add, Mul, Div };

inline ParamRat rat_arith(const ParamRat& a, const ParamRat& b, RatOp op) {
    switch (op) {
        case RatOp::Add: return a + b;
        case RatOp::Mul: return a * b;
        case RatOp::Div: return a / b;
    }
    throw MacjackError("unreachable");
}

// ---------------------------------------------------------------------------
// Specialization homomorphisms
// ---------------------------------------------------------------------------

// A parameter specialization: each assigned symbol maps to a ParamRat in the
// target symbols; unassigned symbols map to themselves.
struct SpecMap {
    std::array<std::optional<ParamRat>, kNumParams> assign;
    int conductor = 1;  // cyclotomic conductor of the target field
    std::string description;

    bool assigns(int sym) const { return assign[static_cast<size_t>(sym)].has_value(); }

    ParamRat image_of(int sym) const {
        if (assigns(sym)) return *assign[static_cast<size_t>(sym)];
        return ParamRat::symbol(static_cast<Param>(sym));
    }

    ParamRat apply_poly(const PPoly& p) const {
        ParamRat out;
        for (auto& [e, c] : p.terms) {
            ParamRat term{CycNum(cyc_lift(c, std::lcm(c.conductor(), conductor)))};
            for (int s = 0; s < kNumParams; ++s) {
                int d = pexp_get(e, s);
                if (d != 0) term = term * image_of(s).pow(d);
            }
            out = out + term;
        }
        return out;
    }

    ParamRat apply(const ParamRat& s) const {
        ParamRat den = apply_poly(s.den());
        if (den.is_zero()) {
            std::string label = description.empty() ? std::string("specialization") : description;
            throw PoleAtSpecialization("denominator " + ParamRat(s.den()).to_string() +
                                       " vanishes under " + label);
        }
        ParamRat num = apply_poly(s.num());
        return num / den;
    }

    static SpecMap parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// Text form.  Grammar (round-trips exactly):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' int]
//   atom   := integer | symbol | '(' expr ')'
//   symbol := 'k' | 'kappa' | 'q' | 't' | 'u' | 'z'    (z = cyclotomic generator)
// ---------------------------------------------------------------------------

namespace detail {

class ScalarParser {
public:
    ScalarParser(const std::string& s, int conductor) : s_(s), conductor_(conductor) {}

    ParamRat parse_expr() {
        ParamRat v = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    void expect_end() {
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input: '" + s_.substr(pos_) + "'");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int conductor_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ParamRat parse_term() {
        ParamRat v = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                v = v * parse_factor();
            } else if (eat('/')) {
                ParamRat d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero in scalar expression");
                v = v / d;
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
                v = v * parse_factor();  // juxtaposition, e.g. "qt" or "2t"
            } else {
                return v;
            }
        }
    }

    ParamRat parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        ParamRat base = parse_atom();
        skip_ws();
        if (eat('^')) {
            bool neg = eat('-');
            long e = parse_int();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    long parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer at position " + std::to_string(start));
        return std::stol(s_.substr(start, pos_ - start));
    }

    ParamRat parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of scalar expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ParamRat v = parse_expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ParamRat(Rat(parse_int()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "k" || name == "kappa") return ParamRat::kappa();
            if (name == "q") return ParamRat::q();
            if (name == "t") return ParamRat::t();
            if (name == "u") return ParamRat::u();
            if (name == "z") {
                if (conductor_ <= 1)
                    throw ParseError("'z' used without a declared conductor (add e.g. z^3=1)");
                return ParamRat(CycNum::zeta(conductor_));
            }
            // multi-letter runs like "qt" denote juxtaposed symbols
            ParamRat v(1);
            for (char ch : name) {
                switch (ch) {
                    case 'k': v = v * ParamRat::kappa(); break;
                    case 'q': v = v * ParamRat::q(); break;
                    case 't': v = v * ParamRat::t(); break;
                    case 'u': v = v * ParamRat::u(); break;
                    default: throw ParseError("unknown symbol '" + name + "'");
                }
            }
            return v;
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

inline void print_ppoly(std::ostream& os, const PPoly& p, PExp fold_denominator = 0) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    for (auto& [e, c] : p.terms) {
        std::string mono;
        {
            std::ostringstream ms;
            bool have_symbol = false;
            for (int s = 0; s < kNumParams; ++s) {
                int d = pexp_get(e, s) - pexp_get(fold_denominator, s);
                if (d == 0) continue;
                if (have_symbol) ms << "*";
                ms << param_name(s);
                if (d != 1) ms << "^" << d;
                have_symbol = true;
            }
            mono = ms.str();
        }
        std::string cs;       // coefficient text, sign included
        bool neg_join = false;  // emit " - " and strip the sign
        if (c.is_rational()) {
            Rat r = c.rational_value();
            neg_join = r < 0;
            Rat mag = neg_join ? Rat(-r) : r;
            if (mag.get_den() == 1) {
                cs = mag.get_str();
            } else {
                // fractions keep the sign inside explicit parens, (-1/2)*q^2 style
                neg_join = false;
                cs = "(" + r.get_str() + ")";
            }
        } else {
            std::string raw = c.to_string();
            cs = raw.find(' ') != std::string::npos ? "(" + raw + ")" : raw;
        }
        if (first)
            os << (neg_join ? "-" : "");
        else
            os << (neg_join ? " - " : " + ");
        first = false;
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
}

}  // namespace detail

inline std::string ParamRat::to_string() const {
    std::ostringstream os;
    if (den_.is_one()) {
        detail::print_ppoly(os, num_);
    } else if (den_.is_monomial() && den_.leading().second.is_one()) {
        // Laurent style: fold the monomial denominator into negative exponents
        detail::print_ppoly(os, num_, den_.leading().first);
    } else {
        os << "(";
        detail::print_ppoly(os, num_);
        os << ")/(";
        detail::print_ppoly(os, den_);
        os << ")";
    }
    return os.str();
}

inline ParamRat ParamRat::parse(const std::string& text, int conductor) {
    detail::ScalarParser p(text, conductor);
    ParamRat v = p.parse_expr();
    p.expect_end();
    return v;
}

// ---------------------------------------------------------------------------
// SpecMap mini-language, e.g. "q*t^2=1", "q=-t^-2", "q=z*u^-1,t=u,z^3=1",
// "kappa=-1/2".  Relations with a unit q (or t/u/kappa) exponent are solved
// for that symbol; anything ambiguous is rejected with guidance.
// ---------------------------------------------------------------------------

inline SpecMap SpecMap::parse(const std::string& text) {
    SpecMap m;
    m.description = text;
    std::vector<std::pair<std::string, std::string>> relations;
    size_t start = 0;
    std::string cleaned = text;
    while (start <= cleaned.size()) {
        size_t comma = cleaned.find(',', start);
        std::string piece = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty() && piece.find_first_not_of(" \t") != std::string::npos) {
            size_t eq = piece.find('=');
            if (eq == std::string::npos)
                throw ParseError("specialization piece '" + piece + "' has no '='");
            relations.emplace_back(piece.substr(0, eq), piece.substr(eq + 1));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    // first pass: root-of-unity declarations z^g=1 fix the conductor
    for (auto& [lhs, rhs] : relations) {
        std::string l = lhs;
        l.erase(std::remove_if(l.begin(), l.end(), ::isspace), l.end());
        std::string r = rhs;
        r.erase(std::remove_if(r.begin(), r.end(), ::isspace), r.end());
        if (l.size() >= 3 && l[0] == 'z' && l[1] == '^' && r == "1") {
            int g = std::stoi(l.substr(2));
            if (g < 1) throw ParseError("bad root-of-unity declaration: " + lhs);
            m.conductor = g;
        }
    }

    for (auto& [lhs_raw, rhs_raw] : relations) {
        std::string l = lhs_raw;
        l.erase(std::remove_if(l.begin(), l.end(), ::isspace), l.end());
        if (!l.empty() && l[0] == 'z') continue;  // handled above

        detail::ScalarParser lp(lhs_raw, m.conductor);
        ParamRat lhs = lp.parse_expr();
        lp.expect_end();
        detail::ScalarParser rp(rhs_raw, m.conductor);
        ParamRat rhs = rp.parse_expr();
        rp.expect_end();

        if (!lhs.is_polynomial() || !lhs.num().is_monomial())
            throw ParseError("left side of '" + lhs_raw + "=' must be a single monomial; "
                             "write the relation as sym=expr or monomial=constant");
        PExp e = lhs.num().leading().first;
        CycNum lc = lhs.num().leading().second;
        // pick the solvable symbol: exponent 1, preferring kappa, q, t, u order
        int solve_sym = -1;
        for (int s = 0; s < kNumParams; ++s) {
            if (pexp_get(e, s) == 1 && !m.assigns(s)) {
                solve_sym = s;
                break;
            }
        }
        if (solve_sym < 0)
            throw ParseError("cannot solve '" + lhs_raw + "=" + rhs_raw +
                             "' for a symbol with exponent 1; rewrite it (e.g. q^2t^2=1 as qt=1 "
                             "or qt=-1, naming the intended branch)");
        ParamRat value = rhs / ParamRat(CycNum(lc));
        for (int s = 0; s < kNumParams; ++s) {
            if (s == solve_sym) continue;
            int d = pexp_get(e, s);
            if (d != 0) value = value * ParamRat::symbol(static_cast<Param>(s), -d);
        }
        m.assign[static_cast<size_t>(solve_sym)] = value;
    }
    return m;
}

inline ParamRat specialize_scalar(const ParamRat& s, const SpecMap& m) { return m.apply(s); }

}  // namespace macjack
