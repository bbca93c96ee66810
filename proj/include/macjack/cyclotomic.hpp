#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace macjack {

inline int euler_phi(int k) {
    int result = k;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

namespace detail {

// Monic integer coefficients of the k-th cyclotomic polynomial, ascending
// degree.  Computed by the classical division Phi_k = (x^k - 1) / prod_{d|k, d<k} Phi_d.
inline const std::vector<Int>& cyclotomic_coeffs(int k) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<Int> num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        const std::vector<Int>& phi_d = cyclotomic_coeffs(d);
        // exact division of num by phi_d (both monic)
        std::vector<Int> quot(num.size() - phi_d.size() + 1, Int(0));
        std::vector<Int> rem = num;
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            Int c = rem[i + phi_d.size() - 1];
            quot[i] = c;
            if (c != 0) {
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
            }
        }
        num = quot;
    }
    return cache.emplace(k, std::move(num)).first->second;
}

}  // namespace detail

// An element of the cyclotomic field Q(zeta_k), stored as a coordinate
// vector modulo Phi_k.  k = 1 and k = 2 degenerate to plain rationals.
class CycNum {
public:
    CycNum() : conductor_(1), coords_(1, Rat(0)) {}
    CycNum(const Rat& r) : conductor_(1), coords_(1, r) {}  // NOLINT: implicit by design
    CycNum(long n) : conductor_(1), coords_(1, Rat(n)) {}   // NOLINT

    static CycNum zeta(int k) {
        if (k < 1) throw InvalidParams("conductor must be positive");
        if (k == 1) return CycNum(Rat(1));
        if (k == 2) return CycNum(Rat(-1));
        CycNum c;
        c.conductor_ = k;
        c.coords_.assign(euler_phi(k), Rat(0));
        c.coords_[1] = 1;
        return c;
    }

    static CycNum from_coords(int k, std::vector<Rat> coords) {
        if (static_cast<int>(coords.size()) != euler_phi(k))
            throw InvalidParams("coordinate vector length must equal phi(k)");
        CycNum c;
        c.conductor_ = k;
        c.coords_ = std::move(coords);
        return c;
    }

    int conductor() const { return conductor_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r == 0; });
    }
    bool is_one() const { return is_rational() && coords_[0] == 1; }
    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }
    Rat rational_value() const {
        if (!is_rational()) throw MacjackError("CycNum is not rational");
        return coords_[0];
    }

    // Embedding Q(zeta_k) -> Q(zeta_K) for k | K via zeta_k = zeta_K^{K/k}.
    CycNum lifted(int K) const {
        if (K == conductor_) return *this;
        if (K % conductor_ != 0)
            throw ConductorMismatch("cannot lift conductor " + std::to_string(conductor_) +
                                    " into " + std::to_string(K));
        int step = K / conductor_;
        std::vector<Rat> poly(static_cast<size_t>(K), Rat(0));
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            poly[(i * step) % K] += coords_[i];
        }
        return reduce(K, poly);
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
        return x;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
        return x;
    }
    CycNum operator-() const {
        CycNum c = *this;
        for (auto& r : c.coords_) r = -r;
        return c;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        if (x.conductor_ == 1) return CycNum(x.coords_[0] * y.coords_[0]);
        std::vector<Rat> prod(2 * x.coords_.size() - 1, Rat(0));
        for (size_t i = 0; i < x.coords_.size(); ++i) {
            if (x.coords_[i] == 0) continue;
            for (size_t j = 0; j < y.coords_.size(); ++j) {
                if (y.coords_[j] == 0) continue;
                prod[i + j] += x.coords_[i] * y.coords_[j];
            }
        }
        return reduce(x.conductor_, prod);
    }

    CycNum inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
        if (conductor_ == 1) return CycNum(Rat(1) / coords_[0]);
        // extended Euclid in Q[x]: s * this + t * Phi_k = 1
        std::vector<Rat> r0 = phi_rational(conductor_);
        std::vector<Rat> r1 = coords_;
        trim(r1);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
        while (true) {
            if (r1.size() == 1) {
                // r1 is a nonzero constant: s1 / r1[0] inverts this mod Phi_k
                std::vector<Rat> inv = s1;
                for (auto& c : inv) c /= r1[0];
                inv.resize(static_cast<size_t>(conductor_), Rat(0));
                return reduce(conductor_, inv);
            }
            auto [q, r] = poly_divmod(r0, r1);
            std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            trim(r1);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) throw MacjackError("cyclotomic inverse: gcd not constant");
        }
    }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum base = *this, acc = CycNum(Rat(1));
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        return x.coords_ == y.coords_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // True if this is a root of unity (or +-1); used by the "(*)"-equality oracle.
    bool is_root_of_unity() const {
        if (is_zero()) return false;
        CycNum p = *this;
        int bound = 2 * conductor_ * conductor_ + 2;
        for (int j = 1; j <= bound; ++j) {
            if (p.is_one()) return true;
            p = p * (*this);
        }
        return false;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            Rat c = coords_[i];
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            if (i == 0) {
                os << c.get_str();
            } else {
                if (c != 1) os << c.get_str() << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    int conductor_;
    std::vector<Rat> coords_;

    static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b) {
        if (a.conductor_ == b.conductor_) return {a, b};
        int K = std::lcm(a.conductor_, b.conductor_);
        return {a.lifted(K), b.lifted(K)};
    }

    static std::vector<Rat> phi_rational(int k) {
        const auto& zc = detail::cyclotomic_coeffs(k);
        std::vector<Rat> out(zc.size());
        for (size_t i = 0; i < zc.size(); ++i) out[i] = Rat(zc[i]);
        return out;
    }

    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    }

    static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out = a;
        if (out.size() < b.size()) out.resize(b.size(), Rat(0));
        for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        trim(out);
        return out;
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> a,
                                                                     const std::vector<Rat>& b) {
        trim(a);
        std::vector<Rat> q;
        if (a.size() < b.size()) return {q, a};
        q.assign(a.size() - b.size() + 1, Rat(0));
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rat c = a[i + b.size() - 1] / b.back();
            q[i] = c;
            if (c != 0)
                for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
        }
        trim(a);
        return {q, a};
    }

    // Reduce an arbitrary-degree coordinate polynomial modulo Phi_k.
    static CycNum reduce(int k, std::vector<Rat> poly) {
        const auto& phi = phi_rational(k);
        size_t deg = phi.size() - 1;  // = euler_phi(k)
        if (poly.size() > deg) {
            for (int i = static_cast<int>(poly.size()) - 1; i >= static_cast<int>(deg); --i) {
                Rat c = poly[i];
                if (c == 0) continue;
                poly[i] = 0;
                for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * phi[j];
            }
        }
        poly.resize(deg, Rat(0));
        CycNum out;
        out.conductor_ = k;
        out.coords_ = std::move(poly);
        return out;
    }
};

enum class CycOp { Add, Mul, Inv };

// Strict-contract field arithmetic: conductors must already agree.
inline CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
    if (a.conductor() != b.conductor())
        throw ConductorMismatch("cyc_arith: conductors " + std::to_string(a.conductor()) +
                                " and " + std::to_string(b.conductor()) + " differ");
    switch (op) {
        case CycOp::Add: return a + b;
        case CycOp::Mul: return a * b;
        case CycOp::Inv: return a.inverse();
    }
    throw MacjackError("unreachable");
}

inline CycNum cyc_lift(const CycNum& a, int K) { return a.lifted(K); }

}  // namespace macjack
