/*
   Copyright 2026 The qrlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qr/bigint.hpp"

namespace qr {

/// Legendre symbol (a | ell) by Euler's criterion: 0 iff ell divides a,
/// +1 iff a is a nonzero quadratic residue mod ell, -1 otherwise.
inline int legendre(std::int64_t a, std::uint32_t ell) {
    if (!is_odd_prime(ell)) throw std::domain_error("legendre: ell must be an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(ell);
    if (r < 0) r += ell;
    if (r == 0) return 0;
    std::uint64_t result = 1, base = static_cast<std::uint64_t>(r), e = (ell - 1) / 2;
    while (e) {
        if (e & 1) result = result * base % ell;
        base = base * base % ell;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

/// Multiplicative order of p modulo ell (p not divisible by ell).
inline std::uint32_t order_mod(std::uint64_t p, std::uint32_t ell) {
    std::uint64_t x = p % ell;
    if (x == 0) throw std::domain_error("order_mod: p divisible by ell");
    std::uint32_t o = 1;
    while (x != 1) {
        x = x * (p % ell) % ell;
        ++o;
    }
    return o;
}

namespace gfdetail {

// Dense polynomials over GF(p) with machine-word coefficients, ascending
// degree. Only what deterministic field construction needs.
using PolyP = std::vector<std::uint32_t>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyP mul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

inline std::uint32_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline PolyP mod(PolyP a, const PolyP& m, std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    trim(a);
    while (a.size() > dm) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline PolyP powmod_x(const BigInt& e, const PolyP& m, std::uint64_t p) {
    PolyP r{1};
    PolyP b = mod(PolyP{0, 1}, m, p);
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mod(mul(r, b, p), m, p);
        b = mod(mul(b, b, p), m, p);
        k >>= 1;
    }
    return r;
}

inline PolyP gcd(PolyP a, PolyP b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline PolyP sub(PolyP a, const PolyP& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    trim(a);
    return a;
}

/// Rabin irreducibility test for a monic degree-m polynomial over GF(p).
inline bool is_irreducible(const PolyP& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m));
    // x^(p^m) == x (mod f)
    PolyP xq = powmod_x(q, f, p);
    if (!sub(xq, PolyP{0, 1}, p).empty()) return false;
    std::size_t rem = m;
    for (std::size_t d = 2; d * d <= rem; ++d) {
        if (rem % d) continue;
        while (rem % d == 0) rem /= d;
        BigInt qe = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m / d));
        PolyP xe = powmod_x(qe, f, p);
        if (gcd(f, sub(xe, PolyP{0, 1}, p), p).size() > 1) return false;
    }
    if (rem > 1) {
        BigInt qe = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m / rem));
        PolyP xe = powmod_x(qe, f, p);
        if (gcd(f, sub(xe, PolyP{0, 1}, p), p).size() > 1) return false;
    }
    return true;
}

}  // namespace gfdetail

class FqElem;

/**
 * A finite field GF(p^m) with a deterministically chosen modulus: the monic
 * irreducible degree-m polynomial over GF(p) whose low coefficient vector
 * (c_0, ..., c_(m-1)), read as a base-p integer with c_0 least significant,
 * is smallest. For m = 1 the modulus is the placeholder x and arithmetic is
 * plain mod-p.
 *
 * FieldCtx is a cheap shareable handle; elements keep their field alive.
 */
class FieldCtx {
  public:
    FieldCtx() = default;

    std::uint32_t p() const { return rep_->p; }
    std::uint32_t m() const { return rep_->m; }
    /// Field size p^m.
    std::uint64_t q() const { return rep_->q; }
    /// Monic modulus, ascending coefficients, length m+1.
    const std::vector<std::uint32_t>& modulus() const { return rep_->modulus; }

    bool valid() const { return rep_ != nullptr; }
    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.rep_ == b.rep_ || (a.rep_ && b.rep_ && a.rep_->p == b.rep_->p && a.rep_->m == b.rep_->m);
    }
    friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return !(a == b); }

    FqElem zero() const;
    FqElem one() const;
    /// Element whose coefficient vector is the base-p expansion of v
    /// (the fixed enumeration order: 0, 1, ..., q-1).
    FqElem from_index(std::uint64_t v) const;
    /// Embeds a prime-field scalar.
    FqElem from_prime(std::uint64_t v) const;

  private:
    friend FieldCtx gf_build(std::uint32_t p, std::uint32_t m);
    struct Rep {
        std::uint32_t p;
        std::uint32_t m;
        std::uint64_t q;
        std::vector<std::uint32_t> modulus;
    };
    explicit FieldCtx(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

/// Deterministic construction of GF(p^m); see FieldCtx. Requires p^m < 2^63.
inline FieldCtx gf_build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::domain_error("gf_build: p must be prime");
    if (m < 1) throw std::domain_error("gf_build: extension degree must be >= 1");
    if (m > 1 && p >= (1u << 15)) throw std::domain_error("gf_build: extension fields need p < 2^15");
    BigInt qq = boost::multiprecision::pow(BigInt(p), m);
    if (qq >= (BigInt(1) << 63)) throw std::domain_error("gf_build: field too large for this workbench");
    auto rep = std::make_shared<FieldCtx::Rep>();
    rep->p = p;
    rep->m = m;
    rep->q = qq.convert_to<std::uint64_t>();
    if (m == 1) {
        rep->modulus = {0, 1};  // placeholder x; arithmetic is plain mod-p
        return FieldCtx(std::move(rep));
    }
    for (std::uint64_t v = 0;; ++v) {
        gfdetail::PolyP f(m + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (t != 0) throw consistency_error("gf_build: no irreducible polynomial found");
        f[m] = 1;
        if (gfdetail::is_irreducible(f, p)) {
            rep->modulus = std::move(f);
            return FieldCtx(std::move(rep));
        }
    }
}

/// Element of GF(p^m) as a coefficient vector of length m over GF(p)
/// (polynomial basis, ascending).
class FqElem {
  public:
    FqElem() = default;
    FqElem(FieldCtx field, std::vector<std::uint32_t> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
        if (c_.size() != f_.m()) throw std::domain_error("FqElem: coefficient vector length must equal m");
        for (auto& x : c_) x %= f_.p();
    }

    const FieldCtx& field() const { return f_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }

    /// True iff the element lies in the prime field GF(p).
    bool in_prime_field() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }

    /// Prime-field value; only meaningful when in_prime_field().
    std::uint32_t prime_value() const {
        if (!in_prime_field()) throw std::domain_error("FqElem: element is not in the prime field");
        return c_.empty() ? 0 : c_[0];
    }

    /// Position in the fixed enumeration order (base-p value of coefficients).
    std::uint64_t index() const {
        std::uint64_t v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * f_.p() + c_[i];
        return v;
    }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        std::vector<std::uint32_t> c(a.c_.size());
        const std::uint32_t p = a.f_.p();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % p;
        return FqElem(a.f_, std::move(c));
    }

    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        std::vector<std::uint32_t> c(a.c_.size());
        const std::uint32_t p = a.f_.p();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + p - b.c_[i]) % p;
        return FqElem(a.f_, std::move(c));
    }

    FqElem operator-() const {
        std::vector<std::uint32_t> c(c_.size());
        const std::uint32_t p = f_.p();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - c_[i]) % p;
        return FqElem(f_, std::move(c));
    }

    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        const std::uint32_t p = a.f_.p();
        const std::uint32_t m = a.f_.m();
        if (m == 1) return FqElem(a.f_, {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.c_[0]) * b.c_[0] % p)});
        std::vector<std::uint64_t> t(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            if (!a.c_[i]) continue;
            for (std::uint32_t j = 0; j < m; ++j) t[i + j] += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
        }
        // reduce by the monic modulus, high degree down
        const auto& mod = a.f_.modulus();
        for (std::size_t d = t.size(); d-- > m;) {
            std::uint64_t c = t[d] % p;
            if (!c) continue;
            for (std::uint32_t i = 0; i < m; ++i)
                t[d - m + i] += static_cast<std::uint64_t>(p - mod[i]) % p * c;
        }
        std::vector<std::uint32_t> c(m);
        for (std::uint32_t i = 0; i < m; ++i) c[i] = static_cast<std::uint32_t>(t[i] % p);
        return FqElem(a.f_, std::move(c));
    }

    FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
    FqElem& operator-=(const FqElem& b) { return *this = *this - b; }
    FqElem& operator*=(const FqElem& b) { return *this = *this * b; }

    /// Integer power; negative exponents go through the inverse.
    FqElem pow(std::int64_t e) const {
        if (is_zero()) {
            if (e <= 0) throw std::domain_error("FqElem::pow: 0 to a nonpositive power");
            return *this;
        }
        std::uint64_t k;
        if (e < 0) {
            k = static_cast<std::uint64_t>(-e) % (f_.q() - 1);
            return inv().pow(static_cast<std::int64_t>(k));
        }
        k = static_cast<std::uint64_t>(e) % (f_.q() - 1);
        FqElem r = f_.one(), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    FqElem inv() const {
        if (is_zero()) throw std::domain_error("FqElem::inv: division by zero");
        FqElem r = f_.one(), b = *this;
        std::uint64_t k = f_.q() - 2;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

    /// Multiplicative order (0 for the zero element).
    std::uint64_t mult_order() const {
        if (is_zero()) return 0;
        FqElem x = *this;
        std::uint64_t o = 1;
        const FqElem one = f_.one();
        while (x != one) {
            x *= *this;
            ++o;
        }
        return o;
    }

    /// Frobenius x -> x^p.
    FqElem frobenius() const { return pow(static_cast<std::int64_t>(f_.p())); }

  private:
    static void require_same(const FqElem& a, const FqElem& b) {
        if (a.f_ != b.f_) throw std::domain_error("FqElem: elements from different fields");
    }

    FieldCtx f_;
    std::vector<std::uint32_t> c_;
};

inline FqElem FieldCtx::zero() const { return FqElem(*this, std::vector<std::uint32_t>(m(), 0)); }
inline FqElem FieldCtx::one() const { return from_prime(1); }

inline FqElem FieldCtx::from_index(std::uint64_t v) const {
    std::vector<std::uint32_t> c(m());
    for (std::uint32_t i = 0; i < m(); ++i) {
        c[i] = static_cast<std::uint32_t>(v % p());
        v /= p();
    }
    if (v != 0) throw std::domain_error("FieldCtx::from_index: index out of range");
    return FqElem(*this, std::move(c));
}

inline FqElem FieldCtx::from_prime(std::uint64_t v) const {
    std::vector<std::uint32_t> c(m(), 0);
    c[0] = static_cast<std::uint32_t>(v % p());
    return FqElem(*this, std::move(c));
}

/// Element of exact multiplicative order n, deterministically: scanning
/// candidates w in the fixed enumeration order, the first w whose power
/// w^((q-1)/n) has exact order n designates z := w^((q-1)/n).
inline FqElem find_element_of_order(const FieldCtx& ctx, std::uint64_t n) {
    if (n == 0 || (ctx.q() - 1) % n != 0) {
        std::string msg = "find_element_of_order: order " + std::to_string(n) + " does not divide q-1 = " +
                          std::to_string(ctx.q() - 1);
        throw std::domain_error(msg);
    }
    const std::uint64_t e = (ctx.q() - 1) / n;
    // prime factors of n, for the exact-order check
    std::vector<std::uint64_t> prime_divs;
    std::uint64_t rem = n;
    for (std::uint64_t d = 2; d * d <= rem; ++d) {
        if (rem % d) continue;
        prime_divs.push_back(d);
        while (rem % d == 0) rem /= d;
    }
    if (rem > 1) prime_divs.push_back(rem);
    for (std::uint64_t v = 1; v < ctx.q(); ++v) {
        FqElem u = ctx.from_index(v).pow(static_cast<std::int64_t>(e));
        if (u.is_zero()) continue;
        bool exact = true;
        for (auto d : prime_divs) {
            if (u.pow(static_cast<std::int64_t>(n / d)) == ctx.one()) {
                exact = false;
                break;
            }
        }
        if (exact && (n == 1 ? u == ctx.one() : true)) return u;
    }
    throw consistency_error("find_element_of_order: no element found");
}

/// Primitive ell-th root of unity in GF(p^m) (requires ell | p^m - 1). The
/// choice is deterministic; downstream constructions define f from this root,
/// so every identity is preserved regardless of which primitive root it is.
inline FqElem find_root_of_unity(const FieldCtx& ctx, std::uint32_t ell) {
    if (!is_odd_prime(ell)) throw std::domain_error("find_root_of_unity: ell must be an odd prime");
    if ((ctx.q() - 1) % ell != 0) {
        std::uint32_t need = order_mod(ctx.p(), ell);
        throw std::domain_error("find_root_of_unity: ell does not divide q-1; need extension degree m = " +
                                std::to_string(need) + " over GF(" + std::to_string(ctx.p()) + ")");
    }
    return find_element_of_order(ctx, ell);
}

/// Trace to the prime field: T(a) = a + a^p + ... + a^(p^(m-1)), returned as
/// a GF(p) scalar. GF(p)-linear, Frobenius-invariant, surjective.
inline std::uint32_t trace_to_prime(const FqElem& a) {
    FqElem t = a;
    FqElem x = a;
    for (std::uint32_t i = 1; i < a.field().m(); ++i) {
        x = x.frobenius();
        t += x;
    }
    if (!t.in_prime_field()) throw consistency_error("trace_to_prime: trace left the prime field");
    return t.prime_value();
}

}  // namespace qr
