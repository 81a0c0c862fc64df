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
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qr/gf.hpp"

namespace qr {

/// Polynomial over GF(p^m), ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree() == -1
/// (standing in for the usual minus-infinity convention).
class Poly {
  public:
    explicit Poly(FieldCtx field) : f_(std::move(field)) {}

    Poly(FieldCtx field, std::vector<FqElem> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
        for (const auto& x : c_)
            if (x.field() != f_) throw std::domain_error("Poly: coefficient from a different field");
        trim();
    }

    /// From prime-field integer coefficients (ascending).
    static Poly from_ints(const FieldCtx& field, std::initializer_list<std::uint32_t> coeffs) {
        std::vector<FqElem> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(field.from_prime(v));
        return Poly(field, std::move(c));
    }

    static Poly zero(const FieldCtx& field) { return Poly(field); }
    static Poly one(const FieldCtx& field) { return Poly(field, {field.one()}); }

    /// x^n - 1 over the field.
    static Poly xn_minus_1(const FieldCtx& field, std::size_t n) {
        std::vector<FqElem> c(n + 1, field.zero());
        c[0] = -field.one();
        c[n] = field.one();
        return Poly(field, std::move(c));
    }

    const FieldCtx& field() const { return f_; }
    const std::vector<FqElem>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
    FqElem lead() const {
        if (is_zero()) throw std::domain_error("Poly::lead: zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == f_.one(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same(a, b);
        std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(a.f_, std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        require_same(a, b);
        std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Poly(a.f_, std::move(c));
    }

    Poly operator-() const {
        std::vector<FqElem> c(c_);
        for (auto& x : c) x = -x;
        return Poly(f_, std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        std::vector<FqElem> c(a.c_.size() + b.c_.size() - 1, a.f_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.f_, std::move(c));
    }

    friend Poly operator*(const Poly& a, const FqElem& s) {
        std::vector<FqElem> c(a.c_);
        for (auto& x : c) x *= s;
        return Poly(a.f_, std::move(c));
    }

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        require_same(a, b);
        if (b.is_zero()) throw std::domain_error("Poly divmod: division by the zero polynomial");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(a.f_), rem};
        std::vector<FqElem> q(a.c_.size() - b.c_.size() + 1, a.f_.zero());
        const FqElem lead_inv = b.lead().inv();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const FqElem coef = rem.lead() * lead_inv;
            q[shift] = coef;
            std::vector<FqElem> rc = rem.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rc[shift + i] -= coef * b.c_[i];
            rem = Poly(a.f_, std::move(rc));
        }
        return {Poly(a.f_, std::move(q)), rem};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    bool divides(const Poly& other) const { return (other % *this).is_zero(); }

    FqElem eval(const FqElem& x) const {
        FqElem acc = f_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
        return *this * lead().inv();
    }

    /// Multiplies by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<FqElem> c(c_.size() + k, f_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(f_, std::move(c));
    }

  private:
    static void require_same(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_) throw std::domain_error("Poly: mixed fields");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtx f_;
    std::vector<FqElem> c_;
};

/// Reverse (reciprocal) polynomial f*(x) = x^deg(f) f(1/x).
inline Poly reverse(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("reverse: zero polynomial");
    std::vector<FqElem> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(c));
}

/// Monic gcd.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// Minimal polynomial over GF(p) of an element of GF(p^m): the product of
/// (x - conjugates). Coefficients are checked to land in the prime field and
/// the result is returned over the given prime-field context.
inline Poly min_poly_over_prime(const FqElem& a, const FieldCtx& prime_ctx) {
    const FieldCtx& F = a.field();
    if (prime_ctx.p() != F.p() || prime_ctx.m() != 1)
        throw std::domain_error("min_poly_over_prime: target must be the prime field");
    std::vector<FqElem> conj;
    FqElem x = a;
    do {
        conj.push_back(x);
        x = x.frobenius();
    } while (x != a);
    Poly f(F, {F.one()});
    for (const auto& r : conj) f = f * Poly(F, {-r, F.one()});
    std::vector<FqElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& x2 : f.coeffs()) {
        if (!x2.in_prime_field()) throw consistency_error("min_poly_over_prime: coefficient outside GF(p)");
        c.push_back(prime_ctx.from_prime(x2.prime_value()));
    }
    return Poly(prime_ctx, std::move(c));
}

}  // namespace qr
