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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qr/bigint.hpp"

namespace qr {

/**
 * Exact element of Z[z]/Phi_ell(z), for z a primitive ell-th root of unity
 * over Q and ell an odd prime.
 *
 * Elements are kept on the power basis 1, z, ..., z^(ell-2); the relation
 * z^(ell-1) = -(1 + z + ... + z^(ell-2)) reduces everything onto it. Since
 * Phi_ell is irreducible the reduced form is canonical: two values are equal
 * iff their coefficient lists are identical.
 */
class CycInt {
  public:
    /// Zero element of Z[z]/Phi_ell.
    explicit CycInt(std::uint32_t ell) : ell_(check_ell(ell)), c_(ell - 1) {}

    /// From a canonical coefficient list (must have exactly ell-1 entries).
    CycInt(std::uint32_t ell, std::vector<BigInt> coeffs) : ell_(check_ell(ell)), c_(std::move(coeffs)) {
        if (c_.size() != ell_ - 1) throw std::domain_error("CycInt: coefficient list must have ell-1 entries");
    }

    /// Embeds an ordinary integer.
    static CycInt scalar(std::uint32_t ell, BigInt v) {
        CycInt r(ell);
        r.c_[0] = std::move(v);
        return r;
    }

    std::uint32_t ell() const { return ell_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// True iff the value is a plain integer (all z-coefficients vanish).
    bool is_scalar() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.ell_ == b.ell_ && a.c_ == b.c_; }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        require_same(a, b);
        CycInt r(a.ell_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        require_same(a, b);
        CycInt r(a.ell_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    CycInt operator-() const {
        CycInt r(ell_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        require_same(a, b);
        const std::uint32_t ell = a.ell_;
        // Convolve exponents mod ell (z^ell = 1), then fold the z^(ell-1)
        // bucket back onto the power basis.
        std::vector<BigInt> t(ell);
        for (std::uint32_t i = 0; i + 1 < ell; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::uint32_t j = 0; j + 1 < ell; ++j) {
                if (b.c_[j] == 0) continue;
                std::uint32_t e = i + j;
                if (e >= ell) e -= ell;
                t[e] += a.c_[i] * b.c_[j];
            }
        }
        CycInt r(ell);
        for (std::uint32_t i = 0; i + 1 < ell; ++i) r.c_[i] = t[i] - t[ell - 1];
        return r;
    }

    CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
    CycInt& operator-=(const CycInt& b) { return *this = *this - b; }
    CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

  private:
    static std::uint32_t check_ell(std::uint32_t ell) {
        if (!is_odd_prime(ell)) throw std::domain_error("CycInt: ell must be an odd prime");
        return ell;
    }
    static void require_same(const CycInt& a, const CycInt& b) {
        if (a.ell_ != b.ell_) throw std::domain_error("CycInt: mixed cyclotomic orders");
    }

    std::uint32_t ell_;
    std::vector<BigInt> c_;
};

/// z^(e mod ell) in canonical reduced form; zeta_pow(ell, ell) == 1.
inline CycInt zeta_pow(std::uint32_t ell, std::int64_t e) {
    if (!is_odd_prime(ell)) throw std::domain_error("zeta_pow: ell must be an odd prime");
    std::int64_t m = e % static_cast<std::int64_t>(ell);
    if (m < 0) m += ell;
    CycInt r(ell);
    std::vector<BigInt> c(ell - 1);
    if (m < ell - 1) {
        c[static_cast<std::size_t>(m)] = 1;
    } else {
        for (auto& x : c) x = -1;  // z^(ell-1) = -(1 + z + ... + z^(ell-2))
    }
    return CycInt(ell, std::move(c));
}

/// Nonzero quadratic residues mod ell, ascending.
inline std::vector<std::uint32_t> quadratic_residues(std::uint32_t ell) {
    if (!is_odd_prime(ell)) throw std::domain_error("quadratic_residues: ell must be an odd prime");
    std::vector<bool> seen(ell, false);
    for (std::uint64_t i = 1; i < ell; ++i) seen[(i * i) % ell] = true;
    std::vector<std::uint32_t> r;
    for (std::uint32_t i = 1; i < ell; ++i)
        if (seen[i]) r.push_back(i);
    return r;
}

/// Nonzero quadratic non-residues mod ell, ascending.
inline std::vector<std::uint32_t> quadratic_nonresidues(std::uint32_t ell) {
    auto res = quadratic_residues(ell);
    std::vector<bool> seen(ell, false);
    for (auto r : res) seen[r] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 1; i < ell; ++i)
        if (!seen[i]) out.push_back(i);
    return out;
}

/// Gaussian periods: eta = sum of z^r over residues, eta' over non-residues.
/// They satisfy 1 + eta + eta' = 0.
inline std::pair<CycInt, CycInt> gauss_periods(std::uint32_t ell) {
    CycInt eta(ell), eta_prime(ell);
    for (auto r : quadratic_residues(ell)) eta += zeta_pow(ell, r);
    for (auto s : quadratic_nonresidues(ell)) eta_prime += zeta_pow(ell, s);
    return {eta, eta_prime};
}

/// Legendre symbol (-1 | ell): +1 for ell = 1 (mod 4), -1 for ell = 3 (mod 4).
inline int legendre_minus_one(std::uint32_t ell) { return ell % 4 == 1 ? 1 : -1; }

/// ell*gamma = -(eta - eta'), the extension scalar cleared of denominators.
/// Postcondition (checked): (eta - eta')^2 = (-1 | ell) * ell.
inline CycInt gamma_times_ell(std::uint32_t ell) {
    auto [eta, eta_prime] = gauss_periods(ell);
    CycInt diff = eta - eta_prime;
    CycInt expect = CycInt::scalar(ell, BigInt(legendre_minus_one(ell)) * ell);
    if (diff * diff != expect)
        throw consistency_error("gamma_times_ell: (eta - eta')^2 != (-1|ell) * ell");
    return -diff;
}

}  // namespace qr
