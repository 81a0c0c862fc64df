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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qr/combinat.hpp"
#include "qr/cycint.hpp"
#include "qr/parallel.hpp"

namespace qr {

/// Outcome of a subdeterminant sweep over the matrix (z^(ij)).
struct ChebotarevReport {
    std::uint32_t ell = 0;
    std::uint64_t minors_checked = 0;
    std::uint32_t max_size_checked = 0;
    bool all_nonzero = true;
    /// Present iff all_nonzero is false: the first vanishing minor in
    /// (order, rows, cols) lexicographic sweep order.
    std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> witness;
};

namespace detail {

using CycMatrix = std::vector<std::vector<CycInt>>;

/// Fraction-free (Bareiss) determinant of an integer matrix. Exact integer
/// divisions only; throws if an expected-exact division leaves a remainder.
inline BigInt bigint_det_bareiss(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r] == 0) {
            std::size_t piv = r + 1;
            while (piv < n && m[piv][r] == 0) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[r], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                BigInt num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                BigInt q = num / prev;
                if (q * prev != num) throw consistency_error("bigint_det_bareiss: inexact division");
                m[i][j] = std::move(q);
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Multiplication-by-b matrix on the power basis: column j holds the
/// coefficients of b * z^j.
inline std::vector<std::vector<BigInt>> mult_matrix(const CycInt& b) {
    const std::uint32_t n = b.ell() - 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    CycInt col = b;
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
        if (j + 1 < n) col = col * zeta_pow(b.ell(), 1);
    }
    return m;
}

/// Scaled inverse of a nonzero ring element: returns (c, d) with c * b = d,
/// d a nonzero integer. Solves the linear system M_b x = d e_0 over Q by
/// Cramer's rule with fraction-free integer determinants.
struct ScaledInverse {
    CycInt c;
    BigInt d;
};

inline ScaledInverse scaled_inverse(const CycInt& b) {
    const std::uint32_t ell = b.ell();
    const std::uint32_t n = ell - 1;
    auto mb = mult_matrix(b);
    BigInt d = bigint_det_bareiss(mb);
    if (d == 0) throw consistency_error("scaled_inverse: singular multiplication matrix for nonzero divisor");
    std::vector<BigInt> c(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        // det of M_b with column i replaced by e_0: expand along that column.
        std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
        for (std::uint32_t r = 1; r < n; ++r) {
            std::uint32_t cc = 0;
            for (std::uint32_t s = 0; s < n; ++s) {
                if (s == i) continue;
                minor[r - 1][cc++] = mb[r][s];
            }
        }
        BigInt cof = bigint_det_bareiss(std::move(minor));
        c[i] = (i % 2 == 0) ? cof : -cof;
    }
    return {CycInt(ell, std::move(c)), std::move(d)};
}

/// Exact division q = a / b in Z[z]/Phi_ell given the divisor's scaled
/// inverse. The per-coefficient integrality assertion is the exactness check:
/// a is divisible by b in the ring iff every coefficient of a*c is divisible
/// by d.
inline CycInt divide_with_inverse(const CycInt& a, const ScaledInverse& inv) {
    CycInt num = a * inv.c;
    std::vector<BigInt> q(num.coeffs().size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = num.coeffs()[i] / inv.d;
        if (q[i] * inv.d != num.coeffs()[i])
            throw consistency_error("cyclotomic exact division: non-integral quotient");
    }
    return CycInt(a.ell(), std::move(q));
}

/// Exact ring division (see divide_with_inverse). Scalar divisors take the
/// coefficient-wise fast path.
inline CycInt ring_exact_div(const CycInt& a, const CycInt& b) {
    if (b.is_zero()) throw std::domain_error("ring_exact_div: division by zero");
    if (b.is_scalar()) {
        const BigInt& d = b.coeffs()[0];
        std::vector<BigInt> q(a.coeffs().size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = a.coeffs()[i] / d;
            if (q[i] * d != a.coeffs()[i])
                throw consistency_error("cyclotomic exact division: non-integral quotient");
        }
        return CycInt(a.ell(), std::move(q));
    }
    return divide_with_inverse(a, scaled_inverse(b));
}

/// Bareiss fraction-free elimination over Z[z]/Phi_ell (an integral domain).
/// Divisions are by the previous round's pivot, whose scaled inverse is
/// computed once per round.
inline CycInt cyc_det_bareiss(CycMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::domain_error("cyc_det_bareiss: empty matrix");
    const std::uint32_t ell = m[0][0].ell();
    if (n == 1) return m[0][0];
    int sign = 1;
    CycInt prev = CycInt::scalar(ell, 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t piv = r + 1;
            while (piv < n && m[piv][r].is_zero()) ++piv;
            if (piv == n) return CycInt(ell);
            std::swap(m[r], m[piv]);
            sign = -sign;
        }
        const bool unit_prev = prev.is_scalar() && (prev.coeffs()[0] == 1 || prev.coeffs()[0] == -1);
        std::optional<ScaledInverse> inv;
        if (!unit_prev && !prev.is_scalar()) inv = scaled_inverse(prev);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                CycInt num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                if (unit_prev) {
                    m[i][j] = prev.coeffs()[0] == 1 ? std::move(num) : -num;
                } else if (inv) {
                    m[i][j] = divide_with_inverse(num, *inv);
                } else {
                    m[i][j] = ring_exact_div(num, prev);
                }
            }
            m[i][r] = CycInt(ell);
        }
        prev = m[r][r];
    }
    CycInt det = m[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

/// Cofactor (Laplace) expansion along the first row. Exponential; used as the
/// independent cross-check route for small orders.
inline CycInt cyc_det_cofactor(const CycMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::domain_error("cyc_det_cofactor: empty matrix");
    const std::uint32_t ell = m[0][0].ell();
    if (n == 1) return m[0][0];
    CycInt det(ell);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        CycMatrix sub(n - 1, std::vector<CycInt>(n - 1, CycInt(ell)));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t s = 0; s < n; ++s) {
                if (s == j) continue;
                sub[r - 1][cc++] = m[r][s];
            }
        }
        CycInt term = m[0][j] * cyc_det_cofactor(sub);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Submatrix (z^(i*j)) for i in rows, j in cols.
inline CycMatrix minor_matrix(std::uint32_t ell, const std::vector<std::uint32_t>& rows,
                              const std::vector<std::uint32_t>& cols) {
    CycMatrix m(rows.size(), std::vector<CycInt>(cols.size(), CycInt(ell)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m[i][j] = zeta_pow(ell, static_cast<std::int64_t>(rows[i]) * cols[j]);
    return m;
}

inline void check_index_set(std::uint32_t ell, const std::vector<std::uint32_t>& v, const char* what) {
    if (v.empty()) throw std::domain_error(std::string(what) + ": index set must be nonempty");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= ell) throw std::domain_error(std::string(what) + ": index out of range");
        if (i > 0 && v[i] <= v[i - 1]) throw std::domain_error(std::string(what) + ": indices must be strictly increasing");
    }
}

}  // namespace detail

/// Exact determinant of the submatrix (z^(ij)), i in rows, j in cols, as an
/// element of Z[z]/Phi_ell. Index sets must be strictly increasing subsets of
/// {0, ..., ell-1} of equal size.
inline CycInt minor_det(std::uint32_t ell, const std::vector<std::uint32_t>& rows,
                        const std::vector<std::uint32_t>& cols) {
    if (!is_odd_prime(ell)) throw std::domain_error("minor_det: ell must be an odd prime");
    detail::check_index_set(ell, rows, "minor_det rows");
    detail::check_index_set(ell, cols, "minor_det cols");
    if (rows.size() != cols.size()) throw std::domain_error("minor_det: row and column sets must have equal size");
    return detail::cyc_det_bareiss(detail::minor_matrix(ell, rows, cols));
}

/// Sweeps every square submatrix of (z^(ij)) up to max_order (default: ell,
/// the full sweep) and reports whether all subdeterminants are nonzero.
/// Iteration order is ascending order size, then row sets lexicographically,
/// then column sets; the first vanishing minor in that order becomes the
/// witness. The sweep partitions across workers with an order-independent
/// merge.
inline ChebotarevReport chebotarev_check(std::uint32_t ell, std::uint32_t max_order = 0, unsigned workers = 0) {
    if (!is_odd_prime(ell)) throw std::domain_error("chebotarev_check: ell must be an odd prime");
    if (max_order == 0) max_order = ell;
    if (max_order > ell) throw std::domain_error("chebotarev_check: max_order exceeds ell");

    ChebotarevReport rep;
    rep.ell = ell;
    rep.max_size_checked = max_order;

    using Witness = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    for (std::uint32_t k = 1; k <= max_order; ++k) {
        std::vector<std::vector<std::uint32_t>> row_sets;
        auto rowset = detail::first_combination(k);
        do {
            row_sets.push_back(rowset);
        } while (detail::next_combination(rowset, ell));

        const unsigned nworkers = resolve_workers(workers);
        std::vector<std::uint64_t> counts(nworkers, 0);
        std::vector<std::optional<Witness>> found(nworkers);
        parallel_slices(row_sets.size(), nworkers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t idx = b; idx < e; ++idx) {
                const auto& rows = row_sets[idx];
                auto cols = detail::first_combination(k);
                do {
                    ++counts[w];
                    if (!found[w] && detail::cyc_det_bareiss(detail::minor_matrix(ell, rows, cols)).is_zero())
                        found[w] = Witness{rows, cols};
                } while (detail::next_combination(cols, ell));
            }
        });
        for (unsigned w = 0; w < nworkers; ++w) {
            rep.minors_checked += counts[w];
            if (found[w] && !rep.witness) {
                rep.all_nonzero = false;
                rep.witness = std::move(found[w]);  // workers scan disjoint lex ranges in order
            }
        }
        if (rep.witness) break;
    }
    return rep;
}

}  // namespace qr
