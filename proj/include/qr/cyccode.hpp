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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qr/combinat.hpp"
#include "qr/linalg.hpp"
#include "qr/parallel.hpp"
#include "qr/poly.hpp"

namespace qr {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// Cyclic code of length n given by a monic generator dividing x^n - 1.
class CyclicCode {
  public:
    CyclicCode(FieldCtx field, std::size_t n, Poly gen)
        : f_(std::move(field)), n_(n), gen_(std::move(gen)), k_(n - static_cast<std::size_t>(gen_.degree())) {}

    const FieldCtx& field() const { return f_; }
    std::size_t length() const { return n_; }
    const Poly& generator() const { return gen_; }
    std::size_t dim() const { return k_; }

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
        return a.f_ == b.f_ && a.n_ == b.n_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const CyclicCode& a, const CyclicCode& b) { return !(a == b); }

    /// Membership: the generator divides the word polynomial.
    bool contains(const Poly& word) const {
        if (word.degree() >= static_cast<int>(n_)) throw std::domain_error("CyclicCode::contains: word too long");
        return word.is_zero() || gen_.divides(word);
    }

    bool contains(const std::vector<FqElem>& word) const {
        if (word.size() != n_) throw std::domain_error("CyclicCode::contains: length mismatch");
        return contains(Poly(f_, word));
    }

  private:
    FieldCtx f_;
    std::size_t n_;
    Poly gen_;
    std::size_t k_;
};

/// Builds the cyclic code (g). Requires g monic and g | x^n - 1.
inline CyclicCode cyclic_code(const FieldCtx& ctx, std::size_t n, const Poly& g) {
    if (g.is_zero() || !g.is_monic()) throw std::domain_error("cyclic_code: generator must be monic");
    if (g.degree() > static_cast<int>(n)) throw std::domain_error("cyclic_code: generator degree exceeds length");
    Poly xn1 = Poly::xn_minus_1(ctx, n);
    if (!(xn1 % g).is_zero()) throw std::domain_error("cyclic_code: generator does not divide x^n - 1");
    return CyclicCode(ctx, n, g);
}

/// The code of all a(x) with a(x) f(x) = 0 (mod x^n - 1): the cyclic code
/// generated by (x^n - 1)/f, monic-normalized. Its dimension is deg(f).
inline CyclicCode recursive_for(const FieldCtx& ctx, std::size_t n, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("recursive_for: f must be nonzero");
    Poly xn1 = Poly::xn_minus_1(ctx, n);
    auto [q, r] = divmod(xn1, f);
    if (!r.is_zero()) throw std::domain_error("recursive_for: f does not divide x^n - 1");
    return cyclic_code(ctx, n, q.monic());
}

/// Dual code: generator is the monic reverse of (x^n - 1)/g.
inline CyclicCode dual(const CyclicCode& code) {
    Poly q = Poly::xn_minus_1(code.field(), code.length()) / code.generator();
    return cyclic_code(code.field(), code.length(), reverse(q).monic());
}

/// k x n matrix with rows x^i g(x), 0 <= i < k; rank k.
inline Matrix generator_matrix(const CyclicCode& code) {
    Matrix g(code.field(), code.dim(), code.length());
    const auto& coeffs = code.generator().coeffs();
    for (std::size_t i = 0; i < code.dim(); ++i)
        for (std::size_t j = 0; j < coeffs.size(); ++j) g.at(i, i + j) = coeffs[j];
    return g;
}

/**
 * The trace construction: for z of exact order n in GF(p^m)* with a
 * full-degree minimal polynomial h, the code
 *     { (T(c), T(cz), ..., T(cz^(n-1))) : c in GF(p^m) }
 * over GF(p). Construction is by spanning words and gcd; the returned code is
 * verified against the closed forms ((x^n - 1)/h*) and dual (h).
 */
inline CyclicCode trace_code(const FieldCtx& big, std::size_t n, const FqElem& z) {
    if (z.field() != big) throw std::domain_error("trace_code: z not in the given field");
    if (n < 1 || (big.q() - 1) % n != 0) throw std::domain_error("trace_code: n must divide q-1");
    // exact order n
    {
        FqElem zn = z.pow(static_cast<std::int64_t>(n));
        if (z.is_zero() || zn != big.one()) throw std::domain_error("trace_code: z does not have order n");
        std::uint64_t rem = n;
        for (std::uint64_t d = 2; d * d <= rem; ++d) {
            if (rem % d) continue;
            if (z.pow(static_cast<std::int64_t>(n / d)) == big.one())
                throw std::domain_error("trace_code: z does not have exact order n");
            while (rem % d == 0) rem /= d;
        }
        if (rem > 1 && n > 1 && z.pow(static_cast<std::int64_t>(n / rem)) == big.one())
            throw std::domain_error("trace_code: z does not have exact order n");
    }
    FieldCtx prime = gf_build(big.p(), 1);
    Poly h = min_poly_over_prime(z, prime);
    if (h.degree() != static_cast<int>(big.m()))
        throw std::domain_error("trace_code: minimal polynomial of z must have degree m");

    std::vector<FqElem> zpow(n, big.one());
    for (std::size_t i = 1; i < n; ++i) zpow[i] = zpow[i - 1] * z;

    Poly g = Poly::xn_minus_1(prime, n);
    std::uint64_t basis_index = 1;
    for (std::uint32_t e = 0; e < big.m(); ++e, basis_index *= big.p()) {
        FqElem b = big.from_index(basis_index);
        std::vector<FqElem> word(n, prime.zero());
        for (std::size_t i = 0; i < n; ++i) word[i] = prime.from_prime(trace_to_prime(b * zpow[i]));
        g = poly_gcd(g, Poly(prime, std::move(word)));
    }
    CyclicCode code = cyclic_code(prime, n, g);
    if (code.dim() != big.m()) throw consistency_error("trace_code: dimension != m");
    if (code != recursive_for(prime, n, reverse(h)))
        throw consistency_error("trace_code: code differs from ((x^n - 1)/h*)");
    if (dual(code) != cyclic_code(prime, n, h))
        throw consistency_error("trace_code: dual differs from (h)");
    return code;
}

/// Word counts by Hamming weight. A_0 = 1 and the counts sum to q^k.
struct WeightEnumerator {
    std::vector<BigInt> counts;

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }

    /// Smallest positive weight with a nonzero count, or 0 if none.
    std::uint32_t min_positive_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w] != 0) return static_cast<std::uint32_t>(w);
        return 0;
    }
};

namespace enumdetail {

inline void check_budget(const FieldCtx& f, std::size_t k, std::uint64_t budget, const char* what) {
    BigInt total = boost::multiprecision::pow(BigInt(f.q()), static_cast<unsigned>(k));
    if (total > budget)
        throw budget_error(std::string(what) + ": q^k = " + total.str() + " exceeds budget " + std::to_string(budget));
}

inline std::vector<std::uint64_t> pack_binary_rows(const Matrix& g) {
    std::vector<std::uint64_t> rows(g.rows(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!g.at(i, j).is_zero()) rows[i] |= std::uint64_t{1} << j;
    return rows;
}

/// Visits every word of the binary row space exactly once in Gray-code order
/// within each worker slice. visit(worker, packed_word) must be thread-safe
/// across distinct workers.
template <class Visit>
void for_each_binary_word(const std::vector<std::uint64_t>& rows, unsigned workers, Visit&& visit) {
    const std::size_t k = rows.size();
    const std::uint64_t total = std::uint64_t{1} << k;
    parallel_slices(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        std::uint64_t word = 0;
        std::uint64_t gray = b ^ (b >> 1);
        for (std::size_t t = 0; t < k; ++t)
            if ((gray >> t) & 1) word ^= rows[t];
        visit(w, word);
        for (std::uint64_t c = b + 1; c < e; ++c) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(c))];
            visit(w, word);
        }
    });
}

/// Generic odometer over prime-field messages; visit(worker, word) where word
/// is a value vector mod p. One row add per digit change, amortized O(1)
/// changes per step.
template <class Visit>
void for_each_prime_word(const Matrix& g, unsigned workers, Visit&& visit) {
    const std::uint32_t p = g.field().p();
    const std::size_t k = g.rows(), n = g.cols();
    std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = g.at(i, j).prime_value();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= p;
    parallel_slices(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        std::vector<std::uint32_t> digits(k, 0);
        std::vector<std::uint32_t> word(n, 0);
        std::uint64_t t = b;
        for (std::size_t i = 0; i < k; ++i) {
            digits[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
            if (digits[i])
                for (std::size_t j = 0; j < n; ++j)
                    word[j] = (word[j] + digits[i] * rows[i][j]) % p;
        }
        auto add_row = [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j) {
                word[j] += rows[i][j];
                if (word[j] >= p) word[j] -= p;
            }
        };
        visit(w, word);
        for (std::uint64_t c = b + 1; c < e; ++c) {
            std::size_t i = 0;
            while (digits[i] == p - 1) {
                digits[i] = 0;
                add_row(i);  // -(p-1) = +1 mod p
                ++i;
            }
            ++digits[i];
            add_row(i);
            visit(w, word);
        }
    });
}

}  // namespace enumdetail

/// Exact weight enumerator by exhaustive message enumeration over the rows of
/// a generator matrix (prime fields only; binary codes take a bit-packed
/// path). Deterministic regardless of worker count.
inline WeightEnumerator weight_enumerator(const Matrix& gen, std::uint64_t budget = kDefaultBudget,
                                          unsigned workers = 0) {
    const FieldCtx& f = gen.field();
    if (f.m() != 1) throw std::domain_error("weight_enumerator: enumeration is implemented over prime fields");
    enumdetail::check_budget(f, gen.rows(), budget, "weight_enumerator");
    const std::size_t n = gen.cols();
    const unsigned nworkers = resolve_workers(workers);
    std::vector<std::vector<std::uint64_t>> local(nworkers, std::vector<std::uint64_t>(n + 1, 0));
    if (gen.rows() == 0) {
        local[0][0] = 1;
    } else if (f.p() == 2 && n <= 64) {
        auto rows = enumdetail::pack_binary_rows(gen);
        enumdetail::for_each_binary_word(rows, nworkers, [&](unsigned w, std::uint64_t word) {
            ++local[w][static_cast<std::size_t>(std::popcount(word))];
        });
    } else {
        enumdetail::for_each_prime_word(gen, nworkers, [&](unsigned w, const std::vector<std::uint32_t>& word) {
            std::size_t wt = 0;
            for (auto x : word) wt += x != 0;
            ++local[w][wt];
        });
    }
    WeightEnumerator we;
    we.counts.assign(n + 1, BigInt(0));
    for (const auto& l : local)
        for (std::size_t i = 0; i <= n; ++i) we.counts[i] += l[i];
    return we;
}

inline WeightEnumerator weight_enumerator(const CyclicCode& code, std::uint64_t budget = kDefaultBudget,
                                          unsigned workers = 0) {
    return weight_enumerator(generator_matrix(code), budget, workers);
}

/// Minimum Hamming distance by exhaustive enumeration. The zero code has no
/// positive-weight word and is rejected.
inline std::uint32_t min_distance(const Matrix& gen, std::uint64_t budget = kDefaultBudget, unsigned workers = 0) {
    if (gen.rows() == 0) throw std::domain_error("min_distance: undefined for the zero code");
    WeightEnumerator we = weight_enumerator(gen, budget, workers);
    std::uint32_t d = we.min_positive_weight();
    if (d == 0) throw consistency_error("min_distance: no nonzero word in a code of positive dimension");
    return d;
}

inline std::uint32_t min_distance(const CyclicCode& code, std::uint64_t budget = kDefaultBudget,
                                  unsigned workers = 0) {
    return min_distance(generator_matrix(code), budget, workers);
}

/// All codewords of a given Hamming weight, as symbol-value vectors, sorted
/// (deterministic regardless of worker count).
inline std::vector<std::vector<std::uint32_t>> words_of_weight(const Matrix& gen, std::uint32_t weight,
                                                               std::uint64_t budget = kDefaultBudget,
                                                               unsigned workers = 0) {
    const FieldCtx& f = gen.field();
    if (f.m() != 1) throw std::domain_error("words_of_weight: enumeration is implemented over prime fields");
    enumdetail::check_budget(f, gen.rows(), budget, "words_of_weight");
    const std::size_t n = gen.cols();
    const unsigned nworkers = resolve_workers(workers);
    std::vector<std::vector<std::vector<std::uint32_t>>> local(nworkers);
    if (gen.rows() == 0) {
        if (weight == 0) local[0].push_back(std::vector<std::uint32_t>(n, 0));
    } else if (f.p() == 2 && n <= 64) {
        auto rows = enumdetail::pack_binary_rows(gen);
        enumdetail::for_each_binary_word(rows, nworkers, [&](unsigned w, std::uint64_t word) {
            if (static_cast<std::uint32_t>(std::popcount(word)) == weight) {
                std::vector<std::uint32_t> v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = (word >> j) & 1;
                local[w].push_back(std::move(v));
            }
        });
    } else {
        enumdetail::for_each_prime_word(gen, nworkers, [&](unsigned w, const std::vector<std::uint32_t>& word) {
            std::size_t wt = 0;
            for (auto x : word) wt += x != 0;
            if (wt == weight) local[w].push_back(word);
        });
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& l : local)
        for (auto& v : l) out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Report of the (zeta^(ij)) minor sweep over GF(p).
struct MdsReport {
    std::uint32_t ell = 0;
    std::uint32_t p = 0;
    std::uint64_t minors_checked = 0;
    bool all_mds = true;
    std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> witness;
};

namespace enumdetail {

inline std::uint32_t gfp_det(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t piv = r;
        while (piv < n && m[piv][r] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            det = det * (p - 1) % p;
        }
        det = det * m[r][r] % p;
        const std::uint64_t inv = gfdetail::inv_mod(m[r][r], p);
        for (std::size_t i = r + 1; i < n; ++i) {
            if (!m[i][r]) continue;
            const std::uint64_t f = m[i][r] * inv % p;
            for (std::size_t j = r; j < n; ++j)
                m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - f) * m[r][j]) % p);
        }
    }
    return static_cast<std::uint32_t>(det);
}

}  // namespace enumdetail

/**
 * Checks that every square minor of the ell x ell matrix (zeta^(ij)) over
 * GF(p) is nonzero, for zeta a primitive ell-th root of unity in GF(p)
 * (requires p = 1 mod ell). All minors nonzero is equivalent to every cyclic
 * code of length ell over GF(p) being MDS. The witness, if any, is the first
 * vanishing minor in (order, rows, cols) lexicographic order.
 */
inline MdsReport mds_check_via_minors(std::uint32_t p, std::uint32_t ell, unsigned workers = 0) {
    if (!is_odd_prime(ell)) throw std::domain_error("mds_check_via_minors: ell must be an odd prime");
    if (!is_prime(p)) throw std::domain_error("mds_check_via_minors: p must be prime");
    if (p % ell != 1) throw std::domain_error("mds_check_via_minors: requires p = 1 (mod ell)");
    FieldCtx fp = gf_build(p, 1);
    const std::uint32_t zeta = find_root_of_unity(fp, ell).prime_value();
    std::vector<std::vector<std::uint32_t>> zz(ell, std::vector<std::uint32_t>(ell));
    for (std::uint32_t i = 0; i < ell; ++i)
        for (std::uint32_t j = 0; j < ell; ++j) {
            std::uint64_t e = 1;
            std::uint64_t b = zeta, t = static_cast<std::uint64_t>(i) * j % ell;
            while (t) {
                if (t & 1) e = e * b % p;
                b = b * b % p;
                t >>= 1;
            }
            zz[i][j] = static_cast<std::uint32_t>(e);
        }

    MdsReport rep;
    rep.ell = ell;
    rep.p = p;
    using Witness = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    for (std::uint32_t k = 1; k <= ell; ++k) {
        std::vector<std::vector<std::uint32_t>> row_sets;
        auto rowset = detail::first_combination(k);
        do {
            row_sets.push_back(rowset);
        } while (detail::next_combination(rowset, ell));
        const unsigned nworkers = resolve_workers(workers);
        std::vector<std::uint64_t> counts(nworkers, 0);
        std::vector<std::optional<Witness>> found(nworkers);
        parallel_slices(row_sets.size(), nworkers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
            std::vector<std::vector<std::uint32_t>> sub(k, std::vector<std::uint32_t>(k));
            for (std::uint64_t idx = b; idx < e; ++idx) {
                const auto& rows = row_sets[idx];
                auto cols = detail::first_combination(k);
                do {
                    ++counts[w];
                    if (found[w]) continue;
                    for (std::uint32_t i = 0; i < k; ++i)
                        for (std::uint32_t j = 0; j < k; ++j) sub[i][j] = zz[rows[i]][cols[j]];
                    if (enumdetail::gfp_det(sub, p) == 0) found[w] = Witness{rows, cols};
                } while (detail::next_combination(cols, ell));
            }
        });
        for (unsigned w = 0; w < nworkers; ++w) {
            rep.minors_checked += counts[w];
            if (found[w] && !rep.witness) {
                rep.all_mds = false;
                rep.witness = std::move(found[w]);
            }
        }
        if (rep.witness) break;
    }
    return rep;
}

}  // namespace qr
