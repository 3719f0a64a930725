#include "spectile/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spectile/cyclotomic.hpp"

namespace spectile {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // Extended Euclid; a must be a unit mod m.
    std::int64_t r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: not a unit");
    return mod_reduce(s0, m);
}

struct PrimePower {
    std::int64_t p = 0;
    std::int64_t e = 0;
    std::int64_t q = 0; // p^e
};

std::vector<PrimePower> factor_prime_powers(std::int64_t n) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.e;
            pp.q *= p;
        }
        out.push_back(pp);
    }
    if (n > 1)
        out.push_back({n, 1, n});
    return out;
}

// One matrix factorization over Z_{p^e}: rank is the number of diagonal
// entries that survive diagonalization, left/right are the witness pair
// (rows x rank and rank x cols, flattened row-major, entries in [0, q)).
struct LocalPart {
    std::int64_t q = 0;
    std::size_t rank = 0;
    std::vector<std::int64_t> left;
    std::vector<std::int64_t> right;
};

// Diagonalize w over Z_q, q = p^e, tracking row operations in u and column
// operations in v so that (original w) = u * (final w) * v mod q. Pivots are
// chosen with minimal p-valuation, which makes every remaining entry a ring
// multiple of the pivot.
LocalPart local_decompose(std::vector<std::int64_t> w, std::size_t rows, std::size_t cols,
                          const PrimePower& pp) {
    const std::int64_t p = pp.p, e = pp.e, q = pp.q;
    auto valuation = [&](std::int64_t x) {
        if (x == 0)
            return e;
        std::int64_t v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    auto wat = [&](std::size_t i, std::size_t j) -> std::int64_t& { return w[i * cols + j]; };

    std::vector<std::int64_t> u(rows * rows, 0), v(cols * cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        u[i * rows + i] = 1;
    for (std::size_t j = 0; j < cols; ++j)
        v[j * cols + j] = 1;

    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t bi = t, bj = t;
        std::int64_t best = e;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                std::int64_t val = valuation(wat(i, j));
                if (val < best) {
                    best = val;
                    bi = i;
                    bj = j;
                }
            }
        if (best == e)
            break; // remaining block is zero mod q

        if (bi != t) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(wat(t, j), wat(bi, j));
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(u[i * rows + t], u[i * rows + bi]);
        }
        if (bj != t) {
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(wat(i, t), wat(i, bj));
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(v[t * cols + j], v[bj * cols + j]);
        }

        std::int64_t pv = 1;
        for (std::int64_t k = 0; k < best; ++k)
            pv *= p;
        std::int64_t unit_inv = mod_inverse(wat(t, t) / pv, q);

        for (std::size_t i = t + 1; i < rows; ++i) {
            std::int64_t x = wat(i, t);
            if (x == 0)
                continue;
            std::int64_t f = static_cast<std::int64_t>(
                static_cast<__int128>(x / pv) * unit_inv % q);
            // row_i -= f * row_t; compensate with u.col_t += f * u.col_i.
            for (std::size_t j = 0; j < cols; ++j)
                wat(i, j) = mod_reduce(wat(i, j) - static_cast<std::int64_t>(
                    static_cast<__int128>(f) * wat(t, j) % q), q);
            for (std::size_t k = 0; k < rows; ++k)
                u[k * rows + t] = mod_reduce(u[k * rows + t] + static_cast<std::int64_t>(
                    static_cast<__int128>(f) * u[k * rows + i] % q), q);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            std::int64_t x = wat(t, j);
            if (x == 0)
                continue;
            std::int64_t f = static_cast<std::int64_t>(
                static_cast<__int128>(x / pv) * unit_inv % q);
            // col_j -= f * col_t; compensate with v.row_t += f * v.row_j.
            for (std::size_t i = 0; i < rows; ++i)
                wat(i, j) = mod_reduce(wat(i, j) - static_cast<std::int64_t>(
                    static_cast<__int128>(f) * wat(i, t) % q), q);
            for (std::size_t k = 0; k < cols; ++k)
                v[t * cols + k] = mod_reduce(v[t * cols + k] + static_cast<std::int64_t>(
                    static_cast<__int128>(f) * v[j * cols + k] % q), q);
        }
        ++rank;
    }

    LocalPart part;
    part.q = q;
    part.rank = rank;
    part.left.assign(rows * rank, 0);
    part.right.assign(rank * cols, 0);
    for (std::size_t t = 0; t < rank; ++t) {
        std::int64_t diag = wat(t, t);
        for (std::size_t i = 0; i < rows; ++i)
            part.left[i * rank + t] = static_cast<std::int64_t>(
                static_cast<__int128>(u[i * rows + t]) * diag % q);
        for (std::size_t j = 0; j < cols; ++j)
            part.right[t * cols + j] = v[t * cols + j];
    }
    return part;
}

// x = r1 mod q1, x = r2 mod q2 for coprime q1, q2; result in [0, q1*q2).
std::int64_t crt_pair(std::int64_t r1, std::int64_t q1, std::int64_t r2, std::int64_t q2) {
    std::int64_t inv = mod_inverse(q1 % q2, q2);
    std::int64_t diff = mod_reduce(r2 - r1 % q2, q2);
    std::int64_t t = static_cast<std::int64_t>(static_cast<__int128>(diff) * inv % q2);
    return r1 + q1 * t;
}

} // namespace

bool is_hadamard(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0)
        return false;
    const std::size_t k = m.rows();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (std::abs(std::abs(m.at(i, j)) - 1.0) > tol)
                return false;
    const double gram_tol = static_cast<double>(k) * tol;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t t = 0; t < k; ++t)
                acc += m.at(i, t) * std::conj(m.at(j, t));
            if (i == j) {
                if (std::abs(acc - static_cast<double>(k)) > gram_tol)
                    return false;
            } else if (std::abs(acc) > gram_tol) {
                return false;
            }
        }
    return true;
}

bool is_log_hadamard(const RationalMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        return false;
    const std::size_t k = m.rows();
    const std::int64_t den = m.den();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            CyclotomicSum s = CyclotomicSum::zeros(den);
            for (std::size_t c = 0; c < k; ++c)
                s.counts[mod_reduce(m.num(i, c) - m.num(j, c), den)] += 1;
            if (!root_sum_is_zero(s))
                return false;
        }
    return true;
}

RationalMatrix fourier_log_hadamard(std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("fourier_log_hadamard: order must be >= 1");
    RationalMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k), k);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j)
            m.set_num(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                      mod_reduce(i * j, k));
    return m;
}

RationalMatrix dita4_log(std::int64_t t, std::int64_t N) {
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("dita4_log: denominator must be even and >= 2");
    if (t < 0 || t >= N)
        throw std::invalid_argument("dita4_log: parameter out of range");
    const std::int64_t h = N / 2;
    return RationalMatrix::from_rows(N, {{0, 0, 0, 0},
                                         {0, 0, h, h},
                                         {0, h, h + t, t},
                                         {0, h, t, h + t}});
}

bool verify_decomposition(const IntMatrixModN& m, const IntMatrixModN& l,
                          const IntMatrixModN& a) {
    if (l.modulus() != m.modulus() || a.modulus() != m.modulus())
        throw std::invalid_argument("verify_decomposition: moduli differ");
    if (l.rows() != m.rows() || a.cols() != m.cols() || l.cols() != a.rows())
        throw std::invalid_argument("verify_decomposition: dimension mismatch");
    return l.multiplied_by(a) == m;
}

bool verify_decomposition(const RationalMatrix& h, const IntMatrixModN& l,
                          const IntMatrixModN& a) {
    IntMatrixModN m(h.rows(), h.cols(), h.den());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            m.set(i, j, h.num(i, j));
    return verify_decomposition(m, l, a);
}

ModRankResult mod_rank(const IntMatrixModN& m) {
    const std::int64_t N = m.modulus();
    if (N < 2)
        throw std::invalid_argument("mod_rank: modulus must be >= 2");
    const std::size_t rows = m.rows(), cols = m.cols();

    std::vector<LocalPart> parts;
    std::size_t d = 0;
    for (const PrimePower& pp : factor_prime_powers(N)) {
        std::vector<std::int64_t> w(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                w[i * cols + j] = m.at(i, j) % pp.q;
        parts.push_back(local_decompose(std::move(w), rows, cols, pp));
        d = std::max(d, parts.back().rank);
    }

    // Pad every local factor to width d with zero columns/rows, then lift
    // entry-wise by CRT. Congruence to each local product mod p^e gives
    // congruence to m mod N.
    ModRankResult res;
    res.d = static_cast<std::int64_t>(d);
    res.left = IntMatrixModN(rows, d, N);
    res.right = IntMatrixModN(d, cols, N);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t t = 0; t < d; ++t) {
            std::int64_t val = 0, mod = 1;
            for (const LocalPart& part : parts) {
                std::int64_t local = t < part.rank ? part.left[i * part.rank + t] : 0;
                val = crt_pair(val, mod, local, part.q);
                mod *= part.q;
            }
            res.left.set(i, t, val);
        }
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t j = 0; j < cols; ++j) {
            std::int64_t val = 0, mod = 1;
            for (const LocalPart& part : parts) {
                std::int64_t local = t < part.rank ? part.right[t * cols + j] : 0;
                val = crt_pair(val, mod, local, part.q);
                mod *= part.q;
            }
            res.right.set(t, j, val);
        }

    if (!verify_decomposition(m, res.left, res.right))
        throw std::logic_error("mod_rank: witness failed verification");
    return res;
}

RationalMatrix dephase(const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols(), m.den());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set_num(i, j, m.num(i, j) - m.num(0, j) - m.num(i, 0) + m.num(0, 0));
    return out;
}

namespace {

RationalMatrix permuted_dephased(const RationalMatrix& m, const std::vector<int>& rp,
                                 const std::vector<int>& cp) {
    RationalMatrix out(m.rows(), m.cols(), m.den());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set_num(i, j, m.num(static_cast<std::size_t>(rp[i]),
                                    static_cast<std::size_t>(cp[j])));
    return dephase(out);
}

} // namespace

CanonicalizeResult canonicalize_small(const RationalMatrix& h) {
    if (h.rows() != h.cols() || h.rows() == 0 || h.rows() > 5)
        throw std::invalid_argument("canonicalize_small: order must be 1..5");
    if (!is_log_hadamard(h))
        throw std::invalid_argument("canonicalize_small: input is not log-Hadamard");
    const std::size_t k = h.rows();

    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);

    // Candidate targets, tried in canonical order. For k != 4 the Fourier
    // matrix is the only class; for k = 4 the one-parameter family is
    // scanned by ascending t, so the reported parameter is the minimal
    // representative of its orbit.
    std::vector<std::pair<HadamardKind, RationalMatrix>> targets;
    std::vector<Frac> params;
    if (k == 4) {
        std::int64_t N = h.normalized().den();
        if (N % 2 != 0)
            N *= 2;
        for (std::int64_t t = 0; t < N; ++t) {
            targets.emplace_back(HadamardKind::Dita4, dita4_log(t, N).normalized());
            params.push_back(reduced_frac(t, N));
        }
    } else {
        targets.emplace_back(HadamardKind::Fourier,
                             fourier_log_hadamard(static_cast<std::int64_t>(k)).normalized());
        params.push_back(Frac{0, 1});
    }

    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        std::vector<int> rp = id;
        do {
            std::vector<int> cp = id;
            do {
                if (permuted_dephased(h, rp, cp).normalized() == targets[ti].second) {
                    CanonicalizeResult res;
                    res.kind = targets[ti].first;
                    res.dita_param = params[ti];
                    res.row_perm = rp;
                    res.col_perm = cp;
                    return res;
                }
            } while (std::next_permutation(cp.begin(), cp.end()));
        } while (std::next_permutation(rp.begin(), rp.end()));
    }

    CanonicalizeResult res;
    res.kind = HadamardKind::None;
    res.row_perm = id;
    res.col_perm = id;
    return res;
}

} // namespace spectile
