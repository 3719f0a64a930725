#pragma once

#include <cstdint>
#include <vector>

#include "spectile/group.hpp"
#include "spectile/matrices.hpp"

namespace spectile {

/// True iff every entry has modulus within tol of 1 and M M* = kI, with the
/// off-diagonal (resp. diagonal) entries of M M* within k*tol of 0 (resp. k).
bool is_hadamard(const ComplexMatrix& m, double tol = 1e-9);

/// Exact test that exp(2*pi*i*M) is Hadamard: every pair of distinct rows
/// yields a vanishing sum of den-th roots of unity (cyclotomic divisibility,
/// no floating point).
bool is_log_hadamard(const RationalMatrix& m);

/// The k x k log-Fourier matrix: entry (m, j) = (m*j mod k)/k.
RationalMatrix fourier_log_hadamard(std::int64_t k);

/// The 4x4 one-parameter log-Hadamard family at phase t/N (N even):
/// rows (0,0,0,0), (0,0,1/2,1/2), (0,1/2,1/2+t/N,t/N), (0,1/2,t/N,1/2+t/N).
RationalMatrix dita4_log(std::int64_t t, std::int64_t N);

/// True iff L*A = N*H entry-wise mod N. H must have denominator N and L, A
/// modulus N; throws on dimension or modulus mismatch.
bool verify_decomposition(const RationalMatrix& h, const IntMatrixModN& l,
                          const IntMatrixModN& a);
bool verify_decomposition(const IntMatrixModN& m, const IntMatrixModN& l,
                          const IntMatrixModN& a);

struct ModRankResult {
    std::int64_t d = 0;   // minimal inner dimension
    IntMatrixModN left;   // rows(m) x d
    IntMatrixModN right;  // d x cols(m)
};

/// Minimal d such that m = L*A (mod N) with L of width d and A of height d,
/// together with a witness pair (verified before returning). d is computed
/// per prime power of N by diagonalization over the residue ring and the
/// witnesses are CRT-combined; the zero matrix yields d = 0 with empty
/// factors. Requires modulus >= 2.
ModRankResult mod_rank(const IntMatrixModN& m);

enum class HadamardKind { Fourier, Dita4, None };

struct CanonicalizeResult {
    HadamardKind kind = HadamardKind::None;
    Frac dita_param{0, 1};          // reduced t/N, minimal over the orbit
    std::vector<int> row_perm;      // permuted(i,j) = H(row_perm[i], col_perm[j])
    std::vector<int> col_perm;
};

/// Classify a log-Hadamard matrix of order k <= 5 up to equivalence
/// (dephasing + row/column permutations): Fourier for k in {1,2,3,5},
/// Dita4 with the minimal matching parameter for k = 4. The returned
/// permutations, applied before dephasing, reproduce the canonical form.
/// Throws for k > 5 or an input that is not log-Hadamard.
CanonicalizeResult canonicalize_small(const RationalMatrix& h);

/// Dephased form: first row subtracted from every row, then first column
/// of the result subtracted from every column (entries mod 1).
RationalMatrix dephase(const RationalMatrix& m);

} // namespace spectile
