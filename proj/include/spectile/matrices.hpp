#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace spectile {

/// Matrix of rationals taken mod 1 with a common denominator: entry (i,j)
/// is num(i,j)/den with 0 <= num < den. The log-Hadamard candidate
/// representation.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols, std::int64_t den);

    static RationalMatrix from_rows(std::int64_t den,
                                    const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t den() const { return den_; }

    std::int64_t num(std::size_t i, std::size_t j) const { return num_[i * cols_ + j]; }
    void set_num(std::size_t i, std::size_t j, std::int64_t v);

    /// Same matrix with the smallest common denominator.
    RationalMatrix normalized() const;

    /// Entry-wise exp(2*pi*i*entry).
    std::vector<std::vector<std::complex<double>>> to_complex() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::int64_t den_ = 1;
    std::vector<std::int64_t> num_;
};

/// Complex matrix with floating entries.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix from_rows(const std::vector<std::vector<std::complex<double>>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::complex<double> at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::complex<double> v) { e_[i * cols_ + j] = v; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::complex<double>> e_;
};

/// Integer matrix with entries reduced mod N.
class IntMatrixModN {
public:
    IntMatrixModN() = default;
    IntMatrixModN(std::size_t rows, std::size_t cols, std::int64_t modulus);

    static IntMatrixModN from_rows(std::int64_t modulus,
                                   const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t modulus() const { return modulus_; }

    std::int64_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v);

    IntMatrixModN multiplied_by(const IntMatrixModN& rhs) const;

    friend bool operator==(const IntMatrixModN&, const IntMatrixModN&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> e_;
};

} // namespace spectile
