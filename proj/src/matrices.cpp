#include "spectile/matrices.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spectile {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::int64_t den)
    : rows_(rows), cols_(cols), den_(den), num_(rows * cols, 0) {
    if (den < 1)
        throw std::invalid_argument("RationalMatrix: denominator must be >= 1");
}

RationalMatrix RationalMatrix::from_rows(std::int64_t den,
                                         const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("RationalMatrix: no rows");
    RationalMatrix m(rows.size(), rows[0].size(), den);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("RationalMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.set_num(i, j, rows[i][j]);
    }
    return m;
}

void RationalMatrix::set_num(std::size_t i, std::size_t j, std::int64_t v) {
    num_[i * cols_ + j] = mod_reduce(v, den_);
}

RationalMatrix RationalMatrix::normalized() const {
    std::int64_t g = den_;
    for (std::int64_t v : num_)
        g = std::gcd(g, v);
    if (g <= 1)
        return *this;
    RationalMatrix m(rows_, cols_, den_ / g);
    for (std::size_t k = 0; k < num_.size(); ++k)
        m.num_[k] = num_[k] / g;
    return m;
}

std::vector<std::vector<std::complex<double>>> RationalMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].resize(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            double angle = 2.0 * M_PI * static_cast<double>(num(i, j)) / static_cast<double>(den_);
            out[i][j] = {std::cos(angle), std::sin(angle)};
        }
    }
    return out;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, {0.0, 0.0}) {}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<std::complex<double>>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("ComplexMatrix: no rows");
    ComplexMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ComplexMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

IntMatrixModN::IntMatrixModN(std::size_t rows, std::size_t cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), e_(rows * cols, 0) {
    if (modulus < 1)
        throw std::invalid_argument("IntMatrixModN: modulus must be >= 1");
}

IntMatrixModN IntMatrixModN::from_rows(std::int64_t modulus,
                                       const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("IntMatrixModN: no rows");
    IntMatrixModN m(rows.size(), rows[0].size(), modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("IntMatrixModN: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

void IntMatrixModN::set(std::size_t i, std::size_t j, std::int64_t v) {
    e_[i * cols_ + j] = mod_reduce(v, modulus_);
}

IntMatrixModN IntMatrixModN::multiplied_by(const IntMatrixModN& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrixModN: inner dimensions differ");
    if (modulus_ != rhs.modulus_)
        throw std::invalid_argument("IntMatrixModN: moduli differ");
    IntMatrixModN out(rows_, rhs.cols_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            __int128 acc = 0;
            for (std::size_t t = 0; t < cols_; ++t)
                acc += static_cast<__int128>(at(i, t)) * rhs.at(t, j);
            out.set(i, j, static_cast<std::int64_t>(acc % modulus_));
        }
    return out;
}

} // namespace spectile
