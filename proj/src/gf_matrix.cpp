#include "burge/gf_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burge {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) +
                                    " is not a prime below 2^31");
}

std::uint32_t PrimeField::inverse(std::uint32_t x) const {
    if (x % p_ == 0) throw std::domain_error("zero has no inverse");
    // Fermat: x^(p-2).
    std::uint64_t result = 1, base = x % p_;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::reduce(std::int64_t x) const noexcept {
    const std::int64_t m = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
}

MatrixGFp::MatrixGFp(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGFp MatrixGFp::identity(PrimeField field, std::size_t n) {
    MatrixGFp m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void MatrixGFp::set(std::size_t r, std::size_t c, std::int64_t value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    data_[r * cols_ + c] = field_.reduce(value);
}

MatrixGFp MatrixGFp::operator*(const MatrixGFp& rhs) const {
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
        throw std::invalid_argument("matrix product shape or field mismatch");
    MatrixGFp out(field_, rows_, rhs.cols_);
    const std::uint64_t p = field_.modulus();
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t t = 0; t < cols_; ++t) {
            const std::uint64_t a = data_[i * cols_ + t];
            if (a == 0) continue;
            const std::uint32_t* row = &rhs.data_[t * rhs.cols_];
            for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p;
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.data_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
    return out;
}

MatrixGFp MatrixGFp::operator-(const MatrixGFp& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_))
        throw std::invalid_argument("matrix difference shape or field mismatch");
    MatrixGFp out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

bool MatrixGFp::operator==(const MatrixGFp& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool MatrixGFp::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t MatrixGFp::rank() const {
    std::vector<std::uint32_t> m(data_);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * cols_),
                             m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols_),
                             m.begin() + static_cast<std::ptrdiff_t>(rank * cols_));
        const std::uint32_t inv = field_.inverse(m[rank * cols_ + c]);
        for (std::size_t j = c; j < cols_; ++j) m[rank * cols_ + j] = field_.mul(m[rank * cols_ + j], inv);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            const std::uint32_t factor = m[r * cols_ + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                m[r * cols_ + j] = field_.sub(m[r * cols_ + j], field_.mul(factor, m[rank * cols_ + j]));
        }
        ++rank;
    }
    return rank;
}

MatrixGFp MatrixGFp::pow(unsigned k) const {
    if (!square()) throw std::invalid_argument("power of a non-square matrix");
    MatrixGFp result = identity(field_, rows_);
    MatrixGFp base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) result = result * base;
        if (k > 1) base = base * base;
    }
    return result;
}

std::optional<MatrixGFp> MatrixGFp::inverse() const {
    if (!square()) return std::nullopt;
    const std::size_t n = rows_;
    MatrixGFp a = *this;
    MatrixGFp inv = identity(field_, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.data_[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.data_[pivot * n + j], a.data_[c * n + j]);
            std::swap(inv.data_[pivot * n + j], inv.data_[c * n + j]);
        }
        const std::uint32_t s = field_.inverse(a.data_[c * n + c]);
        for (std::size_t j = 0; j < n; ++j) {
            a.data_[c * n + j] = field_.mul(a.data_[c * n + j], s);
            inv.data_[c * n + j] = field_.mul(inv.data_[c * n + j], s);
        }
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t factor = a.data_[r * n + c];
            if (r == c || factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.data_[r * n + j] = field_.sub(a.data_[r * n + j], field_.mul(factor, a.data_[c * n + j]));
                inv.data_[r * n + j] =
                    field_.sub(inv.data_[r * n + j], field_.mul(factor, inv.data_[c * n + j]));
            }
        }
    }
    return inv;
}

bool MatrixGFp::is_nilpotent() const {
    if (!square()) return false;
    return pow(static_cast<unsigned>(rows_)).is_zero();
}

std::string MatrixGFp::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << '\n';
    }
    return os.str();
}

}  // namespace burge
