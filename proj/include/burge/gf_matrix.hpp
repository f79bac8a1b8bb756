#pragma once

// Dense matrices over a prime field GF(p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burge {

class PrimeField {
public:
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        const std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
        return x >= y ? x - y : x + p_ - y;
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{x} * y % p_);
    }
    std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : p_ - x; }
    /// Multiplicative inverse of a nonzero element.
    std::uint32_t inverse(std::uint32_t x) const;
    std::uint32_t reduce(std::int64_t x) const noexcept;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

class MatrixGFp {
public:
    MatrixGFp(PrimeField field, std::size_t rows, std::size_t cols);
    static MatrixGFp identity(PrimeField field, std::size_t n);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }
    /// Stores value mod p.
    void set(std::size_t r, std::size_t c, std::int64_t value);

    MatrixGFp operator*(const MatrixGFp& rhs) const;
    MatrixGFp operator-(const MatrixGFp& rhs) const;
    bool operator==(const MatrixGFp& rhs) const;

    bool is_zero() const noexcept;
    std::size_t rank() const;
    MatrixGFp pow(unsigned k) const;
    /// Inverse when the matrix is square and invertible.
    std::optional<MatrixGFp> inverse() const;
    /// M^n = 0 for n = rows.
    bool is_nilpotent() const;

    std::string str() const;

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

}  // namespace burge
