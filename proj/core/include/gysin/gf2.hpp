// Exact linear algebra over the two-element field.
//
// Vectors are packed 64 bits per word. Matrices are stored as a list of row
// vectors and act on column vectors: (m * v)[i] = parity(row_i & v).
// All eliminations use a fixed pivot order (leftmost column, first available
// row) so every derived basis is reproducible.

#ifndef GYSIN_GF2_HPP
#define GYSIN_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gysin::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    BitVec(std::initializer_list<int> bits);

    static BitVec unit(std::size_t size, std::size_t index);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    // Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const noexcept;
    bool dot(const BitVec& other) const noexcept;

    BitVec& operator^=(const BitVec& other) noexcept;
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) noexcept { return lhs ^= rhs; }
    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) noexcept
    {
        return a.to_indices() <=> b.to_indices();
    }

    std::vector<std::size_t> to_indices() const;
    static BitVec from_indices(std::size_t size, std::span<const std::size_t> indices);
    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVec(cols)), cols_(cols) {}
    Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::vector<BitVec> rows, std::size_t cols);
    static Matrix from_columns(std::span<const BitVec> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
    const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }
    BitVec& row(std::size_t r) noexcept { return rows_[r]; }
    BitVec column(std::size_t c) const;

    bool is_zero() const noexcept;
    Matrix transpose() const;

    BitVec operator*(const BitVec& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::vector<BitVec> rows_;
    std::size_t cols_ = 0;
};

std::size_t rank(const Matrix& m);
Matrix rref(const Matrix& m);
std::vector<BitVec> kernel_basis(const Matrix& m);
std::vector<BitVec> image_basis(const Matrix& m);
// Some x with m * x = b, or nullopt when b is outside the column space.
// Free variables are set to zero. Throws std::invalid_argument on a size mismatch.
std::optional<BitVec> solve(const Matrix& m, const BitVec& b);

// A subspace of GF(2)^n held as the reduced row echelon form of a spanning set.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    Subspace(std::size_t ambient, std::span<const BitVec> spanning);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<BitVec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // Adds v; returns false when v was already in the span.
    bool insert(const BitVec& v);
    // Normal form of v modulo the subspace: zero at every pivot column.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
    // Coordinates of a member in the rref basis; nullopt for non-members.
    std::optional<BitVec> coords(const BitVec& v) const;
    // Non-pivot columns; the matching unit vectors span a complement.
    std::vector<std::size_t> complement_columns() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    std::size_t ambient_;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace gysin::gf2

#endif  // GYSIN_GF2_HPP
