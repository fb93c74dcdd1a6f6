#include "gysin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gysin::gf2 {

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size())
{
    std::size_t i = 0;
    for (int b : bits)
        set(i++, (b & 1) != 0);
}

BitVec BitVec::unit(std::size_t size, std::size_t index)
{
    BitVec v(size);
    v.set(index);
    return v;
}

bool BitVec::is_zero() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::popcount() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVec::first_set() const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

bool BitVec::dot(const BitVec& other) const noexcept
{
    std::uint64_t acc = 0;
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        acc ^= words_[i] & other.words_[i];
    return (std::popcount(acc) & 1) != 0;
}

BitVec& BitVec::operator^=(const BitVec& other) noexcept
{
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVec::to_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVec BitVec::from_indices(std::size_t size, std::span<const std::size_t> indices)
{
    BitVec v(size);
    for (auto i : indices) {
        if (i >= size)
            throw std::out_of_range("bit index " + std::to_string(i) + " out of range " + std::to_string(size));
        v.flip(i);
    }
    return v;
}

std::string BitVec::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows)
{
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        rows_.emplace_back(r);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Matrix Matrix::from_rows(std::vector<BitVec> rows, std::size_t cols)
{
    Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("row length does not match column count");
    m.rows_ = std::move(rows);
    return m;
}

Matrix Matrix::from_columns(std::span<const BitVec> columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("column length does not match row count");
        for (auto r : columns[c].to_indices())
            m.set(r, c);
    }
    return m;
}

BitVec Matrix::column(std::size_t c) const
{
    BitVec v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

bool Matrix::is_zero() const noexcept
{
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.is_zero(); });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].to_indices())
            t.set(c, r);
    return t;
}

BitVec Matrix::operator*(const BitVec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch: " + std::to_string(cols_) + " vs " +
                                    std::to_string(v.size()));
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(v))
            out.set(r);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product size mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto k : a.row(r).to_indices())
            out.row(r) ^= b.row(k);
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum size mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        out.row(r) ^= b.row(r);
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (const auto& r : rows_)
        os << r.to_string() << '\n';
    return os.str();
}

namespace {

// In-place Gauss-Jordan elimination; returns the pivot column of each leading row.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c))
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[next], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c))
                rows[r] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::vector<BitVec> rows_of(const Matrix& m)
{
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return rows;
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    auto rows = rows_of(m);
    return eliminate(rows, m.cols()).size();
}

Matrix rref(const Matrix& m)
{
    auto rows = rows_of(m);
    eliminate(rows, m.cols());
    return Matrix::from_rows(std::move(rows), m.cols());
}

std::vector<BitVec> kernel_basis(const Matrix& m)
{
    auto rows = rows_of(m);
    const auto pivots = eliminate(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVec v = BitVec::unit(m.cols(), free);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(free))
                v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVec> image_basis(const Matrix& m)
{
    auto rows = rows_of(m);
    const auto pivots = eliminate(rows, m.cols());
    std::vector<BitVec> basis;
    basis.reserve(pivots.size());
    for (auto p : pivots)
        basis.push_back(m.column(p));
    return basis;
}

std::optional<BitVec> solve(const Matrix& m, const BitVec& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                    ", matrix has " + std::to_string(m.rows()) + " rows");
    // Augmented rows [m | b].
    const std::size_t n = m.cols();
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec row(n + 1);
        for (auto c : m.row(r).to_indices())
            row.set(c);
        row.set(n, b.get(r));
        rows.push_back(std::move(row));
    }
    const auto pivots = eliminate(rows, n + 1);
    BitVec x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n)
            return std::nullopt;
        x.set(pivots[i], rows[i].get(n));
    }
    return x;
}

Subspace::Subspace(std::size_t ambient, std::span<const BitVec> spanning) : ambient_(ambient)
{
    for (const auto& v : spanning)
        insert(v);
}

bool Subspace::insert(const BitVec& v)
{
    if (v.size() != ambient_)
        throw std::invalid_argument("subspace insert: vector length " + std::to_string(v.size()) +
                                    " in ambient dimension " + std::to_string(ambient_));
    BitVec r = reduce(v);
    if (r.is_zero())
        return false;
    const std::size_t pivot = r.first_set();
    for (auto& row : basis_)
        if (row.get(pivot))
            row ^= r;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

BitVec Subspace::reduce(BitVec v) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= basis_[i];
    return v;
}

std::optional<BitVec> Subspace::coords(const BitVec& v) const
{
    if (!contains(v))
        return std::nullopt;
    BitVec c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        c.set(i, v.get(pivots_[i]));
    return c;
}

std::vector<std::size_t> Subspace::complement_columns() const
{
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace gysin::gf2
