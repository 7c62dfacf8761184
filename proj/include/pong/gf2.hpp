#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pong {

struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v = true)
    {
        if (v)
            w[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }
    BitVec& operator^=(const BitVec& o)
    {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    bool any() const
    {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    size_t popcount() const
    {
        size_t c = 0;
        for (auto x : w) c += size_t(__builtin_popcountll(x));
        return c;
    }
    std::vector<size_t> support() const;
    friend bool operator==(const BitVec& a, const BitVec& b) { return a.n == b.n && a.w == b.w; }
};

// Dense matrix over GF(2) with bit-packed rows.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return row_[r].get(c); }
    void set(size_t r, size_t c, bool v = true) { row_[r].set(c, v); }
    void flip(size_t r, size_t c) { row_[r].flip(c); }
    const BitVec& row(size_t r) const { return row_[r]; }
    BitVec& row(size_t r) { return row_[r]; }

    static GF2Matrix identity(size_t n);
    static GF2Matrix from_columns(size_t rows, const std::vector<BitVec>& cols);

    GF2Matrix transpose() const;
    GF2Matrix operator*(const GF2Matrix& o) const;
    GF2Matrix operator+(const GF2Matrix& o) const;
    BitVec apply(const BitVec& v) const;
    BitVec column(size_t c) const;
    bool is_zero() const;
    friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_; }

    // In-place reduced row echelon form; returns pivot columns in order.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of the null space, one vector per free column of the RREF.
    std::vector<BitVec> kernel() const;
    std::optional<BitVec> solve(const BitVec& b) const;
    std::optional<GF2Matrix> inverse() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_;
};

// Reusable solver for A x = b with many right-hand sides.
class GF2Solver {
public:
    explicit GF2Solver(const GF2Matrix& A);
    std::optional<BitVec> solve(const BitVec& b) const;
    size_t rank() const { return piv_.size(); }
    bool in_image(const BitVec& b) const { return solve(b).has_value(); }

private:
    size_t rows_, cols_;
    GF2Matrix R_;             // rref of A
    GF2Matrix E_;             // E * A = R_
    std::vector<size_t> piv_;
};

// Rank of a sparse GF(2) matrix given by columns (sorted row indices).
size_t sparse_rank(std::vector<std::vector<uint32_t>> cols);

}  // namespace pong
