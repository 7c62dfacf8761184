#include "pong/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pong {

std::vector<size_t> BitVec::support() const
{
    std::vector<size_t> out;
    for (size_t b = 0; b < w.size(); ++b) {
        uint64_t x = w[b];
        while (x) {
            int t = __builtin_ctzll(x);
            out.push_back(b * 64 + size_t(t));
            x &= x - 1;
        }
    }
    return out;
}

GF2Matrix::GF2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

GF2Matrix GF2Matrix::identity(size_t n)
{
    GF2Matrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.set(i, i);
    return I;
}

GF2Matrix GF2Matrix::from_columns(size_t rows, const std::vector<BitVec>& cols)
{
    GF2Matrix M(rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r : cols[c].support()) M.set(r, c);
    return M;
}

GF2Matrix GF2Matrix::transpose() const
{
    GF2Matrix T(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c : row_[r].support()) T.set(c, r);
    return T;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("GF2Matrix shape mismatch");
    GF2Matrix P(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k : row_[r].support()) P.row_[r] ^= o.row_[k];
    return P;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GF2Matrix shape mismatch");
    GF2Matrix S = *this;
    for (size_t r = 0; r < rows_; ++r) S.row_[r] ^= o.row_[r];
    return S;
}

BitVec GF2Matrix::apply(const BitVec& v) const
{
    if (v.n != cols_) throw std::invalid_argument("GF2Matrix shape mismatch");
    BitVec out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const auto& rw = row_[r].w;
        for (size_t b = 0; b < rw.size(); ++b) acc ^= rw[b] & v.w[b];
        if (__builtin_popcountll(acc) & 1) out.set(r);
    }
    return out;
}

BitVec GF2Matrix::column(size_t c) const
{
    BitVec out(rows_);
    for (size_t r = 0; r < rows_; ++r)
        if (get(r, c)) out.set(r);
    return out;
}

bool GF2Matrix::is_zero() const
{
    for (auto& r : row_)
        if (r.any()) return false;
    return true;
}

std::vector<size_t> GF2Matrix::rref()
{
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && !row_[p].get(c)) ++p;
        if (p == rows_) continue;
        std::swap(row_[p], row_[r]);
        for (size_t q = 0; q < rows_; ++q)
            if (q != r && row_[q].get(c)) row_[q] ^= row_[r];
        piv.push_back(c);
        ++r;
    }
    return piv;
}

size_t GF2Matrix::rank() const
{
    // forward elimination only
    std::vector<BitVec> rows = row_;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t q = r + 1; q < rows.size(); ++q)
            if (rows[q].get(c)) rows[q] ^= rows[r];
        ++r;
    }
    return r;
}

std::vector<BitVec> GF2Matrix::kernel() const
{
    GF2Matrix R = *this;
    auto piv = R.rref();
    std::vector<bool> is_piv(cols_, false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<BitVec> out;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        BitVec v(cols_);
        v.set(f);
        for (size_t i = 0; i < piv.size(); ++i)
            if (R.get(i, f)) v.set(piv[i]);
        out.push_back(v);
    }
    return out;
}

std::optional<BitVec> GF2Matrix::solve(const BitVec& b) const { return GF2Solver(*this).solve(b); }

std::optional<GF2Matrix> GF2Matrix::inverse() const
{
    if (rows_ != cols_) return std::nullopt;
    size_t n = rows_;
    GF2Matrix A = *this, I = identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && !A.row_[p].get(c)) ++p;
        if (p == n) return std::nullopt;
        std::swap(A.row_[p], A.row_[c]);
        std::swap(I.row_[p], I.row_[c]);
        for (size_t q = 0; q < n; ++q)
            if (q != c && A.row_[q].get(c)) {
                A.row_[q] ^= A.row_[c];
                I.row_[q] ^= I.row_[c];
            }
    }
    return I;
}

GF2Solver::GF2Solver(const GF2Matrix& A) : rows_(A.rows()), cols_(A.cols()), R_(A), E_(GF2Matrix::identity(A.rows()))
{
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && !R_.row(p).get(c)) ++p;
        if (p == rows_) continue;
        std::swap(R_.row(p), R_.row(r));
        std::swap(E_.row(p), E_.row(r));
        for (size_t q = 0; q < rows_; ++q)
            if (q != r && R_.row(q).get(c)) {
                R_.row(q) ^= R_.row(r);
                E_.row(q) ^= E_.row(r);
            }
        piv_.push_back(c);
        ++r;
    }
}

std::optional<BitVec> GF2Solver::solve(const BitVec& b) const
{
    if (b.n != rows_) throw std::invalid_argument("GF2Solver shape mismatch");
    BitVec eb = E_.apply(b);
    for (size_t i = piv_.size(); i < rows_; ++i)
        if (eb.get(i)) return std::nullopt;
    BitVec x(cols_);
    for (size_t i = 0; i < piv_.size(); ++i)
        if (eb.get(i)) x.set(piv_[i]);
    return x;
}

size_t sparse_rank(std::vector<std::vector<uint32_t>> cols)
{
    // Column reduction keyed on the lowest (largest) row index.
    std::unordered_map<uint32_t, size_t> pivot_of;
    pivot_of.reserve(cols.size() * 2);
    size_t rank = 0;
    std::vector<uint32_t> tmp;
    for (size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        std::sort(col.begin(), col.end());
        // cancel duplicates
        size_t w = 0;
        for (size_t r = 0; r < col.size();) {
            size_t e = r;
            while (e < col.size() && col[e] == col[r]) ++e;
            if ((e - r) & 1) col[w++] = col[r];
            r = e;
        }
        col.resize(w);
        while (!col.empty()) {
            auto it = pivot_of.find(col.back());
            if (it == pivot_of.end()) break;
            const auto& other = cols[it->second];
            tmp.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(tmp));
            col.swap(tmp);
        }
        if (!col.empty()) {
            pivot_of[col.back()] = c;
            ++rank;
        }
    }
    return rank;
}

}  // namespace pong
