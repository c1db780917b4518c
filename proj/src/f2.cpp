#include "sqtop/f2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace sqtop {

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    assert(i < length_);
    if (value)
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool BitVector::any() const {
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    assert(length_ == other.length_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::dot(const BitVector& other) const {
    assert(length_ == other.length_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c))
            v.set(r);
    return v;
}

std::vector<BitVector> BitMatrix::columns() const {
    std::vector<BitVector> cs;
    cs.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        cs.push_back(column(c));
    return cs;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    assert(v.size() == cols_);
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r);
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c))
                t.set(c, r);
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data_)
        if (r.any())
            return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// surviving row, in ascending order.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t done = 0;
    for (std::size_t c = 0; c < cols && done < rows.size(); ++c) {
        std::size_t r = done;
        while (r < rows.size() && !rows[r].get(c))
            ++r;
        if (r == rows.size())
            continue;
        std::swap(rows[done], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != done && rows[k].get(c))
                rows[k] ^= rows[done];
        pivots.push_back(c);
        ++done;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return rref(rows, m.cols()).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    const auto pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(f))
                v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool F2Echelon::insert(BitVector v, BitVector coord) {
    reduce(v, &coord);
    if (v.none())
        return false;
    const std::size_t pivot = v.lowest_set();
    rows_.emplace(pivot, std::make_pair(std::move(v), std::move(coord)));
    return true;
}

void F2Echelon::reduce(BitVector& v, BitVector* coord_acc) const {
    while (v.any()) {
        auto it = rows_.find(v.lowest_set());
        if (it == rows_.end())
            return;
        v ^= it->second.first;
        if (coord_acc)
            *coord_acc ^= it->second.second;
    }
}

std::optional<BitVector> solve_in_span(const std::vector<BitVector>& basis,
                                       const BitVector& target) {
    for (const auto& b : basis)
        if (b.size() != target.size())
            throw std::invalid_argument("solve_in_span: vector length mismatch");

    F2Echelon ech;
    for (std::size_t i = 0; i < basis.size(); ++i)
        ech.insert(basis[i], BitVector::unit(basis.size(), i));

    BitVector v = target;
    BitVector coord(basis.size());
    ech.reduce(v, &coord);
    if (v.any())
        return std::nullopt;
    return coord;
}

QuotientBasis::QuotientBasis(std::size_t vector_length,
                             const std::vector<BitVector>& z,
                             const std::vector<BitVector>& b)
    : vec_len_(vector_length), tag_len_(z.size()) {
    for (const auto& v : z)
        if (v.size() != vec_len_)
            throw std::invalid_argument("quotient_basis: Z vector length mismatch");
    for (const auto& v : b)
        if (v.size() != vec_len_)
            throw std::invalid_argument("quotient_basis: B vector length mismatch");

    // span(B) must lie inside span(Z).
    F2Echelon zspan;
    for (const auto& v : z)
        zspan.insert(v, BitVector(0));
    for (const auto& v : b) {
        BitVector r = v;
        zspan.reduce(r, nullptr);
        if (r.any())
            throw std::invalid_argument("quotient_basis: B not contained in span(Z)");
    }

    for (const auto& v : b)
        ech_.insert(v, BitVector(tag_len_));
    for (const auto& v : z) {
        BitVector tag(tag_len_);
        tag.set(reps_.size());
        if (ech_.insert(v, std::move(tag)))
            reps_.push_back(v);
    }
}

BitVector QuotientBasis::reduce(const BitVector& v) const {
    if (v.size() != vec_len_)
        throw std::invalid_argument("quotient_basis reduce: length mismatch");
    BitVector r = v;
    BitVector tag(tag_len_);
    ech_.reduce(r, &tag);
    if (r.any())
        throw std::invalid_argument("quotient_basis reduce: vector not in span(Z)");
    BitVector out(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (tag.get(i))
            out.set(i);
    return out;
}

}  // namespace sqtop
