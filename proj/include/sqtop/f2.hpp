#pragma once
// Bit-packed linear algebra over the two-element field: rank, kernels,
// span membership and quotient-space bases with coordinate reduction.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqtop {

class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector unit(std::size_t length, std::size_t index);

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    std::size_t lowest_set() const;  // npos when zero

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    bool dot(const BitVector& other) const;  // mod-2 inner product

    bool operator==(const BitVector&) const = default;

    std::string to_string() const;  // "0110..." for display

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    BitVector& row(std::size_t r) { return data_[r]; }
    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector column(std::size_t c) const;
    std::vector<BitVector> columns() const;

    BitVector apply(const BitVector& v) const;  // matrix * column vector
    BitMatrix transposed() const;

    bool is_zero() const;
    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

std::size_t rank(const BitMatrix& m);

// Basis of the right null space; the free columns are taken in ascending
// index order, so the result is deterministic.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// F2 coefficients expressing target in the span of basis, or nullopt.
std::optional<BitVector> solve_in_span(const std::vector<BitVector>& basis,
                                       const BitVector& target);

// Online row echelon over F2 with a coordinate tag per row. Pivot of a row
// is its lowest set bit.
class F2Echelon {
public:
    // Reduces v against the rows; if nonzero remains, inserts it and
    // returns true. coord travels with the vector through reductions.
    bool insert(BitVector v, BitVector coord);
    // Reduces v in place as far as possible, accumulating the used rows'
    // coords into coord_acc (when non-null).
    void reduce(BitVector& v, BitVector* coord_acc) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<std::size_t, std::pair<BitVector, BitVector>> rows_;
};

// Representatives of span(Z)/span(B) plus reduction to coordinates.
// Representatives are the elements of Z that enlarge span(B); reduce maps
// any vector of span(Z) to its coordinate vector modulo span(B).
class QuotientBasis {
public:
    QuotientBasis() = default;
    QuotientBasis(std::size_t vector_length, const std::vector<BitVector>& z,
                  const std::vector<BitVector>& b);

    const std::vector<BitVector>& representatives() const { return reps_; }
    std::size_t dim() const { return reps_.size(); }
    std::size_t vector_length() const { return vec_len_; }

    BitVector reduce(const BitVector& v) const;

private:
    std::vector<BitVector> reps_;
    F2Echelon ech_;
    std::size_t vec_len_ = 0;
    std::size_t tag_len_ = 0;
};

}  // namespace sqtop
