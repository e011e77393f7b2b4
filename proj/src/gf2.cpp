#include "mermin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mermin::gf2 {

namespace {

constexpr std::size_t kMaxLength = 31;

void check_same_length(const BitVector& u, const BitVector& v, const char* op) {
    if (u.length() != v.length()) {
        throw std::invalid_argument(std::string(op) + ": length mismatch (" +
                                    std::to_string(u.length()) + " vs " +
                                    std::to_string(v.length()) + ")");
    }
}

}  // namespace

BitVector::BitVector(std::size_t length, std::uint32_t bits) : length_(length), bits_(bits) {
    if (length > kMaxLength) {
        throw std::length_error("BitVector length " + std::to_string(length) + " exceeds capacity");
    }
    if (length < 32 && (bits >> length) != 0) {
        throw std::invalid_argument("BitVector: bits outside the declared length");
    }
}

BitVector::BitVector(std::initializer_list<int> coords) : length_(coords.size()) {
    if (length_ > kMaxLength) {
        throw std::length_error("BitVector length exceeds capacity");
    }
    std::size_t i = 0;
    for (int c : coords) {
        if (c != 0 && c != 1) throw std::invalid_argument("BitVector: coordinates must be 0 or 1");
        bits_ |= static_cast<std::uint32_t>(c) << i++;
    }
}

BitVector BitVector::zero(std::size_t length) { return BitVector(length, 0); }

int BitVector::operator[](std::size_t i) const {
    if (i >= length_) throw std::out_of_range("BitVector: coordinate index out of range");
    return static_cast<int>((bits_ >> i) & 1u);
}

int BitVector::weight() const { return std::popcount(bits_); }

BitVector BitVector::operator+(const BitVector& other) const {
    check_same_length(*this, other, "add");
    return BitVector(length_, bits_ ^ other.bits_);
}

int BitVector::dot(const BitVector& other) const {
    check_same_length(*this, other, "dot");
    return std::popcount(bits_ & other.bits_) & 1;
}

BitVector BitVector::concat(const BitVector& other) const {
    if (length_ + other.length_ > kMaxLength) {
        throw std::length_error("BitVector: concatenation exceeds capacity");
    }
    return BitVector(length_ + other.length_, bits_ | (other.bits_ << length_));
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > length_) throw std::out_of_range("BitVector: slice out of range");
    std::uint32_t mask = (count >= 32) ? ~0u : ((1u << count) - 1u);
    return BitVector(count, (bits_ >> begin) & mask);
}

bool BitVector::operator<(const BitVector& other) const {
    if (length_ != other.length_) return length_ < other.length_;
    for (std::size_t i = 0; i < length_; ++i) {
        int a = (*this)[i], b = other[i];
        if (a != b) return a < b;
    }
    return false;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) s[i] = (*this)[i] ? '1' : '0';
    return s;
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}); }

bool Subspace::contains(const BitVector& v) const {
    if (v.length() != ambient_) {
        throw std::invalid_argument("Subspace::contains: length mismatch");
    }
    std::uint32_t r = v.bits();
    for (const BitVector& row : basis_) {
        std::uint32_t pivot = row.bits() & ~(row.bits() - 1);  // lowest set bit
        if (r & pivot) r ^= row.bits();
    }
    return r == 0;
}

std::vector<BitVector> Subspace::points() const {
    std::vector<BitVector> out;
    const std::size_t d = basis_.size();
    out.reserve((1u << d) - 1);
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (mask & (1u << i)) v ^= basis_[i].bits();
        }
        out.emplace_back(ambient_, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Subspace::operator<(const Subspace& other) const {
    if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
    return std::lexicographical_compare(basis_.begin(), basis_.end(), other.basis_.begin(),
                                        other.basis_.end());
}

Subspace echelonize(std::size_t ambient, const std::vector<BitVector>& vectors) {
    std::vector<std::uint32_t> rows;
    rows.reserve(vectors.size());
    for (const BitVector& v : vectors) {
        if (v.length() != ambient) {
            throw std::invalid_argument("echelonize: vector length differs from ambient length");
        }
        rows.push_back(v.bits());
    }
    std::vector<std::uint32_t> basis;
    for (std::size_t col = 0; col < ambient; ++col) {
        const std::uint32_t bit = 1u << col;
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::uint32_t row = rows[pivot];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (std::uint32_t& r : rows) {
            if (r & bit) r ^= row;
        }
        for (std::uint32_t& b : basis) {
            if (b & bit) b ^= row;
        }
        basis.push_back(row);
    }
    std::vector<BitVector> rref;
    rref.reserve(basis.size());
    for (std::uint32_t b : basis) rref.emplace_back(ambient, b);
    return Subspace(ambient, std::move(rref));
}

std::vector<BitVector> projective_points(std::size_t length) {
    std::vector<BitVector> out;
    out.reserve((1u << length) - 1);
    for (std::uint32_t v = 1; v < (1u << length); ++v) out.emplace_back(length, v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mermin::gf2
