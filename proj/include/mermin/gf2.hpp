#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mermin::gf2 {

/// Vector over GF(2) with a fixed coordinate count, packed into one machine
/// word. Coordinate 0 is the leftmost position in textual form; equality and
/// ordering are coordinatewise (packing is invisible to semantics).
class BitVector {
public:
    BitVector() = default;
    BitVector(std::size_t length, std::uint32_t bits);
    BitVector(std::initializer_list<int> coords);

    static BitVector zero(std::size_t length);

    std::size_t length() const { return length_; }
    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    int operator[](std::size_t i) const;
    int weight() const;

    /// Coordinatewise sum mod 2. Self-inverse: (u + v) + v == u.
    BitVector operator+(const BitVector& other) const;

    /// Inner product sum_i u_i v_i mod 2.
    int dot(const BitVector& other) const;

    BitVector concat(const BitVector& other) const;
    BitVector slice(std::size_t begin, std::size_t count) const;

    bool operator==(const BitVector& other) const = default;
    /// Lexicographic on the coordinate sequence, coordinate 0 first.
    bool operator<(const BitVector& other) const;

    /// "0110"-style rendering, coordinate 0 first.
    std::string str() const;

private:
    std::size_t length_ = 0;
    std::uint32_t bits_ = 0;
};

inline BitVector add(const BitVector& u, const BitVector& v) { return u + v; }
inline int dot(const BitVector& u, const BitVector& v) { return u.dot(v); }

/// Linear subspace of GF(2)^n held as its unique reduced row-echelon basis,
/// so equal subspaces have identical representations. Build via echelonize().
class Subspace {
public:
    static Subspace zero(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }

    /// Membership of v in the span.
    bool contains(const BitVector& v) const;

    /// All 2^dim - 1 nonzero vectors of the span, lexicographically sorted.
    std::vector<BitVector> points() const;

    bool operator==(const Subspace& other) const = default;
    bool operator<(const Subspace& other) const;

private:
    friend Subspace echelonize(std::size_t ambient, const std::vector<BitVector>& vectors);
    Subspace(std::size_t ambient, std::vector<BitVector> basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_ = 0;
    std::vector<BitVector> basis_;
};

/// Reduced row-echelon span of the given vectors (rank = resulting dimension).
/// An empty input yields the zero subspace of the given ambient length.
Subspace echelonize(std::size_t ambient, const std::vector<BitVector>& vectors);

inline std::vector<BitVector> span_points(const Subspace& s) { return s.points(); }

/// All nonzero vectors of GF(2)^length in lexicographic order; these are the
/// points of PG(length-1, 2) under the unique-representative identification.
std::vector<BitVector> projective_points(std::size_t length);

}  // namespace mermin::gf2
