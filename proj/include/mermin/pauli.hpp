#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mermin/gf2.hpp"

namespace mermin {

/// Raised by the Pauli-string and pentagram-file parsers. The message always
/// carries the offending position (column, or line for documents).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Signed element of the real N-qubit Pauli group, encoded as an x-part and a
/// z-part over GF(2) plus a sign in {+1, -1}.
///
/// Letter decoding per qubit: (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y,
/// where X = sigma_x, Z = sigma_z and Y = ZX = i*sigma_y, all real matrices.
/// A value denotes sign * tensor_i Z^{z_i} X^{x_i}; with this convention the
/// group closes over {+1, -1} (no imaginary phases arise).
class Pauli {
public:
    Pauli(gf2::BitVector x_part, gf2::BitVector z_part, int sign);

    static Pauli identity(std::size_t n);

    /// Parses "['+'|'-'] ('I'|'X'|'Y'|'Z'){n}". The canonical rendering from
    /// str() always carries an explicit sign and uppercase letters.
    static Pauli parse(std::string_view text);

    std::size_t qubits() const { return x_.length(); }
    const gf2::BitVector& x_part() const { return x_; }
    const gf2::BitVector& z_part() const { return z_; }
    int sign() const { return sign_; }
    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    char letter(std::size_t qubit) const;

    /// Group product. The sign rule is sign_p * sign_q * (-1)^(x_p . z_q).
    Pauli operator*(const Pauli& other) const;

    /// True iff the symplectic form x_p.z_q + x_q.z_p vanishes; agrees with
    /// the matrix commutator vanishing.
    bool commutes_with(const Pauli& other) const;

    /// True iff x.z == 0, i.e. the letter Y occurs an even number of times;
    /// equivalent to transpose-invariance of the matrix form.
    bool is_symmetric() const;

    Pauli negated() const { return Pauli(x_, z_, -sign_); }
    Pauli unsigned_rep() const { return Pauli(x_, z_, +1); }

    /// The point of W(5,2) (generally PG(2n-1,2)) attached to a non-identity
    /// observable: the concatenation (x|z). The identity has no image.
    gf2::BitVector symplectic_point() const;

    std::string str() const;
    /// Letters without the sign prefix.
    std::string letters() const;

    bool operator==(const Pauli& other) const = default;
    bool same_observable(const Pauli& other) const { return x_ == other.x_ && z_ == other.z_; }
    bool operator<(const Pauli& other) const;

private:
    gf2::BitVector x_;
    gf2::BitVector z_;
    int sign_ = +1;
};

/// Dense integer matrix with entries in {-1,0,1}; the image of a Pauli
/// observable is a signed permutation matrix. Arithmetic is exact, so this
/// class serves as an independent oracle for the symplectic encoding.
class PauliMatrix {
public:
    static PauliMatrix identity(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }
    int at(std::size_t row, std::size_t col) const { return entries_[row * dimension_ + col]; }

    PauliMatrix operator*(const PauliMatrix& other) const;
    PauliMatrix transposed() const;
    PauliMatrix negated() const;
    bool is_symmetric() const { return *this == transposed(); }

    bool operator==(const PauliMatrix& other) const = default;

private:
    friend PauliMatrix to_matrix(const Pauli& p);
    PauliMatrix(std::size_t dimension, std::vector<int> entries)
        : dimension_(dimension), entries_(std::move(entries)) {}

    std::size_t dimension_ = 0;
    std::vector<int> entries_;
};

/// Kronecker product of the single-qubit matrices I, X=[[0,1],[1,0]],
/// Z=[[1,0],[0,-1]], Y=[[0,1],[-1,0]], scaled by the sign. Requires n <= 8.
PauliMatrix to_matrix(const Pauli& p);

/// All 63 non-identity unsigned three-qubit observables (or 4^n - 1 for
/// general n), ordered by their symplectic points.
std::vector<Pauli> unsigned_observables(std::size_t n);

}  // namespace mermin
