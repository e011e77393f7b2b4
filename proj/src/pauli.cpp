#include "mermin/pauli.hpp"

#include <array>

namespace mermin {

Pauli::Pauli(gf2::BitVector x_part, gf2::BitVector z_part, int sign)
    : x_(std::move(x_part)), z_(std::move(z_part)), sign_(sign) {
    if (x_.length() != z_.length()) {
        throw std::invalid_argument("Pauli: x and z parts must have equal length");
    }
    if (sign_ != +1 && sign_ != -1) {
        throw std::invalid_argument("Pauli: sign must be +1 or -1");
    }
}

Pauli Pauli::identity(std::size_t n) {
    return Pauli(gf2::BitVector::zero(n), gf2::BitVector::zero(n), +1);
}

Pauli Pauli::parse(std::string_view text) {
    std::size_t pos = 0;
    int sign = +1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1 : +1;
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("Pauli string is empty at column " + std::to_string(pos + 1));
    }
    std::uint32_t x = 0, z = 0;
    std::size_t n = 0;
    for (; pos < text.size(); ++pos, ++n) {
        switch (text[pos]) {
            case 'I': break;
            case 'X': x |= 1u << n; break;
            case 'Z': z |= 1u << n; break;
            case 'Y': x |= 1u << n; z |= 1u << n; break;
            default:
                throw ParseError(std::string("illegal character '") + text[pos] +
                                 "' in Pauli string at column " + std::to_string(pos + 1));
        }
    }
    return Pauli(gf2::BitVector(n, x), gf2::BitVector(n, z), sign);
}

char Pauli::letter(std::size_t qubit) const {
    const int x = x_[qubit], z = z_[qubit];
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

Pauli Pauli::operator*(const Pauli& other) const {
    if (qubits() != other.qubits()) {
        throw std::invalid_argument("Pauli multiply: qubit-count mismatch");
    }
    const int flip = x_.dot(other.z_);  // X letters of *this crossing Z letters of other
    return Pauli(x_ + other.x_, z_ + other.z_, sign_ * other.sign_ * (flip ? -1 : +1));
}

bool Pauli::commutes_with(const Pauli& other) const {
    if (qubits() != other.qubits()) {
        throw std::invalid_argument("Pauli commutes: qubit-count mismatch");
    }
    return (x_.dot(other.z_) ^ other.x_.dot(z_)) == 0;
}

bool Pauli::is_symmetric() const { return x_.dot(z_) == 0; }

gf2::BitVector Pauli::symplectic_point() const {
    if (is_identity()) {
        throw std::domain_error("the identity has no symplectic point");
    }
    return x_.concat(z_);
}

std::string Pauli::letters() const {
    std::string s;
    s.reserve(qubits());
    for (std::size_t i = 0; i < qubits(); ++i) s.push_back(letter(i));
    return s;
}

std::string Pauli::str() const { return (sign_ < 0 ? "-" : "+") + letters(); }

bool Pauli::operator<(const Pauli& other) const {
    if (x_.length() != other.x_.length()) return x_.length() < other.x_.length();
    const gf2::BitVector a = x_.concat(z_), b = other.x_.concat(other.z_);
    if (a != b) return a < b;
    return sign_ > other.sign_;  // +1 before -1
}

PauliMatrix PauliMatrix::identity(std::size_t dimension) {
    std::vector<int> entries(dimension * dimension, 0);
    for (std::size_t i = 0; i < dimension; ++i) entries[i * dimension + i] = 1;
    return PauliMatrix(dimension, std::move(entries));
}

PauliMatrix PauliMatrix::operator*(const PauliMatrix& other) const {
    if (dimension_ != other.dimension_) {
        throw std::invalid_argument("PauliMatrix multiply: dimension mismatch");
    }
    const std::size_t d = dimension_;
    std::vector<int> out(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const int v = entries_[i * d + k];
            if (v == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                out[i * d + j] += v * other.entries_[k * d + j];
            }
        }
    }
    return PauliMatrix(d, std::move(out));
}

PauliMatrix PauliMatrix::transposed() const {
    const std::size_t d = dimension_;
    std::vector<int> out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out[j * d + i] = entries_[i * d + j];
    }
    return PauliMatrix(d, std::move(out));
}

PauliMatrix PauliMatrix::negated() const {
    std::vector<int> out = entries_;
    for (int& e : out) e = -e;
    return PauliMatrix(dimension_, std::move(out));
}

PauliMatrix to_matrix(const Pauli& p) {
    if (p.qubits() > 8) {
        throw std::length_error("to_matrix: more than 8 qubits (matrix would exceed 256x256)");
    }
    static constexpr std::array<std::array<int, 4>, 4> kSingle = {{
        {1, 0, 0, 1},    // I
        {0, 1, 1, 0},    // X
        {1, 0, 0, -1},   // Z
        {0, 1, -1, 0},   // Y = ZX
    }};
    std::vector<int> acc = {p.sign()};
    std::size_t dim = 1;
    for (std::size_t q = 0; q < p.qubits(); ++q) {
        int idx = 0;
        switch (p.letter(q)) {
            case 'I': idx = 0; break;
            case 'X': idx = 1; break;
            case 'Z': idx = 2; break;
            case 'Y': idx = 3; break;
        }
        const auto& m = kSingle[static_cast<std::size_t>(idx)];
        std::vector<int> next(acc.size() * 4);
        const std::size_t nd = dim * 2;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const int v = acc[i * dim + j];
                if (v == 0) continue;
                next[(2 * i) * nd + 2 * j] = v * m[0];
                next[(2 * i) * nd + 2 * j + 1] = v * m[1];
                next[(2 * i + 1) * nd + 2 * j] = v * m[2];
                next[(2 * i + 1) * nd + 2 * j + 1] = v * m[3];
            }
        }
        acc = std::move(next);
        dim = nd;
    }
    return PauliMatrix(dim, std::move(acc));
}

std::vector<Pauli> unsigned_observables(std::size_t n) {
    std::vector<Pauli> out;
    out.reserve((1u << (2 * n)) - 1);
    for (const gf2::BitVector& v : gf2::projective_points(2 * n)) {
        out.emplace_back(v.slice(0, n), v.slice(n, n), +1);
    }
    return out;
}

}  // namespace mermin
