#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mermin/gf2.hpp"
#include "mermin/polar.hpp"

namespace mermin {

/// Line of PG(3,2): three collinear points, stored lexicographically sorted so
/// the triple itself is the canonical key.
struct Line {
    std::array<gf2::BitVector, 3> points;

    /// The line through two distinct points x, y (third point is x + y).
    static Line through(const gf2::BitVector& x, const gf2::BitVector& y);

    bool contains(const gf2::BitVector& p) const;
    /// The shared point of two distinct intersecting lines, if any.
    std::optional<gf2::BitVector> meet(const Line& other) const;

    bool operator==(const Line& other) const = default;
    bool operator<(const Line& other) const { return points < other.points; }
};

/// All 35 lines of PG(3,2), deterministically ordered.
const std::vector<Line>& pg32_lines();

/// The Klein correspondence: a bijection between the 35 lines of PG(3,2) and
/// the 35 points of Q+(5,2).
///
/// For a line through x and y, with minor(i,j) = x_i y_j + x_j y_i, the image
/// point is (x|z) = (m01, m13, m03 | m23, m02, m12). The component pairing
/// keeps the Pluecker identity m01 m23 + m02 m13 + m03 m12 = 0 literally equal
/// to Q(x|z) = x.z, and it places the standard pentagram's edge images in the
/// concurrent (star) system.
class KleinMap {
public:
    KleinMap();

    /// Pluecker image of a line; independent of the choice of point pair.
    static gf2::BitVector line_to_point(const Line& line);

    /// Inverse lookup; the input must lie on the quadric.
    const Line& point_to_line(const gf2::BitVector& p) const;

private:
    std::map<gf2::BitVector, Line> line_of_;
};

/// Shared immutable instance (the 35-entry table is built once).
const KleinMap& klein_map();

enum class ImageShape {
    Star,   // all image lines pass through one common point
    Ruled,  // all image lines lie in one common plane
};

/// PG(3,2)-image of a set of quadric points: the lines, the detected shape,
/// and the vertex (Star) or carrier plane (Ruled).
struct LineFamily {
    ImageShape shape;
    std::vector<Line> lines;
    std::optional<gf2::BitVector> vertex;   // set iff shape == Star
    std::optional<gf2::Subspace> carrier;   // set iff shape == Ruled
};

/// Image of a generator plane: the seven lines through one point (Star) or the
/// seven lines inside one plane (Ruled). The shape depends only on the
/// generator's system.
LineFamily plane_image(const GeneratorPlane& generator);

/// Image of an affine plane of order two lying on the quadric (four quadric
/// points on a common generator, summing to zero, no three collinear): four
/// concurrent lines no three of which are coplanar, or four coplanar lines no
/// three of which are concurrent, matching the ambient generator's system.
LineFamily affine_image(const std::array<gf2::BitVector, 4>& quadric_points);

}  // namespace mermin
