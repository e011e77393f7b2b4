#pragma once

#include <cstddef>
#include <vector>

#include "mermin/gf2.hpp"

namespace mermin {

/// Alternating form on GF(2)^{2n} split as (x|z):  x_u.z_v + x_v.z_u mod 2.
/// Vanishes exactly when the corresponding observables commute.
int symplectic_form(const gf2::BitVector& u, const gf2::BitVector& v);

/// Quadratic form Q(x|z) = x.z refining the symplectic space; its zero set in
/// PG(5,2) is the Klein quadric, and Q polarizes to the symplectic form.
int quadratic_form(const gf2::BitVector& u);

/// Plane of PG(5,2) that is totally isotropic for the symplectic form: a Fano
/// plane carrying a maximal pairwise-commuting family of seven observables.
struct FanoPlane {
    gf2::Subspace space;                  // dimension-3 vector subspace of GF(2)^6
    std::vector<gf2::BitVector> points;   // its 7 projective points, sorted

    static FanoPlane from_subspace(gf2::Subspace s);

    bool contains(const gf2::BitVector& p) const { return space.contains(p); }
    bool operator==(const FanoPlane& other) const { return space == other.space; }
    bool operator<(const FanoPlane& other) const { return space < other.space; }
};

enum class System { A, B };

inline System other_system(System s) { return s == System::A ? System::B : System::A; }
inline char system_name(System s) { return s == System::A ? 'A' : 'B'; }

/// Fano plane fully contained in the quadric, tagged with its system label.
struct GeneratorPlane {
    FanoPlane plane;
    System system;
};

/// All maximal totally isotropic planes of W(5,2), in deterministic order.
/// Built by extending totally isotropic lines rather than filtering all
/// 3-subspaces.
const std::vector<FanoPlane>& symplectic_generators();

/// The hyperbolic quadric Q+(5,2): zero set of Q(x|z) = x.z, whose points are
/// the symmetric observables. Its generator planes split into two systems;
/// label A is anchored at the lexicographically least generator.
class Quadric {
public:
    Quadric();

    const std::vector<gf2::BitVector>& points() const { return points_; }
    bool contains(const gf2::BitVector& p) const;

    const std::vector<GeneratorPlane>& generators() const { return generators_; }
    std::vector<const GeneratorPlane*> generators_in(System s) const;

    /// Label of a generator plane, found by identity in the enumerated list.
    System system_of(const FanoPlane& plane) const;

private:
    std::vector<gf2::BitVector> points_;
    std::vector<GeneratorPlane> generators_;
};

/// Shared immutable instance (the enumeration is deterministic).
const Quadric& klein_quadric();

/// Same label as the reference iff the planes meet in a point or coincide;
/// different label iff they are disjoint or share a line. The plane must lie
/// on the quadric.
System system_of(const FanoPlane& plane, const GeneratorPlane& reference);

/// Vector-space dimension of the intersection of two subspaces.
std::size_t intersection_dim(const gf2::Subspace& s, const gf2::Subspace& t);

/// True iff the three distinct points satisfy p + q + r = 0.
bool collinear(const gf2::BitVector& p, const gf2::BitVector& q, const gf2::BitVector& r);

/// PG(3,2): true iff the points span at most a plane (rank <= 3).
bool coplanar(const std::vector<gf2::BitVector>& points);

}  // namespace mermin
