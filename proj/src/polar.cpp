#include "mermin/polar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mermin {

int symplectic_form(const gf2::BitVector& u, const gf2::BitVector& v) {
    if (u.length() != v.length() || u.length() % 2 != 0) {
        throw std::invalid_argument("symplectic_form: vectors must share one even length");
    }
    const std::size_t n = u.length() / 2;
    return u.slice(0, n).dot(v.slice(n, n)) ^ v.slice(0, n).dot(u.slice(n, n));
}

int quadratic_form(const gf2::BitVector& u) {
    if (u.length() % 2 != 0) {
        throw std::invalid_argument("quadratic_form: vector length must be even");
    }
    const std::size_t n = u.length() / 2;
    return u.slice(0, n).dot(u.slice(n, n));
}

FanoPlane FanoPlane::from_subspace(gf2::Subspace s) {
    if (s.dimension() != 3) {
        throw std::invalid_argument("FanoPlane: subspace dimension must be 3");
    }
    std::vector<gf2::BitVector> pts = s.points();
    return FanoPlane{std::move(s), std::move(pts)};
}

const std::vector<FanoPlane>& symplectic_generators() {
    static const std::vector<FanoPlane> planes = [] {
        const std::vector<gf2::BitVector> pts = gf2::projective_points(6);

        // Totally isotropic lines first.
        std::set<gf2::Subspace> lines;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (symplectic_form(pts[i], pts[j]) == 0) {
                    lines.insert(gf2::echelonize(6, {pts[i], pts[j]}));
                }
            }
        }

        // Extend each line by every point orthogonal to it.
        std::set<gf2::Subspace> spaces;
        for (const gf2::Subspace& line : lines) {
            for (const gf2::BitVector& w : pts) {
                if (line.contains(w)) continue;
                bool ortho = true;
                for (const gf2::BitVector& b : line.basis()) {
                    if (symplectic_form(w, b) != 0) {
                        ortho = false;
                        break;
                    }
                }
                if (!ortho) continue;
                std::vector<gf2::BitVector> gens = line.basis();
                gens.push_back(w);
                spaces.insert(gf2::echelonize(6, gens));
            }
        }

        std::vector<FanoPlane> out;
        out.reserve(spaces.size());
        for (const gf2::Subspace& s : spaces) out.push_back(FanoPlane::from_subspace(s));
        return out;
    }();
    return planes;
}

std::size_t intersection_dim(const gf2::Subspace& s, const gf2::Subspace& t) {
    if (s.ambient() != t.ambient()) {
        throw std::invalid_argument("intersection_dim: ambient mismatch");
    }
    std::vector<gf2::BitVector> all = s.basis();
    all.insert(all.end(), t.basis().begin(), t.basis().end());
    const std::size_t joint = gf2::echelonize(s.ambient(), all).dimension();
    return s.dimension() + t.dimension() - joint;
}

namespace {

bool plane_on_quadric(const FanoPlane& plane) {
    return std::all_of(plane.points.begin(), plane.points.end(),
                       [](const gf2::BitVector& p) { return quadratic_form(p) == 0; });
}

}  // namespace

System system_of(const FanoPlane& plane, const GeneratorPlane& reference) {
    if (!plane_on_quadric(plane)) {
        throw std::domain_error("system_of: plane is not a generator of the quadric");
    }
    // Same system <=> projective intersection of even dimension (a point or
    // the whole plane), i.e. vector-space intersection of odd dimension.
    const bool same = intersection_dim(plane.space, reference.plane.space) % 2 == 1;
    return same ? reference.system : other_system(reference.system);
}

Quadric::Quadric() {
    for (const gf2::BitVector& p : gf2::projective_points(6)) {
        if (quadratic_form(p) == 0) points_.push_back(p);
    }
    std::vector<const FanoPlane*> on_quadric;
    for (const FanoPlane& plane : symplectic_generators()) {
        if (plane_on_quadric(plane)) on_quadric.push_back(&plane);
    }
    if (on_quadric.empty()) throw std::logic_error("Quadric: no generator planes found");
    // symplectic_generators() is sorted, so the first hit is the lex-least
    // generator; it anchors label A.
    const GeneratorPlane reference{*on_quadric.front(), System::A};
    for (const FanoPlane* plane : on_quadric) {
        generators_.push_back(GeneratorPlane{*plane, system_of(*plane, reference)});
    }
}

bool Quadric::contains(const gf2::BitVector& p) const {
    if (p.length() != 6) throw std::invalid_argument("Quadric::contains: expected length 6");
    return !p.is_zero() && quadratic_form(p) == 0;
}

std::vector<const GeneratorPlane*> Quadric::generators_in(System s) const {
    std::vector<const GeneratorPlane*> out;
    for (const GeneratorPlane& g : generators_) {
        if (g.system == s) out.push_back(&g);
    }
    return out;
}

System Quadric::system_of(const FanoPlane& plane) const {
    for (const GeneratorPlane& g : generators_) {
        if (g.plane == plane) return g.system;
    }
    throw std::domain_error("system_of: plane is not a generator of the quadric");
}

const Quadric& klein_quadric() {
    static const Quadric q;
    return q;
}

bool collinear(const gf2::BitVector& p, const gf2::BitVector& q, const gf2::BitVector& r) {
    if (p == q || p == r || q == r) {
        throw std::invalid_argument("collinear: points must be distinct");
    }
    return (p + q + r).is_zero();
}

bool coplanar(const std::vector<gf2::BitVector>& points) {
    if (points.size() < 3) {
        throw std::invalid_argument("coplanar: at least 3 points required");
    }
    for (const gf2::BitVector& p : points) {
        if (p.length() != 4) {
            throw std::invalid_argument("coplanar: expected PG(3,2) points (length 4)");
        }
    }
    return gf2::echelonize(4, points).dimension() <= 3;
}

}  // namespace mermin
