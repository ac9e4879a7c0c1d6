#pragma once

#include "skcat/category.hpp"
#include "skcat/matrix.hpp"

namespace skcat {

/* 2-cell of CW(C).  Triangles come from a composable pair (g, f) with
 * nonzero off-diagonal composite h and boundary walk h^-1 g f; bigons from
 * a pair composing to a nonzero multiple of an identity, boundary g f. */
struct TwoCell {
    bool bigon = false;
    int edge_f = -1;
    int edge_g = -1;
    int edge_h = -1; // composite edge; -1 for bigons
};

/* The CW-complex attached to a Schurian category: one vertex per object,
 * one oriented 1-cell per off-diagonal nonzero hom space, 2-cells from
 * nonzero composites.  Coincides with its 2-skeleton. */
class CwComplex {
public:
    CwComplex(std::vector<std::string> vertex_names, std::vector<BasisMorphism> edges,
              std::vector<TwoCell> cells);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }

    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<BasisMorphism>& edges() const { return edges_; }
    const std::vector<TwoCell>& cells() const { return cells_; }

    bool is_connected() const;

    // Boundary walk of a 2-cell as a closed walk (triangle: h^-1 g f at
    // s(f); bigon: g f at s(f)).
    Walk boundary_walk(int cell) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<BasisMorphism> edges_;
    std::vector<TwoCell> cells_;
};

// Edge ids of the complex coincide with the category's edge ids.
CwComplex build_cw(const SchurianCategory& cat);

long long euler_characteristic(const CwComplex& cw);

// d1(edge) = target - source.
IntMat boundary1(const CwComplex& cw);
// d2(cell) = +g + f - h for triangles, +g + f for bigons.
IntMat boundary2(const CwComplex& cw);

struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion; // d1 | d2 | ..., each >= 2
    bool operator==(const AbelianInvariants&) const = default;
};

// H1 = ker d1 / im d2 over Z, via Smith normal form.
AbelianInvariants cellular_homology_h1(const CwComplex& cw);

// dim_k of ker(transpose d2) / im(transpose d1).
std::size_t cohomology_dim_h1(const CwComplex& cw, Field field);

} // namespace skcat
