#pragma once

#include "skcat/grading.hpp"

namespace skcat {

/* A derivation of a Schurian category is determined by one scalar per
 * off-diagonal basis morphism: d(e) = lambda_e e, d(identity) = 0. */
struct Derivation {
    Field field;
    std::vector<Scalar> lambda; // per edge
};

// One row per nonzero composite: lambda_h - lambda_g - lambda_f for
// triangles, lambda_g + lambda_f for identity-valued composites.  Zero
// composites impose nothing.
Mat derivation_constraints(const SchurianCategory& cat, Field field);

// Basis of the space of derivations (nullspace of the constraints).
std::vector<Derivation> derivation_space(const SchurianCategory& cat, Field field);

// d_a(e) = (a_t - a_s) e for a scalar a per object.
Derivation inner_derivation(const SchurianCategory& cat, const std::vector<Scalar>& a);

// Componentwise commutator; identically zero here since derivations act
// diagonally on one-dimensional hom spaces.
Derivation lie_bracket(const Derivation& d1, const Derivation& d2);

/* HH^1 = derivations / inner derivations, with deterministic coset
 * representatives pivoted out of the derivation-space basis. */
struct Hh1Space {
    Field field;
    std::vector<Derivation> derivation_basis;
    std::vector<Derivation> inner_basis; // maximal independent inner set
    std::vector<Derivation> coset_basis; // representatives of a basis of HH^1

    std::size_t dim() const { return coset_basis.size(); }
};

Hh1Space hh1(const SchurianCategory& cat, Field field);

// Coordinates of a derivation's class in the coset basis.
std::vector<Scalar> coset_coordinates(const Hh1Space& space, const Derivation& d);

/* Abelian character of pi1: scalar per generator, killing every relator. */
struct Character {
    std::shared_ptr<const GroupPresentation> presentation;
    Field field;
    std::vector<Scalar> values; // per generator
};

Scalar evaluate_character(const Character& chi, const Word& w);

// The Eulerian derivation h(chi): lambda_e = chi(universal degree of e),
// evaluated additively on the tree-conjugated loop word.
Derivation hurewicz_derivation(const SchurianCategory& cat, const Character& chi);

struct HurewiczReport {
    std::size_t dim_characters = 0;
    std::size_t dim_hh1 = 0;
    std::size_t image_rank = 0;
    bool isomorphism = false;
    std::vector<std::vector<Scalar>> image_in_coset_coordinates; // per character basis vector
};

// Checks that characters -> HH^1 is bijective: equal dimensions and a
// full-rank image matrix of a character basis.
HurewiczReport verify_hurewicz_iso(const SchurianCategory& cat, Field field, int base);

} // namespace skcat
