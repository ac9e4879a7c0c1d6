#pragma once

#include <memory>
#include <variant>

#include "skcat/presentation.hpp"

namespace skcat {

/* Finite group given by element names and a multiplication table;
 * table[i][j] is the index of the product of elements i and j. */
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int q);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int element_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    int identity_ = -1;
    std::vector<int> inverse_;
};

/* Finitely generated abelian group Z^rank x prod Z/torsion[i]; elements are
 * integer vectors of length rank + torsion.size() with torsion coordinates
 * reduced into [0, m). */
struct FgAbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;

    int dim() const { return rank + static_cast<int>(torsion.size()); }
    bool is_finite() const { return rank == 0; }
    std::vector<Int> normalized(std::vector<Int> v) const;
};

// An element: finite index, abelian vector, or free word (presented kind).
using GroupElt = std::variant<int, std::vector<Int>, Word>;

/* Grading target group.  Finite and abelian kinds have decidable equality;
 * presented kinds decide equality only by free reduction plus literal
 * relator match, and raise otherwise. */
class GradingGroup {
public:
    enum class Kind { Finite, Abelian, Presented };

    static GradingGroup finite(FiniteGroup g);
    static GradingGroup abelian(FgAbelianGroup g);
    static GradingGroup presented(std::shared_ptr<const GroupPresentation> p);

    Kind kind() const { return kind_; }
    const FiniteGroup& finite_group() const;
    const FgAbelianGroup& abelian_group() const;
    const GroupPresentation& presentation() const;
    std::shared_ptr<const GroupPresentation> presentation_ptr() const;

    GroupElt identity() const;
    GroupElt mul(const GroupElt& a, const GroupElt& b) const;
    GroupElt inv(const GroupElt& a) const;
    bool equal(const GroupElt& a, const GroupElt& b) const;
    bool is_identity(const GroupElt& a) const { return equal(a, identity()); }

    // Shape/range validation plus canonical form (abelian reduction).
    GroupElt normalized(GroupElt e) const;

    std::string format(const GroupElt& e) const;
    GroupElt parse_element(const std::string& text) const;

    // True when the element set can be materialized: finite tables and
    // rank-0 abelian groups.
    bool finitely_enumerable() const;
    std::vector<GroupElt> elements() const;

private:
    Kind kind_ = Kind::Finite;
    std::shared_ptr<const FiniteGroup> finite_;
    std::shared_ptr<const FgAbelianGroup> abelian_;
    std::shared_ptr<const GroupPresentation> presented_;
};

/* A grading: one group element per off-diagonal basis morphism (identities
 * implicitly have degree 1).  The grading law is checked by check_grading,
 * not by the constructor. */
class Grading {
public:
    Grading(GradingGroup group, std::vector<GroupElt> degree_per_edge);

    const GradingGroup& group() const { return group_; }
    const GroupElt& degree(int edge) const { return degrees_.at(edge); }
    int edge_count() const { return static_cast<int>(degrees_.size()); }

private:
    GradingGroup group_;
    std::vector<GroupElt> degrees_;
};

Grading trivial_grading(const SchurianCategory& cat);

// Violations of deg(g) deg(f) = deg(g f) over nonzero composites (bigons
// demand deg(g) deg(f) = 1).  Empty result = valid grading.
std::vector<std::string> check_grading(const SchurianCategory& cat, const Grading& x);

// Ordered product of step degrees, rightmost (first-traversed) step first;
// -1 steps contribute inverses.
GroupElt walk_degree(const Grading& x, const Walk& w);

SpanningTree spanning_tree(const SchurianCategory& cat, int base);

// Subgroup-of-loop-degrees criterion: the degrees of the tree-conjugated
// edge loops generate the whole group iff the grading is connected (for a
// connected category).
bool is_connected_grading(const SchurianCategory& cat, const Grading& x, int base);

struct ConnectorSet {
    int base = -1;
    std::vector<Walk> to_object; // per object, degree-1 walk from the base
};

// Degree-1 walks from the base to every object: product-graph search for
// finite groups, integer solve for abelian ones.
ConnectorSet connector_walks(const SchurianCategory& cat, const Grading& x, int base);

// The grading by pi1(CW(C), c0) with tree connectors: non-tree edges map to
// their own generator, tree edges to the empty word.
Grading universal_grading(const CwComplex& cw, int base);

struct QuotientReport {
    std::vector<GroupElt> generator_images; // phi on pi1 generators
    bool relators_killed = false;
    bool surjective = false;
    bool edgewise = false;
    std::vector<std::string> failures;

    bool ok() const { return relators_killed && surjective && edgewise; }
};

// The unique group map phi : pi1(CW(C), c0) -> Gamma_X with
// phi([loop_e]) = deg_X(loop_e), checked on relators, for surjectivity and
// edge-by-edge against the universal degrees.
QuotientReport quotient_morphism(const SchurianCategory& cat, const Grading& x, int base);

// Degree map twisted to a_t^-1 deg(f) a_s; same homogeneous components.
Grading conjugate_grading(const SchurianCategory& cat, const Grading& x,
                          const std::vector<GroupElt>& a);

struct SmashProduct {
    SchurianCategory category;
    std::vector<std::pair<int, int>> object_origin; // smash object -> (object, element index)
    std::vector<int> hom_origin;                    // smash hom -> original hom
    std::vector<GroupElt> element_of_index;
};

// C # X: objects C0 x Gamma, a lift of e_yx at every source (x, s) landing
// at (y, s deg(e)^-1); structure constants inherited.  The projection is
// recorded in the origin tables.
SmashProduct smash_product(const SchurianCategory& cat, const Grading& x);

struct SmashIsoReport {
    bool ok = false;
    std::vector<std::string> failures;
};

// Witness for C # aX ~ C # X: (x, s) -> (x, s a_x^-1) carries the hom
// pattern and structure constants and commutes with both projections.
SmashIsoReport smash_iso_witness(const SchurianCategory& cat, const Grading& x,
                                 const std::vector<GroupElt>& a);

} // namespace skcat
