#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skcat/scalar.hpp"

namespace skcat {

/* Off-diagonal basis morphism: the chosen nonzero element of the
 * one-dimensional hom space from object `from` to object `to`. */
struct BasisMorphism {
    int from = -1;
    int to = -1;
    std::string name;
};

/* A basis morphism or an identity. */
struct MorRef {
    bool identity = false;
    int object = -1; // for identities
    int edge = -1;   // for basis morphisms

    static MorRef id_at(int x) { return MorRef{true, x, -1}; }
    static MorRef basis(int e) { return MorRef{false, -1, e}; }
    bool operator==(const MorRef&) const = default;
};

/* Result of composing two morphisms: scalar plus the basis element it
 * multiplies; target absent means the composite is zero. */
struct Composite {
    Scalar scalar;
    std::optional<MorRef> target;
    bool is_zero() const { return !target.has_value(); }
};

struct WalkStep {
    int edge = -1;
    int sign = +1; // +1 traverses the morphism, -1 the virtual inverse
    bool operator==(const WalkStep&) const = default;
};

/* A walk: a source/target-matching sequence of virtual morphisms, stored in
 * traversal order (steps.front() leaves the source). */
struct Walk {
    int source = -1;
    int target = -1;
    std::vector<WalkStep> steps;
    bool operator==(const Walk&) const = default;
};

/* A finite connected Schurian k-category: one basis morphism per nonzero
 * off-diagonal hom space, composition given by structure constants.
 * Immutable after construction. */
class SchurianCategory {
public:
    SchurianCategory(Field field, std::vector<std::string> objects);

    Field field() const { return field_; }
    int object_count() const { return static_cast<int>(objects_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& object_name(int x) const { return objects_[x]; }
    int object_index(const std::string& name) const;

    int edge_count() const { return static_cast<int>(homs_.size()); }
    const std::vector<BasisMorphism>& homs() const { return homs_; }
    const BasisMorphism& hom(int e) const { return homs_[e]; }
    int edge_index(const std::string& name) const;

    // -1 when the hom space from x to y is zero (x != y).
    int edge_between(int from, int to) const;
    bool hom_nonzero(int from, int to) const { return from == to || edge_between(from, to) >= 0; }

    int add_hom(const std::string& name, int from, int to);

    // Declares g . f = scalar * (basis of the target space); requires
    // s(g) = t(f).  scalar 0 records an explicitly-listed zero composite.
    void set_composition(int g, int f, const Scalar& scalar);

    bool composable(int g, int f) const { return homs_[g].from == homs_[f].to; }
    bool composition_listed(int g, int f) const { return comp_.count({g, f}) != 0; }

    // Structure constant c(g, f); unlisted pairs default to 0.
    Scalar comp_scalar(int g, int f) const;

    // Composition of two morphism references (identities allowed).
    Composite compose(const MorRef& g, const MorRef& f) const;

    // Exhaustive check of pattern closure, Schurian composite targets and
    // associativity.  Empty result = valid.  strict demands every composable
    // pair be listed explicitly.
    std::vector<std::string> validate(bool strict = false) const;

    // Connectivity of the underlying undirected hom graph.
    bool is_connected() const;

    // Composable off-diagonal pairs (g, f) with s(g) = t(f), in
    // deterministic (g, f) order.
    std::vector<std::pair<int, int>> composable_pairs() const;

    // New category with basis e_yx replaced by units[e] * e_yx.
    SchurianCategory rescale_basis(const std::map<int, Scalar>& units) const;

    const std::map<std::string, std::string>& metadata() const { return metadata_; }
    void set_metadata(const std::string& key, const std::string& value) { metadata_[key] = value; }
    const std::map<std::pair<int, int>, Scalar>& compositions() const { return comp_; }

private:
    Field field_;
    std::vector<std::string> objects_;
    std::vector<BasisMorphism> homs_;
    std::map<std::string, int> object_by_name_;
    std::map<std::string, int> edge_by_name_;
    std::map<std::pair<int, int>, int> pattern_;    // (from, to) -> edge
    std::map<std::pair<int, int>, Scalar> comp_;    // (g, f) -> c(g, f)
    std::map<std::string, std::string> metadata_;
};

// Walk construction with chain validation.
Walk make_walk(const SchurianCategory& cat, int source, std::vector<WalkStep> steps);
Walk inverse_walk(const Walk& w);
Walk concat_walks(const Walk& first, const Walk& then);

// The complete Schurian groupoid on n objects: every hom space is
// one-dimensional and nonzero morphisms compose to nonzero morphisms.
SchurianCategory build_complete_groupoid(int n, Field field = Field::rationals());

// Finite broken-ladder truncation: objects a0..am, b0..bm, a-chain going
// down, b-chain going up, all crossings present, with the raising relation
// broken at level s (a composite crossing at level <= s between a_i, b_j
// with i, j > s vanishes).
SchurianCategory build_broken_ladder(int m, int s, Field field = Field::rationals());

// Relabels objects by `order` (new index -> old index); homs follow their
// endpoints' new order.  Used for order-invariance checks.
SchurianCategory permute_objects(const SchurianCategory& cat, const std::vector<int>& order);

int connected_component_count(const SchurianCategory& cat);

} // namespace skcat
