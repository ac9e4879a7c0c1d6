#pragma once

#include <optional>

#include "skcat/cw.hpp"

namespace skcat {

/* Deterministic breadth-first spanning tree of the 1-skeleton.  Incident
 * edges are explored in (source index, target index) order. */
struct SpanningTree {
    int base = -1;
    std::vector<char> in_tree;        // per edge
    std::vector<int> tree_edges;      // in discovery order
    std::vector<Walk> walk_from_base; // per vertex
};

SpanningTree spanning_tree(int vertex_count, const std::vector<BasisMorphism>& edges, int base);
SpanningTree spanning_tree(const CwComplex& cw, int base);

// Closed walk at the base: tree walk to s(e), then e, then back from t(e).
Walk edge_loop(const SpanningTree& tree, const BasisMorphism& edge, int edge_id);

using Letter = std::pair<int, int>; // (generator, +-1)
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
std::string format_word(const Word& w, const std::vector<std::string>& names);

/* Finite presentation of pi1(CW(C), c0): one generator per non-tree edge,
 * one relator per 2-cell (its boundary walk with tree edges erased).
 * Synthetic presentations (tests, files) leave the complex bookkeeping
 * empty. */
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int basepoint = -1;
    std::vector<int> generator_edge; // generator -> edge id
    std::vector<int> edge_generator; // edge -> generator, -1 on tree edges
    std::optional<SpanningTree> tree;

    int generator_index(const std::string& name) const;
};

GroupPresentation make_presentation(std::vector<std::string> generators, std::vector<Word> relators);

GroupPresentation pi1_presentation(const CwComplex& cw, int base);

// The word representing the homotopy class of a walk closed at the
// basepoint: tree edges vanish, other edges map to their generators.
Word word_of_walk(const GroupPresentation& pres, const Walk& walk);

// Relator exponent matrix: one row per relator, one column per generator.
IntMat relator_matrix(const GroupPresentation& pres);

AbelianInvariants abelianization(const GroupPresentation& pres);

// Basis of {chi : generators -> k} whose additive extension kills every
// relator; the character space Hom(Gamma, k+).
std::vector<std::vector<Scalar>> character_space(const GroupPresentation& pres, Field field);

// Sound Tietze moves only: drop empty relators, eliminate a generator with
// a single occurrence in some relator.  Abelian invariants are asserted
// unchanged.
GroupPresentation simplify_presentation(const GroupPresentation& pres);

} // namespace skcat
