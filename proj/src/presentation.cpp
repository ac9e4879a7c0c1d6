#include "skcat/presentation.hpp"

#include <algorithm>
#include <deque>

namespace skcat {

SpanningTree spanning_tree(int vertex_count, const std::vector<BasisMorphism>& edges, int base)
{
    if (base < 0 || base >= vertex_count)
        throw InputError("unknown basepoint");

    // Incident edges per vertex, ordered by the edge's (source, target).
    std::vector<std::vector<int>> incident(vertex_count);
    std::vector<int> order(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        order[e] = static_cast<int>(e);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(edges[a].from, edges[a].to) < std::pair(edges[b].from, edges[b].to);
    });
    for (int e : order) {
        incident[edges[e].from].push_back(e);
        incident[edges[e].to].push_back(e);
    }

    SpanningTree tree;
    tree.base = base;
    tree.in_tree.assign(edges.size(), 0);
    tree.walk_from_base.assign(vertex_count, Walk{});
    std::vector<char> visited(vertex_count, 0);
    visited[base] = 1;
    tree.walk_from_base[base] = Walk{base, base, {}};

    std::deque<int> queue{base};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : incident[v]) {
            const auto& h = edges[e];
            int sign = h.from == v ? +1 : -1;
            int other = sign > 0 ? h.to : h.from;
            if (visited[other])
                continue;
            visited[other] = 1;
            tree.in_tree[e] = 1;
            tree.tree_edges.push_back(e);
            Walk w = tree.walk_from_base[v];
            w.steps.push_back({e, sign});
            w.target = other;
            tree.walk_from_base[other] = std::move(w);
            queue.push_back(other);
        }
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!visited[v])
            throw MathError("spanning tree requires a connected 1-skeleton");
    return tree;
}

SpanningTree spanning_tree(const CwComplex& cw, int base)
{
    return spanning_tree(cw.vertex_count(), cw.edges(), base);
}

Walk edge_loop(const SpanningTree& tree, const BasisMorphism& edge, int edge_id)
{
    Walk out = tree.walk_from_base[edge.from];
    out.steps.push_back({edge_id, +1});
    out.target = edge.to;
    return concat_walks(out, inverse_walk(tree.walk_from_base[edge.to]));
}

Word free_reduce(Word w)
{
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse_word(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.emplace_back(it->first, -it->second);
    return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty())
        return "1";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty())
            out += ' ';
        if (l.second < 0)
            out += '-';
        out += names[l.first];
    }
    return out;
}

int GroupPresentation::generator_index(const std::string& name) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name)
            return static_cast<int>(i);
    throw InputError("unknown generator: " + name);
}

GroupPresentation make_presentation(std::vector<std::string> generators, std::vector<Word> relators)
{
    GroupPresentation pres;
    pres.generators = std::move(generators);
    for (Word& r : relators) {
        for (const Letter& l : r)
            if (l.first < 0 || l.first >= static_cast<int>(pres.generators.size()))
                throw InputError("relator references a missing generator");
        pres.relators.push_back(free_reduce(std::move(r)));
    }
    return pres;
}

GroupPresentation pi1_presentation(const CwComplex& cw, int base)
{
    GroupPresentation pres;
    pres.basepoint = base;
    pres.tree = spanning_tree(cw, base);
    pres.edge_generator.assign(cw.edge_count(), -1);
    for (int e = 0; e < cw.edge_count(); ++e) {
        if (pres.tree->in_tree[e])
            continue;
        pres.edge_generator[e] = static_cast<int>(pres.generators.size());
        pres.generator_edge.push_back(e);
        pres.generators.push_back(cw.edges()[e].name);
    }
    for (int c = 0; c < cw.cell_count(); ++c) {
        Walk boundary = cw.boundary_walk(c);
        Word w;
        for (const WalkStep& s : boundary.steps)
            if (pres.edge_generator[s.edge] >= 0)
                w.emplace_back(pres.edge_generator[s.edge], s.sign);
        pres.relators.push_back(free_reduce(std::move(w)));
    }
    return pres;
}

Word word_of_walk(const GroupPresentation& pres, const Walk& walk)
{
    if (walk.source != pres.basepoint || walk.target != pres.basepoint)
        throw MathError("walk is not closed at the basepoint");
    Word w;
    for (const WalkStep& s : walk.steps) {
        if (s.edge < 0 || s.edge >= static_cast<int>(pres.edge_generator.size()))
            throw InputError("word_of_walk needs a complex-derived presentation");
        if (pres.edge_generator[s.edge] >= 0)
            w.emplace_back(pres.edge_generator[s.edge], s.sign);
    }
    return free_reduce(std::move(w));
}

IntMat relator_matrix(const GroupPresentation& pres)
{
    IntMat m(pres.relators.size(), pres.generators.size());
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
        for (const Letter& l : pres.relators[r])
            m(r, l.first) += l.second;
    return m;
}

AbelianInvariants abelianization(const GroupPresentation& pres)
{
    IntMat reduced = reduce_row_lattice(relator_matrix(pres));
    SmithResult s = smith_normal_form(reduced);
    AbelianInvariants inv;
    inv.free_rank = static_cast<long long>(pres.generators.size()) - static_cast<long long>(s.rank);
    for (const Int& d : s.diagonal)
        if (d >= 2)
            inv.torsion.push_back(d);
    return inv;
}

std::vector<std::vector<Scalar>> character_space(const GroupPresentation& pres, Field field)
{
    // Unimodular row reduction is invertible over every field, so the
    // reduced matrix has the same nullspace.
    IntMat reduced = reduce_row_lattice(relator_matrix(pres));
    if (pres.generators.empty())
        return {};
    return nullspace_basis(reduced.over(field));
}

namespace {

// Substitutes each occurrence of generator g by `worth` (for exponent +1).
Word substitute(const Word& w, int g, const Word& worth)
{
    Word out;
    Word worth_inv = inverse_word(worth);
    for (const Letter& l : w) {
        if (l.first != g) {
            out.push_back(l);
            continue;
        }
        const Word& rep = l.second > 0 ? worth : worth_inv;
        out.insert(out.end(), rep.begin(), rep.end());
    }
    return free_reduce(std::move(out));
}

} // namespace

GroupPresentation simplify_presentation(const GroupPresentation& pres)
{
    AbelianInvariants before = abelianization(pres);

    std::vector<std::string> gens = pres.generators;
    std::vector<int> gen_edge = pres.generator_edge;
    std::vector<Word> rels;
    for (const Word& r : pres.relators)
        if (!free_reduce(r).empty())
            rels.push_back(free_reduce(r));

    for (;;) {
        // Find a relator in which some generator occurs exactly once.
        int rel = -1, gen = -1;
        std::size_t pos = 0;
        for (std::size_t r = 0; r < rels.size() && rel < 0; ++r) {
            std::vector<int> count(gens.size(), 0);
            for (const Letter& l : rels[r])
                ++count[l.first];
            for (std::size_t i = 0; i < rels[r].size(); ++i)
                if (count[rels[r][i].first] == 1) {
                    rel = static_cast<int>(r);
                    gen = rels[r][i].first;
                    pos = i;
                    break;
                }
        }
        if (rel < 0)
            break;

        // rels[rel] = u g^eps v = 1, so g^eps = u^-1 v^-1.
        const Word& r = rels[rel];
        Word u(r.begin(), r.begin() + pos);
        Word v(r.begin() + pos + 1, r.end());
        Word value = inverse_word(u);
        Word vinv = inverse_word(v);
        value.insert(value.end(), vinv.begin(), vinv.end());
        if (r[pos].second < 0)
            value = inverse_word(value); // solved for g^-1
        value = free_reduce(std::move(value));

        std::vector<Word> next;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (static_cast<int>(i) == rel)
                continue;
            Word w = substitute(rels[i], gen, value);
            if (!w.empty())
                next.push_back(std::move(w));
        }
        // Renumber generators past the eliminated one.
        for (Word& w : next)
            for (Letter& l : w)
                if (l.first > gen)
                    --l.first;
        gens.erase(gens.begin() + gen);
        if (!gen_edge.empty())
            gen_edge.erase(gen_edge.begin() + gen);
        rels = std::move(next);
    }

    GroupPresentation out;
    bool eliminated = gens.size() != pres.generators.size();
    out.generators = std::move(gens);
    out.relators = std::move(rels);
    out.basepoint = pres.basepoint;
    out.generator_edge = std::move(gen_edge);
    out.tree = pres.tree;
    // Once a generator is gone, edge words are no longer plain letter maps;
    // word_of_walk must refuse, so the edge->generator map stays empty.
    if (pres.tree && !eliminated)
        out.edge_generator = pres.edge_generator;

    if (!(abelianization(out) == before))
        throw std::logic_error("simplify_presentation changed the abelianization");
    return out;
}

} // namespace skcat
