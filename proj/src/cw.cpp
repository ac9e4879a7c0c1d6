#include "skcat/cw.hpp"

#include <deque>

namespace skcat {

CwComplex::CwComplex(std::vector<std::string> vertex_names, std::vector<BasisMorphism> edges,
                     std::vector<TwoCell> cells)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)), cells_(std::move(cells))
{
    for (const auto& c : cells_) {
        if (c.edge_f < 0 || c.edge_f >= edge_count() || c.edge_g < 0 || c.edge_g >= edge_count())
            throw InputError("2-cell references a missing edge");
        const auto& f = edges_[c.edge_f];
        const auto& g = edges_[c.edge_g];
        if (g.from != f.to)
            throw InputError("2-cell pair does not compose");
        if (c.bigon) {
            if (g.to != f.from)
                throw InputError("bigon boundary is not closed");
        } else {
            if (c.edge_h < 0 || c.edge_h >= edge_count())
                throw InputError("triangle without composite edge");
            const auto& h = edges_[c.edge_h];
            if (h.from != f.from || h.to != g.to || g.to == f.from)
                throw InputError("triangle boundary is not closed");
            if (c.edge_h == c.edge_f || c.edge_h == c.edge_g || c.edge_f == c.edge_g)
                throw InputError("triangle edges must be three distinct 1-cells");
        }
    }
}

bool CwComplex::is_connected() const
{
    std::vector<char> seen(vertex_count(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const auto& e : edges_) {
            int other = e.from == x ? e.to : (e.to == x ? e.from : -1);
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                ++reached;
                queue.push_back(other);
            }
        }
    }
    return reached == vertex_count();
}

Walk CwComplex::boundary_walk(int cell) const
{
    const TwoCell& c = cells_[cell];
    int base = edges_[c.edge_f].from;
    std::vector<WalkStep> steps{{c.edge_f, +1}, {c.edge_g, +1}};
    if (!c.bigon)
        steps.push_back({c.edge_h, -1});
    return Walk{base, base, std::move(steps)};
}

CwComplex build_cw(const SchurianCategory& cat)
{
    std::vector<std::string> violations = cat.validate();
    if (!violations.empty())
        throw MathError("cannot build CW-complex of an invalid category: " + violations.front());

    std::vector<TwoCell> cells;
    for (auto [g, f] : cat.composable_pairs()) {
        Scalar c = cat.comp_scalar(g, f);
        if (c.is_zero())
            continue; // no 2-cell attached, even when the target space is nonzero
        int x = cat.hom(f).from;
        int z = cat.hom(g).to;
        if (x == z)
            cells.push_back({true, f, g, -1});
        else
            cells.push_back({false, f, g, cat.edge_between(x, z)});
    }
    return CwComplex(cat.objects(), cat.homs(), std::move(cells));
}

long long euler_characteristic(const CwComplex& cw)
{
    return static_cast<long long>(cw.vertex_count()) - cw.edge_count() + cw.cell_count();
}

IntMat boundary1(const CwComplex& cw)
{
    IntMat d1(cw.vertex_count(), cw.edge_count());
    for (int e = 0; e < cw.edge_count(); ++e) {
        d1(cw.edges()[e].to, e) += 1;
        d1(cw.edges()[e].from, e) -= 1;
    }
    return d1;
}

IntMat boundary2(const CwComplex& cw)
{
    IntMat d2(cw.edge_count(), cw.cell_count());
    for (int c = 0; c < cw.cell_count(); ++c) {
        const TwoCell& cell = cw.cells()[c];
        d2(cell.edge_g, c) += 1;
        d2(cell.edge_f, c) += 1;
        if (!cell.bigon)
            d2(cell.edge_h, c) -= 1;
    }
    return d2;
}

AbelianInvariants cellular_homology_h1(const CwComplex& cw)
{
    if (!cw.is_connected())
        throw MathError("homology of a disconnected complex is not supported");

    IntMat d1 = boundary1(cw);
    IntMat d2 = boundary2(cw);

    // Lattice basis of ker d1: with D = U d1 V, the columns of V beyond
    // rank(D) span the kernel saturated.
    SmithResult s1 = smith_normal_form(d1);
    std::size_t k = d1.cols() - s1.rank;

    // Express im d2 in that kernel basis: d2 = V C with C = V^-1 d2; the
    // first rank(D) rows of C must vanish.  Column ops on V are tracked as
    // inverse ops to avoid a separate inversion.
    // Here we just solve V C = d2 column by column over Z via SNF of V once.
    SmithResult sv = smith_normal_form(s1.v);
    // V = Uv^-1 Dv Vv^-1, so V^-1 = Vv Dv^-1 Uv and Dv has unit diagonal.
    for (const Int& d : sv.diagonal)
        if (d != 1)
            throw std::logic_error("unimodular matrix with non-unit invariant factor");
    IntMat vinv = mul(sv.v, sv.u);
    IntMat c = mul(vinv, d2);
    for (std::size_t i = 0; i < s1.rank; ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (c(i, j) != 0)
                throw std::logic_error("image of d2 escapes ker d1");

    IntMat x(k, c.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            x(i, j) = c(s1.rank + i, j);

    // H1 = Z^k / column lattice of x.
    IntMat reduced = reduce_row_lattice(x.transposed());
    SmithResult sx = smith_normal_form(reduced.transposed());
    AbelianInvariants inv;
    inv.free_rank = static_cast<long long>(k) - static_cast<long long>(sx.rank);
    for (const Int& d : sx.diagonal)
        if (d >= 2)
            inv.torsion.push_back(d);
    return inv;
}

std::size_t cohomology_dim_h1(const CwComplex& cw, Field field)
{
    if (!cw.is_connected())
        throw MathError("cohomology of a disconnected complex is not supported");
    IntMat d1 = boundary1(cw);
    IntMat d2 = boundary2(cw);
    if (!(mul(d1, d2) == IntMat(d1.rows(), d2.cols())))
        throw std::logic_error("d1 d2 != 0");
    // dim ker(d2^T) - rank(d1^T); transposes share ranks with the originals.
    std::size_t r1 = rank(d1.over(field));
    std::size_t r2 = rank(d2.over(field));
    return cw.edge_count() - r1 - r2;
}

} // namespace skcat
