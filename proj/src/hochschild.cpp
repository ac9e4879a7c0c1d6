#include "skcat/hochschild.hpp"

#include <array>

namespace skcat {

Mat derivation_constraints(const SchurianCategory& cat, Field field)
{
    std::vector<std::array<int, 3>> rows; // (h, g, f), h = -1 for bigons
    for (auto [g, f] : cat.composable_pairs()) {
        Scalar c = cat.comp_scalar(g, f);
        if (c.is_zero())
            continue; // Leibniz holds automatically on zero composites
        int x = cat.hom(f).from, z = cat.hom(g).to;
        rows.push_back({x == z ? -1 : cat.edge_between(x, z), g, f});
    }
    Mat m(field, rows.size(), cat.edge_count());
    Scalar one = Scalar::one(field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [h, g, f] = rows[r];
        if (h >= 0) {
            m(r, h) += one;     // lambda_{gf}
            m(r, g) -= one;
            m(r, f) -= one;
        } else {
            m(r, g) += one;     // identity composite: lambda_g + lambda_f = 0
            m(r, f) += one;
        }
    }
    return m;
}

std::vector<Derivation> derivation_space(const SchurianCategory& cat, Field field)
{
    std::vector<Derivation> basis;
    for (auto& v : nullspace_basis(derivation_constraints(cat, field)))
        basis.push_back({field, std::move(v)});
    return basis;
}

Derivation inner_derivation(const SchurianCategory& cat, const std::vector<Scalar>& a)
{
    if (static_cast<int>(a.size()) != cat.object_count())
        throw InputError("inner derivation needs one scalar per object");
    Field field = a.empty() ? Field::rationals() : a.front().field();
    Derivation d{field, {}};
    for (const auto& h : cat.homs())
        d.lambda.push_back(a[h.to] - a[h.from]);
    return d;
}

Derivation lie_bracket(const Derivation& d1, const Derivation& d2)
{
    if (d1.lambda.size() != d2.lambda.size())
        throw InputError("lie bracket of derivations over different categories");
    if (d1.field != d2.field)
        throw InputError("lie bracket of derivations over different fields");
    Derivation out{d1.field, {}};
    for (std::size_t e = 0; e < d1.lambda.size(); ++e)
        out.lambda.push_back(d1.lambda[e] * d2.lambda[e] - d2.lambda[e] * d1.lambda[e]);
    return out;
}

namespace {

/* Incremental row echelon for rank-extension decisions. */
class Echelon {
public:
    // Reduces v against the stored rows; keeps it if independent.
    bool add(std::vector<Scalar> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (!v[lead_[r]].is_zero()) {
                Scalar factor = v[lead_[r]];
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!rows_[r][j].is_zero())
                        v[j] -= factor * rows_[r][j];
            }
        std::size_t l = 0;
        while (l < v.size() && v[l].is_zero())
            ++l;
        if (l == v.size())
            return false;
        Scalar inv = v[l].inverse();
        for (Scalar& c : v)
            c *= inv;
        lead_.push_back(l);
        rows_.push_back(std::move(v));
        return true;
    }

private:
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> lead_;
};

} // namespace

Hh1Space hh1(const SchurianCategory& cat, Field field)
{
    if (!cat.is_connected())
        throw MathError("HH^1 is computed for connected categories only");

    Hh1Space space{field, derivation_space(cat, field), {}, {}};

    Echelon ech;
    for (int x = 0; x < cat.object_count(); ++x) {
        std::vector<Scalar> a(cat.object_count(), Scalar::zero(field));
        a[x] = Scalar::one(field);
        Derivation d = inner_derivation(cat, a);
        if (ech.add(d.lambda))
            space.inner_basis.push_back(std::move(d));
    }
    if (space.inner_basis.size() != static_cast<std::size_t>(cat.object_count()) - 1)
        throw std::logic_error("inner derivations of a connected category have rank |C0| - 1");

    for (const Derivation& d : space.derivation_basis)
        if (ech.add(d.lambda))
            space.coset_basis.push_back(d);
    if (space.coset_basis.size() != space.derivation_basis.size() - space.inner_basis.size())
        throw std::logic_error("HH^1 dimension bookkeeping failed");
    return space;
}

std::vector<Scalar> coset_coordinates(const Hh1Space& space, const Derivation& d)
{
    if (d.field != space.field)
        throw InputError("coset coordinates over a mismatched field");
    std::size_t cols = space.inner_basis.size() + space.coset_basis.size();
    std::size_t edges = d.lambda.size();
    Mat m(space.field, edges, cols);
    for (std::size_t j = 0; j < space.inner_basis.size(); ++j)
        for (std::size_t i = 0; i < edges; ++i)
            m(i, j) = space.inner_basis[j].lambda[i];
    for (std::size_t j = 0; j < space.coset_basis.size(); ++j)
        for (std::size_t i = 0; i < edges; ++i)
            m(i, space.inner_basis.size() + j) = space.coset_basis[j].lambda[i];
    auto x = solve(m, d.lambda);
    if (!x)
        throw MathError("not a derivation: lies outside the derivation space");
    return std::vector<Scalar>(x->begin() + space.inner_basis.size(), x->end());
}

Scalar evaluate_character(const Character& chi, const Word& w)
{
    Scalar out = Scalar::zero(chi.field);
    for (const Letter& l : w) {
        if (l.first < 0 || l.first >= static_cast<int>(chi.values.size()))
            throw InputError("character word references a missing generator");
        out += l.second > 0 ? chi.values[l.first] : -chi.values[l.first];
    }
    return out;
}

Derivation hurewicz_derivation(const SchurianCategory& cat, const Character& chi)
{
    if (!chi.presentation || !chi.presentation->tree)
        throw InputError("character must live over a complex-derived presentation");
    const GroupPresentation& pres = *chi.presentation;
    Derivation d{chi.field, {}};
    for (int e = 0; e < cat.edge_count(); ++e) {
        Walk loop = edge_loop(*pres.tree, cat.hom(e), e);
        d.lambda.push_back(evaluate_character(chi, word_of_walk(pres, loop)));
    }
    return d;
}

HurewiczReport verify_hurewicz_iso(const SchurianCategory& cat, Field field, int base)
{
    CwComplex cw = build_cw(cat); // validates
    if (!cw.is_connected())
        throw MathError("Hurewicz verification needs a connected category");
    auto pres = std::make_shared<const GroupPresentation>(pi1_presentation(cw, base));
    auto char_basis = character_space(*pres, field);
    Hh1Space space = hh1(cat, field);

    HurewiczReport report;
    report.dim_characters = char_basis.size();
    report.dim_hh1 = space.dim();

    Mat image(field, space.dim(), char_basis.size());
    for (std::size_t j = 0; j < char_basis.size(); ++j) {
        Character chi{pres, field, char_basis[j]};
        std::vector<Scalar> coords = coset_coordinates(space, hurewicz_derivation(cat, chi));
        report.image_in_coset_coordinates.push_back(coords);
        for (std::size_t i = 0; i < coords.size(); ++i)
            image(i, j) = coords[i];
    }
    report.image_rank = rank(image);
    report.isomorphism = report.dim_characters == report.dim_hh1
        && report.image_rank == report.dim_hh1;
    return report;
}

} // namespace skcat
