#include "skcat/category.hpp"

#include <algorithm>
#include <deque>

namespace skcat {

SchurianCategory::SchurianCategory(Field field, std::vector<std::string> objects)
    : field_(field), objects_(std::move(objects))
{
    if (objects_.empty())
        throw InputError("a category needs at least one object");
    for (int i = 0; i < static_cast<int>(objects_.size()); ++i) {
        if (objects_[i].empty())
            throw InputError("empty object name");
        if (!object_by_name_.emplace(objects_[i], i).second)
            throw InputError("duplicate object name: " + objects_[i]);
    }
}

int SchurianCategory::object_index(const std::string& name) const
{
    auto it = object_by_name_.find(name);
    if (it == object_by_name_.end())
        throw InputError("unknown object: " + name);
    return it->second;
}

int SchurianCategory::edge_index(const std::string& name) const
{
    auto it = edge_by_name_.find(name);
    if (it == edge_by_name_.end())
        throw InputError("unknown morphism: " + name);
    return it->second;
}

int SchurianCategory::edge_between(int from, int to) const
{
    auto it = pattern_.find({from, to});
    return it == pattern_.end() ? -1 : it->second;
}

int SchurianCategory::add_hom(const std::string& name, int from, int to)
{
    if (from == to)
        throw InputError("diagonal hom spaces are implicit (identity at " + objects_[from] + ")");
    if (from < 0 || from >= object_count() || to < 0 || to >= object_count())
        throw InputError("hom endpoint out of range: " + name);
    if (pattern_.count({from, to}))
        throw InputError("duplicate hom space " + objects_[from] + " -> " + objects_[to]);
    if (name.empty() || object_by_name_.count(name))
        throw InputError("bad morphism name: '" + name + "'");
    int e = edge_count();
    if (!edge_by_name_.emplace(name, e).second)
        throw InputError("duplicate morphism name: " + name);
    homs_.push_back({from, to, name});
    pattern_[{from, to}] = e;
    return e;
}

void SchurianCategory::set_composition(int g, int f, const Scalar& scalar)
{
    if (!composable(g, f))
        throw InputError("pair (" + homs_[g].name + ", " + homs_[f].name + ") is not composable");
    if (scalar.field() != field_)
        throw InputError("structure constant field mismatch");
    comp_[{g, f}] = scalar;
}

Scalar SchurianCategory::comp_scalar(int g, int f) const
{
    if (!composable(g, f))
        throw MathError("pair (" + homs_[g].name + ", " + homs_[f].name + ") is not composable");
    auto it = comp_.find({g, f});
    return it == comp_.end() ? Scalar::zero(field_) : it->second;
}

Composite SchurianCategory::compose(const MorRef& g, const MorRef& f) const
{
    // Unit law branches.
    if (g.identity && f.identity) {
        if (g.object != f.object)
            throw MathError("identities at different objects are not composable");
        return {Scalar::one(field_), MorRef::id_at(f.object)};
    }
    if (g.identity) {
        if (g.object != homs_[f.edge].to)
            throw MathError("non-composable pair (identity, " + homs_[f.edge].name + ")");
        return {Scalar::one(field_), f};
    }
    if (f.identity) {
        if (homs_[g.edge].from != f.object)
            throw MathError("non-composable pair (" + homs_[g.edge].name + ", identity)");
        return {Scalar::one(field_), g};
    }

    if (!composable(g.edge, f.edge))
        throw MathError("non-composable pair (" + homs_[g.edge].name + ", " + homs_[f.edge].name + ")");
    Scalar c = comp_scalar(g.edge, f.edge);
    if (c.is_zero())
        return {Scalar::zero(field_), std::nullopt};
    int x = homs_[f.edge].from;
    int z = homs_[g.edge].to;
    if (x == z)
        return {c, MorRef::id_at(x)};
    int e = edge_between(x, z);
    if (e < 0)
        throw MathError("composite of " + homs_[g.edge].name + " and " + homs_[f.edge].name
                        + " has nonzero scalar but the target hom space is zero");
    return {c, MorRef::basis(e)};
}

std::vector<std::pair<int, int>> SchurianCategory::composable_pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int g = 0; g < edge_count(); ++g)
        for (int f = 0; f < edge_count(); ++f)
            if (composable(g, f))
                out.emplace_back(g, f);
    return out;
}

std::vector<std::string> SchurianCategory::validate(bool strict) const
{
    std::vector<std::string> report;

    // Structure constants must connect declared composable pairs.
    for (const auto& [pair, c] : comp_) {
        auto [g, f] = pair;
        if (!composable(g, f))
            report.push_back("composition listed for non-composable pair (" + homs_[g].name + ", "
                             + homs_[f].name + ")");
    }

    // Pattern closure: a nonzero composite needs a nonzero target space.
    for (auto [g, f] : composable_pairs()) {
        Scalar c = comp_scalar(g, f);
        if (strict && !composition_listed(g, f))
            report.push_back("strict mode: composite (" + homs_[g].name + ", " + homs_[f].name
                             + ") not listed");
        if (c.is_zero())
            continue;
        int x = homs_[f].from, z = homs_[g].to;
        if (x != z && edge_between(x, z) < 0)
            report.push_back("pattern closure: " + homs_[g].name + " . " + homs_[f].name
                             + " is nonzero but hom(" + objects_[x] + ", " + objects_[z] + ") is zero");
    }

    // Associativity: h(gf) = (hg)f for every composable off-diagonal triple.
    // A factor whose target hom space is zero forces its side to vanish.
    auto side = [&](int outer, int inner_g, int inner_f, bool outer_left) -> Scalar {
        Scalar c_inner = comp_scalar(inner_g, inner_f);
        if (c_inner.is_zero())
            return Scalar::zero(field_);
        int x = homs_[inner_f].from, z = homs_[inner_g].to;
        if (x == z)
            return c_inner; // inner composite is a multiple of an identity
        int mid = edge_between(x, z);
        if (mid < 0)
            return Scalar::zero(field_); // zero target space (flagged above)
        Scalar c_outer = outer_left ? comp_scalar(outer, mid) : comp_scalar(mid, outer);
        return c_inner * c_outer;
    };
    for (int h = 0; h < edge_count(); ++h)
        for (int g = 0; g < edge_count(); ++g) {
            if (!composable(h, g))
                continue;
            for (int f = 0; f < edge_count(); ++f) {
                if (!composable(g, f))
                    continue;
                Scalar lhs = side(h, g, f, true);   // h . (g f)
                Scalar rhs = side(f, h, g, false);  // (h g) . f
                if (lhs != rhs)
                    report.push_back("associativity fails on (" + homs_[h].name + ", " + homs_[g].name
                                     + ", " + homs_[f].name + "): " + lhs.str() + " != " + rhs.str());
            }
        }
    return report;
}

bool SchurianCategory::is_connected() const
{
    return connected_component_count(*this) == 1;
}

SchurianCategory SchurianCategory::rescale_basis(const std::map<int, Scalar>& units) const
{
    auto unit_of = [&](int e) -> Scalar {
        auto it = units.find(e);
        return it == units.end() ? Scalar::one(field_) : it->second;
    };
    for (const auto& [e, mu] : units) {
        if (e < 0 || e >= edge_count())
            throw InputError("rescale: unknown morphism index");
        if (mu.is_zero())
            throw InputError("rescale: unit for " + homs_[e].name + " is zero");
    }

    SchurianCategory out(field_, objects_);
    for (const auto& h : homs_)
        out.add_hom(h.name, h.from, h.to);
    out.metadata_ = metadata_;
    // c'(g, f) = c(g, f) mu_g mu_f / mu_{gf}; mu of an identity is 1.
    for (const auto& [pair, c] : comp_) {
        auto [g, f] = pair;
        Scalar scaled = c * unit_of(g) * unit_of(f);
        if (!c.is_zero()) {
            int x = homs_[f].from, z = homs_[g].to;
            if (x != z)
                scaled = scaled / unit_of(edge_between(x, z));
        }
        out.set_composition(g, f, scaled);
    }
    return out;
}

Walk make_walk(const SchurianCategory& cat, int source, std::vector<WalkStep> steps)
{
    if (source < 0 || source >= cat.object_count())
        throw InputError("walk source out of range");
    int at = source;
    for (const WalkStep& s : steps) {
        if (s.edge < 0 || s.edge >= cat.edge_count() || (s.sign != 1 && s.sign != -1))
            throw InputError("malformed walk step");
        const BasisMorphism& h = cat.hom(s.edge);
        int from = s.sign > 0 ? h.from : h.to;
        int to = s.sign > 0 ? h.to : h.from;
        if (from != at)
            throw MathError("walk steps do not chain at " + cat.object_name(at));
        at = to;
    }
    return Walk{source, at, std::move(steps)};
}

Walk inverse_walk(const Walk& w)
{
    Walk out{w.target, w.source, {}};
    out.steps.reserve(w.steps.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
        out.steps.push_back({it->edge, -it->sign});
    return out;
}

Walk concat_walks(const Walk& first, const Walk& then)
{
    if (first.target != then.source)
        throw MathError("walk concatenation: endpoints do not match");
    Walk out{first.source, then.target, first.steps};
    out.steps.insert(out.steps.end(), then.steps.begin(), then.steps.end());
    return out;
}

SchurianCategory build_complete_groupoid(int n, Field field)
{
    if (n < 1)
        throw InputError("complete groupoid needs n >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back(std::to_string(i));
    SchurianCategory cat(field, std::move(names));
    // e{y}_{x} spans hom(x, y); composition e_zy e_yx = e_zx.
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (x != y)
                cat.add_hom("e" + std::to_string(y + 1) + "_" + std::to_string(x + 1), x, y);
    Scalar one = Scalar::one(field);
    for (auto [g, f] : cat.composable_pairs())
        cat.set_composition(g, f, one);
    cat.set_metadata("generator", "groupoid(" + std::to_string(n) + ")");
    return cat;
}

SchurianCategory build_broken_ladder(int m, int s, Field field)
{
    if (m < 1 || s < 0 || s >= m)
        throw InputError("broken ladder needs m >= 1 and 0 <= s < m");
    std::vector<std::string> names;
    for (int i = 0; i <= m; ++i)
        names.push_back("a" + std::to_string(i));
    for (int i = 0; i <= m; ++i)
        names.push_back("b" + std::to_string(i));
    SchurianCategory cat(field, std::move(names));
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return m + 1 + i; };

    // a-chain runs down (a_i -> a_j for i > j), b-chain runs up, and every
    // crossing a_i -> b_j is nonzero with crossing level min(i, j).
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j < i; ++j) {
            std::string name = (j == i - 1) ? "beta" + std::to_string(i)
                                            : "beta" + std::to_string(i) + "_" + std::to_string(j);
            cat.add_hom(name, a(i), a(j));
        }
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            std::string name = (j == i + 1) ? "gamma" + std::to_string(i)
                                            : "gamma" + std::to_string(i) + "_" + std::to_string(j);
            cat.add_hom(name, b(i), b(j));
        }
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            std::string name = (i == j) ? "alpha" + std::to_string(i)
                                        : "m" + std::to_string(i) + "_" + std::to_string(j);
            cat.add_hom(name, a(i), b(j));
        }

    // Index bookkeeping for the zero rule.
    auto classify = [&](int e) {
        const BasisMorphism& h = cat.hom(e);
        int from = h.from, to = h.to;
        struct Info {
            char kind; // 'a' chain, 'b' chain, 'x' crossing
            int i, j;
        };
        if (from <= m && to <= m)
            return Info{'a', from, to};
        if (from > m && to > m)
            return Info{'b', from - m - 1, to - m - 1};
        return Info{'x', from, to - m - 1};
    };

    Scalar one = Scalar::one(field);
    Scalar zero = Scalar::zero(field);
    for (auto [g, f] : cat.composable_pairs()) {
        auto gi = classify(g), fi = classify(f);
        bool is_zero = false;
        // Only composites that land in a crossing space can vanish: the
        // cross factor's crossing level must be raised past the break.
        if (fi.kind == 'x' && gi.kind == 'b') {
            int level = std::min(fi.i, fi.j);
            int i = fi.i, j = gi.j;
            is_zero = level <= s && i > s && j > s;
        } else if (fi.kind == 'a' && gi.kind == 'x') {
            int level = std::min(gi.i, gi.j);
            int i = fi.i, j = gi.j;
            is_zero = level <= s && i > s && j > s;
        }
        cat.set_composition(g, f, is_zero ? zero : one);
    }
    cat.set_metadata("generator", "ladder(" + std::to_string(m) + "," + std::to_string(s) + ")");
    return cat;
}

int connected_component_count(const SchurianCategory& cat)
{
    int n = cat.object_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& h : cat.homs()) {
        adj[h.from].push_back(h.to);
        adj[h.to].push_back(h.from);
    }
    std::vector<char> seen(n, 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        ++components;
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
        }
    }
    return components;
}

SchurianCategory permute_objects(const SchurianCategory& cat, const std::vector<int>& order)
{
    if (order.size() != static_cast<std::size_t>(cat.object_count()))
        throw InputError("permutation size mismatch");
    std::vector<int> inv(order.size(), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int old = order[i];
        if (old < 0 || old >= cat.object_count() || inv[old] != -1)
            throw InputError("not a permutation");
        inv[old] = static_cast<int>(i);
        names.push_back(cat.object_name(old));
    }
    SchurianCategory out(cat.field(), std::move(names));
    for (const auto& h : cat.homs())
        out.add_hom(h.name, inv[h.from], inv[h.to]);
    for (const auto& [pair, c] : cat.compositions())
        out.set_composition(pair.first, pair.second, c);
    for (const auto& [k, v] : cat.metadata())
        out.set_metadata(k, v);
    return out;
}

} // namespace skcat
