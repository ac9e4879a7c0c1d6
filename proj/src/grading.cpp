#include "skcat/grading.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace skcat {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table))
{
    int n = size();
    if (n == 0)
        throw InputError("finite group needs at least the identity");
    if (static_cast<int>(table_.size()) != n)
        throw InputError("finite group table must be square");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("finite group table must be square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw InputError("finite group table entry out of range");
    }
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i)
        if (names_[i].empty() || !seen.emplace(names_[i], i).second)
            throw InputError("bad finite group element name");

    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = table_[e][i] == i && table_[i][e] == i;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        throw InputError("finite group table has no identity");

    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table_[i][j] == identity_ && table_[j][i] == identity_) {
                inverse_[i] = j;
                break;
            }
        if (inverse_[i] < 0)
            throw InputError("finite group table: element '" + names_[i] + "' has no inverse");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    throw InputError("finite group table is not associative");
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup({"1"}, {{0}});
}

FiniteGroup FiniteGroup::cyclic(int q)
{
    if (q < 1)
        throw InputError("cyclic group order must be positive");
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i) {
        names.push_back("g" + std::to_string(i));
        for (int j = 0; j < q; ++j)
            table[i][j] = (i + j) % q;
    }
    names[0] = "1";
    return FiniteGroup(std::move(names), std::move(table));
}

int FiniteGroup::element_index(const std::string& name) const
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return i;
    throw InputError("unknown group element: " + name);
}

std::vector<Int> FgAbelianGroup::normalized(std::vector<Int> v) const
{
    if (static_cast<int>(v.size()) != dim())
        throw InputError("abelian element has wrong length");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        const Int& m = torsion[i];
        if (m < 2)
            throw InputError("torsion modulus must be >= 2");
        Int& c = v[rank + i];
        c %= m;
        if (c < 0)
            c += m;
    }
    return v;
}

GradingGroup GradingGroup::finite(FiniteGroup g)
{
    GradingGroup out;
    out.kind_ = Kind::Finite;
    out.finite_ = std::make_shared<FiniteGroup>(std::move(g));
    return out;
}

GradingGroup GradingGroup::abelian(FgAbelianGroup g)
{
    for (const Int& m : g.torsion)
        if (m < 2)
            throw InputError("torsion modulus must be >= 2");
    if (g.rank < 0)
        throw InputError("abelian rank must be >= 0");
    GradingGroup out;
    out.kind_ = Kind::Abelian;
    out.abelian_ = std::make_shared<FgAbelianGroup>(std::move(g));
    return out;
}

GradingGroup GradingGroup::presented(std::shared_ptr<const GroupPresentation> p)
{
    if (!p)
        throw InputError("null presentation");
    GradingGroup out;
    out.kind_ = Kind::Presented;
    out.presented_ = std::move(p);
    return out;
}

const FiniteGroup& GradingGroup::finite_group() const
{
    if (kind_ != Kind::Finite)
        throw InputError("group is not of finite-table kind");
    return *finite_;
}

const FgAbelianGroup& GradingGroup::abelian_group() const
{
    if (kind_ != Kind::Abelian)
        throw InputError("group is not of abelian kind");
    return *abelian_;
}

const GroupPresentation& GradingGroup::presentation() const
{
    if (kind_ != Kind::Presented)
        throw InputError("group is not of presented kind");
    return *presented_;
}

std::shared_ptr<const GroupPresentation> GradingGroup::presentation_ptr() const
{
    presentation();
    return presented_;
}

GroupElt GradingGroup::identity() const
{
    switch (kind_) {
    case Kind::Finite:
        return finite_->identity();
    case Kind::Abelian:
        return std::vector<Int>(abelian_->dim(), Int(0));
    case Kind::Presented:
        return Word{};
    }
    throw std::logic_error("bad group kind");
}

GroupElt GradingGroup::mul(const GroupElt& a, const GroupElt& b) const
{
    switch (kind_) {
    case Kind::Finite:
        return finite_->mul(std::get<int>(a), std::get<int>(b));
    case Kind::Abelian: {
        std::vector<Int> out = std::get<std::vector<Int>>(a);
        const auto& vb = std::get<std::vector<Int>>(b);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += vb[i];
        return abelian_->normalized(std::move(out));
    }
    case Kind::Presented: {
        // Words are stored in traversal order: the right factor comes first.
        Word out = std::get<Word>(b);
        const Word& wa = std::get<Word>(a);
        out.insert(out.end(), wa.begin(), wa.end());
        return free_reduce(std::move(out));
    }
    }
    throw std::logic_error("bad group kind");
}

GroupElt GradingGroup::inv(const GroupElt& a) const
{
    switch (kind_) {
    case Kind::Finite:
        return finite_->inv(std::get<int>(a));
    case Kind::Abelian: {
        std::vector<Int> out = std::get<std::vector<Int>>(a);
        for (Int& c : out)
            c = -c;
        return abelian_->normalized(std::move(out));
    }
    case Kind::Presented:
        return inverse_word(std::get<Word>(a));
    }
    throw std::logic_error("bad group kind");
}

bool GradingGroup::equal(const GroupElt& a, const GroupElt& b) const
{
    switch (kind_) {
    case Kind::Finite:
        return std::get<int>(a) == std::get<int>(b);
    case Kind::Abelian:
        return abelian_->normalized(std::get<std::vector<Int>>(a))
            == abelian_->normalized(std::get<std::vector<Int>>(b));
    case Kind::Presented: {
        // Decidable only up to free reduction and a literal relator match;
        // that is exactly what the universal grading's checks need.
        Word w = std::get<Word>(a);
        Word ib = inverse_word(std::get<Word>(b));
        w.insert(w.end(), ib.begin(), ib.end());
        w = free_reduce(std::move(w));
        if (w.empty())
            return true;
        for (const Word& r : presented_->relators)
            if (w == r || w == inverse_word(r))
                return true;
        throw MathError("undecidable equality in presented-group target");
    }
    }
    throw std::logic_error("bad group kind");
}

GroupElt GradingGroup::normalized(GroupElt e) const
{
    switch (kind_) {
    case Kind::Finite: {
        int i = std::get<int>(e);
        if (i < 0 || i >= finite_->size())
            throw InputError("finite group element index out of range");
        return e;
    }
    case Kind::Abelian:
        return abelian_->normalized(std::get<std::vector<Int>>(std::move(e)));
    case Kind::Presented: {
        Word w = std::get<Word>(std::move(e));
        for (const Letter& l : w)
            if (l.first < 0 || l.first >= static_cast<int>(presented_->generators.size())
                || (l.second != 1 && l.second != -1))
                throw InputError("malformed word element");
        return free_reduce(std::move(w));
    }
    }
    throw std::logic_error("bad group kind");
}

std::string GradingGroup::format(const GroupElt& e) const
{
    switch (kind_) {
    case Kind::Finite:
        return finite_->names()[std::get<int>(e)];
    case Kind::Abelian: {
        const auto& v = std::get<std::vector<Int>>(e);
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                out += ",";
            out += v[i].str();
        }
        return out + "]";
    }
    case Kind::Presented:
        return format_word(std::get<Word>(e), presented_->generators);
    }
    throw std::logic_error("bad group kind");
}

GroupElt GradingGroup::parse_element(const std::string& text) const
{
    switch (kind_) {
    case Kind::Finite:
        return finite_->element_index(text);
    case Kind::Abelian: {
        std::vector<Int> v;
        std::string body = text;
        if (!body.empty() && body.front() == '[') {
            if (body.back() != ']')
                throw InputError("bad abelian element: " + text);
            body = body.substr(1, body.size() - 2);
        }
        std::size_t pos = 0;
        while (pos <= body.size() && !body.empty()) {
            std::size_t comma = body.find(',', pos);
            std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                v.emplace_back(piece);
            } catch (const std::runtime_error&) {
                throw InputError("bad abelian coordinate '" + piece + "'");
            }
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        if (body.empty() && abelian_->dim() == 0)
            v.clear();
        return abelian_->normalized(std::move(v));
    }
    case Kind::Presented:
        throw InputError("presented-group elements cannot be parsed from files");
    }
    throw std::logic_error("bad group kind");
}

bool GradingGroup::finitely_enumerable() const
{
    return kind_ == Kind::Finite || (kind_ == Kind::Abelian && abelian_->is_finite());
}

std::vector<GroupElt> GradingGroup::elements() const
{
    if (kind_ == Kind::Finite) {
        std::vector<GroupElt> out;
        for (int i = 0; i < finite_->size(); ++i)
            out.emplace_back(i);
        return out;
    }
    if (kind_ == Kind::Abelian && abelian_->is_finite()) {
        std::vector<GroupElt> out;
        std::vector<Int> v(abelian_->dim(), Int(0));
        for (;;) {
            out.emplace_back(v);
            // odometer over the torsion moduli, last coordinate fastest
            int i = abelian_->dim() - 1;
            for (; i >= 0; --i) {
                v[i] += 1;
                if (v[i] < abelian_->torsion[i])
                    break;
                v[i] = 0;
            }
            if (i < 0)
                break;
        }
        return out;
    }
    throw MathError("group is not finitely enumerable");
}

Grading::Grading(GradingGroup group, std::vector<GroupElt> degree_per_edge)
    : group_(std::move(group)), degrees_(std::move(degree_per_edge))
{
    for (GroupElt& e : degrees_)
        e = group_.normalized(std::move(e));
}

Grading trivial_grading(const SchurianCategory& cat)
{
    GradingGroup g = GradingGroup::finite(FiniteGroup::trivial());
    return Grading(g, std::vector<GroupElt>(cat.edge_count(), g.identity()));
}

std::vector<std::string> check_grading(const SchurianCategory& cat, const Grading& x)
{
    if (x.edge_count() != cat.edge_count())
        throw InputError("grading does not cover every basis morphism");
    const GradingGroup& grp = x.group();
    std::vector<std::string> violations;
    for (auto [g, f] : cat.composable_pairs()) {
        Scalar c = cat.comp_scalar(g, f);
        if (c.is_zero())
            continue;
        GroupElt prod = grp.mul(x.degree(g), x.degree(f));
        int sx = cat.hom(f).from, tz = cat.hom(g).to;
        if (sx == tz) {
            if (!grp.is_identity(prod))
                violations.push_back("deg(" + cat.hom(g).name + ") deg(" + cat.hom(f).name
                                     + ") = " + grp.format(prod) + " != 1 on an identity composite");
        } else {
            const GroupElt& dh = x.degree(cat.edge_between(sx, tz));
            if (!grp.equal(prod, dh))
                violations.push_back("deg(" + cat.hom(g).name + ") deg(" + cat.hom(f).name + ") = "
                                     + grp.format(prod) + " != deg(composite) = " + grp.format(dh));
        }
    }
    return violations;
}

GroupElt walk_degree(const Grading& x, const Walk& w)
{
    const GradingGroup& grp = x.group();
    GroupElt acc = grp.identity();
    for (const WalkStep& s : w.steps) {
        GroupElt d = x.degree(s.edge);
        if (s.sign < 0)
            d = grp.inv(d);
        acc = grp.mul(d, acc); // earlier steps sit on the right
    }
    return acc;
}

SpanningTree spanning_tree(const SchurianCategory& cat, int base)
{
    return spanning_tree(cat.object_count(), cat.homs(), base);
}

namespace {

std::vector<GroupElt> loop_degrees(const SchurianCategory& cat, const Grading& x,
                                   const SpanningTree& tree)
{
    std::vector<GroupElt> out;
    for (int e = 0; e < cat.edge_count(); ++e)
        out.push_back(walk_degree(x, edge_loop(tree, cat.hom(e), e)));
    return out;
}

// Subgroup closure inside a finite table group, from generator indices.
std::vector<int> finite_closure(const FiniteGroup& g, const std::vector<int>& gens)
{
    std::vector<char> seen(g.size(), 0);
    std::deque<int> queue;
    seen[g.identity()] = 1;
    queue.push_back(g.identity());
    std::vector<int> step;
    for (int s : gens) {
        step.push_back(s);
        step.push_back(g.inv(s));
    }
    std::vector<int> members{g.identity()};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int s : step) {
            int b = g.mul(a, s);
            if (!seen[b]) {
                seen[b] = 1;
                members.push_back(b);
                queue.push_back(b);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Do the given vectors generate the whole of Z^rank x prod Z/m_i?
bool abelian_generates(const FgAbelianGroup& g, const std::vector<std::vector<Int>>& gens)
{
    int d = g.dim();
    if (d == 0)
        return true;
    IntMat m(d, gens.size() + g.torsion.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < d; ++i)
            m(i, j) = gens[j][i];
    for (std::size_t t = 0; t < g.torsion.size(); ++t)
        m(g.rank + t, gens.size() + t) = g.torsion[t];
    SmithResult s = smith_normal_form(m);
    if (s.rank != static_cast<std::size_t>(d))
        return false;
    for (const Int& di : s.diagonal)
        if (di != 1)
            return false;
    return true;
}

} // namespace

bool is_connected_grading(const SchurianCategory& cat, const Grading& x, int base)
{
    if (!cat.is_connected())
        throw MathError("connectedness of a grading needs a connected category");
    const GradingGroup& grp = x.group();
    if (grp.kind() == GradingGroup::Kind::Presented)
        throw MathError("connectedness is unsupported for presented-group targets");
    SpanningTree tree = spanning_tree(cat, base);
    std::vector<GroupElt> loops = loop_degrees(cat, x, tree);
    if (grp.kind() == GradingGroup::Kind::Finite) {
        std::vector<int> gens;
        for (const GroupElt& e : loops)
            gens.push_back(std::get<int>(e));
        return static_cast<int>(finite_closure(grp.finite_group(), gens).size())
            == grp.finite_group().size();
    }
    std::vector<std::vector<Int>> gens;
    for (const GroupElt& e : loops)
        gens.push_back(std::get<std::vector<Int>>(e));
    return abelian_generates(grp.abelian_group(), gens);
}

ConnectorSet connector_walks(const SchurianCategory& cat, const Grading& x, int base)
{
    if (base < 0 || base >= cat.object_count())
        throw InputError("unknown basepoint");
    if (!cat.is_connected())
        throw MathError("connector walks need a connected category");
    const GradingGroup& grp = x.group();

    ConnectorSet out;
    out.base = base;
    out.to_object.assign(cat.object_count(), Walk{});

    if (grp.kind() == GradingGroup::Kind::Finite) {
        // Reachability in the product graph C0 x Gamma from (base, 1).
        // Incidence order matches the spanning tree's, so a trivial grading
        // returns exactly the tree walks.
        const FiniteGroup& fg = grp.finite_group();
        int n = cat.object_count(), order = fg.size();
        std::vector<std::vector<int>> incident(n);
        {
            std::vector<int> edge_order(cat.edge_count());
            for (int e = 0; e < cat.edge_count(); ++e)
                edge_order[e] = e;
            std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
                return std::pair(cat.hom(a).from, cat.hom(a).to)
                    < std::pair(cat.hom(b).from, cat.hom(b).to);
            });
            for (int e : edge_order) {
                incident[cat.hom(e).from].push_back(e);
                if (cat.hom(e).to != cat.hom(e).from)
                    incident[cat.hom(e).to].push_back(e);
            }
        }
        auto state = [&](int v, int s) { return v * order + s; };
        std::vector<int> pred_state(n * order, -1);
        std::vector<WalkStep> pred_step(n * order);
        std::vector<char> seen(n * order, 0);
        int start = state(base, fg.identity());
        seen[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int st = queue.front();
            queue.pop_front();
            int v = st / order, s = st % order;
            for (int e : incident[v]) {
                const BasisMorphism& h = cat.hom(e);
                int d = std::get<int>(x.degree(e));
                int nxt = h.from == v ? state(h.to, fg.mul(d, s))
                                      : state(h.from, fg.mul(fg.inv(d), s));
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    pred_state[nxt] = st;
                    pred_step[nxt] = {e, h.from == v ? +1 : -1};
                    queue.push_back(nxt);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            int goal = state(v, fg.identity());
            if (!seen[goal])
                throw MathError("no connector set: object " + cat.object_name(v)
                                + " is unreachable at degree 1 (grading not connected)");
            std::vector<WalkStep> steps;
            for (int st = goal; st != start; st = pred_state[st])
                steps.push_back(pred_step[st]);
            std::reverse(steps.begin(), steps.end());
            out.to_object[v] = make_walk(cat, base, std::move(steps));
        }
        return out;
    }

    if (grp.kind() == GradingGroup::Kind::Abelian) {
        // Adjust the tree walk by generator loops: solve for multiplicities
        // z with sum z_i loop_i = -deg(tree walk) modulo torsion.
        const FgAbelianGroup& ab = grp.abelian_group();
        SpanningTree tree = spanning_tree(cat, base);
        std::vector<int> loop_edges;
        std::vector<std::vector<Int>> loops;
        for (int e = 0; e < cat.edge_count(); ++e) {
            if (tree.in_tree[e])
                continue;
            loop_edges.push_back(e);
            loops.push_back(std::get<std::vector<Int>>(
                walk_degree(x, edge_loop(tree, cat.hom(e), e))));
        }
        int d = ab.dim();
        IntMat m(d, loops.size() + ab.torsion.size());
        for (std::size_t j = 0; j < loops.size(); ++j)
            for (int i = 0; i < d; ++i)
                m(i, j) = loops[j][i];
        for (std::size_t t = 0; t < ab.torsion.size(); ++t)
            m(ab.rank + t, loops.size() + t) = ab.torsion[t];

        for (int v = 0; v < cat.object_count(); ++v) {
            std::vector<Int> target = std::get<std::vector<Int>>(walk_degree(x, tree.walk_from_base[v]));
            for (Int& c : target)
                c = -c;
            auto z = solve_integer(m, target);
            if (!z)
                throw MathError("no connector set: object " + cat.object_name(v)
                                + " is unreachable at degree 1 (grading not connected)");
            Walk w{base, base, {}};
            for (std::size_t j = 0; j < loops.size(); ++j) {
                Int count = (*z)[j];
                if (count == 0)
                    continue;
                if (abs(count) > 1000000)
                    throw MathError("connector multiplicities out of desk scale");
                Walk loop = edge_loop(tree, cat.hom(loop_edges[j]), loop_edges[j]);
                if (count < 0)
                    loop = inverse_walk(loop);
                for (Int i = 0; i < abs(count); ++i)
                    w = concat_walks(w, loop);
            }
            out.to_object[v] = concat_walks(w, tree.walk_from_base[v]);
        }
        return out;
    }

    throw MathError("connector walks are unsupported for presented-group targets");
}

Grading universal_grading(const CwComplex& cw, int base)
{
    auto pres = std::make_shared<const GroupPresentation>(pi1_presentation(cw, base));
    GradingGroup grp = GradingGroup::presented(pres);
    std::vector<GroupElt> degrees;
    for (int e = 0; e < cw.edge_count(); ++e) {
        int g = pres->edge_generator[e];
        degrees.emplace_back(g < 0 ? Word{} : Word{{g, +1}});
    }
    return Grading(std::move(grp), std::move(degrees));
}

QuotientReport quotient_morphism(const SchurianCategory& cat, const Grading& x, int base)
{
    const GradingGroup& grp = x.group();
    if (grp.kind() == GradingGroup::Kind::Presented)
        throw MathError("quotient verification is unsupported for presented-group targets");
    if (!cat.is_connected())
        throw MathError("quotient morphism needs a connected category");

    CwComplex cw = build_cw(cat);
    GroupPresentation pres = pi1_presentation(cw, base);
    const SpanningTree& tree = *pres.tree;

    QuotientReport report;
    // phi(gen_e) = deg_X of the tree-conjugated loop of e.
    for (int g = 0; g < static_cast<int>(pres.generators.size()); ++g) {
        int e = pres.generator_edge[g];
        report.generator_images.push_back(walk_degree(x, edge_loop(tree, cat.hom(e), e)));
    }

    // (i) relators map to the identity.
    report.relators_killed = true;
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        GroupElt acc = grp.identity();
        for (const Letter& l : pres.relators[r]) {
            GroupElt im = report.generator_images[l.first];
            if (l.second < 0)
                im = grp.inv(im);
            acc = grp.mul(im, acc);
        }
        if (!grp.is_identity(acc)) {
            report.relators_killed = false;
            report.failures.push_back("relator " + format_word(pres.relators[r], pres.generators)
                                      + " maps to " + grp.format(acc));
        }
    }

    // (ii) the images generate Gamma_X.
    if (grp.kind() == GradingGroup::Kind::Finite) {
        std::vector<int> gens;
        for (const GroupElt& e : report.generator_images)
            gens.push_back(std::get<int>(e));
        report.surjective = static_cast<int>(finite_closure(grp.finite_group(), gens).size())
            == grp.finite_group().size();
    } else {
        std::vector<std::vector<Int>> gens;
        for (const GroupElt& e : report.generator_images)
            gens.push_back(std::get<std::vector<Int>>(e));
        report.surjective = abelian_generates(grp.abelian_group(), gens);
    }
    if (!report.surjective)
        report.failures.push_back("images of the generators do not generate the target group");

    // (iii) edgewise quotient condition: phi(deg_Zu e) equals the degree of
    // the connector-conjugated edge.
    report.edgewise = true;
    for (int e = 0; e < cat.edge_count(); ++e) {
        GroupElt lhs = walk_degree(x, edge_loop(tree, cat.hom(e), e));
        GroupElt rhs = grp.identity();
        if (pres.edge_generator[e] >= 0)
            rhs = report.generator_images[pres.edge_generator[e]];
        if (!grp.equal(lhs, rhs)) {
            report.edgewise = false;
            report.failures.push_back("edge " + cat.hom(e).name + ": phi(deg_Zu) = " + grp.format(rhs)
                                      + " but connector-conjugated degree is " + grp.format(lhs));
        }
    }
    return report;
}

Grading conjugate_grading(const SchurianCategory& cat, const Grading& x,
                          const std::vector<GroupElt>& a)
{
    if (static_cast<int>(a.size()) != cat.object_count())
        throw InputError("conjugator must assign a group element to every object");
    const GradingGroup& grp = x.group();
    std::vector<GroupElt> degrees;
    for (int e = 0; e < cat.edge_count(); ++e) {
        const BasisMorphism& h = cat.hom(e);
        degrees.push_back(grp.mul(grp.inv(grp.normalized(a[h.to])),
                                  grp.mul(x.degree(e), grp.normalized(a[h.from]))));
    }
    return Grading(grp, std::move(degrees));
}

SmashProduct smash_product(const SchurianCategory& cat, const Grading& x)
{
    const GradingGroup& grp = x.group();
    if (!grp.finitely_enumerable())
        throw MathError("smash product needs a finite grading group");
    std::vector<GroupElt> elts = grp.elements();
    int order = static_cast<int>(elts.size());

    // Element index lookup through the canonical format.
    std::map<std::string, int> elt_index;
    for (int i = 0; i < order; ++i)
        elt_index[grp.format(elts[i])] = i;
    auto index_of = [&](const GroupElt& e) { return elt_index.at(grp.format(e)); };

    std::vector<std::string> names;
    std::vector<std::pair<int, int>> origin;
    for (int v = 0; v < cat.object_count(); ++v)
        for (int i = 0; i < order; ++i) {
            names.push_back(cat.object_name(v) + "@" + grp.format(elts[i]));
            origin.emplace_back(v, i);
        }
    SchurianCategory smash(cat.field(), names);
    auto smash_object = [&](int v, int i) { return v * order + i; };

    // One lift of e_yx at every source (x, s), landing at (y, s deg^-1).
    std::vector<int> hom_origin;
    std::vector<std::vector<int>> lift(cat.edge_count(), std::vector<int>(order, -1));
    for (int e = 0; e < cat.edge_count(); ++e) {
        const BasisMorphism& h = cat.hom(e);
        for (int s = 0; s < order; ++s) {
            int t = index_of(grp.mul(elts[s], grp.inv(x.degree(e))));
            int id = smash.add_hom(h.name + "@" + grp.format(elts[s]),
                                   smash_object(h.from, s), smash_object(h.to, t));
            lift[e][s] = id;
            hom_origin.push_back(e);
        }
    }

    // Structure constants are inherited along the projection.
    for (auto [g, f] : cat.composable_pairs()) {
        Scalar c = cat.comp_scalar(g, f);
        for (int s = 0; s < order; ++s) {
            int t = index_of(grp.mul(elts[s], grp.inv(x.degree(f))));
            smash.set_composition(lift[g][t], lift[f][s], c);
        }
    }
    smash.set_metadata("smash-of", cat.metadata().count("generator") ? cat.metadata().at("generator") : "category");
    return SmashProduct{std::move(smash), std::move(origin), std::move(hom_origin), std::move(elts)};
}

SmashIsoReport smash_iso_witness(const SchurianCategory& cat, const Grading& x,
                                 const std::vector<GroupElt>& a)
{
    const GradingGroup& grp = x.group();
    SmashIsoReport report;
    report.ok = true;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    Grading conj = conjugate_grading(cat, x, a);
    SmashProduct upstairs = smash_product(cat, conj); // C # aX
    SmashProduct downstairs = smash_product(cat, x);  // C # X

    std::map<std::string, int> elt_index;
    for (std::size_t i = 0; i < downstairs.element_of_index.size(); ++i)
        elt_index[grp.format(downstairs.element_of_index[i])] = static_cast<int>(i);
    int order = static_cast<int>(downstairs.element_of_index.size());

    // H(x, s) = (x, s a_x^-1), identity on morphisms.
    std::vector<int> object_map(upstairs.category.object_count(), -1);
    std::vector<char> hit(downstairs.category.object_count(), 0);
    for (int o = 0; o < upstairs.category.object_count(); ++o) {
        auto [v, si] = upstairs.object_origin[o];
        const GroupElt& s = upstairs.element_of_index[si];
        int ti = elt_index.at(grp.format(grp.mul(s, grp.inv(grp.normalized(a[v])))));
        object_map[o] = v * order + ti;
        if (hit[object_map[o]])
            fail("object map is not injective at " + upstairs.category.object_name(o));
        hit[object_map[o]] = 1;
    }

    // Hom pattern and projection: each upstairs lift of e must map to the
    // downstairs lift of the same e between the mapped objects.
    std::vector<int> hom_map(upstairs.category.edge_count(), -1);
    for (int e = 0; e < upstairs.category.edge_count(); ++e) {
        const BasisMorphism& h = upstairs.category.hom(e);
        int image = downstairs.category.edge_between(object_map[h.from], object_map[h.to]);
        if (image < 0) {
            fail("hom " + h.name + " has no image between the mapped objects");
            continue;
        }
        if (downstairs.hom_origin[image] != upstairs.hom_origin[e])
            fail("hom " + h.name + " does not commute with the projections");
        hom_map[e] = image;
    }

    // Structure constants carried over.
    if (report.ok)
        for (auto [g, f] : upstairs.category.composable_pairs())
            if (!(upstairs.category.comp_scalar(g, f)
                  == downstairs.category.comp_scalar(hom_map[g], hom_map[f])))
                fail("structure constant mismatch on ("
                     + upstairs.category.hom(g).name + ", " + upstairs.category.hom(f).name + ")");
    return report;
}

} // namespace skcat
