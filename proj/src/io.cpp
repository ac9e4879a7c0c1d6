#include "skcat/io.hpp"

#include <sstream>

namespace skcat {

namespace {

std::string scalar_text(const Json& j, const std::string& where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw InputError(where + ": scalars must be exact strings or integers");
}

std::string require_string(const Json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw InputError(where + ": missing string field '" + key + "'");
    return j.at(key).get<std::string>();
}

} // namespace

Json category_to_json(const SchurianCategory& cat)
{
    Json j;
    j["field"] = cat.field().name();
    j["objects"] = cat.objects();
    Json homs = Json::array();
    for (const auto& h : cat.homs())
        homs.push_back({{"from", cat.object_name(h.from)},
                        {"to", cat.object_name(h.to)},
                        {"name", h.name}});
    j["homs"] = std::move(homs);

    Json comps = Json::array();
    for (auto [g, f] : cat.composable_pairs()) {
        if (!cat.composition_listed(g, f))
            continue;
        Scalar c = cat.comp_scalar(g, f);
        Json entry{{"g", cat.hom(g).name}, {"f", cat.hom(f).name}, {"scalar", c.str()}};
        if (c.is_zero()) {
            entry["result"] = "zero";
        } else {
            int x = cat.hom(f).from, z = cat.hom(g).to;
            entry["result"] = x == z ? "identity" : cat.hom(cat.edge_between(x, z)).name;
        }
        comps.push_back(std::move(entry));
    }
    j["compositions"] = std::move(comps);
    if (!cat.metadata().empty())
        j["metadata"] = cat.metadata();
    return j;
}

SchurianCategory category_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("category file: top level must be an object");
    Field field = Field::parse(j.contains("field") ? require_string(j, "field", "category file")
                                                   : "rational");
    if (!j.contains("objects") || !j.at("objects").is_array())
        throw InputError("category file: missing 'objects' array");
    std::vector<std::string> objects;
    for (const Json& o : j.at("objects")) {
        if (!o.is_string())
            throw InputError("category file: object names must be strings");
        objects.push_back(o.get<std::string>());
    }
    SchurianCategory cat(field, std::move(objects));

    if (j.contains("homs"))
        for (const Json& h : j.at("homs"))
            cat.add_hom(require_string(h, "name", "hom"),
                        cat.object_index(require_string(h, "from", "hom")),
                        cat.object_index(require_string(h, "to", "hom")));

    if (j.contains("compositions"))
        for (const Json& e : j.at("compositions")) {
            int g = cat.edge_index(require_string(e, "g", "composition"));
            int f = cat.edge_index(require_string(e, "f", "composition"));
            if (!cat.composable(g, f))
                throw InputError("composition (" + cat.hom(g).name + ", " + cat.hom(f).name
                                 + "): pair is not composable");
            Scalar c = Scalar::parse(field, e.contains("scalar") ? scalar_text(e.at("scalar"), "composition") : "1");
            if (e.contains("result")) {
                std::string result = require_string(e, "result", "composition");
                int x = cat.hom(f).from, z = cat.hom(g).to;
                if (result == "zero") {
                    if (!c.is_zero())
                        throw InputError("composition (" + cat.hom(g).name + ", " + cat.hom(f).name
                                         + "): result 'zero' with nonzero scalar");
                } else if (c.is_zero()) {
                    throw InputError("composition (" + cat.hom(g).name + ", " + cat.hom(f).name
                                     + "): scalar 0 must have result 'zero'");
                } else if (result == "identity") {
                    if (x != z)
                        throw InputError("composition (" + cat.hom(g).name + ", " + cat.hom(f).name
                                         + "): result 'identity' but endpoints differ");
                } else {
                    int target = cat.edge_index(result);
                    if (x == z || target != cat.edge_between(x, z))
                        throw InputError("composition (" + cat.hom(g).name + ", " + cat.hom(f).name
                                         + "): declared result '" + result
                                         + "' is not the basis of the target hom space");
                }
            }
            cat.set_composition(g, f, c);
        }

    if (j.contains("metadata"))
        for (auto it = j.at("metadata").begin(); it != j.at("metadata").end(); ++it)
            if (it.value().is_string())
                cat.set_metadata(it.key(), it.value().get<std::string>());
    return cat;
}

namespace {

Json word_to_signed_names(const Word& w, const std::vector<std::string>& names)
{
    Json arr = Json::array();
    for (const Letter& l : w)
        arr.push_back(l.second > 0 ? names[l.first] : "-" + names[l.first]);
    return arr;
}

Json group_to_json(const GradingGroup& grp)
{
    Json g;
    switch (grp.kind()) {
    case GradingGroup::Kind::Finite: {
        const FiniteGroup& fg = grp.finite_group();
        g["finite"] = {{"elements", fg.names()}, {"table", fg.table()}};
        break;
    }
    case GradingGroup::Kind::Abelian: {
        const FgAbelianGroup& ab = grp.abelian_group();
        Json torsion = Json::array();
        for (const Int& m : ab.torsion)
            torsion.push_back(m.str());
        g["abelian"] = {{"rank", ab.rank}, {"torsion", std::move(torsion)}};
        break;
    }
    case GradingGroup::Kind::Presented: {
        const GroupPresentation& pres = grp.presentation();
        Json relators = Json::array();
        for (const Word& r : pres.relators)
            relators.push_back(word_to_signed_names(r, pres.generators));
        g["presented"] = {{"generators", pres.generators}, {"relators", std::move(relators)}};
        break;
    }
    }
    return g;
}

} // namespace

Json grading_to_json(const SchurianCategory& cat, const Grading& x)
{
    Json j;
    j["group"] = group_to_json(x.group());
    Json degrees = Json::object();
    for (int e = 0; e < cat.edge_count(); ++e) {
        if (x.group().kind() == GradingGroup::Kind::Presented)
            degrees[cat.hom(e).name] = word_to_signed_names(std::get<Word>(x.degree(e)),
                                                            x.group().presentation().generators);
        else
            degrees[cat.hom(e).name] = x.group().format(x.degree(e));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

Grading grading_from_json(const Json& j, const SchurianCategory& cat)
{
    if (!j.is_object() || !j.contains("group"))
        throw InputError("grading file: missing 'group'");
    const Json& g = j.at("group");
    GradingGroup grp = [&]() {
        if (g.contains("finite")) {
            const Json& fin = g.at("finite");
            if (!fin.contains("elements") || !fin.contains("table"))
                throw InputError("grading file: finite group needs 'elements' and 'table'");
            std::vector<std::string> names = fin.at("elements").get<std::vector<std::string>>();
            std::vector<std::vector<int>> table = fin.at("table").get<std::vector<std::vector<int>>>();
            return GradingGroup::finite(FiniteGroup(std::move(names), std::move(table)));
        }
        if (g.contains("abelian")) {
            const Json& ab = g.at("abelian");
            FgAbelianGroup group;
            group.rank = ab.contains("rank") ? ab.at("rank").get<int>() : 0;
            if (ab.contains("torsion"))
                for (const Json& t : ab.at("torsion"))
                    group.torsion.emplace_back(scalar_text(t, "torsion"));
            return GradingGroup::abelian(std::move(group));
        }
        throw InputError("grading file: group must be 'finite' or 'abelian'");
    }();

    if (!j.contains("degrees") || !j.at("degrees").is_object())
        throw InputError("grading file: missing 'degrees' map");
    const Json& degrees = j.at("degrees");
    std::vector<GroupElt> per_edge;
    for (int e = 0; e < cat.edge_count(); ++e) {
        const std::string& name = cat.hom(e).name;
        if (!degrees.contains(name))
            throw InputError("grading file: no degree for hom '" + name + "'");
        const Json& v = degrees.at(name);
        if (v.is_string()) {
            per_edge.push_back(grp.parse_element(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            per_edge.push_back(grp.parse_element(std::to_string(v.get<long long>())));
        } else if (v.is_array()) {
            std::string text = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i)
                    text += ",";
                text += scalar_text(v.at(i), "degree");
            }
            per_edge.push_back(grp.parse_element(text + "]"));
        } else {
            throw InputError("grading file: bad degree for hom '" + name + "'");
        }
    }
    return Grading(std::move(grp), std::move(per_edge));
}

std::vector<GroupElt> conjugator_from_json(const Json& j, const SchurianCategory& cat,
                                           const GradingGroup& group)
{
    if (!j.is_object())
        throw InputError("conjugator file: expected an object-name map");
    std::vector<GroupElt> a(cat.object_count(), group.identity());
    for (auto it = j.begin(); it != j.end(); ++it) {
        int x = cat.object_index(it.key());
        if (it.value().is_string())
            a[x] = group.parse_element(it.value().get<std::string>());
        else if (it.value().is_number_integer())
            a[x] = group.parse_element(std::to_string(it.value().get<long long>()));
        else if (it.value().is_array()) {
            std::string text = "[";
            for (std::size_t i = 0; i < it.value().size(); ++i) {
                if (i)
                    text += ",";
                text += scalar_text(it.value().at(i), "conjugator");
            }
            a[x] = group.parse_element(text + "]");
        } else
            throw InputError("conjugator file: bad element for object " + it.key());
    }
    return a;
}

Json cw_to_json(const CwComplex& cw)
{
    Json j;
    j["vertices"] = cw.vertex_count();
    j["edges"] = cw.edge_count();
    j["twoCells"] = cw.cell_count();
    j["euler"] = euler_characteristic(cw);
    Json skeleton = Json::array();
    for (const auto& e : cw.edges())
        skeleton.push_back({{"name", e.name},
                            {"from", cw.vertex_names()[e.from]},
                            {"to", cw.vertex_names()[e.to]}});
    j["skeleton"] = std::move(skeleton);
    Json cells = Json::array();
    for (const auto& c : cw.cells()) {
        Json cell{{"kind", c.bigon ? "bigon" : "triangle"},
                  {"f", cw.edges()[c.edge_f].name},
                  {"g", cw.edges()[c.edge_g].name}};
        if (!c.bigon)
            cell["composite"] = cw.edges()[c.edge_h].name;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    return j;
}

std::string cw_to_dot(const CwComplex& cw)
{
    std::ostringstream out;
    out << "digraph cw {\n";
    for (const auto& v : cw.vertex_names())
        out << "  \"" << v << "\";\n";
    for (const auto& e : cw.edges())
        out << "  \"" << cw.vertex_names()[e.from] << "\" -> \"" << cw.vertex_names()[e.to]
            << "\" [label=\"" << e.name << "\"];\n";
    out << "  // 2-cells (no DOT notion):\n";
    for (const auto& c : cw.cells()) {
        out << "  // " << (c.bigon ? "bigon" : "triangle") << " (" << cw.edges()[c.edge_g].name
            << ", " << cw.edges()[c.edge_f].name << ")";
        if (!c.bigon)
            out << " ~ " << cw.edges()[c.edge_h].name;
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

Json abelian_invariants_to_json(const AbelianInvariants& inv)
{
    Json torsion = Json::array();
    for (const Int& d : inv.torsion)
        torsion.push_back(d.str());
    return Json{{"rank", inv.free_rank}, {"torsion", std::move(torsion)}};
}

Json presentation_to_json(const GroupPresentation& pres, const CwComplex& cw)
{
    Json j;
    j["generators"] = pres.generators;
    Json relators = Json::array();
    for (const Word& r : pres.relators)
        relators.push_back(word_to_signed_names(r, pres.generators));
    j["relators"] = std::move(relators);
    if (pres.basepoint >= 0)
        j["base"] = cw.vertex_names()[pres.basepoint];
    if (pres.tree) {
        Json tree = Json::array();
        for (int e : pres.tree->tree_edges)
            tree.push_back(cw.edges()[e].name);
        j["tree"] = std::move(tree);
    }
    return j;
}

Json walk_to_json(const Walk& w, const SchurianCategory& cat)
{
    Json steps = Json::array();
    for (const WalkStep& s : w.steps)
        steps.push_back(s.sign > 0 ? cat.hom(s.edge).name : "-" + cat.hom(s.edge).name);
    return steps;
}

} // namespace skcat
