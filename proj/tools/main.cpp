#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "skcat/io.hpp"

namespace {

using namespace skcat;

void print(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

SchurianCategory read_category(bool no_validate, bool strict)
{
    Json j;
    try {
        j = Json::parse(std::cin);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("standard input: ") + e.what());
    }
    SchurianCategory cat = category_from_json(j);
    if (!no_validate) {
        std::vector<std::string> violations = cat.validate(strict);
        if (!violations.empty())
            throw MathError("invalid category: " + violations.front() + " ("
                            + std::to_string(violations.size()) + " violation(s); run 'validate')");
    }
    return cat;
}

int base_index(const SchurianCategory& cat, const std::string& base)
{
    return base.empty() ? 0 : cat.object_index(base);
}

Json derivation_to_json(const SchurianCategory& cat, const Derivation& d)
{
    Json out;
    for (int e = 0; e < cat.edge_count(); ++e)
        out[cat.hom(e).name] = d.lambda[e].str();
    return out;
}

struct Options {
    std::string base;
    std::string field = "q";
    std::string emit = "json";
    std::string grading_file;
    std::string conjugator_file;
    bool no_validate = false;
    bool strict = false;
    bool simplify = false;
    int gen_n = 0;
    int gen_m = 0;
    int gen_s = 0;
};

int run_gen_groupoid(const Options& opt)
{
    print(category_to_json(build_complete_groupoid(opt.gen_n, Field::parse(opt.field))));
    return 0;
}

int run_gen_ladder(const Options& opt)
{
    print(category_to_json(build_broken_ladder(opt.gen_m, opt.gen_s, Field::parse(opt.field))));
    return 0;
}

int run_validate(const Options& opt)
{
    SchurianCategory cat = read_category(true, false);
    std::vector<std::string> violations = cat.validate(opt.strict);
    print({{"valid", violations.empty()},
           {"violations", violations},
           {"objects", cat.object_count()},
           {"homs", cat.edge_count()}});
    return violations.empty() ? 0 : 1;
}

int run_cw(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    CwComplex cw = build_cw(cat);
    if (opt.emit == "dot")
        std::cout << cw_to_dot(cw);
    else
        print(cw_to_json(cw));
    return 0;
}

int run_pi1(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    CwComplex cw = build_cw(cat);
    GroupPresentation pres = pi1_presentation(cw, base_index(cat, opt.base));
    if (opt.simplify)
        pres = simplify_presentation(pres);
    Json j = presentation_to_json(pres, cw);
    Json out{{"generators", pres.generators.size()},
             {"relators", pres.relators.size()},
             {"abelianization", abelian_invariants_to_json(abelianization(pres))},
             {"presentation", std::move(j)}};
    if (pres.basepoint >= 0)
        out["base"] = cat.object_name(pres.basepoint);
    print(out);
    return 0;
}

Json tree_names_json(const GroupPresentation& pres, const SchurianCategory& cat)
{
    Json tree = Json::array();
    if (pres.tree)
        for (int e : pres.tree->tree_edges)
            tree.push_back(cat.hom(e).name);
    return tree;
}

int run_abelian(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    CwComplex cw = build_cw(cat);
    GroupPresentation pres = pi1_presentation(cw, base_index(cat, opt.base));
    Json out = abelian_invariants_to_json(abelianization(pres));
    out["base"] = cat.object_name(pres.basepoint);
    out["tree"] = tree_names_json(pres, cat);
    Json h1 = abelian_invariants_to_json(cellular_homology_h1(cw));
    out["cellularH1"] = std::move(h1);
    print(out);
    return 0;
}

int run_characters(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    Field field = Field::parse(opt.field);
    CwComplex cw = build_cw(cat);
    GroupPresentation pres = pi1_presentation(cw, base_index(cat, opt.base));
    auto basis = character_space(pres, field);
    Json jbasis = Json::array();
    for (const auto& chi : basis) {
        Json entry;
        for (std::size_t g = 0; g < pres.generators.size(); ++g)
            entry[pres.generators[g]] = chi[g].str();
        jbasis.push_back(std::move(entry));
    }
    print({{"field", field.name()},
           {"base", cat.object_name(pres.basepoint)},
           {"tree", tree_names_json(pres, cat)},
           {"dimension", basis.size()},
           {"basis", std::move(jbasis)}});
    return 0;
}

int run_hh1(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    Field field = Field::parse(opt.field);
    Hh1Space space = hh1(cat, field);
    Json basis = Json::array();
    for (const Derivation& d : space.coset_basis)
        basis.push_back(derivation_to_json(cat, d));
    print({{"field", field.name()},
           {"dimDerivations", space.derivation_basis.size()},
           {"dimInner", space.inner_basis.size()},
           {"dimHH1", space.dim()},
           {"cosetBasis", std::move(basis)}});
    return 0;
}

int run_hurewicz(const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    Field field = Field::parse(opt.field);
    int base = base_index(cat, opt.base);
    HurewiczReport report = verify_hurewicz_iso(cat, field, base);
    Json matrix = Json::array();
    for (const auto& col : report.image_in_coset_coordinates) {
        Json jcol = Json::array();
        for (const Scalar& v : col)
            jcol.push_back(v.str());
        matrix.push_back(std::move(jcol));
    }
    GroupPresentation pres = pi1_presentation(build_cw(cat), base);
    print({{"field", field.name()},
           {"base", cat.object_name(base)},
           {"tree", tree_names_json(pres, cat)},
           {"dimCharacters", report.dim_characters},
           {"dimHH1", report.dim_hh1},
           {"rank", report.image_rank},
           {"imageMatrix", std::move(matrix)},
           {"verdict", report.isomorphism ? "isomorphism" : "not an isomorphism"}});
    return report.isomorphism ? 0 : 1;
}

int run_grading(const std::string& action, const Options& opt)
{
    SchurianCategory cat = read_category(opt.no_validate, opt.strict);
    int base = base_index(cat, opt.base);

    if (action == "universal") {
        CwComplex cw = build_cw(cat);
        Grading u = universal_grading(cw, base);
        Json out = grading_to_json(cat, u);
        const GroupPresentation& pres = u.group().presentation();
        Json meta{{"base", cat.object_name(base)}, {"connectors", Json::object()}};
        Json tree = Json::array();
        for (int e : pres.tree->tree_edges)
            tree.push_back(cat.hom(e).name);
        meta["tree"] = std::move(tree);
        for (int v = 0; v < cat.object_count(); ++v)
            meta["connectors"][cat.object_name(v)] = walk_to_json(pres.tree->walk_from_base[v], cat);
        out["metadata"] = std::move(meta);
        print(out);
        return 0;
    }

    if (opt.grading_file.empty())
        throw InputError("grading " + action + " needs --grading FILE");
    Grading x = grading_from_json(load_json_file(opt.grading_file), cat);

    if (action == "check") {
        std::vector<std::string> violations = check_grading(cat, x);
        print({{"valid", violations.empty()}, {"violations", violations}});
        return violations.empty() ? 0 : 1;
    }
    if (action == "connected") {
        bool connected = is_connected_grading(cat, x, base);
        print({{"connected", connected}, {"base", cat.object_name(base)}});
        return 0;
    }
    if (action == "quotient") {
        QuotientReport report = quotient_morphism(cat, x, base);
        CwComplex cw = build_cw(cat);
        GroupPresentation pres = pi1_presentation(cw, base);
        Json images;
        for (std::size_t g = 0; g < pres.generators.size(); ++g)
            images[pres.generators[g]] = x.group().format(report.generator_images[g]);
        print({{"base", cat.object_name(base)},
               {"tree", tree_names_json(pres, cat)},
               {"generatorImages", std::move(images)},
               {"relatorsKilled", report.relators_killed},
               {"surjective", report.surjective},
               {"edgewiseQuotient", report.edgewise},
               {"failures", report.failures},
               {"verdict", report.ok() ? "quotient" : "failed"}});
        return report.ok() ? 0 : 1;
    }
    if (action == "smash") {
        SmashProduct smash = smash_product(cat, x);
        Json out = category_to_json(smash.category);
        Json objects = Json::object(), homs = Json::object();
        for (int o = 0; o < smash.category.object_count(); ++o)
            objects[smash.category.object_name(o)] = cat.object_name(smash.object_origin[o].first);
        for (int e = 0; e < smash.category.edge_count(); ++e)
            homs[smash.category.hom(e).name] = cat.hom(smash.hom_origin[e]).name;
        out["projection"] = {{"objects", std::move(objects)}, {"homs", std::move(homs)}};
        out["components"] = connected_component_count(smash.category);
        print(out);
        return 0;
    }
    if (action == "conjugate") {
        if (opt.conjugator_file.empty())
            throw InputError("grading conjugate needs --conjugator FILE");
        std::vector<GroupElt> a =
            conjugator_from_json(load_json_file(opt.conjugator_file), cat, x.group());
        print(grading_to_json(cat, conjugate_grading(cat, x, a)));
        return 0;
    }
    throw InputError("unknown grading action: " + action
                     + " (expected check|connected|universal|quotient|smash|conjugate)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schurian k-category toolkit: CW-complexes, fundamental groups, "
                 "gradings, smash coverings and first Hochschild-Mitchell cohomology"};
    app.require_subcommand(1);
    Options opt;

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--no-validate", opt.no_validate, "skip validation of the input category");
        cmd->add_flag("--strict", opt.strict, "demand exhaustive composition listing");
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a generated category on stdout");
    gen->require_subcommand(1);
    CLI::App* gen_groupoid = gen->add_subcommand("groupoid", "complete Schurian groupoid on N objects");
    gen_groupoid->add_option("N", opt.gen_n, "object count")->required();
    gen_groupoid->add_option("--field", opt.field, "q | gf:P");
    CLI::App* gen_ladder = gen->add_subcommand("ladder", "broken ladder truncation, break at level S");
    gen_ladder->add_option("M", opt.gen_m, "top level")->required();
    gen_ladder->add_option("S", opt.gen_s, "broken level")->required();
    gen_ladder->add_option("--field", opt.field, "q | gf:P");

    CLI::App* validate = app.add_subcommand("validate", "validation report for the category on stdin");
    validate->add_flag("--strict", opt.strict, "demand exhaustive composition listing");

    CLI::App* cw = app.add_subcommand("cw", "CW-complex of the category on stdin");
    cw->add_option("--emit", opt.emit, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    add_input_flags(cw);

    CLI::App* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    pi1->add_option("--base", opt.base, "base object (default: first declared)");
    pi1->add_flag("--simplify", opt.simplify, "apply sound Tietze moves");
    add_input_flags(pi1);

    CLI::App* abelian = app.add_subcommand("abelian", "abelianization of pi1 plus cellular H1");
    abelian->add_option("--base", opt.base, "base object");
    add_input_flags(abelian);

    CLI::App* characters = app.add_subcommand("characters", "basis of Hom(pi1, k+)");
    characters->add_option("--base", opt.base, "base object");
    characters->add_option("--field", opt.field, "q | gf:P");
    add_input_flags(characters);

    CLI::App* hh1cmd = app.add_subcommand("hh1", "first Hochschild-Mitchell cohomology");
    hh1cmd->add_option("--field", opt.field, "q | gf:P");
    add_input_flags(hh1cmd);

    CLI::App* hurewicz = app.add_subcommand("hurewicz", "verify the Hurewicz isomorphism");
    hurewicz->add_option("--base", opt.base, "base object");
    hurewicz->add_option("--field", opt.field, "q | gf:P");
    add_input_flags(hurewicz);

    CLI::App* grading = app.add_subcommand("grading", "grading operations");
    std::string action;
    grading->add_option("action", action, "check|connected|universal|quotient|smash|conjugate")
        ->required();
    grading->add_option("--grading", opt.grading_file, "grading file (JSON)");
    grading->add_option("--conjugator", opt.conjugator_file, "conjugator file (JSON)");
    grading->add_option("--base", opt.base, "base object");
    add_input_flags(grading);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_groupoid->parsed())
            return run_gen_groupoid(opt);
        if (gen_ladder->parsed())
            return run_gen_ladder(opt);
        if (validate->parsed())
            return run_validate(opt);
        if (cw->parsed())
            return run_cw(opt);
        if (pi1->parsed())
            return run_pi1(opt);
        if (abelian->parsed())
            return run_abelian(opt);
        if (characters->parsed())
            return run_characters(opt);
        if (hh1cmd->parsed())
            return run_hh1(opt);
        if (hurewicz->parsed())
            return run_hurewicz(opt);
        if (grading->parsed())
            return run_grading(action, opt);
        throw InputError("no subcommand");
    } catch (const InputError& e) {
        print({{"error", e.what()}, {"kind", "input"}});
        return 2;
    } catch (const MathError& e) {
        print({{"error", e.what()}, {"kind", "math"}});
        return 1;
    } catch (const std::exception& e) {
        print({{"error", e.what()}, {"kind", "internal"}});
        return 2;
    }
}
