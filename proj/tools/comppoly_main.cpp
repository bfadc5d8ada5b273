#include "comppoly/report_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace comppoly;

struct FamilyArgs {
    std::string family;
    std::string c, a, b, N;
    unsigned l = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool need_l = true) {
    cmd->add_option("--family", args.family, "family name")->required();
    if (need_l) cmd->add_option("--l", args.l, "degree index l")->required();
    cmd->add_option("--c", args.c, "parameter c (rational p/q)");
    cmd->add_option("--a", args.a, "parameter a (rational p/q)");
    cmd->add_option("--b", args.b, "parameter b (rational p/q)");
    cmd->add_option("--N", args.N, "parameter N (rational p/q)");
}

FamilySpec build_spec(const FamilyArgs& args) {
    auto fam = family_from_name(args.family);
    if (!fam || *fam == Family::General)
        throw std::invalid_argument("unknown family '" + args.family + "'");
    FamilySpec spec;
    spec.family = *fam;
    spec.l = args.l;
    if (!args.c.empty()) spec.c = Rational::from_string(args.c);
    if (!args.a.empty()) spec.a = Rational::from_string(args.a);
    if (!args.b.empty()) spec.b = Rational::from_string(args.b);
    if (!args.N.empty()) spec.N = Rational::from_string(args.N);
    spec.validate();
    return spec;
}

int cmd_gen(const FamilyArgs& args, unsigned nu_max, const std::string& route_s,
            const std::string& format, std::optional<unsigned> order) {
    FamilySpec spec = build_spec(args);
    auto route = route_from_name(route_s);
    if (!route) throw std::invalid_argument("unknown route '" + route_s + "'");
    unsigned expand_to = nu_max;
    if (order) {
        if (*order < nu_max)
            throw std::invalid_argument("--order must be at least --nu-max");
        if (*route != Route::GenFunc)
            throw std::invalid_argument("--order applies to the genfunc route");
        expand_to = *order;
    }
    std::vector<Poly> polys = cp_upto(spec, expand_to, *route);
    std::vector<OutputRecord> records;
    for (unsigned nu = 0; nu <= nu_max; ++nu)
        records.push_back(make_record(spec, nu, *route, polys[nu]));
    if (format == "json")
        std::cout << records_to_json(records);
    else if (format == "csv")
        std::cout << records_to_csv(records);
    else if (format == "latex")
        std::cout << records_to_latex(records);
    else
        throw std::invalid_argument("unknown format '" + format + "'");
    return 0;
}

int cmd_check(const std::string& suite, const std::string& grid_name) {
    std::vector<std::string> ids;
    if (suite != "all") {
        std::string cur;
        for (char ch : suite + ",") {
            if (ch == ',') {
                if (!cur.empty()) ids.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (ids.empty()) throw std::invalid_argument("empty --suite selection");
    }
    GridConfig grid = GridConfig::by_name(grid_name);
    SuiteResult result = run_suite(ids, grid);
    std::cout << checks_to_json(result);
    return result.all_assert_pass ? 0 : 1;
}

int cmd_eval(const FamilyArgs& args, unsigned nu, const std::string& route_s,
             const std::string& x) {
    FamilySpec spec = build_spec(args);
    auto route = route_from_name(route_s);
    if (!route) throw std::invalid_argument("unknown route '" + route_s + "'");
    Poly p = cp(spec, nu, *route);
    std::cout << p.eval(Rational::from_string(x)).str() << "\n";
    return 0;
}

int cmd_table_norms(unsigned l_max) {
    std::vector<std::tuple<unsigned, unsigned, Rational>> rows;
    for (unsigned l = 0; l <= l_max; ++l)
        for (unsigned m = 0; m <= l; ++m) rows.emplace_back(l, m, legendre_norm(l, m));
    std::cout << norms_to_json(rows);
    return 0;
}

int cmd_probe(unsigned l, const std::string& h, const std::string& x, unsigned terms) {
    TranslationProbe probe =
        probe_translation(l, Rational::from_string(h), Rational::from_string(x), terms);
    std::cout << probe_to_json(probe);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary polynomial toolkit"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    FamilyArgs gen_args;
    unsigned gen_numax = 0;
    std::string gen_route = "genfunc", gen_format = "json";
    std::optional<unsigned> gen_order;
    auto* gen = app.add_subcommand("gen", "emit coefficient tables");
    add_family_options(gen, gen_args);
    gen->add_option("--nu-max", gen_numax, "highest index to emit")->required();
    gen->add_option("--route", gen_route, "rodrigues|genfunc|recursion|explicit");
    gen->add_option("--format", gen_format, "json|csv|latex");
    gen->add_option("--order", [&gen_order](const std::vector<std::string>& vals) {
        gen_order = static_cast<unsigned>(std::stoul(vals[0]));
        return true;
    }, "series over-expansion order (genfunc route)");

    std::string check_suite = "all", check_grid = "default";
    auto* check = app.add_subcommand("check", "run identity suites");
    check->add_option("--suite", check_suite, "comma-separated check ids or 'all'");
    check->add_option("--grid", check_grid, "small|default");

    FamilyArgs eval_args;
    unsigned eval_nu = 0;
    std::string eval_route = "genfunc", eval_x;
    auto* eval = app.add_subcommand("eval", "evaluate one polynomial exactly");
    add_family_options(eval, eval_args);
    eval->add_option("--nu", eval_nu, "index nu")->required();
    eval->add_option("--x", eval_x, "evaluation point (rational p/q)")->required();
    eval->add_option("--route", eval_route, "construction route");

    std::string table_kind;
    unsigned table_lmax = 0;
    auto* table = app.add_subcommand("table", "print normalization tables");
    table->add_option("kind", table_kind, "table name (legendre-norms)")->required();
    table->add_option("--l-max", table_lmax, "largest l")->required();

    std::string probe_kind, probe_h, probe_x;
    unsigned probe_l = 0, probe_terms = 1;
    auto* probe = app.add_subcommand("probe", "run diagnostic probes");
    probe->add_option("kind", probe_kind, "probe name (translation)")->required();
    probe->add_option("--l", probe_l, "degree index l")->required();
    probe->add_option("--h", probe_h, "shift h (rational p/q)")->required();
    probe->add_option("--x", probe_x, "evaluation point (rational p/q)")->required();
    probe->add_option("--terms", probe_terms, "number of partial-sum terms")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args, gen_numax, gen_route, gen_format, gen_order);
        if (check->parsed()) return cmd_check(check_suite, check_grid);
        if (eval->parsed()) return cmd_eval(eval_args, eval_nu, eval_route, eval_x);
        if (table->parsed()) {
            if (table_kind != "legendre-norms")
                throw std::invalid_argument("unknown table '" + table_kind + "'");
            return cmd_table_norms(table_lmax);
        }
        if (probe->parsed()) {
            if (probe_kind != "translation")
                throw std::invalid_argument("unknown probe '" + probe_kind + "'");
            return cmd_probe(probe_l, probe_h, probe_x, probe_terms);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
