// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Optionally exercises the installed CLI when given --cli <path>.

#include "comppoly/combinatorics.hpp"
#include "comppoly/report_io.hpp"
#include "comppoly/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace comppoly;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& note = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << label;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool suite_passes(const std::vector<std::string>& ids, const GridConfig& grid) {
    return run_suite(ids, grid).all_assert_pass;
}

// 1. every available route yields identical coefficient lists on the grid
void criterion_route_equivalence(const GridConfig& grid) {
    bool ok = suite_passes({"L1", "C1", "H1", "R1", "P1"}, grid);
    size_t instances = 0;
    for (unsigned l = 0; l <= grid.legendre_lmax; ++l) instances += l + 1;
    instances += grid.confluent_c.size() * (grid.confluent_lmax + 1) * (grid.confluent_numax + 1);
    instances += grid.hyp_abc.size() * (grid.hyp_lmax + 1) * (grid.hyp_numax + 1);
    instances += grid.relh_N.size() * (grid.relh_nmax + 1);
    instances += grid.prelag_N.size() * (grid.prelag_lmax + 1) * (grid.prelag_numax + 1);
    report(1, "route equivalence over the default grid", ok,
           std::to_string(instances) + " polynomial instances");
}

// 2. paper-anchored exact values
void criterion_exact_values(const GridConfig& grid) {
    bool ok = true;
    std::string note;
    auto fail = [&](const std::string& msg) {
        if (ok) note = msg;
        ok = false;
    };
    for (const Rational& N : grid.prelag_N)
        for (unsigned l = 0; l <= grid.prelag_lmax && ok; ++l) {
            FamilySpec spec = FamilySpec::pre_laguerre(N, l);
            auto P = cp_upto(spec, grid.prelag_numax, Route::GenFunc);
            Rational lr(static_cast<long>(l));
            Poly expected1 =
                lr * Poly(std::vector<Rational>{Rational(1), Rational(1) / N}) - Poly::x();
            if (P[1] != expected1) fail("prelaguerre nu=1 closed form");
            for (unsigned nu = 0; nu <= grid.prelag_numax && ok; ++nu) {
                Rational at0 = P[nu].eval(Rational(0));
                Rational want0 = nu <= l ? Rational(BigInt(factorial(nu))) * gen_binom(lr, nu)
                                         : Rational(0);
                if (at0 != want0) fail("prelaguerre value at x=0");
                Rational atN = P[nu].eval(-N);
                Rational sgn(nu % 2 == 0 ? 1 : -1);
                if (atN != Rational(BigInt(factorial(nu))) * sgn * gen_binom(-N, nu))
                    fail("prelaguerre value at x=-N");
            }
        }
    for (const Rational& c : grid.confluent_c)
        for (unsigned l = 0; l <= grid.confluent_lmax && ok; ++l) {
            auto P = cp_upto(FamilySpec::confluent(c, l), grid.confluent_numax, Route::GenFunc);
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= grid.confluent_numax && ok; ++nu)
                if (P[nu].eval(Rational(0)) !=
                    Rational(BigInt(factorial(nu))) * gen_binom(c - Rational(1) + lr, nu))
                    fail("confluent value at x=0");
        }
    for (const auto& abc : grid.hyp_abc)
        for (unsigned l = 0; l <= grid.hyp_lmax && ok; ++l) {
            auto P = cp_upto(FamilySpec::hypergeometric(abc[0], abc[1], abc[2], l),
                             grid.hyp_numax, Route::GenFunc);
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= grid.hyp_numax && ok; ++nu) {
                // nu! (nu+C-1 choose nu) with C = l-nu+c, i.e. nu! (l+c-1 choose nu)
                Rational C = lr - Rational(static_cast<long>(nu)) + abc[2];
                Rational nr(static_cast<long>(nu));
                if (P[nu].eval(Rational(0)) !=
                    Rational(BigInt(factorial(nu))) * gen_binom(nr + C - Rational(1), nu))
                    fail("hypergeometric value at x=0");
            }
        }
    for (unsigned l = 0; l <= grid.legendre_lmax && ok; ++l) {
        auto P = cp_upto(FamilySpec::legendre(l), l, Route::GenFunc);
        for (unsigned nu = 0; nu <= l && ok; ++nu) {
            Rational got = P[nu].eval(Rational(0));
            if (nu % 2 == 1) {
                if (!got.is_zero()) fail("legendre odd value at x=0");
            } else {
                unsigned k = nu / 2;
                Rational want = Rational(k % 2 == 0 ? 1 : -1) *
                                Rational(BigInt(factorial(nu))) *
                                gen_binom(Rational(static_cast<long>(l)), k);
                if (got != want) fail("legendre even value at x=0");
            }
        }
    }
    report(2, "paper-anchored exact values", ok, note);
}

// 3. ODE residuals and terminating-series matches
void criterion_ode_and_matches(const GridConfig& grid) {
    bool ok = suite_passes({"C4", "H3"}, grid);
    report(3, "ODE residuals zero; Kummer and Gauss matches exact", ok);
}

// 4. normalization chain
void criterion_norm_chain() {
    bool ok = legendre_norm(2, 0) == Rational(8) && legendre_norm(2, 1) == Rational(4, 3) &&
              legendre_norm(1, 1) == Rational(-1);
    for (unsigned l = 0; l <= 10 && ok; ++l) {
        Poly Pl = legendre_p(l);
        auto P = cp_upto(FamilySpec::legendre(l), l, Route::GenFunc);
        for (unsigned m = 0; m <= l && ok; ++m) {
            Rational nm = legendre_norm(l, m);
            ok = P[l - m] == (m % 2 == 0 ? nm : -nm) * Pl.derivative(m);
        }
    }
    report(4, "normalization chain for 0 <= m <= l <= 10", ok);
}

// 5. composition and addition laws at series and coefficient level
void criterion_composition(const GridConfig& grid) {
    bool ok = suite_passes({"C6", "C7", "C8", "L4", "L5", "H4", "P3", "P4"}, grid);
    report(5, "composition/addition laws (series and coefficients)", ok);
}

// 6. classical limits
void criterion_limits() {
    bool ok = true;
    std::string note;
    auto h2 = classical_limit_drift(Family::RelHermite, 2, {Rational(10), Rational(100)});
    if (h2[0].second != Rational(1, 5) || h2[1].second != Rational(1, 50)) {
        ok = false;
        note = "n=2 deviation is not 2/N";
    }
    for (unsigned n = 0; n <= 6 && ok; ++n)
        for (Family fam : {Family::RelHermite, Family::PreLaguerre}) {
            auto d = classical_limit_drift(fam, n, {Rational(10), Rational(100)});
            if (d[0].second.is_zero() && d[1].second.is_zero()) continue;
            if (d[0].second.is_zero() || d[1].second.is_zero()) {
                ok = false;
                note = "deviation vanished on one side";
                break;
            }
            Rational ratio = d[1].second / d[0].second;
            if (ratio < Rational(1, 20) || ratio > Rational(1, 5)) {
                ok = false;
                note = "ratio " + ratio.str() + " outside [1/20, 1/5]";
                break;
            }
        }
    report(6, "classical limit drift follows the 1/N law", ok, note);
}

// 7. diagnostics reproduce the printed inconsistencies without failing
void criterion_diagnostics(const GridConfig& grid) {
    SuiteResult r = run_suite({"H6", "H7", "G2"}, grid);
    bool ok = r.all_assert_pass;
    std::string note;
    auto find = [&](const std::string& id, const std::string& point) -> const CheckReport* {
        for (const auto& rep : r.reports)
            if (rep.id == id && rep.point == point) return &rep;
        return nullptr;
    };
    auto detail = [](const CheckReport& rep, const std::string& key) {
        for (const auto& [k, v] : rep.detail)
            if (k == key) return v;
        return std::string();
    };
    const CheckReport* h6 = find("H6", "a=0 b=0 c=1/2 l=2");
    if (!h6 || h6->status != "residual" || detail(*h6, "printed_nu1_coeff") != "-1" ||
        detail(*h6, "actual_nu1_coeff") != "-3") {
        ok = false;
        note = "H6 mismatch report";
    }
    const CheckReport* h7 = find("H7", "a=0 b=0 c=1/2 l=2");
    if (!h7 || h7->status != "residual" || detail(*h7, "residual_nu1") != "-10*x + 5") {
        ok = false;
        note = "H7 residual report";
    }
    const CheckReport* g2 = find("G2", "l=0 h=1/10 x=1/2 terms=40");
    if (!g2 || g2->status != "residual") {
        ok = false;
        note = "G2 report missing";
    } else {
        Rational res = Rational::from_string(detail(*g2, "residual"));
        if (res < Rational(1015, 10000) || res > Rational(1025, 10000)) {
            ok = false;
            note = "G2 residual " + res.str();
        }
    }
    report(7, "diagnostics reproduce the printed inconsistencies", ok, note);
}

// 8. perturbing any identity constant must break its check
void criterion_mutation_soundness(const GridConfig& grid) {
    bool ok = true;
    std::string note;
    size_t mutations = 0;
    for (const CheckInfo& info : check_catalog()) {
        if (info.cls != CheckClass::Assert) continue;
        for (int slot = 0; slot < info.mutation_slots; ++slot) {
            Mutation m{info.id, slot, Rational(1)};
            SuiteResult r = run_suite({info.id}, grid, &m, true);
            ++mutations;
            if (r.all_assert_pass) {
                ok = false;
                note = info.id + " slot " + std::to_string(slot) + " undetected";
            }
        }
    }
    report(8, "mutation soundness of every assert-class identity", ok,
           note.empty() ? std::to_string(mutations) + " mutations all detected" : note);
}

// 9. byte-identical reports across runs
void criterion_determinism(const GridConfig& grid, const std::string& cli) {
    std::string a = checks_to_json(run_suite({}, grid));
    std::string b = checks_to_json(run_suite({}, grid));
    bool ok = a == b;
    std::string note = "library reports identical";
    if (ok && !cli.empty()) {
        namespace fs = std::filesystem;
        fs::path tmp = fs::temp_directory_path();
        fs::path f1 = tmp / "comppoly_check_run1.json";
        fs::path f2 = tmp / "comppoly_check_run2.json";
        std::string cmd1 = cli + " check --suite all --grid default > " + f1.string();
        std::string cmd2 = cli + " check --suite all --grid default > " + f2.string();
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        std::string out1 = slurp(f1), out2 = slurp(f2);
        ok = rc1 == 0 && rc2 == 0 && !out1.empty() && out1 == out2;
        note = ok ? "cli output byte-identical, exit 0" : "cli runs disagree";
        fs::remove(f1);
        fs::remove(f2);
    }
    report(9, "determinism of check reports", ok, note);
}

void cli_contract(const std::string& cli) {
    if (cli.empty()) return;
    auto run = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        return WEXITSTATUS(rc);
    };
    bool ok = true;
    std::string note;
    if (run("gen --family legendre --l 2 --nu-max 2") != 0) {
        ok = false;
        note = "gen exit code";
    }
    if (run("gen --family confluent --l 2 --nu-max 1") != 2) {
        ok = false;
        note = "missing parameter should exit 2";
    }
    if (run("check --suite NOPE") != 2) {
        ok = false;
        note = "unknown suite should exit 2";
    }
    if (run("eval --family legendre --l 2 --nu 2 --x 0") != 0) {
        ok = false;
        note = "eval exit code";
    }
    if (run("table legendre-norms --l-max 2") != 0) {
        ok = false;
        note = "table exit code";
    }
    if (run("probe translation --l 0 --h 1/10 --x 1/2 --terms 5") != 0) {
        ok = false;
        note = "probe exit code";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "cli exit-code contract";
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    GridConfig grid = GridConfig::defaults();
    criterion_route_equivalence(grid);
    criterion_exact_values(grid);
    criterion_ode_and_matches(grid);
    criterion_norm_chain();
    criterion_composition(grid);
    criterion_limits();
    criterion_diagnostics(grid);
    criterion_mutation_soundness(grid);
    criterion_determinism(grid, cli);
    cli_contract(cli);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
