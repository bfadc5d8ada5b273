#ifndef COMPPOLY_VERIFY_HPP
#define COMPPOLY_VERIFY_HPP

#include "comppoly/families.hpp"

#include <array>
#include <string>
#include <vector>

namespace comppoly {

enum class CheckClass { Assert, Diagnose };

struct CheckInfo {
    std::string id;
    CheckClass cls;
    int mutation_slots;
    std::string summary;
};

/// Closed catalog of named checks. Assert-class checks must hold exactly;
/// diagnose-class checks report residuals without ever failing a run.
const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& id);

/// Harness self-test hook: adds delta to one named constant of one check.
struct Mutation {
    std::string check_id;
    int slot = 0;
    Rational delta;
};

struct CheckReport {
    std::string id;
    std::string point;
    std::string status;  // "pass" | "fail" | "residual"
    std::string witness;
    std::vector<std::pair<std::string, std::string>> detail;
};

struct GridConfig {
    std::string name;
    unsigned legendre_lmax = 0;
    std::vector<Rational> confluent_c;
    unsigned confluent_lmax = 0, confluent_numax = 0;
    std::vector<std::array<Rational, 3>> hyp_abc;
    unsigned hyp_lmax = 0, hyp_numax = 0;
    std::vector<Rational> relh_N;
    unsigned relh_nmax = 0;
    std::vector<Rational> prelag_N;
    unsigned prelag_lmax = 0, prelag_numax = 0;
    unsigned comp_lmax = 0;   // l1, l2 range for composition/addition laws
    unsigned comp_numax = 0;  // nu range for composition/addition laws
    std::vector<Rational> x2_samples;

    static GridConfig defaults();
    static GridConfig small();
    static GridConfig by_name(const std::string& name);
};

struct SuiteResult {
    std::vector<CheckReport> reports;
    bool all_assert_pass = true;
};

/// Runs the named checks (empty list = whole catalog) over a grid.
/// Reports come back sorted by (id, point). The mutation pointer and the
/// early-exit flag exist for the soundness harness.
SuiteResult run_suite(const std::vector<std::string>& ids, const GridConfig& grid,
                      const Mutation* mutation = nullptr, bool stop_on_first_fail = false);

/// Exact partial-sum evaluation of the index-translation resummation;
/// reports both sides and their difference, never asserts.
struct TranslationProbe {
    unsigned l = 0, terms = 0;
    Rational h, x, lhs, rhs, residual;
};
TranslationProbe probe_translation(unsigned l, const Rational& h, const Rational& x,
                                   unsigned terms);

} // namespace comppoly

#endif
