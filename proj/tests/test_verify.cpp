#include "comppoly/verify.hpp"

#include "comppoly/report_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace comppoly;

namespace {

const CheckReport* find_report(const SuiteResult& r, const std::string& id,
                               const std::string& point) {
    for (const auto& rep : r.reports)
        if (rep.id == id && rep.point == point) return &rep;
    return nullptr;
}

std::string detail_value(const CheckReport& rep, const std::string& key) {
    for (const auto& [k, v] : rep.detail)
        if (k == key) return v;
    return "";
}

} // namespace

TEST_CASE("small grid passes every assert-class check") {
    SuiteResult r = run_suite({}, GridConfig::small());
    CHECK(r.all_assert_pass);
    for (const auto& rep : r.reports) {
        const CheckInfo* info = find_check(rep.id);
        REQUIRE(info != nullptr);
        if (info->cls == CheckClass::Assert) CHECK(rep.status != "residual");
        if (info->cls == CheckClass::Diagnose) CHECK(rep.status != "fail");
    }
}

TEST_CASE("reports are sorted and deterministic") {
    SuiteResult a = run_suite({}, GridConfig::small());
    SuiteResult b = run_suite({}, GridConfig::small());
    CHECK(checks_to_json(a) == checks_to_json(b));
    CHECK(std::is_sorted(a.reports.begin(), a.reports.end(),
                         [](const CheckReport& x, const CheckReport& y) {
                             return std::tie(x.id, x.point) < std::tie(y.id, y.point);
                         }));
}

TEST_CASE("diagnose checks expose the printed-formula residuals") {
    SuiteResult r = run_suite({"H6", "H7"}, GridConfig::small());
    CHECK(r.all_assert_pass);
    const CheckReport* h6 = find_report(r, "H6", "a=0 b=0 c=1/2 l=2");
    REQUIRE(h6 != nullptr);
    CHECK(h6->status == "residual");
    CHECK(detail_value(*h6, "printed_nu1_coeff") == "-1");
    CHECK(detail_value(*h6, "actual_nu1_coeff") == "-3");
    const CheckReport* h7 = find_report(r, "H7", "a=0 b=0 c=1/2 l=2");
    REQUIRE(h7 != nullptr);
    CHECK(h7->status == "residual");
    CHECK(detail_value(*h7, "residual_nu1") == "-10*x + 5");
}

TEST_CASE("printed basic recursive ODE holds only at l=1") {
    SuiteResult r = run_suite({"H6"}, GridConfig::defaults());
    const CheckReport* at_l1 = find_report(r, "H6", "a=0 b=0 c=1/2 l=1");
    REQUIRE(at_l1 != nullptr);
    CHECK(at_l1->status == "pass");
}

TEST_CASE("translation probe") {
    TranslationProbe zero = probe_translation(0, Rational(0), Rational(2, 3), 1);
    CHECK(zero.residual == Rational(0));
    TranslationProbe tp = probe_translation(0, Rational(1, 10), Rational(1, 2), 40);
    CHECK(tp.lhs == Rational(1));
    CHECK(tp.residual > Rational(1015, 10000));
    CHECK(tp.residual < Rational(1025, 10000));
    TranslationProbe l1 = probe_translation(1, Rational(1, 10), Rational(1, 2), 40);
    CHECK(!l1.residual.is_zero());
}

TEST_CASE("suite selection is validated") {
    CHECK_THROWS_AS(run_suite({"NOPE"}, GridConfig::small()), std::invalid_argument);
    CHECK_THROWS_AS(GridConfig::by_name("huge"), std::invalid_argument);
    SuiteResult r = run_suite({"L7"}, GridConfig::small());
    CHECK(r.all_assert_pass);
    for (const auto& rep : r.reports) CHECK(rep.id == "L7");
    const CheckReport* l2 = find_report(r, "L7", "l=2");
    REQUIRE(l2 != nullptr);
    CHECK(detail_value(*l2, "norms").find("m=0:8") != std::string::npos);
    CHECK(detail_value(*l2, "norms").find("m=1:4/3") != std::string::npos);
}

TEST_CASE("mutations are detected") {
    Mutation m{"C3", 2, Rational(1)};
    SuiteResult r = run_suite({"C3"}, GridConfig::small(), &m, true);
    CHECK(!r.all_assert_pass);
    Mutation route_m{"L1", 0, Rational(1)};
    SuiteResult r2 = run_suite({"L1"}, GridConfig::small(), &route_m, true);
    CHECK(!r2.all_assert_pass);
}
