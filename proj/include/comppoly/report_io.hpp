#ifndef COMPPOLY_REPORT_IO_HPP
#define COMPPOLY_REPORT_IO_HPP

#include "comppoly/verify.hpp"

#include <string>
#include <vector>

namespace comppoly {

/// One emitted polynomial: family, parameters as "p/q" strings, indices,
/// route, and canonical ascending coefficients (no trailing zeros).
struct OutputRecord {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    unsigned l = 0;
    unsigned nu = 0;
    std::string route;
    std::vector<std::string> coeffs;

    friend bool operator==(const OutputRecord& a, const OutputRecord& b) = default;
};

OutputRecord make_record(const FamilySpec& spec, unsigned nu, Route route, const Poly& p);

/// {"version":1,"records":[...]} with UTF-8 and LF endings.
std::string records_to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_json(const std::string& text);

/// {"version":1,"checks":[...]}
std::string checks_to_json(const SuiteResult& result);

/// One row per (nu, degree, coefficient) triple.
std::string records_to_csv(const std::vector<OutputRecord>& records);

/// Renders "12x^{2} - 4"; rational coefficients appear as \frac{p}{q}.
std::string poly_to_latex(const Poly& p);
std::string records_to_latex(const std::vector<OutputRecord>& records);

std::string norms_to_json(const std::vector<std::tuple<unsigned, unsigned, Rational>>& rows);
std::string probe_to_json(const TranslationProbe& probe);

} // namespace comppoly

#endif
