#include "comppoly/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace comppoly {

using ordered_json = nlohmann::ordered_json;

OutputRecord make_record(const FamilySpec& spec, unsigned nu, Route route, const Poly& p) {
    OutputRecord rec;
    rec.family = family_name(spec.family);
    if (spec.c) rec.params.emplace_back("c", spec.c->str());
    if (spec.a) rec.params.emplace_back("a", spec.a->str());
    if (spec.b) rec.params.emplace_back("b", spec.b->str());
    if (spec.N) rec.params.emplace_back("N", spec.N->str());
    rec.l = spec.l;
    rec.nu = nu;
    rec.route = route_name(route);
    for (const Rational& c : p.coeffs()) rec.coeffs.push_back(c.str());
    return rec;
}

namespace {

ordered_json record_to_json(const OutputRecord& rec) {
    ordered_json j;
    j["family"] = rec.family;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = params;
    j["l"] = rec.l;
    j["nu"] = rec.nu;
    j["route"] = rec.route;
    j["coeffs"] = rec.coeffs;
    return j;
}

} // namespace

std::string records_to_json(const std::vector<OutputRecord>& records) {
    ordered_json j;
    j["version"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(record_to_json(rec));
    j["records"] = arr;
    return j.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    std::vector<OutputRecord> out;
    for (const auto& item : j.at("records")) {
        OutputRecord rec;
        rec.family = item.at("family").get<std::string>();
        for (const auto& [k, v] : item.at("params").items())
            rec.params.emplace_back(k, v.get<std::string>());
        rec.l = item.at("l").get<unsigned>();
        rec.nu = item.at("nu").get<unsigned>();
        rec.route = item.at("route").get<std::string>();
        for (const auto& c : item.at("coeffs")) rec.coeffs.push_back(c.get<std::string>());
        out.push_back(std::move(rec));
    }
    return out;
}

std::string checks_to_json(const SuiteResult& result) {
    ordered_json j;
    j["version"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& rep : result.reports) {
        ordered_json r;
        r["id"] = rep.id;
        r["point"] = rep.point;
        r["status"] = rep.status;
        if (!rep.witness.empty()) r["witness"] = rep.witness;
        if (!rep.detail.empty()) {
            ordered_json d = ordered_json::object();
            for (const auto& [k, v] : rep.detail) d[k] = v;
            r["detail"] = d;
        }
        arr.push_back(r);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "family,params,l,nu,degree,coefficient\n";
    for (const auto& rec : records) {
        std::string params;
        for (const auto& [k, v] : rec.params) {
            if (!params.empty()) params += ";";
            params += k + "=" + v;
        }
        for (size_t d = 0; d < rec.coeffs.size(); ++d)
            os << rec.family << "," << params << "," << rec.l << "," << rec.nu << "," << d
               << "," << rec.coeffs[d] << "\n";
        if (rec.coeffs.empty())
            os << rec.family << "," << params << "," << rec.l << "," << rec.nu << ",0,0\n";
    }
    return os.str();
}

std::string poly_to_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    auto coeff_tex = [](const Rational& r) {
        Rational mag = r.abs();
        if (mag.is_integer()) return mag.str();
        return "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
    };
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = c.abs() == Rational(1) && i > 0;
        if (!unit) os << coeff_tex(c);
        if (i == 1) os << "x";
        if (i >= 2) os << "x^{" << i << "}";
    }
    return os.str();
}

std::string records_to_latex(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    for (const auto& rec : records) {
        std::vector<Rational> cs;
        cs.reserve(rec.coeffs.size());
        for (const auto& c : rec.coeffs) cs.push_back(Rational::from_string(c));
        os << "P_{" << rec.nu << "} = " << poly_to_latex(Poly(std::move(cs))) << "\n";
    }
    return os.str();
}

std::string norms_to_json(const std::vector<std::tuple<unsigned, unsigned, Rational>>& rows) {
    ordered_json j;
    j["version"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& [l, m, v] : rows) {
        ordered_json r;
        r["l"] = l;
        r["m"] = m;
        r["value"] = v.str();
        arr.push_back(r);
    }
    j["norms"] = arr;
    return j.dump(2) + "\n";
}

std::string probe_to_json(const TranslationProbe& probe) {
    ordered_json j;
    j["version"] = 1;
    ordered_json p;
    p["l"] = probe.l;
    p["h"] = probe.h.str();
    p["x"] = probe.x.str();
    p["terms"] = probe.terms;
    p["lhs"] = probe.lhs.str();
    p["rhs_partial"] = probe.rhs.str();
    p["residual"] = probe.residual.str();
    j["probe"] = p;
    return j.dump(2) + "\n";
}

} // namespace comppoly
