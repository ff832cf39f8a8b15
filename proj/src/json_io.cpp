#include "zigzag/json_io.hpp"

#include <regex>

#include "zigzag/errors.hpp"

namespace zigzag {

Json poly_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    static const std::regex integer(R"(^[+-]?[0-9]+$)");
    if (!j.is_object())
        throw PreconditionError("polynomial JSON must be an object");
    LaurentPoly::Terms terms;
    for (const auto& [key, value] : j.items()) {
        if (!std::regex_match(key, integer))
            throw PreconditionError("polynomial exponent '" + key + "' is not an integer");
        if (!value.is_string() || !std::regex_match(value.get<std::string>(), integer))
            throw PreconditionError("polynomial coefficient for exponent " + key + " must be a decimal string");
        const auto text = value.get<std::string>();
        BigInt c(text.front() == '+' ? text.substr(1) : text);
        terms[std::stoll(key)] += c;
    }
    return LaurentPoly::from_terms(terms);
}

Json rational_to_json(const Rational& r) {
    Json j;
    j["numerator"] = r.get_num().get_str();
    j["denominator"] = r.get_den().get_str();
    j["decimal"] = to_double(r);
    return j;
}

Json point_to_json(const Point& p) {
    return Json::array({p.i, p.j});
}

Json report_to_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.identity;
    Json params = Json::object();
    for (const auto& [name, value] : r.parameters)
        params[name] = value;
    j["parameters"] = params;
    j["holds"] = r.holds;
    j["lhs"] = poly_to_json(r.lhs);
    j["rhs"] = poly_to_json(r.rhs);
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

namespace {

Json distribution_to_json(const std::vector<std::pair<int, Rational>>& dist) {
    Json out = Json::array();
    for (const auto& [n, p] : dist) {
        Json entry = rational_to_json(p);
        entry["n"] = n;
        out.push_back(entry);
    }
    return out;
}

} // namespace

Json average_report_to_json(const AverageReport& r) {
    Json j;
    j["identity"] = "ave";
    j["parameters"] = {{"K", r.instance.K}, {"L", r.instance.L}, {"N", r.instance.N}, {"M", r.instance.M},
                       {"q", to_string(r.q0)}};
    j["holds"] = r.holds;
    j["lhs"] = rational_to_json(r.lhs);
    j["rhs"] = rational_to_json(r.rhs);
    j["interface_partition"] = rational_to_json(r.interface_partition);
    j["average"] = rational_to_json(r.average);
    j["ratio"] = r.ratio ? rational_to_json(*r.ratio) : Json(nullptr);
    j["steps"] = {{"translation_first_term", r.translation_first_term},
                  {"translation_second_term", r.translation_second_term},
                  {"through_point_form", r.through_point_form}};
    j["interface_distribution"] = distribution_to_json(r.interface_distribution);
    j["literal_distribution_value"] =
        r.literal_distribution_value ? rational_to_json(*r.literal_distribution_value) : Json(nullptr);
    j["note"] = "S_L counts down spins on the last L+1 interface sites; the printed law with Z_q(n,n-N) is "
                "evaluated as written for comparison";
    return j;
}

} // namespace zigzag
