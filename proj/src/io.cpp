#include "cyclo/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cyclo {

namespace {

Rational rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
    throw ParseError("sequence values must be rational strings or integers, got " + v.dump());
}

}  // namespace

PeriodicSeq parse_sequence(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty sequence input");
    if (text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid sequence JSON: ") + e.what());
        }
        return sequence_from_json(j);
    }
    std::string_view row = text.substr(first);
    if (auto eol = row.find_first_of("\r\n"); eol != std::string_view::npos) {
        if (row.find_first_not_of(" \t\r\n", eol) != std::string_view::npos)
            throw ParseError("CSV sequence input must be a single row");
        row = row.substr(0, eol);
    }
    std::vector<Rational> values;
    while (true) {
        auto comma = row.find(',');
        values.push_back(parse_rational(row.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        row.remove_prefix(comma + 1);
    }
    return PeriodicSeq(std::move(values));
}

PeriodicSeq read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sequence file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

Json sequence_to_json(const PeriodicSeq& seq) {
    Json j;
    j["period"] = seq.period();
    j["values"] = vector_to_json(seq.values());
    return j;
}

PeriodicSeq sequence_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("period") || !j.contains("values"))
        throw ParseError("sequence JSON needs \"period\" and \"values\"");
    const auto& period = j.at("period");
    const auto& values = j.at("values");
    if (!period.is_number_integer() || period.get<long long>() < 1)
        throw ParseError("\"period\" must be a positive integer");
    if (!values.is_array()) throw ParseError("\"values\" must be an array");
    if (values.size() != period.get<std::size_t>())
        throw ParseError("\"values\" length does not match \"period\"");
    std::vector<Rational> v;
    for (const auto& item : values) v.push_back(rational_from_json(item));
    return PeriodicSeq(std::move(v));
}

std::string sequence_to_csv(const PeriodicSeq& seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.period(); ++k) {
        if (k) out += ',';
        out += format_rational(seq.values()[k]);
    }
    return out;
}

Json vector_to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json decomposition_to_json(const Decomposition& dec) {
    Json components = Json::object();
    for (const auto& [d, seq] : dec.components) components[std::to_string(d)] = sequence_to_json(seq);
    return components;
}

Json report_to_json(const DiffEqReport& report) {
    Json j;
    j["char_poly"] = format_poly(report.char_poly);
    Json factors = Json::object();
    for (const auto& [d, mult] : report.cyclotomic_factors) factors[std::to_string(d)] = mult;
    j["cyclotomic_factors"] = std::move(factors);
    j["residual"] = format_poly(report.residual);
    j["has_integer_periodic"] = report.has_integer_periodic;
    j["is_cyclotomic_equation"] = report.is_cyclotomic_equation;
    j["common_period"] = report.common_period ? Json(*report.common_period) : Json(nullptr);
    j["unit_modulus_flag"] = to_string(report.unit_modulus_flag);
    Json samples = Json::object();
    for (const auto& [d, seq] : report.sample_solutions) samples[std::to_string(d)] = sequence_to_json(seq);
    j["sample_solutions"] = std::move(samples);
    j["verdict"] = periodicity_verdict(report);
    return j;
}

}  // namespace cyclo
