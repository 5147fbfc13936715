#pragma once

/**
 * @file io.hpp
 * @brief Sequence file formats and JSON encodings of reports.
 *
 * Sequence files are either JSON, {"period": n, "values": ["1", "-1/2", ...]},
 * or a single CSV row of rationals whose length is the period. Rationals are
 * always written as canonical strings, so encoding round-trips bit-exactly.
 */

#include "cyclo/circulant.hpp"
#include "cyclo/decompose.hpp"
#include "cyclo/diffeq.hpp"
#include "cyclo/periodic.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace cyclo {

using Json = nlohmann::ordered_json;

/// Accepts either the JSON object or the CSV row; the first non-blank character decides.
PeriodicSeq parse_sequence(std::string_view text);
PeriodicSeq read_sequence_file(const std::string& path);

Json sequence_to_json(const PeriodicSeq& seq);
PeriodicSeq sequence_from_json(const Json& j);
std::string sequence_to_csv(const PeriodicSeq& seq);

Json vector_to_json(const std::vector<Rational>& v);
Json matrix_to_json(const RatMatrix& m);
Json decomposition_to_json(const Decomposition& dec);
Json report_to_json(const DiffEqReport& report);

}  // namespace cyclo
