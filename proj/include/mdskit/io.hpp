#pragma once

// Text and JSON interchange.
//
// Elements: "0xNN" (canonical, uppercase hex) or "a^k" (power of the field's
// generator). Polynomials: comma-separated element tokens, low-to-high.
// Matrices: {"field": {"m", "modulus", "generator"}, "theta_k", "beta", "rows"}.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdskit/finite_field.hpp"
#include "mdskit/matrix.hpp"
#include "mdskit/mds.hpp"
#include "mdskit/skew_poly.hpp"
#include "mdskit/twist.hpp"

namespace mdskit {

enum class ElementFormat { Hex, Power };

std::string format_hex(Word w);
std::string format_element(const GaloisField& f, Word w, ElementFormat fmt = ElementFormat::Hex);
Word parse_element(const GaloisField& f, std::string_view token);

std::vector<Word> parse_element_list(const GaloisField& f, std::string_view text);
std::string format_element_list(const GaloisField& f, const std::vector<Word>& values,
                                ElementFormat fmt = ElementFormat::Hex);

SkewPoly parse_poly(const ThetaDerivation& ring, std::string_view text);
std::string format_poly(const SkewPoly& p, ElementFormat fmt = ElementFormat::Hex);

/// "m:modulus_hex[:generator_hex]"
Field parse_field_flag(std::string_view text);

/// A matrix together with the ring it was built in.
struct MatrixDocument {
    Field field;
    unsigned theta_k = 0;
    Word beta = 0;
    FMatrix matrix;
    nlohmann::json extra = nlohmann::json::object();  ///< keys outside the schema, kept verbatim

    ThetaDerivation derivation() const { return ThetaDerivation(Automorphism(field, theta_k), beta); }
};

nlohmann::json field_to_json(const GaloisField& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatrixDocument& doc, ElementFormat fmt = ElementFormat::Hex);
MatrixDocument matrix_from_json(const nlohmann::json& j);
MatrixDocument read_matrix_file(const std::string& path);

nlohmann::json report_to_json(const MdsReport& report);

}  // namespace mdskit
