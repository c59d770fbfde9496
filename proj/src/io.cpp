#include "mdskit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mdskit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::uint64_t parse_number(std::string_view digits, int base, std::string_view whole) {
    std::uint64_t value = 0;
    const char* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value, base);
    if (digits.empty() || ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

Word parse_hex_word(std::string_view token) {
    token = trim(token);
    if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
        return static_cast<Word>(parse_number(token.substr(2), 16, token));
    }
    return static_cast<Word>(parse_number(token, 16, token));
}

const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

std::string require_string(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string");
    return j.get<std::string>();
}

// Literals built in code are signed; parsed text is unsigned.
bool is_non_negative_integer(const nlohmann::json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

}  // namespace

std::string format_hex(Word w) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << w;
    return os.str();
}

std::string format_element(const GaloisField& f, Word w, ElementFormat fmt) {
    if (fmt == ElementFormat::Hex || w == 0) return fmt == ElementFormat::Hex ? format_hex(w) : "0";
    return "a^" + std::to_string(f.log(w));
}

Word parse_element(const GaloisField& f, std::string_view token) {
    token = trim(token);
    if (token.empty()) throw Error(ErrorCode::ParseError, "empty element token");
    Word value = 0;
    if (token.size() > 2 && token[0] == 'a' && token[1] == '^') {
        value = f.exp(parse_number(token.substr(2), 10, token));
    } else if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
        value = static_cast<Word>(parse_number(token.substr(2), 16, token));
    } else if (token == "0" || token == "1") {
        value = token == "1" ? 1 : 0;
    } else {
        throw Error(ErrorCode::ParseError, "element token '" + std::string(token) + "' is neither 0x.. nor a^k");
    }
    if (!f.contains(value)) {
        throw Error(ErrorCode::ParseError, "'" + std::string(token) + "' is outside GF(2^" +
                                               std::to_string(f.degree()) + ")");
    }
    return value;
}

std::vector<Word> parse_element_list(const GaloisField& f, std::string_view text) {
    std::vector<Word> out;
    for (std::string_view tok : split(trim(text), ',')) out.push_back(parse_element(f, tok));
    return out;
}

std::string format_element_list(const GaloisField& f, const std::vector<Word>& values, ElementFormat fmt) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += format_element(f, values[i], fmt);
    }
    return out;
}

SkewPoly parse_poly(const ThetaDerivation& ring, std::string_view text) {
    return SkewPoly(ring, parse_element_list(*ring.field(), text));
}

std::string format_poly(const SkewPoly& p, ElementFormat fmt) {
    if (p.is_zero()) return format_element(*p.field(), 0, fmt);
    return format_element_list(*p.field(), p.coeffs(), fmt);
}

Field parse_field_flag(std::string_view text) {
    const auto parts = split(trim(text), ':');
    if (parts.size() < 2 || parts.size() > 3) {
        throw Error(ErrorCode::ParseError, "field flag must be m:modulus_hex[:generator_hex]");
    }
    const auto m = static_cast<unsigned>(parse_number(trim(parts[0]), 10, parts[0]));
    const Word modulus = parse_hex_word(parts[1]);
    std::optional<Word> generator;
    if (parts.size() == 3) generator = parse_hex_word(parts[2]);
    return make_field(m, modulus, generator);
}

nlohmann::json field_to_json(const GaloisField& f) {
    return {{"m", f.degree()}, {"modulus", format_hex(f.modulus())}, {"generator", format_hex(f.generator())}};
}

Field field_from_json(const nlohmann::json& j) {
    const auto& m = require_key(j, "m");
    if (!is_non_negative_integer(m)) throw Error(ErrorCode::ParseError, "field.m must be a non-negative integer");
    const Word modulus = parse_hex_word(require_string(require_key(j, "modulus"), "field.modulus"));
    std::optional<Word> generator;
    if (j.contains("generator") && !j.at("generator").is_null()) {
        generator = parse_hex_word(require_string(j.at("generator"), "field.generator"));
    }
    return make_field(m.get<unsigned>(), modulus, generator);
}

nlohmann::json matrix_to_json(const MatrixDocument& doc, ElementFormat fmt) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < doc.matrix.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Word w : doc.matrix.row(r)) row.push_back(format_element(*doc.field, w, fmt));
        rows.push_back(std::move(row));
    }
    nlohmann::json j = doc.extra.is_object() ? doc.extra : nlohmann::json::object();
    j["field"] = field_to_json(*doc.field);
    j["theta_k"] = doc.theta_k;
    j["beta"] = format_hex(doc.beta);
    j["rows"] = std::move(rows);
    return j;
}

MatrixDocument matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "matrix document must be a JSON object");
    Field field = field_from_json(require_key(j, "field"));
    unsigned theta_k = 0;
    if (j.contains("theta_k")) {
        if (!is_non_negative_integer(j.at("theta_k"))) throw Error(ErrorCode::ParseError, "theta_k must be a non-negative integer");
        theta_k = j.at("theta_k").get<unsigned>();
    }
    Word beta = 0;
    if (j.contains("beta") && !j.at("beta").is_null()) {
        beta = parse_element(*field, require_string(j.at("beta"), "beta"));
    }
    const auto& rows_json = require_key(j, "rows");
    if (!rows_json.is_array()) throw Error(ErrorCode::ParseError, "rows must be an array");
    std::vector<std::vector<Word>> rows;
    for (const auto& row : rows_json) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "each row must be an array");
        std::vector<Word> values;
        for (const auto& cell : row) values.push_back(parse_element(*field, require_string(cell, "matrix entry")));
        rows.push_back(std::move(values));
    }
    FMatrix matrix(field, rows);
    // Validate theta_k against the field now rather than on first use.
    Automorphism theta(field, theta_k);
    nlohmann::json extra = nlohmann::json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "field" && it.key() != "theta_k" && it.key() != "beta" && it.key() != "rows") {
            extra[it.key()] = it.value();
        }
    }
    return {std::move(field), theta_k, beta, std::move(matrix), std::move(extra)};
}

MatrixDocument read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return matrix_from_json(j);
}

nlohmann::json report_to_json(const MdsReport& report) {
    nlohmann::json j;
    j["is_mds"] = report.is_mds;
    if (report.failing_minor) {
        j["failing_minor"] = {{"rows", report.failing_minor->rows}, {"cols", report.failing_minor->cols}};
    } else {
        j["failing_minor"] = nullptr;
    }
    j["minors_checked"] = report.minors_checked;
    return j;
}

}  // namespace mdskit
