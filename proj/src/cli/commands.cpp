#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "mdskit/cli.hpp"
#include "mdskit/io.hpp"
#include "mdskit/mds.hpp"
#include "mdskit/structured.hpp"

namespace mdskit::cli {

namespace {

constexpr const char* kDefaultField = "4:0x13";

struct RingFlags {
    std::string field = kDefaultField;
    unsigned theta = 0;
    std::string beta;  // empty / "absent" / "none": delta = 0

    void attach(CLI::App* app) {
        app->add_option("--field", field, "m:modulus_hex[:generator_hex]")->capture_default_str();
        app->add_option("--theta", theta, "Frobenius exponent k, theta(a) = a^(2^k)")->capture_default_str();
        app->add_option("--beta", beta, "delta(a) = beta (theta(a) - a); omit or 'absent' for delta = 0");
    }

    Field make() const { return parse_field_flag(field); }

    Word beta_value(const GaloisField& f) const {
        if (beta.empty() || beta == "absent" || beta == "none") return 0;
        return parse_element(f, beta);
    }

    ThetaDerivation ring(const Field& f) const {
        return ThetaDerivation(Automorphism(f, theta), beta_value(*f));
    }
};

struct Requirements {
    std::vector<std::string> names;

    bool mds() const { return has("mds"); }
    bool involutory() const { return has("involutory"); }
    bool has(const std::string& n) const { return std::find(names.begin(), names.end(), n) != names.end(); }
};

void attach_require(CLI::App* app, Requirements& req, const char* help) {
    app->add_option("--require", req.names, help)
        ->delimiter(',')
        ->check(CLI::IsMember({"mds", "involutory"}));
}

std::string display_poly(const SkewPoly& g) {
    // Highest degree first, power notation, e.g. "X^4 + a^76 X^3 + ... + a^10".
    const GaloisField& f = *g.field();
    std::string out;
    for (int i = g.degree(); i >= 0; --i) {
        const Word c = g.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        std::string term;
        if (c != 1 || i == 0) term = format_element(f, c, ElementFormat::Power);
        if (i > 0) {
            if (!term.empty()) term += " ";
            term += i == 1 ? "X" : "X^" + std::to_string(i);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json matrix_json(const FMatrix& m, const ThetaDerivation& d, bool power) {
    MatrixDocument doc{m.field(), d.theta().exponent(), d.is_zero() ? Word{0} : d.beta(), m};
    return matrix_to_json(doc, power ? ElementFormat::Power : ElementFormat::Hex);
}

void add_verdicts(nlohmann::json& j, const FMatrix& m) {
    const MdsReport r = is_mds(m);
    j["mds"] = r.is_mds;
    j["involutory"] = is_involutory(m);
    if (r.failing_minor) j["failing_minor"] = report_to_json(r)["failing_minor"];
}

int verdict_exit(const nlohmann::json& j, const Requirements& req) {
    if (req.mds() && !j.at("mds").get<bool>()) return kExitPropertyFailed;
    if (req.involutory() && !j.at("involutory").get<bool>()) return kExitPropertyFailed;
    return kExitOk;
}

int cmd_build_circulant(const RingFlags& rf, const std::string& row_text, bool power, const Requirements& req,
                        std::ostream& out, std::ostream& err) {
    Field f = rf.make();
    const ThetaDerivation d = rf.ring(f);
    const std::vector<Word> row = parse_element_list(*f, row_text);
    Diagnostics diag;
    const FMatrix m = delta_theta_circulant(row, d, &diag);
    for (const auto& w : diag.warnings) err << "warning: " << w << "\n";
    nlohmann::json j = matrix_json(m, d, power);
    j["construction"] = "delta_theta_circulant";
    j["first_row"] = format_element_list(*f, row, power ? ElementFormat::Power : ElementFormat::Hex);
    add_verdicts(j, m);
    out << j.dump(2) << "\n";
    return verdict_exit(j, req);
}

int cmd_build_recursive(const RingFlags& rf, const std::string& poly_text, std::optional<unsigned> r,
                        const std::string& family, bool power, const Requirements& req, std::ostream& out) {
    Field f = rf.make();
    const ThetaDerivation d = rf.ring(f);
    const SkewPoly g = parse_poly(d, poly_text);
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "g must be monic (give the leading 1 last)");
    const auto m = static_cast<std::size_t>(g.degree());
    const unsigned rounds = r.value_or(static_cast<unsigned>(m));
    if (rounds < 1) throw Error(ErrorCode::InvalidArgument, "--r must be at least 1");
    const TwistFamily fam = family == "angle" ? TwistFamily::Angle : TwistFamily::Bracket;
    const FMatrix prod = quasi_recursive_product(g, rounds, fam);

    nlohmann::json j = matrix_json(prod, d, power);
    j["construction"] = "quasi_recursive_product";
    j["poly"] = format_poly(g, power ? ElementFormat::Power : ElementFormat::Hex);
    j["r"] = rounds;
    j["family"] = family;
    j["divides_x2m_minus_1"] = is_right_divisor(g, SkewPoly::x_pow_minus_one(d, 2 * m));
    add_verdicts(j, prod);
    out << j.dump(2) << "\n";
    return verdict_exit(j, req);
}

int cmd_check(const std::string& path, const Requirements& req_in, bool weight, std::ostream& out) {
    MatrixDocument doc = [&] {
        if (path != "-") return read_matrix_file(path);
        nlohmann::json j;
        try {
            std::cin >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("stdin: ") + e.what());
        }
        return matrix_from_json(j);
    }();
    Requirements req = req_in;
    if (req.names.empty()) req.names = {"mds"};

    if (!doc.matrix.is_square()) throw Error(ErrorCode::DimensionMismatch, "check needs a square matrix");
    nlohmann::json j = report_to_json(is_mds(doc.matrix, MdsOptions{true, 0}));
    j["involutory"] = is_involutory(doc.matrix);
    if (weight) {
        const ThetaDerivation d = doc.derivation();
        const std::vector<Word> row(doc.matrix.row(0).begin(), doc.matrix.row(0).end());
        nlohmann::json w;
        if (!(delta_theta_circulant(row, d) == doc.matrix)) {
            w["applicable"] = false;
            w["reason"] = "matrix is not the delta_theta-circulant of its first row";
        } else {
            const auto res = weight_criterion_mds(SkewPoly(d, row), row.size());
            w["holds"] = res.holds;
            w["applicable"] = res.two_sided;
            if (!res.two_sided) {
                w["reason"] = "criterion inapplicable: " + *xm_minus_1_obstruction(d, row.size());
            }
            if (res.witness) w["witness"] = format_element_list(*doc.field, res.witness->coeffs());
        }
        j["weight_criterion"] = std::move(w);
    }
    out << j.dump() << "\n";
    if (req.mds() && !j["is_mds"].get<bool>()) return kExitPropertyFailed;
    if (req.involutory() && !j["involutory"].get<bool>()) return kExitPropertyFailed;
    return kExitOk;
}

int cmd_search(const SearchConfig& config, bool json, bool power, std::ostream& out) {
    const SearchResult res = run_search(config);
    const GaloisField& f = *config.field;
    const ElementFormat fmt = power ? ElementFormat::Power : ElementFormat::Hex;
    const char* key = config.mode == SearchMode::Circulant ? "row" : "poly";
    for (const auto& rec : res.records) {
        if (json) {
            nlohmann::json j;
            j["candidate"] = rec.candidate;
            j[key] = format_element_list(f, rec.coeffs, fmt);
            j["mds"] = rec.mds;
            j["involutory"] = rec.involutory;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : rec.matrix.to_rows()) rows.push_back(format_element_list(f, row, fmt));
            j["rows"] = std::move(rows);
            out << j.dump() << "\n";
        } else {
            out << key << "=" << format_element_list(f, rec.coeffs, fmt) << "  mds=" << (rec.mds ? "yes" : "no")
                << "  involutory=" << (rec.involutory ? "yes" : "no") << "\n";
        }
    }
    nlohmann::json summary{{"exhaustive", res.exhaustive},
                           {"candidates", res.candidates},
                           {"examined", res.examined},
                           {"records", res.records.size()}};
    if (json) {
        out << nlohmann::json{{"summary", summary}}.dump() << "\n";
    } else {
        out << "# " << (res.exhaustive ? "exhaustive" : "sampled") << ": examined " << res.examined << " of "
            << res.candidates << " candidates, " << res.records.size() << " records\n";
    }
    return kExitOk;
}

int cmd_hadamard_family(const RingFlags& rf, const std::string& poly_text, std::optional<unsigned> r,
                        const std::string& family, bool json, std::ostream& out) {
    Field f = rf.make();
    const ThetaDerivation d = rf.ring(f);
    const SkewPoly g = parse_poly(d, poly_text);
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "g must be monic (give the leading 1 last)");
    const unsigned rounds = r.value_or(static_cast<unsigned>(g.degree()));
    const TwistFamily fam = family == "angle" ? TwistFamily::Angle : TwistFamily::Bracket;

    const MdsReport base = is_mds(quasi_recursive_product(g, rounds, fam));
    if (!base.is_mds) {
        throw Error(ErrorCode::BaseNotMds, "base polynomial " + display_poly(g) + " does not give an MDS product");
    }
    bool all = true;
    // t = 0 would repeat g itself.
    for (unsigned t = 1; (std::uint64_t{1} << t) <= f->size() - 1; ++t) {
        const SkewPoly gt = hadamard_power(g, std::uint64_t{1} << t);
        const FMatrix prod = quasi_recursive_product(gt, rounds, fam);
        const bool mds = is_mds(prod).is_mds;
        all = all && mds;
        if (json) {
            nlohmann::json j{{"t", t},
                             {"poly", format_poly(gt, ElementFormat::Power)},
                             {"display", display_poly(gt)},
                             {"mds", mds}};
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : prod.to_rows()) rows.push_back(format_element_list(*f, row, ElementFormat::Power));
            j["rows"] = std::move(rows);
            out << j.dump() << "\n";
        } else {
            out << "t=" << t << "  " << display_poly(gt) << "  mds=" << (mds ? "yes" : "no") << "\n";
        }
    }
    return all ? kExitOk : kExitPropertyFailed;
}

int cmd_paper_examples(const std::string& dir, bool json, std::ostream& out, std::ostream& err) {
    const auto checks = replay_paper_examples(dir);
    std::size_t counts[4] = {0, 0, 0, 0};
    const ExampleCheck* first_fail = nullptr;
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        ++counts[static_cast<int>(c.status)];
        if (c.status == CheckStatus::Fail && first_fail == nullptr) first_fail = &c;
        if (json) {
            out << nlohmann::json{{"name", c.name},
                                  {"status", to_string(c.status)},
                                  {"expected", c.expected},
                                  {"computed", c.computed},
                                  {"detail", c.detail}}
                       .dump()
                << "\n";
        } else {
            out << std::left;
            out.width(8);
            out << to_string(c.status);
            out.width(static_cast<std::streamsize>(width + 2));
            out << c.name << "expected " << c.expected << " | computed " << c.computed;
            if (!c.detail.empty()) out << " | " << c.detail;
            out << "\n";
        }
    }
    const nlohmann::json summary{{"pass", counts[0]}, {"fail", counts[1]}, {"erratum", counts[2]}, {"info", counts[3]}};
    if (json) {
        out << nlohmann::json{{"summary", summary}}.dump() << "\n";
    } else {
        out << "# " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " erratum, " << counts[3]
            << " info\n";
    }
    if (first_fail != nullptr) {
        err << "first failing check: " << first_fail->name << "\n";
        return kExitPropertyFailed;
    }
    return kExitOk;
}

int cmd_field_info(const std::string& field_text, const std::string& element, bool json, std::ostream& out) {
    Field f = parse_field_flag(field_text);
    nlohmann::json j = field_to_json(*f);
    j["size"] = f->size();
    nlohmann::json autos = nlohmann::json::array();
    for (unsigned k = 0; k < f->degree(); ++k) {
        const Automorphism theta(f, k);
        autos.push_back({{"theta_k", k}, {"order", theta.order()}, {"fixed_field_size", fixed_field(theta).size()}});
    }
    j["automorphisms"] = std::move(autos);
    if (!element.empty()) {
        const Word a = parse_element(*f, element);
        nlohmann::json e{{"hex", format_hex(a)}};
        if (a != 0) {
            e["power"] = format_element(*f, a, ElementFormat::Power);
            e["order"] = f->element_order(a);
            e["inverse"] = format_hex(f->inv(a));
        }
        j["element"] = std::move(e);
    }
    if (json) {
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "GF(2^" << f->degree() << ")  modulus " << format_hex(f->modulus()) << "  generator "
        << format_hex(f->generator()) << "  size " << f->size() << "\n";
    for (const auto& a : j["automorphisms"]) {
        out << "theta_k=" << a["theta_k"] << "  order " << a["order"] << "  fixed field size "
            << a["fixed_field_size"] << "\n";
    }
    if (j.contains("element")) out << "element " << j["element"].dump() << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify MDS matrices from skew polynomial rings"};
    app.name("mdskit");
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build a matrix and report mds / involutory");
    build->require_subcommand(1);
    RingFlags circ_ring, rec_ring;
    std::string row_text, poly_text;
    bool power = false;
    Requirements build_req;
    auto* circ = build->add_subcommand("circulant", "delta_theta-circulant from a first row");
    circ_ring.attach(circ);
    circ->add_option("--row", row_text, "first row, comma-separated")->required();
    circ->add_flag("--power", power, "print entries as a^k");
    attach_require(circ, build_req, "exit 1 unless these hold");
    auto* rec = build->add_subcommand("recursive", "twisted companion product C^[r-1] ... C");
    rec_ring.attach(rec);
    rec->add_option("--poly", poly_text, "monic g, coefficients low-to-high")->required();
    std::optional<unsigned> rounds;
    std::string family = "bracket";
    rec->add_option("--r", rounds, "number of factors (default deg g)");
    rec->add_option("--family", family)->check(CLI::IsMember({"bracket", "angle"}))->capture_default_str();
    rec->add_flag("--power", power, "print entries as a^k");
    attach_require(rec, build_req, "exit 1 unless these hold");

    // check
    auto* check = app.add_subcommand("check", "Verify a matrix JSON file ('-' for stdin)");
    std::string check_path;
    Requirements check_req;
    bool check_weight = false;
    check->add_option("matrix", check_path)->required();
    attach_require(check, check_req, "properties that decide the exit code (default: mds)");
    check->add_flag("--weight", check_weight, "also run the weight criterion on the first row");

    // search
    auto* search = app.add_subcommand("search", "Enumerate or sample candidates");
    RingFlags search_ring;
    search_ring.attach(search);
    std::size_t search_m = 2;
    std::string mode = "recursive";
    Requirements search_req;
    SearchConfig config;
    bool search_json = false;
    search->add_option("--m", search_m, "matrix order")->capture_default_str();
    search->add_option("--mode", mode)->check(CLI::IsMember({"circulant", "recursive"}))->capture_default_str();
    attach_require(search, search_req, "filters (default: mds)");
    search->add_option("--limit", config.limit)->capture_default_str();
    search->add_option("--seed", config.seed)->capture_default_str();
    search->add_option("--samples", config.samples, "draws when the space exceeds 2^20")->capture_default_str();
    search->add_flag("--json", search_json, "line-delimited JSON records");
    search->add_flag("--power", power, "print entries as a^k");

    // hadamard-family
    auto* hadamard = app.add_subcommand("hadamard-family", "Derive g^(2^t) and verify each product");
    RingFlags had_ring;
    had_ring.attach(hadamard);
    std::string had_poly;
    std::optional<unsigned> had_rounds;
    std::string had_family = "bracket";
    bool had_json = false;
    hadamard->add_option("--poly", had_poly, "monic base g, coefficients low-to-high")->required();
    hadamard->add_option("--r", had_rounds, "number of factors (default deg g)");
    hadamard->add_option("--family", had_family)->check(CLI::IsMember({"bracket", "angle"}))->capture_default_str();
    hadamard->add_flag("--json", had_json);

    // paper-examples
    auto* examples = app.add_subcommand("paper-examples", "Replay the worked examples against fixtures");
    std::string fixtures = default_fixture_dir();
    bool examples_json = false;
    examples->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();
    examples->add_flag("--json", examples_json);

    // field-info
    auto* info = app.add_subcommand("field-info", "Describe a field and its Frobenius powers");
    std::string info_field = kDefaultField;
    std::string info_element;
    bool info_json = false;
    info->add_option("--field", info_field)->capture_default_str();
    info->add_option("--element", info_element, "optional element to describe");
    info->add_flag("--json", info_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*circ) return cmd_build_circulant(circ_ring, row_text, power, build_req, out, err);
        if (*rec) return cmd_build_recursive(rec_ring, poly_text, rounds, family, power, build_req, out);
        if (*check) return cmd_check(check_path, check_req, check_weight, out);
        if (*search) {
            config.field = search_ring.make();
            config.theta_k = search_ring.theta;
            if (const Word b = search_ring.beta_value(*config.field); b != 0) config.beta = b;
            config.m = search_m;
            config.mode = mode == "circulant" ? SearchMode::Circulant : SearchMode::Recursive;
            config.require_mds = search_req.names.empty() || search_req.mds();
            config.require_involutory = search_req.involutory();
            return cmd_search(config, search_json, power, out);
        }
        if (*hadamard) return cmd_hadamard_family(had_ring, had_poly, had_rounds, had_family, had_json, out);
        if (*examples) return cmd_paper_examples(fixtures, examples_json, out, err);
        if (*info) return cmd_field_info(info_field, info_element, info_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mdskit::cli
