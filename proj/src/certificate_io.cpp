#include <json.hpp>

#include "pchi/certify.hpp"
#include "pchi/parser.hpp"

namespace pchi {

namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& require(const ordered_json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw CertificateFormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const ordered_json& obj, const char* key) {
    const ordered_json& v = require(obj, key);
    if (!v.is_string())
        throw CertificateFormatError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Natural require_natural(const ordered_json& obj, const char* key) {
    try {
        return parse_natural(require_string(obj, key));
    } catch (const std::invalid_argument& e) {
        throw CertificateFormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

Ratio require_ratio(const ordered_json& obj, const char* key) {
    const std::string text = require_string(obj, key);
    if (text.find('/') == std::string::npos)
        throw CertificateFormatError(std::string("field \"") + key +
                                     "\" must be \"num/den\", got \"" + text + "\"");
    try {
        return parse_ratio(text);
    } catch (const std::exception& e) {
        throw CertificateFormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["format_version"] = "1";
    j["spec"] = render_spec(cert.spec);
    j["bound_M"] = natural_string(cert.bound_m);
    ordered_json screening = ordered_json::array();
    for (const auto& rec : cert.screening) {
        ordered_json r;
        r["b"] = natural_string(rec.b);
        r["terms_used"] = natural_string(rec.terms_used);
        r["x_lo"] = ratio_string(rec.x_lo);
        r["x_hi"] = ratio_string(rec.x_hi);
        screening.push_back(std::move(r));
    }
    j["screening"] = std::move(screening);
    j["large_b"] = ordered_json{{"bound", ratio_string(cert.large_b.bound)}};
    j["verdict"] = "irrational";
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CertificateFormatError("certificate must be a JSON object");

    if (require_string(j, "format_version") != "1")
        throw CertificateFormatError("unsupported format_version");

    std::optional<ChiSpec> spec;
    try {
        spec = parse_spec(require_string(j, "spec"));
    } catch (const ParseError& e) {
        throw CertificateFormatError(std::string("field \"spec\": ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CertificateFormatError(std::string("field \"spec\": ") + e.what());
    }
    Natural bound_m = require_natural(j, "bound_M");

    const ordered_json& screening = require(j, "screening");
    if (!screening.is_array())
        throw CertificateFormatError("field \"screening\" must be an array");
    std::vector<DenominatorRecord> records;
    records.reserve(screening.size());
    for (const auto& r : screening) {
        if (!r.is_object())
            throw CertificateFormatError("screening entries must be objects");
        records.push_back(DenominatorRecord{require_natural(r, "b"),
                                            require_natural(r, "terms_used"),
                                            require_ratio(r, "x_lo"), require_ratio(r, "x_hi")});
    }

    const ordered_json& large_b = require(j, "large_b");
    if (!large_b.is_object()) throw CertificateFormatError("field \"large_b\" must be an object");
    LargeBArgument argument{require_ratio(large_b, "bound")};

    if (require_string(j, "verdict") != "irrational")
        throw CertificateFormatError("verdict must be \"irrational\"");

    return Certificate{std::move(*spec), std::move(bound_m), std::move(records),
                       std::move(argument), Verdict::Irrational};
}

}  // namespace pchi
