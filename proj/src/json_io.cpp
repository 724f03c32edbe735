#include "vdc/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vdc {

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    std::string s(buf, res.ptr);
    // Keep floats recognisable as floats after a round trip.
    if (s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
}

namespace {

void write_value(std::ostringstream& os, const Json& v, int indent, int level) {
    const bool pretty = indent >= 0;
    auto newline = [&](int lvl) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * lvl), ' ');
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) os << ',';
                first = false;
                newline(level + 1);
                os << Json(key).dump() << (pretty ? ": " : ":");
                write_value(os, item, indent, level + 1);
            }
            newline(level);
            os << '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                os << "[]";
                return;
            }
            os << '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) os << (pretty ? ", " : ",");
                first = false;
                write_value(os, item, indent, level + 1);
            }
            os << ']';
            return;
        }
        case Json::value_t::number_float:
            os << format_number(v.get<double>());
            return;
        default:
            os << v.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
    std::ostringstream os;
    write_value(os, value, indent, 0);
    return os.str();
}

Json to_json(const CosPoly& poly) {
    Json j;
    j["degree"] = poly.storage_degree();
    j["coeffs"] = Json(std::vector<double>(poly.coeffs().begin(), poly.coeffs().end()));
    return j;
}

CosPoly cospoly_from_json(const Json& doc) {
    try {
        if (!doc.is_object() || !doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
            throw Error(ErrorCode::ParseError, "CosPoly JSON needs a \"coeffs\" array");
        }
        auto coeffs = doc.at("coeffs").get<std::vector<double>>();
        if (coeffs.empty()) throw Error(ErrorCode::ParseError, "\"coeffs\" is empty");
        if (doc.contains("degree") && doc.at("degree").get<std::size_t>() + 1 != coeffs.size()) {
            throw Error(ErrorCode::ParseError, "\"degree\" does not match the number of coefficients");
        }
        return CosPoly(std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json to_json(const GammaSolution& gamma) {
    Json j;
    j["p"] = gamma.p;
    j["q"] = gamma.q;
    j["r0"] = gamma.r0;
    j["shifts"] = gamma.shifts;
    j["gammas"] = gamma.gammas;
    j["A"] = gamma.a_value;
    return j;
}

Json lp_report_json(const LPResult& result, const CosPoly& poly, std::int64_t grid) {
    Json j;
    j["status"] = lp_status_name(result.status);
    j["value"] = result.value;
    j["coeffs"] = Json(std::vector<double>(poly.coeffs().begin(), poly.coeffs().end()));
    j["grid"] = grid;
    j["iterations"] = result.iterations;
    return j;
}

Json to_json(const Certificate& cert) {
    Json j;
    j["certified_min"] = cert.certified_min;
    j["sampled_min"] = cert.sampled_min;
    j["lipschitz_bound"] = cert.lipschitz_bound;
    j["curvature_bound"] = cert.curvature_bound;
    j["grid"] = cert.grid;
    j["refined_cells"] = cert.refined_cells;
    return j;
}

Json to_json(const MembershipReport& report) {
    Json j;
    j["support_ok"] = report.support_ok;
    j["t_at_zero"] = report.t_at_zero;
    j["t0"] = report.t0;
    j["certified_min"] = report.certified_min;
    j["lipschitz_bound"] = report.lipschitz_bound;
    j["grid_size"] = report.grid_size;
    j["member"] = report.member();
    return j;
}

Json to_json(const CheckReport& report) {
    Json j;
    j["check"] = report.check;
    Json inputs = Json::object();
    for (const auto& [k, v] : report.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["values"] = report.values;
    j["pass"] = report.pass;
    return j;
}

CosPoly read_cospoly(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return cospoly_from_json(doc);
}

void write_cospoly(const std::filesystem::path& path, const CosPoly& poly) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << dump_json(to_json(poly)) << '\n';
}

}  // namespace vdc
