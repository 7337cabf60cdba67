#include "cglab/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cglab {

ReportFormat parse_report_format(const std::string& s)
{
    if (s == "jsonl") return ReportFormat::jsonl;
    if (s == "csv") return ReportFormat::csv;
    if (s == "tty") return ReportFormat::tty;
    throw FormatError("unknown report format '" + s + "' (expected jsonl, csv or tty)");
}

namespace {

std::string param_text(const ParamValue& v)
{
    if (const auto* i = std::get_if<i64>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

double rounded_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

std::string to_jsonl(const CheckReport& r)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        if (const auto* i = std::get_if<i64>(&v)) {
            params[k] = *i;
        } else {
            params[k] = std::get<std::string>(v);
        }
    }
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["params"] = std::move(params);
    j["computed"] = r.computed;
    j["expected"] = r.expected;
    j["verdict"] = to_string(r.verdict);
    j["elapsed_ms"] = rounded_ms(r.elapsed_ms);
    return j.dump();
}

std::string csv_header() { return "check_id,params,computed,expected,verdict,elapsed_ms"; }

std::string to_csv_row(const CheckReport& r)
{
    std::string params;
    for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + param_text(v);
    }
    std::ostringstream os;
    os << csv_quote(r.check_id) << ',' << csv_quote(params) << ',' << csv_quote(r.computed) << ','
       << csv_quote(r.expected) << ',' << to_string(r.verdict) << ',' << std::fixed << std::setprecision(3)
       << rounded_ms(r.elapsed_ms);
    return os.str();
}

std::string to_tty(const CheckReport& r)
{
    std::ostringstream os;
    os << std::left << std::setw(15) << to_string(r.verdict) << std::setw(22) << r.check_id;
    std::string params;
    for (const auto& [k, v] : r.params) params += k + "=" + param_text(v) + " ";
    os << std::setw(40) << params << "computed " << r.computed << "  expected " << r.expected;
    return os.str();
}

ReportWriter::ReportWriter(std::ostream& os, ReportFormat format) : os_(os), format_(format) {}

void ReportWriter::write(const CheckReport& r)
{
    switch (format_) {
    case ReportFormat::jsonl: os_ << to_jsonl(r) << '\n'; break;
    case ReportFormat::csv:
        if (written_ == 0) os_ << csv_header() << '\n';
        os_ << to_csv_row(r) << '\n';
        break;
    case ReportFormat::tty: os_ << to_tty(r) << '\n'; break;
    }
    ++written_;
    ++counts_[static_cast<std::size_t>(r.verdict)];
}

}  // namespace cglab
