#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace dpsi::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvCell {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : ""; }
    std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : "null"; }
    std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
};

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(table.columns[i]);
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        os << "\n";
    }
}

void write_json(const Table& table, std::ostream& os) {
    os << "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << (r ? ",\n  {" : "\n  {");
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": "
               << std::visit(JsonCell{}, row[i]);
        }
        os << "}";
    }
    os << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write(const Table& table, Format format, std::ostream& os) {
    if (format == Format::json)
        write_json(table, os);
    else
        write_csv(table, os);
}

}  // namespace dpsi::cli
