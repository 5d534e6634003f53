#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace dpsi::cli {

/// monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

/// Fixed "%.12g" rendering; non-finite values render as null/empty.
std::string format_double(double x);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);
void write(const Table& table, Format format, std::ostream& os);

}  // namespace dpsi::cli
