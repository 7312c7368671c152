#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace atomlaser::scan
{

/// Time series with one named column per curve. Empty cells are undefined
/// values (Mandel Q with no occupation).
struct Table
{
	std::string time_header = "t";
	std::vector<double> t;
	std::vector<std::string> headers;
	std::vector<std::vector<std::optional<double>>> columns;
};

/// 15 significant digits, scientific notation, independent of the locale.
std::string format_number(double x);

/// UTF-8, comma separated, header row first.
void write_csv(const Table& table, std::ostream& out);
void write_csv(const Table& table, const std::filesystem::path& path);

Table read_csv(std::istream& in);
Table read_csv(const std::filesystem::path& path);

/// Minimal SVG line plot of every column against t.
void write_svg_plot(const Table& table, const std::filesystem::path& path, const std::string& title,
                    bool log_time);

} // namespace atomlaser::scan
