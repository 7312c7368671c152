#include "atomlaser/table.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "atomlaser/error.hpp"

namespace atomlaser::scan
{

std::string format_number(double x)
{
	std::array<char, 40> buf{};
	const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
	                               std::chars_format::scientific, 14);
	return std::string(buf.data(), res.ptr);
}

void write_csv(const Table& table, std::ostream& out)
{
	out << table.time_header;
	for(const auto& h : table.headers)
	{
		out << ',' << h;
	}
	out << '\n';
	for(std::size_t i = 0; i < table.t.size(); ++i)
	{
		out << format_number(table.t[i]);
		for(const auto& column : table.columns)
		{
			out << ',';
			if(column[i])
			{
				out << format_number(*column[i]);
			}
		}
		out << '\n';
	}
}

void write_csv(const Table& table, const std::filesystem::path& path)
{
	std::ofstream out(path);
	if(!out)
	{
		throw ModelError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
	}
	write_csv(table, out);
	if(!out)
	{
		throw ModelError(ErrorKind::IoError, "failed writing " + path.string());
	}
}

namespace
{

std::vector<std::string> split(const std::string& line)
{
	std::vector<std::string> out;
	std::string cell;
	std::istringstream ss(line);
	while(std::getline(ss, cell, ','))
	{
		out.push_back(cell);
	}
	if(!line.empty() && line.back() == ',')
	{
		out.emplace_back();
	}
	return out;
}

double parse(const std::string& cell)
{
	double x = 0.0;
	const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
	if(res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
	{
		throw ModelError(ErrorKind::IoError, "malformed number '" + cell + "'");
	}
	return x;
}

} // namespace

Table read_csv(std::istream& in)
{
	Table table;
	std::string line;
	if(!std::getline(in, line))
	{
		throw ModelError(ErrorKind::IoError, "empty CSV");
	}
	auto header = split(line);
	table.time_header = header.front();
	table.headers.assign(header.begin() + 1, header.end());
	table.columns.resize(table.headers.size());
	while(std::getline(in, line))
	{
		if(line.empty())
		{
			continue;
		}
		const auto cells = split(line);
		if(cells.size() != header.size())
		{
			throw ModelError(ErrorKind::IoError, "ragged CSV row: " + line);
		}
		table.t.push_back(parse(cells[0]));
		for(std::size_t j = 1; j < cells.size(); ++j)
		{
			table.columns[j - 1].push_back(cells[j].empty() ? std::nullopt
			                                                : std::optional<double>(parse(cells[j])));
		}
	}
	return table;
}

Table read_csv(const std::filesystem::path& path)
{
	std::ifstream in(path);
	if(!in)
	{
		throw ModelError(ErrorKind::IoError, "cannot open " + path.string());
	}
	return read_csv(in);
}

} // namespace atomlaser::scan
