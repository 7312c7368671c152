#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "atomlaser/error.hpp"
#include "atomlaser/table.hpp"

namespace atomlaser::scan
{

void write_svg_plot(const Table& table, const std::filesystem::path& path, const std::string& title,
                    bool log_time)
{
	constexpr double width = 800.0;
	constexpr double height = 500.0;
	constexpr double left = 80.0;
	constexpr double right = 180.0;
	constexpr double top = 40.0;
	constexpr double bottom = 50.0;
	constexpr std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c",
	                                            "#9467bd", "#ff7f0e", "#8c564b"};

	const auto xval = [&](double t) { return log_time ? std::log10(t) : t; };

	double xmin = std::numeric_limits<double>::infinity();
	double xmax = -xmin;
	for(double t : table.t)
	{
		if(log_time && !(t > 0.0))
		{
			continue;
		}
		xmin = std::min(xmin, xval(t));
		xmax = std::max(xmax, xval(t));
	}
	double ymin = std::numeric_limits<double>::infinity();
	double ymax = -ymin;
	for(const auto& column : table.columns)
	{
		for(const auto& v : column)
		{
			if(v && std::isfinite(*v))
			{
				ymin = std::min(ymin, *v);
				ymax = std::max(ymax, *v);
			}
		}
	}
	if(!(xmax > xmin))
	{
		xmax = xmin + 1.0;
	}
	if(!(ymax > ymin))
	{
		ymin -= 0.5;
		ymax += 0.5;
	}

	const double pw = width - left - right;
	const double ph = height - top - bottom;
	const auto px = [&](double t) { return left + (xval(t) - xmin) / (xmax - xmin) * pw; };
	const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

	std::ofstream out(path);
	if(!out)
	{
		throw ModelError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
	}
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
	    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
	out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	out << "<text x=\"" << left << "\" y=\"24\" font-size=\"14\">" << title << "</text>\n";
	out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
	    << "\" fill=\"none\" stroke=\"black\"/>\n";
	out << "<text x=\"" << left << "\" y=\"" << height - 15 << "\">"
	    << (log_time ? "log10 " : "") << table.time_header << ": " << format_number(table.t.front())
	    << " .. " << format_number(table.t.back()) << "</text>\n";
	out << "<text x=\"5\" y=\"" << top + 10 << "\">" << format_number(ymax) << "</text>\n";
	out << "<text x=\"5\" y=\"" << top + ph << "\">" << format_number(ymin) << "</text>\n";

	for(std::size_t c = 0; c < table.columns.size(); ++c)
	{
		const char* color = colors[c % colors.size()];
		bool open = false;
		for(std::size_t i = 0; i < table.t.size(); ++i)
		{
			const auto& v = table.columns[c][i];
			const bool usable = v && std::isfinite(*v) && (!log_time || table.t[i] > 0.0);
			if(!usable)
			{
				if(open)
				{
					out << "\"/>\n";
					open = false;
				}
				continue;
			}
			if(!open)
			{
				out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
				open = true;
			}
			out << px(table.t[i]) << ',' << py(*v) << ' ';
		}
		if(open)
		{
			out << "\"/>\n";
		}
		const double ly = top + 16.0 * (c + 1);
		out << "<text x=\"" << width - right + 10 << "\" y=\"" << ly << "\" fill=\"" << color << "\">"
		    << table.headers[c] << "</text>\n";
	}
	out << "</svg>\n";
}

} // namespace atomlaser::scan
