#include "atomlaser/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "atomlaser/analytic.hpp"
#include "atomlaser/heisenberg_oracle.hpp"
#include "atomlaser/table.hpp"

namespace atomlaser::scan
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
	return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Field
{
	const char* name;
	std::optional<double> (*get)(const ObservablePoint&);
};

const std::array<Field, 10> fields{{
	{"N_a", [](const ObservablePoint& o) { return std::optional<double>(o.n_a); }},
	{"N_b", [](const ObservablePoint& o) { return std::optional<double>(o.n_b); }},
	{"var_a", [](const ObservablePoint& o) { return std::optional<double>(o.var_a); }},
	{"var_b", [](const ObservablePoint& o) { return std::optional<double>(o.var_b); }},
	{"Q_a", [](const ObservablePoint& o) { return o.q_a; }},
	{"Q_b", [](const ObservablePoint& o) { return o.q_b; }},
	{"S1_a", [](const ObservablePoint& o) { return std::optional<double>(o.s1_a); }},
	{"S2_a", [](const ObservablePoint& o) { return std::optional<double>(o.s2_a); }},
	{"S1_b", [](const ObservablePoint& o) { return std::optional<double>(o.s1_b); }},
	{"S2_b", [](const ObservablePoint& o) { return std::optional<double>(o.s2_b); }},
}};

class Comparator
{
public:
	Comparator()
	{
		for(const auto& f : fields)
		{
			rows_.push_back({f.name, 0.0, 0.0, 0.0});
		}
	}

	void add(const ObservablePoint& reference, const ObservablePoint& oracle)
	{
		for(std::size_t i = 0; i < fields.size(); ++i)
		{
			const auto x = fields[i].get(reference);
			const auto y = fields[i].get(oracle);
			if(!x && !y)
			{
				continue;
			}
			double abs = std::numeric_limits<double>::infinity();
			double rel = abs;
			if(x && y)
			{
				abs = std::abs(*x - *y);
				rel = abs / std::max(std::abs(*x), std::numeric_limits<double>::min());
			}
			auto& row = rows_[i];
			if(abs > row.max_abs)
			{
				row.max_abs = abs;
				row.worst_t = reference.t;
			}
			row.max_rel = std::max(row.max_rel, rel);
		}
	}

	std::vector<Discrepancy> rows() const { return rows_; }

private:
	std::vector<Discrepancy> rows_;
};

void fold_hygiene(std::optional<fock::DensityHygiene>& worst, const fock::DensityHygiene& h)
{
	if(!worst)
	{
		worst = h;
		return;
	}
	worst->trace = std::min(worst->trace, h.trace);
	worst->hermiticity_drift = std::max(worst->hermiticity_drift, h.hermiticity_drift);
	worst->min_eigenvalue = std::min(worst->min_eigenvalue, h.min_eigenvalue);
}

std::string gamma_text(const StepRate& g)
{
	return g.is_unitary_limit() ? std::string("inf") : format_number(g.value());
}

} // namespace

double OracleReport::max_abs() const
{
	double out = 0.0;
	for(const auto& row : rows)
	{
		out = std::max(out, row.max_abs);
	}
	return out;
}

const Discrepancy* OracleReport::find(const std::string& observable) const
{
	for(const auto& row : rows)
	{
		if(row.observable == observable)
		{
			return &row;
		}
	}
	return nullptr;
}

const OracleReport* VerifyReport::find(const std::string& name) const
{
	for(const auto& o : oracles)
	{
		if(o.name == name)
		{
			return &o;
		}
	}
	return nullptr;
}

VerifyReport run_verify(const VerifyConfig& config)
{
	VerifyReport report;
	report.params = validate_params(config.params);
	report.grid = config.grid;
	const ModelParams& p = report.params;
	const std::vector<double> times = config.grid.times();

	auto start = Clock::now();
	std::vector<ObservablePoint> reference;
	reference.reserve(times.size());
	for(double t : times)
	{
		reference.push_back(observables(p, t));
	}
	report.analytic_seconds = seconds_since(start);

	if(config.heisenberg)
	{
		OracleReport o;
		o.name = "heisenberg";
		o.tolerance = config.tol_heisenberg;
		if(p.gamma.is_unitary_limit())
		{
			o.note = "skipped: the Poisson branch sum needs finite gamma";
			report.warnings.push_back("heisenberg oracle " + o.note);
		}
		else
		{
			start = Clock::now();
			Comparator cmp;
			for(std::size_t i = 0; i < times.size(); ++i)
			{
				const auto res = heisenberg::poisson_observables(p, times[i], config.truncation);
				o.max_tail_mass = std::max(o.max_tail_mass, res.window.tail_mass);
				cmp.add(reference[i], res.point);
			}
			o.rows = cmp.rows();
			o.seconds = seconds_since(start);
			o.ran = true;
			o.pass = o.max_abs() <= o.tolerance;
		}
		report.oracles.push_back(std::move(o));
	}

	if(config.fock)
	{
		OracleReport o;
		o.name = "fock";
		o.tolerance = config.tol_fock;
		if(p.r > config.fock_max_r)
		{
			o.note = "skipped: r = " + format_number(p.r) + " exceeds the Fock-oracle limit "
			         + format_number(config.fock_max_r);
			report.warnings.push_back("fock oracle " + o.note);
		}
		else
		{
			start = Clock::now();
			int n_max = fock::minimal_truncation(p.r, config.fock_budget, config.n_max);
			if(n_max < 0)
			{
				n_max = config.n_max;
			}
			const auto h = fock::build_hamiltonian(p, n_max);
			const auto state = fock::squeezed_vacuum_fock(p.r, p.phi, n_max, config.fock_budget);
			o.note = "n_max = " + std::to_string(n_max);
			const auto rho0 = fock::density_from_state(state);
			o.truncation_budget = state.truncation_budget;

			Comparator cmp;
			bool hygienic = true;
			for(std::size_t i = 0; i < times.size(); ++i)
			{
				fock::TruncatedDensityMatrix rho;
				double tail = 0.0;
				if(p.gamma.is_unitary_limit())
				{
					rho = fock::unitary_evolve(h, rho0, times[i]);
				}
				else
				{
					auto evo = fock::kraus_evolve(h, rho0, p, times[i], config.truncation);
					tail = evo.tail_mass;
					rho = std::move(evo.rho);
				}
				o.max_tail_mass = std::max(o.max_tail_mass, tail);
				const auto hyg = fock::check_hygiene(rho);
				fold_hygiene(o.worst_hygiene, hyg);
				const double floor = 1.0 - (std::max(tail, 0.0) + state.truncation_budget) - 1e-12;
				hygienic = hygienic && hyg.trace >= floor && hyg.trace <= 1.0 + 1e-12
				           && hyg.hermiticity_drift <= 1e-12 && hyg.min_eigenvalue >= -1e-10;
				cmp.add(reference[i], fock::observables_from_density(rho, times[i]));
			}
			o.rows = cmp.rows();
			o.seconds = seconds_since(start);
			o.ran = true;
			o.pass = hygienic && o.max_abs() <= o.tolerance;
			if(!hygienic)
			{
				o.note += "; density-matrix hygiene violated";
			}
		}
		report.oracles.push_back(std::move(o));
	}

	const bool any = std::any_of(report.oracles.begin(), report.oracles.end(),
	                             [](const OracleReport& o) { return o.ran; });
	const bool all = std::all_of(report.oracles.begin(), report.oracles.end(),
	                             [](const OracleReport& o) { return !o.ran || o.pass; });
	report.pass = any && all;
	if(!any)
	{
		report.warnings.push_back("no oracle ran; nothing was certified");
	}
	return report;
}

std::string format_report(const VerifyReport& report)
{
	const ModelParams& p = report.params;
	std::ostringstream out;
	out << "verify: omega=" << format_number(p.omega) << " omega_prime=" << format_number(p.omega_prime)
	    << " gamma=" << gamma_text(p.gamma) << " r=" << format_number(p.r)
	    << " phi=" << format_number(p.phi) << " theta=" << format_number(p.theta) << '\n';
	out << "grid: " << report.grid.count << " points on [" << format_number(report.grid.start) << ", "
	    << format_number(report.grid.stop) << "]"
	    << (report.grid.spacing == Spacing::Logarithmic ? " log" : " linear") << '\n';
	out << "analytic: " << report.analytic_seconds << " s\n";
	for(const auto& o : report.oracles)
	{
		out << "\n[" << o.name << "] ";
		if(!o.ran)
		{
			out << o.note << '\n';
			continue;
		}
		out << (o.pass ? "PASS" : "FAIL") << "  tolerance=" << format_number(o.tolerance)
		    << "  time=" << o.seconds << " s\n";
		out << "  max tail mass=" << format_number(o.max_tail_mass);
		if(o.name == "fock")
		{
			out << "  truncation budget=" << format_number(o.truncation_budget);
		}
		out << '\n';
		if(o.worst_hygiene)
		{
			out << "  min trace=" << format_number(o.worst_hygiene->trace)
			    << "  max hermiticity drift=" << format_number(o.worst_hygiene->hermiticity_drift)
			    << "  min eigenvalue=" << format_number(o.worst_hygiene->min_eigenvalue) << '\n';
		}
		if(!o.note.empty())
		{
			out << "  note: " << o.note << '\n';
		}
		for(const auto& row : o.rows)
		{
			out << "  " << row.observable << "  max|d|=" << format_number(row.max_abs)
			    << "  max rel=" << format_number(row.max_rel) << "  at t=" << format_number(row.worst_t)
			    << '\n';
		}
	}
	for(const auto& w : report.warnings)
	{
		out << "warning: " << w << '\n';
	}
	out << "\nresult: " << (report.pass ? "PASS" : "FAIL") << '\n';
	return out.str();
}

} // namespace atomlaser::scan
