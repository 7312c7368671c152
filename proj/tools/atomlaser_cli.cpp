// Command-line front end: figure presets, oracle verification, the
// experimental scenario and Omega' sensitivity scans.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atomlaser/error.hpp"
#include "atomlaser/presets.hpp"
#include "atomlaser/scenario.hpp"
#include "atomlaser/table.hpp"
#include "atomlaser/verify.hpp"

using namespace atomlaser;

namespace
{

struct ParamFlags
{
	double omega = 0.0;
	double omega_prime = 0.0;
	std::string gamma = "inf";
	double r = 0.0;
	double phi = 0.0;
	double theta = 0.0;

	void attach(CLI::App* app)
	{
		app->add_option("--omega", omega, "mode frequency omega");
		app->add_option("--omega-prime", omega_prime, "effective coupling |alpha| Omega");
		app->add_option("--gamma", gamma, "unitary-step rate, or 'inf' for the unitary limit");
		app->add_option("--r", r, "squeeze magnitude");
		app->add_option("--phi", phi, "squeeze phase");
		app->add_option("--theta", theta, "condensate phase");
	}

	ModelParams params() const
	{
		ModelParams p;
		p.omega = omega;
		p.omega_prime = omega_prime;
		if(gamma == "inf" || gamma == "infinity")
		{
			p.gamma = StepRate::unitary_limit();
		}
		else
		{
			p.gamma = StepRate::finite(std::stod(gamma));
		}
		p.r = r;
		p.phi = phi;
		p.theta = theta;
		return validate_params(p);
	}
};

struct GridFlags
{
	std::optional<double> start;
	std::optional<double> stop;
	std::optional<int> count;
	bool log = false;

	void attach(CLI::App* app)
	{
		app->add_option("--t-start", start, "first sample time");
		app->add_option("--t-stop", stop, "last sample time");
		app->add_option("--t-count", count, "number of samples");
		app->add_flag("--t-log", log, "logarithmic spacing");
	}

	[[nodiscard]] bool any() const { return start || stop || count || log; }

	TimeGrid apply(TimeGrid base) const
	{
		if(start) base.start = *start;
		if(stop) base.stop = *stop;
		if(count) base.count = *count;
		if(log) base.spacing = Spacing::Logarithmic;
		return base;
	}
};

void emit(const scan::Table& table, const std::string& out, const std::string& plot,
          const std::string& title, bool log_time)
{
	if(out.empty() || out == "-")
	{
		scan::write_csv(table, std::cout);
	}
	else
	{
		scan::write_csv(table, std::filesystem::path(out));
	}
	if(!plot.empty())
	{
		scan::write_svg_plot(table, plot, title, log_time);
	}
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Atom-laser output statistics under intrinsic decoherence"};
	app.require_subcommand(1);

	// figure
	auto* figure = app.add_subcommand("figure", "write a figure preset as CSV");
	std::string preset;
	std::string out;
	std::string plot;
	GridFlags figure_grid;
	figure->add_option("--preset", preset, "fig1 .. fig5")->required();
	figure->add_option("--out", out, "CSV path ('-' for stdout)");
	figure->add_option("--plot", plot, "optional SVG plot path");
	figure_grid.attach(figure);

	// verify
	auto* verify = app.add_subcommand("verify", "certify the closed forms against both oracles");
	ParamFlags verify_params;
	GridFlags verify_grid;
	std::string verify_preset;
	std::string oracles = "heisenberg,fock";
	scan::VerifyConfig config;
	verify_params.attach(verify);
	verify_grid.attach(verify);
	verify->add_option("--preset", verify_preset, "verify every curve of a figure preset");
	verify->add_option("--oracles", oracles, "comma-separated subset of heisenberg,fock");
	verify->add_option("--tol-heisenberg", config.tol_heisenberg, "max |analytic - heisenberg|");
	verify->add_option("--tol-fock", config.tol_fock, "max |analytic - fock|");
	verify->add_option("--n-max", config.n_max, "Fock truncation (total excitations)");
	verify->add_option("--tail", config.truncation.target_tail, "excluded Poisson mass");
	verify->add_option("--out", out, "report path (stdout if omitted)");

	// scenario
	auto* scenario = app.add_subcommand("scenario", "experimental-parameter scenario");
	GridFlags scenario_grid;
	scenario->add_option("--out", out, "CSV path ('-' for stdout)");
	scenario->add_option("--plot", plot, "optional SVG plot path");
	scenario_grid.attach(scenario);

	// sensitivity
	auto* sensitivity = app.add_subcommand("sensitivity", "S2_b for small offsets of Omega'");
	ParamFlags sens_params;
	GridFlags sens_grid;
	std::vector<double> deltas{0.0, 1e-7, 2e-7, 3e-7};
	sens_params.omega = 10.0;
	sens_params.omega_prime = 10.0;
	sens_params.gamma = "100";
	sens_params.r = 0.4;
	sens_params.attach(sensitivity);
	sens_grid.attach(sensitivity);
	sensitivity->add_option("--deltas", deltas, "Omega' offsets")->delimiter(',');
	sensitivity->add_option("--out", out, "CSV path ('-' for stdout)");
	sensitivity->add_option("--plot", plot, "optional SVG plot path");

	try
	{
		app.parse(argc, argv);
	}
	catch(const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try
	{
		if(figure->parsed())
		{
			const auto fp = scan::figure_preset(preset);
			const TimeGrid grid = figure_grid.apply(fp.grid);
			emit(scan::evaluate_figure(fp, grid), out, plot, fp.id, grid.spacing == Spacing::Logarithmic);
			return 0;
		}
		if(verify->parsed())
		{
			config.heisenberg = oracles.find("heisenberg") != std::string::npos;
			config.fock = oracles.find("fock") != std::string::npos;

			std::vector<ModelParams> sets;
			if(!verify_preset.empty())
			{
				for(const auto& curve : scan::figure_preset(verify_preset).curves)
				{
					sets.push_back(curve.params);
				}
			}
			else
			{
				sets.push_back(verify_params.params());
			}
			config.grid = verify_grid.apply(config.grid);

			std::string text;
			bool pass = true;
			for(const auto& p : sets)
			{
				config.params = p;
				const auto report = scan::run_verify(config);
				text += scan::format_report(report) + "\n";
				pass = pass && report.pass;
			}
			if(out.empty())
			{
				std::cout << text;
			}
			else
			{
				std::ofstream file(out);
				if(!file)
				{
					throw ModelError(ErrorKind::IoError, "cannot open " + out);
				}
				file << text;
				std::cout << (pass ? "PASS" : "FAIL") << '\n';
			}
			return pass ? 0 : 1;
		}
		if(scenario->parsed())
		{
			const TimeGrid grid = scenario_grid.apply({1e-7, 1.0, 2000, Spacing::Logarithmic});
			auto table = scan::scenario_table(grid);
			const auto summary = scan::scenario_summary();
			emit(table, out, plot, "scenario", grid.spacing == Spacing::Logarithmic);
			(out.empty() || out == "-" ? std::cerr : std::cout) << scan::format_summary(summary);
			return 0;
		}
		if(sensitivity->parsed())
		{
			const TimeGrid grid = sens_grid.apply({1e-2, 1e8, 2000, Spacing::Logarithmic});
			emit(scan::sensitivity_table(sens_params.params(), deltas, grid), out, plot, "sensitivity",
			     grid.spacing == Spacing::Logarithmic);
			return 0;
		}
	}
	catch(const std::exception& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 0;
}
