#include "atomlaser/presets.hpp"

#include <array>
#include <cstdio>
#include <numbers>

#include "atomlaser/analytic.hpp"
#include "atomlaser/error.hpp"

namespace atomlaser::scan
{

namespace
{

std::string short_number(double x)
{
	std::array<char, 32> buf{};
	std::snprintf(buf.data(), buf.size(), "%.6g", x);
	return buf.data();
}

std::string gamma_label(const StepRate& g)
{
	return g.is_unitary_limit() ? std::string("inf") : short_number(g.value());
}

ModelParams make(double omega, double omega_prime, StepRate gamma, double r)
{
	ModelParams p;
	p.omega = omega;
	p.omega_prime = omega_prime;
	p.gamma = gamma;
	p.r = r;
	return validate_params(p);
}

std::vector<Curve> gamma_family(Observable o, double omega, double omega_prime, double r,
                                std::initializer_list<StepRate> rates)
{
	std::vector<Curve> out;
	for(const auto& g : rates)
	{
		out.push_back({observable_name(o) + "[gamma=" + gamma_label(g) + "]",
		               make(omega, omega_prime, g, r)});
	}
	return out;
}

std::optional<double> evaluate(Observable o, const ModelParams& p, double t)
{
	switch(o)
	{
	case Observable::MandelQA: return mandel_q(p, t).q_a;
	case Observable::MandelQB: return mandel_q(p, t).q_b;
	case Observable::SqueezingS2B: return squeezing_exact(p, t).s2_b;
	}
	return std::nullopt;
}

} // namespace

std::string observable_name(Observable o)
{
	switch(o)
	{
	case Observable::MandelQA: return "Q_a";
	case Observable::MandelQB: return "Q_b";
	case Observable::SqueezingS2B: return "S2_b";
	}
	return "?";
}

std::vector<std::string> preset_ids()
{
	return {"fig1", "fig2", "fig3", "fig4", "fig5"};
}

FigurePreset figure_preset(std::string_view id)
{
	const StepRate inf = StepRate::unitary_limit();
	FigurePreset out;
	out.id = std::string(id);

	// The Mandel-Q figures leave omega open; Q does not depend on it.
	if(id == "fig1" || id == "fig2")
	{
		out.observable = id == "fig1" ? Observable::MandelQA : Observable::MandelQB;
		out.curves = gamma_family(out.observable, 1.0, 1.0, 2.0, {inf, StepRate::finite(100.0)});
		out.grid = {0.0, 20.0, 2000, Spacing::Linear};
	}
	else if(id == "fig3")
	{
		out.observable = Observable::SqueezingS2B;
		out.curves = gamma_family(out.observable, 0.1, std::numbers::pi, 0.3,
		                          {inf, StepRate::finite(1e3), StepRate::finite(1e2)});
		// The free-oscillation term decays at 2 omega^2/gamma = 2e-4, so the
		// stationary value is only reached around t ~ 3e4.
		out.grid = {1e-2, 1e5, 2000, Spacing::Logarithmic};
	}
	else if(id == "fig4")
	{
		out.observable = Observable::SqueezingS2B;
		out.curves = gamma_family(out.observable, 10.0, 10.0, 0.3, {StepRate::finite(1e2)});
		out.grid = {0.0, 10.0, 2000, Spacing::Linear};
	}
	else if(id == "fig5")
	{
		out.observable = Observable::SqueezingS2B;
		const std::array<double, 4> deltas{0.0, 1e-7, 2e-7, 3e-7};
		out.curves = sensitivity_curves(make(10.0, 10.0, StepRate::finite(1e2), 0.4), deltas);
		out.grid = {1e-2, 1e8, 2000, Spacing::Logarithmic};
	}
	else
	{
		throw ModelError(ErrorKind::UnknownPreset, "unknown preset '" + std::string(id) + "'");
	}
	return out;
}

Table evaluate_curves(Observable observable, const std::vector<Curve>& curves, const TimeGrid& grid)
{
	Table table;
	table.t = grid.times();
	for(const auto& curve : curves)
	{
		table.headers.push_back(curve.label);
		std::vector<std::optional<double>> column;
		column.reserve(table.t.size());
		for(double t : table.t)
		{
			column.push_back(evaluate(observable, curve.params, t));
		}
		table.columns.push_back(std::move(column));
	}
	return table;
}

Table evaluate_figure(const FigurePreset& preset, const std::optional<TimeGrid>& grid)
{
	return evaluate_curves(preset.observable, preset.curves, grid.value_or(preset.grid));
}

std::vector<Curve> sensitivity_curves(const ModelParams& base, std::span<const double> deltas)
{
	std::vector<Curve> out;
	for(double delta : deltas)
	{
		ModelParams p = base;
		p.omega_prime = base.omega_prime + delta;
		out.push_back({"S2_b[delta=" + short_number(delta) + "]", validate_params(p)});
	}
	return out;
}

Table sensitivity_table(const ModelParams& base, std::span<const double> deltas, const TimeGrid& grid)
{
	if(base.gamma.is_unitary_limit())
	{
		throw ModelError(ErrorKind::UnitaryLimitUnsupported, "sensitivity scans need finite gamma");
	}
	return evaluate_curves(Observable::SqueezingS2B, sensitivity_curves(base, deltas), grid);
}

} // namespace atomlaser::scan
