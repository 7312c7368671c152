#include "atomlaser/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "atomlaser/analytic.hpp"

namespace atomlaser::scan
{

namespace
{

constexpr double ms_per_s = 1e3;

EnvelopeTimescale timescale(const std::string& term, double nu, const StepRate& gamma, double threshold)
{
	EnvelopeTimescale out;
	out.term = term;
	out.rate_per_s = envelope_decay_rate(nu, gamma) * ms_per_s;
	out.efold_s = 1.0 / out.rate_per_s;
	out.crossing_s = envelope_crossing_time(nu, gamma, threshold) / ms_per_s;
	return out;
}

ScenarioReading reading_summary(FrequencyReading reading, double threshold)
{
	ScenarioReading out;
	out.reading = reading;
	out.params = scenario_params(reading);
	const ModelParams& p = out.params;

	out.rabi = timescale("E(2 omega')", 2.0 * p.omega_prime, p.gamma, threshold);
	out.freeze_time_s = out.rabi.crossing_s;
	out.squeezing = {
		timescale("E(-2 omega)", -2.0 * p.omega, p.gamma, threshold),
		timescale("E(2 (omega' - omega))", 2.0 * (p.omega_prime - p.omega), p.gamma, threshold),
		timescale("E(-2 (omega' + omega))", -2.0 * (p.omega_prime + p.omega), p.gamma, threshold),
		out.rabi,
	};
	for(const auto& s : out.squeezing)
	{
		out.destruction_time_s = std::max(out.destruction_time_s, s.crossing_s);
	}
	return out;
}

void print_reading(std::ostream& out, const char* name, const ScenarioReading& r)
{
	out << name << " reading: omega=" << r.params.omega << " rad/ms, omega'=" << r.params.omega_prime
	    << " rad/ms, gamma=" << r.params.gamma.value() << " /ms\n";
	out << "  Rabi envelope " << r.rabi.term << ": rate " << r.rabi.rate_per_s << " /s, freezes (|E| < threshold) at "
	    << r.freeze_time_s * 1e6 << " us\n";
	for(const auto& s : r.squeezing)
	{
		out << "  squeezing envelope " << s.term << ": rate " << s.rate_per_s << " /s, 1/e time " << s.efold_s
		    << " s, below threshold at " << s.crossing_s << " s\n";
	}
	out << "  squeezing terms all below threshold at " << r.destruction_time_s << " s\n";
}

} // namespace

ModelParams scenario_params(FrequencyReading reading)
{
	// kHz -> rad/ms is a factor 1 (angular) or 2 pi (ordinary).
	const double unit = reading == FrequencyReading::Angular ? 1.0 : 2.0 * std::numbers::pi;
	const double atoms = 1e6;
	ModelParams p;
	p.omega = 300.0 * unit;
	p.omega_prime = std::sqrt(atoms) * 60.0 * unit;
	p.gamma = StepRate::finite(1e5 * 1e3); // 1e5 MHz = 1e8 per ms
	p.r = 1.0;
	return validate_params(p);
}

double envelope_crossing_time(double nu, const StepRate& gamma, double threshold)
{
	const double rate = envelope_decay_rate(nu, gamma);
	if(!(rate > 0.0))
	{
		return std::numeric_limits<double>::infinity();
	}
	return -std::log(threshold) / rate;
}

ScenarioSummary scenario_summary(double threshold)
{
	ScenarioSummary s;
	s.threshold = threshold;
	s.angular = reading_summary(FrequencyReading::Angular, threshold);
	s.ordinary = reading_summary(FrequencyReading::Ordinary, threshold);
	s.freeze_consistent = s.angular.freeze_time_s >= 80e-6 && s.angular.freeze_time_s <= 120e-6;
	const auto close = [&](double t) { return std::abs(t - s.quoted_destruction_s) <= 0.2 * s.quoted_destruction_s; };
	s.destruction_discrepancy = !close(s.angular.destruction_time_s) && !close(s.ordinary.destruction_time_s);
	return s;
}

Table scenario_table(const TimeGrid& seconds)
{
	const ModelParams p = scenario_params(FrequencyReading::Angular);
	Table table;
	table.t = seconds.times();
	table.headers = {"N_b", "S2_b", "rabi_envelope"};
	table.columns.resize(3);
	for(double ts : table.t)
	{
		const double t = ts * ms_per_s;
		table.columns[0].push_back(mean_numbers(p, t).n_b);
		table.columns[1].push_back(squeezing_exact(p, t).s2_b);
		table.columns[2].push_back(std::abs(envelope(2.0 * p.omega_prime, p, t)));
	}
	return table;
}

std::string format_summary(const ScenarioSummary& s)
{
	std::ostringstream out;
	out.precision(6);
	out << "scenario: omega=300 kHz, Omega=60 kHz, N=1e6, gamma=1e5 MHz, r=1; threshold |E| < " << s.threshold
	    << "\n";
	print_reading(out, "angular", s.angular);
	print_reading(out, "ordinary", s.ordinary);
	out << "quoted freeze time ~" << s.quoted_freeze_s * 1e6 << " us: "
	    << (s.freeze_consistent ? "consistent with the angular reading" : "NOT reproduced") << "\n";
	out << "quoted squeezing-destruction time ~" << s.quoted_destruction_s << " s: ";
	if(s.destruction_discrepancy)
	{
		out << "DISCREPANCY, computed " << s.angular.destruction_time_s << " s (angular) and "
		    << s.ordinary.destruction_time_s << " s (ordinary); not fitted\n";
	}
	else
	{
		out << "reproduced within 20%\n";
	}
	return out.str();
}

} // namespace atomlaser::scan
