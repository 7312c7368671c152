#pragma once

#include <string>
#include <vector>

#include "atomlaser/params.hpp"
#include "atomlaser/table.hpp"

namespace atomlaser::scan
{

/// Experimental atom-laser parameters: omega = 300 kHz, Omega = 60 kHz,
/// N = |alpha|^2 = 1e6, gamma = 1e5 MHz, r = 1. Internally everything is
/// expressed in rad/ms and ms.
enum class FrequencyReading
{
	Angular,  ///< "kHz" read as 1e3 rad/s
	Ordinary, ///< "kHz" read as 1e3 cycles/s, i.e. 2 pi 1e3 rad/s
};

ModelParams scenario_params(FrequencyReading reading);

struct EnvelopeTimescale
{
	std::string term;          ///< e.g. "E(-2 omega)"
	double rate_per_s = 0.0;   ///< decay rate of |E|
	double efold_s = 0.0;
	double crossing_s = 0.0;   ///< time at which |E| falls below the threshold
};

struct ScenarioReading
{
	FrequencyReading reading = FrequencyReading::Angular;
	ModelParams params;
	EnvelopeTimescale rabi;                  ///< E(2 Omega'): number oscillations
	std::vector<EnvelopeTimescale> squeezing; ///< every envelope in the squeezing terms
	double freeze_time_s = 0.0;
	double destruction_time_s = 0.0;         ///< slowest squeezing envelope crossing
};

struct ScenarioSummary
{
	double threshold = 1e-3;
	ScenarioReading angular;
	ScenarioReading ordinary;
	double quoted_freeze_s = 100e-6;
	double quoted_destruction_s = 0.15;
	bool freeze_consistent = false;      ///< angular freeze time within [80, 120] us
	bool destruction_discrepancy = false; ///< neither reading within 20% of the quoted time
};

/// Time at which |E(nu, t)| = exp(-rate t) drops below threshold, in the
/// time unit of gamma; +inf if the envelope does not decay.
double envelope_crossing_time(double nu, const StepRate& gamma, double threshold);

ScenarioSummary scenario_summary(double threshold = 1e-3);

/// N_b, S2_b and the Rabi envelope |E(2 Omega')| under the angular reading,
/// on a grid given in seconds.
Table scenario_table(const TimeGrid& seconds);

std::string format_summary(const ScenarioSummary& s);

} // namespace atomlaser::scan
