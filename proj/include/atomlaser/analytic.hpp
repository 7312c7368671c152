#pragma once

#include <optional>

#include "atomlaser/params.hpp"

namespace atomlaser
{

struct MeanNumbers
{
	double n_a = 0.0; ///< photons in the optical mode
	double n_b = 0.0; ///< atoms in the output (untrapped) mode
};

struct NumberVariances
{
	double var_a = 0.0;
	double var_b = 0.0;
};

/// Mandel Q of each mode; empty where the mean number is below threshold.
struct MandelQ
{
	std::optional<double> q_a;
	std::optional<double> q_b;
};

struct SqueezingCoefficients
{
	double s1_a = 0.0;
	double s2_a = 0.0;
	double s1_b = 0.0;
	double s2_b = 0.0;
};

struct ApproxSqueezing
{
	SqueezingCoefficients s;
	/// Set when max(omega, omega')/gamma > 0.1; values are still computed.
	bool outside_domain = false;
};

struct StationaryValues
{
	double generic = 0.0;
	std::optional<double> special_plus;
	std::optional<double> special_minus;
	bool squeezed_at_infinity = false;
};

/// All single-time observables of both modes.
struct ObservablePoint
{
	double t = 0.0;
	double n_a = 0.0;
	double n_b = 0.0;
	double var_a = 0.0;
	double var_b = 0.0;
	std::optional<double> q_a;
	std::optional<double> q_b;
	double s1_a = 0.0;
	double s2_a = 0.0;
	double s1_b = 0.0;
	double s2_b = 0.0;
};

/// Raw expectation values of the two modes; used to assemble an
/// ObservablePoint from any evaluation route.
struct RawMoments
{
	double n_a = 0.0;  ///< <a^dag a>
	double n_b = 0.0;  ///< <b^dag b>
	double n2_a = 0.0; ///< <(a^dag a)^2>
	double n2_b = 0.0; ///< <(b^dag b)^2>
	complex a2;        ///< <a^2>
	complex b2;        ///< <b^2>
	complex a1;        ///< <a>
	complex b1;        ///< <b>
};

/// Q = (var - n)/n, or empty when n <= threshold.
std::optional<double> mandel_ratio(double var, double n, double threshold);

/// Assembles variances, Mandel Q and the quadrature squeezing coefficients
/// S = (<dX^2> - 1/4)/(1/4), including the first-moment terms.
ObservablePoint assemble_observables(double t, const RawMoments& m, double q_threshold);

// Closed forms. All take validated parameters and t >= 0.

MeanNumbers mean_numbers(const ModelParams& p, double t);

/// Term-by-term transcription of the number-variance closed forms: groups
/// proportional to sinh^2 r cosh^2 r, sinh^4 r and sinh^2 r with envelopes at
/// 2 Omega' and 4 Omega'. Negative results within rounding of zero are clamped.
NumberVariances number_variances(const ModelParams& p, double t);

/// Threshold is rel_threshold * sinh^2 r.
MandelQ mandel_q(const ModelParams& p, double t, double rel_threshold = 1e-12);

SqueezingCoefficients squeezing_exact(const ModelParams& p, double t);

/// Cosine-times-Gaussian-decay approximation valid for omega, Omega' << gamma.
/// Every envelope E(nu, t) is replaced by exp(i nu t - nu^2 t / (2 gamma)); at
/// phi = theta = 0 this is literally the cos(nu t) exp(-nu^2 t/(2 gamma)) form.
/// Throws UnitaryLimitUnsupported.
ApproxSqueezing squeezing_large_gamma(const ModelParams& p, double t);

/// Long-time limits of the squeezing coefficients. Throws UnitaryLimitUnsupported.
StationaryValues stationary_values(const ModelParams& p);

ObservablePoint observables(const ModelParams& p, double t, double rel_threshold = 1e-12);

} // namespace atomlaser
