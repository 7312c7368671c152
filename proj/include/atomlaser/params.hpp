#pragma once

#include <complex>
#include <vector>

namespace atomlaser
{

using complex = std::complex<double>;

/// Mean rate of the stochastic unitary steps. Either a finite positive rate
/// or the unitary limit (no decoherence, plain von Neumann evolution).
class StepRate
{
public:
	static constexpr StepRate unitary_limit() { return StepRate{0.0, true}; }
	static constexpr StepRate finite(double rate) { return StepRate{rate, false}; }

	[[nodiscard]] constexpr bool is_unitary_limit() const { return unitary_; }
	/// Throws UnitaryLimitUnsupported in the unitary limit.
	[[nodiscard]] double value() const;

	friend constexpr bool operator==(const StepRate&, const StepRate&) = default;

private:
	constexpr StepRate(double rate, bool unitary) : rate_{rate}, unitary_{unitary} {}

	double rate_;
	bool unitary_;
};

/// Resonant output-coupler parameters (hbar = 1, frequencies in rad per unit time).
struct ModelParams
{
	double omega = 0.0;       ///< common mode frequency
	double omega_prime = 0.0; ///< effective Rabi coupling |alpha| * Omega
	StepRate gamma = StepRate::unitary_limit();
	double r = 0.0;           ///< squeeze magnitude
	double phi = 0.0;         ///< squeeze phase
	double theta = 0.0;       ///< condensate phase, e^{-i theta} = alpha/|alpha|
};

/// Checks the parameter constraints and returns a copy with both phases
/// reduced to (-pi, pi]. Throws ModelError.
ModelParams validate_params(const ModelParams& p);

/// Reduces an angle to (-pi, pi].
double reduce_phase(double angle);

/// Moments of the initial squeezed vacuum in the optical mode; the atomic
/// output mode starts in vacuum so its moments are implicit.
struct GaussianMoments
{
	double n_a0 = 0.0; ///< <a^dag a> = sinh^2 r
	complex a2_0;      ///< <a^2> = e^{i phi} sinh r cosh r
};

GaussianMoments squeezed_vacuum_moments(double r, double phi);

/// Decoherence envelope E(nu, t) = exp(gamma t (e^{i nu/gamma} - 1)), or
/// e^{i nu t} in the unitary limit.
///
/// The exponent is evaluated as -2 gamma t sin^2(x/2) + i gamma t sin x with
/// x = nu/gamma, which keeps full relative precision when |x| is tiny.
complex envelope(double nu, const ModelParams& p, double t);

/// Exponent of envelope(); finite gamma only.
complex envelope_exponent(double nu, double gamma, double t);

/// Decay rate of |E(nu, t)|: 2 gamma sin^2(nu/(2 gamma)); zero in the unitary limit.
double envelope_decay_rate(double nu, const StepRate& gamma);

enum class Spacing
{
	Linear,
	Logarithmic,
};

struct TimeGrid
{
	double start = 0.0;
	double stop = 1.0;
	int count = 2;
	Spacing spacing = Spacing::Linear;

	/// Sample times, strictly increasing. Throws InvalidTimeGrid.
	[[nodiscard]] std::vector<double> times() const;
};

} // namespace atomlaser
