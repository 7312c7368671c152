#include "atomlaser/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "atomlaser/error.hpp"

namespace atomlaser
{

const char* to_string(ErrorKind kind)
{
	switch(kind)
	{
	case ErrorKind::NonPositiveGamma: return "NonPositiveGamma";
	case ErrorKind::NegativeFrequency: return "NegativeFrequency";
	case ErrorKind::NegativeSqueeze: return "NegativeSqueeze";
	case ErrorKind::InvalidTimeGrid: return "InvalidTimeGrid";
	case ErrorKind::UnitaryLimitUnsupported: return "UnitaryLimitUnsupported";
	case ErrorKind::WindowOverflow: return "WindowOverflow";
	case ErrorKind::TruncationTooLarge: return "TruncationTooLarge";
	case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
	case ErrorKind::UnknownPreset: return "UnknownPreset";
	case ErrorKind::IoError: return "IoError";
	}
	return "UnknownError";
}

double StepRate::value() const
{
	if(unitary_)
	{
		throw ModelError(ErrorKind::UnitaryLimitUnsupported, "step rate is the unitary limit");
	}
	return rate_;
}

double reduce_phase(double angle)
{
	constexpr double pi = std::numbers::pi;
	double x = std::remainder(angle, 2.0 * pi);
	// remainder() lands in [-pi, pi]; the few-ulp band around -pi is the
	// rounding image of +pi and is folded onto it.
	if(x <= -pi + 8.0 * std::numeric_limits<double>::epsilon() * pi)
	{
		x += 2.0 * pi;
	}
	return x;
}

ModelParams validate_params(const ModelParams& p)
{
	if(!p.gamma.is_unitary_limit())
	{
		const double g = p.gamma.value();
		if(!(g > 0.0) || !std::isfinite(g))
		{
			throw ModelError(ErrorKind::NonPositiveGamma,
			                 "finite gamma must be positive, got " + std::to_string(g));
		}
	}
	if(!(p.omega >= 0.0) || !(p.omega_prime >= 0.0))
	{
		throw ModelError(ErrorKind::NegativeFrequency, "omega and omega_prime must be >= 0");
	}
	if(!(p.r >= 0.0))
	{
		throw ModelError(ErrorKind::NegativeSqueeze, "squeeze magnitude r must be >= 0");
	}
	ModelParams out = p;
	out.phi = reduce_phase(p.phi);
	out.theta = reduce_phase(p.theta);
	return out;
}

GaussianMoments squeezed_vacuum_moments(double r, double phi)
{
	if(!(r >= 0.0))
	{
		throw ModelError(ErrorKind::NegativeSqueeze, "squeeze magnitude r must be >= 0");
	}
	const double s = std::sinh(r);
	return GaussianMoments{s * s, std::polar(s * std::cosh(r), phi)};
}

complex envelope_exponent(double nu, double gamma, double t)
{
	const double x = nu / gamma;
	const double half = std::sin(0.5 * x);
	return {-2.0 * gamma * t * half * half, gamma * t * std::sin(x)};
}

complex envelope(double nu, const ModelParams& p, double t)
{
	if(t == 0.0)
	{
		return {1.0, 0.0};
	}
	if(p.gamma.is_unitary_limit())
	{
		return std::polar(1.0, nu * t);
	}
	return std::exp(envelope_exponent(nu, p.gamma.value(), t));
}

double envelope_decay_rate(double nu, const StepRate& gamma)
{
	if(gamma.is_unitary_limit())
	{
		return 0.0;
	}
	const double g = gamma.value();
	const double half = std::sin(0.5 * nu / g);
	return 2.0 * g * half * half;
}

std::vector<double> TimeGrid::times() const
{
	if(count < 2 || !(stop > start) || !(start >= 0.0))
	{
		throw ModelError(ErrorKind::InvalidTimeGrid, "need 0 <= start < stop and count >= 2");
	}
	if(spacing == Spacing::Logarithmic && !(start > 0.0))
	{
		throw ModelError(ErrorKind::InvalidTimeGrid, "logarithmic spacing needs start > 0");
	}
	std::vector<double> out(static_cast<std::size_t>(count));
	const double last = count - 1;
	for(int i = 0; i < count; ++i)
	{
		const double f = i / last;
		if(spacing == Spacing::Linear)
		{
			out[i] = start + (stop - start) * f;
		}
		else
		{
			out[i] = start * std::pow(stop / start, f);
		}
	}
	out.front() = start;
	out.back() = stop;
	return out;
}

} // namespace atomlaser
