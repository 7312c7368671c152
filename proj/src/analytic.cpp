#include "atomlaser/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "atomlaser/error.hpp"

namespace atomlaser
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();

struct SqueezeScales
{
	double s2;  // sinh^2 r
	double sc;  // sinh r cosh r
	double c2;  // cosh^2 r
};

SqueezeScales scales(double r)
{
	const double s = std::sinh(r);
	const double c = std::cosh(r);
	return {s * s, s * c, c * c};
}

double clamp_rounding(double v, double scale)
{
	if(v < 0.0 && v > -64.0 * eps * scale)
	{
		return 0.0;
	}
	return v;
}

SqueezingCoefficients combine(double n_a, double n_b, complex bracket_a, complex bracket_b,
                              const ModelParams& p, double sc)
{
	const complex squeeze = std::polar(sc, p.phi);
	const double term_a = (bracket_a * squeeze).real();
	const double term_b = (std::polar(1.0, -2.0 * p.theta) * bracket_b * squeeze).real();
	return {2.0 * n_a + term_a, 2.0 * n_a - term_a, 2.0 * n_b + term_b, 2.0 * n_b - term_b};
}

} // namespace

std::optional<double> mandel_ratio(double var, double n, double threshold)
{
	if(!(n > threshold))
	{
		return std::nullopt;
	}
	return (var - n) / n;
}

ObservablePoint assemble_observables(double t, const RawMoments& m, double q_threshold)
{
	ObservablePoint out;
	out.t = t;
	out.n_a = m.n_a;
	out.n_b = m.n_b;
	out.var_a = m.n2_a - m.n_a * m.n_a;
	out.var_b = m.n2_b - m.n_b * m.n_b;
	out.q_a = mandel_ratio(out.var_a, out.n_a, q_threshold);
	out.q_b = mandel_ratio(out.var_b, out.n_b, q_threshold);

	// 4<X1^2> - 1 = 2n + 2 Re<x^2>, 4<X2^2> - 1 = 2n - 2 Re<x^2>.
	const auto quad = [](double n, complex x2, complex x1) {
		const double s1 = 2.0 * n + 2.0 * x2.real() - 4.0 * x1.real() * x1.real();
		const double s2 = 2.0 * n - 2.0 * x2.real() - 4.0 * x1.imag() * x1.imag();
		return std::pair{s1, s2};
	};
	std::tie(out.s1_a, out.s2_a) = quad(m.n_a, m.a2, m.a1);
	std::tie(out.s1_b, out.s2_b) = quad(m.n_b, m.b2, m.b1);
	return out;
}

MeanNumbers mean_numbers(const ModelParams& p, double t)
{
	const double s2 = scales(p.r).s2;
	const complex up = envelope(2.0 * p.omega_prime, p, t);
	const complex down = envelope(-2.0 * p.omega_prime, p, t);
	const double osc = 0.25 * (up + down).real();
	return {(0.5 + osc) * s2, (0.5 - osc) * s2};
}

NumberVariances number_variances(const ModelParams& p, double t)
{
	const auto [s2, sc, c2] = scales(p.r);
	const double s2c2 = sc * sc;
	const double s4 = s2 * s2;

	const complex e2 = envelope(2.0 * p.omega_prime, p, t);
	const complex e2m = envelope(-2.0 * p.omega_prime, p, t);
	const complex e4 = envelope(4.0 * p.omega_prime, p, t);
	const complex e4m = envelope(-4.0 * p.omega_prime, p, t);

	// exp(2 gamma t e^{+-2i Omega'/gamma}) e^{-2 gamma t} = E^2 and
	// exp(2 gamma t cos(2 Omega'/gamma)) e^{-2 gamma t} = |E|^2.
	const double quartic = 0.125 + (e4 + e4m).real() / 16.0
	                       - (e2 * e2 + e2m * e2m + 2.0 * std::norm(e2)).real() / 16.0;
	const double quadratic = 0.125 - (e4 + e4m).real() / 16.0;

	const double mixed_a = 0.75 + (0.5 * e2 + 0.5 * e2m + 0.125 * e4 + 0.125 * e4m).real();
	const double mixed_b = 0.75 - (0.5 * e2 + 0.5 * e2m - 0.125 * e4 - 0.125 * e4m).real();

	const double tail = quartic * s4 + quadratic * s2;
	const double scale = s2c2 + s4 + s2;
	return {clamp_rounding(mixed_a * s2c2 + tail, scale), clamp_rounding(mixed_b * s2c2 + tail, scale)};
}

MandelQ mandel_q(const ModelParams& p, double t, double rel_threshold)
{
	const auto n = mean_numbers(p, t);
	const auto v = number_variances(p, t);
	const double threshold = rel_threshold * scales(p.r).s2;
	return {mandel_ratio(v.var_a, n.n_a, threshold), mandel_ratio(v.var_b, n.n_b, threshold)};
}

SqueezingCoefficients squeezing_exact(const ModelParams& p, double t)
{
	const double sc = scales(p.r).sc;
	const auto n = mean_numbers(p, t);

	const complex free = envelope(-2.0 * p.omega, p, t);
	const complex difference = envelope(2.0 * (p.omega_prime - p.omega), p, t);
	const complex sum = envelope(-2.0 * (p.omega_prime + p.omega), p, t);

	const complex bracket_a = free + 0.5 * difference + 0.5 * sum;
	const complex bracket_b = -free + 0.5 * difference + 0.5 * sum;
	return combine(n.n_a, n.n_b, bracket_a, bracket_b, p, sc);
}

ApproxSqueezing squeezing_large_gamma(const ModelParams& p, double t)
{
	const double gamma = p.gamma.value();
	const auto [s2, sc, c2] = scales(p.r);

	const auto approx = [&](double nu) {
		return std::exp(complex{-nu * nu * t / (2.0 * gamma), nu * t});
	};

	// [1 +- cos(2 Omega' t) exp(-2 Omega'^2 t/gamma)] sinh^2 r
	const double rabi = approx(2.0 * p.omega_prime).real();
	const double n_a = 0.5 * (1.0 + rabi) * s2;
	const double n_b = 0.5 * (1.0 - rabi) * s2;

	const complex free = approx(-2.0 * p.omega);
	const complex difference = approx(2.0 * (p.omega_prime - p.omega));
	const complex sum = approx(-2.0 * (p.omega_prime + p.omega));

	ApproxSqueezing out;
	out.s = combine(n_a, n_b, free + 0.5 * difference + 0.5 * sum,
	                -free + 0.5 * difference + 0.5 * sum, p, sc);
	out.outside_domain = std::max(p.omega, p.omega_prime) / gamma > 0.1;
	return out;
}

StationaryValues stationary_values(const ModelParams& p)
{
	if(p.gamma.is_unitary_limit())
	{
		throw ModelError(ErrorKind::UnitaryLimitUnsupported,
		                 "no stationary values without decoherence");
	}
	const auto [s2, sc, c2] = scales(p.r);
	StationaryValues out;
	out.generic = s2;

	const double scale = std::max(p.omega, p.omega_prime);
	const bool degenerate = std::abs(p.omega_prime - p.omega) <= 1e-12 * scale;
	if(degenerate)
	{
		out.special_plus = s2 + 0.5 * sc;
		out.special_minus = s2 - 0.5 * sc;
		const double tr = std::tanh(p.r);
		out.squeezed_at_infinity = tr > 0.0 && tr < 0.5;
	}
	return out;
}

ObservablePoint observables(const ModelParams& p, double t, double rel_threshold)
{
	const auto n = mean_numbers(p, t);
	const auto v = number_variances(p, t);
	const auto s = squeezing_exact(p, t);
	const double threshold = rel_threshold * scales(p.r).s2;

	ObservablePoint out;
	out.t = t;
	out.n_a = n.n_a;
	out.n_b = n.n_b;
	out.var_a = v.var_a;
	out.var_b = v.var_b;
	out.q_a = mandel_ratio(v.var_a, n.n_a, threshold);
	out.q_b = mandel_ratio(v.var_b, n.n_b, threshold);
	out.s1_a = s.s1_a;
	out.s2_a = s.s2_a;
	out.s1_b = s.s1_b;
	out.s2_b = s.s2_b;
	return out;
}

} // namespace atomlaser
