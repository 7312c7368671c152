#include "atomlaser/poisson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "atomlaser/error.hpp"

namespace atomlaser
{

namespace
{

// Error of Stirling's approximation, ln n! - ln(sqrt(2 pi n) (n/e)^n).
double stirling_error(double n)
{
	constexpr double s0 = 1.0 / 12.0;
	constexpr double s1 = 1.0 / 360.0;
	constexpr double s2 = 1.0 / 1260.0;
	constexpr double s3 = 1.0 / 1680.0;
	constexpr double s4 = 1.0 / 1188.0;

	if(n <= 15.0)
	{
		return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n
		       - 0.5 * std::log(2.0 * std::numbers::pi);
	}
	const double nn = n * n;
	if(n > 500.0)
	{
		return (s0 - s1 / nn) / n;
	}
	if(n > 80.0)
	{
		return (s0 - (s1 - s2 / nn) / nn) / n;
	}
	if(n > 35.0)
	{
		return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
	}
	return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x ln(x/m) + m - x, without cancellation near x = m.
double deviance(double x, double m)
{
	if(std::abs(x - m) < 0.1 * (x + m))
	{
		double v = (x - m) / (x + m);
		double s = (x - m) * v;
		double ej = 2.0 * x * v;
		v *= v;
		for(int j = 1; j < 1000; ++j)
		{
			ej *= v;
			const double next = s + ej / (2 * j + 1);
			if(next == s)
			{
				return next;
			}
			s = next;
		}
		return s;
	}
	return x * std::log(x / m) + m - x;
}

// ln of the Chernoff bound exp(-mean) (e mean/k)^k on the tail beyond k.
double log_tail_bound(std::int64_t k, double mean)
{
	if(k <= 0)
	{
		return -mean;
	}
	return -deviance(static_cast<double>(k), mean);
}

} // namespace

double poisson_pmf(std::int64_t k, double mean)
{
	if(k < 0)
	{
		return 0.0;
	}
	if(mean == 0.0)
	{
		return k == 0 ? 1.0 : 0.0;
	}
	if(k == 0)
	{
		return std::exp(-mean);
	}
	const double x = static_cast<double>(k);
	return std::exp(-stirling_error(x) - deviance(x, mean)) / std::sqrt(2.0 * std::numbers::pi * x);
}

PoissonTruncation poisson_window(double mean, const TruncationOptions& opts)
{
	PoissonTruncation out;
	out.mean = mean;
	out.target_tail = opts.target_tail;

	if(mean == 0.0)
	{
		out.weights = {1.0};
		return out;
	}

	const double log_half_target = std::log(0.5 * opts.target_tail);
	const auto center = static_cast<std::int64_t>(std::floor(mean));
	const auto width = static_cast<std::int64_t>(std::ceil(std::sqrt(mean))) + 1;

	if(center > opts.max_k)
	{
		throw ModelError(ErrorKind::WindowOverflow,
		                 "Poisson mean " + std::to_string(mean) + " exceeds k cap");
	}

	// Upper edge: smallest k_hi with P(X >= k_hi + 1) below target/2.
	std::int64_t lo = center;
	std::int64_t step = width;
	while(log_tail_bound(center + step + 1, mean) > log_half_target)
	{
		lo = center + step;
		step *= 2;
		if(center + step > opts.max_k)
		{
			if(log_tail_bound(opts.max_k + 1, mean) > log_half_target)
			{
				throw ModelError(ErrorKind::WindowOverflow,
				                 "Poisson window exceeds k cap for mean " + std::to_string(mean));
			}
			step = opts.max_k - center;
			break;
		}
	}
	std::int64_t hi = center + step;
	if(log_tail_bound(center + 1, mean) <= log_half_target)
	{
		hi = center;
	}
	while(hi - lo > 1)
	{
		const std::int64_t mid = lo + (hi - lo) / 2;
		if(log_tail_bound(mid + 1, mean) > log_half_target)
		{
			lo = mid;
		}
		else
		{
			hi = mid;
		}
	}
	out.k_hi = hi;

	// Lower edge: largest k_lo with P(X <= k_lo - 1) below target/2.
	if(log_tail_bound(0, mean) > log_half_target)
	{
		out.k_lo = 0;
	}
	else
	{
		std::int64_t a = 1;          // bound at a-1 = 0 is below target
		std::int64_t b = center + 1; // bound at center is above target
		while(b - a > 1)
		{
			const std::int64_t mid = a + (b - a) / 2;
			if(log_tail_bound(mid - 1, mean) <= log_half_target)
			{
				a = mid;
			}
			else
			{
				b = mid;
			}
		}
		out.k_lo = a;
	}

	const double upper = std::exp(log_tail_bound(out.k_hi + 1, mean));
	const double lower = out.k_lo > 0 ? std::exp(log_tail_bound(out.k_lo - 1, mean)) : 0.0;
	out.tail_bound = upper + lower;

	out.weights.resize(static_cast<std::size_t>(out.k_hi - out.k_lo + 1));
	CompensatedSum total;
	for(std::int64_t k = out.k_lo; k <= out.k_hi; ++k)
	{
		const double w = poisson_pmf(k, mean);
		out.weights[static_cast<std::size_t>(k - out.k_lo)] = w;
		total.add(w);
	}
	out.tail_mass = 1.0 - total.value();
	return out;
}

} // namespace atomlaser
