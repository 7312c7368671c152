#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "atomlaser/params.hpp"

namespace atomlaser
{

struct TruncationOptions
{
	double target_tail = 1e-14;       ///< allowed excluded Poisson mass
	std::int64_t max_k = 10'000'000;  ///< WindowOverflow above this step index
};

/// Window [k_lo, k_hi] of step counts kept from a Poisson(mean) distribution.
struct PoissonTruncation
{
	double mean = 0.0;
	std::int64_t k_lo = 0;
	std::int64_t k_hi = 0;
	double tail_bound = 0.0;  ///< Chernoff bound on the excluded mass
	double tail_mass = 0.0;   ///< 1 - (compensated sum of kept weights)
	double target_tail = 1e-14;
	std::vector<double> weights; ///< weights[k - k_lo]
};

/// Chooses the window so that the Chernoff bound on both tails is below
/// target_tail, then fills the weights. Throws WindowOverflow.
PoissonTruncation poisson_window(double mean, const TruncationOptions& opts = {});

/// e^{-mean} mean^k / k!, accurate to a few ulps for large mean and k.
double poisson_pmf(std::int64_t k, double mean);

/// Neumaier compensated accumulator.
class CompensatedSum
{
public:
	void add(double x)
	{
		const double t = sum_ + x;
		if(std::abs(sum_) >= std::abs(x))
		{
			carry_ += (sum_ - t) + x;
		}
		else
		{
			carry_ += (x - t) + sum_;
		}
		sum_ = t;
	}

	[[nodiscard]] double value() const { return sum_ + carry_; }

private:
	double sum_ = 0.0;
	double carry_ = 0.0;
};

class CompensatedComplexSum
{
public:
	void add(complex z)
	{
		re_.add(z.real());
		im_.add(z.imag());
	}

	[[nodiscard]] complex value() const { return {re_.value(), im_.value()}; }

private:
	CompensatedSum re_;
	CompensatedSum im_;
};

} // namespace atomlaser
