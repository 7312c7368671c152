#include <cmath>

#include <doctest.h>

#include "atomlaser/error.hpp"
#include "atomlaser/poisson.hpp"

using namespace atomlaser;

TEST_CASE("pmf against log-gamma evaluation for moderate arguments")
{
	for(double mean : {0.3, 1.0, 7.5, 42.0, 300.0})
	{
		for(std::int64_t k = 0; k < 600; k += 7)
		{
			const double ref = std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
			CHECK(poisson_pmf(k, mean) == doctest::Approx(ref).epsilon(1e-11));
		}
	}
	CHECK(poisson_pmf(0, 0.0) == 1.0);
	CHECK(poisson_pmf(3, 0.0) == 0.0);
	CHECK(poisson_pmf(-1, 2.0) == 0.0);
}

TEST_CASE("pmf at the mode for a large mean")
{
	// mpmath: e^{-1e4} 1e4^1e4 / (1e4)! = 0.0039893895...
	CHECK(poisson_pmf(10000, 1e4) == doctest::Approx(0.0039893895589628).epsilon(1e-13));
}

TEST_CASE("window covers the requested mass")
{
	for(double mean : {0.0, 1e-20, 0.01, 1.0, 37.0, 1000.0, 1e4, 1e6})
	{
		const auto w = poisson_window(mean);
		CHECK(w.k_lo >= 0);
		CHECK(w.k_hi >= w.k_lo);
		CHECK(w.tail_bound <= 1e-14);
		CHECK(w.tail_mass <= 1e-14);
		CHECK(w.weights.size() == static_cast<std::size_t>(w.k_hi - w.k_lo + 1));
		CompensatedSum s;
		for(double x : w.weights)
		{
			s.add(x);
		}
		CHECK(s.value() == 1.0 - w.tail_mass);
		if(mean > 100.0)
		{
			// the window sits around mean +- m sqrt(mean)
			const double m = (w.k_hi - mean) / std::sqrt(mean);
			CHECK(m > 5.0);
			CHECK(m < 12.0);
		}
	}
	const auto zero = poisson_window(0.0);
	CHECK(zero.k_lo == 0);
	CHECK(zero.k_hi == 0);
	CHECK(zero.weights.front() == 1.0);
}

TEST_CASE("looser targets shrink the window")
{
	const auto tight = poisson_window(500.0, {1e-14, 10'000'000});
	const auto loose = poisson_window(500.0, {1e-4, 10'000'000});
	CHECK(loose.k_hi < tight.k_hi);
	CHECK(loose.k_lo > tight.k_lo);
	CHECK(loose.tail_mass <= 1e-4);
}

TEST_CASE("window overflow")
{
	CHECK_THROWS_AS(poisson_window(1e6, {1e-14, 1000}), ModelError);
	CHECK_THROWS_AS(poisson_window(900.0, {1e-14, 1000}), ModelError);
	CHECK_NOTHROW(poisson_window(100.0, {1e-14, 1000}));
}

TEST_CASE("compensated sum recovers small addends")
{
	CompensatedSum s;
	s.add(1.0);
	for(int i = 0; i < 1000; ++i)
	{
		s.add(1e-17);
	}
	s.add(-1.0);
	CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-10));
}
