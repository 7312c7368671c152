#pragma once

#include <array>
#include <cstdint>

#include "atomlaser/analytic.hpp"
#include "atomlaser/params.hpp"
#include "atomlaser/poisson.hpp"

namespace atomlaser::heisenberg
{

/// Mode operators after k unitary steps: a(k) = mu_a a + nu_a b and
/// b(k) = mu_b b + nu_b a.
struct BranchCoefficients
{
	std::int64_t k = 0;
	complex mu_a{1.0, 0.0};
	complex nu_a;
	complex mu_b{1.0, 0.0};
	complex nu_b;
};

/// Throws UnitaryLimitUnsupported for gamma = unitary limit.
BranchCoefficients branch_coefficients(const ModelParams& p, std::int64_t k);

/// Normal-ordered second moments of the initial state over the modes (a, b):
/// normal[i][j] = <x_i^dag x_j>, anomalous[i][j] = <x_i x_j>. The state is a
/// zero-mean Gaussian so every higher moment follows by Wick contraction.
struct WickTable
{
	std::array<std::array<complex, 2>, 2> normal{};
	std::array<std::array<complex, 2>, 2> anomalous{};

	static WickTable from(const GaussianMoments& m);
};

struct BranchMoments
{
	double n_a = 0.0;
	double n_b = 0.0;
	complex a2;
	complex b2;
	double n2_a = 0.0; ///< <(a^dag a)^2>
	double n2_b = 0.0;
};

BranchMoments branch_moments(const BranchCoefficients& c, const WickTable& table);
BranchMoments branch_moments(const BranchCoefficients& c, const GaussianMoments& m);

struct OracleResult
{
	ObservablePoint point;
	PoissonTruncation window; ///< weights are dropped to keep results small
};

/// Poisson-weighted sum of branch moments over the truncation window,
/// accumulated in ascending k with compensated summation.
/// Throws UnitaryLimitUnsupported, WindowOverflow.
OracleResult poisson_observables(const ModelParams& p, double t, const TruncationOptions& opts = {},
                                 double rel_threshold = 1e-12);

} // namespace atomlaser::heisenberg
