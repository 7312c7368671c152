#include "atomlaser/heisenberg_oracle.hpp"

#include <cmath>

#include "atomlaser/error.hpp"

namespace atomlaser::heisenberg
{

namespace
{

struct ModeMoments
{
	double n = 0.0;
	complex x2;
	double n2 = 0.0;
};

// Moments of c = u[0] a + u[1] b.
ModeMoments mode_moments(const std::array<complex, 2>& u, const WickTable& w)
{
	complex n;
	complex x2;
	for(int i = 0; i < 2; ++i)
	{
		for(int j = 0; j < 2; ++j)
		{
			n += std::conj(u[i]) * u[j] * w.normal[i][j];
			x2 += u[i] * u[j] * w.anomalous[i][j];
		}
	}
	ModeMoments out;
	out.n = n.real();
	out.x2 = x2;
	// <c^dag c^dag c c> = |<c c>|^2 + 2 <c^dag c>^2, and
	// (c^dag c)^2 = c^dag c^dag c c + c^dag c.
	out.n2 = std::norm(x2) + 2.0 * out.n * out.n + out.n;
	return out;
}

} // namespace

BranchCoefficients branch_coefficients(const ModelParams& p, std::int64_t k)
{
	const double gamma = p.gamma.value();
	const double kd = static_cast<double>(k);
	const double rot = kd * p.omega_prime / gamma;
	const double free = kd * p.omega / gamma;
	const double c = std::cos(rot);
	const double s = std::sin(rot);
	const complex minus_i{0.0, -1.0};

	BranchCoefficients out;
	out.k = k;
	out.mu_a = std::polar(c, -free);
	out.nu_a = minus_i * std::polar(s, p.theta - free);
	out.mu_b = std::polar(c, -free);
	out.nu_b = minus_i * std::polar(s, -(p.theta + free));
	return out;
}

WickTable WickTable::from(const GaussianMoments& m)
{
	WickTable w;
	w.normal[0][0] = m.n_a0;
	w.anomalous[0][0] = m.a2_0;
	return w;
}

BranchMoments branch_moments(const BranchCoefficients& c, const WickTable& table)
{
	const ModeMoments a = mode_moments({c.mu_a, c.nu_a}, table);
	const ModeMoments b = mode_moments({c.nu_b, c.mu_b}, table);
	return {a.n, b.n, a.x2, b.x2, a.n2, b.n2};
}

BranchMoments branch_moments(const BranchCoefficients& c, const GaussianMoments& m)
{
	return branch_moments(c, WickTable::from(m));
}

OracleResult poisson_observables(const ModelParams& p, double t, const TruncationOptions& opts,
                                 double rel_threshold)
{
	const double gamma = p.gamma.value();
	const GaussianMoments initial = squeezed_vacuum_moments(p.r, p.phi);
	const WickTable table = WickTable::from(initial);

	OracleResult out;
	out.window = poisson_window(gamma * t, opts);

	CompensatedSum n_a, n_b, n2_a, n2_b;
	CompensatedComplexSum a2, b2;
	for(std::int64_t k = out.window.k_lo; k <= out.window.k_hi; ++k)
	{
		const double w = out.window.weights[static_cast<std::size_t>(k - out.window.k_lo)];
		const BranchMoments m = branch_moments(branch_coefficients(p, k), table);
		n_a.add(w * m.n_a);
		n_b.add(w * m.n_b);
		n2_a.add(w * m.n2_a);
		n2_b.add(w * m.n2_b);
		a2.add(w * m.a2);
		b2.add(w * m.b2);
	}
	out.window.weights.clear();
	out.window.weights.shrink_to_fit();

	RawMoments raw;
	raw.n_a = n_a.value();
	raw.n_b = n_b.value();
	raw.n2_a = n2_a.value();
	raw.n2_b = n2_b.value();
	raw.a2 = a2.value();
	raw.b2 = b2.value();
	out.point = assemble_observables(t, raw, rel_threshold * initial.n_a0);
	return out;
}

} // namespace atomlaser::heisenberg
