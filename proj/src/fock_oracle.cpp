#include "atomlaser/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "atomlaser/error.hpp"

namespace atomlaser::fock
{

std::vector<FockBasis::Occupation> FockBasis::occupations() const
{
	std::vector<Occupation> out;
	out.reserve(static_cast<std::size_t>(dim()));
	for(int total = 0; total <= n_max_; ++total)
	{
		for(int j = 0; j <= total; ++j)
		{
			out.push_back({total - j, j});
		}
	}
	return out;
}

BlockHamiltonian::BlockHamiltonian(int n_max, std::vector<HamiltonianBlock> blocks)
	: n_max_{n_max}, blocks_{std::move(blocks)}
{
	const Eigen::Index dim = FockBasis::dim_for(n_max_);
	vectors_ = Eigen::MatrixXcd::Zero(dim, dim);
	values_ = Eigen::VectorXd::Zero(dim);
	for(const auto& block : blocks_)
	{
		const Eigen::Index offset = FockBasis::block_offset(block.total);
		const Eigen::Index size = block.total + 1;
		vectors_.block(offset, offset, size, size) = block.eigenvectors;
		values_.segment(offset, size) = block.eigenvalues;
	}
}

BlockHamiltonian build_hamiltonian(const ModelParams& p, int n_max, Eigen::Index dim_cap)
{
	if(n_max < 0 || FockBasis::dim_for(n_max) > dim_cap)
	{
		throw ModelError(ErrorKind::TruncationTooLarge,
		                 "n_max " + std::to_string(n_max) + " exceeds the dimension cap "
		                     + std::to_string(dim_cap));
	}
	const complex hop = std::polar(p.omega_prime, -p.theta);

	std::vector<HamiltonianBlock> blocks;
	blocks.reserve(static_cast<std::size_t>(n_max + 1));
	for(int total = 0; total <= n_max; ++total)
	{
		HamiltonianBlock block;
		block.total = total;
		block.matrix = Eigen::MatrixXcd::Zero(total + 1, total + 1);
		for(int j = 0; j <= total; ++j)
		{
			block.matrix(j, j) = p.omega * total;
			if(j < total)
			{
				// <N-j-1, j+1| a b^dag |N-j, j> = sqrt((N-j)(j+1))
				const double amp = std::sqrt(static_cast<double>(total - j) * (j + 1));
				block.matrix(j + 1, j) = hop * amp;
				block.matrix(j, j + 1) = std::conj(hop) * amp;
			}
		}
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block.matrix);
		block.eigenvalues = solver.eigenvalues();
		block.eigenvectors = solver.eigenvectors();
		blocks.push_back(std::move(block));
	}
	return BlockHamiltonian(n_max, std::move(blocks));
}

FockState squeezed_vacuum_fock(double r, double phi, int n_max, double budget_bound)
{
	if(!(r >= 0.0))
	{
		throw ModelError(ErrorKind::NegativeSqueeze, "squeeze magnitude r must be >= 0");
	}
	FockState out;
	out.n_max = n_max;
	out.amplitudes = Eigen::VectorXcd::Zero(FockBasis::dim_for(n_max));

	const complex ratio = std::polar(std::tanh(r), phi);
	complex c = 1.0 / std::sqrt(std::cosh(r));
	for(int n = 0; n <= n_max; n += 2)
	{
		if(n > 0)
		{
			c *= ratio * std::sqrt((n - 1.0) / n);
		}
		out.amplitudes(FockBasis::index(n, 0)) = c;
	}

	complex a2;
	for(int n = 2; n <= n_max; n += 2)
	{
		a2 += std::conj(out.amplitudes(FockBasis::index(n - 2, 0)))
		      * out.amplitudes(FockBasis::index(n, 0)) * std::sqrt(n * (n - 1.0));
	}
	if((a2 * std::polar(1.0, -phi)).real() < 0.0)
	{
		for(int n = 2; n <= n_max; n += 4)
		{
			out.amplitudes(FockBasis::index(n, 0)) *= -1.0;
		}
	}

	out.truncation_budget = 1.0 - out.amplitudes.squaredNorm();
	if(out.truncation_budget > budget_bound)
	{
		std::ostringstream msg;
		msg << "squeezed vacuum with r=" << r << " loses " << out.truncation_budget
		    << " probability at n_max=" << n_max << " (bound " << budget_bound << ")";
		throw ModelError(ErrorKind::InsufficientTruncation, msg.str());
	}
	return out;
}

int minimal_truncation(double r, double budget_bound, int n_min, int n_cap)
{
	if(!(r >= 0.0))
	{
		throw ModelError(ErrorKind::NegativeSqueeze, "squeeze magnitude r must be >= 0");
	}
	const double t2 = std::tanh(r) * std::tanh(r);
	double p = 1.0 / std::cosh(r);
	double kept = p;
	for(int n = 0; n <= n_cap; n += 2)
	{
		if(n > 0)
		{
			p *= t2 * (n - 1.0) / n;
			kept += p;
		}
		if(n >= n_min && 1.0 - kept <= budget_bound)
		{
			return n;
		}
	}
	return -1;
}

TruncatedDensityMatrix density_from_state(const FockState& state)
{
	return {state.n_max, state.amplitudes * state.amplitudes.adjoint()};
}

namespace
{

// Indices whose row of rho (in any basis) is not identically zero.
std::vector<Eigen::Index> support(const Eigen::MatrixXcd& rho)
{
	std::vector<Eigen::Index> out;
	for(Eigen::Index i = 0; i < rho.rows(); ++i)
	{
		if(rho.row(i).cwiseAbs().maxCoeff() > 0.0)
		{
			out.push_back(i);
		}
	}
	return out;
}

struct Eigenframe
{
	Eigen::MatrixXcd rho;            // rho0 on the supported eigenvectors
	Eigen::VectorXd values;          // their eigenvalues
	std::vector<Eigen::Index> index; // positions in the full basis
};

Eigenframe to_eigenframe(const BlockHamiltonian& h, const TruncatedDensityMatrix& rho0)
{
	const Eigen::MatrixXcd& v = h.eigenvectors();
	const Eigen::MatrixXcd full = v.adjoint() * rho0.entries * v;

	Eigenframe out;
	out.index = support(full);
	const auto m = static_cast<Eigen::Index>(out.index.size());
	out.rho.resize(m, m);
	out.values.resize(m);
	for(Eigen::Index i = 0; i < m; ++i)
	{
		out.values(i) = h.eigenvalues()(out.index[i]);
		for(Eigen::Index j = 0; j < m; ++j)
		{
			out.rho(i, j) = full(out.index[i], out.index[j]);
		}
	}
	return out;
}

// Scatters the supported eigenframe entries back and rotates to the Fock basis.
TruncatedDensityMatrix from_eigenframe(const BlockHamiltonian& h, const Eigenframe& frame,
                                       const Eigen::MatrixXcd& evolved)
{
	const Eigen::MatrixXcd& v = h.eigenvectors();
	Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(v.rows(), v.cols());
	const auto m = static_cast<Eigen::Index>(frame.index.size());
	for(Eigen::Index i = 0; i < m; ++i)
	{
		for(Eigen::Index j = 0; j < m; ++j)
		{
			full(frame.index[i], frame.index[j]) = evolved(i, j);
		}
	}
	return {h.n_max(), v * full * v.adjoint()};
}

} // namespace

KrausEvolution kraus_evolve(const BlockHamiltonian& h, const TruncatedDensityMatrix& rho0,
                            const ModelParams& p, double t, const TruncationOptions& opts)
{
	const double gamma = p.gamma.value();
	const PoissonTruncation window = poisson_window(gamma * t, opts);

	KrausEvolution out;
	out.tail_mass = window.tail_mass;
	out.k_lo = window.k_lo;
	out.k_hi = window.k_hi;
	if(t == 0.0)
	{
		out.rho = rho0;
		return out;
	}

	const Eigenframe frame = to_eigenframe(h, rho0);
	const Eigen::Index m = frame.rho.rows();

	// sum_k w_k v_k v_k^dag with (v_k)_i = exp(-i k lambda_i / gamma)
	Eigen::MatrixXcd weights = Eigen::MatrixXcd::Zero(m, m);
	Eigen::VectorXcd phases(m);
	for(std::int64_t k = window.k_lo; k <= window.k_hi; ++k)
	{
		const double kd = static_cast<double>(k);
		for(Eigen::Index i = 0; i < m; ++i)
		{
			phases(i) = std::polar(1.0, -(kd * frame.values(i)) / gamma);
		}
		const double w = window.weights[static_cast<std::size_t>(k - window.k_lo)];
		weights.selfadjointView<Eigen::Lower>().rankUpdate(phases, w);
	}
	const Eigen::MatrixXcd full_weights = weights.selfadjointView<Eigen::Lower>();

	out.rho = from_eigenframe(h, frame, frame.rho.cwiseProduct(full_weights));
	return out;
}

TruncatedDensityMatrix unitary_evolve(const BlockHamiltonian& h, const TruncatedDensityMatrix& rho0,
                                      double t)
{
	if(t == 0.0)
	{
		return rho0;
	}
	const Eigenframe frame = to_eigenframe(h, rho0);
	const Eigen::Index m = frame.rho.rows();
	Eigen::VectorXcd phases(m);
	for(Eigen::Index i = 0; i < m; ++i)
	{
		phases(i) = std::polar(1.0, -frame.values(i) * t);
	}
	const Eigen::MatrixXcd rotation = phases * phases.adjoint();
	return from_eigenframe(h, frame, frame.rho.cwiseProduct(rotation));
}

ObservablePoint observables_from_density(const TruncatedDensityMatrix& rho, double t,
                                         double rel_threshold)
{
	const FockBasis basis(rho.n_max);
	const auto occ = basis.occupations();
	const Eigen::MatrixXcd& m = rho.entries;

	RawMoments raw;
	for(Eigen::Index n = 0; n < basis.dim(); ++n)
	{
		const auto [na, nb] = occ[static_cast<std::size_t>(n)];
		const double pop = m(n, n).real();
		raw.n_a += pop * na;
		raw.n_b += pop * nb;
		raw.n2_a += pop * na * na;
		raw.n2_b += pop * nb * nb;

		// Tr(A rho) = sum_n <m(n)|A|n> rho(n, m(n)) for the ladder operators.
		if(na >= 1)
		{
			raw.a1 += std::sqrt(static_cast<double>(na)) * m(n, FockBasis::index(na - 1, nb));
		}
		if(na >= 2)
		{
			raw.a2 += std::sqrt(na * (na - 1.0)) * m(n, FockBasis::index(na - 2, nb));
		}
		if(nb >= 1)
		{
			raw.b1 += std::sqrt(static_cast<double>(nb)) * m(n, FockBasis::index(na, nb - 1));
		}
		if(nb >= 2)
		{
			raw.b2 += std::sqrt(nb * (nb - 1.0)) * m(n, FockBasis::index(na, nb - 2));
		}
	}
	return assemble_observables(t, raw, rel_threshold * (raw.n_a + raw.n_b));
}

DensityHygiene check_hygiene(const TruncatedDensityMatrix& rho)
{
	const Eigen::MatrixXcd& m = rho.entries;
	DensityHygiene out;
	out.trace = m.trace().real();
	out.hermiticity_drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
	const Eigen::MatrixXcd symmetric = 0.5 * (m + m.adjoint());
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetric, Eigen::EigenvaluesOnly);
	out.min_eigenvalue = solver.eigenvalues().minCoeff();
	return out;
}

double overlap(const TruncatedDensityMatrix& rho, const TruncatedDensityMatrix& sigma)
{
	return (rho.entries * sigma.entries).trace().real();
}

} // namespace atomlaser::fock
