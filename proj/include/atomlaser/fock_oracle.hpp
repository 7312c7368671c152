#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "atomlaser/analytic.hpp"
#include "atomlaser/params.hpp"
#include "atomlaser/poisson.hpp"

namespace atomlaser::fock
{

/// Two-mode Fock basis truncated at total excitation n_max, ordered by total
/// number N and then by j = n_b, i.e. |n_a = N - j, n_b = j>.
class FockBasis
{
public:
	explicit FockBasis(int n_max) : n_max_{n_max} {}

	[[nodiscard]] int n_max() const { return n_max_; }
	[[nodiscard]] Eigen::Index dim() const { return dim_for(n_max_); }
	[[nodiscard]] static Eigen::Index dim_for(int n_max)
	{
		return static_cast<Eigen::Index>(n_max + 1) * (n_max + 2) / 2;
	}
	[[nodiscard]] static Eigen::Index block_offset(int total)
	{
		return static_cast<Eigen::Index>(total) * (total + 1) / 2;
	}
	[[nodiscard]] static Eigen::Index index(int n_a, int n_b)
	{
		return block_offset(n_a + n_b) + n_b;
	}

	struct Occupation
	{
		int n_a;
		int n_b;
	};

	/// Occupations of every basis state, in basis order.
	[[nodiscard]] std::vector<Occupation> occupations() const;

private:
	int n_max_;
};

struct HamiltonianBlock
{
	int total = 0;                  ///< conserved excitation number N
	Eigen::MatrixXcd matrix;        ///< (N+1) x (N+1) restriction of H0
	Eigen::VectorXd eigenvalues;
	Eigen::MatrixXcd eigenvectors;  ///< columns are eigenvectors
};

/// Bogoliubov Hamiltonian H0 = omega (a^dag a + b^dag b)
/// + Omega' (e^{-i theta} a b^dag + e^{i theta} a^dag b), block-diagonal in
/// the total excitation number.
class BlockHamiltonian
{
public:
	BlockHamiltonian(int n_max, std::vector<HamiltonianBlock> blocks);

	[[nodiscard]] int n_max() const { return n_max_; }
	[[nodiscard]] const std::vector<HamiltonianBlock>& blocks() const { return blocks_; }

	/// Block-diagonal eigenvector matrix and eigenvalues over the full basis.
	[[nodiscard]] const Eigen::MatrixXcd& eigenvectors() const { return vectors_; }
	[[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return values_; }

private:
	int n_max_;
	std::vector<HamiltonianBlock> blocks_;
	Eigen::MatrixXcd vectors_;
	Eigen::VectorXd values_;
};

/// Throws TruncationTooLarge when the basis dimension exceeds dim_cap.
BlockHamiltonian build_hamiltonian(const ModelParams& p, int n_max, Eigen::Index dim_cap = 2000);

struct FockState
{
	int n_max = 0;
	Eigen::VectorXcd amplitudes;   ///< over the two-mode basis
	double truncation_budget = 0.0; ///< 1 - sum |c|^2
};

/// Squeezed vacuum in the optical mode, vacuum in the atomic mode, truncated
/// (not renormalized) at n_max photons. Amplitudes on even photon numbers
/// 2m are (e^{i phi} tanh r)^m sqrt((2m)!)/(2^m m!) / sqrt(cosh r), with the
/// overall sign fixed so that <a^2> = +e^{i phi} sinh r cosh r.
/// Throws NegativeSqueeze, InsufficientTruncation.
FockState squeezed_vacuum_fock(double r, double phi, int n_max, double budget_bound = 1e-10);

struct TruncatedDensityMatrix
{
	int n_max = 0;
	Eigen::MatrixXcd entries;

	[[nodiscard]] double trace_deficit() const { return 1.0 - entries.trace().real(); }
};

/// Smallest even n_max >= n_min whose squeezed-vacuum truncation budget is at
/// most budget_bound; returns -1 when n_cap is reached first.
int minimal_truncation(double r, double budget_bound, int n_min = 0, int n_cap = 200);

TruncatedDensityMatrix density_from_state(const FockState& state);

struct KrausEvolution
{
	TruncatedDensityMatrix rho;
	double tail_mass = 0.0;
	std::int64_t k_lo = 0;
	std::int64_t k_hi = 0;
};

/// rho(t) = sum_k w_k(gamma t) U^k rho0 U^-k with U = exp(-i H0/gamma),
/// every power applied through the spectral phases exp(-i k lambda/gamma).
/// Throws UnitaryLimitUnsupported, WindowOverflow.
KrausEvolution kraus_evolve(const BlockHamiltonian& h, const TruncatedDensityMatrix& rho0,
                            const ModelParams& p, double t, const TruncationOptions& opts = {});

/// rho(t) = exp(-i H0 t) rho0 exp(i H0 t).
TruncatedDensityMatrix unitary_evolve(const BlockHamiltonian& h, const TruncatedDensityMatrix& rho0,
                                      double t);

/// Trace formulas by direct ladder-operator application. The Mandel-Q
/// threshold is rel_threshold times the total excitation.
ObservablePoint observables_from_density(const TruncatedDensityMatrix& rho, double t = 0.0,
                                         double rel_threshold = 1e-12);

struct DensityHygiene
{
	double trace = 0.0;
	double hermiticity_drift = 0.0; ///< max |rho - rho^dag|
	double min_eigenvalue = 0.0;
};

DensityHygiene check_hygiene(const TruncatedDensityMatrix& rho);

/// Overlap Tr(rho sigma) of two density matrices on the same basis.
double overlap(const TruncatedDensityMatrix& rho, const TruncatedDensityMatrix& sigma);

} // namespace atomlaser::fock
