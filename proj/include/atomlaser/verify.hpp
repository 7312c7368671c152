#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atomlaser/fock_oracle.hpp"
#include "atomlaser/params.hpp"
#include "atomlaser/poisson.hpp"

namespace atomlaser::scan
{

struct VerifyConfig
{
	ModelParams params;
	TimeGrid grid{0.0, 10.0, 50, Spacing::Linear};
	bool heisenberg = true;
	bool fock = true;
	double tol_heisenberg = 1e-10;
	double tol_fock = 1e-8;
	int n_max = 24;          ///< lower bound, grown until the truncation budget is met
	double fock_budget = 1e-13;
	double fock_max_r = 0.5; ///< larger squeezing needs impractical n_max
	TruncationOptions truncation;
};

struct Discrepancy
{
	std::string observable;
	double max_abs = 0.0;
	double max_rel = 0.0;
	double worst_t = 0.0;
};

struct OracleReport
{
	std::string name;
	bool ran = false;
	std::string note;
	double tolerance = 0.0;
	std::vector<Discrepancy> rows;
	double max_tail_mass = 0.0;
	double truncation_budget = 0.0;
	std::optional<fock::DensityHygiene> worst_hygiene; ///< min trace, max drift, min eigenvalue
	double seconds = 0.0;
	bool pass = false;

	[[nodiscard]] double max_abs() const;
	[[nodiscard]] const Discrepancy* find(const std::string& observable) const;
};

struct VerifyReport
{
	ModelParams params;
	TimeGrid grid;
	double analytic_seconds = 0.0;
	std::vector<OracleReport> oracles;
	std::vector<std::string> warnings;
	/// True iff at least one oracle ran and every oracle that ran passed.
	bool pass = false;

	[[nodiscard]] const OracleReport* find(const std::string& name) const;
};

/// Certifies the closed forms against the Heisenberg-picture Poisson sum and
/// the Fock-space Kraus evolution on a time grid. The unitary limit is only
/// checked by the Fock path (plain unitary evolution).
VerifyReport run_verify(const VerifyConfig& config);

std::string format_report(const VerifyReport& report);

} // namespace atomlaser::scan
