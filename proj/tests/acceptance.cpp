#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "atomlaser/analytic.hpp"
#include "atomlaser/fock_oracle.hpp"
#include "atomlaser/heisenberg_oracle.hpp"
#include "atomlaser/presets.hpp"
#include "atomlaser/scenario.hpp"
#include "atomlaser/verify.hpp"

using namespace atomlaser;

namespace
{

constexpr double pi = std::numbers::pi;

const std::vector<std::string> certified = {"N_a", "N_b", "var_a", "var_b", "S1_a", "S2_a", "S1_b", "S2_b"};

ModelParams make(double omega, double omega_prime, StepRate gamma, double r, double phi = 0.0,
                 double theta = 0.0)
{
	ModelParams p;
	p.omega = omega;
	p.omega_prime = omega_prime;
	p.gamma = gamma;
	p.r = r;
	p.phi = phi;
	p.theta = theta;
	return validate_params(p);
}

ModelParams make(double omega, double omega_prime, double gamma, double r)
{
	return make(omega, omega_prime, StepRate::finite(gamma), r);
}

std::string fmt(const char* f, double a)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, f, a);
	return buf;
}

std::vector<double> merged(std::initializer_list<TimeGrid> grids)
{
	std::vector<double> out;
	for(const auto& g : grids)
	{
		const auto t = g.times();
		out.insert(out.end(), t.begin(), t.end());
	}
	std::sort(out.begin(), out.end());
	return out;
}

struct Ledger
{
	int passed = 0;
	int failed = 0;

	void line(int id, bool ok, const std::string& name, const std::string& detail)
	{
		std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
		std::fflush(stdout);
		(ok ? passed : failed) += 1;
	}

	static void info(const std::string& text)
	{
		std::printf("          %s\n", text.c_str());
		std::fflush(stdout);
	}
};

struct HygieneTally
{
	double min_trace = 1.0;
	double max_trace = 1.0;
	double max_drift = 0.0;
	double min_eigenvalue = 0.0;
	int evolutions = 0;

	void add(const fock::DensityHygiene& h)
	{
		min_trace = std::min(min_trace, h.trace);
		max_trace = std::max(max_trace, h.trace);
		max_drift = std::max(max_drift, h.hermiticity_drift);
		min_eigenvalue = std::min(min_eigenvalue, h.min_eigenvalue);
		++evolutions;
	}

	[[nodiscard]] bool ok() const
	{
		return evolutions > 0 && min_trace >= 1.0 - 1e-9 && max_trace <= 1.0 + 1e-12 && max_drift <= 1e-12
		       && min_eigenvalue >= -1e-10;
	}
};

double max_over(const scan::OracleReport& o, const std::vector<std::string>& names)
{
	double out = 0.0;
	for(const auto& n : names)
	{
		if(const auto* d = o.find(n))
		{
			out = std::max(out, d->max_abs);
		}
	}
	return out;
}

// Fock evolution at selected times for the hygiene record and a spot check of S2_b.
double fock_spot_check(const ModelParams& p, const std::vector<double>& times, HygieneTally& tally)
{
	const int n_max = 24;
	const auto h = fock::build_hamiltonian(p, n_max);
	const auto rho0 = fock::density_from_state(fock::squeezed_vacuum_fock(p.r, p.phi, n_max));
	double worst = 0.0;
	for(double t : times)
	{
		const auto evo = fock::kraus_evolve(h, rho0, p, t);
		tally.add(fock::check_hygiene(evo.rho));
		const auto f = fock::observables_from_density(evo.rho, t);
		worst = std::max(worst, std::abs(f.s2_b - squeezing_exact(p, t).s2_b));
	}
	return worst;
}

void criterion_1(Ledger& ledger, HygieneTally& tally)
{
	struct Case
	{
		const char* name;
		ModelParams p;
		bool fock;
	};
	const std::vector<Case> cases = {
	    {"fig1/2 gamma=100", make(1.0, 1.0, 100.0, 2.0), false},
	    {"fig3 gamma=100", make(0.1, pi, 100.0, 0.3), true},
	    {"fig3 gamma=1000", make(0.1, pi, 1000.0, 0.3), true},
	    {"fig4 gamma=100", make(10.0, 10.0, 100.0, 0.3), true},
	};
	const auto start = std::chrono::steady_clock::now();
	double worst_h = 0.0;
	double worst_f = 0.0;
	bool ran_all = true;
	for(const auto& c : cases)
	{
		scan::VerifyConfig cfg;
		cfg.params = c.p;
		cfg.grid = {0.0, 10.0, 50, Spacing::Linear};
		cfg.fock = c.fock;
		cfg.n_max = 24;
		cfg.truncation.target_tail = 1e-14;
		const auto rep = scan::run_verify(cfg);
		const auto* h = rep.find("heisenberg");
		ran_all = ran_all && h && h->ran;
		const double dh = h ? max_over(*h, certified) : INFINITY;
		worst_h = std::max(worst_h, dh);
		std::string detail = std::string(c.name) + ": heisenberg " + fmt("%.2e", dh);
		if(c.fock)
		{
			const auto* f = rep.find("fock");
			ran_all = ran_all && f && f->ran;
			const double df = f ? max_over(*f, certified) : INFINITY;
			worst_f = std::max(worst_f, df);
			detail += ", fock " + fmt("%.2e", df) + " (" + f->note + ")";
			if(f->worst_hygiene)
			{
				tally.add(*f->worst_hygiene);
				tally.evolutions += cfg.grid.count - 1;
			}
		}
		Ledger::info(detail);
	}
	const double seconds =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	ledger.line(1, ran_all && worst_h <= 1e-10 && worst_f <= 1e-8, "three-way equivalence",
	            "max |analytic - heisenberg| " + fmt("%.2e", worst_h) + " (<= 1e-10), max |analytic - fock| "
	                + fmt("%.2e", worst_f) + " (<= 1e-8), " + fmt("%.1f", seconds) + " s");
}

void criterion_2(Ledger& ledger, HygieneTally& tally)
{
	const auto p = make(0.1, pi, 100.0, 0.3);
	const double target = std::sinh(0.3) * std::sinh(0.3);
	const auto times = merged({{200.0, 2000.0, 3601, Spacing::Linear}, {200.0, 1e7, 2000, Spacing::Logarithmic}});
	double worst = 0.0;
	double worst_t = 0.0;
	double settled_after = 200.0;
	for(double t : times)
	{
		const double d = std::abs(squeezing_exact(p, t).s2_b - target);
		if(d > worst)
		{
			worst = d;
			worst_t = t;
		}
		if(d > 1e-3)
		{
			settled_after = t;
		}
	}
	const double fock_gap = fock_spot_check(p, {200.0, 210.0, 500.0}, tally);
	double heisenberg_gap = 0.0;
	for(double t : {200.0, worst_t, 210.0, 500.0})
	{
		heisenberg_gap = std::max(heisenberg_gap, std::abs(heisenberg::poisson_observables(p, t).point.s2_b
		                                                   - squeezing_exact(p, t).s2_b));
	}
	ledger.line(2, worst <= 1e-3, "fig3 stationary S2_b for t >= 200",
	            "max |S2_b - sinh^2 0.3| = " + fmt("%.3e", worst) + " at t = " + fmt("%.6g", worst_t)
	                + " (tolerance 1e-3)");
	Ledger::info("|E(-2 omega, 200)| = " + fmt("%.5f", std::abs(envelope(-0.2, p, 200.0)))
	             + ", decay rate 2 gamma sin^2(omega/gamma) = " + fmt("%.3e", 2.0 * 100.0 * std::pow(std::sin(1e-3), 2)));
	Ledger::info("within 1e-3 of sinh^2 0.3 for all sampled t > " + fmt("%.6g", settled_after));
	Ledger::info("oracles agree with the closed form at t = 200, 210, 500: fock " + fmt("%.2e", fock_gap)
	             + ", heisenberg " + fmt("%.2e", heisenberg_gap) + " (also at the worst t)");
}

void criterion_3(Ledger& ledger, HygieneTally& tally)
{
	const auto p = make(10.0, 10.0, 100.0, 0.3);
	const double quoted = -0.066433;
	const auto times = merged({{10.0, 100.0, 1801, Spacing::Linear}, {10.0, 1e7, 2000, Spacing::Logarithmic}});
	double worst = 0.0;
	double largest = -INFINITY;
	for(double t : times)
	{
		const double s = squeezing_exact(p, t).s2_b;
		worst = std::max(worst, std::abs(s - quoted));
		largest = std::max(largest, s);
	}
	const double fock_gap = fock_spot_check(p, {10.0, 20.0, 50.0}, tally);
	ledger.line(3, largest < 0.0 && worst <= 1e-3, "fig4 stationary squeezing for t >= 10",
	            "max S2_b = " + fmt("%.6f", largest) + ", max |S2_b + 0.066433| = " + fmt("%.3e", worst)
	                + " (tolerance 1e-3); fock spot check " + fmt("%.1e", fock_gap));
}

void criterion_4(Ledger& ledger)
{
	std::vector<bool> flags;
	std::string detail;
	for(int i = 1; i <= 10; ++i)
	{
		const double r = 0.1 * i;
		const bool f = stationary_values(make(10.0, 10.0, 100.0, r)).squeezed_at_infinity;
		flags.push_back(f);
		detail += (f ? "1" : "0");
	}
	int flips = 0;
	int flip_at = -1;
	for(std::size_t i = 1; i < flags.size(); ++i)
	{
		if(flags[i] != flags[i - 1])
		{
			++flips;
			flip_at = static_cast<int>(i);
		}
	}
	const double boundary = std::atanh(0.5);
	const bool ok = flags[2] && !flags[5] && flips == 1 && 0.1 * flip_at < boundary
	                && boundary < 0.1 * (flip_at + 1);
	ledger.line(4, ok, "squeezing condition boundary",
	            "flags for r = 0.1..1.0: " + detail + ", single flip between r = " + fmt("%.1f", 0.1 * flip_at)
	                + " and " + fmt("%.1f", 0.1 * (flip_at + 1)) + ", atanh(1/2) = " + fmt("%.4f", boundary));
}

void criterion_5(Ledger& ledger)
{
	double worst = 0.0;
	for(double r : {0.3, 1.0, 2.0})
	{
		for(const StepRate g : {StepRate::finite(100.0), StepRate::unitary_limit()})
		{
			const auto o = observables(make(0.1, pi, g, r), 0.0);
			const double s = std::sinh(r);
			const double c = std::cosh(r);
			const double gaps[] = {o.n_a - s * s,
			                       o.n_b,
			                       o.var_a - 2.0 * s * s * c * c,
			                       o.q_a.value_or(INFINITY) - std::cosh(2.0 * r),
			                       o.s2_a - (std::exp(-2.0 * r) - 1.0),
			                       o.s1_b,
			                       o.s2_b};
			for(double d : gaps)
			{
				worst = std::max(worst, std::abs(d));
			}
		}
	}
	ledger.line(5, worst <= 1e-12, "t = 0 exact values", "max deviation " + fmt("%.2e", worst) + " (<= 1e-12)");
}

void criterion_6(Ledger& ledger)
{
	std::mt19937_64 rng(20240601);
	std::uniform_real_distribution<double> freq(0.0, 20.0);
	std::uniform_real_distribution<double> lg(0.0, 5.0);
	std::uniform_real_distribution<double> rr(0.0, 2.5);
	std::uniform_real_distribution<double> ang(-pi, pi);
	std::uniform_real_distribution<double> tt(0.0, 100.0);

	int violations = 0;
	double worst_rel = 0.0;
	const int samples = 10000;
	for(int i = 0; i < samples; ++i)
	{
		const StepRate g = i % 10 == 0 ? StepRate::unitary_limit() : StepRate::finite(std::pow(10.0, lg(rng)));
		const auto p = make(freq(rng), freq(rng), g, rr(rng), ang(rng), ang(rng));
		const double t = tt(rng);
		const auto o = observables(p, t);
		const double s2 = std::sinh(p.r) * std::sinh(p.r);
		const double c2 = std::cosh(p.r) * std::cosh(p.r);
		const double scale_n = std::max(1.0, 4.0 * s2);
		const double scale_v = std::max({o.var_a, o.var_b, 2.0 * s2 * c2, 1.0});
		const double rel[] = {std::abs(o.n_a + o.n_b - s2) / scale_n,
		                      std::abs(o.s1_a + o.s2_a - 4.0 * o.n_a) / scale_n,
		                      std::abs(o.s1_b + o.s2_b - 4.0 * o.n_b) / scale_n,
		                      std::abs((o.var_a - o.var_b) - 2.0 * c2 * (o.n_a - o.n_b)) / scale_v};
		bool ok = true;
		for(double d : rel)
		{
			worst_rel = std::max(worst_rel, d);
			ok = ok && d <= 1e-10;
		}
		ok = ok && (1.0 + o.s1_a) * (1.0 + o.s2_a) >= 1.0 - 1e-10;
		ok = ok && (1.0 + o.s1_b) * (1.0 + o.s2_b) >= 1.0 - 1e-10;
		ok = ok && std::min({o.s1_a, o.s2_a, o.s1_b, o.s2_b}) >= -1.0;
		ok = ok && o.var_a >= 0.0 && o.var_b >= 0.0;
		violations += ok ? 0 : 1;
	}
	ledger.line(6, violations == 0, "identity suite",
	            std::to_string(samples) + " random samples, " + std::to_string(violations)
	                + " violations, worst relative identity residual " + fmt("%.2e", worst_rel));
}

void criterion_7(Ledger& ledger)
{
	double worst = 0.0;
	const auto times = TimeGrid{0.0, 20.0, 2001, Spacing::Linear}.times();
	for(double r : {0.3, 1.0, 2.0})
	{
		const auto p = make(0.1, pi, StepRate::unitary_limit(), r);
		for(double t : times)
		{
			const double c = std::cos(p.omega_prime * t);
			worst = std::max(worst, std::abs(mean_numbers(p, t).n_a - std::sinh(r) * std::sinh(r) * c * c));
		}
	}

	scan::VerifyConfig cfg;
	cfg.params = make(0.1, pi, StepRate::unitary_limit(), 0.3);
	cfg.grid = {0.0, 10.0, 50, Spacing::Linear};
	cfg.heisenberg = false;
	cfg.n_max = 24;
	const auto rep = scan::run_verify(cfg);
	const auto* f = rep.find("fock");
	const double df = f && f->ran ? max_over(*f, certified) : INFINITY;
	ledger.line(7, worst <= 1e-12 && df <= 1e-8, "unitary limit",
	            "max |n_a - sinh^2 r cos^2(Omega' t)| " + fmt("%.2e", worst) + " (<= 1e-12), fock unitary_evolve "
	                + fmt("%.2e", df) + " (<= 1e-8)");
}

double large_gamma_gap(double gamma)
{
	const auto p = make(0.1, pi, gamma, 0.3);
	double worst = 0.0;
	for(double t : TimeGrid{0.0, 10.0, 2001, Spacing::Linear}.times())
	{
		const auto e = squeezing_exact(p, t);
		const auto a = squeezing_large_gamma(p, t).s;
		worst = std::max({worst, std::abs(e.s1_a - a.s1_a), std::abs(e.s2_a - a.s2_a), std::abs(e.s1_b - a.s1_b),
		                  std::abs(e.s2_b - a.s2_b)});
	}
	return worst;
}

void criterion_8(Ledger& ledger)
{
	const double g4 = large_gamma_gap(1e4);
	const double g5 = large_gamma_gap(1e5);
	const double ratio = g4 / g5;
	ledger.line(8, g4 <= 5e-3 && ratio >= 8.0, "large-gamma approximation",
	            "max gap " + fmt("%.3e", g4) + " at gamma=1e4 (<= 5e-3), " + fmt("%.3e", g5) + " at gamma=1e5, ratio "
	                + fmt("%.2f", ratio) + " (>= 8)");
}

void criterion_9(Ledger& ledger)
{
	const auto preset = scan::figure_preset("fig5");
	const auto& curves = preset.curves;
	double settle = 0.0;
	for(double t : TimeGrid{10.0, 1e8, 2000, Spacing::Logarithmic}.times())
	{
		settle = std::max(settle, std::abs(squeezing_exact(curves[0].params, t).s2_b - -0.053311));
	}
	const double delta = curves[1].params.omega_prime - curves[1].params.omega;
	const double node = pi / (2.0 * 1e-7);
	const double at_node = squeezing_exact(curves[1].params, node).s2_b;
	double spread = 0.0;
	for(double t : merged({{0.0, 1e3, 4001, Spacing::Linear}, {1e-3, 1e3, 2000, Spacing::Logarithmic}}))
	{
		const double base = squeezing_exact(curves[0].params, t).s2_b;
		for(std::size_t i = 1; i < curves.size(); ++i)
		{
			spread = std::max(spread, std::abs(squeezing_exact(curves[i].params, t).s2_b - base));
		}
	}
	const bool ok = settle <= 1e-3 && std::abs(at_node - 0.390745) <= 1e-3 && spread < 1e-4;
	ledger.line(9, ok, "fig5 sensitivity",
	            "delta=0 settles within " + fmt("%.2e", settle) + " of -0.053311; delta=" + fmt("%.3g", delta)
	                + " at t=pi/(2 delta) gives " + fmt("%.6f", at_node) + " (target 0.390745); max |delta S2_b| for t <= 1e3 "
	                + fmt("%.2e", spread) + " (< 1e-4)");
}

void criterion_10(Ledger& ledger)
{
	const auto s = scan::scenario_summary();
	const bool ok = s.freeze_consistent && s.angular.freeze_time_s >= 80e-6 && s.angular.freeze_time_s <= 120e-6
	                && s.destruction_discrepancy;
	ledger.line(10, ok, "experimental scenario",
	            "freeze time " + fmt("%.4g", s.angular.freeze_time_s * 1e6) + " us (angular, in [80, 120]), "
	                + fmt("%.4g", s.ordinary.freeze_time_s * 1e6) + " us (ordinary); squeezing destruction "
	                + fmt("%.4g", s.angular.destruction_time_s) + " s (angular), "
	                + fmt("%.4g", s.ordinary.destruction_time_s) + " s (ordinary) vs quoted 0.15 s: "
	                + (s.destruction_discrepancy ? "discrepancy flagged" : "not flagged"));
}

void criterion_11(Ledger& ledger, const HygieneTally& tally)
{
	ledger.line(11, tally.ok(), "density-matrix hygiene",
	            std::to_string(tally.evolutions) + " evolutions: trace in [" + fmt("%.15f", tally.min_trace) + ", "
	                + fmt("%.15f", tally.max_trace) + "], max drift " + fmt("%.2e", tally.max_drift)
	                + ", min eigenvalue " + fmt("%.2e", tally.min_eigenvalue));
}

} // namespace

int main()
{
	Ledger ledger;
	HygieneTally tally;
	criterion_1(ledger, tally);
	criterion_2(ledger, tally);
	criterion_3(ledger, tally);
	criterion_4(ledger);
	criterion_5(ledger);
	criterion_6(ledger);
	criterion_7(ledger);
	criterion_8(ledger);
	criterion_9(ledger);
	criterion_10(ledger);
	criterion_11(ledger, tally);
	std::printf("acceptance: %d passed, %d failed\n", ledger.passed, ledger.failed);
	return ledger.failed == 0 ? 0 : 1;
}
