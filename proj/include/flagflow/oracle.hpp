#pragma once

/*
  Verification harness.

  Polynomial and rational-function identities are checked by exact
  evaluation at more points than their degree; nothing here uses a
  tolerance except the finite-difference check, which is advisory and
  reported separately from the exact checks.
*/

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flagflow/dimcount.hpp"
#include "flagflow/divisor_invariants.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/json_io.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace flagflow::oracle {

struct CheckOutcome {
	bool pass = true;
	/// Serialized failing instance; null when the check passed.
	json counterexample;

	void fail(json ce)
	{
		if (pass)
			counterexample = std::move(ce);
		pass = false;
	}
};

/// n + 2 distinct points k T / (n + 2), k = 0..n+1, all in [0, T).
inline std::vector<Rational> identity_points(const FlowSolution& fs)
{
	const long m = static_cast<long>(fs.dimension()) + 2;
	std::vector<Rational> pts;
	for (long k = 0; k < m; ++k)
		pts.push_back(fs.singular_time * Rational(k, m));
	return pts;
}

/// R(t) Q(t) + Q'(t) == 0 with Q(t) = prod_beta P_beta(t), at n + 2 points.
inline CheckOutcome check_scalar_volume_identity(const FlowSolution& fs)
{
	CheckOutcome out;
	for (const auto& t : identity_points(fs))
	{
		Rational q = 1;
		Rational dq = 0;
		for (std::size_t i = 0; i < fs.terms.size(); ++i)
		{
			q *= fs.terms[i].at(t);
			Rational partial = fs.terms[i].slope;
			for (std::size_t j = 0; j < fs.terms.size(); ++j)
				if (j != i)
					partial *= fs.terms[j].at(t);
			dq += partial;
		}
		const Rational r = scalar_curvature(fs, t);
		const Rational residual = r * q + dq;
		if (residual != 0)
		{
			json ce = instance_json(fs);
			ce["check"] = "scalar_volume_identity";
			ce["t"] = to_json(t);
			ce["R"] = to_json(r);
			ce["Q"] = to_json(q);
			ce["dQ"] = to_json(dq);
			ce["residual"] = to_json(residual);
			out.fail(std::move(ce));
			break;
		}
	}
	return out;
}

struct RicciIdentityOutcome {
	CheckOutcome exact;
	CheckOutcome finite_difference;

	bool pass() const { return exact.pass && finite_difference.pass; }
};

/**
 * dR/dt == |Ric|^2. The exact side differentiates sum a_beta / P_beta term by
 * term and compares with the engine at n + 2 points. The floating side
 * compares a central difference of R with |Ric|^2 at five interior times.
 */
inline RicciIdentityOutcome check_ricci_identity(const FlowSolution& fs, double fd_step = 1e-6, double fd_tol = 1e-6)
{
	RicciIdentityOutcome out;
	for (const auto& t : identity_points(fs))
	{
		Rational derivative = 0;
		for (const auto& term : fs.terms)
		{
			Rational p = term.at(t);
			derivative -= term.weight * term.slope / (p * p);
		}
		const Rational ric = ricci_norm_sq(fs, t);
		if (derivative != ric)
		{
			json ce = instance_json(fs);
			ce["check"] = "ricci_identity_exact";
			ce["t"] = to_json(t);
			ce["dR_dt"] = to_json(derivative);
			ce["ricci_norm_sq"] = to_json(ric);
			out.exact.fail(std::move(ce));
			break;
		}
	}

	std::vector<double> c, s, w;
	for (const auto& term : fs.terms)
	{
		c.push_back(to_double(term.constant));
		s.push_back(to_double(term.slope));
		w.push_back(to_double(term.weight));
	}
	auto scalar_at = [&](double t) {
		double r = 0;
		for (std::size_t i = 0; i < c.size(); ++i)
			r += w[i] / (c[i] + s[i] * t);
		return r;
	};
	for (int k = 1; k <= 5; ++k)
	{
		const Rational t = fs.singular_time * Rational(k, 6);
		const double td = to_double(t);
		const double lo = std::max(0.0, td - fd_step);
		const double hi = td + fd_step;
		const double fd = (scalar_at(hi) - scalar_at(lo)) / (hi - lo);
		const double exact = to_double(ricci_norm_sq(fs, t));
		const double rel = std::abs(fd - exact) / std::abs(exact);
		if (!(rel <= fd_tol))
		{
			json ce = instance_json(fs);
			ce["check"] = "ricci_identity_finite_difference";
			ce["t"] = to_json(t);
			ce["finite_difference"] = fd;
			ce["ricci_norm_sq"] = exact;
			ce["relative_error"] = rel;
			out.finite_difference.fail(std::move(ce));
			break;
		}
	}
	return out;
}

struct NefSearch {
	/// Smallest p/q found on the grid, if any.
	std::optional<Rational> value;
	/// Some coefficient of p D + q K is exactly zero, so nothing smaller is nef.
	bool certified = false;

	bool inconclusive() const { return !certified; }
};

/**
 * Grid search for the nef value: the least p/q (1 <= q <= max_q,
 * 0 <= p <= max_q * max ell) such that every coefficient of p D + q K is
 * non-negative. The answer is only reported as certified when one
 * coefficient vanishes; otherwise the search is inconclusive.
 */
inline NefSearch brute_nef(const ParabolicFlag& flag, const DivisorClass& d, int max_q = 64)
{
	require_divisor_shape(flag, d);
	if (!d.is_ample())
		throw DomainError("divisor is not ample");

	// Clear denominators: p * num_a / den >= q * ell_a  <=>  p * num_a >= q * ell_a * den.
	Integer den = 1;
	for (const auto& x : d.coeffs)
		den = boost::multiprecision::lcm(den, Integer(denominator(x)));
	std::vector<Integer> num, ell;
	Integer max_ell = 0;
	for (std::size_t a = 0; a < d.coeffs.size(); ++a)
	{
		num.push_back(numerator(Rational(d.coeffs[a] * den)));
		ell.push_back(numerator(flag.fano_coeffs[a]) * den);
		max_ell = std::max(max_ell, Integer(numerator(flag.fano_coeffs[a])));
	}
	const Integer max_p = max_ell * max_q;

	NefSearch out;
	for (int q = 1; q <= max_q; ++q)
	{
		for (Integer p = 0; p <= max_p; ++p)
		{
			if (out.value && Rational(p, q) >= *out.value)
				break;
			bool nef = true;
			for (std::size_t a = 0; a < num.size() && nef; ++a)
				nef = p * num[a] >= q * ell[a];
			if (nef)
			{
				out.value = Rational(p, q);
				break;
			}
		}
	}
	if (out.value)
	{
		const Rational best = *out.value;
		for (std::size_t a = 0; a < d.coeffs.size(); ++a)
			if (best * d.coeffs[a] == flag.fano_coeffs[a])
				out.certified = true;
	}
	return out;
}

struct SuiteConfig {
	std::vector<SimpleLieType> types = default_types();
	/// Bound for random numerators and denominators of class coefficients.
	int max_coeff = 10;
	/// Sampled times per instance for the bound chains.
	int samples_per_instance = 10;
	/// Random initial classes drawn for every (type, theta).
	int classes_per_flag = 4;
	std::uint64_t seed = 20240521;
	double fd_step = 1e-6;
	double fd_tol = 1e-6;
	int nef_max_q = 64;
	std::uint64_t gt_budget = gt_budget_from_env();

	static std::vector<SimpleLieType> default_types()
	{
		using F = LieFamily;
		return {{F::A, 1}, {F::A, 2}, {F::A, 3}, {F::A, 4}, {F::B, 2}, {F::B, 3}, {F::C, 3}, {F::D, 4}, {F::G, 2}};
	}

	void validate() const
	{
		if (samples_per_instance < 2)
			throw InvalidInput("samples_per_instance must be >= 2");
		if (!(fd_step > 0))
			throw InvalidInput("fd_step must be positive");
		if (max_coeff < 1)
			throw InvalidInput("max_coeff must be >= 1");
		if (classes_per_flag < 1)
			throw InvalidInput("classes_per_flag must be >= 1");
		for (const auto& t : types)
			t.validate();
	}
};

struct CheckTally {
	bool exact = true;
	std::uint64_t passed = 0;
	std::uint64_t failed = 0;
	json counterexample;

	void record(const CheckOutcome& o)
	{
		if (o.pass)
			++passed;
		else
		{
			if (failed == 0)
				counterexample = o.counterexample;
			++failed;
		}
	}
	bool ok() const { return failed == 0; }
};

struct SuiteReport {
	std::map<std::string, CheckTally> checks;
	std::uint64_t instances = 0;
	double wall_seconds = 0;

	bool exact_ok() const
	{
		for (const auto& [name, c] : checks)
			if (c.exact && !c.ok())
				return false;
		return true;
	}
	bool floating_ok() const
	{
		for (const auto& [name, c] : checks)
			if (!c.exact && !c.ok())
				return false;
		return true;
	}
	const CheckTally& at(const std::string& name) const { return checks.at(name); }

	json to_json() const
	{
		json j{{"instances", instances}, {"wall_seconds", wall_seconds}, {"exact_ok", exact_ok()},
		       {"floating_ok", floating_ok()}};
		json c = json::object();
		for (const auto& [name, t] : checks)
		{
			json e{{"exact", t.exact}, {"passed", t.passed}, {"failed", t.failed}};
			if (!t.ok())
				e["counterexample"] = t.counterexample;
			c[name] = e;
		}
		j["checks"] = c;
		return j;
	}
};

namespace detail {

inline std::vector<std::vector<int>> proper_subsets(int rank)
{
	std::vector<std::vector<int>> out;
	for (unsigned mask = 0; mask + 1 < (1u << rank); ++mask)
	{
		std::vector<int> theta;
		for (int i = 0; i < rank; ++i)
			if (mask & (1u << i))
				theta.push_back(i + 1);
		out.push_back(theta);
	}
	return out;
}

inline CheckOutcome expect(bool ok, const json& instance, const std::string& what)
{
	CheckOutcome o;
	if (!ok)
	{
		json ce = instance;
		ce["check"] = what;
		o.fail(std::move(ce));
	}
	return o;
}

/// Bound chains, KE saturation, volume sandwich, monotonicity and lambda_1 ordering on a time grid.
inline void check_bounds_on_grid(const FlowSolution& fs, int samples, SuiteReport& rep)
{
	const bool ke = is_kahler_einstein(fs);
	const Rational n = static_cast<long>(fs.dimension());
	CheckOutcome scalar, ricci, vol, mono, lambda, ke_sat;
	std::optional<Rational> prev;
	for (int k = 0; k < samples; ++k)
	{
		const Rational t = fs.singular_time * Rational(k, samples);
		const auto b = bounds_report(fs, t);
		json at = instance_json(fs);
		at["t"] = to_json(t);
		at["R"] = to_json(b.scalar);
		if (scalar.pass && !b.scalar_ok)
			scalar = expect(false, at, "scalar_bound_chain");
		if (ricci.pass && !b.ricci_ok)
			ricci = expect(false, at, "ricci_bound_chain");
		if (vol.pass && !b.volume_ok)
			vol = expect(false, at, "volume_sandwich");
		if (mono.pass && prev && !(b.scalar > *prev))
			mono = expect(false, at, "scalar_monotone");
		prev = b.scalar;
		if (ke && ke_sat.pass && (!b.scalar_saturates_upper || b.scalar * (fs.singular_time - t) != n))
			ke_sat = expect(false, at, "ke_closure");
		const auto lam = lambda1_bounds(fs, t);
		if (lambda.pass && !(lam.lower <= lam.upper))
			lambda = expect(false, at, "lambda1_ordering");
	}
	rep.checks["scalar_bound_chain"].record(scalar);
	rep.checks["ricci_bound_chain"].record(ricci);
	rep.checks["volume_sandwich"].record(vol);
	rep.checks["scalar_monotone"].record(mono);
	rep.checks["lambda1_ordering"].record(lambda);
	if (ke)
		rep.checks["ke_closure"].record(ke_sat);

	const Rational vt = volume(fs, fs.singular_time).coeff;
	rep.checks["volume_vanishes_at_T"].record(expect(vt == 0, instance_json(fs), "volume_vanishes_at_T"));
}

inline void check_divisor(const ParabolicFlag& flag, const DivisorClass& d, int max_q, SuiteReport& rep)
{
	json inst = flag_key(flag);
	inst["divisor"] = to_json(d.coeffs);

	const Rational tau = nef_value(flag, d);
	const auto brute = brute_nef(flag, d, max_q);
	json ce = inst;
	ce["tau"] = to_json(tau);
	ce["brute"] = brute.value ? to_json(*brute.value) : json("inconclusive");
	rep.checks["nef_brute_force"].record(expect(brute.certified && *brute.value == tau, ce, "nef_brute_force"));

	const auto fs = flow_of_divisor(flag, d);
	rep.checks["divisor_flow_consistency"].record(
	    expect(fs.singular_time == 1 / tau && ricci_lower_constant(fs) == ricci_constant(flag, d), inst,
	           "divisor_flow_consistency"));

	const Rational deg = degree(flag, d);
	bool scale_ok = true;
	for (int k : {2, 3})
	{
		const DivisorClass kd = Rational(k) * d;
		Rational kn = 1;
		for (std::size_t i = 0; i < flag.dimension(); ++i)
			kn *= k;
		scale_ok = scale_ok && nef_value(flag, kd) == tau / k && 1 / nef_value(flag, kd) == k / tau &&
		           ricci_constant(flag, kd) == k * ricci_constant(flag, d) && degree(flag, kd) == kn * deg;
	}
	rep.checks["scale_laws"].record(expect(scale_ok, inst, "scale_laws"));

	const auto inv = invariants_of(flag, d);
	rep.checks["lambda1_ordering_divisor"].record(
	    expect(*inv.lambda1_lower <= *inv.lambda1_upper, inst, "lambda1_ordering_divisor"));
}

inline void check_flag_data(const ParabolicFlag& flag, SuiteReport& rep)
{
	bool ok = -char_of_divisor(flag, canonical_divisor(flag)) == flag.delta_p;
	for (const auto& ell : flag.fano_coeffs)
		ok = ok && ell >= 2 && is_integer(ell);
	std::vector<std::size_t> theta(flag.theta.begin(), flag.theta.end());
	std::size_t levi_roots = theta.empty() ? 0 : sub_root_system(flag.root_system, theta).num_positive_roots();
	ok = ok && flag.dimension() + levi_roots == flag.root_system.num_positive_roots();
	rep.checks["flag_data"].record(expect(ok, flag_key(flag), "flag_data"));
}

inline void check_weyl_vs_gt(const RootSystem& rs, std::uint64_t budget, SuiteReport& rep)
{
	const int l = static_cast<int>(rs.rank());
	std::vector<int> coords(static_cast<std::size_t>(l), 0);
	CheckOutcome o;
	while (true)
	{
		std::vector<Rational> c(coords.begin(), coords.end());
		DominantWeight lambda(Weight{c});
		const Integer w = weyl_dim(rs, lambda);
		const Integer g = gt_count(rs, lambda, budget);
		if (w != g)
		{
			json ce{{"type", type_name(rs)}, {"weight", coords}, {"weyl", w.str()}, {"gt", g.str()}};
			o = expect(false, ce, "weyl_vs_gt");
			break;
		}
		std::size_t i = 0;
		while (i < coords.size() && coords[i] == 3)
			coords[i++] = 0;
		if (i == coords.size())
			break;
		++coords[i];
	}
	rep.checks["weyl_vs_gt"].record(o);
}

} // namespace detail

/// Deterministic given cfg (including the seed).
inline SuiteReport run_suite(const SuiteConfig& cfg)
{
	cfg.validate();
	const auto start = std::chrono::steady_clock::now();
	SuiteReport rep;
	rep.checks["ricci_identity_finite_difference"].exact = false;

	std::mt19937_64 rng(cfg.seed);
	std::uniform_int_distribution<int> coeff(1, cfg.max_coeff);
	auto random_rational = [&] {
		int num = coeff(rng);
		int den = coeff(rng);
		return Rational(num, den);
	};

	for (const auto& type : cfg.types)
	{
		const RootSystem rs = build_root_system(type);
		if (type.family == LieFamily::A && type.rank <= 3)
			detail::check_weyl_vs_gt(rs, cfg.gt_budget, rep);

		for (const auto& theta : detail::proper_subsets(type.rank))
		{
			const ParabolicFlag flag = build_flag(rs, theta);
			detail::check_flag_data(flag, rep);

			// Kahler-Einstein direction b = s * ell.
			{
				const Rational s = random_rational();
				KahlerClass b;
				for (const auto& ell : flag.fano_coeffs)
					b.b.push_back(s * ell);
				detail::check_bounds_on_grid(make_flow(flag, b), cfg.samples_per_instance, rep);
			}

			for (int c = 0; c < cfg.classes_per_flag; ++c)
			{
				KahlerClass b;
				for (std::size_t a = 0; a < flag.picard_rank(); ++a)
					b.b.push_back(random_rational());
				const FlowSolution fs = make_flow(flag, b);
				++rep.instances;

				rep.checks["scalar_volume_identity"].record(check_scalar_volume_identity(fs));
				const auto ric = check_ricci_identity(fs, cfg.fd_step, cfg.fd_tol);
				rep.checks["ricci_identity_exact"].record(ric.exact);
				rep.checks["ricci_identity_finite_difference"].record(ric.finite_difference);
				detail::check_bounds_on_grid(fs, cfg.samples_per_instance, rep);

				DivisorClass d;
				for (std::size_t a = 0; a < flag.picard_rank(); ++a)
					d.coeffs.push_back(coeff(rng));
				detail::check_divisor(flag, d, cfg.nef_max_q, rep);
			}
		}
	}

	rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return rep;
}

} // namespace flagflow::oracle
