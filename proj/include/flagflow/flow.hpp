#pragma once

/*
  Closed-form homogeneous Kahler-Ricci flow on X_P.

  A G-invariant Kahler class is recorded by b_alpha = (1/2pi) * integral of
  omega_0 over the curve P^1_alpha, for alpha in the complement of Theta. The
  flow moves the class linearly, b_alpha(t) = b_alpha - t * ell_alpha, and
  every curvature quantity is a rational function of t built from the linear
  forms

      P_beta(t) = <lambda_t, h_beta^vee>,   lambda_t = sum_alpha b_alpha(t) varpi_alpha,

  one per complementary positive root beta. Their slopes are -a_beta with
  a_beta = <delta_P, h_beta^vee>.

  The potential coefficients c_alpha = 2 b_alpha never appear in this API.
*/

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "flagflow/dimcount.hpp"
#include "flagflow/errors.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"

namespace flagflow {

/// Class integrals b_alpha, ascending complement order.
struct KahlerClass {
	std::vector<Rational> b;

	friend bool operator==(const KahlerClass&, const KahlerClass&) = default;
};

/// One complementary positive root and its linear form P_beta(t) = constant + slope * t.
struct RootTerm {
	std::size_t root = 0;
	Rational constant;
	Rational slope;
	/// a_beta = <delta_P, h_beta^vee>
	Rational weight;
	/// <rho, h_beta^vee>
	Rational rho_pairing;

	Rational at(const Rational& t) const { return constant + slope * t; }
};

/**
 * A solution of the flow from a homogeneous initial class. Build with
 * make_flow; treat as immutable afterwards. The fields are public so that
 * verification fixtures can construct deliberately corrupted copies.
 */
struct FlowSolution {
	ParabolicFlag flag;
	KahlerClass initial;
	Rational singular_time;
	std::vector<RootTerm> terms;

	std::size_t dimension() const { return flag.dimension(); }
};

/// Value coeff * (2 pi)^n.
struct ScaledVolume {
	Rational coeff;
	std::size_t n = 0;

	double approx() const { return to_double(coeff) * std::pow(2.0 * std::numbers::pi, static_cast<double>(n)); }
};

inline FlowSolution make_flow(const ParabolicFlag& flag, const KahlerClass& b0)
{
	if (b0.b.size() != flag.picard_rank())
		throw InvalidInput("class has " + std::to_string(b0.b.size()) + " coefficients, expected " +
		                   std::to_string(flag.picard_rank()));
	for (const auto& b : b0.b)
		if (b <= 0)
			throw DomainError("initial class not Kahler: coefficient " + to_string(b) + " is not positive");

	FlowSolution fs{flag, b0, 0, {}};
	const auto& rs = flag.root_system;

	Rational T = b0.b[0] / flag.fano_coeffs[0];
	for (std::size_t a = 1; a < b0.b.size(); ++a)
		T = std::min(T, Rational(b0.b[a] / flag.fano_coeffs[a]));
	fs.singular_time = T;

	for (auto r : flag.comp_pos_roots)
	{
		const auto& row = rs.coroot_pairings(r);
		RootTerm term;
		term.root = r;
		for (std::size_t a = 0; a < flag.complement.size(); ++a)
		{
			int pw = row[flag.complement[a]];
			term.constant += b0.b[a] * pw;
			term.slope -= flag.fano_coeffs[a] * pw;
		}
		term.weight = pairing(rs, flag.delta_p, r);
		term.rho_pairing = rho_pairing(rs, r);
		if (term.slope != -term.weight)
			throw InternalError("slope of P_beta differs from -<delta_P, h_beta^vee>");
		fs.terms.push_back(std::move(term));
	}
	return fs;
}

namespace detail {

inline void require_before_singular_time(const FlowSolution& fs, const Rational& t)
{
	if (t < 0)
		throw DomainError("time " + to_string(t) + " is negative");
	if (t >= fs.singular_time)
		throw DomainError("time " + to_string(t) + " is past singular time T = " + to_string(fs.singular_time));
}

} // namespace detail

/// b_alpha - t * ell_alpha for 0 <= t < T.
inline KahlerClass class_at(const FlowSolution& fs, const Rational& t)
{
	detail::require_before_singular_time(fs, t);
	KahlerClass c;
	for (std::size_t a = 0; a < fs.initial.b.size(); ++a)
		c.b.push_back(fs.initial.b[a] - t * fs.flag.fano_coeffs[a]);
	return c;
}

/// Chern scalar curvature R(t) = sum_beta a_beta / P_beta(t).
inline Rational scalar_curvature(const FlowSolution& fs, const Rational& t)
{
	detail::require_before_singular_time(fs, t);
	Rational r = 0;
	for (const auto& term : fs.terms)
		r += term.weight / term.at(t);
	return r;
}

/// |Ric|^2(t) = sum_beta (a_beta / P_beta(t))^2.
inline Rational ricci_norm_sq(const FlowSolution& fs, const Rational& t)
{
	detail::require_before_singular_time(fs, t);
	Rational s = 0;
	for (const auto& term : fs.terms)
	{
		Rational x = term.weight / term.at(t);
		s += x * x;
	}
	return s;
}

/// Vol = (2 pi)^n prod_beta P_beta(t) / <rho, h_beta^vee>; defined on [0, T].
inline ScaledVolume volume(const FlowSolution& fs, const Rational& t)
{
	if (t < 0 || t > fs.singular_time)
		throw DomainError("volume requested at t = " + to_string(t) + " outside [0, T]");
	Rational q = 1;
	for (const auto& term : fs.terms)
		q *= term.at(t) / term.rho_pairing;
	return ScaledVolume{q, fs.dimension()};
}

/// True when the initial class is proportional to the anticanonical class.
inline bool is_kahler_einstein(const FlowSolution& fs)
{
	const Rational s = fs.initial.b[0] / fs.flag.fano_coeffs[0];
	for (std::size_t a = 1; a < fs.initial.b.size(); ++a)
		if (fs.initial.b[a] != s * fs.flag.fano_coeffs[a])
			return false;
	return true;
}

inline const char* riemann_bound_symbolic = "C(n)/(T-t)";

struct BoundsReport {
	Rational t;
	Rational scalar;
	Rational ricci_norm_sq;
	ScaledVolume vol;

	Rational scalar_lower;     // 1/(T-t)
	Rational scalar_upper;     // n/(T-t)
	Rational ricci_sq_lower;   // R^2/n
	Rational ricci_sq_upper;   // R^2
	Rational vol_lower;        // (1 - t/T)^n Vol(0), coefficient of (2 pi)^n
	Rational vol_upper;        // (1 - t/T) Vol(0)

	bool scalar_ok = false;
	bool ricci_ok = false;
	bool volume_ok = false;
	bool scalar_saturates_upper = false;
	bool scalar_saturates_lower = false;

	std::string riemann_bound = riemann_bound_symbolic;

	bool all_ok() const { return scalar_ok && ricci_ok && volume_ok; }
};

inline BoundsReport bounds_report(const FlowSolution& fs, const Rational& t)
{
	BoundsReport rep;
	rep.t = t;
	rep.scalar = scalar_curvature(fs, t);
	rep.ricci_norm_sq = ricci_norm_sq(fs, t);
	rep.vol = volume(fs, t);

	const Rational n = static_cast<long>(fs.dimension());
	const Rational gap = fs.singular_time - t;
	rep.scalar_lower = 1 / gap;
	rep.scalar_upper = n / gap;
	rep.ricci_sq_lower = rep.scalar * rep.scalar / n;
	rep.ricci_sq_upper = rep.scalar * rep.scalar;

	const Rational vol0 = volume(fs, 0).coeff;
	const Rational shrink = 1 - t / fs.singular_time;
	rep.vol_upper = shrink * vol0;
	rep.vol_lower = vol0;
	for (std::size_t i = 0; i < fs.dimension(); ++i)
		rep.vol_lower *= shrink;

	rep.scalar_ok = rep.scalar_lower <= rep.scalar && rep.scalar <= rep.scalar_upper;
	rep.ricci_ok = rep.ricci_sq_lower <= rep.ricci_norm_sq && rep.ricci_norm_sq <= rep.ricci_sq_upper;
	rep.volume_ok = rep.vol_lower <= rep.vol.coeff && rep.vol.coeff <= rep.vol_upper;
	rep.scalar_saturates_upper = rep.scalar == rep.scalar_upper;
	rep.scalar_saturates_lower = rep.scalar == rep.scalar_lower;
	return rep;
}

/// C(omega_0) = max_alpha 2 b_alpha / ell_alpha; Ric(omega(t)) >= 1/C for all t in [0, T).
inline Rational ricci_lower_constant(const FlowSolution& fs)
{
	Rational c = 2 * fs.initial.b[0] / fs.flag.fano_coeffs[0];
	for (std::size_t a = 1; a < fs.initial.b.size(); ++a)
		c = std::max(c, Rational(2 * fs.initial.b[a] / fs.flag.fano_coeffs[a]));
	return c;
}

struct DiameterBound {
	/// (2n - 1) C(omega_0); the bound is pi * sqrt(radicand).
	Rational radicand;
	double value = 0;
};

/// Myers bound, uniform in t.
inline DiameterBound diameter_bound(const FlowSolution& fs)
{
	DiameterBound d;
	d.radicand = static_cast<long>(2 * fs.dimension() - 1) * ricci_lower_constant(fs);
	d.value = std::numbers::pi * std::sqrt(to_double(d.radicand));
	return d;
}

struct Lambda1Bounds {
	Rational lower;
	Rational upper;
	/// dim V(delta_P) = h^0 of the anticanonical bundle.
	Integer anticanonical_sections;
};

/**
 * 2/C(omega_0) <= lambda_1(t) <= 2 R(t) N / (N - 1), N = dim V(delta_P).
 *
 * The product-over-all-roots rewriting of N/(N-1) is not used: it divides by
 * <delta_P, h_alpha> = 0 for roots of Theta and does not equal N/(N-1).
 */
inline Lambda1Bounds lambda1_bounds(const FlowSolution& fs, const Rational& t)
{
	const Rational r = scalar_curvature(fs, t);
	Lambda1Bounds out;
	out.anticanonical_sections = weyl_dim(fs.flag.root_system, DominantWeight(fs.flag.delta_p));
	if (out.anticanonical_sections <= 1)
		throw InternalError("anticanonical module is one-dimensional");
	const Rational nsec(out.anticanonical_sections);
	out.lower = 2 / ricci_lower_constant(fs);
	out.upper = 2 * r * nsec / (nsec - 1);
	return out;
}

} // namespace flagflow
