#pragma once

/*
  Numerical invariants of ample divisors on X_P and the flow they generate.

  For omega_0 in 2pi c1(O(D)) the class integrals are b = d, so the flow of
  D is make_flow(flag, {d}). The Seshadri / Gromov-width / ball-embedding
  bounds below are only exposed for full flag varieties (Theta empty), and
  use the form omega_D in c1(O(D)); its scalar curvature is 2pi R(0).
*/

#include <optional>
#include <string>

#include "flagflow/dimcount.hpp"
#include "flagflow/errors.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"

namespace flagflow {

namespace detail {

inline void require_ample(const ParabolicFlag& flag, const DivisorClass& d)
{
	require_divisor_shape(flag, d);
	if (!d.is_ample())
		throw DomainError("divisor is not ample (all coefficients must be positive)");
}

} // namespace detail

inline FlowSolution flow_of_divisor(const ParabolicFlag& flag, const DivisorClass& d)
{
	detail::require_ample(flag, d);
	return make_flow(flag, KahlerClass{d.coeffs});
}

/// tau(D) = max_alpha ell_alpha / d_alpha.
inline Rational nef_value(const ParabolicFlag& flag, const DivisorClass& d)
{
	detail::require_ample(flag, d);
	Rational tau = flag.fano_coeffs[0] / d.coeffs[0];
	for (std::size_t a = 1; a < d.coeffs.size(); ++a)
		tau = std::max(tau, Rational(flag.fano_coeffs[a] / d.coeffs[a]));
	return tau;
}

/// C(D) = 2 max_alpha d_alpha / ell_alpha.
inline Rational ricci_constant(const ParabolicFlag& flag, const DivisorClass& d)
{
	detail::require_ample(flag, d);
	Rational c = d.coeffs[0] / flag.fano_coeffs[0];
	for (std::size_t a = 1; a < d.coeffs.size(); ++a)
		c = std::max(c, Rational(d.coeffs[a] / flag.fano_coeffs[a]));
	return 2 * c;
}

/// deg(D) = n! prod_beta <chi_D, h_beta^vee> / <rho, h_beta^vee>.
inline Rational degree(const ParabolicFlag& flag, const DivisorClass& d)
{
	detail::require_ample(flag, d);
	const Weight chi = char_of_divisor(flag, d);
	Rational prod = 1;
	for (auto r : flag.comp_pos_roots)
		prod *= pairing(flag.root_system, chi, r) / rho_pairing(flag.root_system, r);
	return Rational(factorial(static_cast<unsigned>(flag.dimension()))) * prod;
}

/// Upper bounds for full flag varieties X_B.
struct BorelBounds {
	Rational seshadri_upper;       // 2 T(D)
	Rational gromov_width_upper;   // 2 T(D)
	Rational kahler_radius_pi;     // kahler radius bound is pi times this, i.e. 2 pi T(D)
	Rational sympl_radius_upper;   // 2 pi dim_R / R(omega_D) = 2n / R(0)
};

struct InvariantReport {
	Rational tau;
	Rational T_script;
	Rational C_script;
	Rational degree;
	/// Lattice points of Delta(D) = dim V(chi_D); integral D only.
	std::optional<Integer> dimV;
	/// 2/C(D) <= lambda_1(omega_0) <= 2n N/(N-1), N = dimV; integral D only.
	std::optional<Rational> lambda1_lower;
	std::optional<Rational> lambda1_upper;
	std::optional<BorelBounds> borel_only_bounds;
};

inline BorelBounds borel_bounds(const ParabolicFlag& flag, const DivisorClass& d)
{
	if (!flag.is_borel())
		throw DomainError("Seshadri, Gromov-width and ball-embedding bounds are stated only for the Borel case (theta empty)");
	const Rational T = 1 / nef_value(flag, d);
	const Rational r0 = scalar_curvature(flow_of_divisor(flag, d), 0);
	BorelBounds b;
	b.seshadri_upper = 2 * T;
	b.gromov_width_upper = 2 * T;
	b.kahler_radius_pi = 2 * T;
	b.sympl_radius_upper = Rational(2 * static_cast<long>(flag.dimension())) / r0;
	return b;
}

inline InvariantReport invariants_of(const ParabolicFlag& flag, const DivisorClass& d)
{
	InvariantReport rep;
	rep.tau = nef_value(flag, d);
	rep.T_script = 1 / rep.tau;
	rep.C_script = ricci_constant(flag, d);
	rep.degree = degree(flag, d);
	if (d.is_integral())
	{
		rep.dimV = lattice_count(flag, d);
		const Rational nsec(*rep.dimV);
		rep.lambda1_lower = 2 / rep.C_script;
		rep.lambda1_upper = Rational(2 * static_cast<long>(flag.dimension())) * nsec / (nsec - 1);
	}
	if (flag.is_borel())
		rep.borel_only_bounds = borel_bounds(flag, d);
	return rep;
}

/// D_t = D + t K, for 0 <= t < T(D).
inline DivisorClass divisor_at(const ParabolicFlag& flag, const DivisorClass& d, const Rational& t)
{
	const Rational T = 1 / nef_value(flag, d);
	if (t < 0)
		throw DomainError("time " + to_string(t) + " is negative");
	if (t >= T)
		throw DomainError("class leaves the ample cone at T(D) = " + to_string(T));
	DivisorClass out;
	for (std::size_t a = 0; a < d.coeffs.size(); ++a)
		out.coeffs.push_back(d.coeffs[a] - t * flag.fano_coeffs[a]);
	return out;
}

struct LctBound {
	Rational bound;
	Rational C_of_mD;
	bool klt = false;
	bool lc = false;
};

/// m / C(mD) <= lct(D) on X_B; klt iff C(mD) < m, lc if C(mD) <= m.
inline LctBound lct_lower(const ParabolicFlag& flag, const DivisorClass& d, int m)
{
	if (!flag.is_borel())
		throw DomainError("the log canonical threshold bound is stated only for the Borel case (theta empty)");
	if (m < 1)
		throw InvalidInput("m must be a positive integer");
	const DivisorClass md = Rational(m) * d;
	if (!md.is_integral())
		throw DomainError("m*D is not integral for m = " + std::to_string(m));
	detail::require_ample(flag, md);
	LctBound out;
	out.C_of_mD = ricci_constant(flag, md);
	out.bound = Rational(m) / out.C_of_mD;
	out.klt = out.C_of_mD < m;
	out.lc = out.C_of_mD <= m;
	return out;
}

} // namespace flagflow
