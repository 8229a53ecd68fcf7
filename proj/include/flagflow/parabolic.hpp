#pragma once

// Flag variety data X_P for P = P_Theta.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "flagflow/errors.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace flagflow {

/**
 * The parabolic data attached to Theta, a proper subset of the simple roots.
 *
 * Theta and its complement are kept as sorted 0-based indices; every vector
 * indexed by the complement (Fano coefficients, class and divisor
 * coefficients) follows the ascending order of `complement`.
 */
struct ParabolicFlag {
	RootSystem root_system;
	std::vector<std::size_t> theta;
	std::vector<std::size_t> complement;
	/// Indices into root_system.positive_roots() of the roots not supported on Theta.
	std::vector<std::size_t> comp_pos_roots;
	/// Sum of the complementary positive roots (the anticanonical weight).
	Weight delta_p;
	/// ell_alpha = <delta_P, h_alpha^vee> for alpha in the complement.
	std::vector<Rational> fano_coeffs;

	std::size_t dimension() const { return comp_pos_roots.size(); }
	std::size_t picard_rank() const { return complement.size(); }
	bool is_borel() const { return theta.empty(); }

	/// 1-based Bourbaki indices, for display.
	std::vector<int> theta_one_based() const
	{
		std::vector<int> out;
		for (auto i : theta)
			out.push_back(static_cast<int>(i) + 1);
		return out;
	}
	std::vector<int> complement_one_based() const
	{
		std::vector<int> out;
		for (auto i : complement)
			out.push_back(static_cast<int>(i) + 1);
		return out;
	}
};

/// D = sum over the complement of coeffs[a] * D_{alpha_a}.
struct DivisorClass {
	std::vector<Rational> coeffs;

	bool is_ample() const
	{
		return !coeffs.empty() && std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& d) { return d > 0; });
	}
	bool is_integral() const
	{
		return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& d) { return is_integer(d); });
	}

	friend DivisorClass operator*(const Rational& s, DivisorClass d)
	{
		for (auto& c : d.coeffs)
			c *= s;
		return d;
	}
	friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// `theta` holds 1-based Bourbaki indices. Theta = all simple roots is rejected.
inline ParabolicFlag build_flag(RootSystem rs, const std::vector<int>& theta)
{
	const std::size_t l = rs.rank();
	std::vector<bool> in_theta(l, false);
	for (int idx : theta)
	{
		if (idx < 1 || static_cast<std::size_t>(idx) > l)
			throw InvalidInput("theta index " + std::to_string(idx) + " out of range 1.." + std::to_string(l));
		in_theta[static_cast<std::size_t>(idx - 1)] = true;
	}

	ParabolicFlag flag{std::move(rs), {}, {}, {}, Weight::zero(l), {}};
	for (std::size_t i = 0; i < l; ++i)
		(in_theta[i] ? flag.theta : flag.complement).push_back(i);
	if (flag.complement.empty())
		throw DomainError("flag variety is a point (theta contains every simple root)");

	const auto& roots = flag.root_system.positive_roots();
	for (std::size_t r = 0; r < roots.size(); ++r)
	{
		bool outside = std::any_of(flag.complement.begin(), flag.complement.end(),
		                           [&](std::size_t i) { return roots[r][i] > 0; });
		if (outside)
		{
			flag.comp_pos_roots.push_back(r);
			flag.delta_p += flag.root_system.to_weight(roots[r]);
		}
	}

	for (auto i : flag.theta)
		if (flag.delta_p[i] != 0)
			throw InternalError("anticanonical weight pairs non-trivially with a root of Theta");
	for (auto i : flag.complement)
		flag.fano_coeffs.push_back(flag.delta_p[i]);
	return flag;
}

inline ParabolicFlag build_flag(const SimpleLieType& type, const std::vector<int>& theta)
{
	return build_flag(build_root_system(type), theta);
}

inline void require_divisor_shape(const ParabolicFlag& flag, const DivisorClass& d)
{
	if (d.coeffs.size() != flag.picard_rank())
		throw InvalidInput("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, expected " +
		                   std::to_string(flag.picard_rank()));
}

/// chi_D = sum d_alpha varpi_alpha; zero on Theta.
inline Weight char_of_divisor(const ParabolicFlag& flag, const DivisorClass& d)
{
	require_divisor_shape(flag, d);
	auto w = Weight::zero(flag.root_system.rank());
	for (std::size_t a = 0; a < flag.complement.size(); ++a)
		w[flag.complement[a]] = d.coeffs[a];
	return w;
}

/// Inverse of char_of_divisor on weights supported on the complement.
inline DivisorClass divisor_of_char(const ParabolicFlag& flag, const Weight& chi)
{
	for (auto i : flag.theta)
		if (chi[i] != 0)
			throw DomainError("character is not trivial on the Levi factor of P");
	DivisorClass d;
	for (auto i : flag.complement)
		d.coeffs.push_back(chi[i]);
	return d;
}

/// K = -sum ell_alpha D_alpha.
inline DivisorClass canonical_divisor(const ParabolicFlag& flag)
{
	DivisorClass k;
	for (const auto& ell : flag.fano_coeffs)
		k.coeffs.push_back(-ell);
	return k;
}

inline DivisorClass anticanonical_divisor(const ParabolicFlag& flag) { return DivisorClass{flag.fano_coeffs}; }

} // namespace flagflow
