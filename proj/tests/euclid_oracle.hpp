#pragma once

// Test-only realization of the classical root systems (plus G2, F4) as
// explicit vectors in Q^m. Used as an independent oracle for the
// Cartan-matrix closure in rootsys.

#include <set>
#include <stdexcept>
#include <vector>

#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace euclid {

using flagflow::Rational;
using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b)
{
	Rational s = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		s += a[i] * b[i];
	return s;
}

inline Vec e(std::size_t m, std::size_t i, Rational c = 1)
{
	Vec v(m, Rational(0));
	v[i] = c;
	return v;
}

inline Vec add(Vec a, const Vec& b, Rational s = 1)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += s * b[i];
	return a;
}

struct System {
	std::vector<Vec> simple;
	/// All roots, both signs.
	std::vector<Vec> roots;
};

/// Solve for k with beta = sum k_i alpha_i using the Gram matrix.
inline std::vector<Rational> expand(const System& s, const Vec& beta)
{
	const std::size_t l = s.simple.size();
	std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l + 1));
	for (std::size_t i = 0; i < l; ++i)
	{
		for (std::size_t j = 0; j < l; ++j)
			m[i][j] = dot(s.simple[i], s.simple[j]);
		m[i][l] = dot(s.simple[i], beta);
	}
	for (std::size_t c = 0; c < l; ++c)
	{
		std::size_t p = c;
		while (m[p][c] == 0)
			++p;
		std::swap(m[p], m[c]);
		for (std::size_t r = 0; r < l; ++r)
		{
			if (r == c || m[r][c] == 0)
				continue;
			Rational f = m[r][c] / m[c][c];
			for (std::size_t k = c; k <= l; ++k)
				m[r][k] -= f * m[c][k];
		}
	}
	std::vector<Rational> k(l);
	for (std::size_t i = 0; i < l; ++i)
		k[i] = m[i][l] / m[i][i];
	return k;
}

inline System classical(const flagflow::SimpleLieType& t)
{
	using F = flagflow::LieFamily;
	const std::size_t l = static_cast<std::size_t>(t.rank);
	System s;
	auto pm_pairs = [&](std::size_t m, std::size_t count) {
		for (std::size_t i = 0; i < count; ++i)
			for (std::size_t j = i + 1; j < count; ++j)
				for (int a : {1, -1})
					for (int b : {1, -1})
						s.roots.push_back(add(e(m, i, a), e(m, j, b)));
	};
	switch (t.family)
	{
	case F::A:
		for (std::size_t i = 0; i < l; ++i)
			s.simple.push_back(add(e(l + 1, i), e(l + 1, i + 1), -1));
		for (std::size_t i = 0; i <= l; ++i)
			for (std::size_t j = 0; j <= l; ++j)
				if (i != j)
					s.roots.push_back(add(e(l + 1, i), e(l + 1, j), -1));
		break;
	case F::B:
	case F::C:
	case F::D:
		for (std::size_t i = 0; i + 1 < l; ++i)
			s.simple.push_back(add(e(l, i), e(l, i + 1), -1));
		if (t.family == F::B)
			s.simple.push_back(e(l, l - 1));
		else if (t.family == F::C)
			s.simple.push_back(e(l, l - 1, 2));
		else
			s.simple.push_back(add(e(l, l - 2), e(l, l - 1)));
		pm_pairs(l, l);
		if (t.family != F::D)
			for (std::size_t i = 0; i < l; ++i)
				for (int a : {1, -1})
					s.roots.push_back(e(l, i, t.family == F::B ? a : 2 * a));
		break;
	case F::G:
		s.simple = {Vec{1, -1, 0}, Vec{-2, 1, 1}};
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				if (i != j)
				{
					s.roots.push_back(add(e(3, i), e(3, j), -1));
					std::size_t k = 3 - i - j;
					Vec longr = add(add(e(3, i, 2), e(3, j), -1), e(3, k), -1);
					s.roots.push_back(longr);
					s.roots.push_back(add(Vec(3, Rational(0)), longr, -1));
				}
		break;
	case F::F:
	{
		const Rational h(1, 2);
		s.simple = {Vec{0, 1, -1, 0}, Vec{0, 0, 1, -1}, Vec{0, 0, 0, 1}, Vec{h, -h, -h, -h}};
		pm_pairs(4, 4);
		for (std::size_t i = 0; i < 4; ++i)
			for (int a : {1, -1})
				s.roots.push_back(e(4, i, a));
		for (int mask = 0; mask < 16; ++mask)
		{
			Vec v(4);
			for (int i = 0; i < 4; ++i)
				v[static_cast<std::size_t>(i)] = (mask & (1 << i)) ? -h : h;
			s.roots.push_back(v);
		}
		break;
	}
	default:
		throw std::invalid_argument("no Euclidean model for this family");
	}
	// The G2 construction above lists long roots twice.
	std::set<Vec> uniq(s.roots.begin(), s.roots.end());
	s.roots.assign(uniq.begin(), uniq.end());
	return s;
}

/// Positive roots (non-negative expansion) with their coefficient vectors.
inline std::vector<std::pair<Vec, flagflow::Coefficients>> positive(const System& s)
{
	std::vector<std::pair<Vec, flagflow::Coefficients>> out;
	for (const auto& r : s.roots)
	{
		auto k = expand(s, r);
		bool pos = true;
		flagflow::Coefficients c;
		for (const auto& x : k)
		{
			if (!flagflow::is_integer(x))
				throw std::logic_error("non-integral root expansion");
			pos = pos && x >= 0;
			c.push_back(numerator(x).convert_to<int>());
		}
		if (pos)
			out.emplace_back(r, c);
	}
	return out;
}

} // namespace euclid
