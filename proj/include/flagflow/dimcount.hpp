#pragma once

/*
  Dimensions of irreducible highest-weight modules.

  weyl_dim is the production path. gt_count enumerates Gelfand-Tsetlin
  patterns for type A and is used only as an independent oracle; it is
  exponential and therefore runs under a pattern budget.
*/

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "flagflow/errors.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace flagflow {

inline constexpr std::uint64_t default_gt_budget = 1'000'000;

/// Budget from FLAGFLOW_MAX_GT_BUDGET, falling back to `fallback`.
inline std::uint64_t gt_budget_from_env(std::uint64_t fallback = default_gt_budget)
{
	const char* env = std::getenv("FLAGFLOW_MAX_GT_BUDGET");
	if (!env || !*env)
		return fallback;
	char* end = nullptr;
	unsigned long long v = std::strtoull(env, &end, 10);
	if (*end != '\0' || v == 0)
		throw InvalidInput(std::string("FLAGFLOW_MAX_GT_BUDGET must be a positive integer, got \"") + env + "\"");
	return v;
}

/// A weight with non-negative integer coordinates.
class DominantWeight {
public:
	explicit DominantWeight(Weight w) : w_(std::move(w))
	{
		for (const auto& c : w_.coords)
			if (!is_integer(c) || c < 0)
				throw DomainError("weight is not dominant integral (coordinate " + to_string(c) + ")");
	}
	DominantWeight(std::initializer_list<int> coords)
	    : DominantWeight(Weight{std::vector<Rational>(coords.begin(), coords.end())})
	{
	}

	const Weight& weight() const { return w_; }
	std::size_t size() const { return w_.size(); }
	int coord(std::size_t i) const { return numerator(w_[i]).convert_to<int>(); }

private:
	Weight w_;
};

/// dim V(lambda) = prod over positive beta of <lambda + rho, h_beta^vee> / <rho, h_beta^vee>.
inline Integer weyl_dim(const RootSystem& rs, const DominantWeight& lambda)
{
	if (lambda.size() != rs.rank())
		throw InvalidInput("weight has wrong length for this root system");
	Rational prod = 1;
	const Weight shifted = lambda.weight() + rho(rs);
	for (std::size_t r = 0; r < rs.num_positive_roots(); ++r)
		prod *= pairing(rs, shifted, r) / rho_pairing(rs, r);
	if (!is_integer(prod))
		throw InternalError("Weyl dimension product is not an integer: " + to_string(prod));
	return numerator(prod);
}

namespace detail {

inline void count_gt_rows(const std::vector<long>& row, std::uint64_t& count, std::uint64_t budget)
{
	if (row.size() == 1)
	{
		if (++count > budget)
			throw BudgetExceeded("Gelfand-Tsetlin enumeration exceeded budget of " + std::to_string(budget) +
			                     " patterns");
		return;
	}
	// next[i] ranges over [row[i+1], row[i]]; enumerate odometer-style.
	std::vector<long> next(row.size() - 1);
	for (std::size_t i = 0; i < next.size(); ++i)
		next[i] = row[i + 1];
	while (true)
	{
		count_gt_rows(next, count, budget);
		std::size_t i = 0;
		while (i < next.size() && next[i] == row[i])
		{
			next[i] = row[i + 1];
			++i;
		}
		if (i == next.size())
			return;
		++next[i];
	}
}

} // namespace detail

/// Number of Gelfand-Tsetlin patterns with top row the partition of lambda.
inline std::uint64_t gt_count(int rank, const DominantWeight& lambda, std::uint64_t budget = gt_budget_from_env())
{
	if (rank < 1 || lambda.size() != static_cast<std::size_t>(rank))
		throw InvalidInput("weight length does not match rank " + std::to_string(rank));
	// lambda_j = sum_{i >= j} m_i, padded with a trailing 0.
	std::vector<long> top(static_cast<std::size_t>(rank) + 1, 0);
	for (int j = rank - 1; j >= 0; --j)
		top[static_cast<std::size_t>(j)] = top[static_cast<std::size_t>(j) + 1] + lambda.coord(static_cast<std::size_t>(j));
	std::uint64_t count = 0;
	detail::count_gt_rows(top, count, budget);
	return count;
}

inline std::uint64_t gt_count(const RootSystem& rs, const DominantWeight& lambda, std::uint64_t budget = gt_budget_from_env())
{
	if (!rs.lie_type() || rs.lie_type()->family != LieFamily::A)
		throw DomainError("Gelfand-Tsetlin counting is only available for type A");
	return gt_count(static_cast<int>(rs.rank()), lambda, budget);
}

/// Lattice points of the string polytope of an ample integral D, via dim V(chi_D).
inline Integer lattice_count(const ParabolicFlag& flag, const DivisorClass& d)
{
	require_divisor_shape(flag, d);
	if (!d.is_ample())
		throw DomainError("divisor is not ample");
	if (!d.is_integral())
		throw DomainError("lattice-point count needs an integral divisor");
	return weyl_dim(flag.root_system, DominantWeight(char_of_divisor(flag, d)));
}

} // namespace flagflow
