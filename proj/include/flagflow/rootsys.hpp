#pragma once

/*
  Simple root systems of types A-G in Bourbaki numbering.

  Roots are stored as coefficient vectors over the simple roots. Everything
  else (Cartan matrix, symmetrizers, coroot pairings with the fundamental
  weights) is integral, so all downstream formulas stay exact.

  Conventions:
    cartan[i][j] = <alpha_i, h_{alpha_j}^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    symmetrizer[j] = (alpha_j, alpha_j), scaled to coprime positive integers,
                     so that cartan[i][j] * symmetrizer[j] is symmetric.
    The weight coordinates of a root beta = sum k_i alpha_i are
    <beta, h_{alpha_j}^vee> = sum_i k_i cartan[i][j].
*/

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagflow/errors.hpp"
#include "flagflow/rational.hpp"

namespace flagflow {

enum class LieFamily { A, B, C, D, E, F, G };

inline char family_letter(LieFamily f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline LieFamily parse_family(std::string_view s)
{
	if (s.size() == 1)
	{
		char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
		if (c >= 'A' && c <= 'G')
			return static_cast<LieFamily>(c - 'A');
	}
	throw InvalidInput("unknown Lie family \"" + std::string(s) + "\" (expected one of A..G)");
}

struct SimpleLieType {
	LieFamily family = LieFamily::A;
	int rank = 1;

	std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

	/// Throws InvalidInput naming the violated rank constraint.
	void validate() const
	{
		auto fail = [&](const char* constraint) {
			throw InvalidInput("invalid rank " + std::to_string(rank) + " for type " +
			                   std::string(1, family_letter(family)) + ": requires " + constraint);
		};
		switch (family)
		{
		case LieFamily::A: if (rank < 1) fail("l >= 1"); break;
		case LieFamily::B: if (rank < 2) fail("l >= 2"); break;
		case LieFamily::C: if (rank < 3) fail("l >= 3"); break;
		case LieFamily::D: if (rank < 4) fail("l >= 4"); break;
		case LieFamily::E: if (rank < 6 || rank > 8) fail("l in {6, 7, 8}"); break;
		case LieFamily::F: if (rank != 4) fail("l = 4"); break;
		case LieFamily::G: if (rank != 2) fail("l = 2"); break;
		}
	}

	friend bool operator==(const SimpleLieType&, const SimpleLieType&) = default;
};

/// Parses names like "A2", "e8", "G2".
inline SimpleLieType parse_lie_type(std::string_view s)
{
	if (s.size() < 2)
		throw InvalidInput("malformed Lie type \"" + std::string(s) + "\"");
	SimpleLieType t;
	t.family = parse_family(s.substr(0, 1));
	auto digits = s.substr(1);
	if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
		throw InvalidInput("malformed Lie type \"" + std::string(s) + "\"");
	t.rank = std::stoi(std::string(digits));
	t.validate();
	return t;
}

/// lambda = sum_i coords[i] * varpi_{i+1}.
struct Weight {
	std::vector<Rational> coords;

	std::size_t size() const { return coords.size(); }
	const Rational& operator[](std::size_t i) const { return coords[i]; }
	Rational& operator[](std::size_t i) { return coords[i]; }

	Weight& operator+=(const Weight& o)
	{
		for (std::size_t i = 0; i < coords.size(); ++i)
			coords[i] += o.coords[i];
		return *this;
	}
	friend Weight operator+(Weight a, const Weight& b) { return a += b; }
	friend Weight operator*(const Rational& s, Weight w)
	{
		for (auto& c : w.coords)
			c *= s;
		return w;
	}
	friend Weight operator-(Weight w)
	{
		for (auto& c : w.coords)
			c = -c;
		return w;
	}
	friend bool operator==(const Weight&, const Weight&) = default;

	static Weight zero(std::size_t rank) { return Weight{std::vector<Rational>(rank, Rational(0))}; }
	static Weight fundamental(std::size_t rank, std::size_t index)
	{
		auto w = zero(rank);
		w.coords.at(index) = 1;
		return w;
	}
};

using Coefficients = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

class RootSystem {
public:
	/// Positive roots are generated by root-string closure from `cartan` alone.
	RootSystem(IntMatrix cartan, std::vector<int> symmetrizer, std::optional<SimpleLieType> type = std::nullopt);

	std::size_t rank() const { return cartan_.size(); }
	const std::optional<SimpleLieType>& lie_type() const { return type_; }
	const IntMatrix& cartan() const { return cartan_; }
	const std::vector<int>& symmetrizer() const { return symmetrizer_; }

	/// Ordered by height, ties broken by descending lexicographic order, so
	/// the simple roots come first as alpha_1, ..., alpha_l.
	const std::vector<Coefficients>& positive_roots() const { return roots_; }
	std::size_t num_positive_roots() const { return roots_.size(); }

	/// (<varpi_1, h_beta^vee>, ..., <varpi_l, h_beta^vee>) for the root at `index`.
	const std::vector<int>& coroot_pairings(std::size_t index) const { return pairings_.at(index); }

	/// Index of the root with the given coefficient vector, if it is a positive root.
	std::optional<std::size_t> find_root(const Coefficients& k) const
	{
		auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(k, std::size_t{0}));
		if (it != sorted_.end() && it->first == k)
			return it->second;
		return std::nullopt;
	}

	int height(std::size_t index) const
	{
		const auto& k = roots_.at(index);
		return std::accumulate(k.begin(), k.end(), 0);
	}

	/// Fundamental-weight coordinates of sum_i k_i alpha_i.
	Weight to_weight(const Coefficients& k) const
	{
		auto w = Weight::zero(rank());
		for (std::size_t j = 0; j < rank(); ++j)
		{
			long s = 0;
			for (std::size_t i = 0; i < rank(); ++i)
				s += static_cast<long>(k[i]) * cartan_[i][j];
			w[j] = s;
		}
		return w;
	}

	friend bool operator==(const RootSystem& a, const RootSystem& b)
	{
		return a.cartan_ == b.cartan_ && a.symmetrizer_ == b.symmetrizer_ && a.roots_ == b.roots_;
	}

private:
	void generate_roots();
	void fill_pairings();

	std::optional<SimpleLieType> type_;
	IntMatrix cartan_;
	std::vector<int> symmetrizer_;
	std::vector<Coefficients> roots_;
	std::vector<std::pair<Coefficients, std::size_t>> sorted_;
	std::vector<std::vector<int>> pairings_;
};

inline RootSystem::RootSystem(IntMatrix cartan, std::vector<int> symmetrizer, std::optional<SimpleLieType> type)
    : type_(std::move(type)), cartan_(std::move(cartan)), symmetrizer_(std::move(symmetrizer))
{
	const std::size_t l = cartan_.size();
	if (l == 0 || symmetrizer_.size() != l)
		throw InvalidInput("Cartan matrix and symmetrizer must be non-empty and of equal size");
	for (std::size_t i = 0; i < l; ++i)
	{
		if (cartan_[i].size() != l)
			throw InvalidInput("Cartan matrix must be square");
		if (cartan_[i][i] != 2)
			throw InvalidInput("Cartan matrix diagonal must be 2");
		if (symmetrizer_[i] <= 0)
			throw InvalidInput("symmetrizers must be positive");
		for (std::size_t j = 0; j < l; ++j)
		{
			if (i != j && cartan_[i][j] > 0)
				throw InvalidInput("off-diagonal Cartan entries must be <= 0");
			if (cartan_[i][j] * symmetrizer_[j] != cartan_[j][i] * symmetrizer_[i])
				throw InvalidInput("symmetrizer does not symmetrize the Cartan matrix");
		}
	}
	generate_roots();
	fill_pairings();
}

inline void RootSystem::generate_roots()
{
	const std::size_t l = rank();
	std::set<Coefficients> known;
	std::vector<Coefficients> layer;
	for (std::size_t j = 0; j < l; ++j)
	{
		Coefficients e(l, 0);
		e[j] = 1;
		layer.push_back(e);
		known.insert(e);
	}

	while (!layer.empty())
	{
		std::sort(layer.begin(), layer.end(), std::greater<>());
		roots_.insert(roots_.end(), layer.begin(), layer.end());

		std::set<Coefficients> next;
		for (const auto& beta : layer)
		{
			for (std::size_t j = 0; j < l; ++j)
			{
				// p = <beta, h_{alpha_j}^vee>; q = length of the alpha_j-string below beta.
				long p = 0;
				for (std::size_t i = 0; i < l; ++i)
					p += static_cast<long>(beta[i]) * cartan_[i][j];
				int q = 0;
				Coefficients down = beta;
				while (down[j] > 0)
				{
					--down[j];
					if (!known.count(down))
						break;
					++q;
				}
				if (q - p > 0)
				{
					Coefficients up = beta;
					++up[j];
					next.insert(up);
				}
			}
		}
		layer.assign(next.begin(), next.end());
		known.insert(next.begin(), next.end());
		// No finite type has more than max(l^2, 120) positive roots.
		if (known.size() > l * l + 120)
			throw InvalidInput("Cartan matrix is not of finite type");
	}

	sorted_.reserve(roots_.size());
	for (std::size_t i = 0; i < roots_.size(); ++i)
		sorted_.emplace_back(roots_[i], i);
	std::sort(sorted_.begin(), sorted_.end());
}

inline void RootSystem::fill_pairings()
{
	const std::size_t l = rank();
	pairings_.reserve(roots_.size());
	for (const auto& k : roots_)
	{
		// d_beta = (beta, beta) in the symmetrizer scale.
		long twice_norm = 0;
		for (std::size_t i = 0; i < l; ++i)
			for (std::size_t j = 0; j < l; ++j)
				twice_norm += static_cast<long>(k[i]) * k[j] * cartan_[i][j] * symmetrizer_[j];
		if (twice_norm <= 0 || twice_norm % 2 != 0)
			throw InternalError("root norm is not a positive integer");
		const long norm = twice_norm / 2;

		std::vector<int> row(l);
		for (std::size_t j = 0; j < l; ++j)
		{
			long num = static_cast<long>(k[j]) * symmetrizer_[j];
			if (num % norm != 0)
				throw InternalError("non-integral coroot pairing");
			row[j] = static_cast<int>(num / norm);
		}
		pairings_.push_back(std::move(row));
	}
}

namespace detail {

/// Bourbaki Dynkin data: edges (0-based) and squared root lengths.
struct DynkinData {
	std::vector<std::pair<int, int>> edges;
	std::vector<int> norms;
};

inline DynkinData dynkin_data(const SimpleLieType& t)
{
	const int l = t.rank;
	DynkinData d;
	d.norms.assign(l, 2);
	auto chain = [&](int upto) {
		for (int i = 0; i + 1 < upto; ++i)
			d.edges.emplace_back(i, i + 1);
	};
	switch (t.family)
	{
	case LieFamily::A:
		chain(l);
		break;
	case LieFamily::B:
		chain(l);
		d.norms[l - 1] = 1;
		break;
	case LieFamily::C:
		chain(l);
		std::fill(d.norms.begin(), d.norms.end() - 1, 1);
		break;
	case LieFamily::D:
		chain(l - 1);
		d.edges.emplace_back(l - 3, l - 1);
		break;
	case LieFamily::E:
		d.edges = {{0, 2}, {2, 3}, {1, 3}};
		for (int i = 3; i + 1 < l; ++i)
			d.edges.emplace_back(i, i + 1);
		break;
	case LieFamily::F:
		chain(4);
		d.norms = {2, 2, 1, 1};
		break;
	case LieFamily::G:
		chain(2);
		d.norms = {1, 3};
		break;
	}
	return d;
}

} // namespace detail

/// Rejects invalid ranks with InvalidInput.
inline RootSystem build_root_system(const SimpleLieType& type)
{
	type.validate();
	const auto dyn = detail::dynkin_data(type);
	const std::size_t l = static_cast<std::size_t>(type.rank);

	int g = 0;
	for (int n : dyn.norms)
		g = std::gcd(g, n);
	std::vector<int> sym(l);
	for (std::size_t i = 0; i < l; ++i)
		sym[i] = dyn.norms[i] / g;

	// 2 (alpha_i, alpha_j) with (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2 on edges.
	IntMatrix cartan(l, std::vector<int>(l, 0));
	for (std::size_t i = 0; i < l; ++i)
		cartan[i][i] = 2;
	for (auto [i, j] : dyn.edges)
	{
		int twice_inner = -std::max(dyn.norms[i], dyn.norms[j]);
		cartan[i][j] = twice_inner / dyn.norms[j];
		cartan[j][i] = twice_inner / dyn.norms[i];
	}

	RootSystem rs(std::move(cartan), std::move(sym), type);

	Weight twice_rho = Weight::zero(l);
	for (const auto& k : rs.positive_roots())
		twice_rho += rs.to_weight(k);
	for (std::size_t j = 0; j < l; ++j)
		if (twice_rho[j] != 2)
			throw InternalError("half the sum of positive roots is not (1,...,1) for " + type.name());
	return rs;
}

/// Restriction of `rs` to the simple roots in `indices` (0-based), e.g. a Levi subsystem.
inline RootSystem sub_root_system(const RootSystem& rs, const std::vector<std::size_t>& indices)
{
	IntMatrix cartan(indices.size(), std::vector<int>(indices.size()));
	std::vector<int> sym(indices.size());
	for (std::size_t a = 0; a < indices.size(); ++a)
	{
		sym[a] = rs.symmetrizer().at(indices[a]);
		for (std::size_t b = 0; b < indices.size(); ++b)
			cartan[a][b] = rs.cartan().at(indices[a]).at(indices[b]);
	}
	return RootSystem(std::move(cartan), std::move(sym));
}

/// <lambda, h_beta^vee> for the positive root at `root_index`.
inline Rational pairing(const RootSystem& rs, const Weight& lambda, std::size_t root_index)
{
	if (root_index >= rs.num_positive_roots())
		throw InvalidInput("positive root index " + std::to_string(root_index) + " out of range");
	if (lambda.size() != rs.rank())
		throw InvalidInput("weight has wrong length");
	const auto& row = rs.coroot_pairings(root_index);
	Rational s = 0;
	for (std::size_t i = 0; i < row.size(); ++i)
		if (row[i] != 0)
			s += lambda[i] * row[i];
	return s;
}

/// Half the sum of the positive roots; (1,...,1) in fundamental-weight coordinates.
inline Weight rho(const RootSystem& rs)
{
	return Weight{std::vector<Rational>(rs.rank(), Rational(1))};
}

inline int rho_pairing(const RootSystem& rs, std::size_t root_index)
{
	const auto& row = rs.coroot_pairings(root_index);
	return std::accumulate(row.begin(), row.end(), 0);
}

} // namespace flagflow
