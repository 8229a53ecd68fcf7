#pragma once

// Exact arithmetic used throughout flagflow.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "flagflow/errors.hpp"

namespace flagflow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
	if (is_integer(q))
		return numerator(q).str();
	return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Decimal rendering with `digits` significant digits (plotting only; lossy).
inline std::string to_decimal(const Rational& q, int digits = 12)
{
	using Dec = boost::multiprecision::cpp_dec_float_50;
	Dec d = Dec(numerator(q)) / Dec(denominator(q));
	return d.str(digits, std::ios_base::fmtflags(0));
}

namespace detail {

inline Integer parse_integer(std::string_view s, std::string_view whole)
{
	if (s.empty())
		throw InvalidInput("malformed rational \"" + std::string(whole) + "\"");
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			throw InvalidInput("malformed rational \"" + std::string(whole) + "\"");
	return Integer(std::string(s));
}

} // namespace detail

/**
 * Parse an exact rational. Accepted forms: "p", "p/q", and finite decimals
 * such as "0.25" (converted exactly). A leading sign is allowed.
 */
inline Rational parse_rational(std::string_view text)
{
	std::string_view s = text;
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);

	bool negative = false;
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
	{
		negative = s.front() == '-';
		s.remove_prefix(1);
	}

	Rational value;
	if (auto slash = s.find('/'); slash != std::string_view::npos)
	{
		Integer num = detail::parse_integer(s.substr(0, slash), text);
		Integer den = detail::parse_integer(s.substr(slash + 1), text);
		if (den == 0)
			throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
		value = Rational(num, den);
	}
	else if (auto dot = s.find('.'); dot != std::string_view::npos)
	{
		auto int_part = s.substr(0, dot);
		auto frac_part = s.substr(dot + 1);
		if (int_part.empty() && frac_part.empty())
			throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
		Integer ip = int_part.empty() ? Integer(0) : detail::parse_integer(int_part, text);
		Integer fp = frac_part.empty() ? Integer(0) : detail::parse_integer(frac_part, text);
		Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
		value = Rational(ip) + Rational(fp, scale);
	}
	else
	{
		value = Rational(detail::parse_integer(s, text));
	}
	return negative ? Rational(-value) : value;
}

inline Integer factorial(unsigned n)
{
	Integer r = 1;
	for (unsigned i = 2; i <= n; ++i)
		r *= i;
	return r;
}

inline std::vector<std::string> to_strings(const std::vector<Rational>& v)
{
	std::vector<std::string> out;
	out.reserve(v.size());
	for (const auto& q : v)
		out.push_back(to_string(q));
	return out;
}

} // namespace flagflow
