#pragma once

/*
  Command implementations behind the flagflow executable. Each command maps
  a JobDescriptor to a JSON result; the executable wraps results as

      {"input": <descriptor echo>, "result": <command result>, "version": "..."}

  Exit codes used by the executable: 0 success, 1 failed verification
  (check), 2 usage error, 3 domain rejection, 4 internal assertion.
*/

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagflow/dimcount.hpp"
#include "flagflow/divisor_invariants.hpp"
#include "flagflow/errors.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/json_io.hpp"
#include "flagflow/oracle.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace flagflow::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_domain = 3, exit_internal = 4 };

struct JobDescriptor {
	std::string lie_family;
	int rank = 0;
	std::vector<int> theta;
	std::optional<std::vector<std::string>> klass;
	std::optional<std::vector<std::string>> divisor;
	std::optional<std::string> t;
	std::optional<int> samples;
	std::optional<std::string> t_max_fraction;

	SimpleLieType lie_type() const
	{
		SimpleLieType type{parse_family(lie_family), rank};
		type.validate();
		return type;
	}

	ParabolicFlag flag() const { return build_flag(lie_type(), theta); }

	json to_json() const
	{
		json j{{"lie_family", lie_family}, {"rank", rank}, {"theta", theta}};
		if (klass)
			j["class"] = *klass;
		if (divisor)
			j["divisor"] = *divisor;
		if (t)
			j["t"] = *t;
		if (samples)
			j["samples"] = *samples;
		if (t_max_fraction)
			j["t_max_fraction"] = *t_max_fraction;
		return j;
	}

	static JobDescriptor from_json(const json& j)
	{
		if (!j.is_object())
			throw InvalidInput("job descriptor must be a JSON object");
		auto rational_list = [&](const char* key) {
			std::vector<std::string> out;
			for (const auto& v : j.at(key))
				out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
			return out;
		};
		JobDescriptor d;
		try
		{
			d.lie_family = j.at("lie_family").get<std::string>();
			d.rank = j.at("rank").get<int>();
			if (j.contains("theta"))
				d.theta = j.at("theta").get<std::vector<int>>();
			if (j.contains("class"))
				d.klass = rational_list("class");
			if (j.contains("divisor"))
				d.divisor = rational_list("divisor");
			if (j.contains("t"))
				d.t = j.at("t").is_string() ? j.at("t").get<std::string>() : j.at("t").dump();
			if (j.contains("samples"))
				d.samples = j.at("samples").get<int>();
			if (j.contains("t_max_fraction"))
				d.t_max_fraction = j.at("t_max_fraction").is_string() ? j.at("t_max_fraction").get<std::string>()
				                                                      : j.at("t_max_fraction").dump();
		}
		catch (const json::exception& e)
		{
			throw InvalidInput(std::string("malformed job descriptor: ") + e.what());
		}
		return d;
	}
};

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& v)
{
	std::vector<Rational> out;
	for (const auto& s : v)
		out.push_back(parse_rational(s));
	return out;
}

inline json envelope(const JobDescriptor& job, json result)
{
	return json{{"input", job.to_json()}, {"result", std::move(result)}, {"version", version}};
}

namespace detail {

inline json int_vector(const std::vector<Rational>& v)
{
	json out = json::array();
	for (const auto& q : v)
		out.push_back(is_integer(q) ? json(numerator(q).convert_to<long long>()) : json(to_string(q)));
	return out;
}

} // namespace detail

inline json cmd_describe(const JobDescriptor& job)
{
	const ParabolicFlag flag = job.flag();
	const auto& rs = flag.root_system;

	json roots = json::array();
	for (const auto& k : rs.positive_roots())
		roots.push_back(k);
	json comp = json::array();
	for (auto r : flag.comp_pos_roots)
		comp.push_back(r);

	Rational v0 = 1;
	for (auto r : flag.comp_pos_roots)
		v0 *= pairing(rs, flag.delta_p, r) / rho_pairing(rs, r);

	return json{
	    {"type", type_name(rs)},
	    {"cartan", rs.cartan()},
	    {"symmetrizer", rs.symmetrizer()},
	    {"theta", flag.theta_one_based()},
	    {"complement", flag.complement_one_based()},
	    {"positive_roots", roots},
	    {"comp_pos_roots", comp},
	    {"n", flag.dimension()},
	    {"delta_p", detail::int_vector(flag.delta_p.coords)},
	    {"fano", detail::int_vector(flag.fano_coeffs)},
	    {"canonical_divisor", detail::int_vector(canonical_divisor(flag).coeffs)},
	    {"V0_coeff", to_json(v0)},
	};
}

struct FlowOutput {
	json result;
	/// Trajectory table, decimal values.
	std::string csv;
	/// Same table with exact "p/q" entries.
	json sidecar;
};

inline const std::vector<std::string> csv_columns = {"t", "R", "ricci_norm_sq", "vol_coeff", "R_lower", "R_upper"};

inline std::vector<Rational> sample_times(const JobDescriptor& job, const Rational& T)
{
	if (job.t)
		return {parse_rational(*job.t)};
	const int samples = job.samples.value_or(10);
	if (samples < 1)
		throw InvalidInput("samples must be >= 1");
	const Rational frac = job.t_max_fraction ? parse_rational(*job.t_max_fraction) : Rational(99, 100);
	if (frac <= 0 || frac >= 1)
		throw InvalidInput("t_max_fraction must lie in (0, 1)");
	std::vector<Rational> ts;
	for (int k = 0; k < samples; ++k)
		ts.push_back(samples == 1 ? Rational(0) : frac * T * Rational(k, samples - 1));
	return ts;
}

inline FlowOutput cmd_flow(const JobDescriptor& job)
{
	if (job.klass.has_value() == job.divisor.has_value())
		throw InvalidInput("flow needs exactly one of class or divisor");
	const ParabolicFlag flag = job.flag();
	const KahlerClass b0{parse_rationals(job.klass ? *job.klass : *job.divisor)};
	const FlowSolution fs = make_flow(flag, b0);
	const bool ke = is_kahler_einstein(fs);
	const Rational C = ricci_lower_constant(fs);
	const auto diam = diameter_bound(fs);

	FlowOutput out;
	json samples = json::array();
	std::ostringstream csv;
	for (std::size_t i = 0; i < csv_columns.size(); ++i)
		csv << (i ? "," : "") << csv_columns[i];
	csv << "\n";
	json rows = json::array();

	for (const auto& t : sample_times(job, fs.singular_time))
	{
		const auto b = bounds_report(fs, t);
		const auto lam = lambda1_bounds(fs, t);
		json s{
		    {"t", to_json(t)},
		    {"class", to_json(class_at(fs, t).b)},
		    {"R", to_json(b.scalar)},
		    {"ricci_norm_sq", to_json(b.ricci_norm_sq)},
		    {"vol_coeff", to_json(b.vol.coeff)},
		    {"R_times_T_minus_t", to_json(b.scalar * (fs.singular_time - t))},
		    {"bounds", to_json(b)},
		    {"lambda1", json{{"lower", to_json(lam.lower)}, {"upper", to_json(lam.upper)}}},
		};
		samples.push_back(std::move(s));

		const std::vector<Rational> row = {t, b.scalar, b.ricci_norm_sq, b.vol.coeff, b.scalar_lower, b.scalar_upper};
		for (std::size_t i = 0; i < row.size(); ++i)
			csv << (i ? "," : "") << to_decimal(row[i]);
		csv << "\n";
		rows.push_back(to_json(row));
	}

	out.result = json{
	    {"T", to_json(fs.singular_time)},
	    {"n", fs.dimension()},
	    {"kahler_einstein", ke},
	    {"C_omega0", to_json(C)},
	    {"ricci_lower_bound", to_json(1 / C)},
	    {"diameter", json{{"radicand", to_json(diam.radicand)},
	                      {"bound", "pi*sqrt(" + to_string(diam.radicand) + ")"},
	                      {"approx", diam.value}}},
	    {"lambda1_anticanonical_dim", integer_json(lambda1_bounds(fs, 0).anticanonical_sections)},
	    {"Rm_bound", riemann_bound_symbolic},
	    {"samples", samples},
	};
	if (job.divisor)
		out.result["tau"] = to_json(1 / fs.singular_time);
	out.csv = csv.str();
	out.sidecar = json{{"columns", csv_columns}, {"rows", rows}, {"T", to_json(fs.singular_time)}};
	return out;
}

inline json cmd_invariants(const JobDescriptor& job, std::optional<int> lct_m = std::nullopt)
{
	if (!job.divisor)
		throw InvalidInput("invariants needs a divisor");
	if (job.klass)
		throw InvalidInput("invariants takes a divisor, not a class");
	const ParabolicFlag flag = job.flag();
	const DivisorClass d{parse_rationals(*job.divisor)};
	json result = to_json(invariants_of(flag, d));
	result["n"] = flag.dimension();
	if (lct_m)
		result["lct_lower"] = to_json(lct_lower(flag, d, *lct_m));
	return result;
}

inline json cmd_check(const oracle::SuiteConfig& cfg)
{
	return oracle::run_suite(cfg).to_json();
}

} // namespace flagflow::cli
