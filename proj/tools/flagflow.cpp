#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flagflow/cli.hpp"

using namespace flagflow;
using flagflow::cli::JobDescriptor;

namespace {

struct DescriptorFlags {
	std::string job_file;
	std::string type;
	std::optional<int> rank;
	std::optional<std::string> theta;
	std::optional<std::vector<std::string>> klass;
	std::optional<std::vector<std::string>> divisor;
	std::optional<std::string> t;
	std::optional<int> samples;
	std::optional<std::string> t_max_fraction;
};

void add_descriptor_options(CLI::App* cmd, DescriptorFlags& f, bool with_class, bool with_sampling)
{
	cmd->add_option("--job", f.job_file, "JSON job descriptor file");
	cmd->add_option("--type", f.type, "Lie family (A..G) or full type such as A2");
	cmd->add_option("--rank", f.rank, "rank of the root system");
	cmd->add_option("--theta", f.theta, "comma-separated 1-based simple roots in Theta");
	if (with_class)
		cmd->add_option("--class", f.klass, "class integrals b_alpha, comma-separated p/q")->delimiter(',');
	cmd->add_option("--divisor", f.divisor, "divisor coefficients, comma-separated p/q")->delimiter(',');
	if (with_sampling)
	{
		cmd->add_option("--t", f.t, "single time to evaluate");
		cmd->add_option("--samples", f.samples, "number of trajectory samples");
		cmd->add_option("--t-max-fraction", f.t_max_fraction, "sample up to this fraction of T");
	}
}

std::vector<int> parse_theta(const std::string& s)
{
	std::vector<int> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		if (item.find_first_not_of(" \t") == std::string::npos)
			continue;
		try
		{
			std::size_t pos = 0;
			int v = std::stoi(item, &pos);
			if (item.find_first_not_of(" \t", pos) != std::string::npos)
				throw std::invalid_argument(item);
			out.push_back(v);
		}
		catch (const std::exception&)
		{
			throw InvalidInput("malformed theta entry \"" + item + "\"");
		}
	}
	return out;
}

JobDescriptor resolve(const DescriptorFlags& f)
{
	JobDescriptor job;
	if (!f.job_file.empty())
	{
		std::ifstream in(f.job_file);
		if (!in)
			throw InvalidInput("cannot open job file " + f.job_file);
		json j;
		try
		{
			j = json::parse(in);
		}
		catch (const json::parse_error& e)
		{
			throw InvalidInput(std::string("job file is not valid JSON: ") + e.what());
		}
		job = JobDescriptor::from_json(j);
	}
	if (!f.type.empty())
	{
		if (f.type.size() > 1)
		{
			auto lt = parse_lie_type(f.type);
			job.lie_family = std::string(1, family_letter(lt.family));
			job.rank = lt.rank;
		}
		else
			job.lie_family = f.type;
	}
	if (f.rank)
		job.rank = *f.rank;
	if (f.theta)
		job.theta = parse_theta(*f.theta);
	if (f.klass)
		job.klass = f.klass;
	if (f.divisor)
		job.divisor = f.divisor;
	if (f.t)
		job.t = f.t;
	if (f.samples)
		job.samples = f.samples;
	if (f.t_max_fraction)
		job.t_max_fraction = f.t_max_fraction;
	if (job.lie_family.empty() || job.rank == 0)
		throw InvalidInput("a Lie type is required (--type and --rank, or --job)");
	return job;
}

void write_file(const std::string& path, const std::string& content)
{
	std::ofstream out(path);
	if (!out)
		throw InvalidInput("cannot write " + path);
	out << content;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact Kahler-Ricci flow and divisor invariants on rational homogeneous varieties"};
	app.set_version_flag("--version", std::string(cli::version));
	app.require_subcommand(1);

	DescriptorFlags describe_flags, flow_flags, inv_flags;
	std::string format = "json";
	std::string output;
	std::optional<int> lct_m;

	auto* describe = app.add_subcommand("describe", "root system and flag variety data");
	add_descriptor_options(describe, describe_flags, false, false);

	auto* flow = app.add_subcommand("flow", "flow trajectory, singular time, curvature and bounds");
	add_descriptor_options(flow, flow_flags, true, true);
	flow->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
	flow->add_option("--output", output, "write the CSV trajectory here (plus <file>.exact.json)");

	auto* inv = app.add_subcommand("invariants", "nef value, degree, T(D), C(D) and related bounds");
	add_descriptor_options(inv, inv_flags, false, false);
	inv->add_option("--lct-m", lct_m, "integer m with mD integral; adds the lct lower bound");

	oracle::SuiteConfig cfg;
	std::string check_type;
	std::optional<int> check_rank;
	auto* check = app.add_subcommand("check", "run the verification suite");
	check->add_option("--seed", cfg.seed, "random seed");
	check->add_option("--samples", cfg.samples_per_instance, "sampled times per instance");
	check->add_option("--classes", cfg.classes_per_flag, "random classes per flag");
	check->add_option("--max-coeff", cfg.max_coeff, "bound for random numerators/denominators");
	check->add_option("--fd-step", cfg.fd_step, "finite-difference step");
	check->add_option("--fd-tol", cfg.fd_tol, "finite-difference relative tolerance");
	check->add_option("--type", check_type, "restrict to one type, e.g. A2 (or family with --rank)");
	check->add_option("--rank", check_rank, "rank when --type is a family letter");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		int rc = app.exit(e);
		return rc == 0 ? 0 : cli::exit_usage;
	}

	try
	{
		if (*describe)
		{
			auto job = resolve(describe_flags);
			std::cout << cli::envelope(job, cli::cmd_describe(job)).dump(2) << "\n";
		}
		else if (*flow)
		{
			auto job = resolve(flow_flags);
			auto out = cli::cmd_flow(job);
			if (!output.empty())
			{
				write_file(output, out.csv);
				write_file(output + ".exact.json", out.sidecar.dump(2) + "\n");
			}
			if (format == "csv")
				std::cout << out.csv;
			else
				std::cout << cli::envelope(job, out.result).dump(2) << "\n";
		}
		else if (*inv)
		{
			auto job = resolve(inv_flags);
			std::cout << cli::envelope(job, cli::cmd_invariants(job, lct_m)).dump(2) << "\n";
		}
		else if (*check)
		{
			if (!check_type.empty())
			{
				SimpleLieType t = check_type.size() > 1 ? parse_lie_type(check_type)
				                                        : SimpleLieType{parse_family(check_type), check_rank.value_or(0)};
				t.validate();
				cfg.types = {t};
			}
			auto report = oracle::run_suite(cfg);
			json env{{"input", json{{"seed", cfg.seed}, {"samples_per_instance", cfg.samples_per_instance},
			                        {"classes_per_flag", cfg.classes_per_flag}, {"fd_step", cfg.fd_step},
			                        {"fd_tol", cfg.fd_tol}}},
			         {"result", report.to_json()},
			         {"version", cli::version}};
			std::cout << env.dump(2) << "\n";
			return report.exact_ok() ? cli::exit_ok : cli::exit_check_failed;
		}
	}
	catch (const InvalidInput& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return cli::exit_usage;
	}
	catch (const DomainError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return cli::exit_domain;
	}
	catch (const std::exception& e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return cli::exit_internal;
	}
	return cli::exit_ok;
}
