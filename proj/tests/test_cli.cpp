#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "flagflow/cli.hpp"

using namespace flagflow;
using namespace flagflow::cli;

namespace {

JobDescriptor job(std::string fam, int rank, std::vector<int> theta)
{
	JobDescriptor j;
	j.lie_family = std::move(fam);
	j.rank = rank;
	j.theta = std::move(theta);
	return j;
}

/// Every string that looks like a rational must round-trip exactly.
void check_round_trip(const json& j, int& seen)
{
	if (j.is_string())
	{
		const auto s = j.get<std::string>();
		Rational q;
		try
		{
			q = parse_rational(s);
		}
		catch (const InvalidInput&)
		{
			return;
		}
		++seen;
		CHECK(to_string(q) == s);
	}
	else if (j.is_structured())
		for (const auto& v : j)
			check_round_trip(v, seen);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
	std::vector<std::vector<std::string>> rows;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line))
	{
		std::vector<std::string> cells;
		std::istringstream ls(line);
		std::string cell;
		while (std::getline(ls, cell, ','))
			cells.push_back(cell);
		rows.push_back(cells);
	}
	return rows;
}

} // namespace

TEST_CASE("describe")
{
	auto p2 = cmd_describe(job("A", 2, {2}));
	CHECK(p2["n"] == 2);
	CHECK(p2["delta_p"] == json::array({3, 0}));
	CHECK(p2["fano"] == json::array({3}));
	CHECK(p2["canonical_divisor"] == json::array({-3}));
	CHECK(p2["type"] == "A2");

	auto p1 = cmd_describe(job("A", 1, {}));
	CHECK(p1["n"] == 1);
	CHECK(p1["fano"] == json::array({2}));

	CHECK_THROWS_WITH(cmd_describe(job("A", 2, {1, 2})), Catch::Matchers::ContainsSubstring("flag variety is a point"));
	CHECK_THROWS_AS(cmd_describe(job("Q", 2, {})), InvalidInput);
	CHECK_THROWS_AS(cmd_describe(job("B", 1, {})), InvalidInput);
}

TEST_CASE("flow")
{
	auto j = job("A", 2, {});
	j.klass = std::vector<std::string>{"1", "2"};
	j.t = "0";
	auto out = cmd_flow(j).result;
	CHECK(out["T"] == "1/2");
	CHECK(out["samples"][0]["R"] == "13/3");
	CHECK(out["kahler_einstein"] == false);
	CHECK(out["diameter"]["radicand"] == "10");

	auto d = job("A", 2, {2});
	d.divisor = std::vector<std::string>{"1"};
	auto dout = cmd_flow(d).result;
	CHECK(dout["T"] == "1/3");
	CHECK(dout["tau"] == "3");

	auto ke = job("A", 2, {});
	ke.klass = std::vector<std::string>{"2", "2"};
	ke.samples = 5;
	auto kout = cmd_flow(ke).result;
	CHECK(kout["kahler_einstein"] == true);
	REQUIRE(kout["samples"].size() == 5);
	for (const auto& s : kout["samples"])
	{
		CHECK(s["R_times_T_minus_t"] == "3");
		CHECK(s["bounds"]["R_equals_upper"] == true);
	}
	CHECK(kout["samples"].back()["t"] == "99/100");
}

TEST_CASE("flow rejects bad descriptors")
{
	auto j = job("A", 2, {});
	CHECK_THROWS_AS(cmd_flow(j), InvalidInput);
	j.klass = std::vector<std::string>{"1", "2"};
	j.divisor = std::vector<std::string>{"1", "2"};
	CHECK_THROWS_AS(cmd_flow(j), InvalidInput);
	j.divisor.reset();
	j.t = "1/2";
	CHECK_THROWS_AS(cmd_flow(j), DomainError);
	j.t.reset();
	j.t_max_fraction = "1";
	CHECK_THROWS_AS(cmd_flow(j), InvalidInput);
	j.t_max_fraction.reset();
	j.klass = std::vector<std::string>{"1", "-2"};
	CHECK_THROWS_AS(cmd_flow(j), DomainError);
	j.klass = std::vector<std::string>{"1", "x"};
	CHECK_THROWS_AS(cmd_flow(j), InvalidInput);
}

TEST_CASE("invariants")
{
	auto p2 = job("A", 2, {2});
	p2.divisor = std::vector<std::string>{"1"};
	auto r = cmd_invariants(p2);
	CHECK(r["tau"] == "3");
	CHECK(r["T"] == "1/3");
	CHECK(r["C"] == "2/3");
	CHECK(r["degree"] == "1");
	CHECK(r["dimV"] == 3);
	CHECK_FALSE(r.contains("borel_only_bounds"));

	auto p1 = job("A", 1, {});
	p1.divisor = std::vector<std::string>{"1"};
	auto b = cmd_invariants(p1)["borel_only_bounds"];
	CHECK(b["seshadri_upper"] == "1");
	CHECK(b["gromov_width_upper"] == "1");
	CHECK(b["sympl_radius_upper"] == "1");

	auto fl = job("A", 2, {});
	fl.divisor = std::vector<std::string>{"1", "1"};
	auto lct = cmd_invariants(fl, 1)["lct_lower"];
	CHECK(lct["bound"] == "1");
	CHECK(lct["klt"] == false);
	CHECK(lct["lc"] == true);

	CHECK_THROWS_WITH(cmd_invariants(p2, 1), Catch::Matchers::ContainsSubstring("Borel"));
	auto rat = job("A", 2, {2});
	rat.divisor = std::vector<std::string>{"1/2"};
	CHECK(cmd_invariants(rat)["dimV"].is_null());
}

TEST_CASE("emitted rationals round-trip")
{
	auto j = job("B", 3, {2});
	j.klass = std::vector<std::string>{"3/7", "5/2"};
	j.samples = 6;
	int seen = 0;
	auto out = cmd_flow(j);
	check_round_trip(out.result, seen);
	check_round_trip(out.sidecar, seen);
	auto d = job("C", 3, {});
	d.divisor = std::vector<std::string>{"1", "2", "3"};
	check_round_trip(cmd_invariants(d, 1), seen);
	check_round_trip(cmd_describe(d), seen);
	CHECK(seen > 100);
}

TEST_CASE("CSV decimals agree with the exact sidecar to 12 significant digits")
{
	auto j = job("G", 2, {});
	j.klass = std::vector<std::string>{"7/3", "10/9"};
	j.samples = 9;
	auto out = cmd_flow(j);
	auto rows = parse_csv(out.csv);
	REQUIRE(rows.size() == 10);
	CHECK(rows[0] == std::vector<std::string>{"t", "R", "ricci_norm_sq", "vol_coeff", "R_lower", "R_upper"});
	const auto& exact = out.sidecar["rows"];
	REQUIRE(exact.size() == 9);
	for (std::size_t r = 0; r < 9; ++r)
		for (std::size_t c = 0; c < 6; ++c)
		{
			const Rational q = parse_rational(exact[r][c].get<std::string>());
			const double dec = std::stod(rows[r + 1][c]);
			const double ex = to_double(q);
			if (ex == 0)
				CHECK(dec == 0);
			else
				CHECK(std::abs(dec - ex) <= 5e-12 * std::abs(ex));
			// the rendered string is exactly the 12-digit rounding
			CHECK(rows[r + 1][c] == to_decimal(q, 12));
		}
}

TEST_CASE("job descriptor JSON")
{
	auto j = JobDescriptor::from_json(json::parse(R"({"lie_family":"A","rank":2,"theta":[],"class":["1",2],"t":"1/4"})"));
	CHECK(j.klass == std::vector<std::string>{"1", "2"});
	auto back = JobDescriptor::from_json(j.to_json());
	CHECK(back.to_json() == j.to_json());
	CHECK(envelope(j, json{{"x", 1}})["version"] == version);
	CHECK_THROWS_AS(JobDescriptor::from_json(json::parse(R"({"rank":2})")), InvalidInput);
	CHECK_THROWS_AS(JobDescriptor::from_json(json::parse("[1]")), InvalidInput);
}
