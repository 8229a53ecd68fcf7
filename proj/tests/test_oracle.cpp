#include <catch2/catch_amalgamated.hpp>

#include "flagflow/oracle.hpp"

using namespace flagflow;
using namespace flagflow::oracle;
using F = LieFamily;

namespace {

FlowSolution a2_flow() { return make_flow(build_flag({F::A, 2}, {}), KahlerClass{{1, 2}}); }

FlowSolution corrupt_weight(FlowSolution fs)
{
	fs.terms[0].weight += 1;
	return fs;
}

FlowSolution corrupt_slope(FlowSolution fs)
{
	fs.terms.back().slope -= 1;
	return fs;
}

} // namespace

TEST_CASE("identities hold on honest flows")
{
	for (const auto& fs : {a2_flow(), make_flow(build_flag({F::A, 1}, {}), KahlerClass{{2}}),
	                       make_flow(build_flag({F::A, 2}, {}), KahlerClass{{2, 2}})})
	{
		CHECK(check_scalar_volume_identity(fs).pass);
		auto r = check_ricci_identity(fs);
		CHECK(r.exact.pass);
		CHECK(r.finite_difference.pass);
		CHECK(r.exact.counterexample.is_null());
	}
	auto fs = a2_flow();
	CHECK(ricci_norm_sq(fs, 0) == Rational(61, 9));
}

TEST_CASE("corrupted engines are caught with a serialized counterexample")
{
	for (const auto& bad : {corrupt_weight(a2_flow()), corrupt_slope(a2_flow())})
	{
		auto sv = check_scalar_volume_identity(bad);
		CHECK_FALSE(sv.pass);
		REQUIRE(sv.counterexample.is_object());
		CHECK(sv.counterexample["check"] == "scalar_volume_identity");
		CHECK(sv.counterexample["type"] == "A2");
		CHECK(sv.counterexample.contains("t"));
		CHECK(sv.counterexample["residual"] != "0");

		auto ri = check_ricci_identity(bad);
		CHECK_FALSE(ri.exact.pass);
		CHECK_FALSE(ri.finite_difference.pass);
		CHECK(ri.exact.counterexample["check"] == "ricci_identity_exact");
		CHECK(ri.finite_difference.counterexample["check"] == "ricci_identity_finite_difference");
	}
}

TEST_CASE("brute-force nef value")
{
	auto p2 = build_flag({F::A, 2}, {2});
	auto a = brute_nef(p2, DivisorClass{{1}});
	REQUIRE(a.value);
	CHECK(*a.value == 3);
	CHECK(a.certified);
	CHECK(*brute_nef(p2, DivisorClass{{2}}).value == Rational(3, 2));
	auto fl = build_flag({F::D, 4}, {1});
	CHECK(*brute_nef(fl, anticanonical_divisor(fl)).value == 1);

	// tau = 3/7 needs q = 7; a grid capped at q = 5 cannot certify it
	auto coarse = brute_nef(p2, DivisorClass{{7}}, 5);
	CHECK(coarse.inconclusive());
	auto fine = brute_nef(p2, DivisorClass{{7}}, 7);
	CHECK(fine.certified);
	CHECK(*fine.value == Rational(3, 7));
}

TEST_CASE("small suite runs and passes")
{
	SuiteConfig cfg;
	cfg.types = {{F::A, 1}};
	cfg.samples_per_instance = 2;
	auto rep = run_suite(cfg);
	CHECK(rep.exact_ok());
	CHECK(rep.floating_ok());
	CHECK(rep.wall_seconds < 1.0);
	CHECK(rep.instances == 4);
}

TEST_CASE("suite is deterministic for a fixed seed")
{
	SuiteConfig cfg;
	cfg.types = {{F::A, 2}, {F::B, 2}, {F::G, 2}};
	auto a = run_suite(cfg).to_json();
	auto b = run_suite(cfg).to_json();
	a.erase("wall_seconds");
	b.erase("wall_seconds");
	CHECK(a == b);
}

TEST_CASE("a coarse finite-difference step does not affect the exact checks")
{
	SuiteConfig cfg;
	cfg.types = {{F::A, 2}, {F::C, 3}};
	cfg.fd_step = 1e-2;
	auto rep = run_suite(cfg);
	CHECK(rep.exact_ok());
	CHECK_FALSE(rep.at("ricci_identity_finite_difference").exact);
}

TEST_CASE("config validation")
{
	SuiteConfig cfg;
	cfg.samples_per_instance = 1;
	CHECK_THROWS_AS(run_suite(cfg), InvalidInput);
	cfg = SuiteConfig{};
	cfg.fd_step = 0;
	CHECK_THROWS_AS(run_suite(cfg), InvalidInput);
}

TEST_CASE("failing tallies keep the first counterexample")
{
	CheckTally t;
	CheckOutcome ok;
	CheckOutcome bad;
	bad.fail(json{{"which", 1}});
	CheckOutcome bad2;
	bad2.fail(json{{"which", 2}});
	t.record(ok);
	t.record(bad);
	t.record(bad2);
	CHECK(t.passed == 1);
	CHECK(t.failed == 2);
	CHECK(t.counterexample["which"] == 1);

	SuiteReport rep;
	rep.checks["x"] = t;
	CHECK_FALSE(rep.exact_ok());
	CHECK(rep.to_json()["checks"]["x"].contains("counterexample"));
}
