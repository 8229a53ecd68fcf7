#pragma once

// JSON renderings. Exact rationals are always strings "p/q" (or "p").

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "flagflow/divisor_invariants.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"

namespace flagflow {

using json = nlohmann::json;

inline json to_json(const Rational& q) { return to_string(q); }
inline json to_json(const Integer& z) { return z.str(); }

/// JSON number when it fits in 63 bits, decimal string otherwise.
inline json integer_json(const Integer& z)
{
	if (z >= 0 && z <= Integer(std::numeric_limits<std::int64_t>::max()))
		return z.convert_to<std::int64_t>();
	return z.str();
}

inline json to_json(const std::vector<Rational>& v) { return to_strings(v); }

inline json to_json(const Weight& w) { return to_strings(w.coords); }

inline std::string type_name(const RootSystem& rs) { return rs.lie_type() ? rs.lie_type()->name() : "custom"; }

/// Enough to rebuild the flag: type and 1-based theta.
inline json flag_key(const ParabolicFlag& flag)
{
	return json{{"type", type_name(flag.root_system)}, {"theta", flag.theta_one_based()}};
}

/// A flow instance, serialized so it can be replayed.
inline json instance_json(const FlowSolution& fs)
{
	json j = flag_key(fs.flag);
	j["class"] = to_json(fs.initial.b);
	j["T"] = to_json(fs.singular_time);
	return j;
}

inline json to_json(const ScaledVolume& v)
{
	return json{{"coeff", to_json(v.coeff)}, {"n", v.n}, {"approx", v.approx()}};
}

inline json to_json(const BoundsReport& b)
{
	return json{
	    {"R_lower", to_json(b.scalar_lower)},
	    {"R_upper", to_json(b.scalar_upper)},
	    {"ricci_norm_sq_lower", to_json(b.ricci_sq_lower)},
	    {"ricci_norm_sq_upper", to_json(b.ricci_sq_upper)},
	    {"vol_lower", to_json(b.vol_lower)},
	    {"vol_upper", to_json(b.vol_upper)},
	    {"R_in_bounds", b.scalar_ok},
	    {"ricci_norm_sq_in_bounds", b.ricci_ok},
	    {"vol_in_bounds", b.volume_ok},
	    {"R_equals_upper", b.scalar_saturates_upper},
	    {"R_equals_lower", b.scalar_saturates_lower},
	    {"Rm_bound", b.riemann_bound},
	};
}

inline json to_json(const BorelBounds& b)
{
	return json{
	    {"seshadri_upper", to_json(b.seshadri_upper)},
	    {"gromov_width_upper", to_json(b.gromov_width_upper)},
	    {"kahler_radius_upper", to_string(b.kahler_radius_pi) + "*pi"},
	    {"kahler_radius_upper_pi_coeff", to_json(b.kahler_radius_pi)},
	    {"sympl_radius_upper", to_json(b.sympl_radius_upper)},
	};
}

inline json to_json(const InvariantReport& r)
{
	json j{
	    {"tau", to_json(r.tau)},
	    {"T", to_json(r.T_script)},
	    {"C", to_json(r.C_script)},
	    {"degree", to_json(r.degree)},
	    {"dimV", r.dimV ? integer_json(*r.dimV) : json(nullptr)},
	};
	if (r.lambda1_lower)
		j["lambda1"] = json{{"lower", to_json(*r.lambda1_lower)}, {"upper", to_json(*r.lambda1_upper)}};
	if (r.borel_only_bounds)
		j["borel_only_bounds"] = to_json(*r.borel_only_bounds);
	return j;
}

inline json to_json(const LctBound& b)
{
	return json{{"bound", to_json(b.bound)}, {"C_mD", to_json(b.C_of_mD)}, {"klt", b.klt}, {"lc", b.lc}};
}

} // namespace flagflow
