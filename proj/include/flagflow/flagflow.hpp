#pragma once

#include "flagflow/errors.hpp"
#include "flagflow/rational.hpp"
#include "flagflow/rootsys.hpp"
#include "flagflow/parabolic.hpp"
#include "flagflow/dimcount.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/divisor_invariants.hpp"
#include "flagflow/json_io.hpp"
#include "flagflow/oracle.hpp"
