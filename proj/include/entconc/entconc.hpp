#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "measures.hpp"
#include "optimize.hpp"
#include "protocol.hpp"
#include "state_json.hpp"
#include "states.hpp"
#include "tolerances.hpp"
