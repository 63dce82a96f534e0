#pragma once

#include "quartic/cubic.hpp"
#include "quartic/explicit.hpp"
#include "quartic/generators.hpp"
#include "quartic/oracle.hpp"
#include "quartic/polish.hpp"
#include "quartic/poly.hpp"
#include "quartic/quartic.hpp"
#include "quartic/root_set.hpp"
#include "quartic/solve.hpp"
