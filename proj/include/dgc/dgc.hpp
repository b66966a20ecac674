#pragma once

#include "dgc/errors.hpp"
#include "dgc/tolerances.hpp"
#include "dgc/numerics.hpp"
#include "dgc/graph.hpp"
#include "dgc/connectivity.hpp"
#include "dgc/kernels.hpp"
#include "dgc/riesz.hpp"
#include "dgc/coarsen.hpp"
#include "dgc/harness.hpp"
#include "dgc/io.hpp"
#include "dgc/cli.hpp"
