#pragma once

#include "expquad/errors.hpp"
#include "expquad/harness.hpp"
#include "expquad/integrators.hpp"
#include "expquad/phi.hpp"
#include "expquad/problem.hpp"
#include "expquad/quadrature.hpp"
#include "expquad/space_disc.hpp"
#include "expquad/verify.hpp"
