#pragma once

#include "ncphase/algebra/generator.hpp"
#include "ncphase/algebra/observables.hpp"
#include "ncphase/algebra/operator_expr.hpp"
#include "ncphase/algebra/param_scalar.hpp"
#include "ncphase/algebra/suite.hpp"
