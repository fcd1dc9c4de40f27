#pragma once

#include "ncphase/algebra.hpp"
#include "ncphase/bounds.hpp"
#include "ncphase/constants.hpp"
#include "ncphase/corrections.hpp"
#include "ncphase/errors.hpp"
#include "ncphase/hydrogen.hpp"
#include "ncphase/oscillator.hpp"
#include "ncphase/quadrature.hpp"
#include "ncphase/rational.hpp"
