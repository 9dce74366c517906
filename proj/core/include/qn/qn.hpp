#pragma once

#include "qn/coupling.hpp"
#include "qn/errors.hpp"
#include "qn/field_transfer.hpp"
#include "qn/noise_budget.hpp"
#include "qn/plant.hpp"
#include "qn/quadrature.hpp"
#include "qn/readout.hpp"
#include "qn/roots.hpp"
#include "qn/types.hpp"
