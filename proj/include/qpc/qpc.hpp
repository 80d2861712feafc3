#pragma once

// Umbrella header: pulse construction, spectra, correlation analysis,
// compression-gain measurement and the phase-invariant quadrature receiver.

#include "qpc/compression.hpp"
#include "qpc/correlation.hpp"
#include "qpc/envelope_ops.hpp"
#include "qpc/errors.hpp"
#include "qpc/grid.hpp"
#include "qpc/io.hpp"
#include "qpc/numerics.hpp"
#include "qpc/pulses.hpp"
#include "qpc/receiver.hpp"
#include "qpc/rng.hpp"
#include "qpc/special_functions.hpp"
#include "qpc/spectra.hpp"
