#pragma once

#include "genpow/constructions.hpp"
#include "genpow/enumeration.hpp"
#include "genpow/experiments.hpp"
#include "genpow/graph.hpp"
#include "genpow/io.hpp"
#include "genpow/matrix_spectral.hpp"
#include "genpow/parity.hpp"
#include "genpow/scc.hpp"
#include "genpow/tensor.hpp"
