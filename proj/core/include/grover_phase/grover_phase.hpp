#pragma once

#include "grover_phase/analysis.hpp"
#include "grover_phase/equivalence.hpp"
#include "grover_phase/model.hpp"
#include "grover_phase/numerics.hpp"
#include "grover_phase/operators.hpp"
#include "grover_phase/statevector_engine.hpp"
#include "grover_phase/subspace_engine.hpp"
