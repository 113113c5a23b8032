#pragma once

// Umbrella header: closed-form construction, verification and
// canonicalization of quadruples of rank-1 Hermitian projectors with
// sum_i alpha_i P_i = I, and of the equivalent locally scalar star-graph
// representations in dimension (2; 1,1,1,1).
//
// representation_file.hpp (JSON serialization) is not included here because
// it pulls in nlohmann/json; include it directly where needed.

#include "d4rep/analysis.hpp"
#include "d4rep/character.hpp"
#include "d4rep/constructor.hpp"
#include "d4rep/error.hpp"
#include "d4rep/graphrep.hpp"
#include "d4rep/mat2.hpp"
#include "d4rep/oracle.hpp"
#include "d4rep/rng.hpp"
#include "d4rep/tolerances.hpp"
