// SPDX-License-Identifier: Apache-2.0
//
// Population loop shared by the salp-swarm and particle-swarm optimizers.

#pragma once

#include "vaamoo/emssa.hpp"

namespace vaamoo::detail {

enum class SwarmKind { Emssa, Mssa, Mopso };

RunResult run_swarm(const Scenario& s, const OptimizerParams& params, SwarmKind kind);

}  // namespace vaamoo::detail
