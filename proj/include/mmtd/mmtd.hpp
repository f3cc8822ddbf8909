#pragma once

#include "mmtd/errors.hpp"
#include "mmtd/case_io.hpp"
#include "mmtd/grid_graph.hpp"
#include "mmtd/dc_core.hpp"
#include "mmtd/attack_lab.hpp"
#include "mmtd/mtd_engine.hpp"
#include "mmtd/sim_harness.hpp"
