#pragma once

#include "grundy/bench.hpp"
#include "grundy/graph.hpp"
#include "grundy/io.hpp"
#include "grundy/oracles.hpp"
#include "grundy/realizer.hpp"
#include "grundy/reduction.hpp"
#include "grundy/stair.hpp"
