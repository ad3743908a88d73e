#pragma once

#include "graycode/errors.hpp"
#include "graycode/flip_graph.hpp"
#include "graycode/flips.hpp"
#include "graycode/instance.hpp"
#include "graycode/objects.hpp"
#include "graycode/reductions.hpp"
#include "graycode/solver.hpp"
#include "graycode/ucycle.hpp"
#include "graycode/verify.hpp"
