#pragma once

#include "grover_gme/error.hpp"
#include "grover_gme/gme.hpp"
#include "grover_gme/log_scalar.hpp"
#include "grover_gme/marked_set.hpp"
#include "grover_gme/maximize.hpp"
#include "grover_gme/oracle.hpp"
#include "grover_gme/overlap.hpp"
#include "grover_gme/schedule.hpp"
