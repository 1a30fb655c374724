#pragma once

#include "loopmod/builtin_loops.hpp"
#include "loopmod/enumerate.hpp"
#include "loopmod/error.hpp"
#include "loopmod/identity.hpp"
#include "loopmod/loop_io.hpp"
#include "loopmod/loop_table.hpp"
#include "loopmod/measure.hpp"
#include "loopmod/parallel.hpp"
#include "loopmod/permutation.hpp"
#include "loopmod/rational.hpp"
#include "loopmod/report_json.hpp"
#include "loopmod/verify.hpp"
