#pragma once

#include "genus1/arith.hpp"
#include "genus1/counting.hpp"
#include "genus1/equations.hpp"
#include "genus1/fiberdata.hpp"
#include "genus1/fixtures.hpp"
#include "genus1/global.hpp"
#include "genus1/localred.hpp"
#include "genus1/matrix.hpp"
#include "genus1/serialize.hpp"
