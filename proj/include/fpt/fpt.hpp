#pragma once

#include "fpt/appearance.hpp"
#include "fpt/budget.hpp"
#include "fpt/dickson.hpp"
#include "fpt/error.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"
#include "fpt/morganvoyce.hpp"
#include "fpt/nt.hpp"
#include "fpt/planes.hpp"
#include "fpt/trinomials.hpp"
#include "fpt/upoly.hpp"
#include "fpt/zigzag.hpp"
