#pragma once

#include "symspace/charclass.hpp"
#include "symspace/cli.hpp"
#include "symspace/cohomology.hpp"
#include "symspace/decide.hpp"
#include "symspace/groebner.hpp"
#include "symspace/lgenus.hpp"
#include "symspace/report.hpp"
#include "symspace/rootsys.hpp"
#include "symspace/spaces.hpp"
