#pragma once

#include "ncfactor/errors.hpp"
#include "ncfactor/field.hpp"
#include "ncfactor/cpoly.hpp"
#include "ncfactor/univariate.hpp"
#include "ncfactor/groebner.hpp"
#include "ncfactor/word.hpp"
#include "ncfactor/ncpoly.hpp"
#include "ncfactor/homogeneous.hpp"
#include "ncfactor/knapsack.hpp"
#include "ncfactor/factor.hpp"
#include "ncfactor/oracle.hpp"
#include "ncfactor/parser.hpp"
#include "ncfactor/report.hpp"
