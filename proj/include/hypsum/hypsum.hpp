#pragma once

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/fuzz.hpp"
#include "hypsum/hyper.hpp"
#include "hypsum/kampe.hpp"
#include "hypsum/parametric.hpp"
#include "hypsum/polynomial.hpp"
#include "hypsum/rational.hpp"
#include "hypsum/record.hpp"
#include "hypsum/series.hpp"
#include "hypsum/theorems.hpp"
