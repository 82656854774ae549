#pragma once

#include "esu/errors.hpp"
#include "esu/harmonics.hpp"
#include "esu/json_io.hpp"
#include "esu/model.hpp"
#include "esu/renorm.hpp"
#include "esu/roots.hpp"
#include "esu/semiclassical.hpp"
#include "esu/series.hpp"
#include "esu/states.hpp"
#include "esu/thermodynamics.hpp"
