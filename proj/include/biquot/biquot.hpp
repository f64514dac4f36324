#pragma once

#include "biquot/char_class.hpp"
#include "biquot/cohomology.hpp"
#include "biquot/curated_tables.hpp"
#include "biquot/enumeration.hpp"
#include "biquot/error.hpp"
#include "biquot/lie_catalog.hpp"
#include "biquot/rational_model.hpp"
#include "biquot/report.hpp"
