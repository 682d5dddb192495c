#pragma once

#include "arealab/area_identity.hpp"
#include "arealab/constants.hpp"
#include "arealab/correlation.hpp"
#include "arealab/errors.hpp"
#include "arealab/function_kind.hpp"
#include "arealab/minoverlap.hpp"
#include "arealab/parallel.hpp"
#include "arealab/serialize.hpp"
#include "arealab/tables.hpp"
#include "arealab/value.hpp"

namespace arealab {
inline constexpr const char* kVersion = "0.1.0";
}
