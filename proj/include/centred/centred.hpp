#pragma once

#include "centred/asymptotics.hpp"
#include "centred/closed_forms.hpp"
#include "centred/direct.hpp"
#include "centred/dumont_foata.hpp"
#include "centred/families.hpp"
#include "centred/numeric.hpp"
#include "centred/polynomial.hpp"
#include "centred/recurrence.hpp"
#include "centred/report.hpp"
#include "centred/series.hpp"
#include "centred/suites.hpp"

namespace centred {
inline constexpr const char *kVersion = "0.1.0";
}
