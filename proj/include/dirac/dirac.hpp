#pragma once

#include "dirac/clifford.hpp"
#include "dirac/errors.hpp"
#include "dirac/kinematics.hpp"
#include "dirac/projectors.hpp"
#include "dirac/report.hpp"
#include "dirac/sampling.hpp"
#include "dirac/spinors.hpp"
#include "dirac/verify.hpp"
