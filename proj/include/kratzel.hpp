#pragma once

#include "kratzel/errors.hpp"
#include "kratzel/expansion.hpp"
#include "kratzel/kratzel_asymptotics.hpp"
#include "kratzel/large_nu.hpp"
#include "kratzel/numerics.hpp"
#include "kratzel/quadrature.hpp"
#include "kratzel/series.hpp"
#include "kratzel/steepest_descent.hpp"
#include "kratzel/tables.hpp"
#include "kratzel/version.hpp"
#include "kratzel/whittaker.hpp"
