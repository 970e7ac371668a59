#pragma once

#include "eql/barycentric.hpp"
#include "eql/box.hpp"
#include "eql/circle_map.hpp"
#include "eql/earthquake.hpp"
#include "eql/experiments.hpp"
#include "eql/geometry.hpp"
#include "eql/lamination.hpp"
#include "eql/lamination_io.hpp"
#include "eql/moebius.hpp"
#include "eql/random.hpp"
#include "eql/report.hpp"
#include "eql/version.hpp"
