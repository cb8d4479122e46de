#ifndef ORBITSPACE_ORBITSPACE_HPP
#define ORBITSPACE_ORBITSPACE_HPP

#include "orbitspace/cone.hpp"
#include "orbitspace/errors.hpp"
#include "orbitspace/fan.hpp"
#include "orbitspace/linalg.hpp"
#include "orbitspace/lp.hpp"
#include "orbitspace/polyhedron.hpp"
#include "orbitspace/ppdivisor.hpp"
#include "orbitspace/problem.hpp"
#include "orbitspace/rational.hpp"
#include "orbitspace/report.hpp"

#endif // ORBITSPACE_ORBITSPACE_HPP
