#ifndef NORMGAP_NORMGAP_HPP
#define NORMGAP_NORMGAP_HPP

#include "normgap/csv.hpp"
#include "normgap/error.hpp"
#include "normgap/extremal.hpp"
#include "normgap/gapbound.hpp"
#include "normgap/json.hpp"
#include "normgap/norms.hpp"
#include "normgap/oracle.hpp"
#include "normgap/parallel.hpp"
#include "normgap/random.hpp"
#include "normgap/signal.hpp"
#include "normgap/solver.hpp"

#endif  // NORMGAP_NORMGAP_HPP
