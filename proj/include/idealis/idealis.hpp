#ifndef IDEALIS_IDEALIS_HPP
#define IDEALIS_IDEALIS_HPP

// umbrella header

#include "idealis/betti.hpp"
#include "idealis/cover_powers.hpp"
#include "idealis/graph.hpp"
#include "idealis/graph_io.hpp"
#include "idealis/ideal_ops.hpp"
#include "idealis/linear_quotients.hpp"
#include "idealis/monomial.hpp"
#include "idealis/random_graph.hpp"
#include "idealis/serialize.hpp"
#include "idealis/simplicial.hpp"
#include "idealis/suites.hpp"

#endif
