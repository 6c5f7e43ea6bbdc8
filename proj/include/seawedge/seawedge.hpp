#pragma once

#include "seawedge/basis_label.hpp"
#include "seawedge/dirac.hpp"
#include "seawedge/equivalence.hpp"
#include "seawedge/fock.hpp"
#include "seawedge/gram.hpp"
#include "seawedge/json_io.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/parallel.hpp"
#include "seawedge/random.hpp"
#include "seawedge/types.hpp"
#include "seawedge/verify.hpp"
#include "seawedge/wedge.hpp"
