#pragma once

#include "spinfock/clifford.hpp"
#include "spinfock/feynman_kac.hpp"
#include "spinfock/fock.hpp"
#include "spinfock/hamiltonian.hpp"
#include "spinfock/sde.hpp"
#include "spinfock/so_algebra.hpp"
#include "spinfock/spin_group.hpp"
#include "spinfock/uea.hpp"
