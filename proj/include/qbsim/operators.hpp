#pragma once

#include "qbsim/basis.hpp"
#include "qbsim/matrix.hpp"

namespace qbsim {

enum class Site { Charger, Battery };
enum class Ladder { Raise, Lower };

// sigma_z on one qubit: +1 on its excited occupancy, -1 on ground.
ComplexMatrix pauli_z(Site site, const HilbertSpace& space);

// sigma_+ / sigma_- on one qubit. Raise maps ground to excited and
// annihilates the excited state; Lower is its adjoint.
ComplexMatrix ladder(Site site, Ladder direction, const HilbertSpace& space);

// Photon annihilation: a|n> = sqrt(n)|n-1>, a|0> = 0.
ComplexMatrix annihilator(const HilbertSpace& space);
ComplexMatrix creator(const HilbertSpace& space);

// a†a
ComplexMatrix photon_number(const HilbertSpace& space);

// Total excitation count N = (sigma_z^C + 1)/2 + (sigma_z^B + 1)/2 + a†a.
// Conserved by every model here; used as a consistency oracle.
ComplexMatrix excitation_number(const HilbertSpace& space);

} // namespace qbsim
