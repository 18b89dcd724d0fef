#pragma once

#include <cstdint>
#include <vector>

#include "qbsim/basis.hpp"
#include "qbsim/matrix.hpp"
#include "qbsim/model.hpp"
#include "qbsim/operators.hpp"
#include "qbsim/profiles.hpp"

namespace qbsim {

// Every component Hamiltonian has the form O(t) = stat + u(t) * drv, with the
// same scalar schedule u shared across the decomposition. An empty matrix
// means the part is absent.
struct ComponentOperators {
    ComplexMatrix charger_static, charger_driven;
    ComplexMatrix battery_static, battery_driven;
    ComplexMatrix cavity_static;
    ComplexMatrix interaction_static, interaction_driven;
    ComplexMatrix excitation;  // total excitation number N
};

// H(t) = h_static + u(t) * h_driven, Hermitian for all t.
struct HamiltonianDecomposition {
    std::size_t dim = 0;
    ComplexMatrix h_static;
    ComplexMatrix h_driven;
    Schedule schedule;
    ComponentOperators parts;

    // Hash of (h_static, h_driven); eigendecomposition cache key component.
    std::uint64_t matrix_fingerprint = 0;

    ComplexMatrix hamiltonian_at(double t) const;
};

// Direct qubit-qubit exchange; the cavity factor is carried but uncoupled so
// all models share one state layout.
//   h_static = (alpha w/2) sz_C + (w/2) sz_B
//   h_driven = g (s-_C s+_B + s+_C s-_B)
HamiltonianDecomposition build_direct(const ModelConfig& cfg, const SwitchProfile* profile);

// Cavity-mediated exchange.
//   h_static = (alpha w/2) sz_C + (w/2) sz_B + alpha w a†a
//   h_driven = g [a†(s-_C + s-_B) + a(s+_C + s+_B)]
HamiltonianDecomposition build_cavity(const ModelConfig& cfg, const SwitchProfile* profile);

// Detuning-controlled protocol: the exchange term is static and the qubit
// frequencies follow g(t).
HamiltonianDecomposition build_detuning_protocol(const ModelConfig& cfg, const SwitchProfile& profile);

// Dispatch on cfg.model / cfg.protocol. profile may be null for always-on.
HamiltonianDecomposition build_decomposition(const ModelConfig& cfg, const SwitchProfile* profile);

// Restriction to one total-excitation sector (validated optimization; the
// full space stays the default). Keeps the retained flat indices.
struct ExcitationBlock {
    std::vector<std::size_t> indices;
    int total_excitations = 0;
};

ExcitationBlock excitation_block(const HilbertSpace& space, int total_excitations);
ComplexMatrix project_operator(const ComplexMatrix& op, const ExcitationBlock& block);
HamiltonianDecomposition project_decomposition(const HamiltonianDecomposition& dec,
                                               const ExcitationBlock& block);

} // namespace qbsim
