#pragma once

#include <cstddef>
#include <string>

#include "qbsim/errors.hpp"

namespace qbsim {

// Occupancies of the charger and battery qubits plus the cavity photon count.
struct BasisLabel {
    int charger = 0;  // 0 = ground, 1 = excited
    int battery = 0;
    int photons = 0;

    int total_excitations() const { return charger + battery + photons; }

    bool operator==(const BasisLabel& o) const {
        return charger == o.charger && battery == o.battery && photons == o.photons;
    }
};

// Truncated tensor-product space charger (x) battery (x) cavity.
// Flat index layout: qubit configuration major, photon number minor, so the
// photon ladder acts on contiguous index runs.
class HilbertSpace {
public:
    explicit HilbertSpace(int n_max);

    // Default truncation: the initial state |1_C, 0_B, n> has N = n + 1
    // conserved excitations, so photon numbers above n + 1 are unreachable.
    static HilbertSpace for_initial_photons(int n_initial) {
        return HilbertSpace(n_initial + 1);
    }

    int n_max() const { return n_max_; }
    std::size_t dim() const { return dim_; }

    std::size_t index_of(const BasisLabel& label) const;
    BasisLabel label_of(std::size_t index) const;

private:
    int n_max_;
    std::size_t dim_;
};

} // namespace qbsim
