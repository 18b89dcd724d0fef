#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <unordered_map>
#include <vector>

#include "qbsim/hamiltonian.hpp"
#include "qbsim/matrix.hpp"

namespace qbsim {

// Eigendecomposition of a Hermitian matrix: H = V diag(values) V†.
// V is stored row-major with eigenvectors as columns.
struct EigResult {
    ComplexMatrix vectors;
    std::vector<double> values;
};

EigResult hermitian_eigendecomposition(const ComplexMatrix& h);

// One cached step basis, plus the phase vector exp(-i values dt) for the most
// recently used dt (plateau steps reuse both).
struct StepBasis {
    ComplexMatrix vectors;
    std::vector<double> values;
    mutable std::vector<cplx> phases;
    mutable double phases_dt = 0.0;

    const std::vector<cplx>& phases_for(double dt) const;
    std::size_t bytes() const;
};

// LRU cache of eigendecompositions of H(u) = h_static + u * h_driven, keyed
// by the matrices' fingerprint and the schedule value. Schedule values closer
// than ~1e-12 share an entry: the switching functions are evaluated on a step
// lattice, so values meant to coincide across runs can differ by a few ulps.
//
// Not thread safe; use one cache per worker.
class EigCache {
public:
    explicit EigCache(std::size_t budget_bytes = kDefaultBudget);

    std::shared_ptr<const StepBasis> step_basis(const HamiltonianDecomposition& dec, double u);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    std::size_t bytes_used() const { return bytes_used_; }

    static constexpr std::size_t kDefaultBudget = std::size_t(2) << 30;  // 2 GiB

private:
    struct Key {
        std::uint64_t fingerprint;
        std::int64_t u_quantum;
        bool operator==(const Key& o) const {
            return fingerprint == o.fingerprint && u_quantum == o.u_quantum;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::uint64_t>()(k.fingerprint ^ (std::uint64_t(k.u_quantum) * 0x9e3779b97f4a7c15ull));
        }
    };
    struct Slot {
        std::shared_ptr<const StepBasis> basis;
        std::list<Key>::iterator lru_pos;
    };

    void evict_to_budget();

    std::size_t budget_;
    std::size_t bytes_used_ = 0;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
    std::unordered_map<Key, Slot, KeyHash> entries_;
    std::list<Key> lru_;  // front = most recent
};

} // namespace qbsim
