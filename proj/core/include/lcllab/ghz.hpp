#ifndef lcllab_ghz_hpp
#define lcllab_ghz_hpp

#include <array>
#include <complex>
#include <vector>

#include "lcllab/linearizable.hpp"
#include "lcllab/rng.hpp"

namespace lcllab {

/*
 * Three qubits in the GHZ state (|000> + |111>) / sqrt(2), kept as a full
 * 8-amplitude state vector. Each qubit can be measured once, in the X basis
 * (input bit 0) or the Y basis (input bit 1); the outcome bit is 0 for the
 * +1 eigenvector. Measuring collapses the shared state, so the outcome
 * distribution of later measurements is conditioned on earlier ones.
 */
class GhzTriple {
public:
    GhzTriple();

    // measure qubit `qubit` (0..2); throws std::logic_error on reuse
    int measure(int qubit, int basis_input, KeyedRng& rng);

    bool measured(int qubit) const { return measured_[qubit]; }
    double norm() const;
    const std::array<std::complex<double>, 8>& amplitudes() const { return amp_; }

private:
    std::array<std::complex<double>, 8> amp_{};
    std::array<bool, 3> measured_{false, false, false};
};

// Exact joint outcome distribution: prob[b1*4 + b2*2 + b3] for measuring the
// three qubits with the given basis inputs (order of measurement is
// irrelevant for the joint law).
std::array<double, 8> ghz_outcome_distribution(const std::array<int, 3>& inputs);

struct QuantumRun {
    std::vector<int> edge_labels;     // one iterghz label per edge
    std::vector<int> white_rounds;    // games played per white (= degree)
};

/*
 * Zero-round quantum strategy for iterated GHZ on a bipartite instance:
 * every degree-3 black shares a GHZ triple with its whites, except "lucky"
 * blacks (all three whites play them as their first game), which instead use
 * the deterministic outputs 0,0,1. Whites thread x_{i+1} = y_i through
 * their ports in order, starting from x_1 = 0.
 */
QuantumRun quantum_solve_iterghz(const BipartiteInstance& b, uint64_t seed);

} // namespace lcllab

#endif
