#include "lcllab/ghz.hpp"

#include <cmath>
#include <stdexcept>

namespace lcllab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// +1 / -1 eigenvectors of X (input 0) and Y (input 1)
std::array<std::complex<double>, 2> basis_vector(int basis_input, int outcome) {
    std::complex<double> c;
    if (basis_input == 0)
        c = outcome == 0 ? 1.0 : -1.0;
    else
        c = outcome == 0 ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
    return {kInvSqrt2, c * kInvSqrt2};
}

} // namespace

GhzTriple::GhzTriple() {
    amp_[0] = kInvSqrt2;
    amp_[7] = kInvSqrt2;
}

double GhzTriple::norm() const {
    double s = 0;
    for (const std::complex<double>& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

int GhzTriple::measure(int qubit, int basis_input, KeyedRng& rng) {
    if (qubit < 0 || qubit > 2) throw std::out_of_range("qubit index");
    if (measured_[qubit]) throw std::logic_error("qubit measured twice");
    measured_[qubit] = true;

    int bit = 1 << (2 - qubit);
    std::array<std::array<std::complex<double>, 4>, 2> proj;
    std::array<double, 2> prob{0, 0};
    for (int s = 0; s < 2; ++s) {
        std::array<std::complex<double>, 2> b = basis_vector(basis_input, s);
        int k = 0;
        for (int i = 0; i < 8; ++i) {
            if (i & bit) continue;
            proj[s][k] = std::conj(b[0]) * amp_[i] + std::conj(b[1]) * amp_[i | bit];
            prob[s] += std::norm(proj[s][k]);
            ++k;
        }
    }
    int s = rng.next_double() * (prob[0] + prob[1]) < prob[0] ? 0 : 1;

    std::array<std::complex<double>, 2> b = basis_vector(basis_input, s);
    double scale = 1.0 / std::sqrt(prob[s]);
    int k = 0;
    for (int i = 0; i < 8; ++i) {
        if (i & bit) continue;
        amp_[i] = proj[s][k] * b[0] * scale;
        amp_[i | bit] = proj[s][k] * b[1] * scale;
        ++k;
    }
    return s;
}

std::array<double, 8> ghz_outcome_distribution(const std::array<int, 3>& inputs) {
    std::array<double, 8> prob{};
    for (int o = 0; o < 8; ++o) {
        std::array<std::array<std::complex<double>, 2>, 3> b;
        for (int q = 0; q < 3; ++q) b[q] = basis_vector(inputs[q], (o >> (2 - q)) & 1);
        std::complex<double> amp =
            (std::conj(b[0][0] * b[1][0] * b[2][0]) + std::conj(b[0][1] * b[1][1] * b[2][1])) *
            kInvSqrt2;
        prob[o] = std::norm(amp);
    }
    return prob;
}

QuantumRun quantum_solve_iterghz(const BipartiteInstance& b, uint64_t seed) {
    int num_edges = static_cast<int>(b.edges.size());
    std::vector<int> preset(num_edges, -1);  // lucky blacks answer without measuring
    std::vector<GhzTriple> triples(b.num_blacks);
    std::vector<KeyedRng> rngs;
    rngs.reserve(b.num_blacks);
    std::vector<bool> shared(b.num_blacks, false);

    for (int bl = 0; bl < b.num_blacks; ++bl) {
        rngs.emplace_back(seed, 0x67687a, static_cast<uint64_t>(bl), 0);
        if (b.black_edges[bl].size() != 3) continue;
        bool lucky = true;
        for (int e : b.black_edges[bl])
            if (b.white_edges[b.edges[e].w].front() != e) lucky = false;
        if (lucky) {
            for (size_t i = 0; i < 3; ++i) preset[b.black_edges[bl][i]] = i == 2 ? 1 : 0;
        } else {
            shared[bl] = true;
        }
    }

    QuantumRun run;
    run.edge_labels.assign(num_edges, 0);
    for (int w = 0; w < b.num_whites; ++w) {
        int x = 0;
        for (size_t t = 0; t < b.white_edges[w].size(); ++t) {
            int e = b.white_edges[w][t];
            int bl = b.edges[e].b;
            int y = 0;
            if (preset[e] >= 0) {
                y = preset[e];
            } else if (shared[bl]) {
                int qubit = 0;
                while (b.black_edges[bl][qubit] != e) ++qubit;
                y = triples[bl].measure(qubit, x, rngs[bl]);
            }
            run.edge_labels[e] = ghz_label(t == 0, x, y);
            x = y;
        }
        run.white_rounds.push_back(static_cast<int>(b.white_edges[w].size()));
    }
    return run;
}

} // namespace lcllab
