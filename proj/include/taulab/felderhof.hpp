#pragma once

#include <vector>

#include "taulab/jet.hpp"
#include "taulab/matrix.hpp"
#include "taulab/rng.hpp"

namespace taulab {

// Colour variables of the trigonometric model at the 2n-pi-i shifted point;
// all rapidity dependence has dropped out of the weights.
struct ColourPoint {
    std::vector<Rat> alpha, beta;

    bool generic() const;
};

ColourPoint sample_colour_point(Rng& rng, int N);

enum class FelderhofMethod { BruteForce, Determinant, Product };

// The REDUCED partition function Ztilde = Z / prod sqrt(1-a_i^2) sqrt(1-b_j^2),
// rational because every row and column carries an odd c-vertex count.
Rat dwpf_reduced(int N, const ColourPoint& pt, FelderhofMethod method);
Rat dwpf_reduced_bruteforce_serial(int N, const ColourPoint& pt);

// tau_s = det[ d^{i-1}_a d^{j-1}_b phi(a,b) ] with phi = 1/((a-b)(1-ab)),
// derivatives taken exactly via two-variable jets
Rat homogeneous_tau(int s, const Rat& alpha, const Rat& beta, int jet_order);

// all tau_0..tau_smax from one jet expansion
std::vector<Rat> homogeneous_tau_family(int smax, const Rat& alpha, const Rat& beta);

// reduced homogeneous value via eq. (goatrage): the (-1)^{N(N-1)/2} sign, the
// 1/prod(n!)^2 factor and ((a-b)(1-ab))^{N^2} times tau_N, divided by the
// c-weight power
Rat homogeneous_reduced_from_tau(int N, const Rat& alpha, const Rat& beta);

} // namespace taulab
