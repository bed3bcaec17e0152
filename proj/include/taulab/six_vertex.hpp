#pragma once

#include <functional>
#include <map>
#include <vector>

#include "taulab/fermion.hpp"
#include "taulab/matrix.hpp"
#include "taulab/partitions.hpp"
#include "taulab/rng.hpp"
#include "taulab/sympoly.hpp"

namespace taulab {

// Vertex types in the down-left line picture (lines enter the top boundary,
// leave the left boundary). Pairs (1,2), (3,4), (5,6) share a weight in the
// rapidity-difference models; they differ for the coloured weights.
enum VertexType : int {
    VT_EMPTY = 1,     // no lines
    VT_CROSS = 2,     // two lines cross
    VT_VSTRAIGHT = 3, // line passes top -> bottom
    VT_HSTRAIGHT = 4, // line passes right -> left
    VT_TURN_RB = 5,   // right -> bottom turn
    VT_TURN_TL = 6    // top -> left turn
};

// weight of the vertex at (row i, col j), 0-based, of the given type
using VertexWeight = std::function<Rat(int i, int j, VertexType t)>;

// weighted sum over all N x N DWBC configurations; serial reference
Rat dwbc_weighted_sum_serial(int N, const VertexWeight& w);
// OpenMP variant, parallel over first-row branchings, deterministic result
Rat dwbc_weighted_sum(int N, const VertexWeight& w);
long dwbc_configuration_count(int N);

// All half-integer powers live at the square-root level: x_i^2 = u_i,
// y_j^2 = v_j, p^2 = q; w holds quantum inhomogeneities for the scalar
// product, also at the square-root level.
struct SpectralPoint {
    std::vector<Rat> x, y;
    Rat p;
    std::vector<Rat> w;

    std::vector<Rat> u() const {
        std::vector<Rat> r;
        for (auto& v : x) r.push_back(v * v);
        return r;
    }
    std::vector<Rat> v() const {
        std::vector<Rat> r;
        for (auto& t : y) r.push_back(t * t);
        return r;
    }
    std::vector<Rat> wsq() const {
        std::vector<Rat> r;
        for (auto& t : w) r.push_back(t * t);
        return r;
    }
    Rat q() const { return p * p; }

    bool generic() const;
};

SpectralPoint sample_spectral_point(Rng& rng, int N, int M_inhom = 0);

enum class DwpfMethod { BruteForce, Monodromy, Izergin, Lascoux, LascouxSchur, KirillovSmirnov };

// Z_N: bruteforce/monodromy in sinh variables; the determinant methods return
// the (u,v,q)-normalized expressions, mutually exactly equal
Rat dwpf(int N, const SpectralPoint& pt, DwpfMethod method);

Rat sixv_upsilon(int N, const SpectralPoint& pt);

// kappa master matrix (N rows, 2N-1 columns gamma_0..gamma_{2N-2})
MasterCoefficients sixv_master(int N, const SpectralPoint& pt);
// map lam in (N-1)^N |-> c^{(N)}_lam(v)
std::map<Partition, Rat> schur_coeffs(int N, const SpectralPoint& pt);

// Kirillov-Smirnov internal chain forms, all equal to dwpf(KirillovSmirnov)
Rat dwpf_ks_raw(int N, const SpectralPoint& pt);       // eq. with Vandermonde poles
Rat dwpf_ks_poles_cleared(int N, const SpectralPoint& pt);
Rat dwpf_ks_bform(int N, const SpectralPoint& pt);

enum class SlavnovMethod { Determinant, Symmetric, SchurSum };

// Scalar product with one set of rapidities formally on-shell; the three
// forms agree as rational functions without imposing Bethe equations.
Rat slavnov(int N, int M_sites, const SpectralPoint& pt, SlavnovMethod method);

Rat slavnov_upsilon_prime(int N, int M_sites, const SpectralPoint& pt);
// rho master matrix (N rows, N+M-1 columns)
MasterCoefficients slavnov_master(int N, int M_sites, const SpectralPoint& pt);

} // namespace taulab
