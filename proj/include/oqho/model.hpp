#pragma once

#include <optional>
#include <vector>

#include "oqho/matrix.hpp"

namespace oqho {

// 2x2 generator of planar rotations: [[0,1],[-1,0]].
RealMatrix bj();
// (1/2) bj (x) I_{n/2}: the CCR matrix of n/2 conjugate position-momentum pairs.
RealMatrix canonical_theta(std::size_t n);

// Quantum Ito data of an m-channel field: J = bj (x) I_{m/2}, Omega = I + iJ.
struct ItoStructure {
    std::size_t m = 0;
    RealMatrix J;
    ComplexMatrix Omega;
    static ItoStructure canonical(std::size_t m);
};

// Coupling given as strength * shape; the state-space coupling matrix is
// M = epsilon * shape.
struct Coupling {
    double epsilon = 0.0;
    RealMatrix shape;  // m x n
};

// One open quantum harmonic oscillator: n variables with CCR matrix Theta,
// energy matrix R, and an m-channel field coupled through M. J is the field
// CCR structure; it is the canonical block form except for models assembled
// from a network interconnection, which carry their own channel ordering.
struct OscillatorModel {
    std::size_t n = 0, m = 0;
    RealMatrix Theta;  // n x n, antisymmetric
    RealMatrix R;      // n x n, symmetric
    RealMatrix M;      // m x n
    RealMatrix J;      // m x m
    std::optional<Coupling> coupling;

    static OscillatorModel make(RealMatrix theta, RealMatrix r, RealMatrix m);
    static OscillatorModel make_coupled(RealMatrix theta, RealMatrix r, RealMatrix shape,
                                        double epsilon);
};

struct ValidationReport {
    bool dims_even = false;
    bool theta_antisymmetric = false;
    bool r_symmetric = false;
    bool theta_nonsingular = false;
    bool r_positive_definite = false;
    bool all() const {
        return dims_even && theta_antisymmetric && r_symmetric && theta_nonsingular &&
               r_positive_definite;
    }
};

// Structural checks; failures are reported, never thrown.
ValidationReport validate(const OscillatorModel& model);

struct StateSpace {
    RealMatrix A;       // 2 Theta (R + M^T J M)
    RealMatrix B;       // 2 Theta M^T
    RealMatrix A0;      // 2 Theta R
    RealMatrix Atilde;  // A - A0
    RealMatrix BBt;     // B B^T
};

StateSpace build_state_space(const OscillatorModel& model);

// Eigenstructure of the uncoupled dynamics. omegas holds all n
// eigenfrequencies ordered as [w_1 .. w_{n/2}, -w_1 .. -w_{n/2}] with the
// positive half descending; V is unitary with conjugate-paired columns;
// S = R^{-1/2} V diagonalises A0 as i S diag(omega) S^{-1}.
struct SpectralStructure {
    std::vector<double> omegas;
    ComplexMatrix V;
    ComplexMatrix S;
    double period = 0.0;  // 2*pi / smallest positive eigenfrequency
    RealMatrix sqrt_r;
    RealMatrix invsqrt_r;
};

SpectralStructure spectral_structure(const OscillatorModel& model);

}  // namespace oqho
