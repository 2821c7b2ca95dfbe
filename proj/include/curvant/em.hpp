// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "curvant/angular_grid.hpp"
#include "curvant/geometry.hpp"

namespace curvant::em {

using Complex = std::complex<double>;

// Raised for numerical failures (singular fill, ill-conditioned solve). Kept
// distinct from std::invalid_argument so callers can tell a broken evaluation
// from a merely poor antenna.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Far-field gain samples over an AngularGrid, dBi, row-major [elevation][azimuth].
// radiated_power_w integrates the pattern by spherical cell weights;
// input_power_w is the port power of the same solution, so the two agree only
// as well as the discretization does.
struct FarFieldPattern {
    AngularGrid grid;
    std::vector<double> gain_dbi;
    double radiated_power_w = 0.0;
    double input_power_w = 0.0;

    double sample(int i_el, int j_az) const { return gain_dbi[i_el * grid.n_az + j_az]; }

    // Bilinear interpolation; azimuth wraps, elevation clamps at the cap rows.
    double gain_at(double elevation_deg, double azimuth_deg) const;
};

struct EMReport {
    Complex z_in{0.0, 0.0};     // combined parallel feed impedance, Ohm
    double vswr = 0.0;          // against the reference impedance
    double phi_deg = 0.0;       // |impedance phase angle|
    double g_diff_db = 0.0;     // forward-minus-backward gain at the horizon
    FarFieldPattern pattern;
};

// --- thin-wire method-of-moments kernel -----------------------------------
//
// Pulse current basis on each segment, point matching at segment centers.
// Charge pulses live on the half-segments next to each end; the kernel is the
// reduced (thin-wire) one with the source on the wire axis and distances
// regularized by the wire radius.

// Z[m][n] = mutual impedance between basis n and match segment m, Ohm.
// OpenMP-parallel over matrix rows; bitwise-identical to the serial fill.
// Throws SolverError when two segments coincide.
Eigen::MatrixXcd fill_impedance_matrix(const geom::WireModel& model, double frequency_hz);

// Serial reference fill, kept for tests and the kernel benchmark.
Eigen::MatrixXcd fill_impedance_matrix_serial(const geom::WireModel& model,
                                              double frequency_hz);

// Delta-gap excitation vector: v0 * sign at each port segment, zero elsewhere.
Eigen::VectorXcd excitation_vector(const geom::WireModel& model, double v0 = 1.0);

// Dense LU solve of Z i = v with a residual check (relative residual <= 1e-8)
// and a cheap reciprocal-condition estimate; throws SolverError on failure.
Eigen::VectorXcd solve_currents(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& v);

// Combined input impedance of all ports fed in parallel with voltages
// sign * v0: Z_in = |v0|^2 / conj(sum_i V_i conj(I_i)). For one port this
// reduces to V/I. Throws SolverError when the total port power vanishes.
Complex port_input_impedance(const geom::WireModel& model,
                             const Eigen::VectorXcd& currents, double v0 = 1.0);

// Active port power 0.5 Re(sum V_i conj(I_i)) for the same excitation, W.
double port_input_power(const geom::WireModel& model, const Eigen::VectorXcd& currents,
                        double v0 = 1.0);

// Radiation integral over the segment currents. Gain is referred to the port
// input power (accepted-power gain), so the pattern quadrature provides an
// independent power-balance check. Rejects grids coarser than 10 degrees.
// OpenMP-parallel over grid points; serial reference kept alongside.
FarFieldPattern far_field(const geom::WireModel& model, const Eigen::VectorXcd& currents,
                          double frequency_hz, const AngularGrid& grid);
FarFieldPattern far_field_serial(const geom::WireModel& model,
                                 const Eigen::VectorXcd& currents, double frequency_hz,
                                 const AngularGrid& grid);

// --- scalar antenna metrics ------------------------------------------------

// (1+|G|)/(1-|G|) with G = (z-z0)/(z+z0); +inf when |G| = 1.
double vswr(Complex z, double z0);

// |atan2(im, re)| in degrees, in [0, 180].
double impedance_angle_deg(Complex z);

// gain(el 0, az) - gain(el 0, az+180), bilinear on the grid, dB.
double gain_difference_db(const FarFieldPattern& pattern, double outward_azimuth_deg);

// --- full design evaluation -------------------------------------------------

struct EvalParams {
    geom::ModelParams model;
    double pattern_step_deg = 5.0;
    double reference_impedance_ohm = 50.0;
    double outward_azimuth_deg = 0.0; // outward normal of the center dipole plane
};

// assemble -> fill -> solve -> impedance/VSWR/phi/pattern/G. Deterministic for
// identical inputs. Solver failures surface as SolverError.
EMReport evaluate_design(const geom::DesignVariables& vars, const geom::TubeSpec& tube,
                         double frequency_hz, const EvalParams& params = {});

} // namespace curvant::em
