// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

namespace curvant {

// Regular elevation/azimuth sample grid in degrees. Elevation is measured
// from the horizon (z = 0 plane), so the full sphere is [-90, 90] x [0, 360).
// full_sphere() centers elevation samples inside their cells, which keeps the
// poles off the grid and makes the solid-angle quadrature weights exact.
struct AngularGrid {
    double el_start_deg = 0.0;
    double el_step_deg = 0.0;
    int n_el = 0;
    double az_start_deg = 0.0;
    double az_step_deg = 0.0;
    int n_az = 0;

    static AngularGrid full_sphere(double step_deg) {
        AngularGrid g;
        g.el_step_deg = step_deg;
        g.n_el = static_cast<int>(180.0 / step_deg + 0.5);
        g.el_start_deg = -90.0 + 0.5 * step_deg;
        g.az_step_deg = step_deg;
        g.n_az = static_cast<int>(360.0 / step_deg + 0.5);
        g.az_start_deg = 0.0;
        return g;
    }

    double elevation_deg(int i) const { return el_start_deg + i * el_step_deg; }
    double azimuth_deg(int j) const { return az_start_deg + j * az_step_deg; }
    int sample_count() const { return n_el * n_az; }
};

} // namespace curvant
