// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#include "curvant/nec_deck.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace curvant::geom {

namespace {

struct GwGroup {
    std::size_t first = 0; // flat index of first segment
    int count = 0;
};

bool extends_group(const Segment& prev, const Segment& next) {
    const double tol = 1e-9;
    if ((next.a - prev.b).norm() > tol) return false;
    if (std::abs(next.radius_m - prev.radius_m) > tol) return false;
    if (std::abs(next.length() - prev.length()) > tol * (1.0 + prev.length())) return false;
    return prev.direction().cross(next.direction()).norm() < 1e-9;
}

std::vector<GwGroup> group_segments(const WireModel& model) {
    std::vector<GwGroup> groups;
    for (std::size_t i = 0; i < model.segments.size(); ++i) {
        if (!groups.empty()) {
            GwGroup& g = groups.back();
            if (extends_group(model.segments[i - 1], model.segments[i]) &&
                g.first + g.count == i) {
                ++g.count;
                continue;
            }
        }
        groups.push_back({i, 1});
    }
    return groups;
}

void appendf(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

} // namespace

std::string export_nec_deck(const WireModel& model, double frequency_hz,
                            const AngularGrid& grid) {
    if (model.segments.empty()) throw std::invalid_argument("cannot export empty model");
    for (const Port& p : model.ports)
        if (p.segment >= model.segments.size())
            throw std::invalid_argument("port segment index out of range");

    const std::vector<GwGroup> groups = group_segments(model);

    std::string deck;
    deck.reserve(groups.size() * 96 + 512);
    appendf(deck, "CM curvant wire model: %zu segments, %zu ports\n",
            model.segments.size(), model.ports.size());
    appendf(deck, "CM frequency %.6f MHz\n", frequency_hz * 1e-6);
    deck += "CE\n";

    for (std::size_t g = 0; g < groups.size(); ++g) {
        const Segment& first = model.segments[groups[g].first];
        const Segment& last = model.segments[groups[g].first + groups[g].count - 1];
        appendf(deck,
                "GW %zu %d %.8E %.8E %.8E %.8E %.8E %.8E %.8E\n",
                g + 1, groups[g].count,
                first.a.x, first.a.y, first.a.z,
                last.b.x, last.b.y, last.b.z,
                first.radius_m);
    }
    deck += "GE 0\n";

    for (const Port& p : model.ports) {
        // locate the GW group holding this segment; EX addresses (tag, local index)
        std::size_t g = 0;
        while (g + 1 < groups.size() && groups[g + 1].first <= p.segment) ++g;
        const std::size_t local = p.segment - groups[g].first + 1;
        appendf(deck, "EX 0 %zu %zu 0 %.1f 0.0\n", g + 1, local,
                static_cast<double>(p.sign));
    }

    appendf(deck, "FR 0 1 0 0 %.6f 0\n", frequency_hz * 1e-6);

    // NEC counts theta from the zenith; emit the grid bottom-up so the
    // increment stays positive.
    const double theta_start =
        90.0 - (grid.el_start_deg + (grid.n_el - 1) * grid.el_step_deg);
    appendf(deck, "RP 0 %d %d 1000 %.4f %.4f %.4f %.4f\n", grid.n_el, grid.n_az,
            theta_start, grid.az_start_deg, grid.el_step_deg, grid.az_step_deg);
    deck += "EN\n";
    return deck;
}

} // namespace curvant::geom
