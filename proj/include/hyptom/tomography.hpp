#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyptom/body.hpp"
#include "hyptom/geodesic.hpp"

namespace hyptom {

struct SectionResult {
    bool hit = false;     // a genuine chord was found
    bool grazing = false; // touched, but chord length < 1e-8
    Interval chord{};     // valid when hit
};

Interval projection(const Body& K, const Geodesic& G);
SectionResult section(const Body& K, const Geodesic& G);

// |projection onto the normal line at s|
double width_at(const Body& K, const BoundarySample& s);

// equal projection/section lengths AND coinciding interval endpoints, both within tol
bool is_double_normal(const Body& K, const Geodesic& G, double tol = 1e-6);

double diameter(const Body& K, int m = 1024);

struct WidthProfile {
    double min_w = 0.0, max_w = 0.0; // over non-corner samples
    std::vector<std::pair<double, double>> samples; // (theta, width), non-corner
    std::vector<double> corner_widths; // projections onto normal-cone fans
    bool constant(double tol) const { return max_w - min_w < tol; }
};
WidthProfile width_profile(const Body& K, int m);

struct Pencil {
    HPoint p;
    int m = 360;
};
Geodesic pencil_line(const Pencil& P, int k); // angle pi*k/m
std::vector<Geodesic> pencil_lines(const Pencil& P);

struct MeasurementRow {
    double theta = 0.0;
    double projection = 0.0;
    std::optional<double> section;
    std::optional<double> width;
    bool double_normal = false;
};
struct MeasurementTable {
    std::vector<MeasurementRow> rows;
};
MeasurementTable pencil_profile(const Body& K, const Pencil& P, bool with_sections = true);

double equichordal_defect(const Body& K, HPoint p, int m);

Geodesic small_projection(const Body& K, double delta);
// a line of the perpendicular family over L whose projection length matches target
Geodesic projection_of_length(const Body& K, const Geodesic& L, double target, double tol = 1e-6);

struct AngleEntry {
    double s = 0.0; // cumulative arclength along the chain from M
    double alpha = 0.0;
    bool corner = false;
    int piece = -1;
};
std::vector<AngleEntry> normal_angle_profile(const Body& K, const Geodesic& G, int m,
                                             int side = 0);

struct NormalsReport {
    int violations = 0;
    int coincident = 0;
    double min_margin = 1e300;
};
NormalsReport normals_intersect_check(const Body& K, int trials, std::uint64_t seed);

struct CoverReport {
    double worst_refined = 0.0;   // |angle - pi/2| at refined nearest points
    double worst_unrefined = 0.0; // same against raw grid samples
};
CoverReport normal_field_covers(const Body& K, int trials, int m, std::uint64_t seed);

HPoint random_interior_point(const Body& K, std::mt19937_64& rng);
Geodesic random_geodesic_meeting(const Body& K, std::mt19937_64& rng);

struct IsoFrame {
    HPoint q;
    V3 f1, f2;
};
IsoFrame random_iso(std::mt19937_64& rng);
HPoint apply(const IsoFrame& F, HPoint p);
V3 apply_vec(const IsoFrame& F, const V3& v);
Geodesic apply(const IsoFrame& F, const Geodesic& g);
Body apply(const IsoFrame& F, const Body& K);

} // namespace hyptom
