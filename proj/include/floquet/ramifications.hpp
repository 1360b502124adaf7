#pragma once

#include <optional>
#include <vector>

#include "floquet/operator_model.hpp"
#include "floquet/reference.hpp"

namespace floquet {

struct SearchBox {
    int k = 1;
    int n = 0;
    Complex center_z;
    double radius_beta = 0.3;
    std::vector<Complex> polygon;  // lambda-image of the z-circle, closed implicitly

    Complex center_lambda(int p) const;
};

struct Cluster {
    int id = 0;                                // 0, +j (even k), -j (odd k)
    std::vector<std::pair<int, int>> members;  // (k, n)
    double re_min = 0.0;                       // extent of the member centres in Re lambda
    double re_max = 0.0;
};

struct ClusterLayout {
    std::vector<Cluster> clusters;  // ordered by Re lambda
    std::vector<double> separators; // R_j between consecutive clusters
};

struct Ramification {
    Complex location;
    int k = 0;
    int n = 0;
    Sign sign = Sign::plus;
    std::optional<size_t> conjugate_partner;  // index within the returned sequence
    int winding_certificate = 0;
    double newton_residual = 0.0;             // |rho(location)|
    double contour_median = 0.0;              // median |rho| on the box contour
    bool is_real = false;
    int multiplicity = 1;                     // 2 when r+ and r- could not be separated
};

struct RamificationOptions {
    double tol = 1e-12;
    int contour_nodes = 256;
    int max_refinements = 6;
    double newton_rel = 1e-6;   // certificate: |rho| <= newton_rel * median |rho| on the contour
    int real_nodes = 64;        // samples along the real segment of a box
};

SearchBox make_box(int p, int k, int n, double beta, int nodes = 64);
std::vector<SearchBox> build_boxes(int p, int n_lo, int n_hi, double beta);

// Union-find over intersecting boxes with the sector sides identified.
ClusterLayout cluster_boxes(int p, const std::vector<SearchBox>& boxes, bool enforce_parity = true);

// rho(lambda) for complex lambda
Complex discriminant(const OperatorSpec& spec, Complex lambda, double tol = 1e-12);

struct WindingResult {
    int winding = 0;
    double min_abs = 0.0;
    double median_abs = 0.0;
    int evaluations = 0;
};

// Winding number of rho along a closed polygon (vertices in order, last joined to first).
WindingResult count_zeros(const OperatorSpec& spec, const std::vector<Complex>& contour,
                          const RamificationOptions& options = {});

std::vector<Ramification> find_ramifications(const OperatorSpec& spec, const SearchBox& box,
                                             const RamificationOptions& options = {});

// Real segment [a, b] of lambda covered by the box (centres lie on the real lambda axis).
std::pair<double, double> box_real_segment(int p, const SearchBox& box);

}  // namespace floquet
