#pragma once

#include <string>
#include <vector>

#include "floquet/monodromy.hpp"
#include "floquet/operator_model.hpp"
#include "floquet/reference.hpp"

namespace floquet {

enum class Parity { periodic, antiperiodic };

const char* parity_name(Parity p);

enum class EdgeKind { periodic_eig, antiperiodic_eig, ramification, unresolved };

const char* edge_kind_name(EdgeKind k);

struct EndpointClassification {
    EdgeKind kind = EdgeKind::unresolved;
    double location = 0.0;
    double residual = 0.0;
    // eigenvalue labelling (periodic_eigenvalues only): lambda_m^sign, m = 2n or 2n+1
    int index = -1;
    Sign sign = Sign::plus;
    int multiplicity = 1;
};

struct SpectralBand {
    double lo = 0.0;
    double hi = 0.0;
    int multiplicity = 0;
    EndpointClassification edge_lo;
    EndpointClassification edge_hi;
};

struct SpectralGap {
    double lo = 0.0;
    double hi = 0.0;
};

struct BandScan {
    std::vector<SpectralBand> bands;  // adjacent bands with different multiplicity share an edge
    std::vector<SpectralGap> gaps;
    int evaluations = 0;
};

struct SpectrumOptions {
    double tol = 1e-12;              // monodromy tolerance (RK engine)
    double imag_threshold = 1e-7;    // |Im Delta| below which a branch counts as real
    double band_slack = 1e-9;        // Re Delta in [-1 - slack, 1 + slack]
    int n_min = 3;                   // disks with index m <= n_min are exempt from the count check
    int nodes_per_disk = 32;         // real-axis samples per pi in z
    double root_rel_tol = 1e-13;
};

// prod_j (Delta_j(lambda) - s), s = +1 or -1, for real lambda.
double d_plus_minus(const OperatorSpec& spec, double lambda, Sign sign, double tol = 1e-12);

// Lower bound for the spectrum from the Fourier symbol and the l1 norms of the coefficients.
double spectral_lower_bound(const OperatorSpec& spec);

// Zeros of D_+ (periodic) or D_- (antiperiodic) in the disks |z - pi m| < pi/2 on the real
// lambda axis, m = 2n or 2n+1 for n = 0..n_max. Disk m = 0 (or 1) also covers everything
// down to spectral_lower_bound.
std::vector<EndpointClassification> periodic_eigenvalues(const OperatorSpec& spec, int n_max, Parity parity,
                                                         const SpectrumOptions& options = {});

// Roots per disk index m, with multiplicity, as found by periodic_eigenvalues.
std::vector<int> disk_counts(const std::vector<EndpointClassification>& eigs, int m_max, Parity parity);

// Number of branches with Delta_j real in [-1, 1].
int band_count(const OperatorSpec& spec, double lambda, const SpectrumOptions& options = {});

BandScan band_scan(const OperatorSpec& spec, double lo, double hi, int grid, const SpectrumOptions& options = {});

// step: local scale used to normalise the residuals
EndpointClassification classify_endpoint(const OperatorSpec& spec, double lambda, double step,
                                         const SpectrumOptions& options = {});

// Sample nodes uniform in u = sign(lambda) |lambda|^{1/2p}.
std::vector<double> energy_nodes(double lo, double hi, int count, int p);

}  // namespace floquet
