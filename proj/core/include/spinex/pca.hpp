#pragma once

#include <cstddef>
#include <vector>

#include "spinex/matrix.hpp"

namespace spinex {

struct PcaProjection {
    std::vector<double> pc1;  // length n_rows
    std::vector<double> pc2;
    std::vector<double> component1;  // unit loading vectors, length n_cols
    std::vector<double> component2;
    double lambda1 = 0.0;  // covariance eigenvalues of the two components
    double lambda2 = 0.0;
    bool second_component_degenerate = false;  // pc2 forced to zero (rank < 2)
};

/// Projects rows onto the top two principal axes: center columns, extract
/// eigenvectors of the covariance (divisor n-1) by power iteration with
/// deflation (tolerance 1e-9, at most 1000 iterations), orient each component
/// so its first nonzero loading is positive. Rank-deficient data yields an
/// all-zero second coordinate and sets the degeneracy flag.
PcaProjection pca_project_2d(const FeatureMatrix& m);

}  // namespace spinex
