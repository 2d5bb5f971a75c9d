#include "spinex/pca.hpp"

#include <cmath>
#include <string>

#include "spinex/error.hpp"
#include "spinex/rng.hpp"

namespace spinex {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

void matvec(const std::vector<double>& cov, std::size_t d, const std::vector<double>& v,
            std::vector<double>& out) {
    for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            acc += cov[i * d + j] * v[j];
        }
        out[i] = acc;
    }
}

/// Dominant eigenvector of cov by power iteration. When orthogonal_to is
/// given the iterate is re-orthogonalized against it every step, since
/// deflation leaves numerical residue along the removed direction that would
/// otherwise be re-amplified.
std::vector<double> power_iterate(const std::vector<double>& cov, std::size_t d,
                                  const std::vector<double>* orthogonal_to) {
    SeededRng rng(0x5ca1ab1e);
    std::vector<double> v(d);
    for (auto& x : v) {
        x = rng.next_normal();
    }
    if (orthogonal_to) {
        const double proj = dot(v, *orthogonal_to);
        for (std::size_t j = 0; j < d; ++j) {
            v[j] -= proj * (*orthogonal_to)[j];
        }
    }
    double len = norm(v);
    if (len == 0.0) {
        v[0] = 1.0;
        len = 1.0;
    }
    for (auto& x : v) {
        x /= len;
    }

    std::vector<double> next(d);
    for (int iter = 0; iter < 1000; ++iter) {
        matvec(cov, d, v, next);
        if (orthogonal_to) {
            const double proj = dot(next, *orthogonal_to);
            for (std::size_t j = 0; j < d; ++j) {
                next[j] -= proj * (*orthogonal_to)[j];
            }
        }
        const double len_next = norm(next);
        if (len_next == 0.0) {
            break;  // vector annihilated: no variance left in this subspace
        }
        for (auto& x : next) {
            x /= len_next;
        }
        // Convergence up to sign.
        double diff = 0.0;
        double sum = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            diff += (next[j] - v[j]) * (next[j] - v[j]);
            sum += (next[j] + v[j]) * (next[j] + v[j]);
        }
        v = next;
        if (std::sqrt(std::min(diff, sum)) < 1e-9) {
            break;
        }
    }
    return v;
}

void orient_first_nonzero_positive(std::vector<double>& v) {
    for (double x : v) {
        if (std::fabs(x) > 1e-12) {
            if (x < 0.0) {
                for (auto& y : v) {
                    y = -y;
                }
            }
            return;
        }
    }
}

}  // namespace

PcaProjection pca_project_2d(const FeatureMatrix& m) {
    m.validate();
    if (m.n_rows < 2 || m.n_cols < 2) {
        throw ArgumentError("pca projection needs at least 2 rows and 2 columns; got " +
                            std::to_string(m.n_rows) + "x" + std::to_string(m.n_cols));
    }
    const std::size_t n = m.n_rows;
    const std::size_t d = m.n_cols;

    std::vector<double> centered(n * d);
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            mean += m.at(r, j);
        }
        mean /= static_cast<double>(n);
        for (std::size_t r = 0; r < n; ++r) {
            centered[r * d + j] = m.at(r, j) - mean;
        }
    }

    std::vector<double> cov(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            double acc = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                acc += centered[r * d + i] * centered[r * d + j];
            }
            acc /= static_cast<double>(n - 1);
            cov[i * d + j] = acc;
            cov[j * d + i] = acc;
        }
    }

    PcaProjection out;
    out.component1 = power_iterate(cov, d, nullptr);
    std::vector<double> tmp(d);
    matvec(cov, d, out.component1, tmp);
    out.lambda1 = dot(out.component1, tmp);

    if (out.lambda1 <= 0.0) {
        // No variance at all: both projections are identically zero.
        out.component1.assign(d, 0.0);
        out.component2.assign(d, 0.0);
        out.pc1.assign(n, 0.0);
        out.pc2.assign(n, 0.0);
        out.lambda1 = 0.0;
        out.second_component_degenerate = true;
        return out;
    }

    std::vector<double> deflated = cov;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            deflated[i * d + j] -= out.lambda1 * out.component1[i] * out.component1[j];
        }
    }
    out.component2 = power_iterate(deflated, d, &out.component1);
    // Deflation leaves a residue of a few ulps along the first component. On
    // rank-deficient data that residue out-amplifies the empty orthogonal
    // subspace, the iterate drifts back to component1, and projecting the
    // drift away cannot help: the projection's own rounding stays parallel.
    // So degeneracy is judged by the variance the deflated matrix still holds
    // along the iterate — a genuine second component keeps its eigenvalue
    // there, while a drifted iterate sees only the ulp-sized residue.
    const double drift = dot(out.component2, out.component1);
    for (std::size_t j = 0; j < d; ++j) {
        out.component2[j] -= drift * out.component1[j];
    }
    const double len2 = norm(out.component2);
    if (len2 > 0.0) {
        for (auto& x : out.component2) {
            x /= len2;
        }
    }
    matvec(deflated, d, out.component2, tmp);
    const double lambda2_available = dot(out.component2, tmp);
    matvec(cov, d, out.component2, tmp);
    out.lambda2 = dot(out.component2, tmp);

    if (!(lambda2_available > 1e-12 * out.lambda1)) {
        out.component2.assign(d, 0.0);
        out.lambda2 = 0.0;
        out.second_component_degenerate = true;
    }

    orient_first_nonzero_positive(out.component1);
    orient_first_nonzero_positive(out.component2);

    out.pc1.resize(n);
    out.pc2.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        double p1 = 0.0;
        double p2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            p1 += centered[r * d + j] * out.component1[j];
            p2 += centered[r * d + j] * out.component2[j];
        }
        out.pc1[r] = p1;
        out.pc2[r] = out.second_component_degenerate ? 0.0 : p2;
    }
    return out;
}

}  // namespace spinex
