#include "drg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace drg {

Spectrum::Spectrum(std::vector<Eigenvalue> values, long order)
    : values_(std::move(values)), order_(order) {
    long total = 0;
    for (const auto& ev : values_) total += ev.multiplicity;
    if (total != order_) throw InvalidArray("multiplicities do not sum to the order");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i - 1].value <= values_[i].value)
            throw InvalidArray("eigenvalues must be strictly decreasing");
}

long Spectrum::positive_count(double tol) const {
    long c = 0;
    for (const auto& ev : values_)
        if (ev.value > tol) c += ev.multiplicity;
    return c;
}

long Spectrum::negative_count(double tol) const {
    long c = 0;
    for (const auto& ev : values_)
        if (ev.value < -tol) c += ev.multiplicity;
    return c;
}

bool Spectrum::has_minus_k(double tol) const {
    return std::fabs(values_.back().value + values_.front().value) <= tol;
}

std::vector<double> standard_sequence(const IntersectionArray& ia, double theta) {
    const int D = ia.diameter();
    std::vector<double> u(static_cast<std::size_t>(D) + 1);
    u[0] = 1.0;
    u[1] = theta / ia.k();
    for (int i = 1; i < D; ++i) {
        // c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i
        u[static_cast<std::size_t>(i) + 1] =
            ((theta - ia.a(i)) * u[static_cast<std::size_t>(i)] -
             ia.c(i) * u[static_cast<std::size_t>(i) - 1]) /
            ia.b(i);
    }
    return u;
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
// strictly below x, by the classic Sturm sequence count.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    int count = 0;
    double q = 1.0;
    const double tiny = 1e-300;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double offsq = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        q = diag[i] - x - (q == 0.0 ? offsq / tiny : offsq / q);
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

Spectrum drg_spectrum(const IntersectionArray& ia) {
    const int D = ia.diameter();
    const int m = D + 1;
    const long v = ia.order();
    const int k = ia.k();

    // The intersection matrix is tridiagonal with rows (c_i, a_i, b_i); it is
    // similar to a symmetric tridiagonal matrix with the same diagonal and
    // off-diagonal entries sqrt(b_i c_{i+1}).
    std::vector<double> diag(static_cast<std::size_t>(m)), off(static_cast<std::size_t>(D));
    for (int i = 0; i <= D; ++i) diag[static_cast<std::size_t>(i)] = ia.a(i);
    for (int i = 0; i < D; ++i)
        off[static_cast<std::size_t>(i)] =
            std::sqrt(static_cast<double>(ia.b(i)) * ia.c(i + 1));

    // All eigenvalues lie in [-k, k].
    std::vector<double> roots(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        double lo = -static_cast<double>(k) - 1.0, hi = static_cast<double>(k) + 1.0;
        // Shrink until the bracket isolates the j-th smallest eigenvalue.
        while (hi - lo > 1e-12 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
            double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off, mid) <= j)
                lo = mid;
            else
                hi = mid;
        }
        roots[static_cast<std::size_t>(j)] = 0.5 * (lo + hi);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());

    // Multiplicities from the standard sequences.
    std::vector<Eigenvalue> evs;
    evs.reserve(static_cast<std::size_t>(m));
    double sum_m = 0, sum_mt = 0, sum_mt2 = 0;
    for (int j = 0; j < m; ++j) {
        double theta = roots[static_cast<std::size_t>(j)];
        auto u = standard_sequence(ia, theta);
        double denom = 0;
        for (int i = 0; i <= D; ++i)
            denom += static_cast<double>(ia.k_i(i)) * u[static_cast<std::size_t>(i)] *
                     u[static_cast<std::size_t>(i)];
        double mult = static_cast<double>(v) / denom;
        double rounded = std::round(mult);
        if (std::fabs(mult - rounded) > 1e-6)
            throw NonIntegralMultiplicity("multiplicity " + std::to_string(mult) +
                                          " for eigenvalue " + std::to_string(theta) +
                                          " is not an integer");
        if (rounded < 1)
            throw NonIntegralMultiplicity("multiplicity below 1 for eigenvalue " +
                                          std::to_string(theta));
        long mi = static_cast<long>(rounded);
        evs.push_back({theta, mi});
        sum_m += static_cast<double>(mi);
        sum_mt += static_cast<double>(mi) * theta;
        sum_mt2 += static_cast<double>(mi) * theta * theta;
    }

    // Trace identities: sum m = v, sum m*theta = 0, sum m*theta^2 = v*k.
    const double scale = static_cast<double>(v) * k;
    if (std::lround(sum_m) != v) throw InvalidArray("multiplicities do not sum to the order");
    if (std::fabs(sum_mt) > 1e-6 * scale)
        throw InvalidArray("first trace identity fails for this array");
    if (std::fabs(sum_mt2 - scale) > 1e-6 * scale)
        throw InvalidArray("second trace identity fails for this array");

    return Spectrum(std::move(evs), v);
}

Spectrum dense_spectrum(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [u, w] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + w] = 1.0;
        a[static_cast<std::size_t>(w) * n + u] = 1.0;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    // Cyclic Jacobi sweeps.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double offnorm = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) offnorm += at(p, q) * at(p, q);
        if (offnorm < 1e-18 * std::max(1, n)) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < 1e-14) continue;
                double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());

    // Cluster numerically equal eigenvalues into multiplicity classes.
    const double gap = 1e-6;
    std::vector<Eigenvalue> evs;
    std::size_t i = 0;
    while (i < eig.size()) {
        std::size_t j = i;
        double sum = 0;
        while (j < eig.size() && eig[j] > eig[i] - gap) sum += eig[j++];
        evs.push_back({sum / static_cast<double>(j - i), static_cast<long>(j - i)});
        i = j;
    }
    return Spectrum(std::move(evs), n);
}

}  // namespace drg
