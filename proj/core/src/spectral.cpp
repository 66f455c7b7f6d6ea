#include "ubergraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ubergraph {

namespace {

constexpr double kEigenvalueTolerance = 1e-9;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
}

} // namespace

std::vector<double> symmetric_eigenvalues(const std::vector<double>& entries, std::size_t n) {
    if (entries.size() != n * n)
        throw std::invalid_argument("matrix storage does not match its dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (entries[i * n + j] != entries[j * n + i])
                throw UbergraphError(ErrorCode::not_symmetric,
                                     "eigensolver requires a symmetric matrix");

    std::vector<double> a = entries;
    double frobenius = 0.0;
    for (double x : a) frobenius += x * x;
    frobenius = std::sqrt(frobenius);
    const double threshold = 1e-12 * (1.0 + frobenius);

    bool converged = off_diagonal_norm(a, n) < threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                // tan of the rotation angle, the smaller root for stability
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a[i * n + p];
                    double aiq = a[i * n + q];
                    a[i * n + p] = aip - s * (aiq + aip * tau);
                    a[p * n + i] = a[i * n + p];
                    a[i * n + q] = aiq + s * (aip - aiq * tau);
                    a[q * n + i] = a[i * n + q];
                }
            }
        }
        converged = off_diagonal_norm(a, n) < threshold;
    }
    if (!converged)
        throw UbergraphError(ErrorCode::no_convergence,
                             "Jacobi eigensolver did not converge within 100 sweeps");

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    return eigenvalues;
}

namespace {

std::vector<double> normalised_spectrum(const std::vector<double>& eigenvalues,
                                        std::int64_t trace) {
    if (trace <= 0)
        throw UbergraphError(ErrorCode::degenerate_distribution,
                             "Laplacian trace is zero; the spectral distribution is undefined");
    std::vector<double> mu;
    mu.reserve(eigenvalues.size());
    for (double lambda : eigenvalues) {
        if (lambda < -kEigenvalueTolerance)
            throw UbergraphError(ErrorCode::negative_eigenvalue,
                                 "Laplacian eigenvalue " + std::to_string(lambda) +
                                     " is negative beyond rounding tolerance");
        if (lambda < 0.0) lambda = 0.0; // rounding noise from the eigensolver
        mu.push_back(lambda / static_cast<double>(trace));
    }
    return mu;
}

double entropy_from_distribution(const std::vector<double>& mu) {
    double entropy = 0.0;
    for (double p : mu)
        if (p > 0.0) entropy -= p * std::log2(p);
    return entropy;
}

} // namespace

double spectral_entropy(const std::vector<double>& eigenvalues, std::int64_t trace) {
    return entropy_from_distribution(normalised_spectrum(eigenvalues, trace));
}

SpectralReport spectral_report(const Ubergraph& u) {
    LabeledMatrix l = laplacian(u);
    std::vector<double> entries(l.entries.begin(), l.entries.end());

    SpectralReport report;
    report.eigenvalues = symmetric_eigenvalues(entries, l.rows());
    for (std::size_t i = 0; i < l.rows(); ++i) report.trace += l.at(i, i);
    report.mu = normalised_spectrum(report.eigenvalues, report.trace);
    report.entropy_bits = entropy_from_distribution(report.mu);
    return report;
}

} // namespace ubergraph
