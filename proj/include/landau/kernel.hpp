#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "landau/algebra.hpp"
#include "landau/grid.hpp"

namespace landau {

/// Projector orthogonal to z: I - z z^T / |z|^2. Eigenvalues {0, 1, 1}.
SymMat3 projection_matrix(const Vec3& z);

/// a(z) = |z|^(gamma+2) P(z), gamma in [-2, 0), z != 0.
SymMat3 kernel_a(const Vec3& z, double gamma);

/// b(z) = div a = -2 |z|^gamma z.
Vec3 kernel_b(const Vec3& z, double gamma);

/// c(z) = -2 (gamma+3) |z|^gamma, always negative for gamma > -3.
double kernel_c(const Vec3& z, double gamma);

/// Throws unless gamma lies in [-2, 0).
void require_gamma(double gamma);

/// Cell-averaged collision kernels on the padded difference lattice
/// (2n per axis), plus two scalar power kernels |z|^gamma and
/// |z|^(gamma+2) used by the interaction and trace diagnostics.
///
/// Pointwise b and c are not integrable at z = 0 for gamma <= -1, but all
/// components are integrable over cells for gamma > -3, so the stored cell
/// averages are finite everywhere, including the origin cell. Off-origin
/// cells use a fixed 4-point product Gauss rule; the origin cell uses
/// geometric dyadic subdivision toward the singularity with relative
/// tolerance 1e-6.
///
/// Tables are immutable after construction and safe to share across threads.
class KernelTables {
  public:
    enum class Comp {
        axx = 0, ayy, azz, axy, axz, ayz,
        bx, by, bz,
        c,
        pow_gamma,        // cell average of |z|^gamma
        pow_gamma_plus2,  // cell average of |z|^(gamma+2)
    };
    static constexpr int kComponents = 12;
    static constexpr std::uint32_t kQuadratureVersion = 1;

    static KernelTables build(const VelocityGrid& grid, double gamma);

    /// Binary cache: header (magic, version, n, L, gamma) + raw
    /// little-endian doubles in component-major order.
    void save(const std::filesystem::path& path) const;
    static std::optional<KernelTables> load(const std::filesystem::path& path,
                                            const VelocityGrid& grid,
                                            double gamma);

    /// Loads from `cache_dir` when a matching file exists, otherwise builds
    /// and (best-effort) writes the cache. Empty cache_dir disables caching.
    static KernelTables build_or_load(const VelocityGrid& grid, double gamma,
                                      const std::filesystem::path& cache_dir);

    static std::string cache_file_name(const VelocityGrid& grid, double gamma);

    double gamma() const { return gamma_; }
    const VelocityGrid& grid() const { return grid_; }
    int padded_n() const { return padded_n_; }
    std::size_t padded_size() const {
        return static_cast<std::size_t>(padded_n_) * padded_n_ * padded_n_;
    }

    std::span<const double> table(Comp c) const {
        return tables_[static_cast<int>(c)];
    }
    std::span<const std::complex<double>> spectrum(Comp c) const {
        return spectra_[static_cast<int>(c)];
    }

    std::size_t padded_index(int mi, int mj, int mk) const {
        return (static_cast<std::size_t>(mi) * padded_n_ + mj) * padded_n_ + mk;
    }
    /// Lattice offset (in nodes) encoded by padded axis index m.
    int offset_of(int m) const { return m < grid_.n() ? m : m - padded_n_; }
    /// Padded axis index encoding lattice offset d in [-n, n-1].
    int index_of(int d) const { return d >= 0 ? d : d + padded_n_; }
    Vec3 offset_coord(int mi, int mj, int mk) const {
        const double dv = grid_.spacing();
        return {offset_of(mi) * dv, offset_of(mj) * dv, offset_of(mk) * dv};
    }

    SymMat3 a_avg_at(std::size_t idx) const {
        return {tables_[0][idx], tables_[1][idx], tables_[2][idx],
                tables_[3][idx], tables_[4][idx], tables_[5][idx]};
    }
    Vec3 b_avg_at(std::size_t idx) const {
        return {tables_[6][idx], tables_[7][idx], tables_[8][idx]};
    }

  private:
    KernelTables() = default;
    void compute_spectra();

    double gamma_ = 0.0;
    VelocityGrid grid_;
    int padded_n_ = 0;
    std::vector<std::vector<double>> tables_;
    std::vector<std::vector<std::complex<double>>> spectra_;
};

}  // namespace landau
