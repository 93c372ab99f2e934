#include "landau/kernel.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "landau/fft.hpp"

namespace landau {

void require_gamma(double gamma) {
    if (!(gamma >= -2.0 && gamma < 0.0)) {
        std::ostringstream os;
        os << "gamma must lie in [-2, 0), got " << gamma;
        throw std::invalid_argument(os.str());
    }
}

SymMat3 projection_matrix(const Vec3& z) {
    const double r2 = z.norm2();
    if (r2 == 0.0) {
        throw std::invalid_argument("projection_matrix: z = 0 has no direction");
    }
    const double inv = 1.0 / r2;
    return {1.0 - z.x * z.x * inv, 1.0 - z.y * z.y * inv, 1.0 - z.z * z.z * inv,
            -z.x * z.y * inv, -z.x * z.z * inv, -z.y * z.z * inv};
}

SymMat3 kernel_a(const Vec3& z, double gamma) {
    require_gamma(gamma);
    const double r2 = z.norm2();
    if (r2 == 0.0) throw std::invalid_argument("kernel_a: z = 0 is singular");
    // |z|^(gamma+2) P(z) = |z|^(gamma+2) I - |z|^gamma z z^T
    const double rg = std::pow(r2, 0.5 * gamma);
    const double rg2 = rg * r2;
    return {rg2 - rg * z.x * z.x, rg2 - rg * z.y * z.y, rg2 - rg * z.z * z.z,
            -rg * z.x * z.y, -rg * z.x * z.z, -rg * z.y * z.z};
}

Vec3 kernel_b(const Vec3& z, double gamma) {
    require_gamma(gamma);
    const double r2 = z.norm2();
    if (r2 == 0.0) throw std::invalid_argument("kernel_b: z = 0 is singular");
    const double rg = std::pow(r2, 0.5 * gamma);
    return {-2.0 * rg * z.x, -2.0 * rg * z.y, -2.0 * rg * z.z};
}

double kernel_c(const Vec3& z, double gamma) {
    require_gamma(gamma);
    const double r2 = z.norm2();
    if (r2 == 0.0) throw std::invalid_argument("kernel_c: z = 0 is singular");
    return -2.0 * (gamma + 3.0) * std::pow(r2, 0.5 * gamma);
}

namespace {

constexpr int kNC = KernelTables::kComponents;

struct KernelPoint {
    std::array<double, kNC> v{};

    void accumulate(const Vec3& z, double gamma, double w) {
        const double r2 = z.norm2();
        const double rg = std::pow(r2, 0.5 * gamma);
        const double rg2 = rg * r2;
        v[0] += w * (rg2 - rg * z.x * z.x);
        v[1] += w * (rg2 - rg * z.y * z.y);
        v[2] += w * (rg2 - rg * z.z * z.z);
        v[3] += w * (-rg * z.x * z.y);
        v[4] += w * (-rg * z.x * z.z);
        v[5] += w * (-rg * z.y * z.z);
        v[6] += w * (-2.0 * rg * z.x);
        v[7] += w * (-2.0 * rg * z.y);
        v[8] += w * (-2.0 * rg * z.z);
        v[9] += w * (-2.0 * (gamma + 3.0) * rg);
        v[10] += w * rg;
        v[11] += w * rg2;
    }

    KernelPoint& operator+=(const KernelPoint& o) {
        for (int i = 0; i < kNC; ++i) v[i] += o.v[i];
        return *this;
    }
};

// 4-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 4> kGx = {-0.8611363115940526, -0.3399810435848563,
                                       0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGw = {0.34785484513745385, 0.6521451548625461,
                                       0.6521451548625461, 0.34785484513745385};

// Integral (not average) of all components over the box [lo, lo+ext].
KernelPoint gauss_box(const Vec3& lo, const Vec3& ext, double gamma) {
    KernelPoint acc;
    const double hx = 0.5 * ext.x, hy = 0.5 * ext.y, hz = 0.5 * ext.z;
    const double cx = lo.x + hx, cy = lo.y + hy, cz = lo.z + hz;
    const double jac = hx * hy * hz;
    for (int qi = 0; qi < 4; ++qi) {
        for (int qj = 0; qj < 4; ++qj) {
            for (int qk = 0; qk < 4; ++qk) {
                const Vec3 z{cx + hx * kGx[qi], cy + hy * kGx[qj], cz + hz * kGx[qk]};
                acc.accumulate(z, gamma, jac * kGw[qi] * kGw[qj] * kGw[qk]);
            }
        }
    }
    return acc;
}

// Integral over the origin-centered cell [-h, h]^3 by geometric dyadic
// subdivision toward the singular point. Each octant is handled as a box
// [0, t]^3 whose origin-adjacent child recurses while the other seven are
// integrated with the fixed Gauss rule.
KernelPoint origin_cell_integral(double h, double gamma) {
    constexpr int kMaxDepth = 60;
    constexpr double kRelTol = 1e-6;
    KernelPoint total;
    double t = h;
    for (int depth = 0; depth < kMaxDepth; ++depth) {
        KernelPoint level;
        const double c = 0.5 * t;
        for (int sx = -1; sx <= 1; sx += 2) {
            for (int sy = -1; sy <= 1; sy += 2) {
                for (int sz = -1; sz <= 1; sz += 2) {
                    // children of the octant box at offsets {0, c}^3;
                    // skip the (0,0,0) child containing the origin corner
                    for (int ox = 0; ox < 2; ++ox) {
                        for (int oy = 0; oy < 2; ++oy) {
                            for (int oz = 0; oz < 2; ++oz) {
                                if (ox == 0 && oy == 0 && oz == 0) continue;
                                Vec3 lo{ox * c, oy * c, oz * c};
                                Vec3 hi{lo.x + c, lo.y + c, lo.z + c};
                                if (sx < 0) { const double a = lo.x; lo.x = -hi.x; hi.x = -a; }
                                if (sy < 0) { const double a = lo.y; lo.y = -hi.y; hi.y = -a; }
                                if (sz < 0) { const double a = lo.z; lo.z = -hi.z; hi.z = -a; }
                                level += gauss_box(lo, hi - lo, gamma);
                            }
                        }
                    }
                }
            }
        }
        total += level;
        double delta = 0.0, base = 0.0;
        for (int i = 0; i < kNC; ++i) {
            delta += std::fabs(level.v[i]);
            base += std::fabs(total.v[i]);
        }
        if (depth > 0 && delta <= kRelTol * base) return total;
        t = c;
    }
    throw std::runtime_error(
        "kernel tables: origin-cell quadrature failed to converge; "
        "check gamma and grid configuration");
}

}  // namespace

KernelTables KernelTables::build(const VelocityGrid& grid, double gamma) {
    require_gamma(gamma);
    KernelTables kt;
    kt.gamma_ = gamma;
    kt.grid_ = grid;
    kt.padded_n_ = 2 * grid.n();
    kt.tables_.assign(kNC, std::vector<double>(kt.padded_size(), 0.0));

    const int np = kt.padded_n_;
    const double dv = grid.spacing();
    const double h = 0.5 * dv;
    const double inv_vol = 1.0 / grid.cell_volume();

#pragma omp parallel for schedule(static)
    for (int mi = 0; mi < np; ++mi) {
        const double zx = kt.offset_of(mi) * dv;
        for (int mj = 0; mj < np; ++mj) {
            const double zy = kt.offset_of(mj) * dv;
            for (int mk = 0; mk < np; ++mk) {
                const double zz = kt.offset_of(mk) * dv;
                const std::size_t idx = kt.padded_index(mi, mj, mk);
                KernelPoint p;
                if (zx == 0.0 && zy == 0.0 && zz == 0.0) {
                    p = origin_cell_integral(h, gamma);
                } else {
                    p = gauss_box({zx - h, zy - h, zz - h}, {dv, dv, dv}, gamma);
                }
                for (int c = 0; c < kNC; ++c) {
                    kt.tables_[c][idx] = p.v[c] * inv_vol;
                }
            }
        }
    }

    kt.compute_spectra();
    return kt;
}

void KernelTables::compute_spectra() {
    RealFFT3D fft(padded_n_);
    spectra_.assign(kNC, std::vector<std::complex<double>>(fft.complex_size()));
    for (int c = 0; c < kNC; ++c) {
        fft.forward(tables_[c], spectra_[c]);
    }
}

namespace {

constexpr char kMagic[4] = {'L', 'K', 'T', 'B'};

struct CacheHeader {
    char magic[4];
    std::uint32_t version;
    std::uint32_t n;
    std::uint32_t reserved;
    double half_width;
    double gamma;
};
static_assert(sizeof(CacheHeader) == 32);

}  // namespace

void KernelTables::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    CacheHeader hd{};
    std::memcpy(hd.magic, kMagic, 4);
    hd.version = kQuadratureVersion;
    hd.n = static_cast<std::uint32_t>(grid_.n());
    hd.reserved = 0;
    hd.half_width = grid_.half_width();
    hd.gamma = gamma_;
    out.write(reinterpret_cast<const char*>(&hd), sizeof(hd));
    for (const auto& t : tables_) {
        out.write(reinterpret_cast<const char*>(t.data()),
                  static_cast<std::streamsize>(t.size() * sizeof(double)));
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::optional<KernelTables> KernelTables::load(const std::filesystem::path& path,
                                               const VelocityGrid& grid,
                                               double gamma) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    CacheHeader hd{};
    in.read(reinterpret_cast<char*>(&hd), sizeof(hd));
    if (!in || std::memcmp(hd.magic, kMagic, 4) != 0) return std::nullopt;
    if (hd.version != kQuadratureVersion) return std::nullopt;
    if (hd.n != static_cast<std::uint32_t>(grid.n()) ||
        hd.half_width != grid.half_width() || hd.gamma != gamma) {
        return std::nullopt;
    }
    KernelTables kt;
    kt.gamma_ = gamma;
    kt.grid_ = grid;
    kt.padded_n_ = 2 * grid.n();
    kt.tables_.assign(kNC, std::vector<double>(kt.padded_size()));
    for (auto& t : kt.tables_) {
        in.read(reinterpret_cast<char*>(t.data()),
                static_cast<std::streamsize>(t.size() * sizeof(double)));
    }
    if (!in) return std::nullopt;
    kt.compute_spectra();
    return kt;
}

std::string KernelTables::cache_file_name(const VelocityGrid& grid, double gamma) {
    std::ostringstream os;
    os << "landau_tables_n" << grid.n() << "_L" << grid.half_width() << "_g"
       << gamma << "_q" << kQuadratureVersion << ".bin";
    return os.str();
}

KernelTables KernelTables::build_or_load(const VelocityGrid& grid, double gamma,
                                         const std::filesystem::path& cache_dir) {
    if (!cache_dir.empty()) {
        const auto path = cache_dir / cache_file_name(grid, gamma);
        if (auto kt = load(path, grid, gamma)) return std::move(*kt);
        KernelTables kt = build(grid, gamma);
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        if (!ec) {
            try {
                kt.save(path);
            } catch (const std::exception&) {
                // cache write failure is not fatal
            }
        }
        return kt;
    }
    return build(grid, gamma);
}

}  // namespace landau
