#ifndef DGLAB_GRID_HPP
#define DGLAB_GRID_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "dglab/errors.hpp"

namespace dglab {

// Uniform tensor grid on [x_lo,x_hi] x [0,t_hi]; nodes are cell centers for
// quadrature purposes (midpoint rule, cell volume dx*dt).
struct Grid {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double t_hi = 1.0;
    int nx = 2;
    int nt = 2;
    double dx = 0.0;
    double dt = 0.0;

    static Grid make(double x_lo, double x_hi, double t_hi, int nx, int nt) {
        if (!(x_hi > x_lo) || !(t_hi > 0.0) || nx < 2 || nt < 2)
            throw ConfigError("grid: need x_hi>x_lo, t_hi>0, nx,nt>=2");
        Grid g;
        g.x_lo = x_lo;
        g.x_hi = x_hi;
        g.t_hi = t_hi;
        g.nx = nx;
        g.nt = nt;
        g.dx = (x_hi - x_lo) / (nx - 1);
        g.dt = t_hi / (nt - 1);
        return g;
    }

    double x(int i) const { return x_lo + i * dx; }
    double t(int j) const { return j * dt; }
    int idx(int i, int j) const { return j * nx + i; }
    int n_nodes() const { return nx * nt; }

    // Nearest node / slice with a tiny snap tolerance so that values produced
    // by algebra on grid-aligned quantities round consistently.
    int nearest_x(double xv) const {
        long long i = (long long)std::floor((xv - x_lo) / dx + 0.5 + 1e-9);
        if (i < 0) i = 0;
        if (i > nx - 1) i = nx - 1;
        return (int)i;
    }
    int nearest_slice(double tv) const {
        long long j = (long long)std::floor(tv / dt + 0.5 + 1e-9);
        if (j < 0) j = 0;
        if (j > nt - 1) j = nt - 1;
        return (int)j;
    }
    bool slice_in_range(double tv) const { return tv >= -1e-12 && tv <= t_hi + 1e-12; }
};

enum class Region : std::uint8_t { region1 = 1, region2 = 2, interface_ = 0 };

// Per-slice codimension-1 interface: one node index per time slice separates
// region 1 (left) from region 2 (right).
class RegionPartition {
  public:
    RegionPartition() = default;

    // Interface along the line x = m*t + q (vertical interface for m = 0).
    static RegionPartition from_line(const Grid& g, double m, double q) {
        RegionPartition p;
        p.nx_ = g.nx;
        p.gamma_.resize(g.nt);
        for (int j = 0; j < g.nt; ++j) {
            double xg = m * g.t(j) + q;
            int gi = g.nearest_x(xg);
            if (gi <= 0 || gi >= g.nx - 1)
                throw NonPartitioned("interface leaves the domain interior at t=" +
                                     std::to_string(g.t(j)));
            p.gamma_[j] = gi;
            p.gamma_x_.push_back(g.x(gi));
        }
        return p;
    }

    Region label(int i, int j) const {
        int gi = gamma_[j];
        if (i < gi) return Region::region1;
        if (i > gi) return Region::region2;
        return Region::interface_;
    }
    int interface_index(int j) const { return gamma_[j]; }
    double interface_x(int j) const { return gamma_x_[j]; }
    int nt() const { return (int)gamma_.size(); }
    int nx() const { return nx_; }

  private:
    int nx_ = 0;
    std::vector<int> gamma_;
    std::vector<double> gamma_x_;
};

// Node membership set with cell-count measure.  kind distinguishes sets living
// in a single time slice (measure = count*dx) from space-time sets
// (measure = count*dx*dt).
class NodeSet {
  public:
    enum class Kind { slice, spacetime };

    NodeSet() = default;
    NodeSet(const Grid& g, Kind k) : nx_(g.nx), nt_(g.nt), dx_(g.dx), dt_(g.dt), kind_(k),
                                     mask_(g.n_nodes(), 0) {}

    void add(int i, int j) { mask_[j * nx_ + i] = 1; }
    bool contains(int i, int j) const { return mask_[j * nx_ + i] != 0; }
    Kind kind() const { return kind_; }
    void set_kind(Kind k) { kind_ = k; }
    int nx() const { return nx_; }
    int nt() const { return nt_; }

    long count() const {
        long c = 0;
        for (auto b : mask_) c += b;
        return c;
    }
    bool empty() const { return count() == 0; }
    double cell_volume() const { return kind_ == Kind::slice ? dx_ : dx_ * dt_; }
    double measure() const { return (double)count() * cell_volume(); }

    NodeSet& unite(const NodeSet& o) {
        for (std::size_t k = 0; k < mask_.size(); ++k) mask_[k] |= o.mask_[k];
        return *this;
    }
    NodeSet& intersect(const NodeSet& o) {
        for (std::size_t k = 0; k < mask_.size(); ++k) mask_[k] &= o.mask_[k];
        return *this;
    }
    NodeSet& subtract(const NodeSet& o) {
        for (std::size_t k = 0; k < mask_.size(); ++k)
            mask_[k] = (std::uint8_t)(mask_[k] & (o.mask_[k] ^ 1));
        return *this;
    }
    bool subset_of(const NodeSet& o) const {
        for (std::size_t k = 0; k < mask_.size(); ++k)
            if (mask_[k] && !o.mask_[k]) return false;
        return true;
    }

    template <class F> void for_each(F&& f) const {
        for (int j = 0; j < nt_; ++j)
            for (int i = 0; i < nx_; ++i)
                if (mask_[j * nx_ + i]) f(i, j);
    }

    // Time-slice span [j_min, j_max]; (-1,-1) if empty.
    std::pair<int, int> slice_span() const {
        int lo = -1, hi = -1;
        for (int j = 0; j < nt_; ++j) {
            bool any = false;
            for (int i = 0; i < nx_; ++i)
                if (mask_[j * nx_ + i]) { any = true; break; }
            if (any) {
                if (lo < 0) lo = j;
                hi = j;
            }
        }
        return {lo, hi};
    }

  private:
    int nx_ = 0, nt_ = 0;
    double dx_ = 0.0, dt_ = 0.0;
    Kind kind_ = Kind::spacetime;
    std::vector<std::uint8_t> mask_;
};

// Plain per-node scalar field (solutions, test functions, cutoffs).
struct ScalarField {
    int nx = 0, nt = 0;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : nx(g.nx), nt(g.nt), v(g.n_nodes(), 0.0) {}

    double& at(int i, int j) { return v[(std::size_t)j * nx + i]; }
    double at(int i, int j) const { return v[(std::size_t)j * nx + i]; }
};

} // namespace dglab

#endif
