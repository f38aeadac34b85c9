#include "rmhd/fields.hpp"

#include <cstring>

namespace rmhd {

namespace {

// source index for a ghost index i on an array of n interior entries
inline int map_index(int i, int n, BoundaryCondition kind) {
  if (kind == BoundaryCondition::Periodic) return ((i % n) + n) % n;
  return i < 0 ? 0 : n - 1;  // outflow clamp
}

template <class At>
void fill_2d(int nx, int ny, int gw, int nb, At&& at, const GhostRule& xlo,
             const GhostRule& xhi, const GhostRule& ylo, const GhostRule& yhi) {
  auto copy_from = [&](int j, int k, const GhostRule& rule, int src_j, int src_k) {
    double* dst = at(j, k);
    if (rule.kind == BoundaryCondition::Inflow)
      std::memcpy(dst, rule.inflow_block.data(), nb * sizeof(double));
    else
      std::memcpy(dst, at(src_j, src_k), nb * sizeof(double));
  };
  // x ghosts on interior rows, then y ghosts on complete rows (covers corners)
  for (int k = 0; k < ny; ++k)
    for (int g = 1; g <= gw; ++g) {
      copy_from(-g, k, xlo, map_index(-g, nx, xlo.kind), k);
      copy_from(nx - 1 + g, k, xhi, map_index(nx - 1 + g, nx, xhi.kind), k);
    }
  for (int g = 1; g <= gw; ++g)
    for (int j = -gw; j < nx + gw; ++j) {
      copy_from(j, -g, ylo, j, map_index(-g, ny, ylo.kind));
      copy_from(j, ny - 1 + g, yhi, j, map_index(ny - 1 + g, ny, yhi.kind));
    }
}

}  // namespace

GhostRule make_ghost_rule(const BoundarySpec& bc, std::vector<double> inflow_block) {
  GhostRule r;
  r.kind = bc.kind;
  if (bc.kind == BoundaryCondition::Inflow) r.inflow_block = std::move(inflow_block);
  return r;
}

void fill_ghosts(CellField1D& f, const GhostRule& lo, const GhostRule& hi) {
  const int nb = f.block();
  for (int g = 1; g <= f.gw; ++g) {
    if (lo.kind == BoundaryCondition::Inflow)
      std::memcpy(f.cell(-g), lo.inflow_block.data(), nb * sizeof(double));
    else
      std::memcpy(f.cell(-g), f.cell(map_index(-g, f.n, lo.kind)), nb * sizeof(double));
    const int i = f.n - 1 + g;
    if (hi.kind == BoundaryCondition::Inflow)
      std::memcpy(f.cell(i), hi.inflow_block.data(), nb * sizeof(double));
    else
      std::memcpy(f.cell(i), f.cell(map_index(i, f.n, hi.kind)), nb * sizeof(double));
  }
}

void fill_ghosts(CellField2D& f, const GhostRule& xlo, const GhostRule& xhi,
                 const GhostRule& ylo, const GhostRule& yhi) {
  fill_2d(f.nx, f.ny, f.gw, f.block(),
          [&](int j, int k) { return f.cell(j, k); }, xlo, xhi, ylo, yhi);
}

void fill_ghosts(EdgeField2D& f, const GhostRule& xlo, const GhostRule& xhi,
                 const GhostRule& ylo, const GhostRule& yhi) {
  fill_2d(f.nex, f.ney, f.gw, f.nmode,
          [&](int j, int k) { return f.edge(j, k); }, xlo, xhi, ylo, yhi);
}

}  // namespace rmhd
