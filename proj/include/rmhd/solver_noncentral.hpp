#pragma once

#include <functional>
#include <memory>

#include "rmhd/basis.hpp"
#include "rmhd/fields.hpp"
#include "rmhd/limiter.hpp"
#include "rmhd/mesh.hpp"
#include "rmhd/physics.hpp"

namespace rmhd {

enum class LimiterMode { Off, Adaptive, Global };

struct SolverOptions {
  double cfl = 0.3;
  double tvb_M = 500.0;
  double theta_blend = 1.0;  // central methods only
  LimiterMode limiter = LimiterMode::Adaptive;
  RecoverOptions recover;
};

// Locally divergence-free RKDG, 1D: all eight components on the modal
// Legendre basis, global Lax-Friedrichs interface flux.
class NoncentralSolver1D {
 public:
  struct State {
    CellField1D u;  // 8 x (K+1)
    template <class F> void for_each_block(F&& f) { f(u.data); }
  };

  NoncentralSolver1D(int K, Mesh1D mesh, Eos eos, SolverOptions opt);

  State make_state() const;
  void project_initial(State& s,
                       const std::function<PrimitiveState(double)>& f) const;

  double max_dt(const State& s) const;  // cfl-scaled tau_n
  double step_dt(double tau) const { return tau; }
  void begin_step(double) {}
  void prepare(State& s) const;  // ghost fill
  LimiterStats limit(State& s) const;
  void rhs(const State& s, State& dot) const;

  Vec8 evaluate(const State& s, int i, double xi) const;
  Vec8 cell_average(const State& s, int i) const;

  int K() const { return k_; }
  const Mesh1D& mesh() const { return mesh_; }
  const Eos& eos() const { return eos_; }
  const SolverOptions& options() const { return opt_; }

 private:
  int k_;
  Mesh1D mesh_;
  Eos eos_;
  SolverOptions opt_;
  Limiter1D limiter_;
  std::vector<double> gx_, gwt_;        // volume rule
  std::vector<double> mode_g_, dmode_g_;  // [m][g]
  std::vector<double> trace_hi_, trace_lo_;
};

// Locally divergence-free RKDG, 2D: R block on the scalar modal basis, the
// magnetic pair (Bx, By) on the divergence-free vector basis with a per-mesh
// Gram factorization.
class NoncentralSolver2D {
 public:
  // R components are (D, mx, my, mz, Bz, E); Q holds D_W coefficients.
  struct State {
    CellField2D r;  // 6 x dimP
    CellField2D q;  // 1 x D_W
    template <class F> void for_each_block(F&& f) {
      f(r.data);
      f(q.data);
    }
  };

  NoncentralSolver2D(int K, Mesh2D mesh, Eos eos, SolverOptions opt);
  ~NoncentralSolver2D();

  State make_state() const;
  void project_initial(
      State& s, const std::function<PrimitiveState(double, double)>& f) const;

  double max_dt(const State& s) const;
  double step_dt(double tau) const { return tau; }
  void begin_step(double) {}
  void prepare(State& s) const;
  LimiterStats limit(State& s) const;
  void rhs(const State& s, State& dot) const;

  Vec8 evaluate(const State& s, int j, int k, double xi, double eta) const;
  Vec8 cell_average(const State& s, int j, int k) const;
  // physical divergence of the in-cell magnetic field at a reference point
  double divergence(const State& s, int j, int k, double xi, double eta) const;

  int K() const { return k_; }
  const Mesh2D& mesh() const { return mesh_; }
  const Eos& eos() const { return eos_; }
  const SolverOptions& options() const { return opt_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int k_;
  Mesh2D mesh_;
  Eos eos_;
  SolverOptions opt_;
};

}  // namespace rmhd
