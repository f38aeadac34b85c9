#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rmhd {

using Vec3 = std::array<double, 3>;
using Vec8 = std::array<double, 8>;

// Conserved component layout, shared by every solver in the code base.
enum ConsIndex : int { ID = 0, IMX, IMY, IMZ, IBX, IBY, IBZ, IEN, NCOMP = 8 };

enum class Axis : int { X = 0, Y = 1 };

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm2(const Vec3& a) { return dot(a, a); }

// Ideal-gas EOS, light speed normalized to 1.
struct Eos {
  double gamma = 5.0 / 3.0;

  double specific_internal_energy(double rho, double p) const {
    return p / ((gamma - 1.0) * rho);
  }
  double enthalpy(double rho, double p) const {
    return 1.0 + gamma * p / ((gamma - 1.0) * rho);
  }
  double sound_speed2(double rho, double p) const {
    return gamma * p / (rho * enthalpy(rho, p));
  }
};

struct PrimitiveState {
  double rho = 0.0;
  Vec3 v{0.0, 0.0, 0.0};
  Vec3 B{0.0, 0.0, 0.0};
  double p = 0.0;

  double lorentz() const { return 1.0 / std::sqrt(1.0 - norm2(v)); }
  bool valid() const {
    return rho > 0.0 && p > 0.0 && norm2(v) < 1.0 && std::isfinite(rho) &&
           std::isfinite(p) && std::isfinite(norm2(v)) && std::isfinite(norm2(B));
  }
};

struct ConservedState {
  double D = 0.0;
  Vec3 m{0.0, 0.0, 0.0};
  Vec3 B{0.0, 0.0, 0.0};
  double E = 0.0;

  Vec8 to_array() const { return {D, m[0], m[1], m[2], B[0], B[1], B[2], E}; }
  static ConservedState from_array(const Vec8& u) {
    return {u[ID], {u[IMX], u[IMY], u[IMZ]}, {u[IBX], u[IBY], u[IBZ]}, u[IEN]};
  }
};

// Seven signal speeds, ordered fast- <= alfven- <= slow- <= entropy <= slow+ <= alfven+ <= fast+.
struct WaveSpeeds {
  double fast_m, alfven_m, slow_m, entropy, slow_p, alfven_p, fast_p;

  double max_abs() const { return std::max(std::abs(fast_m), std::abs(fast_p)); }
};

// --- error taxonomy ---------------------------------------------------------

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Newton recovery did not converge; carries the last residual.
struct RecoveryError : std::runtime_error {
  double residual;
  RecoveryError(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
};

// Recovered state violates rho > 0 or p > 0.
struct InadmissibleStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenvalueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReconstructionError : std::runtime_error {
  double residual;
  ReconstructionError(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
};

// Solver-level abort: carries cell id and time for the CLI error line.
struct SolverError : std::runtime_error {
  std::string kind;
  long cell = -1;
  double time = 0.0;
  SolverError(std::string kind_, long cell_, double time_, const std::string& what)
      : std::runtime_error(what), kind(std::move(kind_)), cell(cell_), time(time_) {}
};

}  // namespace rmhd
