#pragma once

#include <array>
#include <cstddef>

#include "fwmpair/fft.hpp"
#include "fwmpair/linalg.hpp"
#include "fwmpair/stochastic.hpp"

namespace fwmpair::jointstate {

// Gaussian pump pair, A_j(0,t) = sqrt(P_j) exp(-(t - dt_j)^2 / (2 T_j^2)).
struct PumpConfig {
    double t_p_s = 1e-12;
    double t_q_s = 1e-12;
    double power_p_w = 1.0;
    double power_q_w = 1.0;
    double delay_p_s = 0.0;
    double delay_q_s = 0.0;
};

struct CollisionSetup {
    double separation_s = 0.0;  // |dt_p - dt_q|
    double length_m = 0.0;
    double delay_p_s = 0.0;     // role p launch delay (slower pump earlier)
    double delay_q_s = 0.0;
};

// Full-collision geometry: pump separation 4 sqrt(Tp^2 + Tq^2), fiber
// length making the pulses coincide at the midpoint.
CollisionSetup standard_collision_setup(double beta1_p, double beta1_q, double t_p_s,
                                        double t_q_s);

// Square time grid; both axes share the step so that t_s - t_i is constant
// along grid diagonals. Axis values are measured from time_origin, a common
// reference near the collision: absolute output times sit ~ns after launch
// while the amplitude features are ps wide, so an absolute axis would lose
// five digits to cancellation.
struct TimeGrid {
    std::size_t n = 0;
    double t_s_offset = 0.0;
    double t_i_offset = 0.0;
    double step = 0.0;
    double time_origin = 0.0;

    void validate() const;
};

enum class Domain { Time, Frequency };

// Two-photon amplitude on an N x N grid; rows index the signal axis.
// Time domain: axis value = offset + index * step [s]. Frequency domain:
// angular detuning from the central frequencies [rad/s].
struct JointAmplitude {
    linalg::CMatrix grid;
    Domain domain = Domain::Time;
    double s_offset = 0.0, s_step = 0.0;
    double i_offset = 0.0, i_step = 0.0;
};

// Cumulative per-role delays B_j(z) = int_0^z beta1_j dz' and phase
// Phi(z) = int_0^z dbeta0 dz', trapezoid on the record grid.
struct CumulativeDelays {
    double dz_m = 0.0;
    double length_m = 0.0;
    std::array<std::vector<double>, 4> b;  // per role p,q,s,i
    std::vector<double> phi;
};

CumulativeDelays cumulative_delays(const stochastic::DispersionRecord& record);

// Collision coordinates for one output-time difference u = t_s - t_i.
struct CollisionPoint {
    bool inside = false;  // Heaviside support
    double z_c = 0.0;
    double b_p = 0.0, b_q = 0.0, b_s = 0.0;  // B_j(z_c)
    double phi = 0.0;
};

class CollisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Inverts D(z_c) = u by monotone piecewise-quadratic interpolation. Throws
// CollisionError when beta1_s - beta1_i changes sign inside the fiber.
class CollisionSolver {
  public:
    CollisionSolver(const stochastic::DispersionRecord& record, const CumulativeDelays& delays);

    CollisionPoint solve(double u) const;
    double walkoff_window() const { return d0_; }  // D(0)

  private:
    const stochastic::DispersionRecord& record_;
    const CumulativeDelays& delays_;
    // E(z) = B_s(z) - B_i(z), accumulated from the beta1 difference so the
    // ns-scale B arrays never cancel against each other.
    std::vector<double> e_nodes_;
    double d0_ = 0.0;
    bool increasing_ = true;
};

// Grid spans derived from the walk-off window (u direction, padded by
// 6 max(Tp,Tq)) and a scan of the pump-overlap region (v direction).
TimeGrid plan_grid(const PumpConfig& pumps, const stochastic::DispersionRecord& record,
                   std::size_t n);

// Joint temporal amplitude for a (possibly position-dependent) dispersion
// record; gamma is the constant nonlinear strength prefactor.
JointAmplitude build_jta(const PumpConfig& pumps, const stochastic::DispersionRecord& record,
                         double gamma, const TimeGrid& grid);

// Closed-form uniform-fiber specialization (independent evaluation path).
JointAmplitude build_jta_uniform(const PumpConfig& pumps, const std::array<double, 4>& beta1,
                                 double dbeta0, double gamma, double length_m,
                                 const TimeGrid& grid);

// Unitary 2D transform to the joint spectral amplitude; singular values
// are preserved exactly (diagonal phase factors times a unitary DFT).
JointAmplitude jta_to_jsa(const JointAmplitude& ja);

// R = sum |A|^2 step_s step_i.
double generation_probability(const JointAmplitude& ja);

}  // namespace fwmpair::jointstate
