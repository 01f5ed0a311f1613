#pragma once

#include "ugsb/core/hamiltonian.hpp"
#include "ugsb/core/params.hpp"

namespace ugsb::core {

enum class FredkinStep { pulse, swap };

/// Interaction-picture Hamiltonian of the target pair:
///   sum_j [ (W0/2) e^{i D0 t}|r><0|_j + (W1/2) e^{-i D1 t}|r><1|_j + H.c. ]
///   + V|rr><rr| + sum_j d_j |r><r|_j
/// plus either the explicit |e> fields or the static counter-shift, per aux_mode.
/// Rejects parameter sets that carry a control atom.
TimeDepHamiltonian build_interaction_hamiltonian(const ParamSet& params);

/// V-rotated: U = exp(i t V |rr><rr|). V0-rotated: U = exp(i t (D1 - D0)|rr><rr|),
/// leaving V0 = V - (D1 - D0) on the |rr> diagonal.
TimeDepHamiltonian build_rotated_hamiltonian(const ParamSet& params, Frame frame);

/// Three-atom register (control, t1, t2).
/// pulse: (Wc/2)|0><r|_c + H.c. with target drives off.
/// swap: target Hamiltonian plus V_jc |r>_c<r| (x) |r>_j<r|, control drive off.
TimeDepHamiltonian build_fredkin_hamiltonian(const ParamSet& params, FredkinStep step);

/// W_k = W_kp W_kr / (2 Dbar_k) with Dbar_k = 2 / [1/(D_kp - D_k) + 1/D_kp].
double effective_rabi_from_two_photon(const TwoPhotonSpec& spec);

/// d = (C6/V)^(1/6)
double distance_for_strength(double c6, double v);
/// V = C6/d^6
double rri_strength(double c6, double distance);

/// Weights of the |rr> projector on the target pair (1 on |rr>, 0 elsewhere).
std::vector<double> pair_rydberg_projector(const ParamSet& params);

}  // namespace ugsb::core
