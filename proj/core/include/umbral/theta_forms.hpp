#pragma once

#include "umbral/mock.hpp"

namespace umbral {

/// Indefinite theta representation of a mock theta function with
/// characteristics: prefactor times Theta_{a,b}(N tau) of the form
/// ((1,1),(1,0)), c1 = (0,1), c2 = (-1,1), plus an eta quotient for some.
/// S0 and S1 go through the S + 2T eta identities.
QSeries mock_ab_form(MockName m, const Rat& order);

/// The same functions with Theta^+ in elliptic variables z = (z1, z2).
QSeries mock_z_form(MockName m, const Rat& order);

/// The omega z-form with the prefactor 1/eta(tau) in place of 1/eta(2 tau).
QSeries omega_z_form_misprint(const Rat& order);

/// X = eta(tau/2)^3 / (eta(tau) eta(2tau)) and
/// Y = eta(tau)^8 / (eta(tau/2)^3 eta(2tau)^4).
QSeries eta_x(const Rat& order);
QSeries eta_y(const Rat& order);

/// theta_1(-tau, 8 tau).
QSeries theta1_minus_tau(const Rat& order);

}  // namespace umbral
