#pragma once

#include <string>

#include "plsec/model.hpp"
#include "plsec/numerics.hpp"

namespace plsec::sop {

enum class Method { ExactDistanceQuadrature, ExactSnrQuadrature, AsymptoticClosedForm, MonteCarlo };

std::string to_string(Method m);

struct SopResult {
    double value = 0.0;
    Method method = Method::ExactDistanceQuadrature;
    double err = 0.0;
    bool clamped = false;  // raw value fell outside [0, 1]
};

/// Pr(log2(1 + gamma_SU) < c_st) under the truncated S-U distance law.
double sop_ineffective(const SystemParams& p, const DerivedConstants& d);

/// alpha * Pr(secrecy capacity < c_st | in range) + (1 - alpha) * sop_ineffective.
/// Reference path: 1-D quadrature over the attacker distance with the S-U
/// CDF in closed form.
SopResult sop_exact_eav(const SystemParams& p, const numerics::Tolerance& tol = {1e-10, 1e-13, 2000});
/// Same probability from nested quadrature over the SNR densities.
SopResult sop_exact_eav_snr(const SystemParams& p, const numerics::Tolerance& tol = {1e-9, 1e-12, 2000});

SopResult sop_exact_jam(const SystemParams& p, const numerics::Tolerance& tol = {1e-10, 1e-13, 2000});
SopResult sop_exact_jam_snr(const SystemParams& p, const numerics::Tolerance& tol = {1e-9, 1e-12, 2000});

/// High-SNR closed forms: the secrecy capacity is replaced by log2 of the SNR
/// ratio (eavesdropping) or log2(1 + SNR ratio) (jamming).
SopResult sop_asym_eav(const SystemParams& p);
SopResult sop_asym_jam(const SystemParams& p);

SopResult sop_exact(const SystemParams& p, AttackMode mode);
SopResult sop_asym(const SystemParams& p, AttackMode mode);

}  // namespace plsec::sop
