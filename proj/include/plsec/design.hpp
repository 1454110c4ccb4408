#pragma once

#include <string>

#include "plsec/model.hpp"

namespace plsec::design {

enum class Status {
    Solved,
    Unconstrained,  // the bound itself already meets the target
    Infeasible,     // no value inside the bounds meets the target
};

std::string to_string(Status s);

/// Acceptable SOP and search bounds. lo = hi = 0 selects the defaults:
/// (0, 2R] for D_th and [1e-15 W, 100 W] for powers.
struct DesignTarget {
    double p_o_th = 0.1;
    AttackMode mode = AttackMode::Jam;
    double lo = 0.0;
    double hi = 0.0;

    void validate() const;
};

struct DesignSolution {
    double value = 0.0;
    double residual = 0.0;  // asymptotic SOP at `value` minus p_o_th
    Status status = Status::Solved;
    int iterations = 0;
};

/// Largest S-U distance guaranteeing c_st on the legitimate link alone.
double threshold_d_o(const SystemParams& p);
/// (lambda_E r^theta / 2^c_st)^{1/theta}.
double threshold_d_sat(const SystemParams& p);
/// (2^c_st D^theta / lambda_E)^{1/theta}.
double threshold_r_sat(const SystemParams& p);

/// Largest D with asymptotic SOP equal to p_o_th.
DesignSolution solve_d_th(const SystemParams& p, const DesignTarget& target);
/// Smallest source power meeting p_o_th under jamming.
DesignSolution solve_ps_th(const SystemParams& p, const DesignTarget& target);
/// Smallest jamming power that pushes the SOP up to p_o_th.
DesignSolution solve_pj_th(const SystemParams& p, const DesignTarget& target);

}  // namespace plsec::design
