#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "plsec/errors.hpp"

namespace plsec {

enum class Topology { AttackerAtOrigin, SourceAtOrigin, UserAtOrigin };
enum class AttackMode { Eavesdrop, Jam };

std::string to_string(Topology t);
std::string to_string(AttackMode m);
Topology parse_topology(std::string_view s);   // attacker-origin | source-origin | user-origin
AttackMode parse_mode(std::string_view s);     // eavesdrop | jam

/// Physical inputs. Powers in watts, lengths in metres, rate in bit/s/Hz.
struct SystemParams {
    double p_s = 0.1;
    double p_j = 0.1;
    double noise = 1e-12;
    double theta = 3.0;
    double a_su = 1e-5;
    double a_sa = 1e-5;
    double a_au = 1e-5;
    double R = 100.0;
    double D = 200.0;
    double r = 100.0;
    double c_st = 1.0;

    /// Throws InvalidParameter naming the first offending field.
    void validate() const;

    bool operator==(const SystemParams&) const = default;
};

struct DerivedConstants {
    double kappa_su = 0.0;
    double kappa_sa = 0.0;
    double kappa_au = 0.0;
    double lambda_e = 0.0;
    double lambda_j = 0.0;
    double alpha = 0.0;
    double f_d = 0.0;  // Pr(two uniform points in the R-disk are closer than D)
};

DerivedConstants derive(const SystemParams& params);

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

}  // namespace plsec
