#pragma once

namespace gibbs {

/// Average draw count bound for the integer regimes (n >= 4, eps <= 1/10):
/// (q+1)[5 + (2 + ln 2n)(14.9 ln(100 (2 + ln 2n)(q+1)) + 48.2 eps^-2)].
double integer_regime_draw_bound(double q, int n, double epsilon);

/// Average draw count bound after the -2n shift, with Q = q + 2 n beta:
/// (Q+1)[5 + 10.7 ln(69.4 (Q+1)) + 16.7 eps^-2].
double shifted_regime_draw_bound(double q, int n, double beta, double epsilon);

/// Sample bound of the earlier adaptive multistage algorithm, reported only
/// for comparison: 1e8 q (ln n + ln q)^5 eps^-2.
double svv_draw_bound(double q, int n, double epsilon);

/// Ceiling on relvar(W) for a schedule whose z-gaps are all at most eta:
/// 2 e^eta (2 z'(beta))^(eta/2).
double paired_relvar_ceiling(double eta, double z_slope_at_beta);

}  // namespace gibbs
