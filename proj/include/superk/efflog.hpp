#pragma once

#include <array>
#include <string>

namespace superk {

/// Selects the logarithm family used throughout the library. Natural is the
/// ordinary ln; Plus and Minus are the deformed logarithms
///   ln+(x) = -(1 - x^x)/x,   ln-(x) = -(x^-x - 1)/x,
/// defined on (0, 1] and coinciding with ln at x = 1 (value 0, slope 1).
enum class LogKind { Natural, Plus, Minus };

const char* log_kind_name(LogKind kind);

/// Evaluates the effective logarithm for `kind` at x in (0, 1].
/// Result is <= 0, and 0 exactly at x = 1. Throws std::domain_error outside
/// the domain.
double eff_log(LogKind kind, double x);

/// Truncated series sum_{k=1..k_max} s_k x^(k-1) (ln x)^k / k!, where
/// s_k = 1 for Plus and s_k = (-1)^(k+1) for Minus. Natural returns the
/// single k = 1 term (ln x) regardless of k_max.
double eff_log_series(LogKind kind, double x, int k_max);

/// Inverse of eff_log on [kEffExpXMin, 1]: the unique x with
/// eff_log(kind, x) = t, located by bracketed bisection/secant iteration to
/// absolute tolerance 1e-12. Throws std::range_error for t > 0 or for t
/// below the image of the cutoff point.
double eff_exp(LogKind kind, double t);

/// Lower cutoff for eff_exp bracketing; inversion below eff_log(kind, x_min)
/// is refused because the deformed logarithms underflow there.
inline constexpr double kEffExpXMin = 1e-12;

/// Polynomial representation of a stretched exponential,
///   e(t) = exp(-t) * sum_{j=0..8} a_j t^j,
/// with coefficients read from the shipped data file. Only Plus and Minus
/// tables exist.
struct PolyApprox {
  LogKind kind;
  std::array<double, 9> coeffs;
};

/// Plain evaluation of the polynomial form above. No domain restrictions;
/// accuracy against eff_exp is reported by the test suite, not guaranteed.
double eff_exp_poly(const PolyApprox& approx, double t);

/// Loads one coefficient column from the plain-text table (rows "j a+ a-",
/// exactly 9 rows, '#' comments allowed). Throws std::runtime_error on any
/// format violation, including a(0) != 1.
PolyApprox load_poly_approx(const std::string& path, LogKind kind);

}  // namespace superk
