#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "rdm/matrix.hpp"

namespace rdm {

enum class MomentMethod { Explicit, Recurrence, WishartBridge, MonteCarlo };

/// E[tr rho^q] for q = 1..q_max, tagged with how it was obtained.
struct MomentTable {
  EnsembleParams params;
  MomentMethod method = MomentMethod::Recurrence;
  std::map<int, double> values;
};

/// log C_{n,k} = log Gamma(nk) - sum_{j<n} [log Gamma(n+1-j) + log Gamma(k-j)].
/// Requires k >= n (DomainError otherwise; swap n and k first).
double log_norm_constant(const EnsembleParams& p);

/// log C^W_{n,k}, the Wishart eigenvalue normalisation (k >= n).
double log_wishart_norm_constant(const EnsembleParams& p);

/// Log of the joint density of the unordered eigenvalues of rho on the
/// simplex, as a function of the first n-1 coordinates; `lambda` holds all
/// n coordinates and must sum to one within 1e-12. Returns -infinity where
/// the density vanishes (coincident eigenvalues, or a zero eigenvalue when
/// k > n).
double log_density_eigs(const EnsembleParams& p, std::span<const double> lambda);

/// Log of the joint density of the unordered Wishart eigenvalues.
double log_density_wishart_eigs(const EnsembleParams& p, std::span<const double> lambda);

/// For n = 2: probability that a (uniformly labelled) eigenvalue of rho
/// falls in [lo, hi], by adaptive quadrature of the density.
double eigenvalue_mass_n2(const EnsembleParams& p, double lo, double hi);

/// E[tr rho^q] from the alternating explicit sum, accumulated as
/// log-magnitudes with signs in extended precision. Throws RangeError if
/// the cancellation leaves less than ~1e-8 relative accuracy.
double moment_explicit(const EnsembleParams& p, int q);

/// E[tr rho^q] from the three-term recurrence seeded with tr rho^0 = n and
/// tr rho^1 = 1. Production route.
double moment_recurrence(const EnsembleParams& p, int q);

/// E^W[tr W^q], exact integer evaluation of the Wishart moment sum
/// (RangeError if it does not fit in 127 bits).
double wishart_moment(const EnsembleParams& p, int q);

/// nk (nk+1) ... (nk+q-1): the factor relating Wishart and density moments.
double moment_bridge_factor(const EnsembleParams& p, int q);

/// E[tr rho^q] recovered from wishart_moment through the bridge factor.
double moment_from_wishart(const EnsembleParams& p, int q);

MomentTable moment_table(const EnsembleParams& p, int q_max, MomentMethod method);

/// Mean von Neumann entropy of mu_{n,k} (k >= n):
/// sum_{i=k+1}^{nk} 1/i - (n-1)/(2k).
double page_entropy(const EnsembleParams& p);

/// E ||X - (1/n,...,1/n)||^2 for X ~ Dirichlet(alpha) on the (n-1)-simplex.
double dirichlet_mean_sq_distance(std::size_t n, double alpha);

}  // namespace rdm
