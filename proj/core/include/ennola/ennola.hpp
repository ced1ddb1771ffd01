#pragma once

// Multiplicity polynomials of tensor products of characters of GL_n(F_q)
// and GU_n(F_q) computed from the k-point Cauchy function.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ennola/partition.hpp"
#include "ennola/rational_function.hpp"
#include "ennola/symfunc.hpp"
#include "ennola/types.hpp"

namespace ennola {

/// Number of Frobenius orbits of size d on the multiplicative group of the
/// algebraic closure: (1/d) sum_{r|d} mu(r) (q^{d/r} - 1).
RatQU phi(int d);
/// Same for the unitary Frobenius: (1/d) sum_{r|d} mu(r) (q^{d/r} - (-1)^{d/r}).
RatQU phi_prime(int d);
/// (1/d) sum_{r|d} mu(r) u^{d/r} (q^{d/r} - 1).
RatQU phi_u(int d);

struct SignData {
  /// n^2 (k-2) - sum_{i,j} (mu^i_j)^2 + 2; always even.
  long d_mu;
  /// U'_mu = sign_uprime * T_mu(-1, -q), i.e.
  /// (-1)^{k(n + ceil(n/2)) + n(mu*) + n + 1}.
  int sign_uprime;
  /// (-1)^{d_mu/2 + n}.
  int sign_uprime_printed;
  /// V'_mu = sign_vprime * V_mu(-q), from (-1)^{r' + r + n(mu*) + n + 1}.
  int sign_vprime;
};

/// Throws std::logic_error if d_mu is odd.
SignData d_mu(const MultiPartition& mu);

/// Omega = 1 + sum_n sum_{lambda |- n} a_lambda(q)^{-1} prod_i H~_lambda(x_i; q) T^n.
GradedSeries cauchy_omega(int k, int N);

/// Omega, Psi = (q-1) Log Omega and Exp(u Psi), with Schur-basis extraction.
///
/// Copies share state; the lazily built pieces are computed once and are
/// safe to request from several threads.
class MasterContext {
 public:
  /// Context from Psi in any basis; Omega and Exp(u Psi) are built on demand.
  MasterContext(int k, int N, GradedSeries psi);

  int k() const;
  int N() const;
  const GradedSeries& omega() const;
  const GradedSeries& psi() const;
  const GradedSeries& exp_u_psi() const;

  /// Psi_n in the Schur basis with coefficients checked to lie in Z[q].
  const SymFunc& psi_schur(int n) const;
  /// (1/u) [T^n] Exp(u Psi) in the Schur basis, checked to lie in Z[u, q].
  const SymFunc& tau_schur(int n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct ContextOptions {
  /// Directory holding cached Psi coefficients; used only when every
  /// degree 1..N is present and valid.
  std::optional<std::filesystem::path> cache_dir;
  /// Receives messages about ignored cache files.
  std::function<void(const std::string&)> on_warning;
};

MasterContext build_context(int k, int N, const ContextOptions& options = {});

/// <Psi_n, s_omega>, an integer polynomial in q.
PolyQU H_omega(const MasterContext& ctx, const MultiType& omega);

PolyQU V_poly(const MasterContext& ctx, const MultiType& omega);
PolyQU V_poly(const MasterContext& ctx, const MultiPartition& mu);
PolyQU Vprime_poly(const MasterContext& ctx, const MultiType& omega);
PolyQU Vprime_poly(const MasterContext& ctx, const MultiPartition& mu);

/// T_mu(u, q).
PolyQU T_poly(const MasterContext& ctx, const MultiPartition& mu);
/// T_mu(1, q).
PolyQU U_poly(const MasterContext& ctx, const MultiPartition& mu);
/// sign_uprime * T_mu(-1, -q).
PolyQU Uprime_poly(const MasterContext& ctx, const MultiPartition& mu);

/// Nonzero coefficients of a series in the Schur basis, keyed by
/// multipartition, for degrees 1..N.
using PolyTable = std::map<MultiPartition, PolyQU>;

/// U_mu from prod_d Omega(x^d, q^d; T^d)^{Phi_d(q)}.
PolyTable U_poly_product_oracle(const GradedSeries& omega);
PolyTable U_poly_product_oracle(int k, int N);

/// U'_mu from prod_d Omega(x^d, (-q)^d; T^d)^{Phi'_d(q)}, whose T^n
/// coefficient at s_mu is (-1)^{k(n + ceil(n/2)) + n(mu*) + n} U'_mu.
PolyTable Uprime_poly_product_oracle(const GradedSeries& omega);
PolyTable Uprime_poly_product_oracle(int k, int N);

/// Exponential of the three-sum expansion of the logarithm of the unitary
/// generating function in terms of R_n = [T^n] log Omega, taken literally.
PolyTable uprime_log_form(const GradedSeries& omega);

/// T_mu from prod_d Omega(x^d, q^d; T^d)^{Phi_d(u, q)} = 1 + u sum T_mu s_mu T^n.
PolyTable T_product_oracle(const GradedSeries& omega);

}  // namespace ennola
