#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ennola/ennola.hpp"

namespace ennola {

struct IdentityResult {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return failures == 0; }
};

struct VerifyReport {
  int k = 0;
  int N = 0;
  std::vector<IdentityResult> identities;

  bool ok() const;
  std::size_t failures() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Replaces U'_mu before comparison; used to exercise the failure path.
  std::function<PolyQU(const MultiPartition&, PolyQU)> uprime_hook;
};

/// Checks, for every multipartition of size 1..N:
///   (a) T(0, q) = V, (b) T(1, q) = U from the GL product,
///   (c) sign_uprime T(-1, -q) = U' from the unitary product,
///   (d) [u^{n-1}] T = Kronecker coefficient and deg_u T <= n - 1,
///   (e) T has nonnegative integer coefficients,
///   (f) V'(q) = sign_uprime T(0, -q) and V', U' have positive leading coefficients,
///   (g) T from prod_d Omega^{Phi_d(u, q)} equals T from Exp(u Psi).
VerifyReport verify_suite(const MasterContext& ctx, const VerifyOptions& options = {});

}  // namespace ennola
