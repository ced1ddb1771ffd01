#include "ennola/verify.hpp"

#include <array>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ennola/characters.hpp"
#include "ennola/parallel.hpp"

namespace ennola {

namespace {

enum Family { kV, kU, kUprime, kKron, kNonneg, kVprime, kProduct, kFamilies };

const char* const kNames[kFamilies] = {"T(0,q)=V", "T(1,q)=U", "T(-1,-q)=U'", "kronecker", "nonnegativity",
                                       "V'-sign", "product-T"};

const char* const kStatements[kFamilies] = {
    "T_mu(0,q) equals V_mu(q) = <Psi_n, s_mu>",
    "T_mu(1,q) equals U_mu(q) from prod_d Omega(x^d,q^d;T^d)^Phi_d(q)",
    "sign_uprime * T_mu(-1,-q) equals U'_mu(q) from prod_d Omega(x^d,(-q)^d;T^d)^Phi'_d(q)",
    "[u^(n-1)] T_mu equals the Kronecker coefficient and deg_u T_mu <= n-1",
    "T_mu(u,q) has nonnegative integer coefficients",
    "V'_mu(q) equals sign_uprime * T_mu(0,-q); V' and U' have positive leading coefficients",
    "T_mu from prod_d Omega(x^d,q^d;T^d)^Phi_d(u,q) equals T_mu from Exp(u Psi)"};

struct Check {
  bool ok = true;
  std::string detail;
};

std::string mismatch(const std::string& expected, const std::string& got) {
  return "expected " + expected + ", got " + got;
}

PolyQU lookup(const PolyTable& t, const MultiPartition& mu) {
  auto it = t.find(mu);
  return it == t.end() ? PolyQU() : it->second;
}

bool positive_leading(const PolyQU& p) { return p.is_zero() || p.leading().coeff > 0; }

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : identities) f += r.failures;
  return f;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : identities) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    if (r.counterexample) os << "  first counterexample: " << *r.counterexample << '\n';
  }
  os << identities.size() << " identity families, " << failures() << " failures (k=" << k << ", n<=" << N << ")\n";
  return os.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : identities) {
    nlohmann::json j = {{"name", r.name}, {"statement", r.statement}, {"cases", r.cases}, {"failures", r.failures}};
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    ids.push_back(std::move(j));
  }
  return {{"k", k}, {"n", N}, {"ok", ok()}, {"failures", failures()}, {"identities", ids}};
}

VerifyReport verify_suite(const MasterContext& ctx, const VerifyOptions& options) {
  const GradedSeries& omega = ctx.omega();
  const PolyTable u_oracle = U_poly_product_oracle(omega);
  const PolyTable uprime_oracle = Uprime_poly_product_oracle(omega);
  const PolyTable t_oracle = T_product_oracle(omega);

  std::vector<MultiPartition> all;
  for (int n = 1; n <= ctx.N(); ++n) {
    for (auto& mu : enumerate_multipartitions(n, ctx.k())) all.push_back(std::move(mu));
  }
  for (int n = 1; n <= ctx.N(); ++n) ctx.tau_schur(n);

  std::vector<std::array<Check, kFamilies>> results(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    const MultiPartition& mu = all[i];
    auto& r = results[i];
    const int n = mu.size();
    const SignData sign = d_mu(mu);
    const PolyQU t = T_poly(ctx, mu);

    const PolyQU v = V_poly(ctx, mu);
    const PolyQU t0 = t.subst(PolyQU::q(), PolyQU(0));
    if (!(t0 == v)) r[kV] = {false, mismatch(v.to_string(), t0.to_string())};

    const PolyQU u_exp = U_poly(ctx, mu);
    const PolyQU u_prod = lookup(u_oracle, mu);
    if (!(u_exp == u_prod)) r[kU] = {false, mismatch(u_prod.to_string(), u_exp.to_string())};

    PolyQU uprime = Uprime_poly(ctx, mu);
    if (options.uprime_hook) uprime = options.uprime_hook(mu, uprime);
    const PolyQU uprime_prod = lookup(uprime_oracle, mu);
    if (!(uprime == uprime_prod)) r[kUprime] = {false, mismatch(uprime_prod.to_string(), uprime.to_string())};

    const Integer kron = kronecker(mu);
    const PolyQU top = t.u_coefficient(static_cast<std::uint32_t>(n - 1));
    if (t.u_degree() > n - 1) {
      r[kKron] = {false, "deg_u " + std::to_string(t.u_degree()) + " exceeds " + std::to_string(n - 1)};
    } else if (!(top == PolyQU(kron))) {
      r[kKron] = {false, mismatch(kron.get_str(), top.to_string())};
    }

    if (!t.has_nonnegative_coefficients()) r[kNonneg] = {false, "T = " + t.to_string()};

    const PolyQU vprime = Vprime_poly(ctx, mu);
    PolyQU t0neg = t0.negate_q();
    if (sign.sign_uprime < 0) t0neg = -t0neg;
    if (!(vprime == t0neg)) {
      r[kVprime] = {false, mismatch(t0neg.to_string(), vprime.to_string())};
    } else if (!positive_leading(vprime)) {
      r[kVprime] = {false, "V' = " + vprime.to_string() + " has negative leading coefficient"};
    } else if (!positive_leading(uprime)) {
      r[kVprime] = {false, "U' = " + uprime.to_string() + " has negative leading coefficient"};
    }

    const PolyQU t_prod = lookup(t_oracle, mu);
    if (!(t == t_prod)) r[kProduct] = {false, mismatch(t_prod.to_string(), t.to_string())};
  });

  VerifyReport report;
  report.k = ctx.k();
  report.N = ctx.N();
  for (int f = 0; f < kFamilies; ++f) {
    IdentityResult id;
    id.name = kNames[f];
    id.statement = kStatements[f];
    for (std::size_t i = 0; i < all.size(); ++i) {
      ++id.cases;
      const Check& c = results[i][static_cast<std::size_t>(f)];
      if (c.ok) continue;
      ++id.failures;
      if (!id.counterexample) id.counterexample = "mu=" + all[i].to_string() + ": " + c.detail;
    }
    report.identities.push_back(std::move(id));
  }
  return report;
}

}  // namespace ennola
