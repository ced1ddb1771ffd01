#include "ennola/ennola.hpp"

#include <mutex>
#include <stdexcept>

#include "ennola/cache.hpp"
#include "ennola/hall_littlewood.hpp"

namespace ennola {

namespace {

PolyQU q_pow(unsigned e) { return PolyQU::monomial(1, e); }
PolyQU u_q_pow(unsigned e) { return PolyQU::monomial(1, e, e); }

RatQU over(PolyQU p, int d) { return RatQU(std::move(p), PolyQU(static_cast<long>(d))); }

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

PolyQU signed_poly(int sign, PolyQU p) { return sign > 0 ? p : -p; }

PolyQU require_poly(const RatQU& c, const char* what) {
  if (!c.is_polynomial()) throw NotPolynomial(std::string(what) + ": " + c.to_string());
  return c.num();
}

void require_degree(const MasterContext& ctx, int n, std::size_t k) {
  if (static_cast<int>(k) != ctx.k()) {
    throw std::invalid_argument("expected " + std::to_string(ctx.k()) + " components, got " + std::to_string(k));
  }
  if (n < 1 || n > ctx.N()) {
    throw std::invalid_argument("size " + std::to_string(n) + " outside 1.." + std::to_string(ctx.N()));
  }
}

}  // namespace

RatQU phi(int d) {
  if (d < 1) throw std::invalid_argument("phi: d must be positive");
  PolyQU s;
  for (int r = 1; r <= d; ++r) {
    if (d % r || moebius(r) == 0) continue;
    s += (q_pow(static_cast<unsigned>(d / r)) - PolyQU(1)) * Integer(moebius(r));
  }
  return over(std::move(s), d);
}

RatQU phi_prime(int d) {
  if (d < 1) throw std::invalid_argument("phi_prime: d must be positive");
  PolyQU s;
  for (int r = 1; r <= d; ++r) {
    if (d % r || moebius(r) == 0) continue;
    const long sgn = (d / r) % 2 ? -1 : 1;
    s += (q_pow(static_cast<unsigned>(d / r)) - PolyQU(sgn)) * Integer(moebius(r));
  }
  return over(std::move(s), d);
}

RatQU phi_u(int d) {
  if (d < 1) throw std::invalid_argument("phi_u: d must be positive");
  PolyQU s;
  for (int r = 1; r <= d; ++r) {
    if (d % r || moebius(r) == 0) continue;
    const auto e = static_cast<unsigned>(d / r);
    s += (u_q_pow(e) - PolyQU::monomial(1, 0, e)) * Integer(moebius(r));
  }
  return over(std::move(s), d);
}

SignData d_mu(const MultiPartition& mu) {
  const long n = mu.size();
  const long k = static_cast<long>(mu.k());
  long squares = 0;
  for (const auto& c : mu.components()) {
    for (int p : c.parts()) squares += static_cast<long>(p) * p;
  }
  const long d = n * n * (k - 2) - squares + 2;
  if (d % 2 != 0) throw std::logic_error("internal error: odd d_mu for " + mu.to_string());
  const MultiType omega = MultiType::of_multipartition(mu);
  const long nstar = mu.dual().n_stat();
  SignData s{};
  s.d_mu = d;
  s.sign_uprime = sign_of(k * (n + (n + 1) / 2) + nstar + n + 1);
  s.sign_uprime_printed = sign_of(d / 2 + n);
  s.sign_vprime = sign_of(omega.r_prime_stat() + omega.r_stat() + omega.dual().n_stat() + n + 1);
  return s;
}

GradedSeries cauchy_omega(int k, int N) {
  GradedSeries omega = GradedSeries::one(k, N);
  for (int n = 1; n <= N; ++n) {
    const auto index = PartitionIndex::get(n);
    const std::size_t p = index->size();
    // K~_{nu lambda}(q) / a_lambda(q) per (lambda, nu).
    std::vector<std::vector<RatQU>> kt(p, std::vector<RatQU>(p));
    std::vector<RatQU> inv_a(p);
    for (std::size_t l = 0; l < p; ++l) {
      inv_a[l] = RatQU(PolyQU(1), a_poly((*index)[l]));
      for (std::size_t v = 0; v < p; ++v) {
        if ((*index)[v].dominates((*index)[l])) kt[l][v] = RatQU(transformed_kostka((*index)[v], (*index)[l]));
      }
    }
    SymFunc piece(k, n, Basis::Schur);
    for (std::size_t s = 0; s < piece.dim(); ++s) {
      RatQU acc;
      for (std::size_t l = 0; l < p; ++l) {
        RatQU prod = inv_a[l];
        std::size_t rest = s;
        for (int i = 0; i < k && !prod.is_zero(); ++i, rest /= p) {
          const RatQU& c = kt[l][rest % p];
          if (c.is_zero()) {
            prod = RatQU();
          } else {
            prod *= c;
          }
        }
        if (!prod.is_zero()) acc += prod;
      }
      piece.at(s) = std::move(acc);
    }
    omega.set(n, piece.to(Basis::PowerSum));
  }
  return omega;
}

struct MasterContext::State {
  int k;
  int N;
  GradedSeries psi;
  std::once_flag omega_once;
  GradedSeries omega;
  std::once_flag exp_once;
  GradedSeries exp_u_psi;
  std::unique_ptr<std::once_flag[]> psi_schur_once;
  std::vector<SymFunc> psi_schur;
  std::unique_ptr<std::once_flag[]> tau_once;
  std::vector<SymFunc> tau;
};

MasterContext::MasterContext(int k, int N, GradedSeries psi) : state_(std::make_shared<State>()) {
  if (psi.k() != k || psi.N() != N) throw std::invalid_argument("Psi has the wrong shape");
  state_->k = k;
  state_->N = N;
  state_->psi = psi.to(Basis::PowerSum);
  state_->psi_schur_once = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(N) + 1);
  state_->psi_schur.resize(static_cast<std::size_t>(N) + 1);
  state_->tau_once = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(N) + 1);
  state_->tau.resize(static_cast<std::size_t>(N) + 1);
}

int MasterContext::k() const { return state_->k; }
int MasterContext::N() const { return state_->N; }
const GradedSeries& MasterContext::psi() const { return state_->psi; }

const GradedSeries& MasterContext::omega() const {
  std::call_once(state_->omega_once, [this] { state_->omega = cauchy_omega(state_->k, state_->N); });
  return state_->omega;
}

const GradedSeries& MasterContext::exp_u_psi() const {
  std::call_once(state_->exp_once, [this] { state_->exp_u_psi = pleth_exp(state_->psi * RatQU(PolyQU::u())); });
  return state_->exp_u_psi;
}

const SymFunc& MasterContext::psi_schur(int n) const {
  if (n < 0 || n > state_->N) throw std::out_of_range("degree outside the context");
  const auto i = static_cast<std::size_t>(n);
  std::call_once(state_->psi_schur_once[i], [this, n, i] {
    SymFunc f = state_->psi[n].to(Basis::Schur);
    for (std::size_t s = 0; s < f.dim(); ++s) {
      if (f.at(s).is_zero()) continue;
      const PolyQU p = require_poly(f.at(s), "Psi coefficient");
      if (p.u_degree() > 0) throw std::logic_error("internal error: Psi depends on u");
    }
    state_->psi_schur[i] = std::move(f);
  });
  return state_->psi_schur[i];
}

const SymFunc& MasterContext::tau_schur(int n) const {
  if (n < 1 || n > state_->N) throw std::out_of_range("degree outside the context");
  const auto i = static_cast<std::size_t>(n);
  std::call_once(state_->tau_once[i], [this, n, i] {
    SymFunc f = exp_u_psi()[n].to(Basis::Schur);
    const PolyQU u = PolyQU::u();
    for (std::size_t s = 0; s < f.dim(); ++s) {
      if (f.at(s).is_zero()) continue;
      auto t = divide(require_poly(f.at(s), "Exp(u Psi) coefficient"), u);
      if (!t) throw NotPolynomial("Exp(u Psi) coefficient is not divisible by u");
      f.at(s) = RatQU(std::move(*t));
    }
    state_->tau[i] = std::move(f);
  });
  return state_->tau[i];
}

MasterContext build_context(int k, int N, const ContextOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (options.cache_dir) {
    GradedSeries psi(k, N);
    bool complete = true;
    for (int n = 1; n <= N && complete; ++n) {
      std::string warning;
      auto f = load_psi(*options.cache_dir, k, n, &warning);
      if (!warning.empty() && options.on_warning) options.on_warning(warning);
      if (!f) {
        complete = false;
        break;
      }
      psi.set(n, f->to(Basis::PowerSum));
    }
    if (complete) return MasterContext(k, N, std::move(psi));
  }
  const GradedSeries omega = cauchy_omega(k, N);
  GradedSeries psi = pleth_log(omega) * RatQU(PolyQU::q() - PolyQU(1));
  MasterContext ctx(k, N, std::move(psi));
  return ctx;
}

PolyQU H_omega(const MasterContext& ctx, const MultiType& omega) {
  const int n = omega.size();
  require_degree(ctx, n, omega.k());
  const SymFunc s = omega.schur();
  const SymFunc& psi = ctx.psi_schur(n);
  RatQU acc;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!s.at(i).is_zero() && !psi.at(i).is_zero()) acc += s.at(i) * psi.at(i);
  }
  return require_poly(acc, "H_omega");
}

PolyQU V_poly(const MasterContext& ctx, const MultiType& omega) {
  return signed_poly(sign_of(omega.r_stat()), H_omega(ctx, omega));
}

PolyQU V_poly(const MasterContext& ctx, const MultiPartition& mu) {
  require_degree(ctx, mu.size(), mu.k());
  return require_poly(ctx.psi_schur(mu.size()).coeff(mu), "V");
}

PolyQU Vprime_poly(const MasterContext& ctx, const MultiType& omega) {
  const long e = omega.r_prime_stat() + omega.r_stat() + omega.dual().n_stat() + omega.size() + 1;
  return signed_poly(sign_of(e), V_poly(ctx, omega).negate_q());
}

PolyQU Vprime_poly(const MasterContext& ctx, const MultiPartition& mu) {
  return signed_poly(d_mu(mu).sign_vprime, V_poly(ctx, mu).negate_q());
}

PolyQU T_poly(const MasterContext& ctx, const MultiPartition& mu) {
  require_degree(ctx, mu.size(), mu.k());
  return require_poly(ctx.tau_schur(mu.size()).coeff(mu), "T");
}

PolyQU U_poly(const MasterContext& ctx, const MultiPartition& mu) {
  return T_poly(ctx, mu).subst(PolyQU::q(), PolyQU(1));
}

PolyQU Uprime_poly(const MasterContext& ctx, const MultiPartition& mu) {
  return signed_poly(d_mu(mu).sign_uprime, T_poly(ctx, mu).subst(-PolyQU::q(), PolyQU(-1)));
}

namespace {

PolyTable extract(const GradedSeries& series, bool divide_by_u) {
  PolyTable out;
  const PolyQU u = PolyQU::u();
  for (int n = 1; n <= series.N(); ++n) {
    const SymFunc f = series[n].to(Basis::Schur);
    for (std::size_t s = 0; s < f.dim(); ++s) {
      if (f.at(s).is_zero()) continue;
      PolyQU p = require_poly(f.at(s), "product coefficient");
      if (divide_by_u) {
        auto t = divide(p, u);
        if (!t) throw NotPolynomial("product coefficient is not divisible by u");
        p = std::move(*t);
      }
      out.emplace(f.key(s), std::move(p));
    }
  }
  return out;
}

// prod_{d=1}^{N} factor(d)^{exponent(d)} with ordinary log/exp.
GradedSeries product_over_d(const GradedSeries& omega, const std::function<GradedSeries(int)>& factor,
                            const std::function<RatQU(int)>& exponent) {
  GradedSeries acc = GradedSeries::one(omega.k(), omega.N());
  for (int d = 1; d <= omega.N(); ++d) acc = multiply(acc, series_pow_exp_of_log(factor(d), exponent(d)));
  return acc;
}

GradedSeries negate_q(const GradedSeries& s) {
  return s.map_coeffs([](const RatQU& c) { return c.negate_q(); });
}

}  // namespace

PolyTable U_poly_product_oracle(const GradedSeries& omega) {
  const GradedSeries prod = product_over_d(
      omega, [&](int d) { return omega.adams(static_cast<unsigned>(d)); }, phi);
  return extract(prod, false);
}

PolyTable U_poly_product_oracle(int k, int N) { return U_poly_product_oracle(cauchy_omega(k, N)); }

PolyTable Uprime_poly_product_oracle(const GradedSeries& omega) {
  const GradedSeries omega_neg = negate_q(omega);
  const GradedSeries prod = product_over_d(
      omega, [&](int d) { return (d % 2 ? omega_neg : omega).adams(static_cast<unsigned>(d)); }, phi_prime);
  PolyTable raw = extract(prod, false);
  PolyTable out;
  for (auto& [mu, p] : raw) {
    const long n = mu.size();
    const long e = static_cast<long>(mu.k()) * (n + (n + 1) / 2) + mu.dual().n_stat() + n;
    out.emplace(mu, signed_poly(sign_of(e), std::move(p)));
  }
  return out;
}

PolyTable Uprime_poly_product_oracle(int k, int N) { return Uprime_poly_product_oracle(cauchy_omega(k, N)); }

PolyTable uprime_log_form(const GradedSeries& omega) {
  const int N = omega.N();
  const GradedSeries R = series_log(omega);
  // R_m(x, -q) (-1)^m, so that psi_d gives (-1)^m R_m(x^d, -q^d) T^{dm}.
  const GradedSeries R_alt = negate_q(R).negate_T();
  GradedSeries L(omega.k(), N);
  for (int d = 1; d <= N; ++d) L += R_alt.adams(static_cast<unsigned>(d)) * phi_prime(d);
  for (int d = 1; 2 * d <= N; ++d) {
    L += R.adams(static_cast<unsigned>(2 * d)) * phi_prime(2 * d);
    L -= R_alt.adams(static_cast<unsigned>(2 * d)) * phi_prime(2 * d);
  }
  return extract(series_exp(L), false);
}

PolyTable T_product_oracle(const GradedSeries& omega) {
  const GradedSeries prod = product_over_d(
      omega, [&](int d) { return omega.adams(static_cast<unsigned>(d)); }, phi_u);
  return extract(prod, true);
}

}  // namespace ennola
