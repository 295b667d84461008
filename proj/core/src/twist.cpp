#include "udeform/twist.hpp"

#include <json.hpp>

namespace udeform {

const char* to_string(TwistFamily f) {
  switch (f) {
    case TwistFamily::Abelian: return "abelian";
    case TwistFamily::AxB: return "axb";
    case TwistFamily::SlHeis: return "heis-sl";
  }
  return "?";
}

TwistFamilyConfig TwistFamilyConfig::abelian(
    SpecPtr spec, std::vector<std::pair<LieElement, LieElement>> r_pairs) {
  for (int i = 0; i < spec->dim(); ++i)
    for (int j = 0; j < spec->dim(); ++j)
      if (!spec->bracket_basis(i, j).empty())
        throw Error(ErrorCode::InvalidInput,
                    "abelian twist requires all-zero brackets");
  TwistFamilyConfig cfg;
  cfg.family = TwistFamily::Abelian;
  cfg.spec = std::move(spec);
  cfg.r_pairs = std::move(r_pairs);
  return cfg;
}

TwistFamilyConfig TwistFamilyConfig::axb(SpecPtr spec) {
  TwistFamilyConfig cfg;
  cfg.family = TwistFamily::AxB;
  cfg.spec = std::move(spec);
  return cfg;
}

TwistFamilyConfig TwistFamilyConfig::heis_sl(SpecPtr spec, int d,
                                             std::vector<Scalar> c_s) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "heis-sl requires d >= 2");
  if (c_s.empty()) c_s.assign(d - 1, Scalar(1));
  if (static_cast<int>(c_s.size()) != d - 1)
    throw Error(ErrorCode::InvalidInput, "expected d-1 Cartan coefficients");
  TwistFamilyConfig cfg;
  cfg.family = TwistFamily::SlHeis;
  cfg.spec = std::move(spec);
  cfg.d = d;
  cfg.c_s = std::move(c_s);
  return cfg;
}

double TwistFamilyConfig::abelian_constant() const {
  double mr = 0, ms = 0;
  for (const auto& [r, s] : r_pairs) {
    mr = std::max(mr, spec->element_norm_upper(r));
    ms = std::max(ms, spec->element_norm_upper(s));
  }
  return mr + ms;
}

UEAElement TwistFamilyConfig::sl_cartan() const {
  // H_s generators sit after the E_{1s} (d-1 of them) and E_{sd} (d-2).
  int h_base = (d - 1) + (d - 2);
  UEAElement h(spec);
  Scalar half = Scalar::rational(1, 2);
  for (int s = 0; s < d - 1; ++s)
    h += UEAElement::generator(spec, h_base + s) * (half * c_s[s]);
  return h;
}

TwistSeries abelian_twist(UEAContext& ctx, const TwistFamilyConfig& cfg,
                          int N) {
  TwistSeries out{TwistFamily::Abelian, cfg.spec, {}};
  TensorElement2 r(cfg.spec);
  for (const auto& [rk, sk] : cfg.r_pairs)
    r += ctx.tensor_product(UEAElement::from_lie(cfg.spec, rk),
                            UEAElement::from_lie(cfg.spec, sk));
  TensorElement2 power = TensorElement2::one(cfg.spec);
  out.F.push_back(power);
  for (int n = 1; n <= N; ++n) {
    power = ctx.product2(power, r);
    out.F.push_back(power);
  }
  return out;
}

TwistSeries axb_twist(UEAContext& ctx, int N) {
  SpecPtr spec = ctx.spec();
  if (spec->dim() != 2)
    throw Error(ErrorCode::InvalidInput, "axb twist requires the 2d spec");
  UEAElement E = UEAElement::generator(spec, 0);
  UEAElement H = UEAElement::generator(spec, 1);
  TwistSeries out{TwistFamily::AxB, spec, {}};
  for (int n = 0; n <= N; ++n) {
    TensorElement2 Fn(spec);
    for (int k = 0; k <= n; ++k) {
      UEAElement left =
          ctx.product(ctx.power(E, n - k), ctx.pochhammer_rising(H, Scalar(0), k));
      UEAElement right =
          ctx.product(ctx.power(E, k), ctx.pochhammer_rising(H, Scalar(0), n - k));
      Scalar c = binomial_scalar(n, k);
      if (k % 2) c = -c;
      Fn += ctx.tensor_product(left, right) * c;
    }
    out.F.push_back(std::move(Fn));
  }
  return out;
}

TwistSeries sl_twist(UEAContext& ctx, const TwistFamilyConfig& cfg, int N) {
  SpecPtr spec = cfg.spec;
  int d = cfg.d;
  UEAElement H = cfg.sl_cartan();
  UEAElement E1d = UEAElement::generator(spec, d - 2);
  TensorElement2 X(spec);
  for (int s = 2; s <= d - 1; ++s)
    X += ctx.tensor_product(UEAElement::generator(spec, s - 2),
                            UEAElement::generator(spec, (d - 1) + (s - 2)));
  TwistSeries out{TwistFamily::SlHeis, spec, {}};
  std::vector<TensorElement2> x_pow{TensorElement2::one(spec)};
  for (int n = 0; n <= N; ++n) {
    TensorElement2 Fn(spec);
    for (int m = 0; m <= n; ++m) {
      if (m >= static_cast<int>(x_pow.size()))
        x_pow.push_back(ctx.product2(x_pow.back(), X));
      UEAElement poch = ctx.pochhammer_rising(H, Scalar(m), n - m);
      TensorElement2 tail = ctx.tensor_product(poch, ctx.power(E1d, n - m));
      Fn += ctx.product2(x_pow[m], tail) * binomial_scalar(n, m);
    }
    out.F.push_back(std::move(Fn));
  }
  return out;
}

TwistSeries generate_twist(UEAContext& ctx, const TwistFamilyConfig& cfg,
                           int N) {
  switch (cfg.family) {
    case TwistFamily::Abelian: return abelian_twist(ctx, cfg, N);
    case TwistFamily::AxB: return axb_twist(ctx, N);
    case TwistFamily::SlHeis: return sl_twist(ctx, cfg, N);
  }
  throw Error(ErrorCode::InvalidInput, "unknown twist family");
}

TensorElement3 cocycle_residual(UEAContext& ctx, const TwistSeries& F, int n) {
  if (n > F.order())
    throw Error(ErrorCode::InvalidInput, "residual order exceeds series order");
  SpecPtr spec = F.spec;
  TensorElement3 res(spec);
  for (int a = 0; a <= n; ++a) {
    int b = n - a;
    Scalar w = Scalar(1) / (factorial_scalar(a) * factorial_scalar(b));
    TensorElement3 lhs =
        ctx.product3(ctx.coproduct_left(F.F[b]), ctx.embed_left(F.F[a]));
    TensorElement3 rhs =
        ctx.product3(ctx.coproduct_right(F.F[b]), ctx.embed_right(F.F[a]));
    res += (lhs - rhs) * w;
  }
  return res;
}

UEAElement counit_residual(UEAContext& ctx, const TwistSeries& F, int n,
                           bool left) {
  if (n > F.order())
    throw Error(ErrorCode::InvalidInput, "residual order exceeds series order");
  return left ? ctx.counit_left(F.F[n]) : ctx.counit_right(F.F[n]);
}

std::string TwistSeries::json() const {
  nlohmann::json j;
  j["family"] = to_string(family);
  j["order"] = order();
  auto terms = nlohmann::json::array();
  for (int n = 0; n <= order(); ++n)
    for (const auto& [key, c] : F[n].terms()) {
      nlohmann::json t;
      t["n"] = n;
      t["left"] = key[0].exp;
      t["right"] = key[1].exp;
      t["coeff"] = c.str();
      terms.push_back(t);
    }
  j["terms"] = terms;
  return j.dump();
}

}  // namespace udeform
