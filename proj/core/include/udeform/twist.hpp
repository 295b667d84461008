#ifndef UDEFORM_TWIST_HPP
#define UDEFORM_TWIST_HPP

#include <string>
#include <utility>
#include <vector>

#include "udeform/uea.hpp"

namespace udeform {

enum class TwistFamily { Abelian, AxB, SlHeis };

const char* to_string(TwistFamily f);

struct TwistFamilyConfig {
  TwistFamily family;
  SpecPtr spec;

  // Abelian: r = sum_k r_k (x) s_k.
  std::vector<std::pair<LieElement, LieElement>> r_pairs;

  // SlHeis: matrix size d and the coefficients c_s of H = 1/2 sum c_s H_s.
  int d = 0;
  std::vector<Scalar> c_s;

  static TwistFamilyConfig abelian(
      SpecPtr spec, std::vector<std::pair<LieElement, LieElement>> r_pairs);
  static TwistFamilyConfig axb(SpecPtr spec);
  /// Empty c_s means all-ones.
  static TwistFamilyConfig heis_sl(SpecPtr spec, int d,
                                   std::vector<Scalar> c_s = {});

  /// max_k ||r_k|| + max_k ||s_k|| (abelian only; upper bound).
  double abelian_constant() const;

  /// H = 1/2 sum c_s H_s as an element of U (SlHeis only).
  UEAElement sl_cartan() const;
};

/// Truncated twist series F_0..F_N. The 1/n! of F_hbar = sum h^n/n! F_n
/// is not folded into the stored coefficients.
struct TwistSeries {
  TwistFamily family;
  SpecPtr spec;
  std::vector<TensorElement2> F;

  int order() const { return static_cast<int>(F.size()) - 1; }
  std::string json() const;
};

TwistSeries abelian_twist(UEAContext& ctx, const TwistFamilyConfig& cfg, int N);
TwistSeries axb_twist(UEAContext& ctx, int N);
TwistSeries sl_twist(UEAContext& ctx, const TwistFamilyConfig& cfg, int N);
TwistSeries generate_twist(UEAContext& ctx, const TwistFamilyConfig& cfg, int N);

/// h^n coefficient of ((Delta(x)id)F)(F(x)1) - ((id(x)Delta)F)(1(x)F) with the
/// 1/k! weights of each series factor folded in; zero for a genuine twist.
TensorElement3 cocycle_residual(UEAContext& ctx, const TwistSeries& F, int n);

/// (eps(x)id)F_n or (id(x)eps)F_n; 1 at n=0 and 0 for n >= 1.
UEAElement counit_residual(UEAContext& ctx, const TwistSeries& F, int n,
                           bool left);

}  // namespace udeform

#endif
