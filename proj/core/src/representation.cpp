#include "udeform/representation.hpp"

#include <functional>
#include <sstream>

namespace udeform {

namespace {

void enumerate_monomials(int nvars, int max_degree,
                         const std::function<void(const Exponents&)>& fn) {
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars) {
      fn(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      rec(var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(0, max_degree);
}

}  // namespace

Representation Representation::create(
    SpecPtr spec, int nvars, std::vector<std::vector<OperatorTerm>> generators,
    int probe_degree) {
  if (static_cast<int>(generators.size()) != spec->dim())
    throw Error(ErrorCode::InvalidInput, "one operator per basis vector required");
  Representation rep;
  rep.spec_ = std::move(spec);
  rep.nvars_ = nvars;
  rep.gens_ = std::move(generators);

  // [rho(e_i), rho(e_j)] = rho([e_i, e_j]) on monomials up to probe_degree.
  for (int i = 0; i < rep.spec_->dim(); ++i)
    for (int j = i + 1; j < rep.spec_->dim(); ++j) {
      bool failed = false;
      enumerate_monomials(nvars, probe_degree, [&](const Exponents& e) {
        if (failed) return;
        Poly f = Poly::monomial(nvars, e, Scalar(1));
        Poly lhs = rep.act_generator(i, rep.act_generator(j, f)) -
                   rep.act_generator(j, rep.act_generator(i, f));
        Poly rhs(nvars);
        for (const auto& [k, c] : rep.spec_->bracket_basis(i, j))
          rhs += rep.act_generator(k, f) * Scalar(mpq_class(c));
        if (!(lhs == rhs)) failed = true;
      });
      if (failed) {
        std::ostringstream os;
        os << "operator commutator of " << rep.spec_->basis_labels()[i] << ","
           << rep.spec_->basis_labels()[j] << " does not match the bracket";
        throw Error(ErrorCode::EmbeddingMismatch, os.str());
      }
    }
  return rep;
}

Representation Representation::abelian(SpecPtr spec) {
  int d = spec->dim();
  std::vector<std::vector<OperatorTerm>> gens(d);
  for (int k = 0; k < d; ++k)
    gens[k].push_back({Scalar(1), Exponents(d, 0), k});
  return create(std::move(spec), d, std::move(gens));
}

Representation Representation::axb(SpecPtr spec) {
  std::vector<std::vector<OperatorTerm>> gens(2);
  gens[0].push_back({Scalar(1), Exponents(1, 0), 0});       // E = d/dz
  gens[1].push_back({Scalar(-1), Exponents{1}, 0});         // H = -z d/dz
  return create(std::move(spec), 1, std::move(gens));
}

Representation Representation::heis_sl(SpecPtr spec, int d) {
  std::vector<std::vector<OperatorTerm>> gens;
  auto enm = [d](int n, int m) {
    Exponents mono(d, 0);
    mono[n - 1] = 1;
    return OperatorTerm{Scalar(1), mono, m - 1};
  };
  for (int s = 2; s <= d; ++s) gens.push_back({enm(1, s)});
  for (int s = 2; s <= d - 1; ++s) gens.push_back({enm(s, d)});
  for (int n = 1; n <= d - 1; ++n) {
    std::vector<OperatorTerm> op;
    op.push_back(enm(n, n));
    auto neg = enm(n + 1, n + 1);
    neg.coeff = Scalar(-1);
    op.push_back(neg);
    gens.push_back(std::move(op));
  }
  return create(std::move(spec), d, std::move(gens));
}

Representation Representation::gl(SpecPtr spec, int d) {
  std::vector<std::vector<OperatorTerm>> gens;
  for (int n = 1; n <= d; ++n)
    for (int m = 1; m <= d; ++m) {
      Exponents mono(d, 0);
      mono[n - 1] = 1;
      gens.push_back({OperatorTerm{Scalar(1), mono, m - 1}});
    }
  return create(std::move(spec), d, std::move(gens));
}

Poly Representation::act_generator(int i, const Poly& f) const {
  Poly out(nvars_);
  for (const auto& term : gens_[i]) {
    Poly part = term.dvar < 0 ? f : f.derivative(term.dvar);
    if (part.is_zero()) continue;
    out += Poly::monomial(nvars_, term.mono, term.coeff) * part;
  }
  return out;
}

Poly Representation::act_word(const std::vector<int>& word, const Poly& f) const {
  Poly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = act_generator(*it, out);
  return out;
}

Poly Representation::act_monomial(const PBWMonomial& m, const Poly& f) const {
  Poly out = f;
  for (int i = static_cast<int>(m.exp.size()) - 1; i >= 0; --i)
    for (std::uint32_t k = 0; k < m.exp[i]; ++k) out = act_generator(i, out);
  return out;
}

Poly Representation::act_uea(const UEAElement& a, const Poly& f) const {
  Poly out(nvars_);
  for (const auto& [m, c] : a.terms()) out += act_monomial(m, f) * c;
  return out;
}

std::vector<Representation::TensorActionTerm> Representation::act_tensor(
    const TensorElement2& t, const Poly& f, const Poly& g) const {
  std::vector<TensorActionTerm> out;
  out.reserve(t.terms().size());
  for (const auto& [key, c] : t.terms())
    out.push_back({act_monomial(key[0], f), act_monomial(key[1], g), c});
  return out;
}

MalleabilityReport Representation::check_malleability(int probe_degree) const {
  MalleabilityReport rep;
  // First-order Leibniz rule on monomial pairs.
  std::vector<Poly> monos;
  enumerate_monomials(nvars_, probe_degree, [&](const Exponents& e) {
    monos.push_back(Poly::monomial(nvars_, e, Scalar(1)));
  });
  for (int i = 0; i < spec_->dim() && rep.ok; ++i)
    for (const auto& f : monos) {
      for (const auto& g : monos) {
        Poly lhs = act_generator(i, f * g);
        Poly rhs = act_generator(i, f) * g + f * act_generator(i, g);
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "Leibniz failure for " << spec_->basis_labels()[i] << " on "
             << f.str() << " , " << g.str();
          rep.ok = false;
          rep.witness = os.str();
          break;
        }
      }
      if (!rep.ok) break;
    }
  if (!rep.ok) return rep;

  // n-fold shuffle identity for basis words, n <= 4: the word applied to
  // f*g equals the sum over subset splittings of (left word f)*(right
  // word g). Probes use low-degree data to stay cheap.
  Poly f = monos.size() > 1 ? monos[1] : monos[0];
  Poly g = monos.back();
  for (int n = 2; n <= 4 && rep.ok; ++n) {
    std::vector<int> word;
    for (int k = 0; k < n; ++k) word.push_back(k % spec_->dim());
    Poly lhs = act_word(word, f * g);
    Poly rhs(nvars_);
    for (const auto& split : leibniz_shuffle_expand(n)) {
      std::vector<int> wl, wr;
      for (int idx : split.left) wl.push_back(word[idx]);
      for (int idx : split.right) wr.push_back(word[idx]);
      rhs += act_word(wl, f) * act_word(wr, g);
    }
    if (!(lhs == rhs)) {
      rep.ok = false;
      rep.witness = "shuffle identity failure at word length " + std::to_string(n);
    }
  }
  return rep;
}

}  // namespace udeform
