#include "udeform/lie_algebra.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace udeform {

namespace {

RationalMatrix zero_matrix(int n) {
  return RationalMatrix(n, std::vector<mpq_class>(n, mpq_class(0)));
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  int n = static_cast<int>(a.size());
  RationalMatrix c = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return c;
}

/// Expresses `target` in the span of `basis` (as flattened vectors) by
/// exact Gaussian elimination. Returns false if not in the span.
bool solve_in_span(const std::vector<RationalMatrix>& basis,
                   const RationalMatrix& target,
                   std::vector<mpq_class>& coeffs) {
  int n = static_cast<int>(target.size());
  int rows = n * n;
  int cols = static_cast<int>(basis.size());
  // augmented matrix [basis | target]
  std::vector<std::vector<mpq_class>> m(rows,
                                        std::vector<mpq_class>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = basis[c][r / n][r % n];
    m[r][cols] = target[r / n][r % n];
  }
  std::vector<int> pivot_row(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    mpq_class inv = m[rank][c];
    for (int cc = c; cc <= cols; ++cc) m[rank][cc] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int cc = c; cc <= cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  // Rows below rank are zero; basis columns without pivot would mean a
  // dependent basis, which we reject as well.
  coeffs.assign(cols, mpq_class(0));
  for (int c = 0; c < cols; ++c) {
    if (pivot_row[c] < 0) return false;
    coeffs[c] = m[pivot_row[c]][cols];
  }
  return true;
}

}  // namespace

SpecPtr LieAlgebraSpec::create(int dim, std::vector<std::string> labels,
                               std::vector<BracketEntry> brackets,
                               NormModel norm,
                               std::vector<RationalMatrix> embedding,
                               int degree_cap) {
  if (dim <= 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  if (labels.empty()) {
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != dim)
    throw Error(ErrorCode::InvalidInput, "basis label count != dim");
  if (norm == NormModel::Frobenius && embedding.empty())
    throw Error(ErrorCode::InvalidInput, "Frobenius norm model requires an embedding");

  auto spec = std::shared_ptr<LieAlgebraSpec>(new LieAlgebraSpec());
  spec->dim_ = dim;
  spec->labels_ = std::move(labels);
  spec->norm_ = norm;
  spec->embedding_ = std::move(embedding);
  spec->degree_cap_ = degree_cap;
  spec->brackets_.assign(static_cast<std::size_t>(dim) * dim, {});

  std::map<std::tuple<int, int, int>, mpq_class> table;
  for (const auto& e : brackets) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw Error(ErrorCode::InvalidInput, "bracket index out of range");
    table[{e.i, e.j, e.k}] += e.c;
  }
  // Antisymmetry: c^k_{ij} = -c^k_{ji}; diagonal entries must vanish.
  for (const auto& [key, c] : table) {
    auto [i, j, k] = key;
    mpq_class mirror(0);
    auto it = table.find({j, i, k});
    if (it != table.end()) mirror = it->second;
    if (c + mirror != 0 || (i == j && c != 0)) {
      std::ostringstream os;
      os << "antisymmetry violated at (i,j,k)=(" << i << "," << j << "," << k << ")";
      throw Error(ErrorCode::AntisymmetryViolation, os.str());
    }
  }
  for (const auto& [key, c] : table) {
    auto [i, j, k] = key;
    if (c != 0) spec->brackets_[i * dim + j].emplace_back(k, c);
  }

  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0.
  auto add_nested = [&](std::vector<mpq_class>& acc, int a, int b, int c) {
    for (const auto& [m, cm] : spec->brackets_[b * dim + c])
      for (const auto& [n, cn] : spec->brackets_[a * dim + m])
        acc[n] += cm * cn;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        std::vector<mpq_class> acc(dim, mpq_class(0));
        add_nested(acc, i, j, k);
        add_nested(acc, j, k, i);
        add_nested(acc, k, i, j);
        for (int n = 0; n < dim; ++n)
          if (acc[n] != 0) {
            std::ostringstream os;
            os << "Jacobi identity violated on (" << i << "," << j << "," << k << ")";
            throw Error(ErrorCode::JacobiViolation, os.str());
          }
      }

  if (!spec->embedding_.empty()) {
    if (static_cast<int>(spec->embedding_.size()) != dim)
      throw Error(ErrorCode::InvalidInput, "embedding matrix count != dim");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        RationalMatrix comm =
            commutator(spec->embedding_[i], spec->embedding_[j]);
        RationalMatrix expect = zero_matrix(static_cast<int>(comm.size()));
        for (const auto& [k, c] : spec->brackets_[i * dim + j])
          for (std::size_t r = 0; r < expect.size(); ++r)
            for (std::size_t s = 0; s < expect.size(); ++s)
              expect[r][s] += c * spec->embedding_[k][r][s];
        if (comm != expect) {
          std::ostringstream os;
          os << "embedded commutator [" << spec->labels_[i] << ","
             << spec->labels_[j] << "] does not match structure constants";
          throw Error(ErrorCode::EmbeddingMismatch, os.str());
        }
      }
  }
  return spec;
}

const std::vector<std::pair<int, mpq_class>>& LieAlgebraSpec::bracket_basis(
    int i, int j) const {
  return brackets_[i * dim_ + j];
}

LieElement LieAlgebraSpec::bracket(const LieElement& xi,
                                   const LieElement& eta) const {
  if (static_cast<int>(xi.coords.size()) != dim_ ||
      static_cast<int>(eta.coords.size()) != dim_)
    throw Error(ErrorCode::InvalidInput, "LieElement dimension mismatch");
  LieElement out;
  out.coords.assign(dim_, Scalar(0));
  for (int i = 0; i < dim_; ++i) {
    if (xi.coords[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (eta.coords[j].is_zero()) continue;
      Scalar prod = xi.coords[i] * eta.coords[j];
      for (const auto& [k, c] : brackets_[i * dim_ + j])
        out.coords[k] += prod * Scalar(mpq_class(c));
    }
  }
  return out;
}

double LieAlgebraSpec::basis_norm(int i) const {
  if (norm_ == NormModel::MaxCoordinate) return 1.0;
  mpq_class sq(0);
  for (const auto& row : embedding_[i])
    for (const auto& e : row) sq += e * e;
  return std::sqrt(sq.get_d());
}

double LieAlgebraSpec::element_norm_upper(const LieElement& xi) const {
  double up = 0.0;
  if (norm_ == NormModel::MaxCoordinate) {
    for (const auto& c : xi.coords)
      up = std::max(up, std::sqrt(c.abs_sq().get_d()) * (1.0 + 1e-12));
    return up;
  }
  // Frobenius: triangle inequality over basis components.
  for (int i = 0; i < dim_; ++i)
    up += std::sqrt(xi.coords[i].abs_sq().get_d()) * basis_norm(i) *
          (1.0 + 1e-12);
  return up * (1.0 + 1e-12);
}

double LieAlgebraSpec::element_norm_lower(const LieElement& xi) const {
  if (norm_ == NormModel::MaxCoordinate) {
    double lo = 0.0;
    for (const auto& c : xi.coords)
      lo = std::max(lo, std::sqrt(c.abs_sq().get_d()) * (1.0 - 1e-12));
    return lo;
  }
  // Frobenius norm of the embedded matrix, rounded down. Exact mode only
  // reaches this through real rational coordinates in practice.
  int D = static_cast<int>(embedding_[0].size());
  double sq = 0.0;
  for (int r = 0; r < D; ++r)
    for (int s = 0; s < D; ++s) {
      std::complex<double> entry(0.0, 0.0);
      for (int i = 0; i < dim_; ++i)
        entry += xi.coords[i].value() * embedding_[i][r][s].get_d();
      sq += std::norm(entry);
    }
  return std::sqrt(sq) * (1.0 - 1e-9);
}

namespace {

SpecPtr make_abelian(int d) {
  return LieAlgebraSpec::create(d, {}, {}, NormModel::MaxCoordinate);
}

// Basis order (E, H) so PBW monomials read E^a H^b; [H,E] = E.
SpecPtr make_axb() {
  std::vector<LieAlgebraSpec::BracketEntry> br;
  br.push_back({1, 0, 0, mpq_class(1)});  // [H,E] = E => [E,H] = -E
  br.push_back({0, 1, 0, mpq_class(-1)});
  return LieAlgebraSpec::create(2, {"E", "H"}, br, NormModel::MaxCoordinate);
}

// The subalgebra of sl_d spanned by E_{12},...,E_{1d}, E_{2d},...,E_{d-1,d}
// and H_1,...,H_{d-1}, with the Frobenius norm via the matrix embedding.
SpecPtr make_heis_sl(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "heis-sl requires d >= 2");
  auto unit = [d](int n, int k) {
    RationalMatrix m(d, std::vector<mpq_class>(d, mpq_class(0)));
    m[n - 1][k - 1] = 1;
    return m;
  };
  std::vector<std::string> labels;
  std::vector<RationalMatrix> emb;
  for (int s = 2; s <= d; ++s) {
    labels.push_back("E1" + std::to_string(s));
    emb.push_back(unit(1, s));
  }
  for (int s = 2; s <= d - 1; ++s) {
    labels.push_back("E" + std::to_string(s) + std::to_string(d));
    emb.push_back(unit(s, d));
  }
  for (int n = 1; n <= d - 1; ++n) {
    labels.push_back("H" + std::to_string(n));
    RationalMatrix m(d, std::vector<mpq_class>(d, mpq_class(0)));
    m[n - 1][n - 1] = 1;
    m[n][n] = -1;
    emb.push_back(m);
  }
  int dim = static_cast<int>(emb.size());
  // Structure constants from the embedding; bracket closure is validated here.
  std::vector<LieAlgebraSpec::BracketEntry> br;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      RationalMatrix comm = commutator(emb[i], emb[j]);
      std::vector<mpq_class> coeffs;
      if (!solve_in_span(emb, comm, coeffs))
        throw Error(ErrorCode::ClosureFailure,
                    "heis-sl generators not closed under bracket");
      for (int k = 0; k < dim; ++k)
        if (coeffs[k] != 0) br.push_back({i, j, k, coeffs[k]});
    }
  return LieAlgebraSpec::create(dim, labels, br, NormModel::Frobenius, emb);
}

// Full matrix algebra gl_d with basis E_{nm} row-major; used where a
// bound quantifies over the unit ball of all matrix units at once.
SpecPtr make_gl(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "gl requires d >= 1");
  std::vector<std::string> labels;
  std::vector<RationalMatrix> emb;
  for (int n = 1; n <= d; ++n)
    for (int m = 1; m <= d; ++m) {
      labels.push_back("E" + std::to_string(n) + std::to_string(m));
      RationalMatrix mat(d, std::vector<mpq_class>(d, mpq_class(0)));
      mat[n - 1][m - 1] = 1;
      emb.push_back(mat);
    }
  int dim = d * d;
  auto idx = [d](int n, int m) { return (n - 1) * d + (m - 1); };
  // [E_{nm}, E_{pq}] = delta_{mp} E_{nq} - delta_{qn} E_{pm}.
  std::vector<LieAlgebraSpec::BracketEntry> br;
  for (int n = 1; n <= d; ++n)
    for (int m = 1; m <= d; ++m)
      for (int p = 1; p <= d; ++p)
        for (int q = 1; q <= d; ++q) {
          std::map<int, mpq_class> acc;
          if (m == p) acc[idx(n, q)] += 1;
          if (q == n) acc[idx(p, m)] -= 1;
          for (const auto& [k, c] : acc)
            if (c != 0) br.push_back({idx(n, m), idx(p, q), k, c});
        }
  return LieAlgebraSpec::create(dim, labels, br, NormModel::Frobenius, emb);
}

}  // namespace

SpecPtr LieAlgebraSpec::builtin(const std::string& name) {
  if (name == "axb") return make_axb();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    int d = std::stoi(name.substr(colon + 1));
    if (head == "abelian") return make_abelian(d);
    if (head == "heis-sl") return make_heis_sl(d);
    if (head == "gl") return make_gl(d);
  }
  throw Error(ErrorCode::InvalidInput, "unknown builtin spec: " + name);
}

SpecPtr LieAlgebraSpec::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int dim = j.at("dim").get<int>();
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j["basis"].get<std::vector<std::string>>();
  std::vector<BracketEntry> br;
  for (const auto& e : j.value("brackets", nlohmann::json::array())) {
    BracketEntry be;
    be.i = e.at(0).get<int>();
    be.j = e.at(1).get<int>();
    be.k = e.at(2).get<int>();
    be.c = mpq_class(e.at(3).get<std::string>());
    be.c.canonicalize();
    br.push_back(be);
  }
  NormModel norm = NormModel::MaxCoordinate;
  if (j.value("norm", "max") == std::string("frobenius"))
    norm = NormModel::Frobenius;
  std::vector<RationalMatrix> emb;
  for (const auto& m : j.value("embedding", nlohmann::json::array())) {
    RationalMatrix mat;
    for (const auto& row : m) {
      std::vector<mpq_class> r;
      for (const auto& e : row) {
        mpq_class q(e.get<std::string>());
        q.canonicalize();
        r.push_back(q);
      }
      mat.push_back(std::move(r));
    }
    emb.push_back(std::move(mat));
  }
  return create(dim, std::move(basis), std::move(br), norm, std::move(emb));
}

std::string LieAlgebraSpec::json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  j["basis"] = labels_;
  auto br = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i)
    for (int jj = 0; jj < dim_; ++jj)
      for (const auto& [k, c] : brackets_[i * dim_ + jj])
        br.push_back({i, jj, k, c.get_str()});
  j["brackets"] = br;
  j["norm"] = norm_ == NormModel::MaxCoordinate ? "max" : "frobenius";
  if (!embedding_.empty()) {
    auto emb = nlohmann::json::array();
    for (const auto& m : embedding_) {
      auto mat = nlohmann::json::array();
      for (const auto& row : m) {
        auto r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        mat.push_back(r);
      }
      emb.push_back(mat);
    }
    j["embedding"] = emb;
  }
  return j.dump();
}

}  // namespace udeform
