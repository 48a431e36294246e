#include "dynshaf/morphism.hpp"

#include <algorithm>

#include "dynshaf/factor.hpp"

namespace dynshaf {

namespace {

// Macaulay matrix at critical degree D = (N+1)(d-1)+1: the row of a degree-D
// monomial m is (m / x_i^d) * F_i where i is the first slot with exponent
// >= d. A monomial is extraneous when two slots reach d.
struct MacaulayData {
  IntMat matrix;
  std::vector<std::size_t> extraneous;
};

MacaulayData macaulay_matrix(int n, int d,
                             const std::vector<HomogeneousForm>& forms) {
  const int critical = (n + 1) * (d - 1) + 1;
  const MonomialBasis& big = basis_for(n, critical);
  const MonomialBasis& small = basis_for(n, d);
  MacaulayData out;
  out.matrix.assign(big.size(), IntVec(big.size(), Int(0)));
  std::vector<int> shifted(n + 1);
  for (std::size_t m = 0; m < big.size(); ++m) {
    const std::vector<int>& exps = big.exponents()[m];
    int owner = -1, saturated = 0;
    for (int i = 0; i <= n; ++i) {
      if (exps[i] >= d) {
        ++saturated;
        if (owner < 0) owner = i;
      }
    }
    if (saturated >= 2) out.extraneous.push_back(m);
    const RatVec& coeffs = forms[owner].coefficients();
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      if (coeffs[t] == 0) continue;
      for (int i = 0; i <= n; ++i)
        shifted[i] = exps[i] + small.exponents()[t][i];
      shifted[owner] -= d;
      out.matrix[m][big.index_of(shifted)] += Int(coeffs[t].get_num());
    }
  }
  return out;
}

Int submatrix_det(const IntMat& m, const std::vector<std::size_t>& idx) {
  IntMat sub(idx.size(), IntVec(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
  return det_int(std::move(sub));
}

void require_integer_forms(const std::vector<HomogeneousForm>& forms) {
  for (const HomogeneousForm& f : forms)
    for (const Rat& c : f.coefficients())
      if (c.get_den() != 1)
        throw std::invalid_argument(
            "resultant requires integer coefficient forms");
}

// Deterministic unimodular substitution used when the distinguished Macaulay
// submatrix degenerates; det = 1 so the resultant is unchanged.
IntMat unimodular_change(int n, SplitMix64& rng) {
  IntMat a(n + 1, IntVec(n + 1, Int(0)));
  for (int i = 0; i <= n; ++i) a[i][i] = 1;
  for (int step = 0; step < 2 * (n + 1); ++step) {
    int i = static_cast<int>(rng.uniform(0, n));
    int j = static_cast<int>(rng.uniform(0, n));
    if (i == j) continue;
    long v = rng.uniform(-2, 2);
    if (v == 0) v = 1;
    for (int k = 0; k <= n; ++k) a[i][k] += Int(v) * a[j][k];
  }
  return a;
}

}  // namespace

Int macaulay_resultant(int dimension, int degree,
                       const std::vector<HomogeneousForm>& forms) {
  const int n = dimension;
  if (static_cast<int>(forms.size()) != n + 1)
    throw std::invalid_argument("resultant needs N+1 forms");
  for (const HomogeneousForm& f : forms)
    if (f.dimension() != n || f.degree() != degree)
      throw std::invalid_argument("resultant form shape mismatch");
  require_integer_forms(forms);

  MacaulayData data = macaulay_matrix(n, degree, forms);
  Int den = submatrix_det(data.matrix, data.extraneous);
  if (den != 0) {
    Int num = det_int(std::move(data.matrix));
    Int res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return res;
  }

  // Distinguished submatrix degenerated: retry on a unimodular coordinate
  // change, which leaves the resultant fixed.
  SplitMix64 rng(0x6d61636175ULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntMat a = unimodular_change(n, rng);
    std::vector<HomogeneousForm> moved;
    moved.reserve(forms.size());
    for (const HomogeneousForm& f : forms)
      moved.push_back(substitute_linear(f, a));
    MacaulayData retry = macaulay_matrix(n, degree, moved);
    Int rden = submatrix_det(retry.matrix, retry.extraneous);
    if (rden == 0) continue;
    Int rnum = det_int(std::move(retry.matrix));
    Int res;
    mpz_divexact(res.get_mpz_t(), rnum.get_mpz_t(), rden.get_mpz_t());
    return res;
  }
  throw std::runtime_error(
      "Macaulay submatrix degenerate for every coordinate change tried");
}

std::optional<Morphism> Morphism::build(int dimension, int degree,
                                        std::vector<HomogeneousForm> forms,
                                        bool throwing) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (degree < 2)
    throw std::invalid_argument("morphism degree must be at least 2");
  if (static_cast<int>(forms.size()) != dimension + 1)
    throw std::invalid_argument("morphism needs N+1 coordinate forms");
  for (const HomogeneousForm& f : forms)
    if (f.dimension() != dimension || f.degree() != degree)
      throw std::invalid_argument("morphism form shape mismatch");

  // Joint canonicalization: integer coefficients, content 1, positive first
  // nonzero coefficient in form-major order.
  RatVec flat;
  for (const HomogeneousForm& f : forms)
    flat.insert(flat.end(), f.coefficients().begin(), f.coefficients().end());
  if (std::all_of(flat.begin(), flat.end(), [](const Rat& c) { return c == 0; }))
    throw std::invalid_argument("morphism with all coefficients zero");
  IntVec prim = primitive_integer_vector(flat);
  const std::size_t r = forms[0].coefficients().size();
  std::vector<HomogeneousForm> canonical;
  canonical.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    RatVec c(prim.begin() + i * r, prim.begin() + (i + 1) * r);
    canonical.emplace_back(dimension, degree, std::move(c));
  }

  Int res = macaulay_resultant(dimension, degree, canonical);
  if (res == 0) {
    if (!throwing) return std::nullopt;
    // Look for a small rational common zero to attach as a witness.
    std::string witness;
    const long box = 3;
    std::vector<long> tuple(dimension + 1, -box);
    while (true) {
      bool all_zero_coords =
          std::all_of(tuple.begin(), tuple.end(), [](long v) { return v == 0; });
      if (!all_zero_coords) {
        IntVec coords(tuple.begin(), tuple.end());
        bool vanishes = std::all_of(
            canonical.begin(), canonical.end(),
            [&](const HomogeneousForm& f) { return f.evaluate(coords) == 0; });
        if (vanishes) {
          ProjPoint zero(coords);
          witness = " (common zero at " + zero.coords()[0].get_str();
          for (int i = 1; i <= dimension; ++i)
            witness += ":" + zero.coords()[i].get_str();
          witness += ")";
          break;
        }
      }
      int pos = dimension;
      while (pos >= 0 && tuple[pos] == box) tuple[pos--] = -box;
      if (pos < 0) break;
      ++tuple[pos];
    }
    throw std::domain_error("not a morphism: resultant is zero" + witness);
  }

  Morphism m;
  m.dim_ = dimension;
  m.deg_ = degree;
  m.forms_ = std::move(canonical);
  m.resultant_ = std::move(res);
  return m;
}

Morphism::Morphism(int dimension, int degree, std::vector<HomogeneousForm> forms)
    : Morphism(*build(dimension, degree, std::move(forms), true)) {}

std::optional<Morphism> Morphism::try_create(int dimension, int degree,
                                             std::vector<HomogeneousForm> forms) {
  return build(dimension, degree, std::move(forms), false);
}

ProjPoint Morphism::evaluate(const ProjPoint& x) const {
  if (x.dimension() != dim_) throw std::invalid_argument("dimension mismatch");
  RatVec values(dim_ + 1);
  for (int i = 0; i <= dim_; ++i) values[i] = forms_[i].evaluate(x.coords());
  if (std::all_of(values.begin(), values.end(),
                  [](const Rat& v) { return v == 0; }))
    throw std::logic_error("morphism invariant violated: all forms vanish");
  return ProjPoint(values);
}

PointSet Morphism::evaluate(const PointSet& y) const {
  std::vector<ProjPoint> images;
  images.reserve(y.size());
  for (const ProjPoint& p : y.points()) images.push_back(evaluate(p));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return PointSet(dim_, std::move(images));
}

bool Morphism::operator==(const Morphism& other) const {
  return dim_ == other.dim_ && deg_ == other.deg_ && forms_ == other.forms_;
}

bool Morphism::operator<(const Morphism& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  if (deg_ != other.deg_) return deg_ < other.deg_;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const RatVec& a = forms_[i].coefficients();
    const RatVec& b = other.forms_[i].coefficients();
    if (a != b)
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                          b.end());
  }
  return false;
}

GoodReductionReport good_reduction_primes(const Morphism& f,
                                          const PrimeSet& s) {
  GoodReductionReport report;
  report.general_position = true;  // not applicable to morphisms
  report.bad_primes = primes_outside(f.resultant(), s);
  for (const Int& p : report.bad_primes)
    report.witnesses.push_back(GoodReductionWitness{p, {}});
  report.ok = report.bad_primes.empty();
  return report;
}

InterpolationResult interpolate(
    const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int dimension,
    int degree) {
  if (pairs.empty()) throw std::invalid_argument("no interpolation data");
  const int n = dimension;
  const MonomialBasis& basis = basis_for(n, degree);
  const std::size_t r = basis.size();
  const std::size_t unknowns = static_cast<std::size_t>(n + 1) * r;

  RatMat rows;
  for (const auto& [p, q] : pairs) {
    if (p.dimension() != n || q.dimension() != n)
      throw std::invalid_argument("dimension mismatch");
    IntVec sigma(r);
    for (std::size_t m = 0; m < r; ++m) {
      Int mono(1);
      for (int k = 0; k <= n; ++k) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), p.coords()[k].get_mpz_t(),
                   basis.exponents()[m][k]);
        mono *= pw;
      }
      sigma[m] = mono;
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        RatVec row(unknowns, Rat(0));
        for (std::size_t m = 0; m < r; ++m) {
          row[i * r + m] = Rat(q.coords()[j] * sigma[m]);
          row[j * r + m] = -Rat(q.coords()[i] * sigma[m]);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  InterpolationResult out;
  out.coefficient_basis = kernel_basis(rows);
  if (out.coefficient_basis.empty())
    throw std::domain_error("no such map of degree " + std::to_string(degree));
  for (const RatVec& v : out.coefficient_basis) {
    std::vector<HomogeneousForm> forms;
    for (int i = 0; i <= n; ++i)
      forms.emplace_back(n, degree,
                         RatVec(v.begin() + i * r, v.begin() + (i + 1) * r));
    if (auto m = Morphism::try_create(n, degree, std::move(forms)))
      out.morphisms.push_back(std::move(*m));
  }
  out.unique = out.coefficient_basis.size() == 1 && out.morphisms.size() == 1;
  if (out.unique) out.unique_morphism = out.morphisms[0];
  return out;
}

std::vector<HomogeneousForm> equalizer_forms(
    const std::vector<HomogeneousForm>& f,
    const std::vector<HomogeneousForm>& g) {
  if (f.empty() || f.size() != g.size())
    throw std::invalid_argument("equalizer needs matching form counts");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].dimension() != g[i].dimension() || f[i].degree() != g[i].degree())
      throw std::invalid_argument(
          "equalizer needs matching dimension and degree");
  std::vector<HomogeneousForm> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      out.push_back((f[i] * g[j] - f[j] * g[i]).canonical());
  return out;
}

std::vector<HomogeneousForm> equalizer_forms(const Morphism& f,
                                             const Morphism& g) {
  if (f.dimension() != g.dimension() || f.degree() != g.degree())
    throw std::invalid_argument("equalizer needs matching dimension and degree");
  return equalizer_forms(f.forms(), g.forms());
}

bool uniqueness_certificate(const PointSet& y, const Morphism& f,
                            const Morphism& g) {
  if (min_containing_degree(y, 2 * f.degree())) return false;
  for (const HomogeneousForm& e : equalizer_forms(f, g))
    for (const ProjPoint& p : y.points())
      if (e.evaluate(p) != 0) return false;
  if (!(f == g))
    throw std::logic_error(
        "uniqueness certificate violated: equal on a generic set but the "
        "maps differ");
  return true;
}

Morphism conjugate(const Morphism& f, const ProjLinearMap& phi) {
  if (f.dimension() != phi.dimension())
    throw std::invalid_argument("dimension mismatch");
  const int n = f.dimension();
  const IntMat& a = phi.matrix();
  // Integer adjugate: det * A^{-1}.
  RatMat inv = mat_inverse(to_rat(a));
  IntMat adj(n + 1, IntVec(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rat entry = inv[i][j] * Rat(phi.det());
      if (entry.get_den() != 1)
        throw std::logic_error("adjugate not integral");
      adj[i][j] = Int(entry.get_num());
    }
  std::vector<HomogeneousForm> composed;
  composed.reserve(n + 1);
  for (int j = 0; j <= n; ++j)
    composed.push_back(substitute_linear(f.forms()[j], a));
  std::vector<HomogeneousForm> out;
  for (int i = 0; i <= n; ++i) {
    HomogeneousForm g(n, f.degree());
    for (int j = 0; j <= n; ++j)
      g = g + composed[j].scaled(Rat(adj[i][j]));
    out.push_back(std::move(g));
  }
  return Morphism(n, f.degree(), std::move(out));
}

}  // namespace dynshaf
