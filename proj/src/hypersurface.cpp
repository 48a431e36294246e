#include "dynshaf/hypersurface.hpp"

#include <algorithm>
#include <map>

namespace dynshaf {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

void enumerate_exponents(int slots, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.push_back(e);
    enumerate_exponents(slots - 1, degree - e, current, out);
    current.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int dimension, int degree)
    : dim_(dimension), deg_(degree) {
  if (dimension < 1 || degree < 0)
    throw std::invalid_argument("invalid monomial basis parameters");
  std::vector<int> current;
  enumerate_exponents(dimension + 1, degree, current, exponents_);
}

std::size_t MonomialBasis::index_of(const std::vector<int>& exps) const {
  // Descending lex order allows binary search.
  auto it = std::lower_bound(
      exponents_.begin(), exponents_.end(), exps,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                            a.end());
      });
  if (it == exponents_.end() || *it != exps)
    throw std::invalid_argument("exponent tuple not in basis");
  return static_cast<std::size_t>(it - exponents_.begin());
}

const MonomialBasis& basis_for(int dimension, int degree) {
  static std::map<std::pair<int, int>, MonomialBasis> cache;
  auto key = std::make_pair(dimension, degree);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, MonomialBasis(dimension, degree)).first;
  return it->second;
}

HomogeneousForm::HomogeneousForm(int dimension, int degree)
    : dim_(dimension),
      deg_(degree),
      coeffs_(basis_for(dimension, degree).size(), Rat(0)) {}

HomogeneousForm::HomogeneousForm(int dimension, int degree, RatVec coefficients)
    : dim_(dimension), deg_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_for(dimension, degree).size())
    throw std::invalid_argument("coefficient vector has wrong length");
}

bool HomogeneousForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

Rat HomogeneousForm::evaluate(const ProjPoint& x) const {
  if (x.dimension() != dim_) throw std::invalid_argument("dimension mismatch");
  return evaluate(x.coords());
}

Rat HomogeneousForm::evaluate(const IntVec& affine) const {
  const MonomialBasis& basis = basis_for(dim_, deg_);
  Rat sum(0);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    Int mono(1);
    for (int i = 0; i <= dim_; ++i) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), affine[i].get_mpz_t(),
                 basis.exponents()[m][i]);
      mono *= pw;
    }
    sum += coeffs_[m] * Rat(mono);
  }
  return sum;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch");
  const MonomialBasis& ba = basis_for(dim_, deg_);
  const MonomialBasis& bb = basis_for(dim_, rhs.deg_);
  const MonomialBasis& bc = basis_for(dim_, deg_ + rhs.deg_);
  HomogeneousForm out(dim_, deg_ + rhs.deg_);
  std::vector<int> exps(dim_ + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      for (int k = 0; k <= dim_; ++k)
        exps[k] = ba.exponents()[i][k] + bb.exponents()[j][k];
      out.coeffs_[bc.index_of(exps)] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& rhs) const {
  if (dim_ != rhs.dim_ || deg_ != rhs.deg_)
    throw std::invalid_argument("form shape mismatch");
  HomogeneousForm out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& rhs) const {
  if (dim_ != rhs.dim_ || deg_ != rhs.deg_)
    throw std::invalid_argument("form shape mismatch");
  HomogeneousForm out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
  return out;
}

HomogeneousForm HomogeneousForm::scaled(const Rat& c) const {
  HomogeneousForm out = *this;
  for (Rat& x : out.coeffs_) x *= c;
  return out;
}

HomogeneousForm HomogeneousForm::canonical() const {
  if (is_zero()) return *this;
  IntVec prim = primitive_integer_vector(coeffs_);
  return HomogeneousForm(dim_, deg_, RatVec(prim.begin(), prim.end()));
}

bool HomogeneousForm::operator==(const HomogeneousForm& other) const {
  return dim_ == other.dim_ && deg_ == other.deg_ && coeffs_ == other.coeffs_;
}

HomogeneousForm substitute_linear(const HomogeneousForm& f, const IntMat& m) {
  const int n = f.dimension();
  const MonomialBasis& basis = basis_for(n, f.degree());
  // Linear forms L_i = sum_j m[i][j] x_j.
  std::vector<HomogeneousForm> linear;
  for (int i = 0; i <= n; ++i)
    linear.emplace_back(n, 1, RatVec(m[i].begin(), m[i].end()));
  HomogeneousForm out(n, f.degree());
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    if (f.coefficients()[k] == 0) continue;
    HomogeneousForm term(n, 0, RatVec{f.coefficients()[k]});
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < basis.exponents()[k][i]; ++e) term = term * linear[i];
    out = out + term;
  }
  return out;
}

IntMat eval_matrix(const PointSet& y, int degree) {
  const int n = y.dimension();
  const MonomialBasis& basis = basis_for(n, degree);
  IntMat out(y.size(), IntVec(basis.size()));
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Int mono(1);
      for (int k = 0; k <= n; ++k) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), y[i].coords()[k].get_mpz_t(),
                   basis.exponents()[j][k]);
        mono *= pw;
      }
      out[i][j] = mono;
    }
  }
  return out;
}

std::optional<std::vector<HomogeneousForm>> contained_in_degree(
    const PointSet& y, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  IntMat ev = eval_matrix(y, degree);
  std::vector<RatVec> kernel = kernel_basis(to_rat(ev));
  if (kernel.empty()) return std::nullopt;
  std::vector<HomogeneousForm> forms;
  forms.reserve(kernel.size());
  for (RatVec& v : kernel)
    forms.push_back(
        HomogeneousForm(y.dimension(), degree, std::move(v)).canonical());
  return forms;
}

std::optional<int> min_containing_degree(const PointSet& y, int d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  for (int d = 1; d <= d_max; ++d)
    if (contained_in_degree(y, d)) return d;
  return std::nullopt;
}

GenericSetResult random_generic_set_stats(int dimension, int degree, int count,
                                          std::uint64_t seed) {
  const Int r = binomial(dimension + degree, degree);
  if (Int(count) < r)
    throw std::invalid_argument(
        "impossible: every set of fewer than binomial(N+d,d) points is "
        "contained in a degree-d hypersurface");
  SplitMix64 rng(seed);
  long cap = 10;
  int rejections = 0;
  while (true) {
    std::vector<ProjPoint> pts;
    while (pts.size() < static_cast<std::size_t>(count)) {
      RatVec coords(dimension + 1);
      bool all_zero = true;
      for (int i = 0; i <= dimension; ++i) {
        long c = rng.uniform(-cap, cap);
        coords[i] = c;
        if (c != 0) all_zero = false;
      }
      if (all_zero) continue;
      ProjPoint p(coords);
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(std::move(p));
    }
    PointSet set(dimension, std::move(pts));
    if (!contained_in_degree(set, degree))
      return GenericSetResult{std::move(set), rejections};
    ++rejections;
    if (rejections % 3 == 0) cap *= 2;
  }
}

PointSet random_generic_set(int dimension, int degree, int count,
                            std::uint64_t seed) {
  return random_generic_set_stats(dimension, degree, count, seed).points;
}

}  // namespace dynshaf
