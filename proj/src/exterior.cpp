#include "skewforms/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace skewforms {

namespace {

struct IndexTables {
  std::array<std::array<int, kDim>, kDim> pair{};
  std::array<std::pair<std::size_t, std::size_t>, kPairs> pairs{};
  std::array<std::array<std::size_t, 4>, kQuads> quads{};
  IndexTables() {
    std::size_t k = 0;
    for (auto& r : pair) r.fill(-1);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i + 1; j < kDim; ++j) {
        pair[i][j] = static_cast<int>(k);
        pairs[k++] = {i, j};
      }
    std::size_t q = 0;
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = a + 1; b < kDim; ++b)
        for (std::size_t c = b + 1; c < kDim; ++c)
          for (std::size_t d = c + 1; d < kDim; ++d) quads[q++] = {a, b, c, d};
  }
};

const IndexTables& tables() {
  static const IndexTables t;
  return t;
}

// Sign of the permutation sorting the given distinct indices.
int permutation_sign(std::vector<std::size_t> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

// Complement of a sorted quadruple in {0..5}.
std::pair<std::size_t, std::size_t> complement(const std::array<std::size_t, 4>& q) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < kDim; ++i)
    if (std::find(q.begin(), q.end(), i) == q.end()) rest.push_back(i);
  return {rest[0], rest[1]};
}

template <class T>
FourVector wedge_coefficients(const T& a, const T& b) {
  // (a^b)_ijkl summed over the three ways to split ijkl into two pairs,
  // counted in both orders.
  FourVector out;
  for (std::size_t q = 0; q < kQuads; ++q) {
    auto [i, j, k, l] = tables().quads[q];
    auto A = [&](std::size_t x, std::size_t y) { return a[pair_index(x, y)]; };
    auto B = [&](std::size_t x, std::size_t y) { return b[pair_index(x, y)]; };
    out.c[q] = A(i, j) * B(k, l) - A(i, k) * B(j, l) + A(i, l) * B(j, k) + A(k, l) * B(i, j) -
               A(j, l) * B(i, k) + A(j, k) * B(i, l);
  }
  return out;
}

}  // namespace

std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i >= kDim || j >= kDim || i >= j) throw std::out_of_range("pair index requires i < j < 6");
  return static_cast<std::size_t>(tables().pair[i][j]);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t k) { return tables().pairs.at(k); }

std::size_t quad_index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  std::array<std::size_t, 4> key{i, j, k, l};
  const auto& qs = tables().quads;
  for (std::size_t q = 0; q < kQuads; ++q)
    if (qs[q] == key) return q;
  throw std::out_of_range("quadruple must be strictly increasing below 6");
}

std::array<std::size_t, 4> quad_at(std::size_t q) { return tables().quads.at(q); }

AlternatingForm AlternatingForm::basis(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("e_i^e_i vanishes");
  AlternatingForm f;
  if (i < j) f.c_[pair_index(i, j)] = 1;
  else f.c_[pair_index(j, i)] = -1;
  return f;
}

AlternatingForm AlternatingForm::from_vector(const QVec& v) {
  if (v.size() != kPairs) throw std::invalid_argument("form vector must have 15 entries");
  AlternatingForm f;
  std::copy(v.begin(), v.end(), f.c_.begin());
  return f;
}

AlternatingForm AlternatingForm::from_matrix(const QMatrix& m) {
  if (m.rows() != kDim || m.cols() != kDim) throw std::invalid_argument("form matrix must be 6x6");
  AlternatingForm f;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (!m(i, i).is_zero()) throw std::invalid_argument("matrix is not skew");
    for (std::size_t j = i + 1; j < kDim; ++j) {
      if (m(i, j) != -m(j, i)) throw std::invalid_argument("matrix is not skew");
      f.c_[pair_index(i, j)] = m(i, j);
    }
  }
  return f;
}

Rational AlternatingForm::coeff(std::size_t i, std::size_t j) const {
  if (i == j) return Rational(0);
  return i < j ? c_[pair_index(i, j)] : -c_[pair_index(j, i)];
}

QMatrix AlternatingForm::matrix() const {
  QMatrix m(kDim, kDim);
  for (std::size_t k = 0; k < kPairs; ++k) {
    auto [i, j] = pair_at(k);
    m(i, j) = c_[k];
    m(j, i) = -c_[k];
  }
  return m;
}

bool AlternatingForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& o) {
  for (std::size_t k = 0; k < kPairs; ++k) c_[k] += o.c_[k];
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& o) {
  for (std::size_t k = 0; k < kPairs; ++k) c_[k] -= o.c_[k];
  return *this;
}

AlternatingForm& AlternatingForm::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string AlternatingForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (c_[k].is_zero()) continue;
    auto [i, j] = pair_at(k);
    Rational mag = c_[k].sign() < 0 ? -c_[k] : c_[k];
    if (first) os << (c_[k].sign() < 0 ? "-" : "");
    else os << (c_[k].sign() < 0 ? " - " : " + ");
    first = false;
    if (!mag.is_one()) os << mag << '*';
    os << 'e' << i + 1 << '^' << 'e' << j + 1;
  }
  return first ? "0" : os.str();
}

BiVector BiVector::basis(std::size_t i, std::size_t j) {
  BiVector b;
  if (i < j) b.c[pair_index(i, j)] = 1;
  else b.c[pair_index(j, i)] = -1;
  return b;
}

bool BiVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

bool FourVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational pairing(const BiVector& b, const AlternatingForm& w) {
  Rational acc(0);
  for (std::size_t k = 0; k < kPairs; ++k)
    if (!b.c[k].is_zero()) acc += b.c[k] * w[k];
  return acc;
}

Rational evaluate(const AlternatingForm& w, const QVec& u, const QVec& v) {
  Rational acc(0);
  for (std::size_t k = 0; k < kPairs; ++k) {
    if (w[k].is_zero()) continue;
    auto [i, j] = pair_at(k);
    acc += w[k] * (u[i] * v[j] - u[j] * v[i]);
  }
  return acc;
}

AlternatingForm wedge(const QVec& x, const QVec& y) {
  AlternatingForm f;
  for (std::size_t k = 0; k < kPairs; ++k) {
    auto [i, j] = pair_at(k);
    f[k] = x[i] * y[j] - x[j] * y[i];
  }
  return f;
}

BiVector wedge_vectors(const QVec& u, const QVec& v) {
  BiVector b;
  for (std::size_t k = 0; k < kPairs; ++k) {
    auto [i, j] = pair_at(k);
    b.c[k] = u[i] * v[j] - u[j] * v[i];
  }
  return b;
}

FourVector wedge(const AlternatingForm& a, const AlternatingForm& b) {
  return wedge_coefficients(a.coefficients(), b.coefficients());
}

FourVector wedge(const BiVector& a, const BiVector& b) { return wedge_coefficients(a.c, b.c); }

Subspace Subspace::span(Ambient ambient, const std::vector<QVec>& rows) {
  Subspace s;
  s.ambient_ = ambient;
  if (rows.empty()) return s;
  QMatrix m = QMatrix::from_rows(rows, kDim);
  rref_in_place(m);
  s.basis_ = m.row_list();
  return s;
}

Subspace Subspace::whole(Ambient ambient) {
  return span(ambient, QMatrix::identity(kDim).row_list());
}

bool Subspace::contains(const QVec& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return rank(QMatrix::from_rows(rows, kDim)) == basis_.size();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  return (*this + o).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("sum of subspaces of different ambients");
  auto rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, rows);
}

Subspace Subspace::annihilator() const {
  Ambient dual = ambient_ == Ambient::W ? Ambient::WDual : Ambient::W;
  if (basis_.empty()) return whole(dual);
  return span(dual, nullspace(QMatrix::from_rows(basis_, kDim)));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("intersection of subspaces of different ambients");
  // (A cap B) = ann(ann A + ann B)
  return (annihilator() + o.annihilator()).annihilator();
}

Subspace Subspace::image(const QMatrix& t) const {
  std::vector<QVec> rows;
  for (const auto& v : basis_) rows.push_back(t * v);
  return span(ambient_, rows);
}

GroupElement::GroupElement(QMatrix m) : m_(std::move(m)) {
  if (m_.rows() != kDim || m_.cols() != kDim) throw std::invalid_argument("group element must be 6x6");
  if (determinant(m_).is_zero()) throw std::domain_error("group element must be invertible");
}

Rational GroupElement::det() const { return determinant(m_); }

GroupElement GroupElement::inverse() const { return GroupElement(skewforms::inverse(m_)); }

int form_rank(const AlternatingForm& w) { return static_cast<int>(rank(w.matrix())); }

Subspace form_kernel(const AlternatingForm& w) {
  return Subspace::span(Subspace::Ambient::W, nullspace(w.matrix()));
}

Rational pfaffian(const AlternatingForm& w) {
  std::array<std::array<Rational, kDim>, kDim> a;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) a[i][j] = w.coeff(i, j);
  return pfaffian_of(a, Rational(0), Rational(1));
}

FourVector wedge_square(const AlternatingForm& w) { return wedge(w, w); }

BiVector hodge(const FourVector& f) {
  BiVector b;
  for (std::size_t q = 0; q < kQuads; ++q) {
    if (f.c[q].is_zero()) continue;
    auto quad = quad_at(q);
    auto [a, bb] = complement(quad);
    int sign = permutation_sign({quad[0], quad[1], quad[2], quad[3], a, bb});
    b.c[pair_index(a, bb)] = sign > 0 ? f.c[q] : -f.c[q];
  }
  return b;
}

BiVector gauss_map(const AlternatingForm& w) {
  int r = form_rank(w);
  if (r != 4) throw RankError("Gauss map needs a rank-4 form, got rank " + std::to_string(r));
  return hodge(wedge_square(w));
}

AlternatingForm act(const GroupElement& g, const AlternatingForm& w) {
  const QMatrix& m = g.matrix();
  return AlternatingForm::from_matrix(m * w.matrix() * m.transpose());
}

Subspace transport(const GroupElement& g, const Subspace& u) {
  if (u.ambient() == Subspace::Ambient::WDual) return u.image(g.matrix());
  return u.image(skewforms::inverse(g.matrix()).transpose());
}

bool TangentSpace::contains(const AlternatingForm& theta) const {
  const auto& b = perp_.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!evaluate(theta, b[i], b[j]).is_zero()) return false;
  return true;
}

TangentSpace gr_tangent_space(const AlternatingForm& w) {
  int r = form_rank(w);
  if (r != 2) throw RankError("tangent space needs a rank-2 form, got rank " + std::to_string(r));
  return TangentSpace(form_kernel(w));
}

std::pair<QVec, QVec> decompose_rank2(const AlternatingForm& w) {
  if (form_rank(w) != 2) throw RankError("decomposition needs a rank-2 form");
  // The row space of M is the 2-plane; pick two independent rows and rescale.
  QMatrix m = w.matrix();
  std::size_t a = 0;
  while (is_zero_vector(m.row(a))) ++a;
  QVec x = m.row(a);
  std::size_t b = a + 1;
  for (; b < kDim; ++b)
    if (rank(QMatrix::from_rows({x, m.row(b)}, kDim)) == 2) break;
  QVec y = m.row(b);
  AlternatingForm xy = wedge(x, y);
  // w = c * (x^y) for a scalar c; fold it into y.
  std::size_t k = 0;
  while (xy[k].is_zero()) ++k;
  Rational c = w[k] / xy[k];
  for (auto& t : y) t *= c;
  return {x, y};
}

namespace {
template <class Arr>
bool proportional(const Arr& a, const Arr& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  if (k == a.size()) {
    for (const auto& x : b)
      if (!x.is_zero()) return false;
    return true;
  }
  if (b[k].is_zero()) return false;
  Rational r = b[k] / a[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != a[i] * r) return false;
  return true;
}
}  // namespace

bool projectively_equal(const AlternatingForm& a, const AlternatingForm& b) {
  return proportional(a.coefficients(), b.coefficients());
}

bool projectively_equal(const BiVector& a, const BiVector& b) { return proportional(a.c, b.c); }

}  // namespace skewforms
