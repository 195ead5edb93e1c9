#include "wba/weak_bialgebra.hpp"

#include <stdexcept>

namespace wba {

namespace {

std::vector<std::pair<int, int>> nonzeros(const Matrix& m) {
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) nz.emplace_back(i, j);
  return nz;
}

std::vector<int> support(const Vector& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.push_back(static_cast<int>(i));
  return s;
}

std::string toggleHat(const std::string& s) {
  if (!s.empty() && s.back() == '^') return s.substr(0, s.size() - 1);
  return s + "^";
}

std::optional<Witness> firstMismatch(const std::string& law, int prefix, const Matrix& x, const Matrix& y) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return Witness{law, {prefix, i, j}};
  return std::nullopt;
}

}  // namespace

WeakBialgebra::WeakBialgebra(Algebra algebra, std::vector<Matrix> coproducts, Vector counit)
    : alg_(std::move(algebra)), coproducts_(std::move(coproducts)), counit_(std::move(counit)) {
  const int n = alg_.dim();
  if (static_cast<int>(coproducts_.size()) != n) throw std::invalid_argument("coproduct count differs from dim");
  for (const auto& c : coproducts_)
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("coproduct matrix has wrong shape");
  if (static_cast<int>(counit_.size()) != n) throw std::invalid_argument("counit has wrong length");
  deltaOne_ = comul(alg_.unit());
  gram_ = Matrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gram_(a, b) = dot(counit_, alg_.product(a, b));
}

Matrix WeakBialgebra::comul(const Vector& a) const {
  Matrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k)
    if (sgn(a[k]) != 0) m += a[k] * coproducts_[k];
  return m;
}

Matrix WeakBialgebra::tensorMul(const Matrix& x, const Matrix& y) const {
  const int n = dim();
  Matrix r(n, n);
  auto nx = nonzeros(x), ny = nonzeros(y);
  Scalar c, d;
  for (auto [i, j] : nx)
    for (auto [k, l] : ny) {
      const Vector& p = alg_.product(i, k);
      const Vector& q = alg_.product(j, l);
      auto sp = support(p);
      if (sp.empty()) continue;
      auto sq = support(q);
      c = x(i, j) * y(k, l);
      for (int s : sp)
        for (int t : sq) {
          d = c * p[s] * q[t];
          r(s, t) += d;
        }
    }
  return r;
}

Tensor WeakBialgebra::tensorMul(const Tensor& x, const Tensor& y) const {
  if (x.legs() != y.legs()) throw std::invalid_argument("tensorMul: leg count mismatch");
  const int k = x.legs();
  Tensor r(k);
  Tensor::Key key(static_cast<size_t>(k));
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<std::vector<int>> supp(static_cast<size_t>(k));
      bool zero = false;
      for (int l = 0; l < k; ++l) {
        supp[l] = support(alg_.product(kx[l], ky[l]));
        if (supp[l].empty()) zero = true;
      }
      if (zero) continue;
      // odometer over the supports
      std::vector<size_t> pos(static_cast<size_t>(k), 0);
      while (true) {
        Scalar c = cx * cy;
        for (int l = 0; l < k; ++l) {
          key[l] = supp[l][pos[l]];
          c *= alg_.product(kx[l], ky[l])[key[l]];
        }
        r.add(key, c);
        int l = k - 1;
        while (l >= 0 && ++pos[l] == supp[l].size()) pos[l--] = 0;
        if (l < 0) break;
      }
    }
  return r;
}

Tensor WeakBialgebra::coproductOnLeg(const Tensor& t, int leg) const {
  Tensor r(t.legs() + 1);
  for (const auto& [k, c] : t.terms()) {
    const Matrix& d = coproducts_[k[leg]];
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        if (sgn(d(i, j)) == 0) continue;
        Tensor::Key kk(k.begin(), k.begin() + leg);
        kk.push_back(i);
        kk.push_back(j);
        kk.insert(kk.end(), k.begin() + leg + 1, k.end());
        r.add(kk, c * d(i, j));
      }
  }
  return r;
}

Tensor WeakBialgebra::iteratedCoproduct(const Vector& x, int legs) const {
  Tensor t = Tensor::fromVector(x);
  for (int l = 1; l < legs; ++l) t = coproductOnLeg(t, l - 1);
  return t;
}

WeakBialgebra WeakBialgebra::opposite() const { return WeakBialgebra(alg_.opposite(), coproducts_, counit_); }

WeakBialgebra WeakBialgebra::coopposite() const {
  std::vector<Matrix> cop;
  for (const auto& c : coproducts_) cop.push_back(c.transpose());
  return WeakBialgebra(alg_, cop, counit_);
}

WeakBialgebra WeakBialgebra::changeBasis(const Matrix& t) const {
  auto tinv = inverse(t);
  if (!tinv) throw std::invalid_argument("changeBasis: matrix not invertible");
  const int n = dim();
  std::vector<Vector> cols;
  for (int j = 0; j < n; ++j) cols.push_back(t.col(j));
  std::vector<Vector> prods;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) prods.push_back(*tinv * mul(cols[a], cols[b]));
  std::vector<std::string> labels;
  for (const auto& l : alg_.labels()) labels.push_back(l + "'");
  Algebra alg(labels, prods, *tinv * alg_.unit());
  std::vector<Matrix> cop;
  Matrix tinvT = tinv->transpose();
  for (int k = 0; k < n; ++k) cop.push_back(*tinv * comul(cols[k]) * tinvT);
  Vector eps(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) eps[j] = dot(counit_, cols[j]);
  return WeakBialgebra(alg, cop, eps);
}

bool WeakBialgebra::operator==(const WeakBialgebra& o) const {
  if (dim() != o.dim() || labels() != o.labels() || one() != o.one() || counit_ != o.counit_) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (alg_.product(i, j) != o.alg_.product(i, j)) return false;
  return coproducts_ == o.coproducts_;
}

ValidationReport validate(const WeakBialgebra& a, int witnessLimit) {
  ValidationReport rep;
  const int n = a.dim();
  const Algebra& alg = a.algebra();
  auto note = [&](Witness w, int& count) {
    rep.ok = false;
    if (count++ < witnessLimit) rep.violations.push_back(std::move(w));
  };
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (alg.right(k) * alg.product(i, j) != alg.left(i) * alg.product(j, k))
          note({"associativity", {i, j, k}}, c);
  c = 0;
  for (int i = 0; i < n; ++i) {
    Vector e = a.basis(i);
    if (a.mul(a.one(), e) != e || a.mul(e, a.one()) != e) note({"unit", {i}}, c);
  }
  c = 0;
  for (int k = 0; k < n; ++k) {
    Tensor d = Tensor::fromMatrix(a.coproduct(k));
    auto diff = a.coproductOnLeg(d, 0).firstDifference(a.coproductOnLeg(d, 1));
    if (diff) {
      std::vector<int> w{k};
      w.insert(w.end(), diff->begin(), diff->end());
      note({"coassociativity", w}, c);
    }
  }
  c = 0;
  for (int k = 0; k < n; ++k) {
    const Matrix& d = a.coproduct(k);
    Vector e = a.basis(k);
    Vector left = d.transpose() * a.counit();
    Vector right = d * a.counit();
    for (int j = 0; j < n; ++j)
      if (left[j] != e[j] || right[j] != e[j]) {
        note({"counit", {k, j}}, c);
        break;
      }
  }
  c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto w = firstMismatch("multiplicativity", 0, a.comul(alg.product(i, j)),
                             a.tensorMul(a.coproduct(i), a.coproduct(j)));
      if (w) note({"multiplicativity", {i, j, w->indices[1], w->indices[2]}}, c);
    }
  return rep;
}

WeakBialgebra dual(const WeakBialgebra& a) {
  const int n = a.dim();
  std::vector<Vector> prods;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector v(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) v[k] = a.comult(k, i, j);
      prods.push_back(std::move(v));
    }
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(toggleHat(l));
  Algebra alg(labels, prods, a.counit());
  std::vector<Matrix> cop;
  for (int k = 0; k < n; ++k) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = a.algebra().mult(i, j, k);
    cop.push_back(std::move(m));
  }
  return WeakBialgebra(alg, cop, a.one());
}

WeakBialgebra directSum(const WeakBialgebra& a, const WeakBialgebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  auto embed = [&](const Vector& v, int off) {
    Vector r(static_cast<size_t>(n));
    for (size_t i = 0; i < v.size(); ++i) r[off + i] = v[i];
    return r;
  };
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("A." + l);
  for (const auto& l : b.labels()) labels.push_back("B." + l);
  std::vector<Vector> prods;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < na && j < na)
        prods.push_back(embed(a.algebra().product(i, j), 0));
      else if (i >= na && j >= na)
        prods.push_back(embed(b.algebra().product(i - na, j - na), na));
      else
        prods.push_back(zeroVector(n));
    }
  Vector one = add(embed(a.one(), 0), embed(b.one(), na));
  std::vector<Matrix> cop;
  for (int k = 0; k < n; ++k) {
    Matrix m(n, n);
    const bool first = k < na;
    const Matrix& d = first ? a.coproduct(k) : b.coproduct(k - na);
    const int off = first ? 0 : na;
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) m(off + i, off + j) = d(i, j);
    cop.push_back(std::move(m));
  }
  Vector eps = add(embed(a.counit(), 0), embed(b.counit(), na));
  return WeakBialgebra(Algebra(labels, prods, one), cop, eps);
}

Vector actLeft(const WeakBialgebra& A, const Vector& a, const Vector& phi) {
  return A.rightMul(a).transpose() * phi;
}

Vector actRight(const WeakBialgebra& A, const Vector& phi, const Vector& a) {
  return A.leftMul(a).transpose() * phi;
}

Vector hitLeft(const WeakBialgebra& A, const Vector& phi, const Vector& a) { return A.comul(a) * phi; }

Vector hitRight(const WeakBialgebra& A, const Vector& a, const Vector& phi) {
  return A.comul(a).transpose() * phi;
}

EpsMaps epsSigma(const WeakBialgebra& a) {
  return EpsMaps{a.gram().transpose(), a.gram(), a.deltaOne().transpose(), a.deltaOne()};
}

Projectors epsProjectors(const WeakBialgebra& a) {
  EpsMaps e = epsSigma(a);
  Projectors p;
  p.proj[L][L] = e.hatL * e.epsL;
  p.proj[L][R] = e.hatL * e.epsR;
  p.proj[R][L] = e.hatR * e.epsL;
  p.proj[R][R] = e.hatR * e.epsR;
  return p;
}

Distinguished distinguishedSubspaces(const WeakBialgebra& a) {
  EpsMaps e = epsSigma(a);
  Projectors p = epsProjectors(a);
  Distinguished d;
  d.AL = Subspace::image(e.hatL);
  d.AR = Subspace::image(e.hatR);
  d.hatAL = Subspace::image(e.epsL);
  d.hatAR = Subspace::image(e.epsR);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) d.Ass[s][t] = Subspace::image(p.proj[s][t]);
  return d;
}

Matrix fixedPointCondition(const WeakBialgebra& a, Side s, Side t) {
  const int n = a.dim();
  const Matrix& d1 = a.deltaOne();
  Matrix cond(n * n, n);
  for (int k = 0; k < n; ++k) {
    const Matrix& lk = a.algebra().left(k);
    const Matrix& rk = a.algebra().right(k);
    Matrix target;
    if (s == L && t == L) target = lk * d1;
    if (s == L && t == R) target = rk * d1;
    if (s == R && t == L) target = d1 * lk.transpose();
    if (s == R && t == R) target = d1 * rk.transpose();
    cond.setCol(k, (a.coproduct(k) - target).flatten());
  }
  return cond;
}

FixedPoints fixedPointSubalgebras(const WeakBialgebra& a) {
  FixedPoints f;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      f.N[s][t] = Subspace::kernel(fixedPointCondition(a, static_cast<Side>(s), static_cast<Side>(t)));
  return f;
}

namespace {

std::optional<Witness> checkMonoidal(const WeakBialgebra& a, bool left) {
  const int n = a.dim();
  const Matrix& g = a.gram();
  std::vector<Matrix> lhs, rhs;
  for (int b = 0; b < n; ++b) {
    lhs.push_back(a.algebra().right(b).transpose() * g);
    const Matrix& d = a.coproduct(b);
    rhs.push_back(g * (left ? d : d.transpose()) * g);
  }
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lhs[b](x, c) != rhs[b](x, c)) return Witness{left ? "left-monoidal" : "right-monoidal", {x, b, c}};
  return std::nullopt;
}

std::optional<Witness> checkComonoidal(const WeakBialgebra& a, bool left) {
  const int n = a.dim();
  const Matrix& d1 = a.deltaOne();
  Tensor lhs(3);
  auto nz = nonzeros(d1);
  for (auto [i, j] : nz)
    for (auto [k, l] : nz) {
      Scalar c = d1(i, j) * d1(k, l);
      // left: e_i ⊗ e_j e_k ⊗ e_l ; right: e_k ⊗ e_i e_l ⊗ e_j
      const Vector& p = left ? a.algebra().product(j, k) : a.algebra().product(i, l);
      for (int m = 0; m < n; ++m) {
        if (sgn(p[m]) == 0) continue;
        if (left)
          lhs.add({i, m, l}, c * p[m]);
        else
          lhs.add({k, m, j}, c * p[m]);
      }
    }
  Tensor rhs = a.iteratedCoproduct(a.one(), 3);
  auto diff = lhs.firstDifference(rhs);
  if (diff) return Witness{left ? "left-comonoidal" : "right-comonoidal", *diff};
  return std::nullopt;
}

std::optional<Witness> checkBsz(const WeakBialgebra& a, bool left) {
  const Matrix& g = a.gram();
  Matrix rhs = g * (left ? a.deltaOne() : a.deltaOne().transpose()) * g;
  auto w = firstMismatch(left ? "bsz-l" : "bsz-r", 0, g, rhs);
  if (w) w->indices.erase(w->indices.begin());
  return w;
}

bool allEqual(const std::vector<Matrix>& x, const std::vector<Matrix>& y) { return x == y; }

}  // namespace

std::optional<Witness> checkLeftMonoidal(const WeakBialgebra& a) { return checkMonoidal(a, true); }
std::optional<Witness> checkRightMonoidal(const WeakBialgebra& a) { return checkMonoidal(a, false); }
std::optional<Witness> checkLeftComonoidal(const WeakBialgebra& a) { return checkComonoidal(a, true); }
std::optional<Witness> checkRightComonoidal(const WeakBialgebra& a) { return checkComonoidal(a, false); }
std::optional<Witness> checkBszL(const WeakBialgebra& a) { return checkBsz(a, true); }
std::optional<Witness> checkBszR(const WeakBialgebra& a) { return checkBsz(a, false); }

bool isMinimal(const WeakBialgebra& a) {
  if (checkLeftComonoidal(a) || checkRightComonoidal(a)) return false;
  Distinguished d = distinguishedSubspaces(a);
  return a.algebra().productSpan(d.AL, d.AR).dim() == a.dim();
}

std::array<bool, 6> monoidalityForms(const WeakBialgebra& a, Side side) {
  const int n = a.dim();
  const bool left = side == L;
  WeakBialgebra b = dual(a);
  Projectors pa = epsProjectors(a), pb = epsProjectors(b);
  EpsMaps e = epsSigma(a);
  const Matrix& d1 = a.deltaOne();
  const Matrix& g = a.gram();
  std::vector<Matrix> x0, y0, x1, y1, x2, y2, x3, y3, x4, y4, x5, y5;
  for (int k = 0; k < n; ++k) {
    const Matrix& da = a.coproduct(k);
    const Matrix& db = b.coproduct(k);
    const Matrix& la = a.algebra().left(k);
    const Matrix& ra = a.algebra().right(k);
    const Matrix& lb = b.algebra().left(k);
    const Matrix& rb = b.algebra().right(k);
    if (left) {
      x0.push_back(db * pb(L, L).transpose());
      y0.push_back(lb * b.deltaOne());
      x1.push_back(da * e.epsL.transpose());
      y1.push_back(la * d1 * e.epsL.transpose());
      x2.push_back(la * pa(R, R));
      y2.push_back(da * g);
      x3.push_back(pb(R, R) * db);
      y3.push_back(b.deltaOne() * rb.transpose());
      x4.push_back(e.epsR * da);
      y4.push_back(e.epsR * d1 * ra.transpose());
      x5.push_back(ra * pa(L, L));
      y5.push_back(da.transpose() * g.transpose());
    } else {
      x0.push_back(db * pb(L, R).transpose());
      y0.push_back(rb * b.deltaOne());
      x1.push_back(e.epsL * da);
      y1.push_back(e.epsL * d1 * la.transpose());
      x2.push_back(la * pa(L, R));
      y2.push_back(da.transpose() * g);
      x3.push_back(pb(R, L) * db);
      y3.push_back(b.deltaOne() * lb.transpose());
      x4.push_back(da * e.epsR.transpose());
      y4.push_back(ra * d1 * e.epsR.transpose());
      x5.push_back(ra * pa(R, L));
      y5.push_back(da * g.transpose());
    }
  }
  return {allEqual(x0, y0), allEqual(x1, y1), allEqual(x2, y2),
          allEqual(x3, y3), allEqual(x4, y4), allEqual(x5, y5)};
}

bool tensorIn(const Matrix& x, const Subspace& first, const Subspace& second) {
  for (int j = 0; j < x.cols(); ++j)
    if (!first.contains(x.col(j))) return false;
  for (int i = 0; i < x.rows(); ++i)
    if (!second.contains(x.row(i))) return false;
  return true;
}

bool subspaceCommute(const WeakBialgebra& a, const Subspace& x, const Subspace& y) {
  return a.algebra().commute(x, y);
}

bool isGroupLike(const Matrix& deltaOne, const Vector& one) {
  Matrix oo(static_cast<int>(one.size()), static_cast<int>(one.size()));
  for (size_t i = 0; i < one.size(); ++i)
    for (size_t j = 0; j < one.size(); ++j) oo(static_cast<int>(i), static_cast<int>(j)) = one[i] * one[j];
  return deltaOne == oo;
}

AxiomReport decideAxioms(const WeakBialgebra& a) {
  AxiomReport r;
  r.weakBialgebra = validate(a).ok;
  auto record = [&](const std::optional<Witness>& w, bool& flag) {
    flag = !w.has_value();
    if (w) r.witnesses.push_back(*w);
  };
  record(checkLeftMonoidal(a), r.leftMonoidal);
  record(checkRightMonoidal(a), r.rightMonoidal);
  record(checkLeftComonoidal(a), r.leftComonoidal);
  record(checkRightComonoidal(a), r.rightComonoidal);
  record(checkBszL(a), r.bszL);
  record(checkBszR(a), r.bszR);
  r.monoidal = r.leftMonoidal && r.rightMonoidal;
  r.comonoidal = r.leftComonoidal && r.rightComonoidal;
  r.bimonoidal = r.monoidal && r.comonoidal;
  Distinguished d = distinguishedSubspaces(a);
  r.minimal = r.comonoidal && a.algebra().productSpan(d.AL, d.AR).dim() == a.dim();
  r.cominimal = isMinimal(dual(a));
  r.dimAL = d.AL.dim();
  r.dimAR = d.AR.dim();
  r.dimALcapAR = d.AL.intersect(d.AR).dim();
  FixedPoints f = fixedPointSubalgebras(a);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      r.dimsAssp[s][t] = d.Ass[s][t].dim();
      r.dimsN[s][t] = f.N[s][t].dim();
    }
  return r;
}

}  // namespace wba
