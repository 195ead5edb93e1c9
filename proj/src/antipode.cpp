#include "wba/antipode.hpp"

#include "wba/separability.hpp"

namespace wba {

Matrix convolve(const WeakBialgebra& a, const Matrix& f, const Matrix& g) {
  const int n = a.dim();
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw std::invalid_argument("convolve: maps must be square of the algebra dimension");
  Matrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const Matrix& d = a.coproduct(k);
    // Σ Δ_k(i,j) f(e_i) g(e_j) = m((f D gᵀ))
    Matrix t = f * d * g.transpose();
    Vector v = zeroVector(n);
    const Algebra& alg = a.algebra();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sgn(t(i, j)) != 0) {
          const Vector& p = alg.product(i, j);
          for (int m = 0; m < n; ++m)
            if (sgn(p[m]) != 0) v[m] += t(i, j) * p[m];
        }
    out.setCol(k, v);
  }
  return out;
}

Matrix convolutionUnit(const WeakBialgebra& a) {
  const int n = a.dim();
  Matrix u(n, n);
  for (int k = 0; k < n; ++k) u.setCol(k, scale(a.counit()[k], a.one()));
  return u;
}

LinearSystem preAntipodeSystem(const WeakBialgebra& a) {
  const int n = a.dim();
  const Algebra& alg = a.algebra();
  Projectors pr = epsProjectors(a);
  LinearSystem sys{Matrix(2 * n * n, n * n), Vector(static_cast<size_t>(2 * n * n))};
  for (int k = 0; k < n; ++k) {
    const Matrix& d = a.coproduct(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& c = d(i, j);
        if (sgn(c) == 0) continue;
        for (int l = 0; l < n; ++l) {
          // e_i S(e_j) contributes s(l,j) e_i e_l
          const Vector& p1 = alg.product(i, l);
          for (int m = 0; m < n; ++m)
            if (sgn(p1[m]) != 0) sys.coeffs(k * n + m, l * n + j) += c * p1[m];
          // S(e_i) e_j contributes s(l,i) e_l e_j
          const Vector& p2 = alg.product(l, j);
          for (int m = 0; m < n; ++m)
            if (sgn(p2[m]) != 0) sys.coeffs(n * n + k * n + m, l * n + i) += c * p2[m];
        }
      }
    for (int m = 0; m < n; ++m) {
      sys.rhs[k * n + m] = pr(L, R)(m, k);
      sys.rhs[n * n + k * n + m] = pr(R, L)(m, k);
    }
  }
  return sys;
}

std::optional<AffineSolution> solvePreAntipodes(const WeakBialgebra& a) {
  LinearSystem sys = preAntipodeSystem(a);
  return solveAffine(sys.coeffs, sys.rhs);
}

bool isPreAntipode(const WeakBialgebra& a, const Matrix& s) {
  Projectors pr = epsProjectors(a);
  Matrix id = Matrix::identity(a.dim());
  return convolve(a, id, s) == pr(L, R) && convolve(a, s, id) == pr(R, L);
}

bool isAntipode(const WeakBialgebra& a, const Matrix& s) {
  Matrix id = Matrix::identity(a.dim());
  return isPreAntipode(a, s) && convolve(a, convolve(a, s, id), s) == s;
}

bool isHopfAntipode(const WeakBialgebra& a, const Matrix& s) {
  Matrix id = Matrix::identity(a.dim());
  Matrix u = convolutionUnit(a);
  return convolve(a, id, s) == u && convolve(a, s, id) == u;
}

bool isPrePode(const WeakBialgebra& a, const Matrix& s) { return isPreAntipode(a.opposite(), s); }
bool isPode(const WeakBialgebra& a, const Matrix& s) { return isAntipode(a.opposite(), s); }

bool isAntiMultiplicative(const WeakBialgebra& a, const Matrix& s) {
  const Algebra& alg = a.algebra();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (s * alg.product(i, j) != alg.mul(s.col(j), s.col(i))) return false;
  return true;
}

bool isAntiComultiplicative(const WeakBialgebra& a, const Matrix& s) {
  for (int k = 0; k < a.dim(); ++k)
    if (a.comul(s.col(k)) != s * a.coproduct(k).transpose() * s.transpose()) return false;
  return true;
}

bool isBialgebraAntiAutomorphism(const WeakBialgebra& a, const Matrix& s) {
  Vector epsS(static_cast<size_t>(a.dim()));
  for (int k = 0; k < a.dim(); ++k) epsS[k] = a.eps(s.col(k));
  return isAntiMultiplicative(a, s) && isAntiComultiplicative(a, s) && rank(s) == a.dim() && s * a.one() == a.one() &&
         epsS == a.counit();
}

std::string kindName(AntipodeStatus::Kind k) {
  switch (k) {
    case AntipodeStatus::Kind::None:
      return "none";
    case AntipodeStatus::Kind::PreAntipodeOnly:
      return "preAntipodeOnly";
    case AntipodeStatus::Kind::Antipode:
      return "antipode";
    case AntipodeStatus::Kind::HopfAntipode:
      return "hopfAntipode";
  }
  return "none";
}

bool isNormalPreRigidityMap(const WeakBialgebra& a, const Matrix& s) {
  if (!isAntiMultiplicative(a, s)) return false;
  Projectors pr = epsProjectors(a);
  Matrix id = Matrix::identity(a.dim());
  Matrix capL = convolve(a, id, s), capR = convolve(a, s, id);
  return capL * pr(L, R) == capL && capR * pr(R, L) == capR && capL * a.one() == a.one() && capR * a.one() == a.one();
}

namespace {

Matrix normalize(const WeakBialgebra& a, const Matrix& sp) {
  return convolve(a, convolve(a, sp, Matrix::identity(a.dim())), sp);
}

}  // namespace

AntipodeStatus solveAntipode(const WeakBialgebra& a) {
  AntipodeStatus st;
  const int n = a.dim();
  auto sol = solvePreAntipodes(a);
  if (!sol) return st;
  Matrix sp = Matrix::reshape(sol->particular, n, n);
  Matrix s = normalize(a, sp);
  if (!isAntipode(a, s)) {
    // cannot happen for a weak bialgebra; report the pre-antipode only
    st.kind = AntipodeStatus::Kind::PreAntipodeOnly;
    st.map = sp;
    return st;
  }
  st.kind = isHopfAntipode(a, s) ? AntipodeStatus::Kind::HopfAntipode : AntipodeStatus::Kind::Antipode;
  st.map = s;
  if (sol->kernel.dim() == 0) {
    st.uniquenessVerified = true;
  } else {
    Vector other = add(sol->particular, sol->kernel.vector(0));
    st.uniquenessVerified = normalize(a, Matrix::reshape(other, n, n)) == s;
  }
  st.antiMultiplicative = isAntiMultiplicative(a, s);
  st.antiComultiplicative = isAntiComultiplicative(a, s);
  auto inv = inverse(s);
  st.bijective = inv.has_value();
  st.podeInverse = inv && isPode(a, *inv);
  st.normalRigidity = isNormalPreRigidityMap(a, s);
  return st;
}

std::optional<Matrix> solvePode(const WeakBialgebra& a) {
  AntipodeStatus st = solveAntipode(a.opposite());
  if (st.kind == AntipodeStatus::Kind::None || st.kind == AntipodeStatus::Kind::PreAntipodeOnly) return std::nullopt;
  return st.map;
}

namespace {

bool epsMultiplicative(const WeakBialgebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.gram()(i, j) != a.counit()[i] * a.counit()[j]) return false;
  return true;
}

bool sameOn(const Matrix& f, const Matrix& g, const Subspace& s) {
  for (const auto& v : s.vectors())
    if (f * v != g * v) return false;
  return true;
}

// Relations a⁽¹⁾... of the BSz antipode axioms: S(a⁽¹⁾)a⁽²⁾⊗a⁽³⁾ = (1⊗a)Δ(1) and
// a⁽¹⁾⊗a⁽²⁾S(a⁽³⁾) = Δ(1)(a⊗1).
bool bszAntipodeRelations(const WeakBialgebra& a, const Matrix& s) {
  const int n = a.dim();
  Matrix id = Matrix::identity(n);
  Matrix left = convolve(a, s, id);  // a ↦ S(a⁽¹⁾)a⁽²⁾
  Matrix right = convolve(a, id, s);
  for (int k = 0; k < n; ++k) {
    Vector ek = a.basis(k);
    Matrix d = a.coproduct(k);
    Matrix lhs1(n, n), lhs2(n, n);
    // apply the convolution map to one leg of Δ(a), then the other leg is a⁽³⁾
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        Vector li = left.col(i), rj = right.col(j);
        for (int x = 0; x < n; ++x) {
          if (sgn(li[x]) != 0) lhs1(x, j) += d(i, j) * li[x];
          if (sgn(rj[x]) != 0) lhs2(i, x) += d(i, j) * rj[x];
        }
      }
    Matrix ua(n, n), au(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ua(x, y) = a.one()[x] * ek[y];
        au(x, y) = ek[x] * a.one()[y];
      }
    if (lhs1 != a.tensorMul(ua, a.deltaOne()) || lhs2 != a.tensorMul(a.deltaOne(), au)) return false;
  }
  return true;
}

}  // namespace

WeakHopfReport classifyWeakHopf(const WeakBialgebra& a) {
  WeakHopfReport rep;
  rep.axioms = decideAxioms(a);
  rep.antipode = solveAntipode(a);
  const bool hasS = rep.antipode.kind == AntipodeStatus::Kind::Antipode ||
                    rep.antipode.kind == AntipodeStatus::Kind::HopfAntipode;
  rep.weakHopf = rep.axioms.weakBialgebra && rep.axioms.bimonoidal && hasS;
  const bool deltaGroupLike = isGroupLike(a.deltaOne(), a.one());
  const bool epsMult = epsMultiplicative(a);
  rep.ordinaryHopf = rep.weakHopf && deltaGroupLike;
  TheoremReport& r = rep.checks;
  if (!hasS) return rep;
  const Matrix& S = *rep.antipode.map;
  r.add("weak-hopf-antipode-is-bialgebra-anti-automorphism", rep.weakHopf,
        [&] { return isBialgebraAntiAutomorphism(a, S); });
  r.add("weak-hopf-inverse-antipode-is-pode", rep.weakHopf, [&] { return rep.antipode.podeInverse; });
  r.add("weak-hopf-antipode-restricts-to-sigma-maps", rep.weakHopf, [&] {
    SigmaMaps sm = sigmaMaps(a);
    Distinguished d = distinguishedSubspaces(a);
    return sameOn(S, sm.SL, d.AL) && sameOn(S, sm.SR, d.AR);
  });
  r.add("weak-hopf-antipode-is-normal-rigidity-map", rep.axioms.bimonoidal,
        [&] { return rep.antipode.normalRigidity; });
  // equivalent characterizations of the pre-antipode S
  {
    const bool i = rep.axioms.comonoidal && rep.antipode.antiMultiplicative;
    const bool ii = rep.axioms.monoidal && rep.antipode.antiComultiplicative;
    const bool iii = rep.axioms.bimonoidal;
    r.add("comonoidal-anti-multiplicative-iff-monoidal-anti-comultiplicative-iff-bimonoidal", i == ii && ii == iii);
  }
  // equivalence chain for a bialgebra anti-morphism S
  const bool antiMorph = rep.antipode.antiMultiplicative && rep.antipode.antiComultiplicative;
  r.add("anti-morphism-antipode-equivalence-chain", antiMorph, [&] {
    Distinguished d = distinguishedSubspaces(a);
    const bool c1 = rep.weakHopf;
    const bool c2 = rep.axioms.bimonoidal;
    const bool c3 = rep.axioms.rightMonoidal && rep.axioms.rightComonoidal;
    const bool c4 = a.algebra().commute(d.AL, d.AR);
    const bool c5 = dual(a).algebra().commute(d.hatAL, d.hatAR);
    return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
  });
  r.add("weak-hopf-ordinary-iff-multiplicative-counit-iff-grouplike-unit-iff-hopf-antipode", rep.weakHopf, [&] {
    const bool hopfS = rep.antipode.kind == AntipodeStatus::Kind::HopfAntipode;
    return epsMult == deltaGroupLike && deltaGroupLike == hopfS;
  });
  return rep;
}

TheoremReport antipodeTheoremSuite(const WeakBialgebra& a) {
  TheoremReport r;
  const int n = a.dim();
  auto sol = solvePreAntipodes(a);
  const bool has = sol.has_value();
  Matrix id = Matrix::identity(n);
  Projectors pr = epsProjectors(a);
  r.add("counit-projectors-are-convolution-units-for-identity",
        convolve(a, pr(L, R), id) == id && convolve(a, id, pr(R, L)) == id);
  Matrix u = convolutionUnit(a);
  r.add("convolution-unit-is-two-sided", convolve(a, u, id) == id && convolve(a, id, u) == id);
  if (!has) {
    r.add("no-pre-antipode-means-no-antipode", solveAntipode(a).kind == AntipodeStatus::Kind::None);
    return r;
  }
  Matrix sp = Matrix::reshape(sol->particular, n, n);
  std::vector<Matrix> candidates{sp};
  for (int k = 0; k < std::min(2, sol->kernel.dim()); ++k)
    candidates.push_back(Matrix::reshape(add(sol->particular, sol->kernel.vector(k)), n, n));
  Matrix S = normalize(a, sp);
  r.add("pre-antipode-normalizes-to-antipode", isAntipode(a, S));
  r.add("pre-antipode-normalization-is-idempotent-on-projectors",
        convolve(a, pr(L, R), pr(L, R)) == pr(L, R) && convolve(a, pr(R, L), pr(R, L)) == pr(R, L));
  bool unique = true, sandwich = true;
  for (const auto& c : candidates) {
    unique = unique && normalize(a, c) == S;
    sandwich = sandwich && convolve(a, convolve(a, id, c), id) == id;
  }
  r.add("antipode-is-unique", unique);
  r.add("pre-antipode-sandwich-identity", sandwich);

  AxiomReport ax = decideAxioms(a);
  Distinguished d = distinguishedSubspaces(a);
  Distinguished dh = distinguishedSubspaces(dual(a));
  const Algebra& alg = a.algebra();
  const bool c1 = alg.commute(d.Ass[L][R], d.Ass[R][L]);
  const bool c2 = dual(a).algebra().commute(dh.Ass[L][R], dh.Ass[R][L]);
  bool lattice = true;
  std::string latticeDetail;
  for (size_t idx = 0; idx < candidates.size() + 1; ++idx) {
    const Matrix& s = idx < candidates.size() ? candidates[idx] : S;
    const bool am = isAntiMultiplicative(a, s), ac = isAntiComultiplicative(a, s);
    const bool anti = isAntipode(a, s);
    auto imp = [&](bool h, bool c, const char* name) {
      if (h && !c) {
        lattice = false;
        latticeDetail += std::string(name) + " ";
      }
    };
    imp(am && ax.rightMonoidal, c1 && anti, "1i");
    imp(am && c1, ax.rightMonoidal && anti, "1ii");
    imp(ax.rightMonoidal && c1 && anti, am, "1iii");
    imp(ac && ax.rightComonoidal, c2 && anti, "2i");
    imp(ac && c2, ax.rightComonoidal && anti, "2ii");
    imp(ax.rightComonoidal && c2 && anti, ac, "2iii");
    // anti-(co)multiplicative pre-antipodes
    imp(am, s * a.one() == a.one(), "unit");
    Vector epsS(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) epsS[k] = a.eps(s.col(k));
    imp(ac, epsS == a.counit(), "counit");
    imp((ax.rightMonoidal || ax.rightComonoidal) && (am || ac), anti, "right-axioms");
    imp(ax.monoidal && am, rank(s) == n, "bijective");
    imp(ax.comonoidal && ac, rank(s) == n, "cobijective");
    Matrix trip = convolve(a, convolve(a, id, s), id);
    imp(true, trip == id, "sandwich");
  }
  r.add("pre-antipode-implication-lattice", lattice, latticeDetail);
  r.add("monoidal-antipode-commuting-wedges-iff-equal-wedges", ax.monoidal, [&] {
    return c1 == (d.Ass[L][L] == d.Ass[L][R] && d.Ass[R][R] == d.Ass[R][L]);
  });
  r.add("almost-monoidal-antipode-preserves-counit-maps", !checkBszR(a).has_value(), [&] {
    EpsMaps e = epsSigma(a);
    Vector epsS(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) epsS[k] = a.eps(S.col(k));
    return epsS == a.counit() && e.epsL * S == e.epsL * pr(L, R) && e.epsR * S == e.epsR * pr(R, L);
  });
  {
    const bool am = isAntiMultiplicative(a, S);
    auto inv = inverse(S);
    r.add("invertible-anti-multiplicative-antipode-pode-criterion", am && inv.has_value(), [&] {
      return isPrePode(a, *inv) == (pr(L, R) == S * pr(R, R) && pr(R, L) == S * pr(L, L));
    });
    const bool ac = isAntiComultiplicative(a, S);
    r.add("invertible-anti-comultiplicative-antipode-pode-criterion", ac && inv.has_value(), [&] {
      return isPrePode(a, *inv) == (pr(L, R) == pr(L, L) * S && pr(R, L) == pr(R, R) * S);
    });
    r.add("anti-automorphic-pre-antipode-iff-inverse-pre-pode",
          inv.has_value() && ((ax.monoidal && am) || (ax.comonoidal && ac)),
          [&] { return isPreAntipode(a, S) == isPrePode(a, *inv); });
  }
  // BSz relations: the statement names right-comonoidality, its proof derives right-monoidality
  {
    bool monoidalForm = true, comonoidalForm = true;
    for (const auto& s : candidates) {
      const bool rel = bszAntipodeRelations(a, s);
      monoidalForm = monoidalForm && rel == ax.rightMonoidal;
      comonoidalForm = comonoidalForm && rel == ax.rightComonoidal;
    }
    r.add("bsz-antipode-relations-iff-right-monoidal-pre-antipode", monoidalForm,
          comonoidalForm ? "right-comonoidal variant also agrees" : "right-comonoidal variant disagrees");
  }
  return r;
}

YamanouchiVerdict yamanouchiCheck(const WeakBialgebra& a, const Matrix& s, const Vector& lambda) {
  YamanouchiVerdict v;
  const int n = a.dim();
  if (!isBialgebraAntiAutomorphism(a, s)) {
    v.failure = Witness{"antipode-candidate-not-bialgebra-anti-automorphism", {}};
    return v;
  }
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = dot(lambda, a.algebra().product(i, j));
  if (rank(gram) != n) {
    v.failure = Witness{"functional-degenerate", {}};
    return v;
  }
  v.preconditionsHold = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // a = e_x, b = e_y
      Vector lhs = zeroVector(n), rhs = zeroVector(n);
      const Matrix& da = a.coproduct(x);
      const Matrix& db = a.coproduct(y);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (sgn(da(i, j)) != 0) lhs[i] += da(i, j) * gram(y, j);
          if (sgn(db(i, j)) != 0) rhs = add(rhs, scale(db(i, j) * gram(j, x), s.col(i)));
        }
      if (lhs != rhs) {
        v.failure = Witness{"integral-identity", {x, y}};
        return v;
      }
    }
  v.hypothesisHolds = true;
  // l ⇀ λ = ε : x ↦ λ(x l); λ ↼ r = ε : x ↦ λ(r x)
  auto solveFor = [&](bool leftSide) -> std::optional<Vector> {
    Matrix sys(n, n);
    for (int x = 0; x < n; ++x)
      for (int k = 0; k < n; ++k) sys(x, k) = leftSide ? gram(x, k) : gram(k, x);
    auto sol = solveAffine(sys, a.counit());
    if (!sol) return std::nullopt;
    return sol->particular;
  };
  v.l = solveFor(true);
  v.r = solveFor(false);
  WeakHopfReport w = classifyWeakHopf(a);
  v.confirmed = w.weakHopf && w.antipode.map && *w.antipode.map == s;
  if (!v.confirmed) v.failure = Witness{"integral-criterion-conclusion", {}};
  return v;
}

}  // namespace wba
