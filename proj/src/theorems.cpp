#include "wba/theorems.hpp"

namespace wba {

void TheoremReport::add(std::string name, bool hypotheses, const std::function<bool()>& conclusion,
                        std::string detail) {
  TheoremCheck c{std::move(name), hypotheses, true, std::move(detail)};
  if (hypotheses) c.conclusionHolds = conclusion();
  checks_.push_back(std::move(c));
}

void TheoremReport::add(std::string name, bool holds, std::string detail) {
  checks_.push_back(TheoremCheck{std::move(name), true, holds, std::move(detail)});
}

void TheoremReport::append(const TheoremReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::vector<TheoremCheck> TheoremReport::violations() const {
  std::vector<TheoremCheck> v;
  for (const auto& c : checks_)
    if (c.hypothesesMet && !c.conclusionHolds) v.push_back(c);
  return v;
}

int TheoremReport::applicable() const {
  int k = 0;
  for (const auto& c : checks_) k += c.hypothesesMet ? 1 : 0;
  return k;
}

namespace {

Side other(Side s) { return s == L ? R : L; }
constexpr Side kSides[2] = {L, R};

struct Context {
  const WeakBialgebra& A;
  WeakBialgebra B;
  int n;
  EpsMaps e;
  Projectors p, pb;
  Distinguished d, db;
  FixedPoints f, fb;
  bool lm, rm, lc, rc, bszL, bszR;

  explicit Context(const WeakBialgebra& a)
      : A(a),
        B(dual(a)),
        n(a.dim()),
        e(epsSigma(a)),
        p(epsProjectors(a)),
        pb(epsProjectors(B)),
        d(distinguishedSubspaces(a)),
        db(distinguishedSubspaces(B)),
        f(fixedPointSubalgebras(a)),
        fb(fixedPointSubalgebras(B)),
        lm(!checkLeftMonoidal(a)),
        rm(!checkRightMonoidal(a)),
        lc(!checkLeftComonoidal(a)),
        rc(!checkRightComonoidal(a)),
        bszL(!checkBszL(a)),
        bszR(!checkBszR(a)) {}

  const Matrix& eps(Side s) const { return s == L ? e.epsL : e.epsR; }
  const Matrix& hat(Side s) const { return s == L ? e.hatL : e.hatR; }
  Vector mul(const Vector& x, const Vector& y) const { return A.mul(x, y); }
  Vector basis(int i) const { return A.basis(i); }
};

// a⁽²⁾ε_LL(ba⁽¹⁾) = a⁽²⁾ε(ba⁽¹⁾) and its three siblings.
bool projectorAbsorption(const Context& c) {
  const int n = c.n;
  const Matrix& g = c.A.gram();
  for (int a = 0; a < n; ++a) {
    const Matrix& da = c.A.coproduct(a);
    for (int b = 0; b < n; ++b) {
      Vector l0 = zeroVector(n), r0 = zeroVector(n), l1 = zeroVector(n), r1 = zeroVector(n);
      Vector l2 = zeroVector(n), r2 = zeroVector(n), l3 = zeroVector(n), r3 = zeroVector(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (sgn(da(i, j)) == 0) continue;
          const Scalar& w = da(i, j);
          Vector ei = c.basis(i), ej = c.basis(j), eb = c.basis(b);
          l0 = add(l0, scale(w, c.mul(ej, c.p(L, L) * c.mul(eb, ei))));
          r0 = add(r0, scale(w * g(b, i), ej));
          l1 = add(l1, scale(w, c.mul(c.p(R, R) * c.mul(ej, eb), ei)));
          r1 = add(r1, scale(w * g(j, b), ei));
          l2 = add(l2, scale(w, c.mul(c.p(L, R) * c.mul(ei, eb), ej)));
          r2 = add(r2, scale(w * g(i, b), ej));
          l3 = add(l3, scale(w, c.mul(ei, c.p(R, L) * c.mul(eb, ej))));
          r3 = add(r3, scale(w * g(b, j), ei));
        }
      if (l0 != r0 || l1 != r1 || l2 != r2 || l3 != r3) return false;
    }
  }
  return true;
}

bool transpositionLaw(const Context& c) {
  for (Side s : kSides)
    for (Side t : kSides)
      if (c.p(s, t).transpose() != c.pb(other(t), other(s))) return false;
  return true;
}

bool forallPairs(const Context& c, const std::function<bool(const Vector&, const Vector&)>& pred) {
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b)
      if (!pred(c.basis(a), c.basis(b))) return false;
  return true;
}

bool leftMonoidalProjectorCoproducts(const Context& c) {
  const Matrix& d1 = c.A.deltaOne();
  for (int a = 0; a < c.n; ++a) {
    Vector x = c.p(L, L) * c.basis(a);
    Vector y = c.p(R, R) * c.basis(a);
    if (c.A.comul(x) != c.A.leftMul(x) * d1) return false;
    if (c.A.comul(y) != d1 * c.A.rightMul(y).transpose()) return false;
  }
  return true;
}

bool rightMonoidalProjectorCoproducts(const Context& c) {
  const Matrix& d1 = c.A.deltaOne();
  for (int a = 0; a < c.n; ++a) {
    Vector x = c.p(R, L) * c.basis(a);
    Vector y = c.p(L, R) * c.basis(a);
    if (c.A.comul(x) != d1 * c.A.leftMul(x).transpose()) return false;
    if (c.A.comul(y) != c.A.rightMul(y) * d1) return false;
  }
  return true;
}

bool idempotentSubalgebra(const Context& c, Side s, Side t) {
  const Matrix& m = c.p(s, t);
  return m * m == m && c.A.algebra().isUnitalSubalgebra(c.d.Ass[s][t]);
}

bool nondegenerate(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

bool bszPairings(const Context& c) {
  const Matrix& g = c.A.gram();
  const Matrix& d1 = c.A.deltaOne();
  const Matrix& E = c.d.hatAR.basis();
  const Matrix& Eh = c.d.hatAL.basis();
  for (Side s : kSides) {
    const Matrix& x = c.d.Ass[s][L].basis();
    for (Side t : kSides) {
      const Matrix& y = c.d.Ass[t][R].basis();
      if (!nondegenerate(x * g * y.transpose())) return false;
    }
    if (!nondegenerate(x * E.transpose())) return false;
    if (!nondegenerate(Eh * c.d.Ass[s][R].basis().transpose())) return false;
  }
  return nondegenerate(Eh * d1 * E.transpose());
}

bool bszModuleDuality(const Context& c) {
  const Matrix& d1 = c.A.deltaOne();
  for (const auto& phi : c.d.hatAL.vectors())
    for (const auto& psi : c.d.hatAR.vectors())
      for (int a = 0; a < c.n; ++a) {
        Vector ea = c.basis(a);
        if (dot(phi, d1 * actLeft(c.A, ea, psi)) != dot(actRight(c.A, phi, ea), d1 * psi)) return false;
      }
  return true;
}

bool bszDimensions(const Context& c) {
  const int e = c.d.hatAR.dim();
  if (c.d.hatAL.dim() != e) return false;
  for (Side s : kSides)
    for (Side t : kSides)
      if (c.d.Ass[s][t].dim() != e) return false;
  return true;
}

// π_σR(a)b = ε_σR(ab) on A_σR.
bool unitModuleRealization(const Context& c, Side s) {
  const Subspace& S = c.d.Ass[s][R];
  const Matrix& proj = c.p(s, R);
  const Subspace& E = c.d.hatAR;
  auto pi = [&](const Vector& a, const Vector& b) { return proj * c.mul(a, b); };
  auto sv = S.vectors();
  for (const auto& b : sv) {
    if (pi(c.A.one(), b) != b) return false;
    for (int a = 0; a < c.n; ++a)
      for (int a2 = 0; a2 < c.n; ++a2)
        if (pi(c.basis(a), pi(c.basis(a2), b)) != pi(c.mul(c.basis(a), c.basis(a2)), b)) return false;
  }
  for (const auto& x : sv)
    for (const auto& y : sv)
      if (pi(x, y) != c.mul(x, y)) return false;
  if (mapSubspace(c.e.epsR, S) != E || S.dim() != E.dim()) return false;
  if (!leftInverseOn(c.e.epsR, c.hat(s), S) || !leftInverseOn(c.hat(s), c.e.epsR, E)) return false;
  for (const auto& b : sv)
    for (int a = 0; a < c.n; ++a)
      if (c.e.epsR * pi(c.basis(a), b) != actLeft(c.A, c.basis(a), c.e.epsR * b)) return false;
  for (const auto& phi : E.vectors())
    for (int a = 0; a < c.n; ++a)
      if (c.hat(s) * actLeft(c.A, c.basis(a), phi) != pi(c.basis(a), c.hat(s) * phi)) return false;
  return true;
}

Subspace centralPart(const Algebra& alg, const Subspace& s) { return alg.center().intersect(s); }

}  // namespace

TheoremReport structuralTheoremSuite(const WeakBialgebra& a) {
  TheoremReport r;
  Context c(a);
  const Algebra& alg = a.algebra();
  const Algebra& dalg = c.B.algebra();
  const Matrix& g = a.gram();
  const Matrix& d1 = a.deltaOne();
  const bool monoidal = c.lm && c.rm;
  const bool comonoidal = c.lc && c.rc;
  const bool wedgesCommute = alg.commute(c.d.AL, c.d.AR);

  r.add("counit-projector-absorption-identities", projectorAbsorption(c));
  r.add("projector-transposition-law", transpositionLaw(c));

  for (Side s : kSides) {
    auto forms = monoidalityForms(a, s);
    bool flag = s == L ? c.lm : c.rm;
    bool agree = true;
    for (bool x : forms) agree = agree && (x == flag);
    r.add(std::string(s == L ? "left" : "right") + "-monoidality-axiom-lists-agree", agree);
  }

  // projector subalgebras under one-sided monoidality
  r.add("left-monoidal-projector-coproducts", c.lm, [&] { return leftMonoidalProjectorCoproducts(c); });
  r.add("left-monoidal-projector-product-rules", c.lm, [&] {
    return forallPairs(c, [&](const Vector& x, const Vector& y) {
      Vector pa = c.p(L, L) * y, pbv = c.p(L, L) * x;
      if (c.mul(pbv, pa) != c.p(L, L) * c.mul(x, pa)) return false;
      Vector qa = c.p(R, R) * y, qb = c.p(R, R) * x;
      return c.mul(qa, qb) == c.p(R, R) * c.mul(qa, x);
    });
  });
  r.add("left-monoidal-diagonal-projectors-idempotent", c.lm,
        [&] { return idempotentSubalgebra(c, L, L) && idempotentSubalgebra(c, R, R); });
  r.add("right-monoidal-projector-coproducts", c.rm, [&] { return rightMonoidalProjectorCoproducts(c); });
  r.add("right-monoidal-projector-product-rules", c.rm, [&] {
    return forallPairs(c, [&](const Vector& x, const Vector& y) {
      Vector pa = c.p(R, L) * y, pbv = c.p(R, L) * x;
      if (c.mul(pbv, pa) != c.p(R, L) * c.mul(x, pa)) return false;
      Vector qa = c.p(L, R) * y, qb = c.p(L, R) * x;
      return c.mul(qa, qb) == c.p(L, R) * c.mul(qa, x);
    });
  });
  r.add("right-monoidal-mixed-projectors-idempotent", c.rm,
        [&] { return idempotentSubalgebra(c, L, R) && idempotentSubalgebra(c, R, L); });
  r.add("monoidal-projector-images-commute", monoidal, [&] {
    return alg.commute(c.d.Ass[L][L], c.d.Ass[R][L]) && alg.commute(c.d.Ass[L][R], c.d.Ass[R][R]);
  });

  // counit factorization axioms
  r.add("left-monoidal-implies-bsz-left", c.lm, [&] { return c.bszL; });
  r.add("right-monoidal-implies-bsz-right", c.rm, [&] { return c.bszR; });
  {
    bool f1 = forallPairs(c, [&](const Vector& x, const Vector& y) {
      return c.e.epsL * c.mul(x, y) == c.e.epsL * c.mul(c.p(L, L) * x, y);
    });
    bool f2 = forallPairs(c, [&](const Vector& x, const Vector& y) {
      return c.e.epsR * c.mul(x, y) == c.e.epsR * c.mul(x, c.p(R, R) * y);
    });
    bool f3 = c.e.epsL * c.e.hatL * c.e.epsL == c.e.epsL;
    bool f4 = c.e.epsR * c.e.hatR * c.e.epsR == c.e.epsR;
    r.add("bsz-left-equivalent-forms", f1 == c.bszL && f2 == c.bszL && f3 == c.bszL && f4 == c.bszL);
    bool h1 = forallPairs(c, [&](const Vector& x, const Vector& y) {
      return c.e.epsL * c.mul(x, y) == c.e.epsL * c.mul(c.p(R, L) * x, y);
    });
    bool h2 = forallPairs(c, [&](const Vector& x, const Vector& y) {
      return c.e.epsR * c.mul(x, y) == c.e.epsR * c.mul(x, c.p(L, R) * y);
    });
    bool h3 = c.e.epsL * c.e.hatR * c.e.epsL == c.e.epsL;
    bool h4 = c.e.epsR * c.e.hatL * c.e.epsR == c.e.epsR;
    r.add("bsz-right-equivalent-forms", h1 == c.bszR && h2 == c.bszR && h3 == c.bszR && h4 == c.bszR);
  }
  const bool bsz = c.bszL && c.bszR;
  r.add("bsz-pairings-nondegenerate", bsz, [&] { return bszPairings(c); });
  r.add("bsz-unit-module-duality", bsz, [&] { return bszModuleDuality(c); });
  r.add("bsz-dimension-equalities", bsz, [&] { return bszDimensions(c); });

  r.add("left-monoidal-unit-module-on-A_RR", c.lm, [&] { return unitModuleRealization(c, R); });
  r.add("right-monoidal-unit-module-on-A_LR", c.rm, [&] { return unitModuleRealization(c, L); });

  // comonoidality criteria
  r.add("left-monoidal-comonoidality-criterion", c.lm, [&] { return c.lc == (d1 == d1 * g * d1); });
  r.add("right-monoidal-comonoidality-criterion", c.rm,
        [&] { return c.rc == (d1 == d1 * g.transpose() * d1); });
  r.add("left-comonoidal-monoidality-criterion", c.lc, [&] { return c.lm == c.bszL; });
  r.add("right-comonoidal-monoidality-criterion", c.rc, [&] { return c.rm == c.bszR; });

  // fixed-point subalgebras
  {
    bool unital = true, fixed = true;
    for (Side s : kSides)
      for (Side t : kSides) {
        unital = unital && alg.isUnitalSubalgebra(c.f(s, t));
        for (const auto& x : c.f(s, t).vectors()) fixed = fixed && (c.p(s, t) * x == x);
      }
    r.add("fixed-point-subalgebras-unital", unital);
    r.add("fixed-points-fixed-by-projectors", fixed);
  }
  r.add("monoidal-fixed-points-equal-projector-images", monoidal, [&] {
    for (Side s : kSides)
      for (Side t : kSides)
        if (c.f(s, t) != c.d.Ass[s][t]) return false;
    return true;
  });
  {
    Subspace center = alg.center();
    bool ok = true;
    for (Side s : kSides) ok = ok && center.intersect(c.f(s, L)) == center.intersect(c.f(s, R));
    r.add("central-fixed-points-independent-of-side", ok);
    r.add("opposite-fixed-point-subalgebras-commute",
          alg.commute(c.f(L, L), c.f(R, L)) && alg.commute(c.f(L, R), c.f(R, R)));
  }

  // fixed points of A versus fixed points of the dual
  {
    bool ok = true;
    for (Side s : kSides)
      for (Side t : kSides) {
        const Subspace& src = c.f(t, s);
        const Subspace& dst = c.fb(s, t);
        ok = ok && src.dim() == dst.dim() && mapSubspace(c.eps(s), src) == dst &&
             leftInverseOn(c.eps(s), c.hat(t), src) && leftInverseOn(c.hat(t), c.eps(s), dst) &&
             isMorphismOn(alg, dalg, c.eps(s), src, s == t);
      }
    r.add("counit-maps-fixed-points-onto-dual-fixed-points", ok);
  }
  {
    Subspace dcenter = dalg.center();
    Subspace center = alg.center();
    bool ok311 = true, ok312 = true, ok313 = true;
    for (Side s : kSides) {
      Subspace both = c.f(L, s).intersect(c.f(R, s));
      Subspace cdual = dcenter.intersect(c.fb(s, L));
      ok311 = ok311 && mapSubspace(c.eps(s), both) == cdual;
      ok312 = ok312 && mapSubspace(c.e.hatL, cdual) == both && mapSubspace(c.e.hatR, cdual) == both;
    }
    Subspace hyper = center.intersect(c.f(L, L)).intersect(c.f(R, L));
    Subspace dhyper = dcenter.intersect(c.fb(L, L)).intersect(c.fb(R, L));
    for (Side s : kSides) ok313 = ok313 && mapSubspace(c.eps(s), hyper) == dhyper;
    r.add("two-sided-fixed-points-map-onto-dual-central-part", ok311);
    r.add("dual-central-part-maps-back-to-two-sided-fixed-points", ok312);
    r.add("hyper-center-duality", ok313);
  }
  {
    // A and Â inside End A via multiplications and hit actions
    const int n = c.n;
    auto Q = [&](Side s) {
      Matrix m(n * n, n);
      for (int k = 0; k < n; ++k) m.setCol(k, (s == L ? alg.left(k) : alg.right(k)).flatten());
      return m;
    };
    auto P = [&](Side s) {
      Matrix m(n * n, n);
      for (int k = 0; k < n; ++k) {
        Matrix op(n, n);
        for (int b = 0; b < n; ++b)
          for (int i = 0; i < n; ++i) op(i, b) = s == L ? a.comult(b, k, i) : a.comult(b, i, k);
        m.setCol(k, op.flatten());
      }
      return m;
    };
    bool ok = true;
    Matrix q[2] = {Q(L), Q(R)}, pm[2] = {P(L), P(R)};
    for (Side s : kSides)
      for (Side t : kSides) {
        Subspace lhs = mapSubspace(q[s], c.f(t, s));
        Subspace mid = mapSubspace(pm[t], c.fb(s, t));
        Subspace rhs = Subspace::image(q[s]).intersect(Subspace::image(pm[t]));
        ok = ok && lhs == mid && mid == rhs;
        for (const auto& x : c.f(t, s).vectors()) ok = ok && q[s] * x == pm[t] * (c.eps(s) * x);
      }
    r.add("fixed-points-as-multiplication-and-hit-operators", ok);
  }
  {
    bool i1 = (c.d.AL == c.f(L, L)), i2 = (c.d.AR == c.f(R, R));
    r.add("left-comonoidal-iff-diagonal-fixed-points-fill-wedges", c.lc == i1 && c.lc == i2);
    r.add("left-comonoidal-diagonal-fixed-points-equal-images", c.lc, [&] {
      for (Side s : kSides)
        if (c.fb(s, s) != c.db.Ass[s][s] || c.f(s, s) != c.d.Ass[s][s]) return false;
      return true;
    });
    bool j1 = (c.d.AL == c.f(L, R)), j2 = (c.d.AR == c.f(R, L));
    r.add("right-comonoidal-iff-mixed-fixed-points-fill-wedges", c.rc == j1 && c.rc == j2);
    r.add("right-comonoidal-mixed-fixed-points-equal-images", c.rc, [&] {
      for (Side s : kSides) {
        Side t = other(s);
        if (c.fb(s, t) != c.db.Ass[s][t] || c.f(s, t) != c.d.Ass[s][t]) return false;
      }
      return true;
    });
  }
  r.add("comonoidal-iff-one-sided-comonoidal-with-commuting-wedges",
        comonoidal == (c.lc && wedgesCommute) && comonoidal == (c.rc && wedgesCommute));
  r.add("comonoidal-central-fixed-point-descriptions", comonoidal, [&] {
    Subspace dcenter = dalg.center();
    int k = c.d.AL.intersect(c.d.AR).dim();
    bool dims = dcenter.intersect(c.fb(L, L)).dim() == k && dcenter.intersect(c.fb(R, L)).dim() == k;
    return dims && centralPart(alg, c.f(L, L)) == centralPart(alg, c.d.AL) &&
           centralPart(alg, c.f(R, L)) == centralPart(alg, c.d.AR);
  });
  r.add("comonoidal-wedges-commute-and-equal-fixed-points", comonoidal, [&] {
    if (!wedgesCommute) return false;
    for (Side s : kSides)
      for (Side t : kSides)
        if (c.d.Ass[s][t] != c.d.A(s) || c.f(s, t) != c.d.A(s)) return false;
    return true;
  });
  r.add("monoidal-projectors-restrict-to-anti-isomorphisms", monoidal, [&] {
    for (Side s : kSides) {
      const Subspace& src = c.d.Ass[R][s];
      const Subspace& dst = c.d.Ass[L][s];
      if (mapSubspace(c.p(L, s), src) != dst || src.dim() != dst.dim()) return false;
      if (!leftInverseOn(c.p(L, s), c.p(R, s), src) || !leftInverseOn(c.p(R, s), c.p(L, s), dst)) return false;
      if (!isMorphismOn(alg, alg, c.p(L, s), src, true)) return false;
    }
    return true;
  });
  r.add("commuting-wedges-make-monoidality-sides-equivalent", wedgesCommute, [&] { return c.lm == c.rm; });
  {
    bool bimon = monoidal && comonoidal;
    r.add("bimonoidal-equivalent-characterizations",
          bimon == (comonoidal && c.lm) && bimon == (comonoidal && c.rm) && bimon == (monoidal && c.lc) &&
              bimon == (monoidal && c.rc));
  }
  {
    Subspace whole = Subspace::whole(c.n);
    r.add("delta-one-legs-in-wedges", tensorIn(d1, c.d.AR, whole) && tensorIn(d1, whole, c.d.AL));
    r.add("comonoidal-delta-one-in-AR-tensor-AL", c.lc || c.rc, [&] { return tensorIn(d1, c.d.AR, c.d.AL); });
  }
  return r;
}

}  // namespace wba
