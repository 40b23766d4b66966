#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "liya/deformation.hpp"

using namespace liya;

namespace {

LieYamagutiAlgebra nonabelian2(const Field& f) {
  BinaryBracket b(f, 2);
  b.add_antisym(0, 1, 0, f.one());
  return from_lie(b, LieTernary::iterated);
}

LieYamagutiAlgebra trivial_algebra(const Field& f, std::size_t d) {
  return validate_ly(LieYamagutiAlgebra(f, d));
}

Vec unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

Mat mat2(const Field& f, long a, long b, long c, long d) {
  Mat m(f, 2, 2);
  m.at(0, 0) = f.integer(a);
  m.at(0, 1) = f.integer(b);
  m.at(1, 0) = f.integer(c);
  m.at(1, 1) = f.integer(d);
  return m;
}

std::vector<Vec> block_span(const Field& f, std::size_t total, std::size_t from,
                            std::size_t to) {
  std::vector<Vec> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit(f, total, i));
  return out;
}

// canonical form of the column span, for comparing subspaces
std::string span_key(const Field& f, std::size_t dim, const std::vector<Vec>& vecs) {
  Mat rows = Mat::from_rows(f, dim, vecs);
  Rref r = rref(rows);
  std::string key;
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) key += r.reduced.at(i, j).str() + ",";
  return key;
}

}  // namespace

TEST_CASE("a map is a deformation map exactly when its graph closes up") {
  for (unsigned long p : {2ul, 3ul}) {
    Field f = Field::prime(p);
    LieYamagutiAlgebra g = nonabelian2(f);
    for (const MatchedPair& mp :
         {zero_matched_pair(g, g), semidirect_pair(validate_representation(adjoint(g)))}) {
      LieYamagutiAlgebra big = bicrossed(mp);
      CHECK(check_deformation_map(mp, Mat(f, 2, 2)).passed);  // r = 0
      std::size_t dms = 0;
      for (unsigned long k = 0; k < p * p * p * p; ++k) {
        Mat r(f, 2, 2);
        unsigned long rest = k;
        for (std::size_t pos = 0; pos < 4; ++pos) {
          r.at(pos / 2, pos % 2) = f.integer(static_cast<long>(rest % p));
          rest /= p;
        }
        bool dm = check_deformation_map(mp, r).passed;
        CHECK(dm == is_subalgebra(big, graph_span(mp, r)));
        if (dm) ++dms;
      }
      CHECK(dms > 0);
    }
  }
}

TEST_CASE("violation report pins the first failing tuple with its residual") {
  Field f = Field::prime(2);
  MatchedPair mp = semidirect_pair(validate_representation(adjoint(nonabelian2(f))));
  Mat r = mat2(f, 1, 0, 0, 0);  // fails: see the report below
  DmReport rep = check_deformation_map(mp, r);
  REQUIRE_FALSE(rep.passed);
  REQUIRE_FALSE(rep.violations.empty());
  const DmViolation& v = rep.violations.front();
  CHECK(v.condition == 1);
  // recompute left minus right of the binary identity by hand at the witness
  std::size_t a = v.idx[0], b = v.idx[1];
  Vec ra = r.column(a), rb = r.column(b);
  Vec lhs = mp.g.bracket(ra, rb);
  add_in_place(lhs, mp.psi[a].apply(rb));
  sub_in_place(lhs, mp.psi[b].apply(ra));
  Vec inner = mp.h.binary.basis(a, b);
  add_in_place(inner, weight(mp.rho, ra).column(b));
  sub_in_place(inner, weight(mp.rho, rb).column(a));
  CHECK(v.residual == sub(lhs, r.apply(inner)));
  CHECK_THROWS_WITH_AS(validate_deformation_map(mp, r),
                       doctest::Contains("binary identity fails"), math_error);
}

TEST_CASE("graph spans") {
  Field f = Field::prime(2);
  LieYamagutiAlgebra g = nonabelian2(f);
  MatchedPair mp = zero_matched_pair(g, g);
  auto zero_graph = graph_span(mp, Mat(f, 2, 2));
  REQUIRE(zero_graph.size() == 2);
  CHECK(zero_graph[0] == unit(f, 4, 2));
  CHECK(zero_graph[1] == unit(f, 4, 3));

  LieYamagutiAlgebra t1 = trivial_algebra(f, 1);
  MatchedPair tiny = zero_matched_pair(t1, t1);
  Mat id1 = Mat::identity(f, 1);
  auto diag = graph_span(tiny, id1);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0] == Vec{f.one(), f.one()});
}

TEST_CASE("induced algebra: twist by r, checked against direct expansion") {
  Field f = Field::prime(2);
  Representation adj = validate_representation(adjoint(nonabelian2(f)));
  MatchedPair mp = semidirect_pair(adj);
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp);
  REQUIRE(maps.size() == 6);
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  for (const DeformationMap& dm : maps) {
    LieYamagutiAlgebra hr = induced_algebra(dm);  // throws unless the axioms hold
    CHECK(hr.validated);
    // h is abelian here, so the twisted brackets are pure correction terms
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        Vec ra = dm.r.column(a), rb = dm.r.column(b);
        Vec bin = weight(mp.rho, ra).column(b);
        sub_in_place(bin, weight(mp.rho, rb).column(a));
        CHECK(hr.binary.basis(a, b) == bin);
        for (std::size_t c = 0; c < 2; ++c) {
          Vec rc = dm.r.column(c);
          Vec ter = weight2(DA, 2, ra, rb).column(c);
          add_in_place(ter, weight2(mp.mu, 2, rb, rc).column(a));
          sub_in_place(ter, weight2(mp.mu, 2, ra, rc).column(b));
          CHECK(hr.ternary.basis(a, b, c) == ter);
        }
      }
  }
  // r = 0 leaves h untouched
  LieYamagutiAlgebra h0 = induced_algebra(maps[0]);
  CHECK(h0.binary == mp.h.binary);
  CHECK(h0.ternary == mp.h.ternary);
  DeformationMap unchecked{mp, Mat(f, 2, 2), false};
  CHECK_THROWS_AS(induced_algebra(unchecked), math_error);
}

TEST_CASE("induced representation: five conditions plus the closed derived formula") {
  Field f = Field::prime(2);
  LieYamagutiAlgebra g = nonabelian2(f);

  // on a zero-action pair with r = id, the corrections are the adjoint tensors
  MatchedPair direct = zero_matched_pair(g, g);
  DeformationMap dmid = validate_deformation_map(direct, Mat::identity(f, 2));
  Representation rid = induced_representation(dmid);
  CHECK(rid.validated);
  Representation adj = validate_representation(adjoint(g));
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(rid.rho[a] == g.binary.ad(a));
    for (std::size_t b = 0; b < 2; ++b) CHECK(rid.mu_at(a, b) == adj.mu_at(a, b));
  }

  MatchedPair mp = semidirect_pair(adj);
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp);
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  for (const DeformationMap& dm : maps) {
    Representation rep = induced_representation(dm);
    CHECK(rep.validated);
    CHECK(rep.repdim == 2);
    // independent pass over the closed formula for the derived operator
    std::vector<Mat> got = derived_D(rep);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        Vec ra = dm.r.column(a), rb = dm.r.column(b);
        Mat want = DB[a * 2 + b];
        for (std::size_t k = 0; k < 2; ++k) {
          Vec ek = unit(f, 2, k);
          Vec extra = mp.g.ternary.eval(ra, rb, ek);
          Vec inner = weight2(mp.mu, 2, ra, ek).column(b);
          sub_in_place(inner, weight2(mp.mu, 2, rb, ek).column(a));
          add_in_place(extra, dm.r.apply(inner));
          for (std::size_t i = 0; i < 2; ++i)
            want.at(i, k) += extra[i];
        }
        CHECK(got[a * 2 + b] == want);
      }
  }
  // r = 0 returns the original actions
  Representation r0 = induced_representation(maps[0]);
  CHECK(r0.rho == mp.psi);
  CHECK(r0.mu == mp.nu);
}

TEST_CASE("equivalence of deformation maps over the semidirect pair") {
  Field f = Field::prime(2);
  MatchedPair mp = semidirect_pair(validate_representation(adjoint(nonabelian2(f))));
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp);
  REQUIRE(maps.size() == 6);
  std::vector<Mat> sigmas = all_invertible(f, 2);
  REQUIRE(sigmas.size() == 6);

  for (const DeformationMap& dm : maps)
    CHECK(check_dm_equivalence(dm, dm, Mat::identity(f, 2)));

  // full relation by sigma search; each call also cross-checks the graph path
  std::vector<std::vector<bool>> rel(6, std::vector<bool>(6, false));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (const Mat& s : sigmas)
        if (check_dm_equivalence(maps[i], maps[j], s)) {
          rel[i][j] = true;
          break;
        }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(rel[i][j] == rel[j][i]);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
  // the six maps split by their induced algebra: four leave h abelian, the
  // maps at scan positions 1 and 4 twist it into the nonabelian algebra
  std::vector<std::size_t> abelian{0, 2, 3, 5}, twisted{1, 4};
  for (std::size_t i : abelian)
    for (std::size_t j : abelian) CHECK(rel[i][j]);
  for (std::size_t i : twisted)
    for (std::size_t j : twisted) CHECK(rel[i][j]);
  for (std::size_t i : abelian)
    for (std::size_t j : twisted) CHECK_FALSE(rel[i][j]);

  Mat singular(f, 2, 2);
  singular.at(0, 0) = f.one();
  CHECK_THROWS_WITH_AS(check_dm_equivalence(maps[0], maps[1], singular),
                       doctest::Contains("not invertible"), math_error);
  MatchedPair other = zero_matched_pair(nonabelian2(f), nonabelian2(f));
  DeformationMap foreign = validate_deformation_map(other, Mat(f, 2, 2));
  CHECK_THROWS_WITH_AS(check_dm_equivalence(maps[0], foreign, Mat::identity(f, 2)),
                       doctest::Contains("different matched pairs"), math_error);
}

TEST_CASE("enumeration: order, budget, and a second count of the weight-0 operators") {
  Field f2 = Field::prime(2);
  LieYamagutiAlgebra t1 = trivial_algebra(f2, 1);
  std::vector<DeformationMap> tiny = enumerate_deformation_maps(zero_matched_pair(t1, t1));
  REQUIRE(tiny.size() == 2);  // every 1 x 1 map works when everything is zero
  CHECK(tiny[0].r.is_zero());
  CHECK(tiny[1].r.at(0, 0) == f2.one());

  Representation adj = validate_representation(adjoint(nonabelian2(f2)));
  MatchedPair mp = semidirect_pair(adj);
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp);

  // direct scan of the weight-0 Rota-Baxter laws, written from scratch
  std::vector<Mat> D = derived_D(adj);
  std::set<std::string> expected, got;
  for (unsigned long k = 0; k < 16; ++k) {
    Mat R(f2, 2, 2);
    unsigned long rest = k;
    for (std::size_t pos = 0; pos < 4; ++pos) {
      R.at(pos / 2, pos % 2) = f2.integer(static_cast<long>(rest % 2));
      rest /= 2;
    }
    bool ok = true;
    for (std::size_t a = 0; a < 2 && ok; ++a)
      for (std::size_t b = 0; b < 2 && ok; ++b) {
        Vec Ra = R.column(a), Rb = R.column(b);
        Vec lhs = adj.alg.bracket(Ra, Rb);
        Vec inner = weight(adj.rho, Ra).column(b);
        sub_in_place(inner, weight(adj.rho, Rb).column(a));
        ok = lhs == R.apply(inner);
      }
    for (std::size_t a = 0; a < 2 && ok; ++a)
      for (std::size_t b = 0; b < 2 && ok; ++b)
        for (std::size_t c = 0; c < 2 && ok; ++c) {
          Vec Ra = R.column(a), Rb = R.column(b), Rc = R.column(c);
          Vec lhs = adj.alg.tri(Ra, Rb, Rc);
          Vec inner = weight2(D, 2, Ra, Rb).column(c);
          add_in_place(inner, weight2(adj.mu, 2, Rb, Rc).column(a));
          sub_in_place(inner, weight2(adj.mu, 2, Ra, Rc).column(b));
          ok = lhs == R.apply(inner);
        }
    if (ok) {
      std::string key;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) key += R.at(i, j).str();
      expected.insert(key);
    }
  }
  for (const DeformationMap& dm : maps) {
    std::string key;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) key += dm.r.at(i, j).str();
    got.insert(key);
  }
  CHECK(expected == got);
  CHECK(maps.size() == 6);

  CHECK_THROWS_WITH_AS(enumerate_deformation_maps(mp, 8),
                       doctest::Contains("budget"), input_error);
  MatchedPair rational =
      zero_matched_pair(nonabelian2(Field::rationals()), nonabelian2(Field::rationals()));
  CHECK_THROWS_WITH_AS(enumerate_deformation_maps(rational),
                       doctest::Contains("finite field"), input_error);
}

TEST_CASE("all_invertible matches the general linear group orders") {
  CHECK(all_invertible(Field::prime(2), 2).size() == 6);    // (4-1)(4-2)
  CHECK(all_invertible(Field::prime(3), 1).size() == 2);
  CHECK(all_invertible(Field::prime(3), 2).size() == 48);   // (9-1)(9-3)
  CHECK(all_invertible(Field::prime(2), 0).size() == 1);
  for (const Mat& s : all_invertible(Field::prime(2), 2)) CHECK(rank(s) == 2);
  CHECK_THROWS_AS(all_invertible(Field::rationals(), 1), input_error);
}

TEST_CASE("homomorphisms are the deformation maps of the zero-action pair") {
  Field f = Field::prime(2);
  LieYamagutiAlgebra g = nonabelian2(f);
  MatchedPair hp = homomorphism_pair(g, g);
  std::size_t agree = 0;
  for (unsigned long k = 0; k < 16; ++k) {
    Mat phi(f, 2, 2);
    unsigned long rest = k;
    for (std::size_t pos = 0; pos < 4; ++pos) {
      phi.at(pos / 2, pos % 2) = f.integer(static_cast<long>(rest % 2));
      rest /= 2;
    }
    bool dm = check_deformation_map(hp, phi).passed;
    CHECK(dm == check_homomorphism(g, g, phi));
    if (dm) ++agree;
  }
  CHECK(agree > 1);  // at least 0 and id
}

TEST_CASE("derivations are the deformation maps of the swapped semidirect pair") {
  Field f = Field::prime(2);
  Representation adj = validate_representation(adjoint(nonabelian2(f)));
  MatchedPair dp = derivation_pair(adj);
  std::vector<Mat> D = derived_D(adj);
  std::size_t count = 0;
  for (unsigned long k = 0; k < 16; ++k) {
    Mat d(f, 2, 2);
    unsigned long rest = k;
    for (std::size_t pos = 0; pos < 4; ++pos) {
      d.at(pos / 2, pos % 2) = f.integer(static_cast<long>(rest % 2));
      rest /= 2;
    }
    // the defining laws of a derivation into the module, checked raw
    bool ok = true;
    for (std::size_t i = 0; i < 2 && ok; ++i)
      for (std::size_t j = 0; j < 2 && ok; ++j) {
        Vec lhs = d.apply(adj.alg.binary.basis(i, j));
        Vec rhs = adj.rho[i].apply(d.column(j));
        sub_in_place(rhs, adj.rho[j].apply(d.column(i)));
        ok = lhs == rhs;
      }
    for (std::size_t i = 0; i < 2 && ok; ++i)
      for (std::size_t j = 0; j < 2 && ok; ++j)
        for (std::size_t l = 0; l < 2 && ok; ++l) {
          Vec lhs = d.apply(adj.alg.ternary.basis(i, j, l));
          Vec rhs = D[i * 2 + j].apply(d.column(l));
          add_in_place(rhs, adj.mu_at(j, l).apply(d.column(i)));
          sub_in_place(rhs, adj.mu_at(i, l).apply(d.column(j)));
          ok = lhs == rhs;
        }
    bool dm = check_deformation_map(dp, d).passed;
    CHECK(dm == ok);
    if (dm) ++count;
  }
  CHECK(count > 1);
}

TEST_CASE("weight-1 operators and crossed homomorphisms over a genuine action") {
  // one-dimensional algebra acting on the nonabelian plane by a nilpotent
  for (unsigned long p : {2ul, 3ul}) {
    Field f = Field::prime(p);
    LieYamagutiAlgebra line = trivial_algebra(f, 1);
    LieYamagutiAlgebra plane = nonabelian2(f);
    Mat N(f, 2, 2);
    N.at(0, 1) = f.one();
    std::vector<Mat> rho{N}, mu{Mat(f, 2, 2)};
    MatchedPair rb1 = rota_baxter_weight1_pair(line, plane, rho, mu);
    CHECK(rb1.validated);

    std::size_t count = 0;
    for (unsigned long k = 0; k < p * p; ++k) {
      Mat R(f, 1, 2);
      R.at(0, 0) = f.integer(static_cast<long>(k / p));
      R.at(0, 1) = f.integer(static_cast<long>(k % p));
      // direct scan of the weight-1 laws
      bool ok = true;
      for (std::size_t a = 0; a < 2 && ok; ++a)
        for (std::size_t b = 0; b < 2 && ok; ++b) {
          Vec inner = plane.binary.basis(a, b);
          add_in_place(inner, scaled(R.at(0, a), N.column(b)));
          sub_in_place(inner, scaled(R.at(0, b), N.column(a)));
          ok = is_zero_vec(R.apply(inner));  // the line's bracket vanishes
        }
      for (std::size_t a = 0; a < 2 && ok; ++a)
        for (std::size_t b = 0; b < 2 && ok; ++b)
          for (std::size_t c = 0; c < 2 && ok; ++c) {
            // D and mu of the action both vanish here, leaving r of the bracket
            ok = is_zero_vec(R.apply(plane.ternary.basis(a, b, c)));
          }
      bool dm = check_deformation_map(rb1, R).passed;
      CHECK(dm == ok);
      if (dm) ++count;
    }
    CHECK(count == p);  // first column pinned to zero, second free

    MatchedPair cross = crossed_homomorphism_pair(line, plane, rho, mu);
    CHECK(cross.validated);
    for (unsigned long k = 0; k < p * p; ++k) {
      Mat d(f, 2, 1);
      d.at(0, 0) = f.integer(static_cast<long>(k / p));
      d.at(1, 0) = f.integer(static_cast<long>(k % p));
      // a one-dimensional abelian source makes every map a crossed homomorphism
      CHECK(check_deformation_map(cross, d).passed);
    }
  }

  // with a trivial target the two action pairs collapse onto the semidirect ones
  Field f = Field::prime(2);
  LieYamagutiAlgebra g = nonabelian2(f);
  Representation adj = validate_representation(adjoint(g));
  LieYamagutiAlgebra flat = trivial_algebra(f, 2);
  MatchedPair a = crossed_homomorphism_pair(g, flat, adj.rho, adj.mu);
  MatchedPair b = derivation_pair(adj);
  CHECK((a.g.binary == b.g.binary && a.g.ternary == b.g.ternary));
  CHECK((a.h.binary == b.h.binary && a.h.ternary == b.h.ternary));
  CHECK((a.rho == b.rho && a.mu == b.mu && a.psi == b.psi && a.nu == b.nu));
  MatchedPair c = rota_baxter_weight1_pair(g, flat, adj.rho, adj.mu);
  MatchedPair d = rota_baxter_weight0_pair(adj);
  CHECK((c.rho == d.rho && c.mu == d.mu && c.psi == d.psi && c.nu == d.nu));
}

TEST_CASE("two Lie algebras acting on each other, and the iterated-ternary trap") {
  // derivations of the nonabelian plane: span of D1 = E11, D2 = E12
  Field q = Field::rationals();
  BinaryBracket gb(q, 2);
  gb.add_antisym(0, 1, 0, q.one());
  BinaryBracket hb(q, 2);
  hb.add_antisym(0, 1, 0, q.one());
  std::vector<Mat> rho(2, Mat(q, 2, 2));
  std::vector<Mat> psi{mat2(q, 0, 1, 0, 0), mat2(q, -1, 0, 0, 0)};
  MatchedPair lie = lie_matched_pair(gb, hb, rho, psi);
  CHECK(lie.validated);
  CHECK(lie.g.ternary == TernaryBracket(q, 2));
  CHECK(check_deformation_map(lie, Mat(q, 2, 2)).passed);
  // kernel columns of psi_1 give a one-parameter family of deformation maps
  Mat r(q, 2, 2);
  r.at(0, 1) = q.integer(5);
  CHECK(check_deformation_map(lie, r).passed);
  CHECK(is_subalgebra(bicrossed(lie), graph_span(lie, r)));

  // over GF(2) the Lie-level law can be scanned exhaustively
  Field f = Field::prime(2);
  BinaryBracket gb2(f, 2);
  gb2.add_antisym(0, 1, 0, f.one());
  BinaryBracket hb2(f, 2);
  hb2.add_antisym(0, 1, 0, f.one());
  std::vector<Mat> rho2(2, Mat(f, 2, 2));
  std::vector<Mat> psi2{mat2(f, 0, 1, 0, 0), mat2(f, 1, 0, 0, 0)};
  MatchedPair lie2 = lie_matched_pair(gb2, hb2, rho2, psi2);
  std::size_t count = 0;
  for (unsigned long k = 0; k < 16; ++k) {
    Mat rr(f, 2, 2);
    unsigned long rest = k;
    for (std::size_t pos = 0; pos < 4; ++pos) {
      rr.at(pos / 2, pos % 2) = f.integer(static_cast<long>(rest % 2));
      rest /= 2;
    }
    bool ok = true;  // the Lie-algebra deformation law, rho = 0
    for (std::size_t a = 0; a < 2 && ok; ++a)
      for (std::size_t b = 0; b < 2 && ok; ++b) {
        Vec lhs = lie2.g.bracket(rr.column(a), rr.column(b));
        add_in_place(lhs, lie2.psi[a].apply(rr.column(b)));
        sub_in_place(lhs, lie2.psi[b].apply(rr.column(a)));
        ok = lhs == rr.apply(lie2.h.binary.basis(a, b));
      }
    bool dm = check_deformation_map(lie2, rr).passed;
    CHECK(dm == ok);
    if (dm) ++count;
  }
  CHECK(count > 0);

  // carrying the iterated ternary structures over instead does NOT give a
  // matched pair: the actions stop being compatible with the triple brackets
  LieYamagutiAlgebra g2 = from_lie(gb, LieTernary::iterated);
  LieYamagutiAlgebra h2 = from_lie(hb, LieTernary::iterated);
  MatchedPair bad{g2,
                  h2,
                  rho,
                  std::vector<Mat>(4, Mat(q, 2, 2)),
                  psi,
                  std::vector<Mat>(4, Mat(q, 2, 2)),
                  false};
  MpReport rep = check_matched_pair(bad);
  CHECK_FALSE(rep.passed);
  bool side2_hit = !rep.rep_g.passed;
  for (const MpViolation& v : rep.violations)
    if (v.condition >= 10) side2_hit = true;
  CHECK(side2_hit);
}

TEST_CASE("classifying complements of a line in the abelian plane") {
  Field f = Field::prime(2);
  LieYamagutiAlgebra plane = trivial_algebra(f, 2);
  Inclusion inc{plane, block_span(f, 2, 0, 1), block_span(f, 2, 1, 2)};
  ComplementCensus census = classify_complements(inc);
  REQUIRE(census.maps.size() == 2);
  CHECK(census.maps[0].r.is_zero());
  // both complements are abelian lines, so the sigma identities merge them
  CHECK(census.factorization_index == 1);
  REQUIRE(census.classes.size() == 1);
  CHECK(census.classes[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("census of complements in the semidirect product, against a raw subspace scan") {
  Field f = Field::prime(2);
  Representation adj = validate_representation(adjoint(nonabelian2(f)));
  LieYamagutiAlgebra E = semidirect(adj);
  Inclusion inc{E, block_span(f, 4, 0, 2), block_span(f, 4, 2, 4)};
  ComplementCensus census = classify_complements(inc);

  REQUIRE(census.maps.size() == 6);
  CHECK(census.maps[0].r.is_zero());
  CHECK(census.factorization_index == 2);
  REQUIRE(census.classes.size() == 2);
  CHECK(census.classes[0] == std::vector<std::size_t>{0, 2, 3, 5});
  CHECK(census.classes[1] == std::vector<std::size_t>{1, 4});

  // raw oracle: every 2-dimensional subspace of the ambient space
  std::set<std::string> subspaces;
  std::vector<Vec> points;
  for (unsigned long k = 1; k < 16; ++k) {
    Vec v = zero_vec(f, 4);
    for (std::size_t i = 0; i < 4; ++i)
      if (k & (1ul << i)) v[i] = f.one();
    points.push_back(v);
  }
  std::set<std::string> complements;
  Mat gblock = Mat::from_columns(f, 4, inc.g_span);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      std::vector<Vec> pair{points[i], points[j]};
      if (rank(Mat::from_columns(f, 4, pair)) != 2) continue;
      std::string key = span_key(f, 4, pair);
      if (!subspaces.insert(key).second) continue;
      if (rank(hstack(gblock, Mat::from_columns(f, 4, pair))) != 4) continue;
      if (!is_subalgebra(E, pair)) continue;
      complements.insert(key);
    }
  CHECK(subspaces.size() == 35);

  std::set<std::string> graphs;
  for (const DeformationMap& dm : census.maps)
    graphs.insert(span_key(f, 4, graph_span(census.canonical.pair, dm.r)));
  CHECK(graphs.size() == census.maps.size());  // r is readable off its graph
  CHECK(graphs == complements);                // every complement is a graph

  // a non-strong inclusion is rejected up front
  Inclusion askew{E, block_span(f, 4, 0, 2), block_span(f, 4, 0, 2)};
  CHECK_THROWS_WITH_AS(classify_complements(askew), doctest::Contains("complement"),
                       math_error);
}
