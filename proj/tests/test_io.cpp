#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liya/io.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace liya;
using doctest::Contains;

namespace {

LieYamagutiAlgebra nonabelian2(const Field& f) {
  BinaryBracket b(f, 2);
  b.add_antisym(0, 1, 0, f.one());  // [e1,e2] = e1
  return from_lie(b, LieTernary::iterated);
}

// [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e2
LieYamagutiAlgebra so21(const Field& f) {
  BinaryBracket b(f, 3);
  b.add_antisym(0, 1, 2, f.one());
  b.add_antisym(1, 2, 0, f.one());
  b.add_antisym(0, 2, 1, f.one());
  return from_lie(b, LieTernary::iterated);
}

Bundle parse_text(const std::string& text, const Field* hint = nullptr) {
  std::istringstream is(text);
  return parse_bundle(is, hint);
}

LieYamagutiAlgebra algebra_of(const std::string& text) {
  std::istringstream is(text);
  return parse_algebra(is);
}

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& cmd, const std::string& text, const RunOptions& opts = {}) {
  std::istringstream is(text);
  std::ostringstream os;
  int code = run_command(cmd, is, os, opts);
  return {code, os.str()};
}

bool same_algebra(const LieYamagutiAlgebra& a, const LieYamagutiAlgebra& b) {
  return a.dim == b.dim && a.binary == b.binary && a.ternary == b.ternary;
}

bool same_pair(const MatchedPair& a, const MatchedPair& b) {
  if (!same_algebra(a.g, b.g) || !same_algebra(a.h, b.h)) return false;
  for (std::size_t i = 0; i < a.rho.size(); ++i)
    if (!(a.rho[i] == b.rho[i])) return false;
  for (std::size_t i = 0; i < a.mu.size(); ++i)
    if (!(a.mu[i] == b.mu[i])) return false;
  for (std::size_t i = 0; i < a.psi.size(); ++i)
    if (!(a.psi[i] == b.psi[i])) return false;
  for (std::size_t i = 0; i < a.nu.size(); ++i)
    if (!(a.nu[i] == b.nu[i])) return false;
  return true;
}

// grid candidate r with entries in {-1,0,1}, code in base 3 row-major
Mat grid_mat(const Field& f, int code) {
  Mat r(f, 2, 2);
  for (int e = 0; e < 4; ++e) {
    r.at(e / 2, e % 2) = f.integer(code % 3 - 1);
    code /= 3;
  }
  return r;
}

const MatchedPair& semi22_gf2() {
  static const MatchedPair mp =
      validate_matched_pair(semidirect_pair(validate_representation(
          adjoint(validate_ly(nonabelian2(Field::prime(2)))))));
  return mp;
}

const MatchedPair& semi22_q() {
  static const MatchedPair mp =
      validate_matched_pair(semidirect_pair(validate_representation(
          adjoint(validate_ly(nonabelian2(Field::rationals()))))));
  return mp;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(parse_field_spec({"Q"}).characteristic() == 0);
  CHECK(parse_field_spec({"GF", "2"}).characteristic() == 2);
  CHECK(parse_field_spec({"GF", "97"}).characteristic() == 97);
  CHECK_THROWS_WITH_AS(parse_field_spec({"GF", "6"}), Contains("prime"), input_error);
  CHECK_THROWS_WITH_AS(parse_field_spec({"R"}), Contains("'Q' or 'GF p'"), input_error);
  CHECK_THROWS_WITH_AS(parse_field_spec({"GF", "x"}), Contains("'Q' or 'GF p'"), input_error);
  CHECK_THROWS_WITH_AS(parse_field_spec({}), Contains("'Q' or 'GF p'"), input_error);
}

TEST_CASE("algebra files round trip") {
  Field q = Field::rationals();
  Field f2 = Field::prime(2);
  Field f5 = Field::prime(5);

  // canonical serialization is pinned
  CHECK(serialize_algebra(so21(q)) ==
        "format 1\n"
        "field Q\n"
        "dim 3\n"
        "b 1 2 3 1\n"
        "b 1 3 2 1\n"
        "b 2 3 1 1\n"
        "t 1 2 1 2 -1\n"
        "t 1 2 2 1 -1\n"
        "t 1 3 1 3 -1\n"
        "t 1 3 3 1 1\n"
        "t 2 3 2 3 1\n"
        "t 2 3 3 2 1\n");

  // parse . serialize is the identity on several algebras
  for (const LieYamagutiAlgebra& a :
       {so21(q), nonabelian2(f2), nonabelian2(q), LieYamagutiAlgebra(f5, 2)}) {
    LieYamagutiAlgebra back = algebra_of(serialize_algebra(a));
    CHECK(back.field == a.field);
    CHECK(same_algebra(back, a));
  }

  // a scrambled but equivalent spelling parses to the same algebra:
  // comments, blank lines, reversed orientations, the consistent mirrored
  // duplicate, and rational coefficients
  std::string text =
      "# a comment\n"
      "format 1\n\n"
      "field Q\n"
      "dim 3\r\n"
      "b 2 1 3 -1   # [e2,e1] = -e3\n"
      "b 1 3 2 1\n"
      "b 3 1 2 -1\n"
      "b 2 3 1 2/2\n"
      "t 2 1 1 2 1\n"
      "t 1 2 2 1 -1\n"
      "t 1 3 1 3 -1\n"
      "t 1 3 3 1 1\n"
      "t 2 3 2 3 1\n"
      "t 2 3 3 2 1\n";
  CHECK(same_algebra(algebra_of(text), so21(q)));
  CHECK(serialize_algebra(algebra_of(text)) == serialize_algebra(so21(q)));

  // fractions survive a round trip
  std::string frac = "format 1\nfield Q\ndim 2\nb 1 2 1 -3/2\n";
  CHECK(serialize_algebra(algebra_of(frac)) == frac);

  // a GF(5) fraction is a division
  LieYamagutiAlgebra f5alg = algebra_of("format 1\nfield GF 5\ndim 2\nb 1 2 1 1/2\n");
  CHECK(f5alg.binary.at(0, 1, 0) == f5.integer(3));
}

TEST_CASE("parse errors carry line numbers") {
  auto bad = [](const std::string& text) { return [text] { parse_text(text); }; };

  CHECK_THROWS_WITH_AS(bad("dim 2\n")(), Contains("line 1: the first line must be 'format 1'"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("")(), Contains("missing 'format 1'"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 2\n")(), Contains("format 1"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nformat 1\n")(), Contains("line 2: duplicate format"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfrob 1\n")(), Contains("unknown directive 'frob'"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nfield Q\n")(), Contains("already declared"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\ndim 2\nb 1 2 1 1\n")(),
                       Contains("line 3: field must be declared"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nb 1 2 1 1\n")(),
                       Contains("dim must come before"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\ndim 2\n")(), Contains("already set"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 1 2 1\n")(),
                       Contains("takes 3 indices"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nt 1 2 1 1\n")(),
                       Contains("takes 4 indices"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 0 2 1 1\n")(), Contains("1-based"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 1 3 1 1\n")(),
                       Contains("line 4: index out of range (dim is 2)"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 1 2 1 x\n")(),
                       Contains("expected a number"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 1 2 1 1/0\n")(),
                       Contains("zero denominator"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\ndim 2\nb 1 2 1 1/-2\n")(),
                       Contains("malformed fraction"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield GF 2\ndim 2\nb 1 2 1 1/2\n")(),
                       Contains("denominator of '1/2' is zero in GF 2"), input_error);

  // antisymmetry bookkeeping
  auto assemble = [](const std::string& text) { return [text] { algebra_of(text); }; };
  CHECK_THROWS_WITH_AS(assemble("format 1\nfield Q\ndim 2\nb 1 1 1 1\n")(),
                       Contains("antisymmetry forces"), input_error);
  CHECK_NOTHROW(assemble("format 1\nfield Q\ndim 2\nb 1 1 1 0\n")());
  CHECK_THROWS_WITH_AS(assemble("format 1\nfield Q\ndim 2\nb 1 2 1 1\nb 1 2 1 1\n")(),
                       Contains("line 5: duplicate entry (first at line 4)"), input_error);
  CHECK_THROWS_WITH_AS(assemble("format 1\nfield Q\ndim 2\nb 1 2 1 1\nb 2 1 1 1\n")(),
                       Contains("line 5: inconsistent antisymmetric pair"), input_error);
  CHECK_THROWS_WITH_AS(
      assemble("format 1\nfield Q\ndim 2\nt 1 2 1 1 1\nt 2 1 1 1 1\n")(),
      Contains("inconsistent antisymmetric pair"), input_error);
  CHECK_THROWS_WITH_AS(assemble("format 1\nfield Q\ndim 2\nt 1 1 2 1 1\n")(),
                       Contains("antisymmetry forces"), input_error);
  // the consistent mirrored spelling is applied once
  CHECK(same_algebra(algebra_of("format 1\nfield Q\ndim 2\nb 1 2 1 1\nb 2 1 1 -1\n"),
                     algebra_of("format 1\nfield Q\ndim 2\nb 1 2 1 1\n")));

  // sections
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nbegin map r\nrow 1\n")(),
                       Contains("never closed"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nend\n")(), Contains("'end' outside"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nrow 1\n")(), Contains("'row' outside"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nbegin map r\nrow 1 2\nrow 1\nend\n")(),
                       Contains("row has 1 entries, expected 2"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nbegin map r\nend\n")(), Contains("no rows"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nfield Q\nbegin map r\nrow 1\nend\nbegin map r\n")(),
                       Contains("already defined"), input_error);
  CHECK_THROWS_WITH_AS(
      bad("format 1\nbegin algebra g\ndim 1\nend\nbegin algebra g\ndim 1\nend\n")(),
      Contains("'g' is already defined"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nbegin algebra g\nbegin map r\n")(),
                       Contains("do not nest"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nbegin algebra g\nrho 1 1 1 1\n")(),
                       Contains("does not belong in an algebra section"), input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nbegin thing x\n")(), Contains("unknown section kind"),
                       input_error);
  CHECK_THROWS_WITH_AS(bad("format 1\nbegin map\n")(),
                       Contains("begin takes a section kind and a name"), input_error);

  // the --field hint fills in a missing field line, and a contradicting
  // declaration is rejected
  Field f2 = Field::prime(2);
  Bundle b = parse_text("format 1\ndim 2\nb 1 2 1 3\n", &f2);
  LieYamagutiAlgebra a = assemble_algebra(b, "");
  CHECK(a.field.characteristic() == 2);
  CHECK(a.binary.at(0, 1, 0) == f2.one());
  CHECK_THROWS_WITH_AS(parse_text("format 1\nfield Q\n", &f2),
                       Contains("field mismatch: file says Q, --field says GF 2"),
                       input_error);
  CHECK_NOTHROW(parse_text("format 1\nfield GF 2\n", &f2));
}

TEST_CASE("representation and pair files assemble") {
  Field q = Field::rationals();
  Field f2 = Field::prime(2);

  Representation ad = validate_representation(adjoint(validate_ly(nonabelian2(q))));
  std::string rep_text = serialize_representation(ad);
  {
    Bundle b = parse_text(rep_text);
    Representation back = assemble_representation(b);
    CHECK(back.repdim == ad.repdim);
    CHECK(same_algebra(back.alg, ad.alg));
    for (std::size_t i = 0; i < ad.rho.size(); ++i) CHECK(back.rho[i] == ad.rho[i]);
    for (std::size_t i = 0; i < ad.mu.size(); ++i) CHECK(back.mu[i] == ad.mu[i]);
  }
  CHECK_THROWS_WITH_AS(assemble_representation(parse_text(rep_text + "psi 1 1 1 1\n")),
                       Contains("psi does not belong in a representation file"), input_error);
  CHECK_THROWS_WITH_AS(
      assemble_representation(parse_text("format 1\nfield Q\ndim 2\nrho 1 1 1 1\n")),
      Contains("needs a repdim"), input_error);
  CHECK_THROWS_WITH_AS(
      assemble_representation(parse_text(rep_text + "rho 3 1 1 1\n")),
      Contains("rho index out of range (got 3, bound is 2)"), input_error);
  CHECK_THROWS_WITH_AS(
      assemble_representation(parse_text(rep_text + "rho 1 2 1 1\n")),
      Contains("duplicate entry"), input_error);

  const MatchedPair& mp = semi22_gf2();
  std::string pair_text = serialize_matched_pair(mp);
  CHECK(same_pair(assemble_matched_pair(parse_text(pair_text)), mp));
  CHECK(serialize_matched_pair(assemble_matched_pair(parse_text(pair_text))) == pair_text);
  CHECK_THROWS_WITH_AS(
      assemble_matched_pair(parse_text("format 1\nbegin algebra g\ndim 1\nend\n")),
      Contains("begin algebra h"), input_error);

  // maps and spans
  std::string with_map = pair_text + serialize_map("r", Mat(f2, 2, 2));
  CHECK(take_map(parse_text(with_map), "r", 2, 2).is_zero());
  CHECK_THROWS_WITH_AS(take_map(parse_text(with_map), "r", 3, 2),
                       Contains("map 'r' must be 3 x 2, got 2 x 2"), input_error);
  CHECK_THROWS_WITH_AS(take_map(parse_text(pair_text), "r", 2, 2),
                       Contains("no 'begin map r'"), input_error);

  std::string amb = serialize_algebra(validate_ly(bicrossed(mp)));
  std::string spans =
      "begin span g\nrow 1 0 0 0\nrow 0 1 0 0\nend\n"
      "begin span h\nrow 0 0 1 0\nrow 0 0 0 1\nend\n";
  Inclusion inc = assemble_inclusion(parse_text(amb + spans));
  CHECK(inc.E.dim == 4);
  CHECK(inc.g_span.size() == 2);
  CHECK(inc.h_span.size() == 2);
  CHECK_THROWS_WITH_AS(assemble_inclusion(parse_text(amb)), Contains("no 'begin span g'"),
                       input_error);
  CHECK_THROWS_WITH_AS(
      assemble_inclusion(parse_text(amb + "begin span g\nrow 1 0\nend\n" +
                                    "begin span h\nrow 0 0 1 0\nend\n")),
      Contains("ambient dimension"), input_error);
}

TEST_CASE("command examples are byte-stable") {
  std::string zero2 = "format 1\nfield Q\ndim 2\n";
  Result r = run("check-ly", zero2);
  CHECK(r.code == 0);
  CHECK(r.out == "algebra: dim 2 over Q\naxioms: passed\n");

  std::string bad2 = "format 1\nfield GF 2\ndim 2\nb 1 2 1 1\nt 1 2 1 1 1\n";
  r = run("check-ly", bad2);
  CHECK(r.code == 1);
  CHECK(r.out ==
        "algebra: dim 2 over GF 2\n"
        "axiom 4 violated at (1, 2, 1, 2, 1): residual (1, 0)\n"
        "axiom 4 violated at (1, 2, 2, 1, 1): residual (1, 0)\n"
        "axioms: failed (2 violations)\n");

  std::string zero11 =
      "format 1\nfield GF 2\nbegin algebra g\ndim 1\nend\nbegin algebra h\ndim 1\nend\n";
  r = run("enumerate-defmaps", zero11);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "matched pair: g dim 1, h dim 1 over GF 2\n"
        "2 deformation maps\n"
        "map 1:\nrow 0\n"
        "map 2:\nrow 1\n");

  r = run("frobnicate", zero2);
  CHECK(r.code == 2);
  CHECK(r.out == "error: unknown command 'frobnicate'\n");

  // identical input, identical bytes
  for (const char* cmd : {"check-ly", "mc-check"}) {
    Result a = run(cmd, bad2);
    Result b = run(cmd, bad2);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("exit codes separate input errors from mathematical failures") {
  // parse problem -> 2
  Result r = run("check-ly", "format 1\nfield Q\ndim 2\nb 9 9 9 9\n");
  CHECK(r.code == 2);
  CHECK(r.out == "error: line 4: index out of range (dim is 2)\n");

  // mathematical failure -> 1, via a pair whose g block breaks an axiom
  std::string badpair =
      "format 1\nfield GF 2\n"
      "begin algebra g\ndim 2\nb 1 2 1 1\nt 1 2 1 1 1\nend\n"
      "begin algebra h\ndim 1\nend\n";
  r = run("bicrossed", badpair);
  CHECK(r.code == 1);
  CHECK(r.out.find("algebra g fails:") == 0);
  CHECK(r.out.find("axioms: failed") != std::string::npos);

  // characteristic restriction -> 2
  std::string semi = serialize_matched_pair(semi22_gf2()) +
                     serialize_map("r", Mat(Field::prime(2), 2, 2));
  r = run("mc-equation", semi);
  CHECK(r.code == 2);
  CHECK(r.out.find("characteristic 2 is refused") != std::string::npos);

  // enumeration budget -> 2
  RunOptions small;
  small.budget = 8;
  r = run("enumerate-defmaps", serialize_matched_pair(semi22_gf2()), small);
  CHECK(r.code == 2);
  CHECK(r.out.find("exceeds the budget of 8") != std::string::npos);

  // --field plumbing: a hint supplies the missing field line, a conflict is
  // an input error
  RunOptions gf2;
  gf2.field = Field::prime(2);
  r = run("check-ly", "format 1\ndim 2\nb 1 2 1 1\n", gf2);
  CHECK(r.code == 0);
  CHECK(r.out.find("over GF 2") != std::string::npos);
  r = run("check-ly", "format 1\nfield Q\ndim 2\n", gf2);
  CHECK(r.code == 2);
  CHECK(r.out.find("field mismatch") != std::string::npos);
}

TEST_CASE("check commands report violations") {
  Field f2 = Field::prime(2);
  const MatchedPair& mp = semi22_gf2();
  std::string pair_text = serialize_matched_pair(mp);

  CHECK(run("check-mp", pair_text).code == 0);
  CHECK(run("check-mp", pair_text).out ==
        "matched pair: g dim 2, h dim 2 over GF 2\n"
        "rep (h; rho, mu): passed\n"
        "rep (g; psi, nu): passed\n"
        "matched pair: passed\n");

  // breaking one action entry must surface as a reported violation
  std::string broken = pair_text + "nu 1 1 1 1 1\n";
  Result r = run("check-mp", broken);
  CHECK(r.code == 1);
  CHECK(r.out.find("matched pair: failed") != std::string::npos);
  CHECK(r.out.find("condition") != std::string::npos);

  // check-defmap agrees with the library verdict on every 2x2 GF(2) matrix
  std::vector<DeformationMap> sols = enumerate_deformation_maps(mp);
  std::size_t passing = 0;
  for (int code = 0; code < 16; ++code) {
    Mat cand(f2, 2, 2);
    for (int e = 0; e < 4; ++e) cand.at(e / 2, e % 2) = f2.integer((code >> e) & 1);
    Result rr = run("check-defmap", pair_text + serialize_map("r", cand));
    bool expect = check_deformation_map(mp, cand).passed;
    CHECK(rr.code == (expect ? 0 : 1));
    if (expect) {
      ++passing;
      CHECK(rr.out.find("deformation map: passed") != std::string::npos);
    } else {
      CHECK(rr.out.find("deformation map: failed") != std::string::npos);
      CHECK(rr.out.find("condition") != std::string::npos);
    }
  }
  CHECK(passing == sols.size());

  // check-rep failure path: scale one rho entry so condition checks fire
  Representation ad = validate_representation(adjoint(validate_ly(nonabelian2(f2))));
  std::string rep_text = serialize_representation(ad) + "rho 1 1 2 1\n";
  r = run("check-rep", rep_text);
  CHECK(r.code == 1);
  CHECK(r.out.find("representation: failed") != std::string::npos);

  // mc-check both ways
  r = run("mc-check", serialize_algebra(so21(Field::rationals())));
  CHECK(r.code == 0);
  CHECK(r.out == "algebra: dim 3 over Q\nMaurer-Cartan: pi diamond pi = 0\n");
  r = run("mc-check", "format 1\nfield GF 2\ndim 2\nb 1 2 1 1\nt 1 2 1 1 1\n");
  CHECK(r.code == 1);
  CHECK(r.out.find("witnesses: failed") != std::string::npos);
}

TEST_CASE("serializing commands compose") {
  Field f2 = Field::prime(2);
  const MatchedPair& mp = semi22_gf2();
  std::string pair_text = serialize_matched_pair(mp);

  // bicrossed output reparses to the library product
  Result r = run("bicrossed", pair_text);
  CHECK(r.code == 0);
  CHECK(r.out.find("# bicrossed product of matched pair") == 0);
  CHECK(same_algebra(algebra_of(r.out), bicrossed(mp)));

  // canonical-mp on the standard-basis splitting recovers the pair itself
  std::string spans =
      "begin span g\nrow 1 0 0 0\nrow 0 1 0 0\nend\n"
      "begin span h\nrow 0 0 1 0\nrow 0 0 0 1\nend\n";
  std::string amb = serialize_algebra(validate_ly(bicrossed(mp))) + spans;
  r = run("canonical-mp", amb);
  CHECK(r.code == 0);
  Bundle cb = parse_text(r.out);
  CHECK(same_pair(assemble_matched_pair(cb), mp));
  CHECK(take_map(cb, "change", 4, 4) == Mat::identity(f2, 4));

  // non-complementary spans are a mathematical failure
  std::string degenerate =
      "begin span g\nrow 1 0 0 0\nrow 0 1 0 0\nend\n"
      "begin span h\nrow 1 0 0 0\nrow 0 0 0 1\nend\n";
  r = run("canonical-mp", serialize_algebra(validate_ly(bicrossed(mp))) + degenerate);
  CHECK(r.code == 1);
  CHECK(r.out.find("factorization: not strong") != std::string::npos);

  // classify-complements mirrors the library census
  ComplementCensus census = classify_complements(
      Inclusion{validate_ly(bicrossed(mp)),
                {Vec{f2.one(), f2.zero(), f2.zero(), f2.zero()},
                 Vec{f2.zero(), f2.one(), f2.zero(), f2.zero()}},
                {Vec{f2.zero(), f2.zero(), f2.one(), f2.zero()},
                 Vec{f2.zero(), f2.zero(), f2.zero(), f2.one()}}});
  r = run("classify-complements", amb);
  CHECK(r.code == 0);
  CHECK(r.out.find("complements: " + std::to_string(census.maps.size()) + "\n") !=
        std::string::npos);
  CHECK(r.out.find("equivalence classes: " + std::to_string(census.classes.size()) + "\n") !=
        std::string::npos);
  CHECK(r.out.find("factorization index: " +
                   std::to_string(census.factorization_index) + "\n") != std::string::npos);
  CHECK(r.out == run("classify-complements", amb).out);

  // cohomology tables match the library numbers
  Representation ad =
      validate_representation(adjoint(validate_ly(nonabelian2(Field::rationals()))));
  std::ostringstream expect;
  expect << "module: dim 2 over algebra dim 2, Q\n";
  for (auto [deg, d] : cohomology_dims(ad, 3)) expect << "H^" << deg << " = " << d << "\n";
  r = run("cohomology", serialize_representation(ad));
  CHECK(r.code == 0);
  CHECK(r.out == expect.str());

  RunOptions two;
  two.max_degree = 2;
  std::ostringstream expect2;
  expect2 << "module: dim 2 over algebra dim 2, Q\n";
  for (auto [deg, d] : cohomology_dims(ad, 2)) expect2 << "H^" << deg << " = " << d << "\n";
  r = run("cohomology", serialize_representation(ad), two);
  CHECK(r.code == 0);
  CHECK(r.out == expect2.str());

  // defmap-cohomology likewise, through the r = 0 map
  const MatchedPair& mq = semi22_q();
  Field q = Field::rationals();
  std::string qpair = serialize_matched_pair(mq);
  std::ostringstream dexpect;
  dexpect << "matched pair: g dim 2, h dim 2 over Q\n";
  for (auto [deg, d] : defmap_cohomology_dims(validate_deformation_map(mq, Mat(q, 2, 2)), 3))
    dexpect << "H^" << deg << " = " << d << "\n";
  r = run("defmap-cohomology", qpair + serialize_map("r", Mat(q, 2, 2)));
  CHECK(r.code == 0);
  CHECK(r.out == dexpect.str());

  // derived-brackets summary
  r = run("derived-brackets", qpair);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "matched pair: g dim 2, h dim 2 over Q\n"
        "ambient algebra: dim 4\n"
        "l_4 on unit probes: zero\n"
        "l_5 on unit probes: zero\n"
        "derived brackets: assembled\n");
}

TEST_CASE("mc-equation and twist-check") {
  Field q = Field::rationals();
  const MatchedPair& mq = semi22_q();
  std::string qpair = serialize_matched_pair(mq);

  // verdicts agree with the deformation identities on a grid sample
  int solutions = 0;
  for (int code = 0; code < 81; code += 3) {
    Mat r = grid_mat(q, code);
    Result res = run("mc-equation", qpair + serialize_map("r", r));
    bool expect = check_deformation_map(mq, r).passed;
    CHECK(res.code == (expect ? 0 : 1));
    if (expect) {
      ++solutions;
      CHECK(res.out.find("MC residual: zero") != std::string::npos);
    } else {
      CHECK(res.out.find("MC residual: nonzero") != std::string::npos);
      CHECK(res.out.find("part at (") != std::string::npos);
    }
  }
  CHECK(solutions > 0);

  // pick a valid r, then one r' that lands on a solution and one that does not
  Mat rgood(q, 2, 2);
  rgood.at(1, 1) = q.integer(-1);
  REQUIRE(check_deformation_map(mq, rgood).passed);
  Mat rp_good(q, 2, 2), rp_bad(q, 2, 2);
  bool found_good = false, found_bad = false;
  for (int code = 0; code < 81; ++code) {
    Mat rp = grid_mat(q, code);
    if (rp.is_zero()) continue;
    bool lands = check_deformation_map(mq, rgood + rp).passed;
    if (lands && !found_good) {
      rp_good = rp;
      found_good = true;
    }
    if (!lands && !found_bad) {
      rp_bad = rp;
      found_bad = true;
    }
  }
  REQUIRE(found_good);
  REQUIRE(found_bad);

  Result res = run("twist-check",
                   qpair + serialize_map("r", rgood) + serialize_map("rp", rp_good));
  CHECK(res.code == 0);
  CHECK(res.out ==
        "matched pair: g dim 2, h dim 2 over Q\n"
        "deformation map r: valid\n"
        "twist identity at r': holds\n"
        "residual after twist: zero\n");

  res = run("twist-check", qpair + serialize_map("r", rgood) + serialize_map("rp", rp_bad));
  CHECK(res.code == 1);
  CHECK(res.out.find("twist identity at r': holds") != std::string::npos);
  CHECK(res.out.find("residual after twist: nonzero") != std::string::npos);

  // r' defaults to zero, which always lands back on r
  res = run("twist-check", qpair + serialize_map("r", rgood));
  CHECK(res.code == 0);

  // an r that is no deformation map is refused as a mathematical failure
  Mat rbad(q, 2, 2);
  rbad.at(0, 0) = q.one();
  if (!check_deformation_map(mq, rbad).passed) {
    res = run("twist-check", qpair + serialize_map("r", rbad));
    CHECK(res.code == 1);
    CHECK(res.out.find("map r is not a deformation map") != std::string::npos);
  }

  // characteristic 3 is refused
  Field f3 = Field::prime(3);
  MatchedPair m3 = validate_matched_pair(
      semidirect_pair(validate_representation(adjoint(validate_ly(nonabelian2(f3))))));
  res = run("twist-check",
            serialize_matched_pair(m3) + serialize_map("r", Mat(f3, 2, 2)));
  CHECK(res.code == 2);
  CHECK(res.out.find("characteristic 3 is refused") != std::string::npos);
}

TEST_CASE("lts commands") {
  Field f2 = Field::prime(2);
  Field q = Field::rationals();

  LieTripleSystem tri =
      validate_lts(LieTripleSystem(f2, 2, from_lie(nonabelian2(f2).binary,
                                                   LieTernary::iterated).ternary));
  std::string tri_text = serialize_lts(tri);
  Result r = run("lts-check", tri_text);
  CHECK(r.code == 0);
  CHECK(r.out == "triple system: dim 2 over GF 2\nidentities: passed\n");

  // the five-variable law fails for this table over any field
  r = run("lts-check", "format 1\nfield Q\ndim 2\nt 1 2 1 1 1\n");
  CHECK(r.code == 1);
  CHECK(r.out.find("identity 4 violated") != std::string::npos);
  CHECK(r.out.find("identities: failed") != std::string::npos);

  // a binary entry in a triple-system file is malformed input
  r = run("lts-check", "format 1\nfield Q\ndim 2\nb 1 2 1 1\n");
  CHECK(r.code == 2);
  CHECK(r.out.find("no binary bracket") != std::string::npos);

  LtsMatchedPair pair = validate_lts_matched_pair(
      lts_semidirect_pair(validate_lts_representation(lts_regular(tri))));
  std::string pair_text = serialize_matched_pair(as_ly_pair(pair));
  r = run("lts-check-mp", pair_text);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "lts matched pair: g dim 2, h dim 2 over GF 2\n"
        "rep (h; mu): passed\n"
        "rep (g; nu): passed\n"
        "lts matched pair: passed\n");
  r = run("lts-check-mp", pair_text + "rho 1 1 1 1\n");
  CHECK(r.code == 2);
  CHECK(r.out.find("rho does not belong in a triple-system pair") != std::string::npos);

  // lts-bicrossed output reparses to the library product
  r = run("lts-bicrossed", pair_text);
  CHECK(r.code == 0);
  LieTripleSystem big = lts_bicrossed(pair);
  {
    std::istringstream is(r.out);
    LieTripleSystem back = assemble_lts(parse_bundle(is), "");
    CHECK(back.dim == big.dim);
    CHECK(back.ternary == big.ternary);
  }

  r = run("lts-check-defmap", pair_text + serialize_map("r", Mat(f2, 2, 2)));
  CHECK(r.code == 0);
  CHECK(r.out.find("deformation map: passed") != std::string::npos);

  // census through the embedding
  std::string spans =
      "begin span g\nrow 1 0 0 0\nrow 0 1 0 0\nend\n"
      "begin span h\nrow 0 0 1 0\nrow 0 0 0 1\nend\n";
  ComplementCensus census = classify_lts_complements(
      big,
      {Vec{f2.one(), f2.zero(), f2.zero(), f2.zero()},
       Vec{f2.zero(), f2.one(), f2.zero(), f2.zero()}},
      {Vec{f2.zero(), f2.zero(), f2.one(), f2.zero()},
       Vec{f2.zero(), f2.zero(), f2.zero(), f2.one()}});
  r = run("lts-classify", serialize_lts(big) + spans);
  CHECK(r.code == 0);
  CHECK(r.out.find("complements: " + std::to_string(census.maps.size()) + "\n") !=
        std::string::npos);
  CHECK(r.out.find("equivalence classes: " + std::to_string(census.classes.size()) +
                   "\n") != std::string::npos);

  // degree tables and censuses print identically across runs
  CHECK(run("lts-classify", serialize_lts(big) + spans).out == r.out);
}
