#include "liya/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "liya/cohomology.hpp"

namespace liya {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

long long parse_long(const std::string& tok, std::size_t line) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (b != e && *b == '+') ++b;
  long long v = 0;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) fail(line, "expected a number, got '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  long long v = parse_long(tok, line);
  if (v < 0) fail(line, std::string(what) + " cannot be negative");
  return static_cast<std::size_t>(v);
}

// 1-based basis index, checked against a dimension when one is known here.
std::size_t parse_index(const std::string& tok, std::size_t line) {
  long long v = parse_long(tok, line);
  if (v < 1) fail(line, "index out of range (indices are 1-based), got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

// "3", "-3", "1/2", "-1/2"; the denominator must be a plain positive integer.
Scalar parse_scalar(const Field& f, const std::string& tok, std::size_t line) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return f.integer(static_cast<long>(parse_long(tok, line)));
  long long num = parse_long(tok.substr(0, slash), line);
  std::string den = tok.substr(slash + 1);
  if (den.empty() || den[0] == '-' || den[0] == '+')
    fail(line, "malformed fraction '" + tok + "'");
  long long d = parse_long(den, line);
  if (d == 0) fail(line, "zero denominator in '" + tok + "'");
  try {
    return f.integer(static_cast<long>(num)) / f.integer(static_cast<long>(d));
  } catch (const math_error&) {
    fail(line, "denominator of '" + tok + "' is zero in " + f.str());
  }
}

std::string tup(const std::vector<std::size_t>& t) {  // 0-based in, 1-based out
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

std::string mat_str(const Mat& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += m.at(r, c).str();
    }
    s += "]";
  }
  return s + "]";
}

std::string row_str(const Mat& m, std::size_t r) {
  std::string s;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) s += " ";
    s += m.at(r, c).str();
  }
  return s;
}

std::string count_str(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " violation" : " violations");
}

}  // namespace

Field parse_field_spec(const std::vector<std::string>& words) {
  if (words.size() == 1 && words[0] == "Q") return Field::rationals();
  if (words.size() == 2 && words[0] == "GF") {
    const std::string& tok = words[1];
    long long p = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || p < 2)
      throw input_error("field must be 'Q' or 'GF p' for a prime p, got 'GF " + tok + "'");
    return Field::prime(static_cast<unsigned long>(p));  // validates primality
  }
  std::string got;
  for (const auto& w : words) {
    if (!got.empty()) got += " ";
    got += w;
  }
  throw input_error("field must be 'Q' or 'GF p', got '" + got + "'");
}

Bundle parse_bundle(std::istream& in, const Field* field_hint) {
  Bundle b;
  if (field_hint) {
    b.field = *field_hint;
    b.have_field = true;
  }

  enum class Ctx { top, alg, map, span };
  Ctx ctx = Ctx::top;
  std::string ctxname;
  std::size_t ctxline = 0;
  std::vector<Vec> rows;

  std::string raw;
  std::size_t line = 0;
  bool format_seen = false;

  auto need_field = [&](std::size_t ln) {
    if (!b.have_field) fail(ln, "field must be declared before coefficients appear");
  };

  auto algebra_line = [&](AlgebraSection& sec, const std::vector<std::string>& w,
                          std::size_t ln) {
    if (w[0] == "dim") {
      if (w.size() != 2) fail(ln, "dim takes one number");
      if (sec.dim_set) fail(ln, "dim is already set");
      sec.dim = parse_count(w[1], ln, "dim");
      sec.dim_set = true;
      return;
    }
    // b i j k c  /  t i j k l c
    const bool binary = w[0] == "b";
    const std::size_t nidx = binary ? 3 : 4;
    if (w.size() != nidx + 2)
      fail(ln, std::string("'") + w[0] + "' takes " + std::to_string(nidx) +
                   " indices and a coefficient");
    if (!sec.dim_set) fail(ln, "dim must come before bracket entries");
    need_field(ln);
    std::vector<std::size_t> idx(nidx);
    for (std::size_t i = 0; i < nidx; ++i) {
      idx[i] = parse_index(w[1 + i], ln);
      if (idx[i] > sec.dim)
        fail(ln, "index out of range (dim is " + std::to_string(sec.dim) + ")");
    }
    Scalar c = parse_scalar(b.field, w[nidx + 1], ln);
    (binary ? sec.binary : sec.ternary).push_back(RawEntry{ln, std::move(idx), std::move(c)});
  };

  auto tensor_line = [&](std::vector<RawEntry>& dst, const std::vector<std::string>& w,
                         std::size_t nidx, std::size_t ln) {
    if (w.size() != nidx + 2)
      fail(ln, std::string("'") + w[0] + "' takes " + std::to_string(nidx) +
                   " indices and a coefficient");
    need_field(ln);
    std::vector<std::size_t> idx(nidx);
    for (std::size_t i = 0; i < nidx; ++i) idx[i] = parse_index(w[1 + i], ln);
    Scalar c = parse_scalar(b.field, w[nidx + 1], ln);
    dst.push_back(RawEntry{ln, std::move(idx), std::move(c)});
  };

  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<std::string> w = tokenize(raw);
    if (w.empty()) continue;

    if (!format_seen) {
      if (w.size() != 2 || w[0] != "format" || w[1] != "1")
        fail(line, "the first line must be 'format 1'");
      format_seen = true;
      continue;
    }
    const std::string& kw = w[0];

    if (ctx == Ctx::alg) {
      if (kw == "end") {
        ctx = Ctx::top;
        continue;
      }
      if (kw == "begin") fail(line, "sections do not nest");
      if (kw == "dim" || kw == "b" || kw == "t") {
        algebra_line(b.algebras[ctxname], w, line);
        continue;
      }
      fail(line, "'" + kw + "' does not belong in an algebra section");
    }

    if (ctx == Ctx::map || ctx == Ctx::span) {
      if (kw == "end") {
        if (ctx == Ctx::map) {
          if (rows.empty()) fail(line, "map '" + ctxname + "' has no rows");
          b.maps.emplace(ctxname, Mat::from_rows(b.field, rows[0].size(), rows));
        } else {
          b.spans.emplace(ctxname, rows);
        }
        ctx = Ctx::top;
        continue;
      }
      if (kw == "begin") fail(line, "sections do not nest");
      if (kw == "row") {
        if (w.size() < 2) fail(line, "row needs at least one entry");
        need_field(line);
        Vec v;
        for (std::size_t i = 1; i < w.size(); ++i)
          v.push_back(parse_scalar(b.field, w[i], line));
        if (!rows.empty() && v.size() != rows[0].size())
          fail(line, "row has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(rows[0].size()));
        rows.push_back(std::move(v));
        continue;
      }
      fail(line, "'" + kw + "' does not belong in a " +
                     (ctx == Ctx::map ? "map" : "span") + " section");
    }

    // top level
    if (kw == "field") {
      if (b.field_declared) fail(line, "field is already declared");
      Field f = Field::rationals();
      try {
        f = parse_field_spec(std::vector<std::string>(w.begin() + 1, w.end()));
      } catch (const input_error& e) {
        fail(line, e.what());
      }
      if (field_hint && !(f == *field_hint))
        fail(line, "field mismatch: file says " + f.str() + ", --field says " +
                       field_hint->str());
      b.field = f;
      b.have_field = true;
      b.field_declared = true;
    } else if (kw == "dim" || kw == "b" || kw == "t") {
      algebra_line(b.algebras[""], w, line);
    } else if (kw == "repdim") {
      if (w.size() != 2) fail(line, "repdim takes one number");
      if (b.repdim_set) fail(line, "repdim is already set");
      b.repdim = parse_count(w[1], line, "repdim");
      if (b.repdim == 0) fail(line, "repdim must be positive");
      b.repdim_set = true;
    } else if (kw == "rho") {
      tensor_line(b.rho, w, 3, line);
    } else if (kw == "mu") {
      tensor_line(b.mu, w, 4, line);
    } else if (kw == "psi") {
      tensor_line(b.psi, w, 3, line);
    } else if (kw == "nu") {
      tensor_line(b.nu, w, 4, line);
    } else if (kw == "begin") {
      if (w.size() != 3) fail(line, "begin takes a section kind and a name");
      const std::string& kind = w[1];
      ctxname = w[2];
      ctxline = line;
      if (kind == "algebra") {
        if (b.algebras.count(ctxname) && (b.algebras[ctxname].dim_set ||
                                          !b.algebras[ctxname].binary.empty() ||
                                          !b.algebras[ctxname].ternary.empty()))
          fail(line, "algebra '" + ctxname + "' is already defined");
        b.algebras[ctxname].line = line;
        ctx = Ctx::alg;
      } else if (kind == "map") {
        if (b.maps.count(ctxname)) fail(line, "map '" + ctxname + "' is already defined");
        rows.clear();
        ctx = Ctx::map;
      } else if (kind == "span") {
        if (b.spans.count(ctxname)) fail(line, "span '" + ctxname + "' is already defined");
        rows.clear();
        ctx = Ctx::span;
      } else {
        fail(line, "unknown section kind '" + kind + "'");
      }
    } else if (kw == "end") {
      fail(line, "'end' outside a section");
    } else if (kw == "row") {
      fail(line, "'row' outside a map or span section");
    } else if (kw == "format") {
      fail(line, "duplicate format line");
    } else {
      fail(line, "unknown directive '" + kw + "'");
    }
  }

  if (!format_seen) throw input_error("missing 'format 1' line");
  if (ctx != Ctx::top)
    fail(ctxline, "section '" + ctxname + "' is never closed ('end' missing)");
  return b;
}

namespace {

const AlgebraSection& find_section(const Bundle& b, const std::string& name) {
  auto it = b.algebras.find(name);
  std::string desc = name.empty() ? "a top-level algebra" : "'begin algebra " + name + "'";
  if (it == b.algebras.end()) throw input_error("the input has no " + desc + " section");
  if (!it->second.dim_set) throw input_error(desc + " never sets its dim");
  return it->second;
}

// Exact duplicates are errors; mirrored orientations must agree up to sign
// and are applied once; entries forced to zero by antisymmetry must be zero.
template <std::size_t N, typename Apply>
void fold_antisym(const std::vector<RawEntry>& entries, Apply apply) {
  std::map<std::array<std::size_t, N>, std::size_t> seen;  // oriented tuple -> line
  std::map<std::array<std::size_t, N>, std::pair<Scalar, std::size_t>> canon;
  for (const RawEntry& e : entries) {
    std::array<std::size_t, N> key{};
    std::copy(e.idx.begin(), e.idx.end(), key.begin());
    if (auto it = seen.find(key); it != seen.end())
      fail(e.line, "duplicate entry (first at line " + std::to_string(it->second) + ")");
    seen.emplace(key, e.line);
    if (key[0] == key[1]) {
      if (!e.coeff.is_zero()) fail(e.line, "antisymmetry forces this entry to be zero");
      continue;
    }
    std::array<std::size_t, N> ck = key;
    Scalar cv = e.coeff;
    if (ck[0] > ck[1]) {
      std::swap(ck[0], ck[1]);
      cv = -cv;
    }
    if (auto it = canon.find(ck); it != canon.end()) {
      if (!(it->second.first == cv))
        fail(e.line, "inconsistent antisymmetric pair (conflicts with line " +
                         std::to_string(it->second.second) + ")");
    } else {
      canon.emplace(ck, std::make_pair(std::move(cv), e.line));
    }
  }
  for (const auto& [ck, vl] : canon)
    if (!vl.first.is_zero()) apply(ck, vl.first);
}

BinaryBracket build_binary(const Field& f, const AlgebraSection& sec) {
  BinaryBracket bb(f, sec.dim);
  fold_antisym<3>(sec.binary, [&](const std::array<std::size_t, 3>& k, const Scalar& v) {
    bb.add_antisym(k[0] - 1, k[1] - 1, k[2] - 1, v);
  });
  return bb;
}

TernaryBracket build_ternary(const Field& f, const AlgebraSection& sec) {
  TernaryBracket tt(f, sec.dim);
  fold_antisym<4>(sec.ternary, [&](const std::array<std::size_t, 4>& k, const Scalar& v) {
    tt.add_antisym(k[0] - 1, k[1] - 1, k[2] - 1, k[3] - 1, v);
  });
  return tt;
}

// Dense operator families from sparse entries; dims[i] bounds idx[i].
std::vector<Mat> build_family(const Field& f, const std::vector<RawEntry>& entries,
                              const char* what, const std::vector<std::size_t>& dims,
                              std::size_t fam_size, std::size_t opdim,
                              std::function<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>(
                                  const std::vector<std::size_t>&)>
                                  place) {
  std::vector<Mat> fam(fam_size, Mat(f, opdim, opdim));
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (const RawEntry& e : entries) {
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (e.idx[i] > dims[i])
        fail(e.line, std::string(what) + " index out of range (got " +
                         std::to_string(e.idx[i]) + ", bound is " +
                         std::to_string(dims[i]) + ")");
    if (auto it = seen.find(e.idx); it != seen.end())
      fail(e.line, "duplicate entry (first at line " + std::to_string(it->second) + ")");
    seen.emplace(e.idx, e.line);
    auto [who, rc] = place(e.idx);
    fam[who].at(rc.first, rc.second) = e.coeff;
  }
  return fam;
}

}  // namespace

LieYamagutiAlgebra assemble_algebra(const Bundle& b, const std::string& name) {
  const AlgebraSection& sec = find_section(b, name);
  return LieYamagutiAlgebra(b.field, sec.dim, build_binary(b.field, sec),
                            build_ternary(b.field, sec));
}

LieTripleSystem assemble_lts(const Bundle& b, const std::string& name) {
  const AlgebraSection& sec = find_section(b, name);
  if (!sec.binary.empty())
    fail(sec.binary.front().line, "a triple system has no binary bracket");
  return LieTripleSystem(b.field, sec.dim, build_ternary(b.field, sec));
}

namespace {

// rho i a b c : rho_{e_i}(f_a) += c f_b.  mu i j a b c likewise per pair.
std::vector<Mat> build_rho(const Field& f, const std::vector<RawEntry>& e, const char* what,
                           std::size_t n, std::size_t v) {
  return build_family(f, e, what, {n, v, v}, n, v, [](const std::vector<std::size_t>& i) {
    return std::make_pair(i[0] - 1, std::make_pair(i[2] - 1, i[1] - 1));
  });
}

std::vector<Mat> build_mu(const Field& f, const std::vector<RawEntry>& e, const char* what,
                          std::size_t n, std::size_t v) {
  return build_family(f, e, what, {n, n, v, v}, n * n, v,
                      [n](const std::vector<std::size_t>& i) {
                        return std::make_pair((i[0] - 1) * n + (i[1] - 1),
                                              std::make_pair(i[3] - 1, i[2] - 1));
                      });
}

}  // namespace

Representation assemble_representation(const Bundle& b) {
  if (!b.psi.empty()) fail(b.psi.front().line, "psi does not belong in a representation file");
  if (!b.nu.empty()) fail(b.nu.front().line, "nu does not belong in a representation file");
  if (!b.repdim_set) throw input_error("a representation file needs a repdim line");
  std::string name = b.algebras.count("") ? "" : "g";
  LieYamagutiAlgebra alg = assemble_algebra(b, name);
  const std::size_t n = alg.dim, v = b.repdim;
  return Representation{std::move(alg), v, build_rho(b.field, b.rho, "rho", n, v),
                        build_mu(b.field, b.mu, "mu", n, v)};
}

MatchedPair assemble_matched_pair(const Bundle& b) {
  LieYamagutiAlgebra g = assemble_algebra(b, "g");
  LieYamagutiAlgebra h = assemble_algebra(b, "h");
  const std::size_t n = g.dim, m = h.dim;
  return MatchedPair{std::move(g),
                     std::move(h),
                     build_rho(b.field, b.rho, "rho", n, m),
                     build_mu(b.field, b.mu, "mu", n, m),
                     build_rho(b.field, b.psi, "psi", m, n),
                     build_mu(b.field, b.nu, "nu", m, n)};
}

LtsMatchedPair assemble_lts_matched_pair(const Bundle& b) {
  if (!b.rho.empty()) fail(b.rho.front().line, "rho does not belong in a triple-system pair");
  if (!b.psi.empty()) fail(b.psi.front().line, "psi does not belong in a triple-system pair");
  LieTripleSystem g = assemble_lts(b, "g");
  LieTripleSystem h = assemble_lts(b, "h");
  const std::size_t n = g.dim, m = h.dim;
  return LtsMatchedPair{std::move(g), std::move(h), build_mu(b.field, b.mu, "mu", n, m),
                        build_mu(b.field, b.nu, "nu", m, n)};
}

namespace {

std::vector<Vec> take_span(const Bundle& b, const std::string& name, std::size_t dim) {
  auto it = b.spans.find(name);
  if (it == b.spans.end()) throw input_error("the input has no 'begin span " + name + "'");
  for (const Vec& v : it->second)
    if (v.size() != dim)
      throw input_error("span '" + name + "' rows must have " + std::to_string(dim) +
                        " entries, the ambient dimension");
  return it->second;
}

// The ambient algebra may sit in `begin algebra E` or just be the file's
// only algebra -- so a serialized bicrossed product plus two spans works.
std::string ambient_name(const Bundle& b) {
  if (b.algebras.count("E")) return "E";
  if (b.algebras.count("")) return "";
  if (b.algebras.size() == 1) return b.algebras.begin()->first;
  throw input_error("no ambient algebra: expected 'begin algebra E' or a single algebra");
}

}  // namespace

Inclusion assemble_inclusion(const Bundle& b) {
  LieYamagutiAlgebra E = assemble_algebra(b, ambient_name(b));
  const std::size_t d = E.dim;
  return Inclusion{std::move(E), take_span(b, "g", d), take_span(b, "h", d)};
}

Mat take_map(const Bundle& b, const std::string& name, std::size_t rows, std::size_t cols) {
  auto it = b.maps.find(name);
  if (it == b.maps.end()) throw input_error("the input has no 'begin map " + name + "'");
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw input_error("map '" + name + "' must be " + std::to_string(rows) + " x " +
                      std::to_string(cols) + ", got " + std::to_string(it->second.rows()) +
                      " x " + std::to_string(it->second.cols()));
  return it->second;
}

LieYamagutiAlgebra parse_algebra(std::istream& in) {
  Bundle b = parse_bundle(in);
  if (b.algebras.count("")) return assemble_algebra(b, "");
  if (b.algebras.size() == 1) return assemble_algebra(b, b.algebras.begin()->first);
  if (b.algebras.empty()) throw input_error("the input has no algebra");
  throw input_error("several algebra sections; expected a single algebra");
}

namespace {

void emit_entries(std::ostream& os, const BinaryBracket* bb, const TernaryBracket& tt,
                  std::size_t dim) {
  if (bb)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (!bb->at(i, j, k).is_zero())
            os << "b " << i + 1 << " " << j + 1 << " " << k + 1 << " "
               << bb->at(i, j, k).str() << "\n";
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          if (!tt.at(i, j, k, l).is_zero())
            os << "t " << i + 1 << " " << j + 1 << " " << k + 1 << " " << l + 1 << " "
               << tt.at(i, j, k, l).str() << "\n";
}

}  // namespace

std::string serialize_algebra(const LieYamagutiAlgebra& a) {
  a.binary.validate_antisymmetry();
  a.ternary.validate_antisymmetry();
  std::ostringstream os;
  os << "format 1\nfield " << a.field.str() << "\ndim " << a.dim << "\n";
  emit_entries(os, &a.binary, a.ternary, a.dim);
  return os.str();
}

std::string serialize_lts(const LieTripleSystem& s) {
  s.ternary.validate_antisymmetry();
  std::ostringstream os;
  os << "format 1\nfield " << s.field.str() << "\ndim " << s.dim << "\n";
  emit_entries(os, nullptr, s.ternary, s.dim);
  return os.str();
}

namespace {

void emit_rho_mu(std::ostream& os, const char* rho_kw, const char* mu_kw,
                 const std::vector<Mat>& rho, const std::vector<Mat>& mu, std::size_t n,
                 std::size_t v) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t bb = 0; bb < v; ++bb)
        if (!rho[i].at(bb, a).is_zero())
          os << rho_kw << " " << i + 1 << " " << a + 1 << " " << bb + 1 << " "
             << rho[i].at(bb, a).str() << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t bb = 0; bb < v; ++bb)
          if (!mu[i * n + j].at(bb, a).is_zero())
            os << mu_kw << " " << i + 1 << " " << j + 1 << " " << a + 1 << " " << bb + 1
               << " " << mu[i * n + j].at(bb, a).str() << "\n";
}

}  // namespace

std::string serialize_representation(const Representation& r) {
  std::ostringstream os;
  os << serialize_algebra(r.alg);
  os << "repdim " << r.repdim << "\n";
  emit_rho_mu(os, "rho", "mu", r.rho, r.mu, r.alg.dim, r.repdim);
  return os.str();
}

std::string serialize_matched_pair(const MatchedPair& mp) {
  mp.g.binary.validate_antisymmetry();
  mp.g.ternary.validate_antisymmetry();
  mp.h.binary.validate_antisymmetry();
  mp.h.ternary.validate_antisymmetry();
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  std::ostringstream os;
  os << "format 1\nfield " << mp.g.field.str() << "\n";
  os << "begin algebra g\ndim " << n << "\n";
  emit_entries(os, &mp.g.binary, mp.g.ternary, n);
  os << "end\nbegin algebra h\ndim " << m << "\n";
  emit_entries(os, &mp.h.binary, mp.h.ternary, m);
  os << "end\n";
  emit_rho_mu(os, "rho", "mu", mp.rho, mp.mu, n, m);
  emit_rho_mu(os, "psi", "nu", mp.psi, mp.nu, m, n);
  return os.str();
}

std::string serialize_map(const std::string& name, const Mat& m) {
  std::ostringstream os;
  os << "begin map " << name << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) os << "row " << row_str(m, r) << "\n";
  os << "end\n";
  return os.str();
}

// ---------------------------------------------------------------- reports

namespace {

int print_axioms(std::ostream& out, const AxiomReport& rep, const char* noun,
                 const char* label) {
  std::vector<AxiomViolation> v = rep.violations;
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::tie(a.axiom, a.tuple) < std::tie(b.axiom, b.tuple);
  });
  for (const auto& x : v)
    out << noun << " " << x.axiom << " violated at " << tup(x.tuple) << ": residual "
        << vec_str(x.residual) << "\n";
  if (rep.passed) {
    out << label << ": passed\n";
    return 0;
  }
  out << label << ": failed (" << count_str(v.size()) << ")\n";
  return 1;
}

void print_rep_lines(std::ostream& out, const RepReport& rep, const std::string& prefix) {
  std::vector<RepViolation> v = rep.violations;
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::tie(a.condition, a.tuple) < std::tie(b.condition, b.tuple);
  });
  for (const auto& x : v)
    out << prefix << "condition " << x.condition << " violated at " << tup(x.tuple)
        << ": residual " << mat_str(x.residual) << "\n";
}

int print_rep_report(std::ostream& out, const RepReport& rep, const char* label) {
  print_rep_lines(out, rep, "");
  if (rep.passed) {
    out << label << ": passed\n";
    return 0;
  }
  out << label << ": failed (" << count_str(rep.violations.size()) << ")\n";
  return 1;
}

int print_mp_report(std::ostream& out, const MpReport& rep, const char* rep_h_label,
                    const char* rep_g_label, const char* label) {
  for (const auto* part : {&rep.rep_h, &rep.rep_g}) {
    const char* name = part == &rep.rep_h ? rep_h_label : rep_g_label;
    print_rep_lines(out, *part, std::string(name) + " ");
    out << name << ": " << (part->passed ? "passed" : "failed") << "\n";
  }
  std::vector<MpViolation> v = rep.violations;
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::tie(a.condition, a.g_idx, a.h_idx) < std::tie(b.condition, b.g_idx, b.h_idx);
  });
  for (const auto& x : v)
    out << "condition " << x.condition << " violated at g " << tup(x.g_idx) << ", h "
        << tup(x.h_idx) << ": residual " << vec_str(x.residual) << "\n";
  const std::size_t total =
      rep.rep_h.violations.size() + rep.rep_g.violations.size() + v.size();
  if (rep.passed) {
    out << label << ": passed\n";
    return 0;
  }
  out << label << ": failed (" << count_str(total) << ")\n";
  return 1;
}

int print_dm_report(std::ostream& out, const DmReport& rep) {
  std::vector<DmViolation> v = rep.violations;
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::tie(a.condition, a.idx) < std::tie(b.condition, b.idx);
  });
  for (const auto& x : v)
    out << "condition " << x.condition << " violated at " << tup(x.idx) << ": residual "
        << vec_str(x.residual) << "\n";
  if (rep.passed) {
    out << "deformation map: passed\n";
    return 0;
  }
  out << "deformation map: failed (" << count_str(v.size()) << ")\n";
  return 1;
}

void print_census(std::ostream& out, const ComplementCensus& census) {
  out << "complements: " << census.maps.size() << "\n";
  std::vector<std::vector<std::size_t>> classes = census.classes;
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  out << "equivalence classes: " << classes.size() << "\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "class " << c + 1 << ": maps";
    for (std::size_t i : classes[c]) out << " " << i + 1;
    out << "\n";
  }
  out << "factorization index: " << census.factorization_index << "\n";
  for (std::size_t i = 0; i < census.maps.size(); ++i) {
    out << "map " << i + 1 << ":\n";
    const Mat& r = census.maps[i].r;
    for (std::size_t row = 0; row < r.rows(); ++row) out << "row " << row_str(r, row) << "\n";
  }
}

// Shared preamble for every command that consumes a matched pair: check the
// two algebras, then the pair, printing the failure and returning nonzero if
// anything is broken; on success mp comes back validated.
int ensure_pair(std::ostream& out, MatchedPair& mp) {
  AxiomReport ga = check_ly_axioms(mp.g);
  if (!ga.passed) {
    out << "algebra g fails:\n";
    return print_axioms(out, ga, "axiom", "axioms");
  }
  mp.g = validate_ly(std::move(mp.g));
  AxiomReport ha = check_ly_axioms(mp.h);
  if (!ha.passed) {
    out << "algebra h fails:\n";
    return print_axioms(out, ha, "axiom", "axioms");
  }
  mp.h = validate_ly(std::move(mp.h));
  MpReport rep = check_matched_pair(mp);
  if (!rep.passed)
    return print_mp_report(out, rep, "rep (h; rho, mu)", "rep (g; psi, nu)", "matched pair");
  mp = validate_matched_pair(std::move(mp));
  return 0;
}

int ensure_lts_pair(std::ostream& out, LtsMatchedPair& mp) {
  AxiomReport ga = check_lts(mp.g);
  if (!ga.passed) {
    out << "triple system g fails:\n";
    return print_axioms(out, ga, "identity", "identities");
  }
  mp.g = validate_lts(std::move(mp.g));
  AxiomReport ha = check_lts(mp.h);
  if (!ha.passed) {
    out << "triple system h fails:\n";
    return print_axioms(out, ha, "identity", "identities");
  }
  mp.h = validate_lts(std::move(mp.h));
  MpReport rep = check_lts_matched_pair(mp);
  if (!rep.passed)
    return print_mp_report(out, rep, "rep (h; mu)", "rep (g; nu)", "lts matched pair");
  mp = validate_lts_matched_pair(std::move(mp));
  return 0;
}

void pair_header(std::ostream& out, const MatchedPair& mp, const char* comment = "") {
  out << comment << "matched pair: g dim " << mp.g.dim << ", h dim " << mp.h.dim << " over "
      << mp.g.field.str() << "\n";
}

bool cochains_equal(const Field& f, const Cochain& a, const Cochain& b) {
  return cochain_is_zero(add_cochains(a, scale_cochain(f.integer(-1), b)));
}

// First nonzero column of each block of a degree-2 residual, decoded back to
// 1-based input tuples.
void print_residual_witness(std::ostream& out, const Cochain& res, std::size_t hdim) {
  for (std::size_t t = 0; t < res.fI.cols(); ++t) {
    Vec col = res.fI.column(t);
    if (!is_zero_vec(col)) {
      auto [i, j] = wedge_pair(t, hdim);
      out << "binary part at (" << i + 1 << ", " << j + 1 << "): " << vec_str(col) << "\n";
      break;
    }
  }
  for (std::size_t u = 0; u < res.fII.cols(); ++u) {
    Vec col = res.fII.column(u);
    if (!is_zero_vec(col)) {
      auto [i, j] = wedge_pair(u / hdim, hdim);
      out << "ternary part at (" << i + 1 << ", " << j + 1 << ", " << u % hdim + 1
          << "): " << vec_str(col) << "\n";
      break;
    }
  }
}

void print_dims(std::ostream& out, const std::vector<std::pair<int, std::size_t>>& dims) {
  for (const auto& [deg, d] : dims) out << "H^" << deg << " = " << d << "\n";
}

// ---------------------------------------------------------------- commands

// check-ly and friends accept either top-level entries or one named section.
std::string single_section(const Bundle& b) {
  if (b.algebras.count("")) return "";
  if (b.algebras.size() == 1) return b.algebras.begin()->first;
  if (b.algebras.empty()) throw input_error("the input has no algebra");
  throw input_error("several algebra sections; expected a single algebra");
}

int cmd_check_ly(const Bundle& b, std::ostream& out) {
  LieYamagutiAlgebra a = assemble_algebra(b, single_section(b));
  out << "algebra: dim " << a.dim << " over " << a.field.str() << "\n";
  return print_axioms(out, check_ly_axioms(a), "axiom", "axioms");
}

int cmd_mc_check(const Bundle& b, std::ostream& out) {
  LieYamagutiAlgebra a = assemble_algebra(b, single_section(b));
  out << "algebra: dim " << a.dim << " over " << a.field.str() << "\n";
  const bool flat = mc_check_pi(a);
  AxiomReport rep = check_ly_axioms(a);
  if (flat != rep.passed)
    throw math_error("mc-check: the squared structure element disagrees with the axiom scan");
  if (flat) {
    out << "Maurer-Cartan: pi diamond pi = 0\n";
    return 0;
  }
  print_axioms(out, rep, "axiom", "witnesses");
  return 1;
}

int cmd_check_rep(const Bundle& b, std::ostream& out) {
  Representation r = assemble_representation(b);
  out << "module: dim " << r.repdim << " over algebra dim " << r.alg.dim << ", "
      << r.alg.field.str() << "\n";
  AxiomReport arep = check_ly_axioms(r.alg);
  if (!arep.passed) {
    out << "underlying algebra fails:\n";
    return print_axioms(out, arep, "axiom", "axioms");
  }
  r.alg = validate_ly(std::move(r.alg));
  return print_rep_report(out, check_representation(r), "representation");
}

int cmd_check_mp(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  pair_header(out, mp);
  AxiomReport ga = check_ly_axioms(mp.g);
  if (!ga.passed) {
    out << "algebra g fails:\n";
    return print_axioms(out, ga, "axiom", "axioms");
  }
  mp.g = validate_ly(std::move(mp.g));
  AxiomReport ha = check_ly_axioms(mp.h);
  if (!ha.passed) {
    out << "algebra h fails:\n";
    return print_axioms(out, ha, "axiom", "axioms");
  }
  mp.h = validate_ly(std::move(mp.h));
  return print_mp_report(out, check_matched_pair(mp), "rep (h; rho, mu)", "rep (g; psi, nu)",
                         "matched pair");
}

int cmd_bicrossed(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp, "# bicrossed product of ");
  out << serialize_algebra(bicrossed(mp));
  return 0;
}

int cmd_canonical_mp(const Bundle& b, std::ostream& out) {
  Inclusion inc = assemble_inclusion(b);
  AxiomReport arep = check_ly_axioms(inc.E);
  if (!arep.passed) {
    out << "ambient algebra fails:\n";
    return print_axioms(out, arep, "axiom", "axioms");
  }
  inc.E = validate_ly(std::move(inc.E));
  if (!check_factorization(inc.E, inc.g_span, inc.h_span, true)) {
    out << "factorization: not strong\n";
    return 1;
  }
  CanonicalPair cp = canonical_matched_pair(inc);
  out << "# canonical pair of an ambient algebra, dim " << inc.E.dim << " over "
      << inc.E.field.str() << "\n";
  out << serialize_matched_pair(cp.pair);
  out << serialize_map("change", cp.change);
  return 0;
}

int cmd_check_defmap(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  Mat r = take_map(b, "r", mp.g.dim, mp.h.dim);
  return print_dm_report(out, check_deformation_map(mp, r));
}

int cmd_enumerate_defmaps(const Bundle& b, std::ostream& out, const RunOptions& opts) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp, opts.budget);
  out << maps.size() << " deformation maps\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    out << "map " << i + 1 << ":\n";
    for (std::size_t row = 0; row < maps[i].r.rows(); ++row)
      out << "row " << row_str(maps[i].r, row) << "\n";
  }
  return 0;
}

int cmd_classify_complements(const Bundle& b, std::ostream& out, const RunOptions& opts) {
  Inclusion inc = assemble_inclusion(b);
  AxiomReport arep = check_ly_axioms(inc.E);
  if (!arep.passed) {
    out << "ambient algebra fails:\n";
    return print_axioms(out, arep, "axiom", "axioms");
  }
  inc.E = validate_ly(std::move(inc.E));
  out << "ambient: dim " << inc.E.dim << " over " << inc.E.field.str() << ", spans g "
      << inc.g_span.size() << ", h " << inc.h_span.size() << "\n";
  print_census(out, classify_complements(inc, opts.budget));
  return 0;
}

int cmd_cohomology(const Bundle& b, std::ostream& out, const RunOptions& opts) {
  Representation r = assemble_representation(b);
  out << "module: dim " << r.repdim << " over algebra dim " << r.alg.dim << ", "
      << r.alg.field.str() << "\n";
  AxiomReport arep = check_ly_axioms(r.alg);
  if (!arep.passed) {
    out << "underlying algebra fails:\n";
    return print_axioms(out, arep, "axiom", "axioms");
  }
  r.alg = validate_ly(std::move(r.alg));
  RepReport rrep = check_representation(r);
  if (!rrep.passed) return print_rep_report(out, rrep, "representation");
  r = validate_representation(std::move(r));
  print_dims(out, cohomology_dims(r, opts.max_degree));
  return 0;
}

int cmd_defmap_cohomology(const Bundle& b, std::ostream& out, const RunOptions& opts) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  Mat r = take_map(b, "r", mp.g.dim, mp.h.dim);
  DmReport drep = check_deformation_map(mp, r);
  if (!drep.passed) return print_dm_report(out, drep);
  print_dims(out, defmap_cohomology_dims(validate_deformation_map(mp, r), opts.max_degree));
  return 0;
}

int cmd_derived_brackets(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  VData vd = build_vdata(mp);
  out << "ambient algebra: dim " << vd.big.dim << "\n";
  LInftyStructure ls = derived_brackets(vd);
  const Field& f = mp.g.field;
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  for (std::size_t k = 4; k <= 5; ++k) {
    std::vector<Cochain> args;
    for (std::size_t t = 0; t < k; ++t) {
      Cochain c = zero_cochain(f, m, n, 1);
      c.f.at(t % n, t % m) = f.one();
      args.push_back(std::move(c));
    }
    if (!cochain_is_zero(linfty_l(ls, args)))
      throw math_error("derived-brackets: l_" + std::to_string(k) +
                       " fails to vanish on unit probes");
    out << "l_" << k << " on unit probes: zero\n";
  }
  out << "derived brackets: assembled\n";
  return 0;
}

int cmd_mc_equation(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  Mat r = take_map(b, "r", mp.g.dim, mp.h.dim);
  LInftyStructure ls = derived_brackets(build_vdata(mp));
  Cochain res = mc_equation(ls, r);
  if (cochain_is_zero(res)) {
    out << "MC residual: zero\n";
    return 0;
  }
  out << "MC residual: nonzero\n";
  print_residual_witness(out, res, mp.h.dim);
  return 1;
}

int cmd_twist_check(const Bundle& b, std::ostream& out) {
  MatchedPair mp = assemble_matched_pair(b);
  if (int rc = ensure_pair(out, mp)) return rc;
  pair_header(out, mp);
  Mat r = take_map(b, "r", mp.g.dim, mp.h.dim);
  Mat rp = b.maps.count("rp") ? take_map(b, "rp", mp.g.dim, mp.h.dim)
                              : Mat(mp.g.field, mp.g.dim, mp.h.dim);
  DmReport drep = check_deformation_map(mp, r);
  if (!drep.passed) {
    out << "map r is not a deformation map:\n";
    return print_dm_report(out, drep);
  }
  out << "deformation map r: valid\n";
  DeformationMap dm = validate_deformation_map(mp, r);
  LInftyStructure ls = derived_brackets(build_vdata(mp));
  Cochain lhs = mc_equation(twist(ls, dm), rp);
  Cochain rhs = mc_equation(ls, r + rp);
  if (!cochains_equal(mp.g.field, lhs, rhs))
    throw math_error("twist-check: twisted residual at r' differs from the residual at r + r'");
  out << "twist identity at r': holds\n";
  if (cochain_is_zero(lhs)) {
    out << "residual after twist: zero\n";
    return 0;
  }
  out << "residual after twist: nonzero\n";
  print_residual_witness(out, lhs, mp.h.dim);
  return 1;
}

int cmd_lts_check(const Bundle& b, std::ostream& out) {
  LieTripleSystem s = assemble_lts(b, single_section(b));
  out << "triple system: dim " << s.dim << " over " << s.field.str() << "\n";
  return print_axioms(out, check_lts(s), "identity", "identities");
}

int cmd_lts_check_mp(const Bundle& b, std::ostream& out) {
  LtsMatchedPair mp = assemble_lts_matched_pair(b);
  out << "lts matched pair: g dim " << mp.g.dim << ", h dim " << mp.h.dim << " over "
      << mp.g.field.str() << "\n";
  AxiomReport ga = check_lts(mp.g);
  if (!ga.passed) {
    out << "triple system g fails:\n";
    return print_axioms(out, ga, "identity", "identities");
  }
  mp.g = validate_lts(std::move(mp.g));
  AxiomReport ha = check_lts(mp.h);
  if (!ha.passed) {
    out << "triple system h fails:\n";
    return print_axioms(out, ha, "identity", "identities");
  }
  mp.h = validate_lts(std::move(mp.h));
  return print_mp_report(out, check_lts_matched_pair(mp), "rep (h; mu)", "rep (g; nu)",
                         "lts matched pair");
}

int cmd_lts_bicrossed(const Bundle& b, std::ostream& out) {
  LtsMatchedPair mp = assemble_lts_matched_pair(b);
  if (int rc = ensure_lts_pair(out, mp)) return rc;
  out << "# bicrossed product of lts matched pair: g dim " << mp.g.dim << ", h dim "
      << mp.h.dim << " over " << mp.g.field.str() << "\n";
  out << serialize_lts(lts_bicrossed(mp));
  return 0;
}

int cmd_lts_check_defmap(const Bundle& b, std::ostream& out) {
  LtsMatchedPair mp = assemble_lts_matched_pair(b);
  if (int rc = ensure_lts_pair(out, mp)) return rc;
  out << "lts matched pair: g dim " << mp.g.dim << ", h dim " << mp.h.dim << " over "
      << mp.g.field.str() << "\n";
  Mat r = take_map(b, "r", mp.g.dim, mp.h.dim);
  return print_dm_report(out, check_lts_deformation_map(mp, r));
}

int cmd_lts_classify(const Bundle& b, std::ostream& out, const RunOptions& opts) {
  LieTripleSystem E = assemble_lts(b, ambient_name(b));
  AxiomReport arep = check_lts(E);
  if (!arep.passed) {
    out << "ambient triple system fails:\n";
    return print_axioms(out, arep, "identity", "identities");
  }
  E = validate_lts(std::move(E));
  std::vector<Vec> g_span = take_span(b, "g", E.dim);
  std::vector<Vec> h_span = take_span(b, "h", E.dim);
  out << "ambient triple system: dim " << E.dim << " over " << E.field.str() << ", spans g "
      << g_span.size() << ", h " << h_span.size() << "\n";
  print_census(out, classify_lts_complements(E, g_span, h_span, opts.budget));
  return 0;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "check-ly",        "mc-check",           "check-rep",
      "check-mp",        "bicrossed",          "canonical-mp",
      "check-defmap",    "enumerate-defmaps",  "classify-complements",
      "cohomology",      "defmap-cohomology",  "derived-brackets",
      "mc-equation",     "twist-check",        "lts-check",
      "lts-check-mp",    "lts-bicrossed",      "lts-check-defmap",
      "lts-classify"};
  return names;
}

int run_command(const std::string& command, std::istream& in, std::ostream& out,
                const RunOptions& opts) {
  try {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
      out << "error: unknown command '" << command << "'\n";
      return 2;
    }
    const Field* hint = opts.field ? &*opts.field : nullptr;
    Bundle b = parse_bundle(in, hint);
    if (command == "check-ly") return cmd_check_ly(b, out);
    if (command == "mc-check") return cmd_mc_check(b, out);
    if (command == "check-rep") return cmd_check_rep(b, out);
    if (command == "check-mp") return cmd_check_mp(b, out);
    if (command == "bicrossed") return cmd_bicrossed(b, out);
    if (command == "canonical-mp") return cmd_canonical_mp(b, out);
    if (command == "check-defmap") return cmd_check_defmap(b, out);
    if (command == "enumerate-defmaps") return cmd_enumerate_defmaps(b, out, opts);
    if (command == "classify-complements") return cmd_classify_complements(b, out, opts);
    if (command == "cohomology") return cmd_cohomology(b, out, opts);
    if (command == "defmap-cohomology") return cmd_defmap_cohomology(b, out, opts);
    if (command == "derived-brackets") return cmd_derived_brackets(b, out);
    if (command == "mc-equation") return cmd_mc_equation(b, out);
    if (command == "twist-check") return cmd_twist_check(b, out);
    if (command == "lts-check") return cmd_lts_check(b, out);
    if (command == "lts-check-mp") return cmd_lts_check_mp(b, out);
    if (command == "lts-bicrossed") return cmd_lts_bicrossed(b, out);
    if (command == "lts-check-defmap") return cmd_lts_check_defmap(b, out);
    if (command == "lts-classify") return cmd_lts_classify(b, out, opts);
    out << "error: unknown command '" << command << "'\n";
    return 2;
  } catch (const input_error& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace liya
