#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liya/graded.hpp"
#include "liya/lts.hpp"

namespace liya {

// "Q" or {"GF", "5"}; throws input_error on anything else.
Field parse_field_spec(const std::vector<std::string>& words);

// One sparse tensor line as written: 1-based indices plus a coefficient.
struct RawEntry {
  std::size_t line = 0;
  std::vector<std::size_t> idx;
  Scalar coeff;
};

struct AlgebraSection {
  std::size_t line = 0;  // where the section started, for error messages
  std::size_t dim = 0;
  bool dim_set = false;
  std::vector<RawEntry> binary;
  std::vector<RawEntry> ternary;
};

// Everything a file can carry, still unassembled.  Top-level dim/b/t lines
// land in algebras[""]; named sections come from `begin algebra <name>`.
struct Bundle {
  Field field = Field::rationals();
  bool have_field = false;     // usable (declared in the file or supplied as a hint)
  bool field_declared = false; // an explicit `field` line was seen
  std::map<std::string, AlgebraSection> algebras;
  std::size_t repdim = 0;
  bool repdim_set = false;
  std::vector<RawEntry> rho, mu, psi, nu;
  std::map<std::string, Mat> maps;
  std::map<std::string, std::vector<Vec>> spans;
};

// Line-oriented parse.  `#` starts a comment, blank lines are skipped, the
// first meaningful line must be `format 1`, and `field` must precede any
// coefficient.  A hint field stands in for a missing `field` line; a file
// that declares a different one is rejected.  All errors are input_error
// with the offending line number.
Bundle parse_bundle(std::istream& in, const Field* field_hint = nullptr);

// Assemblers: 1-based to 0-based, range checks, duplicate-entry detection,
// and antisymmetric completion in the first two bracket slots (a single
// orientation is mirrored; both orientations must agree).  Results are
// candidates -- nothing is validated here.
LieYamagutiAlgebra assemble_algebra(const Bundle& b, const std::string& name);
LieTripleSystem assemble_lts(const Bundle& b, const std::string& name);
Representation assemble_representation(const Bundle& b);
MatchedPair assemble_matched_pair(const Bundle& b);
LtsMatchedPair assemble_lts_matched_pair(const Bundle& b);
Inclusion assemble_inclusion(const Bundle& b);
Mat take_map(const Bundle& b, const std::string& name, std::size_t rows, std::size_t cols);

// The flat algebra if the file has one, otherwise the unique named section.
LieYamagutiAlgebra parse_algebra(std::istream& in);

// Canonical text: sorted entries, first two bracket indices ascending, zero
// coefficients omitted.  parse . serialize is the identity; serialize
// rejects tensors that are not antisymmetric where they should be.
std::string serialize_algebra(const LieYamagutiAlgebra& a);
std::string serialize_lts(const LieTripleSystem& s);
std::string serialize_representation(const Representation& r);
std::string serialize_matched_pair(const MatchedPair& mp);
std::string serialize_map(const std::string& name, const Mat& m);

struct RunOptions {
  std::optional<Field> field;   // --field
  std::size_t max_degree = 3;   // --max-degree
  unsigned long budget = kEnumerationBudget;  // --budget
};

const std::vector<std::string>& command_names();

// Runs one subcommand against one input file, writing the whole report to
// out.  Returns the process exit status: 0 for a passing check, 1 for a
// mathematical failure (violated identities, nonzero residuals), 2 for
// malformed input or an unknown command.
int run_command(const std::string& command, std::istream& in, std::ostream& out,
                const RunOptions& opts = {});

}  // namespace liya
