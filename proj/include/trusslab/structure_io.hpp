#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trusslab/report.hpp"
#include "trusslab/semibrace.hpp"
#include "trusslab/truss.hpp"
#include "trusslab/ybe.hpp"

namespace trusslab {

// JSON structure files.  The two-operation kinds require add and mul plus
// exactly the auxiliary field matching the kind (lambda / sigma / iota / none);
// semigroup and group records carry a single table.
enum class FileKind { semi_truss, brace_like, skew_truss, semi_brace, almost, semigroup, group };

char const* file_kind_name(FileKind k);
std::optional<FileKind> file_kind_from_name(std::string_view s);

struct StructureFile {
  FileKind kind = FileKind::semi_truss;
  int order = 0;
  std::vector<std::string> labels;  // cosmetic; empty = absent
  std::optional<BinOpTable> add;
  std::optional<BinOpTable> mul;
  std::optional<LambdaFamily> lambda;
  std::optional<SelfMap> sigma;
  std::optional<SelfMap> iota;

  bool operator==(StructureFile const&) const = default;
};

// Throws Error with code syntax / range / kind_field_mismatch; messages name
// the first violated constraint with a path such as "add[2][3] out of range".
StructureFile parse_structure(std::string_view text);
StructureFile load_structure(std::string const& path);  // io_error on unreadable file
std::string serialize_structure(StructureFile const& s);

LeftSemiTruss to_semi_truss(StructureFile const& f);
BraceLikeSemiTruss to_brace_like(StructureFile const& f);
SkewLeftTruss to_skew_truss(StructureFile const& f);
LeftSemiBrace to_semi_brace(StructureFile const& f);
AlmostLeftSemiBrace to_almost(StructureFile const& f);

StructureFile to_structure_file(LeftSemiTruss const& t, std::vector<std::string> labels = {});
StructureFile to_structure_file(BraceLikeSemiTruss const& t, std::vector<std::string> labels = {});
StructureFile to_structure_file(SkewLeftTruss const& t, std::vector<std::string> labels = {});
StructureFile to_structure_file(LeftSemiBrace const& s, std::vector<std::string> labels = {});
StructureFile to_structure_file(AlmostLeftSemiBrace const& a, std::vector<std::string> labels = {});
StructureFile semigroup_file(BinOpTable const& op, std::vector<std::string> labels = {});
StructureFile group_file(BinOpTable const& op, std::vector<std::string> labels = {});

std::string report_to_json(VerificationReport const& r, bool with_elapsed = true);
std::string solution_to_json(SolutionMap const& r);

}  // namespace trusslab
