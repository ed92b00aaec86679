#include "trusslab/structure_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trusslab {

using ordered_json = nlohmann::ordered_json;

char const* file_kind_name(FileKind k) {
  switch (k) {
    case FileKind::semi_truss: return "semi-truss";
    case FileKind::brace_like: return "brace-like";
    case FileKind::skew_truss: return "skew-truss";
    case FileKind::semi_brace: return "semi-brace";
    case FileKind::almost: return "almost";
    case FileKind::semigroup: return "semigroup";
    case FileKind::group: return "group";
  }
  return "unknown";
}

std::optional<FileKind> file_kind_from_name(std::string_view s) {
  if (s == "semi-truss") return FileKind::semi_truss;
  if (s == "brace-like") return FileKind::brace_like;
  if (s == "skew-truss") return FileKind::skew_truss;
  if (s == "semi-brace") return FileKind::semi_brace;
  if (s == "almost") return FileKind::almost;
  if (s == "semigroup") return FileKind::semigroup;
  if (s == "group") return FileKind::group;
  return std::nullopt;
}

namespace {

struct FieldRule {
  bool add, mul, lambda, sigma, iota;
};

FieldRule rule_for(FileKind k) {
  switch (k) {
    case FileKind::semi_truss:
    case FileKind::brace_like: return {true, true, true, false, false};
    case FileKind::skew_truss: return {true, true, false, true, false};
    case FileKind::semi_brace: return {true, true, false, false, false};
    case FileKind::almost: return {true, true, false, false, true};
    case FileKind::semigroup: return {true, false, false, false, false};
    case FileKind::group: return {false, true, false, false, false};
  }
  return {};
}

int read_entry(ordered_json const& cell, int order, std::string const& path) {
  if (!cell.is_number_integer())
    throw Error(Errc::syntax, path + " is not an integer");
  long long v = cell.get<long long>();
  if (v < 0 || v >= order) throw Error(Errc::range, path + " out of range");
  return static_cast<int>(v);
}

BinOpTable read_matrix(ordered_json const& j, int order, std::string const& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != order)
    throw Error(Errc::range, name + " must be a " + std::to_string(order) + "x" +
                                 std::to_string(order) + " matrix");
  BinOpTable t(order);
  for (int i = 0; i < order; ++i) {
    auto const& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw Error(Errc::range, name + "[" + std::to_string(i) + "] must have " +
                                   std::to_string(order) + " entries");
    for (int k = 0; k < order; ++k)
      t.set(i, k, read_entry(row[k], order,
                             name + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return t;
}

SelfMap read_map(ordered_json const& j, int order, std::string const& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != order)
    throw Error(Errc::range, name + " must be a length-" + std::to_string(order) + " array");
  std::vector<Element> img(order);
  for (int i = 0; i < order; ++i)
    img[i] = read_entry(j[i], order, name + "[" + std::to_string(i) + "]");
  return SelfMap(std::move(img));
}

ordered_json matrix_json(BinOpTable const& t) {
  ordered_json rows = ordered_json::array();
  for (auto const& r : t.rows()) rows.push_back(r);
  return rows;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::syntax, e.what());
  }
  if (!j.is_object()) throw Error(Errc::syntax, "top-level value must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(Errc::kind_field_mismatch, "missing or non-string \"kind\"");
  auto kind = file_kind_from_name(j["kind"].get<std::string>());
  if (!kind)
    throw Error(Errc::kind_field_mismatch,
                "unknown kind \"" + j["kind"].get<std::string>() + "\"");
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw Error(Errc::syntax, "missing or non-integer \"order\"");
  long long order = j["order"].get<long long>();
  if (order < 1 || order > 4096) throw Error(Errc::range, "order out of range");

  StructureFile f;
  f.kind = *kind;
  f.order = static_cast<int>(order);
  auto rule = rule_for(*kind);

  auto check_presence = [&](char const* name, bool required) {
    bool present = j.contains(name);
    if (required && !present)
      throw Error(Errc::kind_field_mismatch, std::string("kind \"") + file_kind_name(*kind) +
                                                 "\" requires field \"" + name + "\"");
    if (!required && present)
      throw Error(Errc::kind_field_mismatch, std::string("kind \"") + file_kind_name(*kind) +
                                                 "\" does not take field \"" + name + "\"");
  };
  check_presence("add", rule.add);
  check_presence("mul", rule.mul);
  check_presence("lambda", rule.lambda);
  check_presence("sigma", rule.sigma);
  check_presence("iota", rule.iota);

  if (rule.add) f.add = read_matrix(j["add"], f.order, "add");
  if (rule.mul) f.mul = read_matrix(j["mul"], f.order, "mul");
  if (rule.lambda) {
    auto m = read_matrix(j["lambda"], f.order, "lambda");
    f.lambda = LambdaFamily::from_rows(m.rows());
  }
  if (rule.sigma) f.sigma = read_map(j["sigma"], f.order, "sigma");
  if (rule.iota) f.iota = read_map(j["iota"], f.order, "iota");

  if (j.contains("labels")) {
    auto const& labels = j["labels"];
    if (!labels.is_array() || static_cast<int>(labels.size()) != f.order)
      throw Error(Errc::range, "labels must be a length-" + std::to_string(f.order) + " array");
    for (auto const& l : labels) {
      if (!l.is_string()) throw Error(Errc::syntax, "labels entries must be strings");
      f.labels.push_back(l.get<std::string>());
    }
  }
  return f;
}

StructureFile load_structure(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string serialize_structure(StructureFile const& s) {
  ordered_json j;
  j["kind"] = file_kind_name(s.kind);
  j["order"] = s.order;
  if (!s.labels.empty()) j["labels"] = s.labels;
  if (s.add) j["add"] = matrix_json(*s.add);
  if (s.mul) j["mul"] = matrix_json(*s.mul);
  if (s.lambda) {
    ordered_json rows = ordered_json::array();
    for (auto const& r : s.lambda->rows()) rows.push_back(r);
    j["lambda"] = rows;
  }
  if (s.sigma) j["sigma"] = s.sigma->image;
  if (s.iota) j["iota"] = s.iota->image;
  return j.dump(2) + "\n";
}

namespace {

void need(bool ok, char const* what) {
  if (!ok) throw Error(Errc::kind_field_mismatch, what);
}

}  // namespace

LeftSemiTruss to_semi_truss(StructureFile const& f) {
  need(f.add && f.mul && f.lambda, "structure does not carry add, mul and lambda");
  return {*f.add, *f.mul, *f.lambda};
}

BraceLikeSemiTruss to_brace_like(StructureFile const& f) {
  need(f.add && f.mul && f.lambda, "structure does not carry add, mul and lambda");
  return {*f.add, *f.mul, *f.lambda};
}

SkewLeftTruss to_skew_truss(StructureFile const& f) {
  need(f.add && f.mul && f.sigma, "structure does not carry add, mul and sigma");
  return {*f.add, *f.mul, *f.sigma};
}

LeftSemiBrace to_semi_brace(StructureFile const& f) {
  need(f.add && f.mul, "structure does not carry add and mul");
  return {*f.add, *f.mul};
}

AlmostLeftSemiBrace to_almost(StructureFile const& f) {
  need(f.add && f.mul && f.iota, "structure does not carry add, mul and iota");
  return {*f.add, *f.mul, *f.iota};
}

StructureFile to_structure_file(LeftSemiTruss const& t, std::vector<std::string> labels) {
  return {FileKind::semi_truss, t.add.size(), std::move(labels),
          t.add,                t.mul,        t.lambda,
          std::nullopt,         std::nullopt};
}

StructureFile to_structure_file(BraceLikeSemiTruss const& t, std::vector<std::string> labels) {
  return {FileKind::brace_like, t.add.size(), std::move(labels),
          t.add,                t.mul,        t.lambda,
          std::nullopt,         std::nullopt};
}

StructureFile to_structure_file(SkewLeftTruss const& t, std::vector<std::string> labels) {
  return {FileKind::skew_truss, t.add.size(), std::move(labels), t.add,
          t.mul,                std::nullopt, t.sigma,           std::nullopt};
}

StructureFile to_structure_file(LeftSemiBrace const& s, std::vector<std::string> labels) {
  return {FileKind::semi_brace, s.add.size(),  std::move(labels), s.add,
          s.mul,                std::nullopt, std::nullopt,      std::nullopt};
}

StructureFile to_structure_file(AlmostLeftSemiBrace const& a, std::vector<std::string> labels) {
  return {FileKind::almost, a.add.size(), std::move(labels), a.add,
          a.mul,            std::nullopt, std::nullopt,      a.iota};
}

StructureFile semigroup_file(BinOpTable const& op, std::vector<std::string> labels) {
  return {FileKind::semigroup, op.size(),    std::move(labels), op,
          std::nullopt,        std::nullopt, std::nullopt,      std::nullopt};
}

StructureFile group_file(BinOpTable const& op, std::vector<std::string> labels) {
  return {FileKind::group, op.size(),    std::move(labels), std::nullopt,
          op,              std::nullopt, std::nullopt,      std::nullopt};
}

std::string report_to_json(VerificationReport const& r, bool with_elapsed) {
  ordered_json j;
  j["subject"] = r.subject();
  j["pass"] = r.passed();
  ordered_json checks = ordered_json::array();
  for (auto const& c : r.checks()) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["witness"] = c.witness;
    if (!c.note.empty()) cj["note"] = c.note;
    if (with_elapsed) cj["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string solution_to_json(SolutionMap const& r) {
  ordered_json j;
  j["order"] = r.size();
  j["out1"] = matrix_json(r.out1);
  j["out2"] = matrix_json(r.out2);
  return j.dump(2) + "\n";
}

}  // namespace trusslab
