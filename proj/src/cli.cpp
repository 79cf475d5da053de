#include "mvs/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvs/dimension.hpp"
#include "mvs/independence.hpp"
#include "mvs/oracle.hpp"
#include "mvs/space_file.hpp"

namespace mvs::cli {

namespace {

/// Malformed command-line values; reported like parse errors.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

SpaceFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_space_file(buffer.str());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) {
    if (item.find_first_not_of(" \t") != std::string::npos) parts.push_back(item);
  }
  return parts;
}

Vector parse_vector(Field field, const std::string& text) {
  try {
    return Vector::parse(field, text);
  } catch (const Error& e) {
    throw ArgumentError(std::string("bad vector: ") + e.what());
  }
}

std::vector<Vector> parse_vectors(Field field, const std::string& text) {
  std::vector<Vector> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_vector(field, part));
  return out;
}

LinearMap parse_matrix(Field field, std::size_t domain, const std::string& text) {
  std::vector<Vector> rows;
  for (auto part : split(text, ';')) {
    const auto first = part.find_first_not_of(" \t");
    if (part[first] != '(') part = "(" + part + ")";
    rows.push_back(parse_vector(field, part));
  }
  for (const auto& r : rows) {
    if (r.size() != domain) {
      throw DimensionMismatch("matrix row has " + std::to_string(r.size()) + " entries, ambient is " +
                              std::to_string(domain));
    }
  }
  return LinearMap(Matrix::from_rows(field, domain, rows));
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
  const auto names = split(text, ',');
  if (names.size() != 2) throw ArgumentError("--spaces expects exactly two names, got '" + text + "'");
  return {names[0], names[1]};
}

void print_levels(std::ostream& out, const MVSpace& v) {
  for (const Level& l : v.chain()) {
    out << "level: " << l.count << " span {";
    for (const auto& row : l.subspace.rows()) out << ' ' << row.to_string();
    out << " }\n";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const SpaceFile& file, std::ostream& out) {
  out << "field: " << file.field.to_string() << "\n";
  out << "ambient: " << file.ambient << "\n";
  out << "omega: " << file.omega << "\n";
  for (const auto& s : file.spaces) {
    out << "space: " << s.name << "\n";
    print_levels(out, s.space);
    out << "dim: " << mdim(s.space) << "\n";
  }
  out << "valid: yes\n";
  return kOk;
}

int cmd_combine(const SpaceFile& file, const std::string& spaces, bool is_sum, const std::string& out_path,
                std::ostream& out) {
  const auto [a, b] = parse_pair(spaces);
  const MVSpace result = is_sum ? sum(file.get(a), file.get(b)) : intersect(file.get(a), file.get(b));
  const std::string name = a + (is_sum ? "_plus_" : "_meet_") + b;
  out << "result: " << name << "\n";
  print_levels(out, result);
  out << "dim: " << mdim(result) << "\n";
  if (!out_path.empty()) {
    SpaceFile written{file.field, file.ambient, file.omega, {{name, result}}};
    std::ofstream f(out_path);
    if (!f) throw ArgumentError("cannot write " + out_path);
    f << serialize(written);
    out << "written: " << out_path << "\n";
  }
  return kOk;
}

int cmd_mbasis(const MVSpace& v, std::ostream& out) {
  const MBasis b = find_mbasis(v);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out << "e" << i + 1 << ": " << b.vectors()[i].to_string() << " count " << b.counts()[i] << "\n";
  }
  out << "multi_index: " << to_string(multi_index(v)) << "\n";
  out << "dim: " << mdim(v) << "\n";
  return kOk;
}

int cmd_indep(const MVSpace& v, const std::vector<Vector>& xs, std::ostream& out) {
  const IndependenceResult r = is_multi_linearly_independent(v, xs);
  out << "independent: " << yes_no(r.independent) << "\n";
  if (r.linearly_dependent) {
    out << "reason: linearly dependent\n";
    return kOk;
  }
  out << "min_count: " << r.min_count << "\n";
  if (r.witness) {
    out << "witness: " << Vector(v.field(), *r.witness).to_string() << "\n";
    out << "witness_count: " << r.witness_count << "\n";
  }
  return kOk;
}

int cmd_common(const SpaceFile& file, const std::string& spaces, std::ostream& out) {
  const auto [a, b] = parse_pair(spaces);
  const MVSpace& v = file.get(a);
  const MVSpace& w = file.get(b);
  if (!theta_dominance(v, w)) throw PreconditionError("theta dominance fails for " + a + "," + b);
  const auto basis = common_mbasis(v, w);
  const MVSpace meet = intersect(v, w);
  const MVSpace plus = sum(v, w);
  out << "dominance: yes\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vector& e = basis[i];
    out << "e" << i + 1 << ": " << e.to_string() << " " << a << "=" << v.count(e) << " " << b << "=" << w.count(e)
        << " meet=" << meet.count(e) << " sum=" << plus.count(e) << "\n";
  }
  out << "mbasis_" << a << ": " << yes_no(is_mbasis(v, basis)) << "\n";
  out << "mbasis_" << b << ": " << yes_no(is_mbasis(w, basis)) << "\n";
  out << "mbasis_meet: " << yes_no(is_mbasis(meet, basis)) << "\n";
  out << "mbasis_sum: " << yes_no(is_mbasis(plus, basis)) << "\n";
  const DimensionCheck d = modular_dimension_check(v, w);
  out << "modular: " << d.lhs << " = " << d.rhs << "\n";
  return kOk;
}

int cmd_map(const MVSpace& v, const LinearMap& f, const std::string& what, std::ostream& out) {
  if (what == "image") {
    const MVSpace img = map_image(f, v);
    print_levels(out, img);
    out << "dim: " << mdim(img) << "\n";
  } else if (what == "ker" || what == "im") {
    const RestrictedMVSpace r = what == "ker" ? ker_restrict(f, v) : im_restrict(f, v);
    out << "carrier: " << r.carrier.to_string() << "\n";
    print_levels(out, r.space);
    out << "dim: " << mdim(r) << "\n";
  } else {
    const auto k = mdim(ker_restrict(f, v));
    const auto i = mdim(im_restrict(f, v));
    out << "ker_dim: " << k << "\n";
    out << "im_dim: " << i << "\n";
    out << "dim: " << mdim(v) << "\n";
    out << "holds: " << yes_no(k + i == mdim(v)) << "\n";
  }
  return kOk;
}

int cmd_oracle(const SpaceFile& file, std::ostream& out) {
  if (!file.field.is_prime()) throw PreconditionError("oracle-check needs a GF(p) space file");
  bool all_ok = true;
  auto report = [&](const std::string& what, bool ok) {
    out << "check: " << what << " " << (ok ? "ok" : "MISMATCH") << "\n";
    all_ok = all_ok && ok;
  };
  std::vector<FiniteMSet> raw;
  for (const auto& s : file.spaces) {
    raw.push_back(to_count_function(s.space));
    report(s.name + " is_mvspace", oracle::is_mvspace(raw.back()).ok);
    report(s.name + " round_trip", from_count_function(raw.back()) == s.space);
    try {
      report(s.name + " mdim", oracle::mdim(raw.back()) == mdim(s.space));
    } catch (const BudgetExceeded&) {
      out << "check: " << s.name << " mdim skipped\n";
    }
  }
  for (std::size_t i = 0; i < file.spaces.size(); ++i) {
    for (std::size_t j = i + 1; j < file.spaces.size(); ++j) {
      const auto& a = file.spaces[i];
      const auto& b = file.spaces[j];
      const std::string pair = a.name + "," + b.name;
      report(pair + " sum", to_count_function(sum(a.space, b.space)) == oracle::sum(raw[i], raw[j]));
      report(pair + " meet", to_count_function(intersect(a.space, b.space)) == mset_intersection(raw[i], raw[j]));
    }
  }
  out << "oracle: " << (all_ok ? "ok" : "mismatch") << "\n";
  return all_ok ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact computations on multi vector spaces", args.empty() ? "mvs" : args[0]);
  app.require_subcommand(1);

  std::string path;
  std::string space;
  std::string spaces;
  std::string vector_text;
  std::string vectors_text;
  std::string matrix_text;
  std::string what = "image";
  std::string out_path;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "space file")->required();
    return sub;
  };
  add("validate", "parse and validate every space");
  auto* count_cmd = add("count", "count of a vector");
  count_cmd->add_option("--space", space)->required();
  count_cmd->add_option("--vector", vector_text)->required();
  auto* dim_cmd = add("dim", "multi dimension");
  dim_cmd->add_option("--space", space)->required();
  for (const char* name : {"sum", "meet"}) {
    auto* sub = add(name, std::string(name) + " of two spaces");
    sub->add_option("--spaces", spaces)->required();
    sub->add_option("--out", out_path);
  }
  auto* mbasis_cmd = add("mbasis", "deterministic M-basis");
  mbasis_cmd->add_option("--space", space)->required();
  auto* indep_cmd = add("indep", "multi linear independence");
  indep_cmd->add_option("--space", space)->required();
  indep_cmd->add_option("--vectors", vectors_text)->required();
  auto* common_cmd = add("common-mbasis", "common M-basis of two theta-dominant spaces");
  common_cmd->add_option("--spaces", spaces)->required();
  auto* map_cmd = add("map", "linear map images, kernels and rank-nullity");
  map_cmd->add_option("--space", space)->required();
  map_cmd->add_option("--matrix", matrix_text)->required();
  map_cmd->add_option("--what", what)->check(CLI::IsMember({"image", "ker", "im", "rank-nullity"}));
  add("oracle-check", "compare chain algorithms against brute force (GF only)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    const SpaceFile file = load(path);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") return cmd_validate(file, out);
    if (cmd == "count") {
      out << "count: " << file.get(space).count(parse_vector(file.field, vector_text)) << "\n";
      return kOk;
    }
    if (cmd == "dim") {
      out << "dim: " << mdim(file.get(space)) << "\n";
      return kOk;
    }
    if (cmd == "sum" || cmd == "meet") return cmd_combine(file, spaces, cmd == "sum", out_path, out);
    if (cmd == "mbasis") return cmd_mbasis(file.get(space), out);
    if (cmd == "indep") return cmd_indep(file.get(space), parse_vectors(file.field, vectors_text), out);
    if (cmd == "common-mbasis") return cmd_common(file, spaces, out);
    if (cmd == "map") return cmd_map(file.get(space), parse_matrix(file.field, file.ambient, matrix_text), what, out);
    if (cmd == "oracle-check") return cmd_oracle(file, out);
    err << "unknown command " << cmd << "\n";
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "precondition failure: " << e.what() << "\n";
    return kPreconditionFailure;
  }
}

}  // namespace mvs::cli
