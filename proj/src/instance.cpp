#include "switchopt/instance.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace switchopt {

using nlohmann::json;

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
  case ObjectiveKind::linear: return "linear";
  case ObjectiveKind::l1: return "l1";
  case ObjectiveKind::l2sq: return "l2sq";
  case ObjectiveKind::linf: return "linf";
  case ObjectiveKind::external: return "external";
  }
  return "unknown";
}

ObjectiveKind parse_objective_kind(std::string_view name) {
  if (name == "linear") return ObjectiveKind::linear;
  if (name == "l1") return ObjectiveKind::l1;
  if (name == "l2sq") return ObjectiveKind::l2sq;
  if (name == "linf") return ObjectiveKind::linf;
  throw InvalidArgument("unknown objective kind '" + std::string(name) + "'");
}

template <Scalar T>
void Instance<T>::validate() const {
  if (n == 0)
    throw InvalidArgument("dimension n must be positive");
  if (matrices.empty())
    throw InvalidArgument("at least one matrix is required");
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i].dim() != n)
      throw DimensionError("matrix " + std::to_string(i) + " has dimension " +
                           std::to_string(matrices[i].dim()) + ", expected " + std::to_string(n));
  if (a.size() != n)
    throw DimensionError("initial vector has " + std::to_string(a.size()) + " entries, expected " +
                         std::to_string(n));
  if (objective.kind == ObjectiveKind::linear && objective.c.size() != n)
    throw DimensionError("linear objective has " + std::to_string(objective.c.size()) +
                         " coefficients, expected " + std::to_string(n));
  if (objective.kind == ObjectiveKind::external && !objective.oracle)
    throw InvalidArgument("external objective has no registered oracle");
}

template struct Instance<Rational>;
template struct Instance<double>;

template <Scalar T>
Vector<T> apply_sequence(const Instance<T>& instance, const std::vector<std::size_t>& seq) {
  Vector<T> x = instance.a;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (seq[t] >= instance.m())
      throw InvalidArgument("sequence entry " + std::to_string(t) + " is " + std::to_string(seq[t]) +
                            " but only " + std::to_string(instance.m()) + " matrices exist");
    x = mat_vec(instance.matrices[seq[t]], x);
  }
  return x;
}

template Vector<Rational> apply_sequence(const Instance<Rational>&, const std::vector<std::size_t>&);
template Vector<double> apply_sequence(const Instance<double>&, const std::vector<std::size_t>&);

SchemaError::SchemaError(const std::string& message, std::string field, std::optional<std::size_t> line)
    : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)), line_(line) {}

namespace {

template <Scalar T>
T read_number(const json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return from_rational<T>(parse_rational(v.get<std::string>()));
    } catch (const InvalidArgument& e) {
      throw SchemaError(e.what(), field);
    }
  }
  if (v.is_number_integer()) {
    if (v.is_number_unsigned())
      return from_rational<T>(Rational(mpz_class(std::to_string(v.get<std::uint64_t>()))));
    return from_rational<T>(Rational(mpz_class(std::to_string(v.get<std::int64_t>()))));
  }
  if (v.is_number_float()) {
    if constexpr (is_exact_v<T>)
      throw SchemaError("non-integer JSON number in exact mode; write it as a \"p/q\" string", field);
    else
      return v.get<double>();
  }
  throw SchemaError("expected a number or \"p/q\" string", field);
}

template <Scalar T>
Vector<T> read_vector(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array())
    throw SchemaError("expected an array", field);
  if (v.size() != n)
    throw SchemaError("expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()), field);
  Vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(read_number<T>(v[i], field + "/" + std::to_string(i)));
  return out;
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw SchemaError("missing required field", std::string("/") + key);
  return *it;
}

std::size_t read_count(const json& doc, const char* key, bool allow_zero) {
  const json& v = require(doc, key);
  std::string field = std::string("/") + key;
  if (!v.is_number_integer())
    throw SchemaError("expected an integer", field);
  if (v.is_number_unsigned()) {
    auto value = v.get<std::size_t>();
    if (!allow_zero && value == 0)
      throw SchemaError("must be positive", field);
    return value;
  }
  auto value = v.get<std::int64_t>();
  if (value < 0 || (!allow_zero && value == 0))
    throw SchemaError(allow_zero ? "must be non-negative" : "must be positive", field);
  return static_cast<std::size_t>(value);
}

template <Scalar T>
Instance<T> read_body(const json& doc, std::size_t n, std::size_t m, std::size_t K) {
  Instance<T> inst;
  inst.n = n;
  inst.K = K;
  const json& mats = require(doc, "matrices");
  if (!mats.is_array() || mats.size() != m)
    throw SchemaError("expected an array of " + std::to_string(m) + " matrices", "/matrices");
  for (std::size_t l = 0; l < m; ++l) {
    std::string field = "/matrices/" + std::to_string(l);
    const json& rows = mats[l];
    if (!rows.is_array() || rows.size() != n)
      throw SchemaError("expected " + std::to_string(n) + " rows", field);
    Matrix<T> mat(n);
    for (std::size_t r = 0; r < n; ++r) {
      auto row = read_vector<T>(rows[r], n, field + "/" + std::to_string(r));
      for (std::size_t c = 0; c < n; ++c)
        mat(r, c) = std::move(row[c]);
    }
    inst.matrices.push_back(std::move(mat));
  }
  inst.a = read_vector<T>(require(doc, "a"), n, "/a");

  const json& obj = require(doc, "objective");
  if (!obj.is_object())
    throw SchemaError("expected an object", "/objective");
  const json& kind = require(obj, "kind");
  if (!kind.is_string())
    throw SchemaError("expected a string", "/objective/kind");
  auto name = kind.get<std::string>();
  if (name == "linear") {
    auto it = obj.find("c");
    if (it == obj.end())
      throw SchemaError("linear objective requires \"c\"", "/objective/c");
    inst.objective = Objective<T>::linear(read_vector<T>(*it, n, "/objective/c"));
  } else if (name == "l1") {
    inst.objective = Objective<T>::l1();
  } else if (name == "l2sq") {
    inst.objective = Objective<T>::l2sq();
  } else if (name == "linf") {
    inst.objective = Objective<T>::linf();
  } else {
    throw SchemaError("unknown objective kind '" + name + "' (expected linear, l1, l2sq, linf)",
                      "/objective/kind");
  }
  return inst;
}

std::string format_number(const Rational& v) {
  if (is_integer(v) && v.get_num().fits_slong_p())
    return v.get_num().get_str();
  return "\"" + to_string(v) + "\"";
}

std::string format_number(double v) {
  if (!std::isfinite(v))
    throw NumericError("cannot serialize non-finite value");
  std::string s = to_string(v);
  return s;
}

template <Scalar T>
std::string format_row(const Vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += format_number(v[i]);
  }
  return out + "]";
}

template <Scalar T>
std::string format_row(std::span<const T> v) {
  return format_row(Vector<T>(v.begin(), v.end()));
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; convert to a 1-based line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n')
        ++line;
    throw SchemaError(std::string("JSON syntax error: ") + e.what(), "", line);
  }
  if (!doc.is_object())
    throw SchemaError("instance must be a JSON object", "");

  std::size_t n = read_count(doc, "n", false);
  std::size_t m = read_count(doc, "m", false);
  std::size_t K = read_count(doc, "K", true);

  const json& arith = require(doc, "arithmetic");
  if (!arith.is_string())
    throw SchemaError("expected \"exact\" or \"float\"", "/arithmetic");
  auto mode = arith.get<std::string>();
  if (mode == "exact")
    return read_body<Rational>(doc, n, m, K);
  if (mode == "float")
    return read_body<double>(doc, n, m, K);
  throw SchemaError("expected \"exact\" or \"float\", found \"" + mode + "\"", "/arithmetic");
}

AnyInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

template <Scalar T>
std::string emit_instance(const Instance<T>& inst) {
  inst.validate();
  if (inst.objective.kind == ObjectiveKind::external)
    throw InvalidArgument("external objectives cannot be serialized");
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << inst.n << ",\n";
  out << "  \"m\": " << inst.m() << ",\n";
  out << "  \"K\": " << inst.K << ",\n";
  out << "  \"arithmetic\": \"" << (is_exact_v<T> ? "exact" : "float") << "\",\n";
  out << "  \"matrices\": [\n";
  for (std::size_t l = 0; l < inst.m(); ++l) {
    out << "    [";
    for (std::size_t r = 0; r < inst.n; ++r) {
      if (r)
        out << ", ";
      out << format_row(inst.matrices[l].row(r));
    }
    out << "]" << (l + 1 < inst.m() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"a\": " << format_row(inst.a) << ",\n";
  out << "  \"objective\": {\"kind\": \"" << to_string(inst.objective.kind) << "\"";
  if (inst.objective.kind == ObjectiveKind::linear)
    out << ", \"c\": " << format_row(inst.objective.c);
  out << "}\n}\n";
  return out.str();
}

template std::string emit_instance(const Instance<Rational>&);
template std::string emit_instance(const Instance<double>&);

std::string emit_instance(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return emit_instance(inst); }, instance);
}

std::string_view instance_schema_help() {
  return R"(Instance file (JSON):
  {"n": int, "m": int, "K": int >= 0,
   "arithmetic": "exact" | "float",
   "matrices": [[[num | "p/q", ...], ...], ...],   // m matrices, n x n, row-major
   "a": [num | "p/q", ...],                         // n entries
   "objective": {"kind": "linear" | "l1" | "l2sq" | "linf", "c": [...]}}
In exact mode non-integer values must be "p/q" (or decimal) strings.)";
}

template <Scalar T>
Instance<T> convert_instance(const Instance<Rational>& source) {
  Instance<T> out;
  out.n = source.n;
  out.K = source.K;
  for (const auto& m : source.matrices)
    out.matrices.push_back(convert_matrix<T>(m));
  out.a = convert_vector<T>(source.a);
  out.objective.kind = source.objective.kind;
  out.objective.c = convert_vector<T>(source.objective.c);
  out.objective.homogeneity = source.objective.homogeneity;
  if (source.objective.oracle) {
    if constexpr (is_exact_v<T>) {
      out.objective.oracle = source.objective.oracle;
    } else {
      throw InvalidArgument("cannot convert an external exact oracle to floating point");
    }
  }
  return out;
}

template Instance<Rational> convert_instance(const Instance<Rational>&);
template Instance<double> convert_instance(const Instance<Rational>&);

}  // namespace switchopt
