#pragma once

#include "switchopt/linalg.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace switchopt {

enum class ObjectiveKind { linear, l1, l2sq, linf, external };

std::string_view to_string(ObjectiveKind kind);
ObjectiveKind parse_objective_kind(std::string_view name);

/// A convex objective f. Only ever maximized.
template <Scalar T>
struct Objective {
  ObjectiveKind kind = ObjectiveKind::l2sq;
  Vector<T> c;  // linear only
  /// f(s x) = s^d f(x) for s > 0. Absent for external oracles unless declared.
  std::optional<Rational> homogeneity;
  std::function<T(const Vector<T>&)> oracle;  // external only

  static Objective linear(Vector<T> c) { return {ObjectiveKind::linear, std::move(c), Rational(1), {}}; }
  static Objective l1() { return {ObjectiveKind::l1, {}, Rational(1), {}}; }
  static Objective l2sq() { return {ObjectiveKind::l2sq, {}, Rational(2), {}}; }
  static Objective linf() { return {ObjectiveKind::linf, {}, Rational(1), {}}; }
  static Objective external(std::function<T(const Vector<T>&)> f,
                            std::optional<Rational> degree = std::nullopt) {
    return {ObjectiveKind::external, {}, std::move(degree), std::move(f)};
  }
};

/// One instance of the switching problem: pick K matrices from `matrices`
/// (with repetition) to maximize f(T_{K-1} ... T_0 a).
template <Scalar T>
struct Instance {
  std::size_t n = 0;
  std::size_t K = 0;
  std::vector<Matrix<T>> matrices;
  Vector<T> a;
  Objective<T> objective;

  std::size_t m() const { return matrices.size(); }

  /// Throws DimensionError / InvalidArgument on inconsistent data.
  void validate() const;
};

using AnyInstance = std::variant<Instance<Rational>, Instance<double>>;

/// Returns T_{k-1} ... T_0 a where seq[0] is applied first.
template <Scalar T>
Vector<T> apply_sequence(const Instance<T>& instance, const std::vector<std::size_t>& seq);

/// Instance file parse error. `field` is a JSON pointer such as
/// "/matrices/1/0/2"; `line` is set for syntax errors.
class SchemaError : public Error {
public:
  SchemaError(const std::string& message, std::string field, std::optional<std::size_t> line = {});
  const std::string& field() const { return field_; }
  std::optional<std::size_t> line() const { return line_; }

private:
  std::string field_;
  std::optional<std::size_t> line_;
};

AnyInstance parse_instance(std::string_view text);
AnyInstance load_instance(const std::string& path);

template <Scalar T>
std::string emit_instance(const Instance<T>& instance);

std::string emit_instance(const AnyInstance& instance);

/// Short human-readable description of the instance file schema.
std::string_view instance_schema_help();

template <Scalar T>
Instance<T> convert_instance(const Instance<Rational>& source);

extern template Vector<Rational> apply_sequence(const Instance<Rational>&, const std::vector<std::size_t>&);
extern template Vector<double> apply_sequence(const Instance<double>&, const std::vector<std::size_t>&);
extern template std::string emit_instance(const Instance<Rational>&);
extern template std::string emit_instance(const Instance<double>&);
extern template Instance<Rational> convert_instance(const Instance<Rational>&);
extern template Instance<double> convert_instance(const Instance<Rational>&);

}  // namespace switchopt
