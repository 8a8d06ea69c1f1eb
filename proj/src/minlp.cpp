#include "switchopt/minlp.hpp"

#include <cstdio>
#include <sstream>

namespace switchopt {

namespace {

std::string data_number(double v) {
  if (!std::isfinite(v))
    throw NumericError("cannot export non-finite value");
  return to_string(v);
}

std::string data_number(const Rational& v) {
  std::string dec;
  if (terminating_decimal(v, dec))
    return dec;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.get_d());
  return std::string(buf) + "  # exact: " + to_string(v);
}

}  // namespace

template <Scalar T>
MinlpExport export_minlp(const Instance<T>& inst) {
  inst.validate();
  if (inst.objective.kind != ObjectiveKind::l2sq && inst.objective.kind != ObjectiveKind::linear)
    throw InvalidArgument("MINLP export supports l2sq and linear objectives, not " +
                          std::string(to_string(inst.objective.kind)));
  const bool linear = inst.objective.kind == ObjectiveKind::linear;

  std::ostringstream mod;
  mod << "# Switching sequence selection, bilinear MINLP form.\n"
      << "param n integer > 0;\n"
      << "param m integer > 0;\n"
      << "param K integer >= 0;\n"
      << "param A {1..m, 1..n, 1..n};\n"
      << "param a {1..n};\n";
  if (linear)
    mod << "param c {1..n};\n";
  mod << "\n"
      << "var x {1..n, 0..K};\n"
      << "var z {1..K, 1..m} binary;\n"
      << "\n";
  if (linear)
    mod << "maximize objective: sum {i in 1..n} c[i] * x[i,K];\n";
  else
    mod << "maximize objective: sum {i in 1..n} x[i,K]^2;\n";
  mod << "\n"
      << "subject to initial {i in 1..n}: x[i,0] = a[i];\n"
      << "subject to state {k in 1..K, i in 1..n}:\n"
      << "  x[i,k] = sum {l in 1..m, j in 1..n} A[l,i,j] * x[j,k-1] * z[k,l];\n"
      << "subject to assign {k in 1..K}: sum {l in 1..m} z[k,l] = 1;\n";

  std::ostringstream dat;
  dat << "param n := " << inst.n << ";\n"
      << "param m := " << inst.m() << ";\n"
      << "param K := " << inst.K << ";\n"
      << "\nparam A :=\n";
  for (std::size_t l = 0; l < inst.m(); ++l)
    for (std::size_t i = 0; i < inst.n; ++i)
      for (std::size_t j = 0; j < inst.n; ++j)
        dat << "  " << l + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << data_number(inst.matrices[l](i, j)) << '\n';
  dat << ";\n\nparam a :=\n";
  for (std::size_t i = 0; i < inst.n; ++i)
    dat << "  " << i + 1 << ' ' << data_number(inst.a[i]) << '\n';
  dat << ";\n";
  if (linear) {
    dat << "\nparam c :=\n";
    for (std::size_t i = 0; i < inst.n; ++i)
      dat << "  " << i + 1 << ' ' << data_number(inst.objective.c[i]) << '\n';
    dat << ";\n";
  }

  MinlpExport out;
  out.model = mod.str();
  out.data = dat.str();
  out.state_constraints = inst.n * inst.K;
  out.assignment_constraints = inst.K;
  out.binaries = inst.m() * inst.K;
  return out;
}

template MinlpExport export_minlp(const Instance<Rational>&);
template MinlpExport export_minlp(const Instance<double>&);

MinlpExport export_minlp(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return export_minlp(inst); }, instance);
}

}  // namespace switchopt
