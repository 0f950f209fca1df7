#include "su2holevo/angular.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace su2holevo {

SpinLabel::SpinLabel(int two_j) : two_j_(two_j) {
  if (two_j < 1) {
    std::ostringstream msg;
    msg << "spin label requires 2j >= 1, got 2j = " << two_j;
    throw std::invalid_argument(msg.str());
  }
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

SpinLabel SpinLabel::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SpinLabel(2 * parse_int(text));
  const int num = parse_int(text.substr(0, slash));
  const int den = parse_int(text.substr(slash + 1));
  if (den == 1) return SpinLabel(2 * num);
  if (den == 2) return SpinLabel(num);
  throw std::invalid_argument("spin must be an integer or half-integer: '" + std::string(text) +
                              "'");
}

SpinOperators spin_operators(SpinLabel j) {
  const int n = j.dim();
  const double jj = j.value() * (j.value() + 1.0);
  ComplexMatrix raise = ComplexMatrix::Zero(n, n);
  ComplexMatrix sz = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = j.m_at(k);
    sz(k, k) = m;
    // <m+1| S+ |m> = sqrt(j(j+1) - m(m+1))
    if (k + 1 < n) raise(k + 1, k) = std::sqrt(jj - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();
  const Complex half_i(0.0, 0.5);
  return {0.5 * (raise + lower), -half_i * (raise - lower), sz};
}

SpinOperators pauli() {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {x, y, z};
}

int multiplet_two_total(SpinLabel j, Multiplet total) {
  return total == Multiplet::plus ? j.two_j() + 1 : j.two_j() - 1;
}

CgPair cg_pair(SpinLabel j, Multiplet total, int two_m) {
  const int two_total = multiplet_two_total(j, total);
  if (std::abs(two_m) > two_total || (two_m + two_total) % 2 != 0) {
    std::ostringstream msg;
    msg << "2m = " << two_m << " is not a z-component of total spin " << two_total << "/2";
    throw std::invalid_argument(msg.str());
  }
  // In units of 2: (j + 1/2 +- m) / (2j + 1) = (2j + 1 +- 2m) / (2 (2j + 1)).
  const double denom = 2.0 * (j.two_j() + 1);
  const double upper = (j.two_j() + 1 + two_m) / denom;
  const double lower = (j.two_j() + 1 - two_m) / denom;
  if (total == Multiplet::plus) return {std::sqrt(upper), std::sqrt(lower)};
  return {-std::sqrt(lower), std::sqrt(upper)};
}

int product_index(SpinLabel j, int two_m1, int qubit_slot) {
  return 2 * j.index_of(two_m1) + qubit_slot;
}

ComplexMatrix coupled_vector(SpinLabel j, Multiplet total, int two_m) {
  const CgPair cg = cg_pair(j, total, two_m);
  ComplexMatrix v = ComplexMatrix::Zero(2 * j.dim(), 1);
  // Slots outside [-j, j] only occur for stretched states, where the amplitude vanishes.
  if (two_m - 1 >= -j.two_j() && two_m - 1 <= j.two_j())
    v(product_index(j, two_m - 1, 0), 0) = cg.a;
  if (two_m + 1 >= -j.two_j() && two_m + 1 <= j.two_j())
    v(product_index(j, two_m + 1, 1), 0) = cg.b;
  return v;
}

ComplexMatrix multiplet_projector(SpinLabel j, Multiplet total) {
  const int two_total = multiplet_two_total(j, total);
  ComplexMatrix p = ComplexMatrix::Zero(2 * j.dim(), 2 * j.dim());
  for (int two_m = -two_total; two_m <= two_total; two_m += 2) {
    const ComplexMatrix v = coupled_vector(j, total, two_m);
    p += v * v.adjoint();
  }
  return p;
}

SpinOperators total_spin_operators(SpinLabel j) {
  const SpinOperators s = spin_operators(j);
  const SpinOperators q = pauli();
  const ComplexMatrix id_a = identity(j.dim());
  const ComplexMatrix id_b = identity(2);
  return {kron(s.x, id_b) + 0.5 * kron(id_a, q.x), kron(s.y, id_b) + 0.5 * kron(id_a, q.y),
          kron(s.z, id_b) + 0.5 * kron(id_a, q.z)};
}

}  // namespace su2holevo
