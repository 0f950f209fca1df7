#pragma once

#include <string_view>

#include "su2holevo/matrix.hpp"

namespace su2holevo {

/// A spin quantum number j >= 1/2, stored exactly as 2j.
///
/// Magnetic quantum numbers are likewise passed around as 2m. The basis of
/// the (2j+1)-dimensional space is ordered by ascending m, so index k holds
/// m = k - j.
class SpinLabel {
 public:
  /// Throws std::invalid_argument if two_j < 1.
  explicit SpinLabel(int two_j);

  /// Accepts "3/2", "2" or "1/2". Denominators other than 1 and 2 are rejected.
  static SpinLabel parse(std::string_view text);

  int two_j() const { return two_j_; }
  double value() const { return 0.5 * two_j_; }
  int dim() const { return two_j_ + 1; }
  bool is_integer() const { return two_j_ % 2 == 0; }

  /// Basis index of the state with magnetic number two_m / 2.
  int index_of(int two_m) const { return (two_m + two_j_) / 2; }
  double m_at(int index) const { return index - value(); }

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;

 private:
  int two_j_;
};

struct SpinOperators {
  ComplexMatrix x, y, z;
};

/// Sx, Sy, Sz for spin j in the m-ascending basis.
///
/// For j = 1/2 this basis is |-1/2>, |+1/2>, so the result is the Pauli
/// triple conjugated by sigma_x, not sigma / 2 itself.
SpinOperators spin_operators(SpinLabel j);

/// Pauli matrices in the qubit basis |+1/2>, |-1/2> used by the product basis.
SpinOperators pauli();

/// Total spin j + 1/2 (`plus`) or j - 1/2 (`minus`) when coupling j with a qubit.
enum class Multiplet { plus, minus };

/// Total spin of the multiplet, times two.
int multiplet_two_total(SpinLabel j, Multiplet total);

/// Expansion amplitudes of |j +- 1/2, m> = a |m - 1/2> (x) |up> + b |m + 1/2> (x) |down>.
struct CgPair {
  double a;
  double b;
};

/// Throws std::invalid_argument when two_m is not a valid z-component of the multiplet.
CgPair cg_pair(SpinLabel j, Multiplet total, int two_m);

/// Index of |m1> (x) |qubit> in the product basis: spin-j index major, qubit
/// minor, with |+1/2> (slot 0) before |-1/2> (slot 1).
int product_index(SpinLabel j, int two_m1, int qubit_slot);

/// The coupled state |j +- 1/2, m> as a 2(2j+1) column in the product basis.
ComplexMatrix coupled_vector(SpinLabel j, Multiplet total, int two_m);

/// Orthogonal projector onto a whole multiplet.
ComplexMatrix multiplet_projector(SpinLabel j, Multiplet total);

/// Total spin components J_a = S_a (x) I2 + I (x) sigma_a / 2 on the product basis.
SpinOperators total_spin_operators(SpinLabel j);

}  // namespace su2holevo
