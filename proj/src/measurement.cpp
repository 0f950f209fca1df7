#include "su2holevo/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace su2holevo {

MeasurementFrame::MeasurementFrame(double t, double y1, double y2, double y3)
    : t_(t), y1_(y1), y2_(y2), y3_(y3) {
  const double norm2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    std::ostringstream msg;
    msg << "measurement frame needs t^2 + |y|^2 = 1, got " << norm2;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix MeasurementFrame::rotation() const {
  const SpinOperators s = pauli();
  const Complex i(0.0, 1.0);
  return t_ * su2holevo::identity(2) + i * (y1_ * s.x + y2_ * s.y + y3_ * s.z);
}

BlochVector bloch_of(const MeasurementFrame& f) {
  const double t = f.t(), y1 = f.y1(), y2 = f.y2(), y3 = f.y3();
  return {2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3), t * t + y3 * y3 - y1 * y1 - y2 * y2};
}

ProjectorPair projectors(const MeasurementFrame& frame) {
  const ComplexMatrix v = frame.rotation();
  ComplexMatrix pi0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix pi1 = ComplexMatrix::Zero(2, 2);
  pi0(0, 0) = 1.0;
  pi1(1, 1) = 1.0;
  return {v * pi0 * v.adjoint(), v * pi1 * v.adjoint()};
}

ComplexMatrix n_matrix(const Su2InvariantState& s, const BlochVector& z) {
  const SpinLabel spin = s.j();
  const double j = spin.value();
  const double f = s.f();
  const double c = (2.0 * f * j + f - j) / (j * (j + 1.0) * (2.0 * j + 1.0));
  const Complex up(z.z1, z.z2);  // multiplies |m><m+1|
  const int n = spin.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = spin.m_at(k);
    out(k, k) = z.z3 * m * c;
    if (k + 1 < n) {
      const double ladder = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
      out(k, k + 1) = up * (0.5 * ladder * c);
      out(k + 1, k) = std::conj(up) * (0.5 * ladder * c);
    }
  }
  return out;
}

ComplexMatrix ConditionalEnsemble::average() const {
  if (entries.empty()) throw std::logic_error("average of an empty ensemble");
  ComplexMatrix avg = ComplexMatrix::Zero(entries.front().rho.rows(), entries.front().rho.cols());
  for (const auto& e : entries) avg += e.p * e.rho;
  return avg;
}

ConditionalEnsemble conditional_ensemble_closed(const Su2InvariantState& s,
                                                const MeasurementFrame& frame) {
  const ComplexMatrix n = n_matrix(s, bloch_of(frame));
  const ComplexMatrix flat = identity(s.j().dim()) / static_cast<double>(s.j().dim());
  return {{{0.5, flat - n}, {0.5, flat + n}}};
}

ConditionalEnsemble conditional_ensemble_numeric(const ComplexMatrix& rho_ab,
                                                 const MeasurementFrame& frame, SpinLabel j) {
  const Eigen::Index dim_a = j.dim();
  if (rho_ab.rows() != 2 * dim_a || rho_ab.cols() != 2 * dim_a) {
    std::ostringstream msg;
    msg << "conditional_ensemble_numeric: expected " << 2 * dim_a << "x" << 2 * dim_a
        << " state, got " << rho_ab.rows() << "x" << rho_ab.cols();
    throw std::invalid_argument(msg.str());
  }
  validate_density(rho_ab);

  const ProjectorPair b = projectors(frame);
  const ComplexMatrix id_a = identity(dim_a);
  ConditionalEnsemble out;
  double dropped = 0.0;
  for (const ComplexMatrix* proj : {&b.b0, &b.b1}) {
    const ComplexMatrix lifted = kron(id_a, *proj);
    const ComplexMatrix post = lifted * rho_ab * lifted;
    const double p = post.trace().real();
    if (p < kMinOutcomeProbability) {
      dropped += std::max(p, 0.0);
      continue;
    }
    out.entries.push_back({p, partial_trace_b(post, dim_a, 2) / p});
  }
  if (dropped >= 1e-12) throw std::runtime_error("conditional_ensemble_numeric: lost probability");
  if (dropped > 0.0) {
    double total = 0.0;
    for (const auto& e : out.entries) total += e.p;
    for (auto& e : out.entries) e.p /= total;
  }
  return out;
}

double ensemble_gap(const ConditionalEnsemble& a, const ConditionalEnsemble& b) {
  if (a.entries.size() != b.entries.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    gap = std::max(gap, std::abs(a.entries[k].p - b.entries[k].p));
    gap = std::max(gap, max_abs_diff(a.entries[k].rho, b.entries[k].rho));
  }
  return gap;
}

std::vector<MeasurementFrame> random_frames(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<MeasurementFrame> frames;
  frames.reserve(count);
  while (frames.size() < count) {
    const double t = gauss(rng), y1 = gauss(rng), y2 = gauss(rng), y3 = gauss(rng);
    const double norm = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
    if (norm < 1e-8) continue;
    frames.emplace_back(t / norm, y1 / norm, y2 / norm, y3 / norm);
  }
  return frames;
}

}  // namespace su2holevo
