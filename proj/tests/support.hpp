#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "pearl/gate_model.hpp"

// Shared fixtures plus a dense state-vector model of the four gate kinds. The dense model
// is the ground truth for the commutation tables and for the tableau update rules.

namespace pearl::testing {

inline PearlNecklace example1() {
  return PearlNecklace(3, {GateString::h(1), GateString::p(1), GateString::cphase(1, 2, -1),
                           GateString::cphase(2, 3, 2), GateString::cnot(3, 2, 1),
                           GateString::cnot(2, 3, 1)});
}

inline PearlNecklace source_target_pair() {
  return PearlNecklace(3, {GateString::cphase(2, 3, 1), GateString::cnot(1, 2, 1)});
}

inline PearlNecklace three_string_encoder() {
  return PearlNecklace(3, {GateString::h(3), GateString::cphase(1, 2, 1), GateString::cnot(1, 3, 0)});
}

using Complex = std::complex<double>;

/// Row-major dense operator on `qubits` qubits; qubit k is bit k of the basis index.
struct Dense {
  std::size_t qubits = 0;
  std::vector<Complex> m;

  explicit Dense(std::size_t q) : qubits(q), m(dim() * dim(), 0.0) {
    for (std::size_t i = 0; i < dim(); ++i) at(i, i) = 1.0;
  }
  std::size_t dim() const { return std::size_t{1} << qubits; }
  Complex& at(std::size_t r, std::size_t c) { return m[r * dim() + c]; }
  Complex at(std::size_t r, std::size_t c) const { return m[r * dim() + c]; }

  Dense operator*(const Dense& o) const {
    Dense out(qubits);
    for (std::size_t r = 0; r < dim(); ++r) {
      for (std::size_t c = 0; c < dim(); ++c) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dim(); ++k) sum += at(r, k) * o.at(k, c);
        out.at(r, c) = sum;
      }
    }
    return out;
  }

  Dense adjoint() const {
    Dense out(qubits);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) out.at(r, c) = std::conj(at(c, r));
    return out;
  }

  bool approx_equal(const Dense& o, double tol = 1e-9) const {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (std::abs(m[i] - o.m[i]) > tol) return false;
    return true;
  }
};

inline Dense dense_h(std::size_t q, std::size_t a) {
  Dense out(q);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t c = 0; c < out.dim(); ++c) {
    for (std::size_t r = 0; r < out.dim(); ++r) {
      if ((r ^ c) & ~(std::size_t{1} << a)) {
        out.at(r, c) = 0.0;
        continue;
      }
      const bool rb = (r >> a) & 1;
      const bool cb = (c >> a) & 1;
      out.at(r, c) = (rb && cb) ? -s : s;
    }
  }
  return out;
}

inline Dense dense_phase(std::size_t q, std::size_t a) {
  Dense out(q);
  for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) = ((i >> a) & 1) ? Complex(0, 1) : 1.0;
  return out;
}

inline Dense dense_cz(std::size_t q, std::size_t a, std::size_t b) {
  Dense out(q);
  for (std::size_t i = 0; i < out.dim(); ++i)
    out.at(i, i) = (((i >> a) & 1) && ((i >> b) & 1)) ? -1.0 : 1.0;
  return out;
}

inline Dense dense_cnot(std::size_t q, std::size_t control, std::size_t target) {
  Dense out(q);
  for (auto& v : out.m) v = 0.0;
  for (std::size_t c = 0; c < out.dim(); ++c) {
    const std::size_t r = ((c >> control) & 1) ? c ^ (std::size_t{1} << target) : c;
    out.at(r, c) = 1.0;
  }
  return out;
}

inline Dense dense_pauli(std::size_t q, std::size_t a, char which) {
  Dense out(q);
  for (auto& v : out.m) v = 0.0;
  for (std::size_t c = 0; c < out.dim(); ++c) {
    const bool bit = (c >> a) & 1;
    if (which == 'X') out.at(c ^ (std::size_t{1} << a), c) = 1.0;
    if (which == 'Z') out.at(c, c) = bit ? -1.0 : 1.0;
  }
  return out;
}

/// Dense unitary of a gate string instantiated once on 0-based qubits (1-based index - 1),
/// all inside a single frame.
inline Dense dense_gate(std::size_t q, const GateString& gate) {
  const std::size_t t = static_cast<std::size_t>(gate.target - 1);
  switch (gate.kind) {
    case GateKind::H: return dense_h(q, t);
    case GateKind::P: return dense_phase(q, t);
    case GateKind::CNOT: return dense_cnot(q, static_cast<std::size_t>(gate.source - 1), t);
    case GateKind::CPHASE: return dense_cz(q, static_cast<std::size_t>(gate.source - 1), t);
  }
  return Dense(q);
}

/// Every valid gate string of every kind on qubits 1..q (degree 0).
inline std::vector<GateString> all_gates_on(int q) {
  std::vector<GateString> out;
  for (GateKind kind : kAllKinds) {
    for (int t = 1; t <= q; ++t) {
      if (is_two_qubit(kind)) {
        for (int s = 1; s <= q; ++s)
          if (s != t) out.push_back({kind, s, t, 0});
      } else {
        out.push_back({kind, 0, t, 0});
      }
    }
  }
  return out;
}

}  // namespace pearl::testing
