#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pearl {

/// Stabilizer tableau of a Clifford circuit on `width` qubits: row r < width holds the
/// image of X_r under conjugation, row width + r the image of Z_r. Each row is a Hermitian
/// Pauli (x bits, z bits, sign). Updates follow the Aaronson-Gottesman rules.
class CliffordTableau {
 public:
  explicit CliffordTableau(std::size_t width)
      : width_(width), x_(2 * width * width, 0), z_(2 * width * width, 0), sign_(2 * width, 0) {
    for (std::size_t q = 0; q < width; ++q) {
      x_[index(q, q)] = 1;
      z_[index(width + q, q)] = 1;
    }
  }

  std::size_t width() const { return width_; }
  std::size_t rows() const { return 2 * width_; }

  bool x(std::size_t row, std::size_t col) const { return x_[index(row, col)] != 0; }
  bool z(std::size_t row, std::size_t col) const { return z_[index(row, col)] != 0; }
  bool sign(std::size_t row) const { return sign_[row] != 0; }

  void hadamard(std::size_t a) {
    check(a);
    for (std::size_t r = 0; r < rows(); ++r) {
      auto& xa = x_[index(r, a)];
      auto& za = z_[index(r, a)];
      sign_[r] ^= static_cast<std::uint8_t>(xa & za);
      std::swap(xa, za);
    }
  }

  void phase(std::size_t a) {
    check(a);
    for (std::size_t r = 0; r < rows(); ++r) {
      const auto xa = x_[index(r, a)];
      auto& za = z_[index(r, a)];
      sign_[r] ^= static_cast<std::uint8_t>(xa & za);
      za ^= xa;
    }
  }

  void cnot(std::size_t control, std::size_t target) {
    check(control);
    check(target);
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    for (std::size_t r = 0; r < rows(); ++r) {
      const auto xc = x_[index(r, control)];
      auto& zc = z_[index(r, control)];
      auto& xt = x_[index(r, target)];
      const auto zt = z_[index(r, target)];
      sign_[r] ^= static_cast<std::uint8_t>(xc & zt & (xt ^ zc ^ 1));
      xt ^= xc;
      zc ^= zt;
    }
  }

  void cphase(std::size_t a, std::size_t b) {
    hadamard(b);
    cnot(a, b);
    hadamard(b);
  }

  /// True when every pair of rows has the same symplectic product as the identity tableau
  /// (X_i/Z_i anticommute, everything else commutes).
  bool is_symplectic() const {
    for (std::size_t r1 = 0; r1 < rows(); ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < rows(); ++r2) {
        int product = 0;
        for (std::size_t c = 0; c < width_; ++c) {
          product ^= (x_[index(r1, c)] & z_[index(r2, c)]) ^ (z_[index(r1, c)] & x_[index(r2, c)]);
        }
        const bool expected = r2 == r1 + width_;
        if ((product != 0) != expected) return false;
      }
    }
    return true;
  }

  /// First row whose Pauli image (bits or sign) differs from `other`'s.
  std::optional<std::size_t> first_difference(const CliffordTableau& other) const {
    if (other.width_ != width_) return std::size_t{0};
    for (std::size_t r = 0; r < rows(); ++r) {
      if (sign_[r] != other.sign_[r]) return r;
      for (std::size_t c = 0; c < width_; ++c) {
        if (x_[index(r, c)] != other.x_[index(r, c)] || z_[index(r, c)] != other.z_[index(r, c)])
          return r;
      }
    }
    return std::nullopt;
  }

  /// Row as a signed Pauli string, e.g. "-XIZY".
  std::string row_string(std::size_t row) const {
    std::string out = sign(row) ? "-" : "+";
    for (std::size_t c = 0; c < width_; ++c) {
      const bool xb = x(row, c);
      const bool zb = z(row, c);
      out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
  }

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  std::size_t index(std::size_t row, std::size_t col) const { return row * width_ + col; }
  void check(std::size_t q) const {
    if (q >= width_) throw std::out_of_range("qubit slot outside tableau");
  }

  std::size_t width_;
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
  std::vector<std::uint8_t> sign_;
};

}  // namespace pearl
