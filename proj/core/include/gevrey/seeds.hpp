#pragma once

#include <map>
#include <string>

#include "gevrey/rat.hpp"

namespace gevrey {

// Opaque transcendental constant. Gamma and InverseGamma points are kept
// in (0, 1]; Rho symbols are basis elements of a rho-table.
struct Seed {
  enum class Kind { Gamma, InverseGamma, Rho };
  Kind kind = Kind::Gamma;
  Rat point;
  int index = 0;  // derivative order for Gamma, basis index for Rho

  friend bool operator<(const Seed& a, const Seed& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.point != b.point) return a.point < b.point;
    return a.index < b.index;
  }
  friend bool operator==(const Seed& a, const Seed& b) {
    return a.kind == b.kind && a.point == b.point && a.index == b.index;
  }
};

std::string to_string(const Seed& s);

// rational + sum of c_i * seed_i; zero entries are never stored.
class SeedCombo {
 public:
  SeedCombo() = default;
  SeedCombo(const Rat& r) : rational_(r) {}  // NOLINT
  SeedCombo(long r) : rational_(r) {}        // NOLINT
  static SeedCombo symbol(const Seed& s, const Rat& c = 1);

  const Rat& rational() const { return rational_; }
  const std::map<Seed, Rat>& seeds() const { return seeds_; }
  bool is_zero() const { return rational_ == 0 && seeds_.empty(); }
  bool is_rational() const { return seeds_.empty(); }

  SeedCombo& operator+=(const SeedCombo& o);
  SeedCombo& operator-=(const SeedCombo& o);
  SeedCombo& operator*=(const Rat& s);
  friend SeedCombo operator+(SeedCombo a, const SeedCombo& b) { return a += b; }
  friend SeedCombo operator-(SeedCombo a, const SeedCombo& b) { return a -= b; }
  friend SeedCombo operator*(SeedCombo a, const Rat& s) { return a *= s; }
  friend SeedCombo operator*(const Rat& s, SeedCombo a) { return a *= s; }
  friend SeedCombo operator-(SeedCombo a) { return a *= Rat(-1); }
  friend bool operator==(const SeedCombo& a, const SeedCombo& b) {
    return a.rational_ == b.rational_ && a.seeds_ == b.seeds_;
  }

 private:
  Rat rational_;
  std::map<Seed, Rat> seeds_;
};

std::string to_string(const SeedCombo& c);

// Gamma^{(i)}(a) reduced to seeds at the representative of a in (0, 1]
// through Gamma^{(i)}(a+1) = a Gamma^{(i)}(a) + i Gamma^{(i-1)}(a).
// Throws at the poles a in {0, -1, -2, ...}.
SeedCombo gamma_value(const Rat& a, int derivative = 0);
// 1/Gamma(a); zero at nonpositive integers.
SeedCombo inverse_gamma_value(const Rat& a);
SeedCombo rho_symbol(const Rat& alpha, int index);

}  // namespace gevrey
