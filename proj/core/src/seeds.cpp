#include "gevrey/seeds.hpp"

#include <vector>

namespace gevrey {

std::string to_string(const Seed& s) {
  switch (s.kind) {
    case Seed::Kind::Gamma:
      if (s.index == 0) return "Gamma(" + to_string(s.point) + ")";
      return "Gamma^(" + std::to_string(s.index) + ")(" + to_string(s.point) + ")";
    case Seed::Kind::InverseGamma:
      return "1/Gamma(" + to_string(s.point) + ")";
    case Seed::Kind::Rho:
      return "rho[" + to_string(s.point) + "](0," + std::to_string(s.index) + ")";
  }
  return "?";
}

SeedCombo SeedCombo::symbol(const Seed& s, const Rat& c) {
  SeedCombo out;
  if (c != 0) out.seeds_[s] = c;
  return out;
}

SeedCombo& SeedCombo::operator+=(const SeedCombo& o) {
  rational_ += o.rational_;
  for (const auto& [s, c] : o.seeds_) {
    auto it = seeds_.find(s);
    if (it == seeds_.end()) {
      seeds_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second == 0) seeds_.erase(it);
    }
  }
  return *this;
}

SeedCombo& SeedCombo::operator-=(const SeedCombo& o) { return *this += -SeedCombo(o); }

SeedCombo& SeedCombo::operator*=(const Rat& s) {
  if (s == 0) {
    rational_ = 0;
    seeds_.clear();
    return *this;
  }
  rational_ *= s;
  for (auto& [seed, c] : seeds_) c *= s;
  return *this;
}

std::string to_string(const SeedCombo& c) {
  std::string s;
  if (c.rational() != 0 || c.seeds().empty()) s = to_string(c.rational());
  for (const auto& [seed, coeff] : c.seeds()) {
    std::string term;
    if (coeff == 1)
      term = to_string(seed);
    else if (coeff == -1)
      term = "-" + to_string(seed);
    else
      term = to_string(coeff) + "*" + to_string(seed);
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

SeedCombo gamma_value(const Rat& a, int derivative) {
  if (derivative < 0) throw Error("negative derivative order");
  if (is_integer(a) && a <= 0) throw Error("Gamma has a pole at " + to_string(a));
  // Representative a0 in (0, 1] and the integer offset a = a0 + shift.
  Rat a0 = frac_of(a);
  if (a0 == 0) a0 = 1;
  Integer shift_z = Integer(a - a0);
  long shift = shift_z.get_si();
  auto d = static_cast<std::size_t>(derivative);
  std::vector<SeedCombo> g(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a0 == 1 && i == 0)
      g[i] = SeedCombo(1);
    else
      g[i] = SeedCombo::symbol({Seed::Kind::Gamma, a0, static_cast<int>(i)});
  }
  Rat x = a0;
  for (long t = 0; t < shift; ++t) {
    std::vector<SeedCombo> next(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      next[i] = g[i] * x;
      if (i > 0) next[i] += g[i - 1] * Rat(static_cast<long>(i));
    }
    g = std::move(next);
    x += 1;
  }
  for (long t = 0; t > shift; --t) {
    // Gamma^{(i)}(x-1) = (Gamma^{(i)}(x) - i Gamma^{(i-1)}(x-1)) / (x-1)
    Rat y = x - 1;
    std::vector<SeedCombo> prev(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      SeedCombo v = g[i];
      if (i > 0) v -= prev[i - 1] * Rat(static_cast<long>(i));
      prev[i] = v * Rat(1 / y);
    }
    g = std::move(prev);
    x = y;
  }
  return g[d];
}

SeedCombo inverse_gamma_value(const Rat& a) {
  if (is_integer(a) && a <= 0) return SeedCombo();
  Rat a0 = frac_of(a);
  if (a0 == 0) a0 = 1;
  // 1/Gamma(a) = 1/Gamma(a0) * prod over the integer steps.
  Rat factor = 1;
  for (Rat x = a0; x < a; x += 1) factor /= x;
  for (Rat x = a0; x > a; x -= 1) factor *= x - 1;
  if (a0 == 1) return SeedCombo(factor);
  return SeedCombo::symbol({Seed::Kind::InverseGamma, a0, 0}, factor);
}

SeedCombo rho_symbol(const Rat& alpha, int index) {
  return SeedCombo::symbol({Seed::Kind::Rho, alpha, index});
}

}  // namespace gevrey
