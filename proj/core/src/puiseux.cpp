#include "gevrey/puiseux.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace gevrey {

PuiseuxLogSeries::PuiseuxLogSeries(Expansion e, Rat precision, Rat center, int orientation)
    : expansion_(e), precision_(std::move(precision)), center_(std::move(center)),
      orientation_(orientation) {
  if (orientation_ != 1 && orientation_ != -1) throw Error("orientation must be +1 or -1");
  if (e == Expansion::AtInfinity && (center_ != 0 || orientation_ != 1))
    throw Error("expansions at infinity have no center");
}

PuiseuxLogSeries PuiseuxLogSeries::from_series(const Series& s, Expansion e, const Rat& offset) {
  // At zero: sum s_n z^{offset+n}. At infinity: sum s_n z^{offset-n}.
  Rat len(static_cast<long>(s.size()));
  Rat prec = e == Expansion::AtZero ? Rat(offset + len) : Rat(len - offset);
  PuiseuxLogSeries out(e, prec);
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rat shift(static_cast<long>(n));
    out.add(e == Expansion::AtZero ? Rat(offset + shift) : Rat(offset - shift), 0, s[n]);
  }
  return out;
}

Rat PuiseuxLogSeries::depth(const Rat& exponent) const {
  return expansion_ == Expansion::AtZero ? exponent : Rat(-exponent);
}

void PuiseuxLogSeries::add(const Rat& exponent, int log_power, const SeedCombo& c) {
  if (c.is_zero() || depth(exponent) >= precision_) return;
  if (log_power < 0) throw Error("negative log power");
  Key key{exponent, log_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SeedCombo PuiseuxLogSeries::coeff(const Rat& exponent, int log_power) const {
  auto it = terms_.find({exponent, log_power});
  return it == terms_.end() ? SeedCombo() : it->second;
}

int PuiseuxLogSeries::max_log_power() const {
  int k = 0;
  for (const auto& [key, c] : terms_) k = std::max(k, key.log_power);
  return k;
}

std::vector<Rat> PuiseuxLogSeries::exponent_classes() const {
  std::set<Rat> cls;
  for (const auto& [key, c] : terms_) cls.insert(frac_of(key.exponent));
  return {cls.begin(), cls.end()};
}

PuiseuxLogSeries PuiseuxLogSeries::with_precision(const Rat& p) const {
  PuiseuxLogSeries out(expansion_, std::min(p, precision_), center_, orientation_);
  for (const auto& [key, c] : terms_) out.add(key.exponent, key.log_power, c);
  return out;
}

void PuiseuxLogSeries::check_compatible(const PuiseuxLogSeries& o) const {
  if (expansion_ != o.expansion_ || center_ != o.center_ || orientation_ != o.orientation_)
    throw Error("series expanded at different points");
}

PuiseuxLogSeries& PuiseuxLogSeries::operator+=(const PuiseuxLogSeries& o) {
  check_compatible(o);
  if (o.precision_ < precision_) *this = with_precision(o.precision_);
  for (const auto& [key, c] : o.terms_) add(key.exponent, key.log_power, c);
  return *this;
}

PuiseuxLogSeries& PuiseuxLogSeries::operator-=(const PuiseuxLogSeries& o) {
  PuiseuxLogSeries neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

PuiseuxLogSeries& PuiseuxLogSeries::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

bool operator==(const PuiseuxLogSeries& a, const PuiseuxLogSeries& b) {
  return a.expansion_ == b.expansion_ && a.precision_ == b.precision_ && a.center_ == b.center_ &&
         a.orientation_ == b.orientation_ && a.terms_ == b.terms_;
}

DiffOp local_operator(const DiffOp& op, const Rat& center, int orientation) {
  // z = center + orientation * w, d/dz = orientation * d/dw
  std::vector<Poly> out;
  Poly sub({center, Rat(orientation)});
  for (int i = 0; i <= op.order(); ++i) {
    Poly q = op.coeffs()[static_cast<std::size_t>(i)].compose(sub);
    out.push_back((orientation < 0 && i % 2 != 0) ? Poly(-q) : q);
  }
  return DiffOp(std::move(out));
}

PuiseuxLogSeries apply(const DiffOp& op_in, const PuiseuxLogSeries& s) {
  DiffOp op = (s.center() != 0 || s.orientation() != 1)
                  ? local_operator(op_in, s.center(), s.orientation())
                  : op_in;
  // Each z^j D^i moves depth by (j - i) at a finite point and (i - j) at infinity.
  bool at_zero = s.expansion() == Expansion::AtZero;
  std::optional<Rat> shift_min;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= q.degree(); ++j) {
      if (q[static_cast<std::size_t>(j)] == 0) continue;
      Rat d(at_zero ? j - i : i - j);
      if (!shift_min || d < *shift_min) shift_min = d;
    }
  }
  Rat prec = s.precision() + (shift_min ? *shift_min : Rat(0));
  PuiseuxLogSeries out(s.expansion(), prec, s.center(), s.orientation());
  if (op.is_zero()) return out;
  // Derivatives D^i of each term, accumulated once per i.
  std::map<PuiseuxLogSeries::Key, SeedCombo> cur = s.terms();
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    for (const auto& [key, c] : cur)
      for (int j = 0; j <= q.degree(); ++j) {
        Rat a = q[static_cast<std::size_t>(j)];
        if (a != 0) out.add(key.exponent + Rat(j), key.log_power, c * a);
      }
    if (i == op.order()) break;
    std::map<PuiseuxLogSeries::Key, SeedCombo> next;
    auto push = [&next](const Rat& e, int k, const SeedCombo& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = next.emplace(PuiseuxLogSeries::Key{e, k}, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (const auto& [key, c] : cur) {
      Rat e1 = key.exponent - 1;
      if (key.exponent != 0) push(e1, key.log_power, c * key.exponent);
      if (key.log_power > 0) push(e1, key.log_power - 1, c * Rat(key.log_power));
    }
    cur = std::move(next);
  }
  return out;
}

std::string to_string(const PuiseuxLogSeries& s) {
  std::string var = s.expansion() == Expansion::AtInfinity ? "z"
                    : s.center() == 0 && s.orientation() == 1
                        ? "z"
                        : (s.orientation() == 1 ? "(z - " + to_string(s.center()) + ")"
                                                : "(" + to_string(s.center()) + " - z)");
  std::string out;
  for (const auto& [key, c] : s.terms()) {
    std::string term = "(" + to_string(c) + ")";
    if (key.exponent != 0) term += "*" + var + "^(" + to_string(key.exponent) + ")";
    if (key.log_power == 1) term += "*log(" + var + ")";
    if (key.log_power > 1) term += "*log(" + var + ")^" + std::to_string(key.log_power);
    out += out.empty() ? term : " + " + term;
  }
  if (out.empty()) out = "0";
  return out + " + O(depth " + to_string(s.precision()) + ")";
}

}  // namespace gevrey
