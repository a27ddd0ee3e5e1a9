#include <algorithm>
#include <set>

#include "gevrey/solutions.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

DiffOp part_operator(const DiffOp& op, const Rat& zeta) { return twist_exp(op, zeta); }

FormalSolutionBasis infinity_basis(const DiffOp& op, std::size_t N) {
  if (op.order() < 1) throw Error("infinity_basis requires positive order");
  for (const auto& s : polygon(op).slopes_at_infinity())
    if (s != 0 && s != 1) throw Error("slope " + to_string(s) + " at infinity is outside {0, 1}");

  FormalSolutionBasis b;
  b.at = AtInfinity{};
  b.expected = op.order();
  auto rr = rational_roots(fourier_laplace(op, true).lead());
  if (!rr.remainder.is_constant()) {
    b.deficient = true;
    b.notes.push_back("exponential parts at the roots of " + to_string(rr.remainder) +
                      " are not rational");
  }
  for (const auto& [zeta, mult] : rr.roots) {
    // Solutions of the twisted operator in w = 1/z; log w = -log z.
    auto local = frobenius_basis(invert(part_operator(op, zeta)), 0, N);
    for (const auto& note : local.notes)
      if (note.rfind("irregular", 0) != 0) b.notes.push_back("zeta = " + to_string(zeta) + ": " + note);
    if (static_cast<int>(local.solutions.size()) != mult) {
      b.deficient = true;
      b.notes.push_back("zeta = " + to_string(zeta) + ": " + std::to_string(local.solutions.size()) +
                        " solutions for multiplicity " + std::to_string(mult));
    }
    for (auto& f : local.solutions) {
      PuiseuxLogSeries s(Expansion::AtInfinity, f.series.precision());
      for (const auto& [key, c] : f.series.terms())
        s.add(-key.exponent, key.log_power, key.log_power % 2 == 0 ? c : -c);
      b.solutions.push_back({zeta, f.alpha, f.log_degree, std::move(s)});
    }
  }
  if (static_cast<int>(b.solutions.size()) != b.expected) b.deficient = true;
  return b;
}

namespace {

std::vector<Rat> noninteger_classes(const std::vector<Rat>& xs) {
  std::set<Rat> s;
  for (const auto& x : xs)
    if (!is_integer(x)) s.insert(frac_of(x));
  return {s.begin(), s.end()};
}

std::vector<Rat> roots_of(const Exponents& e) {
  std::vector<Rat> out;
  for (const auto& r : e.rational) out.push_back(r.root);
  return out;
}

}  // namespace

bool DualityReport::ok() const {
  return !pairs.empty() && std::all_of(pairs.begin(), pairs.end(), [](const DualityPair& p) { return p.equal; });
}

DualityReport duality_exponent_check(const DiffOp& op, std::size_t N) {
  DualityReport rep;
  DiffOp fl = fourier_laplace(op, true);

  DualityPair a;
  a.label = "exponents at 0 vs transform at infinity";
  auto ex0 = exponents(op, Rat(0));
  auto exinf = exponents(fl, AtInfinity{});
  if (!ex0.remainder.is_constant() || !exinf.remainder.is_constant())
    rep.notes.push_back("non-rational exponents in check (a)");
  a.left = noninteger_classes(roots_of(ex0));
  a.right = noninteger_classes(roots_of(exinf));
  a.equal = a.left == a.right;
  rep.pairs.push_back(std::move(a));

  auto basis = infinity_basis(op, N);
  if (basis.deficient) rep.notes.insert(rep.notes.end(), basis.notes.begin(), basis.notes.end());
  for (const auto& [zeta, idx] : basis.groups()) {
    DualityPair p;
    p.label = "Turrittin exponents of part " + to_string(zeta) + " vs transform at " + to_string(zeta);
    std::vector<Rat> turrittin;
    for (auto i : idx) turrittin.push_back(basis.solutions[i].alpha);
    p.left = noninteger_classes(turrittin);
    p.right = noninteger_classes(roots_of(exponents(fl, zeta)));
    p.equal = p.left == p.right;
    rep.pairs.push_back(std::move(p));
  }
  return rep;
}

}  // namespace gevrey
