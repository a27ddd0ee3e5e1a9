#pragma once

#include <doctest.h>

#include <string>

#include "gevrey/parser.hpp"
#include "random_ops.hpp"

namespace gevrey::test {

inline DiffOp op(const std::string& s) { return parse_diffop_exact(s); }
inline DiffOp nop(const std::string& s) { return normalized(parse_diffop_exact(s)); }
inline Rat q(long n, long d = 1) { return rat(n, d); }
inline Poly poly(std::vector<Rat> c) { return Poly(std::move(c)); }

// Taylor window sum t[n] z^n as an expansion at 0.
inline PuiseuxLogSeries at_zero(const Series& t) { return PuiseuxLogSeries::from_series(t, Expansion::AtZero); }

}  // namespace gevrey::test

namespace doctest {
template <>
struct StringMaker<gevrey::Rat> {
  static String convert(const gevrey::Rat& r) { return gevrey::to_string(r).c_str(); }
};
template <>
struct StringMaker<gevrey::Poly> {
  static String convert(const gevrey::Poly& p) { return gevrey::to_string(p).c_str(); }
};
template <>
struct StringMaker<gevrey::DiffOp> {
  static String convert(const gevrey::DiffOp& o) { return gevrey::to_string(o).c_str(); }
};
}  // namespace doctest
