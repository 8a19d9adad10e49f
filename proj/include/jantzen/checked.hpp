#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jantzen {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// All lattice arithmetic is exact machine-width integer arithmetic.
// Wraparound would silently corrupt every downstream formula, so any
// overflow throws instead.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVec vec_scale(const IntVec& a, Int c) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
  return r;
}

inline Int vec_dot(const IntVec& a, const IntVec& b) {
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    r = checked_add(r, checked_mul(a[i], b[i]));
  return r;
}

inline bool vec_is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

// Floor division for b > 0; used when counting lattice hyperplanes
// between two pairing values of either sign.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace jantzen
