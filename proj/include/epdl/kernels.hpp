#pragma once

// Boolean-semiring kernels over BitMatrix / StateSet.
//
// `serial` is the reference implementation kept for testing; `parallel`
// splits rows across OpenMP threads. The unqualified entry points pick one
// by problem size.

#include "epdl/bits.hpp"

namespace epdl::kernels {

namespace serial {

/// (a x b)[i][j] = exists k. a[i][k] && b[k][j]
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
/// Row vector times matrix: { j | exists i in v. m[i][j] }.
StateSet image(const StateSet& v, const BitMatrix& m);
/// { i | m[i] intersects target }.
StateSet preimage(const BitMatrix& m, const StateSet& target);
/// Reflexive-transitive closure by Warshall's algorithm.
BitMatrix star(const BitMatrix& m);

}  // namespace serial

namespace parallel {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
StateSet image(const StateSet& v, const BitMatrix& m);
StateSet preimage(const BitMatrix& m, const StateSet& target);
/// Reflexive-transitive closure by repeated squaring of (I | m).
BitMatrix star(const BitMatrix& m);

}  // namespace parallel

/// Below this many rows the serial kernels win.
inline constexpr std::size_t kParallelThreshold = 256;

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  return a.rows() >= kParallelThreshold ? parallel::multiply(a, b)
                                        : serial::multiply(a, b);
}

inline StateSet image(const StateSet& v, const BitMatrix& m) {
  return serial::image(v, m);
}

inline StateSet preimage(const BitMatrix& m, const StateSet& target) {
  return m.rows() >= kParallelThreshold ? parallel::preimage(m, target)
                                        : serial::preimage(m, target);
}

inline BitMatrix star(const BitMatrix& m) {
  return m.rows() >= kParallelThreshold ? parallel::star(m) : serial::star(m);
}

}  // namespace epdl::kernels
