#include <omp.h>

#include "epdl/kernels.hpp"

namespace epdl::kernels {

namespace parallel {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    StateSet& dst = out.row(static_cast<std::size_t>(i));
    a.row(static_cast<std::size_t>(i)).for_each([&](std::size_t k) {
      dst |= b.row(k);
    });
  }
  return out;
}

StateSet image(const StateSet& v, const BitMatrix& m) {
  // Each thread ORs a strided share of rows into a private accumulator.
  const auto members = v.members();
  const auto count = static_cast<std::ptrdiff_t>(members.size());
  StateSet out(m.cols());
#pragma omp parallel
  {
    StateSet local(m.cols());
#pragma omp for nowait
    for (std::ptrdiff_t i = 0; i < count; ++i)
      local |= m.row(members[static_cast<std::size_t>(i)]);
#pragma omp critical
    out |= local;
  }
  return out;
}

StateSet preimage(const BitMatrix& m, const StateSet& target) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  std::vector<char> hit(m.rows(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    hit[static_cast<std::size_t>(i)] =
        m.row(static_cast<std::size_t>(i)).intersects(target) ? 1 : 0;
  StateSet out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (hit[i]) out.set(i);
  return out;
}

BitMatrix star(const BitMatrix& m) {
  BitMatrix c = m;
  for (std::size_t i = 0; i < c.rows(); ++i) c.set(i, i);
  // (I|R)^(2^k) stabilises after at most ceil(log2 n) squarings.
  while (true) {
    BitMatrix next = multiply(c, c);
    if (next == c) return c;
    c = std::move(next);
  }
}

}  // namespace parallel

}  // namespace epdl::kernels
