#include "epdl/kernels.hpp"

namespace epdl::kernels::serial {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    StateSet& dst = out.row(i);
    a.row(i).for_each([&](std::size_t k) { dst |= b.row(k); });
  }
  return out;
}

StateSet image(const StateSet& v, const BitMatrix& m) {
  StateSet out(m.cols());
  v.for_each([&](std::size_t i) { out |= m.row(i); });
  return out;
}

StateSet preimage(const BitMatrix& m, const StateSet& target) {
  StateSet out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row(i).intersects(target)) out.set(i);
  return out;
}

BitMatrix star(const BitMatrix& m) {
  BitMatrix c = m;
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i < n; ++i) c.set(i, i);
  for (std::size_t k = 0; k < n; ++k) {
    const StateSet via = c.row(k);
    for (std::size_t i = 0; i < n; ++i)
      if (c.test(i, k)) c.row(i) |= via;
  }
  return c;
}

}  // namespace epdl::kernels::serial
