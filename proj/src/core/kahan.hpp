// Compensated summation.  The lattice oracle adds ~10^5 terms spanning many
// orders of magnitude; plain summation loses 2-3 digits there.

#pragma once

#include <complex>

namespace wpmin::ell {

template <class T>
class Kahan {
public:
  void add(T x) {
    T y = x - comp_;
    T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

private:
  T sum_{};
  T comp_{};
};

} // namespace wpmin::ell
