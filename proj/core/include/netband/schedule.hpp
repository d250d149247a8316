#ifndef NETBAND_SCHEDULE_HPP
#define NETBAND_SCHEDULE_HPP

#include <vector>

namespace netband {

/// Doubling batch schedule over a horizon T: M = ceil(log2(T/2 + 1))
/// batches, with boundary T_m = min(2(2^m - 1), T) for m < M and T_M = T.
/// Batch m covers rounds T_{m-1}+1 .. T_m, so batch sizes are at most 2^m.
struct BatchSchedule {
  long horizon = 0;
  std::vector<long> boundaries;  // boundaries[m-1] = T_m, strictly increasing

  int batch_count() const { return static_cast<int>(boundaries.size()); }
  long boundary(int m) const {  // T_m, with T_0 = 0
    return m == 0 ? 0 : boundaries[m - 1];
  }
  long batch_size(int m) const { return boundary(m) - boundary(m - 1); }
};

/// Requires T >= 1.
BatchSchedule make_schedule(long T);

}  // namespace netband

#endif  // NETBAND_SCHEDULE_HPP
