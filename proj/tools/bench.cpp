// Compares the OpenMP kernels against the serial reference path: wall time
// and bit-identical results for the frame search, the separable-frame
// optimizer, the ordering search, and a surface sweep.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eub/bounds.hpp"
#include "eub/multi.hpp"
#include "eub/rng.hpp"
#include "eub/scenarios.hpp"
#include "eub/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_of(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  }
  return true;
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical %s\n",
              name.c_str(), serial_s, parallel_s, serial_s / parallel_s,
              identical ? "yes" : "NO");
}

}  // namespace

int main() {
  using namespace eub;

  {
    rng::Stream s1(rng::derive(42, 1));
    rng::Stream s2(rng::derive(42, 2));
    ProjectiveBasis m1 = make_basis(rng::haar_unitary(s1, 6));
    ProjectiveBasis m2 = make_basis(rng::haar_unitary(s2, 6));
    MajorizationFrame fs, fp;
    double ts = seconds_of([&] { fs = direct_sum_frame(m1, m2, par::Exec::Serial); });
    double tp = seconds_of([&] { fp = direct_sum_frame(m1, m2, par::Exec::OpenMP); });
    report("direct_sum_frame d=6", ts, tp, bitwise_equal(fs.cumulative, fp.cumulative));
  }

  {
    EqualOverlapChain eq = equal_overlap_chain();
    MeasurementChain chain = make_chain({eq.m1, eq.m2, eq.m3, eq.m4});
    MajorizationFrame fs, fp;
    double ts = seconds_of([&] {
      fs = separable_frame(chain, 2, 2, 200, 7, par::Exec::Serial);
    });
    double tp = seconds_of([&] {
      fp = separable_frame(chain, 2, 2, 200, 7, par::Exec::OpenMP);
    });
    report("separable_frame 2x2 b=200", ts, tp, bitwise_equal(fs.cumulative, fp.cumulative));
  }

  {
    rng::Stream st(rng::derive(42, 3));
    QuantumState rho = make_state(rng::ginibre_state_matrix(st, 9), {3, 3});
    std::vector<ProjectiveBasis> bases;
    for (int m = 0; m < 7; ++m) {
      rng::Stream sb(rng::derive(42, 4, static_cast<std::uint64_t>(m)));
      bases.push_back(make_basis(rng::haar_unitary(sb, 3)));
    }
    MeasurementChain chain = make_chain(bases);
    OrderedBound rs, rp;
    double ts = seconds_of([&] { rs = multi_bound_opt(rho, chain, par::Exec::Serial); });
    double tp = seconds_of([&] { rp = multi_bound_opt(rho, chain, par::Exec::OpenMP); });
    bool same = bitwise_equal({rs.best}, {rp.best}) && rs.ordering == rp.ordering;
    report("multi_bound_opt N=7", ts, tp, same);
  }

  {
    SweepTable ss, sp;
    double ts = seconds_of([&] { ss = run_sweep("fig4", 10, par::Exec::Serial); });
    double tp = seconds_of([&] { sp = run_sweep("fig4", 10, par::Exec::OpenMP); });
    bool same = ss.rows.size() == sp.rows.size();
    for (std::size_t i = 0; same && i < ss.rows.size(); ++i) {
      same = bitwise_equal(ss.rows[i], sp.rows[i]);
    }
    report("sweep fig4 10x10", ts, tp, same);
  }

  return 0;
}
