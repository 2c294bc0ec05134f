// Timing harness for the two execution policies of the panel-parallel
// quadrature and the grid-verification sweeps. Both policies must produce
// bit-identical results; the table reports the speedup actually obtained.

#include <chrono>
#include <cstdio>
#include <string>

#include "pball/ball.hpp"

namespace {

using pball::Exec;
using pball::PExponent;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

struct Sample {
  double seconds;
  double value;
};

template <typename Fn>
Sample timed(const Fn& fn) {
  const double t0 = now_seconds();
  const double v = fn();
  return {now_seconds() - t0, v};
}

void report(const char* name, const Sample& serial, const Sample& parallel) {
  const bool identical = serial.value == parallel.value;
  std::printf("%-28s %10.3fs %10.3fs %7.2fx   %s\n", name, serial.seconds,
              parallel.seconds, serial.seconds / parallel.seconds,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  const PExponent p2(2.0);
  const PExponent p15(1.5);

  std::printf("%-28s %11s %11s %8s   %s\n", "kernel", "serial", "parallel",
              "speedup", "result check");

  report("ball integral q=2 tol=1e-5",
         timed([&] { return pball::ball_integral(p2, 2.0, 1e-5, Exec::serial).value; }),
         timed([&] { return pball::ball_integral(p2, 2.0, 1e-5, Exec::parallel).value; }));

  report("phi n=2 q=40 tol=1e-11",
         timed([&] { return pball::phi(p15, 2, 40.0, 1e-11, Exec::serial); }),
         timed([&] { return pball::phi(p15, 2, 40.0, 1e-11, Exec::parallel); }));

  report("pythagorean sweep 2e5 pts",
         timed([&] {
           return pball::verify_pythagorean(p15, 200000, Exec::serial).max_slack;
         }),
         timed([&] {
           return pball::verify_pythagorean(p15, 200000, Exec::parallel).max_slack;
         }));

  report("jordan sweep 2e5 pts",
         timed([&] {
           return pball::verify_jordan(p2, 200000, Exec::serial).max_slack;
         }),
         timed([&] {
           return pball::verify_jordan(p2, 200000, Exec::parallel).max_slack;
         }));

  return 0;
}
