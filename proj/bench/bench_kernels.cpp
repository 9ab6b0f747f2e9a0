// Compares the OpenMP scan kernels against their serial reference twins on
// representative workloads, printing wall-clock medians and speedups. Both
// paths must return identical results; a mismatch aborts the run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dsgrp/catalog.hpp"
#include "dsgrp/group_ops.hpp"
#include "dsgrp/invariants.hpp"
#include "dsgrp/parallel.hpp"
#include "dsgrp/subgroups.hpp"

using namespace dsgrp;

namespace {

const Limits kLimits;

template <typename Fn>
double median_seconds(Fn&& fn, int reps) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

struct Row {
  std::string name;
  double serial;
  double parallel;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-34s %12s %12s %9s\n", "kernel workload", "serial [s]",
              "parallel [s]", "speedup");
  for (const Row& r : rows) {
    std::printf("%-34s %12.4f %12.4f %8.2fx\n", r.name.c_str(), r.serial,
                r.parallel, r.parallel > 0 ? r.serial / r.parallel : 0.0);
  }
}

void die(const std::string& what) {
  std::fprintf(stderr, "benchmark aborted: %s\n", what.c_str());
  std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads available: %d (cutoff for parallel paths: %u "
              "elements)\n\n",
              par::max_threads(), par::kParallelCutoff);

  std::vector<Row> rows;

  // Normalizer scan over a large element table: the kernel inside Sylow
  // ascent, pi-witness search, and the Burnside check.
  {
    PermGroup g = make_group("PSL2_17");
    PermGroup syl = sylow_subgroup(g, 2, kLimits);
    std::vector<std::uint32_t> ref;
    auto run = [&](par::ExecMode mode) {
      return normalizer_indices(g, syl, kLimits, mode);
    };
    ref = run(par::ExecMode::serial);
    if (run(par::ExecMode::parallel) != ref) {
      die("normalizer results differ across execution modes");
    }
    rows.push_back(
        {"normalizer scan, order 2448",
         median_seconds([&] { run(par::ExecMode::serial); }, reps),
         median_seconds([&] { run(par::ExecMode::parallel); }, reps)});
  }

  // Centralizer scan: same table, cheaper predicate.
  {
    PermGroup g = make_group("PSL2_17");
    PermGroup syl = sylow_subgroup(g, 3, kLimits);
    auto run = [&](par::ExecMode mode) {
      return centralizer_indices(g, syl, kLimits, mode);
    };
    if (run(par::ExecMode::parallel) != run(par::ExecMode::serial)) {
      die("centralizer results differ across execution modes");
    }
    rows.push_back(
        {"centralizer scan, order 2448",
         median_seconds([&] { run(par::ExecMode::serial); }, reps),
         median_seconds([&] { run(par::ExecMode::parallel); }, reps)});
  }

  // Full lattice enumeration: extension batches are the parallel unit.
  {
    PermGroup g = make_group("PSL2_7");
    auto count = [&](par::ExecMode mode) {
      return all_subgroups(g, kLimits, mode).subs.size();
    };
    if (count(par::ExecMode::serial) != count(par::ExecMode::parallel)) {
      die("lattice sizes differ across execution modes");
    }
    rows.push_back(
        {"subgroup lattice, order 168",
         median_seconds([&] { count(par::ExecMode::serial); }, reps),
         median_seconds([&] { count(par::ExecMode::parallel); }, reps)});
  }
  {
    PermGroup g = make_group("D1024");
    auto count = [&](par::ExecMode mode) {
      return all_subgroups(g, kLimits, mode).subs.size();
    };
    rows.push_back(
        {"subgroup lattice, order 1024",
         median_seconds([&] { count(par::ExecMode::serial); }, reps),
         median_seconds([&] { count(par::ExecMode::parallel); }, reps)});
  }

  // End-to-end bound check on a witness-tier group (scan-heavy).
  {
    PermGroup g = make_group("PSL2_41");
    auto run = [&](par::ExecMode mode) {
      return bound_check(g, kLimits, mode).d_value;
    };
    if (run(par::ExecMode::serial) != run(par::ExecMode::parallel)) {
      die("bound checks differ across execution modes");
    }
    rows.push_back(
        {"witness bound check, order 34440",
         median_seconds([&] { run(par::ExecMode::serial); }, reps),
         median_seconds([&] { run(par::ExecMode::parallel); }, reps)});
  }

  print_rows(rows);
  std::puts("\nresults verified identical across execution modes");
  return 0;
}
