#pragma once

#include <string>
#include <vector>

#include "cyclecert/rational.hpp"

namespace cyclecert {

/// Dense matrix of exact rationals with labelled columns.
struct RationalMatrix {
  std::vector<std::string> columns;
  std::vector<std::vector<Rational>> rows;  // every row has columns.size() entries

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return columns.size(); }
  void add_row(std::vector<Rational> row);
};

struct PivotStep {
  int col = 0;
  int row = 0;  // original row index
};

struct KernelResult {
  std::vector<std::vector<Rational>> basis;  // right-kernel basis vectors
  std::vector<PivotStep> trace;              // elimination pivots in order
  int rank = 0;
};

/// Exact right kernel by Gauss-Jordan elimination with deterministic
/// pivoting: leftmost column first, then smallest original row index.
KernelResult kernel(const RationalMatrix& m);

/// Re-runs the elimination using a recorded pivot sequence. Throws if a
/// recorded pivot entry turns out zero; otherwise returns the kernel basis,
/// which must agree with the original run.
KernelResult replay_elimination(const RationalMatrix& m, const std::vector<PivotStep>& trace);

std::string to_csv(const RationalMatrix& m);

}  // namespace cyclecert
