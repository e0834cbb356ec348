#include "cyclecert/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclecert {

void RationalMatrix::add_row(std::vector<Rational> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("RationalMatrix: row arity mismatch");
  rows.push_back(std::move(row));
}

namespace {

struct Elimination {
  std::vector<std::vector<Rational>> a;
  std::vector<int> pivot_col_of_row;  // -1 if row is not a pivot row
  std::vector<int> pivot_row_of_col;  // -1 if column is free
  std::vector<PivotStep> trace;
  int rank = 0;
};

// Reduced row echelon form. If `forced` is non-null, pivots are taken from it
// verbatim instead of being searched.
Elimination eliminate(const RationalMatrix& m, const std::vector<PivotStep>* forced) {
  Elimination e;
  e.a = m.rows;
  const int nr = static_cast<int>(m.n_rows());
  const int nc = static_cast<int>(m.n_cols());
  e.pivot_col_of_row.assign(nr, -1);
  e.pivot_row_of_col.assign(nc, -1);

  auto do_pivot = [&](int col, int row) {
    Rational pv = e.a[row][col];
    if (pv == 0) throw std::logic_error("elimination: zero pivot");
    for (int j = 0; j < nc; ++j) e.a[row][j] /= pv;
    for (int r = 0; r < nr; ++r) {
      if (r == row || e.a[r][col] == 0) continue;
      Rational f = e.a[r][col];
      for (int j = 0; j < nc; ++j) e.a[r][j] -= f * e.a[row][j];
    }
    e.pivot_col_of_row[row] = col;
    e.pivot_row_of_col[col] = row;
    e.trace.push_back({col, row});
    ++e.rank;
  };

  if (forced) {
    for (const auto& step : *forced) {
      if (step.col < 0 || step.col >= nc || step.row < 0 || step.row >= nr)
        throw std::invalid_argument("replay: pivot out of range");
      if (e.pivot_col_of_row[step.row] != -1 || e.pivot_row_of_col[step.col] != -1)
        throw std::invalid_argument("replay: repeated pivot row/column");
      if (e.a[step.row][step.col] == 0)
        throw std::invalid_argument("replay: pivot entry is zero");
      do_pivot(step.col, step.row);
    }
    return e;
  }

  for (int col = 0; col < nc; ++col) {
    int row = -1;
    for (int r = 0; r < nr; ++r) {
      if (e.pivot_col_of_row[r] == -1 && e.a[r][col] != 0) {
        row = r;
        break;
      }
    }
    if (row == -1) continue;
    do_pivot(col, row);
  }
  return e;
}

KernelResult kernel_from(const Elimination& e, int nc) {
  KernelResult out;
  out.trace = e.trace;
  out.rank = e.rank;
  for (int col = 0; col < nc; ++col) {
    if (e.pivot_row_of_col[col] != -1) continue;
    std::vector<Rational> v(nc, Rational(0));
    v[col] = 1;
    for (int c = 0; c < nc; ++c) {
      int pr = e.pivot_row_of_col[c];
      if (pr != -1) v[c] = -e.a[pr][col];
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

KernelResult kernel(const RationalMatrix& m) {
  Elimination e = eliminate(m, nullptr);
  return kernel_from(e, static_cast<int>(m.n_cols()));
}

KernelResult replay_elimination(const RationalMatrix& m, const std::vector<PivotStep>& trace) {
  Elimination e = eliminate(m, &trace);
  // every remaining column must be incapable of pivoting, or the trace was short
  for (int col = 0; col < static_cast<int>(m.n_cols()); ++col) {
    if (e.pivot_row_of_col[col] != -1) continue;
    for (int r = 0; r < static_cast<int>(m.n_rows()); ++r)
      if (e.pivot_col_of_row[r] == -1 && e.a[r][col] != 0)
        throw std::invalid_argument("replay: trace is not a complete elimination");
  }
  return kernel_from(e, static_cast<int>(m.n_cols()));
}

std::string to_csv(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t j = 0; j < m.columns.size(); ++j)
    os << (j ? "," : "") << m.columns[j];
  os << "\n";
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "," : "") << row[j].str();
    os << "\n";
  }
  return os.str();
}

}  // namespace cyclecert
