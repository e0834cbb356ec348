#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/class_algebra.hpp"
#include "cyclecert/kernel.hpp"
#include "cyclecert/rational.hpp"

namespace cyclecert {

enum class SystemSource { DisplayedEquations, TableDerived };

std::string to_string(SystemSource s);

/// Identifies one row. `key` pairs the same surface instance / relation
/// across the two sources; `stage` records how far the sequential
/// elimination has progressed when the relation is stated, which tells the
/// cross-checker which coefficients are already known to vanish.
struct RowInfo {
  std::string key;
  std::string label;
  int stage = 0;
};

struct LinearSystem {
  int g = 0;
  int n = 0;
  SystemSource source = SystemSource::DisplayedEquations;
  std::vector<SymClass> columns;
  RationalMatrix matrix;
  std::vector<RowInfo> provenance;  // one entry per matrix row
  std::vector<std::string> notes;   // skipped instances / dropped terms, with reasons
};

/// The relations exactly as displayed in the elimination: (Sb0), (Sbk),
/// (Sc), (push), (Sc0) when n >= 3, (Seh), (Sfh), (quartic), (Sh) for odd
/// g >= 5, the two contraction rows c = 0 and c_{K_{n+1}} = 0, and the
/// closing relation c_{1:0} = 0. Requires g >= 3 and n >= g-1.
LinearSystem build_rows_displayed(int g, int n);

/// One row per admissible test-surface instance, transcribed cell by cell
/// from the intersection table, plus the pushforward and contraction rows
/// and the closing relation. `gq_unknown` substitutes for the one table
/// entry with no stated value (the gamma_{2:0} intersection of the quartic
/// pencil surface).
LinearSystem build_rows_table(int g, int n, const Rational& gq_unknown = Rational(1));

struct SweepEntry {
  Rational value;
  int kernel_dim = 0;
};

struct Mismatch {
  std::string row_key;
  std::string column;
  Rational displayed;
  Rational table;
};

struct DiffReport {
  int g = 0;
  int n = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> compared_keys;
  std::vector<std::string> table_only;
  std::vector<std::string> displayed_only;
};

/// For each displayed relation, reconstructs the table-derived row of the
/// same instance, masks the coefficients already eliminated at that row's
/// stage, scales the rows to a common leading coefficient, and itemizes
/// every per-coefficient difference. Neither side is altered.
DiffReport diff_systems(int g, int n);

struct KernelCertificate {
  int g = 0;
  int n = 0;
  SystemSource source = SystemSource::DisplayedEquations;
  int kernel_dim = 0;
  std::vector<SymClass> columns;
  KernelResult kr;                 // basis + elimination trace of the reported run
  std::vector<SweepEntry> swept;   // table source only: unknown-entry sweep
  DiffReport diff;
  std::vector<std::string> notes;
};

/// Kernel of the chosen system. For the table source the unknown entry is
/// swept over {-2,-1,0,1,2} and kernel_dim reports the worst case. A
/// nontrivial kernel is reported in the certificate, not thrown.
KernelCertificate verify_injectivity(int g, int n, SystemSource source);

std::string certificate_json(const KernelCertificate& cert, int indent = 2);
std::string diff_report_json(const DiffReport& report, int indent = 2);
std::string system_csv(const LinearSystem& sys);

}  // namespace cyclecert
