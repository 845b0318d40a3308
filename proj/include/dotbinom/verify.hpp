#pragma once

// Cross-checks closed forms, polynomials and enumeration against each other
// and collects one record per (check, parameters) cell.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dotbinom::verify {

enum class Status { Pass, Fail, PaperDiscrepancy, Skipped };

std::string_view to_string(Status s);

struct Record {
  std::string check;
  std::optional<std::uint64_t> q;
  std::optional<int> n;
  std::optional<int> k;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
  std::string note;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t paper_discrepancy = 0;
  std::size_t skipped = 0;
};

struct Report {
  std::vector<Record> records;
  std::chrono::duration<double> elapsed{};

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

struct Options {
  std::vector<std::uint64_t> q_list{3, 5};
  int max_n = 4;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
  /// Adds the printed group-order forms and the printed sign/symmetry case
  /// lists to the always-on line-count comparison.
  bool compare_paper = false;
};

/// Runs every suite. Invalid q values raise InvalidQ before any work.
Report run(const Options& opts);

/// Status of a verbatim evaluation given the enumerated value and the
/// normative formula.
Status classify_verbatim(const std::string& oracle, const std::string& normative, const std::string& verbatim);

}  // namespace dotbinom::verify
