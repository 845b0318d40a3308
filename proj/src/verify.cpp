#include "dotbinom/verify.hpp"

#include <set>

#include "dotbinom/closed.hpp"
#include "dotbinom/error.hpp"
#include "dotbinom/gf.hpp"
#include "dotbinom/numbers.hpp"
#include "dotbinom/oracle.hpp"
#include "dotbinom/polyq.hpp"

namespace dotbinom::verify {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::PaperDiscrepancy: return "PaperDiscrepancy";
    case Status::Skipped: return "Skipped";
  }
  return "?";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::PaperDiscrepancy: ++s.paper_discrepancy; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

Status classify_verbatim(const std::string& oracle, const std::string& normative, const std::string& verbatim) {
  if (verbatim == oracle) return Status::Pass;
  if (normative == oracle) return Status::PaperDiscrepancy;
  return Status::Fail;
}

namespace {

using closed::Flavor;
using closed::Variant;

class Collector {
 public:
  explicit Collector(Report& report) : report_(report) {}

  void compare(std::string check, std::optional<std::uint64_t> q, std::optional<int> n, std::optional<int> k,
               const std::string& expected, const std::string& actual, std::string note = {}) {
    add({std::move(check), q, n, k, expected, actual, expected == actual ? Status::Pass : Status::Fail,
         std::move(note)});
  }

  void add(Record r) { report_.records.push_back(std::move(r)); }

  void skip(std::string check, std::optional<std::uint64_t> q, std::optional<int> n, std::optional<int> k,
            std::string reason) {
    add({std::move(check), q, n, k, "", "", Status::Skipped, std::move(reason)});
  }

  void fail(std::string check, std::optional<std::uint64_t> q, std::optional<int> n, std::optional<int> k,
            std::string reason) {
    add({std::move(check), q, n, k, "", "", Status::Fail, std::move(reason)});
  }

 private:
  Report& report_;
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

std::string shape_text(const closed::RowShape& s, bool with_log_concave) {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (!out.empty()) out += ' ';
    out += ok ? name : std::string("not-") + name;
  };
  add(s.symmetric, "symmetric");
  add(s.unimodal, "unimodal");
  if (with_log_concave) add(s.log_concave, "log-concave");
  return out;
}

const char* kExpectedShape = "symmetric unimodal log-concave";
const char* kExpectedLorentzianShape = "symmetric unimodal";

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

void oracle_suite(Collector& out, const quad::AmbientForm& dot, const quad::AmbientForm& ldot, std::uint64_t q,
                  int n, const oracle::Options& oopts) {
  std::vector<std::uint64_t> euclid_row;
  std::vector<std::uint64_t> lorentz_row;
  bool rows_complete = true;
  for (int k = 0; k <= n; ++k) {
    try {
      const auto td = oracle::count_subspaces_by_class(dot, k, oopts);
      const auto tl = oracle::count_subspaces_by_class(ldot, k, oopts);
      euclid_row.push_back(td.dot_type);
      if (k > 0 && k < n) lorentz_row.push_back(td.lambda_dot_type);
      const std::pair<Variant, std::uint64_t> cells[] = {{Variant::DD, td.dot_type},
                                                         {Variant::DL, td.lambda_dot_type},
                                                         {Variant::LD, tl.dot_type},
                                                         {Variant::LL, tl.lambda_dot_type}};
      for (const auto& [variant, tally] : cells) {
        const std::string check = "binom." + std::string(closed::to_string(variant));
        try {
          out.compare(check, q, n, k, str(tally), str(closed::dot_binom_variant(q, n, k, variant)));
        } catch (const Error& e) {
          out.fail(check, q, n, k, e.what());
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      rows_complete = false;
      for (Variant v : {Variant::DD, Variant::DL, Variant::LD, Variant::LL}) {
        out.skip("binom." + std::string(closed::to_string(v)), q, n, k, e.what());
      }
    }
  }
  if (rows_complete) {
    out.compare("shape.oracle.euclidean", q, n, std::nullopt, kExpectedShape,
                shape_text(closed::row_shape(to_big(euclid_row), 0, n), true));
    out.compare("shape.oracle.lorentzian", q, n, std::nullopt, kExpectedLorentzianShape,
                shape_text(closed::row_shape(to_big(lorentz_row), 1, n), false));
  }

  try {
    const auto ld = oracle::count_lines(dot, oopts);
    const auto ll = oracle::count_lines(ldot, oopts);
    const std::pair<Flavor, std::uint64_t> cells[] = {{Flavor::SpacelikeInDot, ld.spacelike},
                                                      {Flavor::TimelikeInDot, ld.timelike},
                                                      {Flavor::SpacelikeInLambdaDot, ll.spacelike},
                                                      {Flavor::TimelikeInLambdaDot, ll.timelike}};
    for (const auto& [flavor, tally] : cells) {
      const std::string name(closed::to_string(flavor));
      const std::string oracle_value = str(tally);
      const std::string normative = str(closed::bracket(q, n, flavor));
      const std::string verbatim = str(closed::verbatim_line_count(q, n, flavor));
      out.compare("bracket." + name, q, n, std::nullopt, oracle_value, normative);
      out.add({"line_count.verbatim." + name, q, n, std::nullopt, oracle_value, verbatim,
               classify_verbatim(oracle_value, normative, verbatim),
               verbatim == oracle_value ? "" : "normative bracket " + normative});
    }
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    out.skip("bracket.lines", q, n, std::nullopt, e.what());
  }

  try {
    const std::uint64_t enumerated = oracle::enumerate_orthogonal_group(dot, oopts);
    out.compare("group.order.enumerated", q, n, std::nullopt, str(enumerated), str(closed::group_order(q, n)));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    out.skip("group.order.enumerated", q, n, std::nullopt, e.what());
  }

  // Keep the poset out of memory when its containment work would not fit.
  BigInt nodes = 0;
  BigInt hasse = 0;
  BigInt below = 1;
  BigInt mobius_work = 0;
  for (int k = 1; k <= n; ++k) {
    const BigInt rank = closed::dot_binom(q, n, k);
    hasse += closed::dot_binom(q, n, k - 1) * rank;
    mobius_work += rank * below;
    below += rank;
    if (k < n) nodes += gaussian_binomial(q, n, k);
  }
  const BigInt cap = oopts.budget;
  if (nodes > cap || hasse > cap || mobius_work > cap) {
    const std::string reason = "poset work exceeds budget " + std::to_string(oopts.budget);
    out.skip("flags", q, n, std::nullopt, reason);
    out.skip("mobius", q, n, std::nullopt, reason);
    return;
  }
  try {
    const auto snap = oracle::build_poset(dot, oracle::PosetKind::Euclidean, oopts);
    out.compare("flags", q, n, std::nullopt, str(oracle::count_flags(snap)), str(closed::bracket_factorial(q, n)));
    out.compare("mobius", q, n, std::nullopt, str(oracle::mobius_bottom(snap, oopts)),
                str(closed::mobius_sequence(q, n).mu.back()));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    out.skip("flags", q, n, std::nullopt, e.what());
    out.skip("mobius", q, n, std::nullopt, e.what());
  }
}

void closed_suite(Collector& out, std::uint64_t q, int n, bool compare_paper) {
  try {
    closed::pascal_check(q, n);
    out.compare("pascal", q, n, std::nullopt, "holds", "holds");
  } catch (const IdentityViolated& e) {
    out.add({"pascal", q, n, e.k(), "holds", "violated", Status::Fail, e.what()});
  }

  const auto shape = closed::shape_checks(q, n);
  out.compare("shape.euclidean", q, n, std::nullopt, kExpectedShape, shape_text(shape.euclidean, true));
  out.compare("shape.lorentzian", q, n, std::nullopt, kExpectedLorentzianShape,
              shape_text(shape.lorentzian, false));

  const BigInt order = closed::group_order(q, n);
  for (int k = 0; k <= n; ++k) {
    const BigInt product = closed::dot_binom(q, n, k) * closed::group_order(q, k) * closed::group_order(q, n - k);
    out.compare("group.quotient", q, n, k, str(order), str(product));
  }

  const auto mob = closed::mobius_sequence(q, n);
  BigInt alternating = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt term = mob.b[k] * closed::dot_binom(q, n, k);
    alternating += k % 2 == 0 ? term : BigInt(-term);
  }
  out.compare("mobius.recursion", q, n, std::nullopt, "0", str(alternating));

  if (compare_paper) {
    const auto printed = closed::printed_group_order(q, n);
    if (!printed) {
      out.skip("group.order.printed", q, n, std::nullopt, "printed form has a non-integer bound at this n");
    } else {
      const std::string normative = str(order);
      const std::string verbatim = str(*printed);
      out.add({"group.order.printed", q, n, std::nullopt, normative, verbatim,
               verbatim == normative ? Status::Pass : Status::PaperDiscrepancy,
               verbatim == normative ? "" : "normative 2^n [n]_d! also matches enumeration and the quotient identity"});
    }
  }
}

void poly_eval_suite(Collector& out, std::uint64_t q, int n) {
  const int cls = static_cast<int>(q % 4);
  for (int k = 0; k <= n; ++k) {
    const polyq::PolyFamilyKey key{cls, n, k};
    const std::string expected = str(closed::dot_binom(q, n, k));
    try {
      const Rational value = polyq::dot_binom_poly(key).eval(Rational(q));
      out.compare("poly.eval", q, n, k, expected, dotbinom::to_string(value));
    } catch (const Error& e) {
      out.fail("poly.eval", q, n, k, e.what());
    }
  }
}

void poly_class_suite(Collector& out, int cls, int n, bool compare_paper) {
  const std::string cls_note = "q = " + std::to_string(cls) + " mod 4";
  for (int k = 1; k < n; ++k) {
    const polyq::PolyFamilyKey key{cls, n, k};
    try {
      const auto p = polyq::dot_binom_poly(key);
      out.compare("poly.degree", std::nullopt, n, k, std::to_string(k * (n - k)), std::to_string(p.degree()),
                  cls_note);
      out.compare("poly.leading", std::nullopt, n, k, "1/2", dotbinom::to_string(p.leading()), cls_note);
      const auto sign = polyq::functional_equation_check(key);
      out.add({"poly.sign", std::nullopt, n, k, "definite", std::string(polyq::to_string(sign)), Status::Pass,
               cls_note});
      try {
        polyq::limit_check(key);
        out.compare("poly.limit", std::nullopt, n, k, str(closed::limit_value(n, k)),
                    str(closed::limit_value(n, k)), cls_note);
      } catch (const MismatchError& e) {
        out.add({"poly.limit", std::nullopt, n, k, e.expected(), e.actual(), Status::Fail, cls_note});
      }
      if (compare_paper) {
        const auto fs = polyq::functional_sign_report(key);
        const std::string computed(polyq::to_string(fs.computed));
        const std::string printed(polyq::to_string(fs.printed_a));
        std::string note = cls_note + ", unqualified cases read for both classes: " +
                           std::string(polyq::to_string(fs.printed_b));
        out.add({"poly.sign.printed", std::nullopt, n, k, computed, printed,
                 fs.agrees_a() ? Status::Pass : Status::PaperDiscrepancy, note});

        const auto sym = polyq::coefficient_symmetry_report(key);
        const std::string expected = std::string(polyq::to_string(sym.computed)) + " about " +
                                     std::to_string(sym.depressed.depressed_degree());
        const std::string actual = sym.printed ? std::string(polyq::to_string(*sym.printed)) + " about " +
                                                     sym.printed_bound
                                               : "no printed case";
        const bool agrees = sym.printed && *sym.printed == sym.computed && !sym.index_conflict;
        out.add({"poly.symmetry.printed", std::nullopt, n, k, expected, actual,
                 agrees ? Status::Pass : Status::PaperDiscrepancy, cls_note});
      }
    } catch (const Error& e) {
      out.fail("poly", std::nullopt, n, k, cls_note + ": " + e.what());
    }
  }
}

}  // namespace

Report run(const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.max_n < 1) throw Error(Errc::InvalidArgument, "max-n must be >= 1");
  for (auto q : opts.q_list) (void)odd_prime_power(q);

  Report report;
  Collector out(report);
  oracle::Options oopts;
  oopts.budget = opts.budget;
  oopts.jobs = opts.jobs;

  std::set<int> classes;
  for (auto q : opts.q_list) {
    gf::FieldPtr field;
    try {
      field = gf::make_field_of_order(q);
    } catch (const Error& e) {
      out.skip("oracle", q, std::nullopt, std::nullopt, e.what());
    }
    for (int n = 1; n <= opts.max_n; ++n) {
      if (field) {
        oracle_suite(out, quad::AmbientForm::dot(field, n), quad::AmbientForm::lambda_dot(field, n), q, n, oopts);
      }
      closed_suite(out, q, n, opts.compare_paper);
      poly_eval_suite(out, q, n);
    }
    classes.insert(static_cast<int>(q % 4));
  }
  for (int cls : classes) {
    for (int n = 2; n <= opts.max_n; ++n) poly_class_suite(out, cls, n, opts.compare_paper);
  }
  for (int n = 2; n <= opts.max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      out.compare("limits.ksets", std::nullopt, n, k, str(oracle::count_symmetric_ksets(n, k)),
                  str(closed::limit_value(n, k)));
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace dotbinom::verify
