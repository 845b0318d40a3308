#include "dotbinom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dotbinom/closed.hpp"
#include "dotbinom/error.hpp"
#include "dotbinom/gf.hpp"
#include "dotbinom/oracle.hpp"
#include "dotbinom/polyq.hpp"
#include "dotbinom/verify.hpp"

namespace dotbinom::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string plain_table(const Output& output) {
  std::vector<std::size_t> width(output.columns.size(), 0);
  for (std::size_t c = 0; c < output.columns.size(); ++c) width[c] = output.columns[c].size();
  for (const auto& row : output.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      text += cell;
      if (c + 1 < cells.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  };
  line(output.columns);
  for (const auto& row : output.rows) line(row);
  for (const auto& [key, value] : output.summary) os << key << '=' << value << '\n';
  return os.str();
}

std::string render(const Output& output, Format format) {
  switch (format) {
    case Format::Plain: return output.plain.empty() ? plain_table(output) : output.plain;
    case Format::Csv: {
      std::ostringstream os;
      for (std::size_t c = 0; c < output.columns.size(); ++c) {
        os << (c ? "," : "") << csv_field(output.columns[c]);
      }
      os << '\n';
      for (const auto& row : output.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
        os << '\n';
      }
      return os.str();
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["command"] = output.command;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : output.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < output.columns.size() && c < row.size(); ++c) obj[output.columns[c]] = row[c];
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      if (!output.summary.empty()) {
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto& [key, value] : output.summary) summary[key] = value;
        doc["summary"] = std::move(summary);
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

namespace {

using closed::Flavor;
using closed::Variant;

struct Globals {
  std::string format = "plain";
  unsigned jobs = 1;
  std::uint64_t budget = oracle::kDefaultBudget;
  bool timing = false;

  oracle::Options oracle_options() const {
    oracle::Options o;
    o.budget = budget;
    o.jobs = jobs;
    return o;
  }
};

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "csv") return Format::Csv;
  return Format::Json;
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

/// A command's result and whether any of its checks failed.
struct Result {
  Output output;
  bool failed = false;
};

quad::AmbientForm ambient_for(std::uint64_t q, int n, bool lambda) {
  auto field = gf::make_field_of_order(q);
  return lambda ? quad::AmbientForm::lambda_dot(field, n) : quad::AmbientForm::dot(field, n);
}

std::optional<std::uint64_t> oracle_line_count(std::uint64_t q, int n, Flavor flavor, const Globals& g) {
  const bool lambda = flavor == Flavor::SpacelikeInLambdaDot || flavor == Flavor::TimelikeInLambdaDot;
  const bool spacelike = flavor == Flavor::SpacelikeInDot || flavor == Flavor::SpacelikeInLambdaDot;
  if (n < 1) return std::nullopt;
  try {
    const auto lines = oracle::count_lines(ambient_for(q, n, lambda), g.oracle_options());
    return spacelike ? lines.spacelike : lines.timelike;
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded && e.code() != Errc::OrderOutOfRange) throw;
    return std::nullopt;
  }
}

Result cmd_bracket(std::uint64_t q, int n, const std::string& flavor_name, bool compare, const Globals& g) {
  const Flavor flavor = closed::parse_flavor(flavor_name);
  const BigInt value = closed::bracket(q, n, flavor);
  Result r;
  r.output.command = "bracket";
  r.output.columns = {"q", "n", "flavor", "value"};
  std::vector<std::string> row = {str(q), str(n), std::string(closed::to_string(flavor)), str(value)};
  if (!compare) {
    r.output.rows.push_back(row);
    r.output.plain = str(value) + "\n";
    return r;
  }
  if (n < 1) throw Error(Errc::InvalidArgument, "--compare-paper needs n >= 1");
  const std::string verbatim = str(closed::verbatim_line_count(q, n, flavor));
  const auto counted = oracle_line_count(q, n, flavor, g);
  const std::string oracle_value = counted ? str(*counted) : "skipped";
  verify::Status status = verify::Status::Skipped;
  if (counted) {
    status = verify::classify_verbatim(oracle_value, str(value), verbatim);
    if (str(value) != oracle_value) status = verify::Status::Fail;
  }
  r.failed = status == verify::Status::Fail;
  r.output.columns.insert(r.output.columns.end(), {"verbatim", "oracle", "status"});
  row.insert(row.end(), {verbatim, oracle_value, std::string(verify::to_string(status))});
  r.output.rows.push_back(row);
  r.output.plain = "normative=" + str(value) + "\nverbatim=" + verbatim + "\noracle=" + oracle_value +
                   "\nstatus=" + std::string(verify::to_string(status)) + "\n";
  return r;
}

Result cmd_triangle(std::uint64_t q, int rows) {
  if (rows < 0 || rows > 30) throw Error(Errc::InvalidArgument, "--rows must be in 0..30");
  Result r;
  r.output.command = "triangle";
  r.output.columns = {"q", "n", "k", "value"};
  for (int n = 0; n <= rows; ++n) {
    std::vector<std::string> line;
    for (int k = 0; k <= n; ++k) {
      const std::string v = str(closed::dot_binom(q, n, k));
      line.push_back(v);
      r.output.rows.push_back({str(q), str(n), str(k), v});
    }
    r.output.plain += join(line, " ") + "\n";
  }
  return r;
}

Result cmd_binom(std::uint64_t q, int n, int k, const std::string& variant_name, bool with_oracle, const Globals& g) {
  const Variant variant = closed::parse_variant(variant_name);
  const BigInt value = closed::dot_binom_variant(q, n, k, variant);
  Result r;
  r.output.command = "binom";
  r.output.columns = {"q", "n", "k", "variant", "value"};
  std::vector<std::string> row = {str(q), str(n), str(k), std::string(closed::to_string(variant)), str(value)};
  r.output.plain = str(value) + "\n";
  if (with_oracle) {
    const bool lambda_ambient = variant == Variant::LD || variant == Variant::LL;
    const bool lambda_sub = variant == Variant::DL || variant == Variant::LL;
    std::string counted = "skipped";
    std::string status = "Skipped";
    try {
      const auto tally = oracle::count_subspaces_by_class(ambient_for(q, n, lambda_ambient), k, g.oracle_options());
      counted = str(lambda_sub ? tally.lambda_dot_type : tally.dot_type);
      status = counted == str(value) ? "Pass" : "Fail";
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded && e.code() != Errc::OrderOutOfRange) throw;
    }
    r.failed = status == "Fail";
    r.output.columns.insert(r.output.columns.end(), {"oracle", "status"});
    row.insert(row.end(), {counted, status});
    r.output.plain = "value=" + str(value) + "\noracle=" + counted + "\nstatus=" + status + "\n";
  }
  r.output.rows.push_back(row);
  return r;
}

Result cmd_poly(int cls, int n, std::optional<int> only_k, bool checks) {
  Result r;
  r.output.command = "poly";
  r.output.columns = {"class", "n", "k", "poly"};
  if (checks) {
    r.output.columns.insert(r.output.columns.end(),
                            {"degree", "leading", "sign", "published_sign", "depressed_degree", "limit"});
  }
  const int lo = only_k.value_or(0);
  const int hi = only_k.value_or(n);
  for (int k = lo; k <= hi; ++k) {
    const polyq::PolyFamilyKey key{cls, n, k};
    const auto p = polyq::dot_binom_poly(key);
    std::vector<std::string> row = {str(cls), str(n), str(k), p.to_string()};
    std::string text = "p_{" + str(n) + "," + str(k) + "} = " + p.to_string();
    if (checks) {
      const bool interior = k > 0 && k < n;
      std::string sign;
      std::string published;
      std::string depressed;
      std::string limit;
      if (interior) {
        const auto report = polyq::functional_sign_report(key);
        sign = polyq::to_string(report.computed);
        published = polyq::to_string(report.printed_a);
        depressed = str(polyq::depress(key).depressed_degree());
        try {
          polyq::limit_check(key);
          limit = str(closed::limit_value(n, k));
        } catch (const MismatchError& e) {
          limit = "mismatch " + e.actual();
          r.failed = true;
        }
      }
      const std::string degree = str(p.degree());
      const std::string leading = dotbinom::to_string(p.leading());
      row.insert(row.end(), {degree, leading, sign, published, depressed, limit});
      text += "  degree=" + degree + " leading=" + leading;
      if (interior) {
        text += " sign=" + sign + " published_sign=" + published + " depressed_degree=" + depressed +
                " limit=" + limit;
      }
      if (p.degree() != k * (n - k)) r.failed = true;
    }
    r.output.rows.push_back(row);
    r.output.plain += text + "\n";
  }
  return r;
}

Result cmd_group_order(std::uint64_t q, int n, bool enumerate, bool compare, const Globals& g) {
  const BigInt value = closed::group_order(q, n);
  Result r;
  r.output.command = "group-order";
  r.output.columns = {"q", "n", "value"};
  std::vector<std::string> row = {str(q), str(n), str(value)};
  std::string plain = "value=" + str(value) + "\n";
  if (enumerate) {
    std::string counted = "skipped";
    try {
      counted = str(oracle::enumerate_orthogonal_group(ambient_for(q, n, false), g.oracle_options()));
      if (counted != str(value)) r.failed = true;
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded && e.code() != Errc::OrderOutOfRange) throw;
    }
    r.output.columns.push_back("enumerated");
    row.push_back(counted);
    plain += "enumerated=" + counted + "\n";
  }
  if (compare) {
    const auto printed = closed::printed_group_order(q, n);
    const std::string verbatim = printed ? str(*printed) : "undefined";
    const verify::Status status = !printed                   ? verify::Status::Skipped
                                  : *printed == value        ? verify::Status::Pass
                                                             : verify::Status::PaperDiscrepancy;
    r.output.columns.insert(r.output.columns.end(), {"verbatim", "status"});
    row.insert(row.end(), {verbatim, std::string(verify::to_string(status))});
    plain += "verbatim=" + verbatim + "\nstatus=" + std::string(verify::to_string(status)) + "\n";
  }
  r.output.rows.push_back(row);
  r.output.plain = enumerate || compare ? plain : str(value) + "\n";
  return r;
}

std::optional<BigInt> poset_mobius(std::uint64_t q, int n, const Globals& g) {
  try {
    const auto snap = oracle::build_poset(ambient_for(q, n, false), oracle::PosetKind::Euclidean, g.oracle_options());
    return oracle::mobius_bottom(snap, g.oracle_options());
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded && e.code() != Errc::OrderOutOfRange) throw;
    return std::nullopt;
  }
}

Result cmd_mobius(std::uint64_t q, int n, bool with_oracle, const Globals& g) {
  const auto seq = closed::mobius_sequence(q, n);
  Result r;
  r.output.command = "mobius";
  r.output.columns = {"q", "k", "b", "mu"};
  if (with_oracle) r.output.columns.insert(r.output.columns.end(), {"poset_mu", "status"});
  for (int k = 0; k <= n; ++k) {
    std::vector<std::string> row = {str(q), str(k), str(seq.b[k]), str(seq.mu[k])};
    if (with_oracle) {
      std::string counted = "1";
      std::string status = "Pass";
      if (k > 0) {
        const auto mu = poset_mobius(q, k, g);
        counted = mu ? str(*mu) : "skipped";
        status = !mu ? "Skipped" : (*mu == seq.mu[k] ? "Pass" : "Fail");
      }
      if (status == "Fail") r.failed = true;
      row.insert(row.end(), {counted, status});
    }
    r.output.rows.push_back(row);
  }
  return r;
}

Result cmd_limits(int n, std::optional<int> only_k) {
  if (n < 2 || n > 24) throw Error(Errc::InvalidArgument, "--n must be in 2..24");
  Result r;
  r.output.command = "limits";
  r.output.columns = {"n", "k", "limit", "symmetric_ksets", "status"};
  const int lo = only_k.value_or(1);
  const int hi = only_k.value_or(n - 1);
  for (int k = lo; k <= hi; ++k) {
    const std::string limit = str(closed::limit_value(n, k));
    const std::string counted = str(oracle::count_symmetric_ksets(n, k));
    const bool ok = limit == counted;
    if (!ok) r.failed = true;
    r.output.rows.push_back({str(n), str(k), limit, counted, ok ? "Pass" : "Fail"});
  }
  return r;
}

Result cmd_oracle_count(std::uint64_t q, int n, bool lambda, bool no_poset, const Globals& g) {
  const auto ambient = ambient_for(q, n, lambda);
  const auto report = oracle::count_report(ambient, g.oracle_options(), !no_poset);
  Result r;
  r.output.command = "oracle count";
  r.output.columns = {"k", "dot_type", "lambda_dot_type", "degenerate", "total"};
  for (std::size_t k = 0; k < report.by_dim.size(); ++k) {
    const auto& t = report.by_dim[k];
    r.output.rows.push_back(
        {str(static_cast<int>(k)), str(t.dot_type), str(t.lambda_dot_type), str(t.degenerate), str(t.total())});
  }
  r.output.summary = {{"ambient", report.ambient},
                      {"lines.spacelike", str(report.lines.spacelike)},
                      {"lines.timelike", str(report.lines.timelike)},
                      {"lines.lightlike", str(report.lines.lightlike)},
                      {"flag_count", report.flag_count ? str(*report.flag_count) : "skipped"},
                      {"mobius_bottom_to_top",
                       report.mobius_bottom_to_top ? str(*report.mobius_bottom_to_top) : "skipped"}};
  if (g.timing) {
    std::ostringstream os;
    os << report.elapsed.count();
    r.output.summary.emplace_back("elapsed_seconds", os.str());
  }
  r.output.plain = oracle::to_key_value(report, g.timing);
  return r;
}

Result cmd_oracle_poset(std::uint64_t q, int n, const std::string& kind_name, bool lambda, const std::string& graph,
                        const Globals& g) {
  oracle::PosetKind kind;
  if (kind_name == "euclidean") {
    kind = oracle::PosetKind::Euclidean;
  } else if (kind_name == "lorentzian") {
    kind = oracle::PosetKind::Lorentzian;
  } else {
    throw Error(Errc::InvalidArgument, "--kind must be euclidean or lorentzian");
  }
  const auto snap = oracle::build_poset(ambient_for(q, n, lambda), kind, g.oracle_options());
  if (!graph.empty()) {
    std::ofstream file(graph);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + graph);
    file << oracle::hasse_to_dot(snap);
  }
  Result r;
  r.output.command = "oracle poset";
  r.output.columns = {"rank", "size"};
  const auto sizes = snap.rank_sizes();
  std::vector<std::string> sizes_text;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    r.output.rows.push_back({str(static_cast<int>(i)), str(static_cast<std::uint64_t>(sizes[i]))});
    sizes_text.push_back(str(static_cast<std::uint64_t>(sizes[i])));
  }
  r.output.summary = {{"ambient", snap.ambient.describe()},
                      {"kind", kind_name},
                      {"nodes", str(static_cast<std::uint64_t>(snap.nodes.size()))},
                      {"edges", str(static_cast<std::uint64_t>(snap.hasse_edges.size()))}};
  if (kind == oracle::PosetKind::Euclidean) r.output.summary.emplace_back("flags", str(oracle::count_flags(snap)));
  r.output.plain = "ambient=" + snap.ambient.describe() + "\nkind=" + kind_name + "\nranks=" + join(sizes_text, " ") +
                   "\nnodes=" + str(static_cast<std::uint64_t>(snap.nodes.size())) +
                   "\nedges=" + str(static_cast<std::uint64_t>(snap.hasse_edges.size())) + "\n";
  if (kind == oracle::PosetKind::Euclidean) r.output.plain += "flags=" + str(oracle::count_flags(snap)) + "\n";
  if (!graph.empty()) r.output.plain += "graph=" + graph + "\n";
  return r;
}

Result cmd_flags(std::uint64_t q, int n, const Globals& g) {
  const BigInt value = closed::bracket_factorial(q, n);
  std::string counted = "skipped";
  std::string status = "Skipped";
  try {
    const auto snap = oracle::build_poset(ambient_for(q, n, false), oracle::PosetKind::Euclidean, g.oracle_options());
    counted = str(oracle::count_flags(snap));
    status = counted == str(value) ? "Pass" : "Fail";
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded && e.code() != Errc::OrderOutOfRange) throw;
  }
  Result r;
  r.failed = status == "Fail";
  r.output.command = "flags";
  r.output.columns = {"q", "n", "factorial", "poset_flags", "status"};
  r.output.rows.push_back({str(q), str(n), str(value), counted, status});
  r.output.plain = "factorial=" + str(value) + "\nposet_flags=" + counted + "\nstatus=" + status + "\n";
  return r;
}

std::string param(const std::optional<std::uint64_t>& v) { return v ? str(*v) : ""; }
std::string param(const std::optional<int>& v) { return v ? str(*v) : ""; }

Result cmd_verify(const verify::Options& opts, const Globals& g) {
  const auto report = verify::run(opts);
  Result r;
  r.failed = !report.ok();
  r.output.command = "verify";
  r.output.columns = {"check", "q", "n", "k", "expected", "actual", "status", "note"};
  std::ostringstream plain;
  for (const auto& rec : report.records) {
    const std::string status(verify::to_string(rec.status));
    r.output.rows.push_back({rec.check, param(rec.q), param(rec.n), param(rec.k), rec.expected, rec.actual, status,
                             rec.note});
    plain << status << ' ' << rec.check;
    if (rec.q) plain << " q=" << *rec.q;
    if (rec.n) plain << " n=" << *rec.n;
    if (rec.k) plain << " k=" << *rec.k;
    if (rec.status != verify::Status::Skipped) plain << " expected=" << rec.expected << " actual=" << rec.actual;
    if (!rec.note.empty()) plain << " (" << rec.note << ')';
    plain << '\n';
  }
  const auto s = report.summary();
  r.output.summary = {{"pass", str(static_cast<std::uint64_t>(s.pass))},
                      {"fail", str(static_cast<std::uint64_t>(s.fail))},
                      {"paper_discrepancy", str(static_cast<std::uint64_t>(s.paper_discrepancy))},
                      {"skipped", str(static_cast<std::uint64_t>(s.skipped))}};
  if (g.timing) {
    std::ostringstream os;
    os << report.elapsed.count();
    r.output.summary.emplace_back("elapsed_seconds", os.str());
  }
  for (const auto& [key, value] : r.output.summary) plain << key << '=' << value << '\n';
  r.output.plain = plain.str();
  return r;
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::ExactDivisionFailed:
    case Errc::IdentityViolated:
    case Errc::Mismatch:
    case Errc::NeitherSign:
      return false;
    default:
      return true;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dot-analogues of binomial coefficients over finite fields, with an enumeration oracle", "dotbinom"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--budget", g.budget, "Cap on enumerated objects")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--timing", g.timing, "Include elapsed time (output is then not reproducible)");

  std::uint64_t q = 0;
  int n = 0;
  int k = 0;
  std::optional<int> opt_k;
  std::string flavor = "SpacelikeInDot";
  std::string variant = "DD";
  bool compare = false;
  bool with_oracle = false;
  bool checks = false;
  bool enumerate = false;
  bool lambda = false;
  bool no_poset = false;
  int rows = 0;
  int cls = 1;
  std::string kind = "euclidean";
  std::string graph;
  verify::Options vopts;
  std::vector<std::uint64_t> q_list;

  auto* bracket = app.add_subcommand("bracket", "Bracket [n]_d and the line-count flavors");
  bracket->add_option("--q", q, "Odd prime power")->required();
  bracket->add_option("--n", n, "Dimension")->required()->check(CLI::NonNegativeNumber);
  bracket->add_option("--flavor", flavor, "SpacelikeInDot, TimelikeInDot, SpacelikeInLambdaDot, TimelikeInLambdaDot")
      ->capture_default_str();
  bracket->add_flag("--compare-paper", compare, "Also evaluate the published line-count expression and enumerate");

  auto* triangle = app.add_subcommand("triangle", "Rows 0..rows of C(n,k)_d");
  triangle->add_option("--q", q, "Odd prime power")->required();
  triangle->add_option("--rows", rows, "Last row (at most 30)")->required();

  auto* binom = app.add_subcommand("binom", "One dot-binomial coefficient");
  binom->add_option("--q", q, "Odd prime power")->required();
  binom->add_option("--n", n, "Ambient dimension")->required();
  binom->add_option("--k", k, "Subspace dimension")->required();
  binom->add_option("--variant", variant, "DD, LD, DL or LL")->capture_default_str();
  binom->add_flag("--oracle", with_oracle, "Compare with exhaustive enumeration");

  auto* poly = app.add_subcommand("poly", "Polynomial p_{n,k}(q) for a congruence class");
  poly->add_option("--class", cls, "q mod 4")->required()->check(CLI::IsMember({1, 3}));
  poly->add_option("--n", n, "Ambient dimension")->required()->check(CLI::Range(0, 64));
  poly->add_option("--k", opt_k, "Subspace dimension (default: all)");
  poly->add_flag("--checks", checks, "Degree, leading coefficient, reversal sign, limit");

  auto* group = app.add_subcommand("group-order", "|O(n,q)| = 2^n [n]_d!");
  group->add_option("--q", q, "Odd prime power")->required();
  group->add_option("--n", n, "Dimension")->required()->check(CLI::NonNegativeNumber);
  group->add_flag("--enumerate", enumerate, "Count orthogonal matrices directly");
  group->add_flag("--compare-paper", compare, "Also evaluate the published closed forms");

  auto* mobius = app.add_subcommand("mobius", "Mobius values mu(0, dot_k) for k = 0..n");
  mobius->add_option("--q", q, "Odd prime power")->required();
  mobius->add_option("--n", n, "Largest dimension")->required()->check(CLI::NonNegativeNumber);
  mobius->add_flag("--oracle", with_oracle, "Compare with the poset definition");

  auto* limits = app.add_subcommand("limits", "Limits at q = +-1 against symmetric k-sets");
  limits->add_option("--n", n, "Dimension (2..24)")->required();
  limits->add_option("--k", opt_k, "Subspace dimension (default: all)");

  auto* orc = app.add_subcommand("oracle", "Exhaustive enumeration");
  orc->require_subcommand(1);
  auto* count = orc->add_subcommand("count", "Class tallies, line types, flags and Mobius value");
  count->add_option("--q", q, "Field order")->required();
  count->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  count->add_flag("--lambda", lambda, "Use the lambda-twisted form");
  count->add_flag("--no-poset", no_poset, "Skip the poset statistics");
  auto* poset = orc->add_subcommand("poset", "Build E_n(q) or LO_n(q)");
  poset->add_option("--q", q, "Field order")->required();
  poset->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  poset->add_option("--kind", kind, "euclidean or lorentzian")->capture_default_str();
  poset->add_flag("--lambda", lambda, "Use the lambda-twisted form");
  poset->add_option("--emit-graph", graph, "Write the Hasse diagram (Graphviz) to FILE");

  auto* flags = app.add_subcommand("flags", "Maximal chains of E_n(q) against [n]_d!");
  flags->add_option("--q", q, "Odd prime power")->required();
  flags->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run every cross-check");
  ver->add_option("--q", q_list, "Comma-separated field orders")->delimiter(',')->required();
  ver->add_option("--max-n", vopts.max_n, "Largest dimension")->capture_default_str();
  ver->add_flag("--compare-paper", vopts.compare_paper, "Also compare the published group orders and case lists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Result result;
    if (*bracket) {
      result = cmd_bracket(q, n, flavor, compare, g);
    } else if (*triangle) {
      result = cmd_triangle(q, rows);
    } else if (*binom) {
      result = cmd_binom(q, n, k, variant, with_oracle, g);
    } else if (*poly) {
      result = cmd_poly(cls, n, opt_k, checks);
    } else if (*group) {
      result = cmd_group_order(q, n, enumerate, compare, g);
    } else if (*mobius) {
      result = cmd_mobius(q, n, with_oracle, g);
    } else if (*limits) {
      result = cmd_limits(n, opt_k);
    } else if (*count) {
      result = cmd_oracle_count(q, n, lambda, no_poset, g);
    } else if (*poset) {
      result = cmd_oracle_poset(q, n, kind, lambda, graph, g);
    } else if (*flags) {
      result = cmd_flags(q, n, g);
    } else if (*ver) {
      vopts.q_list = q_list;
      vopts.budget = g.budget;
      vopts.jobs = g.jobs;
      result = cmd_verify(vopts, g);
    }
    out << render(result.output, parse_format(g.format));
    return result.failed ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? 2 : 1;
  }
}

}  // namespace dotbinom::cli
