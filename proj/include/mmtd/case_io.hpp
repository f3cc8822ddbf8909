#pragma once

// MATPOWER case parsing, the bundled test systems, and the JSON / CSV
// documents exchanged between tools.
//
// Branch numbering: inside the library branches are addressed by 0-based
// position in GridCase::branches. Every document and CLI listing uses the
// 1-based file order instead (branch l = l-th in-service row of mpc.branch).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "mmtd/detail/bundled_case_data.hpp"
#include "mmtd/errors.hpp"

namespace mmtd {

enum class BusType { pq = 1, pv = 2, ref = 3 };

struct Bus {
  int id = 0;
  BusType type = BusType::pq;
  double pd_mw = 0.0;
};

struct Generator {
  int bus = 0;
  double pg_mw = 0.0;
  bool in_service = true;
};

struct Branch {
  int from = 0;
  int to = 0;
  double r = 0.0;  ///< p.u.
  double x = 0.0;  ///< p.u.
  std::size_t source_row = 0;  ///< 1-based row inside mpc.branch, before dropping out-of-service rows
};

struct GridCase {
  std::string name;
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Generator> generators;
  std::vector<Branch> branches;  ///< in-service only, file order
  std::vector<std::size_t> excluded_rows;  ///< 1-based source rows dropped for status 0

  std::size_t bus_count() const noexcept { return buses.size(); }
  std::size_t branch_count() const noexcept { return branches.size(); }
  std::size_t state_count() const noexcept { return buses.empty() ? 0 : buses.size() - 1; }

  int reference_bus() const {
    for (const auto& b : buses)
      if (b.type == BusType::ref) return b.id;
    throw ValidationError("case has no reference bus");
  }

  Eigen::VectorXd reactances() const {
    Eigen::VectorXd x(static_cast<Eigen::Index>(branches.size()));
    for (std::size_t l = 0; l < branches.size(); ++l) x(static_cast<Eigen::Index>(l)) = branches[l].x;
    return x;
  }

  Eigen::VectorXd resistances() const {
    Eigen::VectorXd r(static_cast<Eigen::Index>(branches.size()));
    for (std::size_t l = 0; l < branches.size(); ++l) r(static_cast<Eigen::Index>(l)) = branches[l].r;
    return r;
  }

  /// Net injection Pg - Pd per bus (MW), indexed like `buses`.
  std::vector<double> net_injection_mw() const {
    std::vector<double> p(buses.size(), 0.0);
    auto index_of = [&](int id) {
      for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].id == id) return i;
      throw ValidationError("generator at undeclared bus " + std::to_string(id));
    };
    for (std::size_t i = 0; i < buses.size(); ++i) p[i] -= buses[i].pd_mw;
    for (const auto& g : generators)
      if (g.in_service) p[index_of(g.bus)] += g.pg_mw;
    return p;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Drops a trailing `% comment`, ignoring '%' inside single-quoted strings.
inline std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\'') quoted = !quoted;
    if (line[i] == '%' && !quoted) return line.substr(0, i);
  }
  return line;
}

inline double parse_number(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    if (token == "Inf" || token == "inf") return HUGE_VAL;
    if (token == "-Inf" || token == "-inf") return -HUGE_VAL;
    throw ParseError(line_no, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

struct NumericMatrix {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> lines;
  std::size_t start_line = 0;
};

// Splits `body` into values, appending each ';'-terminated group as a row.
inline void consume_matrix_text(std::string_view body, std::size_t line_no, NumericMatrix& m,
                                std::vector<double>& pending) {
  std::size_t i = 0;
  while (i < body.size()) {
    const char ch = body[i];
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
      ++i;
      continue;
    }
    if (ch == ';') {
      if (!pending.empty()) {
        m.rows.push_back(std::move(pending));
        m.lines.push_back(line_no);
        pending.clear();
      }
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && body[j] != ' ' && body[j] != '\t' && body[j] != ',' && body[j] != ';' &&
           body[j] != '\r')
      ++j;
    pending.push_back(parse_number(body.substr(i, j - i), line_no));
    i = j;
  }
}

}  // namespace detail

/// Parses the subset of the MATPOWER case format the DC model needs:
/// `baseMVA`, and the numeric `bus`, `gen` and `branch` matrices. Other
/// matrices and cell arrays are skipped. Branches with status 0 are dropped;
/// their source rows are kept in `excluded_rows`.
inline GridCase parse_matpower_case(std::istream& in, std::string name = {}) {
  using detail::NumericMatrix;
  std::optional<double> base_mva;
  std::optional<NumericMatrix> bus_m, gen_m, branch_m;

  NumericMatrix scratch;
  NumericMatrix* current = nullptr;
  bool in_matrix = false;
  bool in_cell = false;
  std::vector<double> pending;

  std::string raw;
  std::size_t line_no = 0;
  auto finish_matrix = [&](std::size_t at) {
    if (!pending.empty()) {
      current->rows.push_back(std::move(pending));
      current->lines.push_back(at);
      pending.clear();
    }
    in_matrix = false;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;

    if (in_cell) {
      if (line.find('}') != std::string_view::npos) in_cell = false;
      continue;
    }
    if (in_matrix) {
      const auto close = line.find(']');
      detail::consume_matrix_text(line.substr(0, close), line_no, *current, pending);
      if (close != std::string_view::npos) finish_matrix(line_no);
      continue;
    }

    if (line.rfind("function", 0) == 0) {
      const auto eq = line.find('=');
      if (name.empty() && eq != std::string_view::npos) name = std::string(detail::trim(line.substr(eq + 1)));
      continue;
    }
    if (line.rfind("mpc.", 0) != 0) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected assignment");
    const std::string_view field = detail::trim(line.substr(4, eq - 4));
    std::string_view rhs = detail::trim(line.substr(eq + 1));

    if (!rhs.empty() && rhs.front() == '{') {
      in_cell = rhs.find('}') == std::string_view::npos;
      continue;
    }
    if (!rhs.empty() && rhs.front() == '[') {
      if (field == "bus")
        current = &bus_m.emplace();
      else if (field == "gen")
        current = &gen_m.emplace();
      else if (field == "branch")
        current = &branch_m.emplace();
      else
        current = &(scratch = NumericMatrix{});
      current->start_line = line_no;
      in_matrix = true;
      rhs.remove_prefix(1);
      const auto close = rhs.find(']');
      detail::consume_matrix_text(rhs.substr(0, close), line_no, *current, pending);
      if (close != std::string_view::npos) finish_matrix(line_no);
      continue;
    }
    if (field == "baseMVA") {
      if (!rhs.empty() && rhs.back() == ';') rhs.remove_suffix(1);
      base_mva = detail::parse_number(detail::trim(rhs), line_no);
    }
  }
  if (in_matrix) throw ParseError(line_no, "unterminated matrix");

  if (!bus_m) throw ParseError(line_no, "missing mpc.bus matrix");
  if (!base_mva) throw ParseError(line_no, "missing mpc.baseMVA");

  auto require_width = [](const NumericMatrix& m, std::size_t min_cols, const char* what) {
    const std::size_t width = m.rows.empty() ? 0 : m.rows.front().size();
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      if (m.rows[i].size() != width)
        throw ParseError(m.lines[i], std::string(what) + " row has " + std::to_string(m.rows[i].size()) +
                                         " columns, expected " + std::to_string(width));
      if (m.rows[i].size() < min_cols)
        throw ParseError(m.lines[i], std::string(what) + " row needs at least " + std::to_string(min_cols) +
                                         " columns");
    }
  };

  GridCase gc;
  gc.name = name;
  gc.base_mva = *base_mva;
  if (!(gc.base_mva > 0.0)) throw ValidationError("baseMVA must be positive");

  require_width(*bus_m, 3, "bus");
  for (std::size_t i = 0; i < bus_m->rows.size(); ++i) {
    const auto& row = bus_m->rows[i];
    const int type = static_cast<int>(row[1]);
    if (type < 1 || type > 3)
      throw ValidationError("bus " + std::to_string(static_cast<int>(row[0])) + " has unsupported type " +
                            std::to_string(type));
    gc.buses.push_back({static_cast<int>(row[0]), static_cast<BusType>(type), row[2]});
  }
  {
    std::vector<int> ids;
    for (const auto& b : gc.buses) ids.push_back(b.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw ValidationError("duplicate bus id");
  }
  const auto ref_count = std::count_if(gc.buses.begin(), gc.buses.end(),
                                       [](const Bus& b) { return b.type == BusType::ref; });
  if (ref_count == 0) throw ValidationError("case has no reference bus");
  if (ref_count > 1) throw ValidationError("case has more than one reference bus");

  auto declared = [&](int id) {
    return std::any_of(gc.buses.begin(), gc.buses.end(), [id](const Bus& b) { return b.id == id; });
  };

  if (gen_m) {
    require_width(*gen_m, 2, "gen");
    for (std::size_t i = 0; i < gen_m->rows.size(); ++i) {
      const auto& row = gen_m->rows[i];
      const int bus = static_cast<int>(row[0]);
      if (!declared(bus)) throw ValidationError("generator at undeclared bus " + std::to_string(bus));
      gc.generators.push_back({bus, row[1], row.size() > 7 ? row[7] > 0.0 : true});
    }
  }

  if (branch_m) {
    require_width(*branch_m, 4, "branch");
    for (std::size_t i = 0; i < branch_m->rows.size(); ++i) {
      const auto& row = branch_m->rows[i];
      const bool in_service = row.size() > 10 ? row[10] != 0.0 : true;
      if (!in_service) {
        gc.excluded_rows.push_back(i + 1);
        continue;
      }
      Branch br{static_cast<int>(row[0]), static_cast<int>(row[1]), row[2], row[3], i + 1};
      if (!declared(br.from) || !declared(br.to))
        throw ValidationError("branch row " + std::to_string(i + 1) + " references an undeclared bus");
      if (br.from == br.to) throw ValidationError("branch row " + std::to_string(i + 1) + " is a self loop");
      if (!(br.x > 0.0))
        throw ValidationError("branch row " + std::to_string(i + 1) + " has non-positive reactance");
      gc.branches.push_back(br);
    }
  }
  return gc;
}

inline GridCase parse_matpower_case(std::string_view text, std::string name = {}) {
  std::istringstream in{std::string(text)};
  return parse_matpower_case(in, std::move(name));
}

/// Writes the fields GridCase keeps back out as a MATPOWER case. Columns the
/// parser ignores are written as zeros.
inline void write_matpower_case(std::ostream& out, const GridCase& gc) {
  std::ostringstream s;
  s.precision(17);
  s << "function mpc = " << (gc.name.empty() ? std::string("grid_case") : gc.name) << "\n";
  s << "mpc.version = '2';\n";
  s << "mpc.baseMVA = " << gc.base_mva << ";\n";
  s << "%\tbus_i\ttype\tPd\n";
  s << "mpc.bus = [\n";
  for (const auto& b : gc.buses) s << '\t' << b.id << '\t' << static_cast<int>(b.type) << '\t' << b.pd_mw << ";\n";
  s << "];\n";
  s << "%\tbus\tPg\tQg\tQmax\tQmin\tVg\tmBase\tstatus\n";
  s << "mpc.gen = [\n";
  for (const auto& g : gc.generators)
    s << '\t' << g.bus << '\t' << g.pg_mw << "\t0\t0\t0\t1\t" << gc.base_mva << '\t' << (g.in_service ? 1 : 0)
      << ";\n";
  s << "];\n";
  s << "%\tfbus\ttbus\tr\tx\tb\trateA\trateB\trateC\tratio\tangle\tstatus\n";
  s << "mpc.branch = [\n";
  for (const auto& br : gc.branches)
    s << '\t' << br.from << '\t' << br.to << '\t' << br.r << '\t' << br.x << "\t0\t0\t0\t0\t0\t0\t1;\n";
  s << "];\n";
  out << s.str();
}

inline std::string write_matpower_case(const GridCase& gc) {
  std::ostringstream out;
  write_matpower_case(out, gc);
  return out.str();
}

inline std::vector<std::string> bundled_case_names() {
  std::vector<std::string> names;
  for (const auto& c : detail::k_bundled_cases) names.emplace_back(c.name);
  return names;
}

/// Returns one of bus3, bus6, bus14, bus39, bus57, bus118. The 6-bus system is
/// MATPOWER's case6ww; the others are the MATPOWER files of the same size.
inline GridCase load_bundled_case(std::string_view name) {
  for (const auto& c : detail::k_bundled_cases)
    if (c.name == name) return parse_matpower_case(c.text, std::string(c.name));
  throw LookupError("unknown bundled case '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Schedule document

struct MtdScheduleDocument {
  std::string case_name;
  std::vector<std::size_t> deployment;  ///< 1-based branch numbers
  double tau = 0.2;
  std::vector<double> x0;
  std::vector<std::vector<double>> stages;
  std::size_t achieved_rank = 0;
  std::size_t supremum = 0;

  friend bool operator==(const MtdScheduleDocument&, const MtdScheduleDocument&) = default;
};

inline constexpr std::string_view k_schedule_format = "mmtd-schedule";
inline constexpr std::string_view k_branch_numbering = "file-order-1-based";

/// Throws ValidationError when a stage leaves the tau box or touches a branch
/// outside the deployment.
inline void validate_schedule(const MtdScheduleDocument& doc) {
  const std::size_t m = doc.x0.size();
  if (!(doc.tau > 0.0 && doc.tau < 1.0)) throw ValidationError("tau must lie in (0, 1)");
  std::vector<bool> deployed(m, false);
  for (auto l : doc.deployment) {
    if (l == 0 || l > m) throw ValidationError("deployment index " + std::to_string(l) + " out of range");
    deployed[l - 1] = true;
  }
  for (std::size_t k = 0; k < doc.stages.size(); ++k) {
    const auto& xk = doc.stages[k];
    if (xk.size() != m) throw ValidationError("stage " + std::to_string(k + 1) + " has wrong length");
    for (std::size_t l = 0; l < m; ++l) {
      if (!deployed[l]) {
        if (xk[l] != doc.x0[l])
          throw ValidationError("stage " + std::to_string(k + 1) + " perturbs undeployed branch " +
                                std::to_string(l + 1));
        continue;
      }
      const double lo = (1.0 - doc.tau) * doc.x0[l];
      const double hi = (1.0 + doc.tau) * doc.x0[l];
      if (xk[l] < lo || xk[l] > hi)
        throw ValidationError("stage " + std::to_string(k + 1) + " branch " + std::to_string(l + 1) +
                              " violates the tau bound");
    }
  }
}

/// JSON text. Doubles are written in shortest round-trip form, so reading the
/// document back reproduces every value bit for bit.
inline void write_schedule(std::ostream& out, const MtdScheduleDocument& doc) {
  validate_schedule(doc);
  nlohmann::ordered_json j;
  j["format"] = k_schedule_format;
  j["version"] = 1;
  j["case"] = doc.case_name;
  j["branch_numbering"] = k_branch_numbering;
  j["deployment"] = doc.deployment;
  j["tau"] = doc.tau;
  j["x0"] = doc.x0;
  j["stages"] = doc.stages;
  j["achieved_rank"] = doc.achieved_rank;
  j["supremum"] = doc.supremum;
  out << j.dump(2) << '\n';
}

inline std::string write_schedule(const MtdScheduleDocument& doc) {
  std::ostringstream out;
  write_schedule(out, doc);
  return out.str();
}

namespace detail {

template <class T>
T json_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(key, std::string("wrong type (") + e.what() + ")");
  }
}

}  // namespace detail

inline MtdScheduleDocument read_schedule(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("document", e.what());
  }
  if (!j.is_object()) throw FormatError("document", "expected a JSON object");
  if (detail::json_field<std::string>(j, "format") != k_schedule_format)
    throw FormatError("format", "expected '" + std::string(k_schedule_format) + "'");
  if (detail::json_field<std::string>(j, "branch_numbering") != k_branch_numbering)
    throw FormatError("branch_numbering", "expected '" + std::string(k_branch_numbering) + "'");

  MtdScheduleDocument doc;
  doc.case_name = detail::json_field<std::string>(j, "case");
  doc.deployment = detail::json_field<std::vector<std::size_t>>(j, "deployment");
  doc.tau = detail::json_field<double>(j, "tau");
  doc.x0 = detail::json_field<std::vector<double>>(j, "x0");
  doc.stages = detail::json_field<std::vector<std::vector<double>>>(j, "stages");
  doc.achieved_rank = detail::json_field<std::size_t>(j, "achieved_rank");
  doc.supremum = detail::json_field<std::size_t>(j, "supremum");
  try {
    validate_schedule(doc);
  } catch (const ValidationError& e) {
    throw FormatError("stages", e.what());
  }
  return doc;
}

inline MtdScheduleDocument read_schedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_schedule(in);
}

// ---------------------------------------------------------------------------
// CSV emitters for plotting

/// `stage,doa_over_n`, stage 0 being the unperturbed system.
inline void write_doa_csv(std::ostream& out, const std::vector<std::size_t>& doa, std::size_t n) {
  out << "stage,doa_over_n\n";
  for (std::size_t k = 0; k < doa.size(); ++k)
    out << k << ',' << (n == 0 ? 0.0 : static_cast<double>(doa[k]) / static_cast<double>(n)) << '\n';
}

struct AdpCsvRow {
  std::string strategy;
  std::string case_name;
  double adp = 0.0;
};

inline void write_adp_csv(std::ostream& out, const std::vector<AdpCsvRow>& rows) {
  out << "strategy,case,adp\n";
  for (const auto& r : rows) out << r.strategy << ',' << r.case_name << ',' << r.adp << '\n';
}

}  // namespace mmtd
