#include "harbourne/report.hpp"

#include "harbourne/cover.hpp"
#include "harbourne/document.hpp"
#include "harbourne/error.hpp"
#include "harbourne/inequalities.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <variant>

namespace harbourne {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Tables

using Cell = std::variant<std::monostate, bool, BigInt, Rat, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool decimal_columns = false;  // decimals already have their own columns
};

// Field order of the analyze report. Constant so CSV columns never move.
const std::vector<std::string>& analyze_fields() {
  static const std::vector<std::string> fields = {
      "label",        "surface",      "ordinary",     "d",
      "genus",        "f0",           "f1",           "f2",
      "c_square",     "h_sing",       "h_index",      "h_index_witness",
      "e_curve",      "e_curve_minus_sing",           "e_complement",
      "b2_ge_b1",     "ball_quotient", "log_ck_square", "log_euler",
      "cn_c_bar_square", "cn_s",      "cn_h",         "cn_gap",
      "warnings"};
  return fields;
}

const std::vector<std::string>& bound_order() {
  static const std::vector<std::string> names = {
      "elliptic_bound", "elliptic_chain", "genus_bound", "abelian_spectrum",
      "b1",             "b2",             "zzbauer",     "hirz86"};
  return names;
}

std::string human_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(bool b) const { return b ? "yes" : "no"; }
    std::string operator()(const BigInt& v) const { return v.str(); }
    std::string operator()(const Rat& r) const { return r.str() + " (" + r.decimal(4) + ")"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const BigInt& v) const { return v.str(); }
    std::string operator()(const Rat& r) const { return r.str(); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, cell);
}

ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(const BigInt& v) const {
      if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
      }
      return v.str();
    }
    ordered_json operator()(const Rat& r) const { return r.str(); }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::string render_table(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_escape(table.columns[i]);
      }
      os << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
      break;
    }
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(obj));
      }
      os << rows.dump(2) << "\n";
      break;
    }
    case Format::Human: {
      std::vector<std::vector<std::string>> text;
      text.push_back(table.columns);
      for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (const auto& cell : row) {
          const Rat* r = std::get_if<Rat>(&cell);
          line.push_back(r && (r->is_integer() || table.decimal_columns) ? r->str() : human_cell(cell));
        }
        text.push_back(std::move(line));
      }
      std::vector<std::size_t> width(table.columns.size(), 0);
      for (const auto& line : text) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      }
      for (const auto& line : text) {
        std::string out;
        for (std::size_t i = 0; i < line.size(); ++i) {
          out += line[i];
          if (i + 1 < line.size()) out += std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << out << "\n";
      }
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Analysis

struct Analysis {
  std::vector<std::pair<std::string, Cell>> fields;
  std::vector<BoundResult> bounds;

  void set(const std::string& name, Cell value) {
    for (auto& [key, cell] : fields) {
      if (key == name) {
        cell = std::move(value);
        return;
      }
    }
    throw std::logic_error("unknown analyze field " + name);
  }
};

std::string witness_text(const Witness& w) {
  std::string out;
  for (const auto& [k, t] : w.taken) {
    if (!out.empty()) out += " ";
    out += std::to_string(k) + ":" + std::to_string(t);
  }
  return out;
}

std::string spectrum_text(const SingularitySpectrum& sp) {
  std::string out;
  for (const auto& [k, t] : sp.counts()) {
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(k) + "=" + std::to_string(t);
  }
  return out.empty() ? "(none)" : out;
}

bool generic_pipeline(const Arrangement& arr) { return arr.ordinary && !arr.spectrum.empty(); }

Analysis build_analysis(const Target& target) {
  const Arrangement& arr = target.entry.arrangement;
  Analysis a;
  for (const auto& name : analyze_fields()) a.fields.emplace_back(name, std::monostate{});

  const Moments m = f_moments(arr.spectrum);
  a.set("label", arr.label);
  a.set("surface", to_string(arr.surface));
  a.set("ordinary", arr.ordinary);
  a.set("d", arr.num_components());
  a.set("genus", arr.genus());
  a.set("f0", m.f0);
  a.set("f1", m.f1);
  a.set("f2", m.f2);
  if (arr.ordinary || arr.c_square_override) a.set("c_square", self_intersection(arr));

  if (generic_pipeline(arr)) {
    HReport report = h_report(arr);
    a.set("h_sing", report.h_at_sing);
    a.set("h_index", report.h_index);
    a.set("h_index_witness", witness_text(report.witness));
    a.bounds = std::move(report.bounds);
  } else if (!arr.ordinary && arr.c_square_override && !arr.spectrum.empty()) {
    PointMultiset points;
    for (const auto& [k, t] : arr.spectrum.counts()) points[k] += t;
    a.set("h_sing", h_at_points(*arr.c_square_override, points));
  }
  if (arr.ordinary && arr.surface == Surface::AbelianSurface) {
    if (arr.spectrum.empty()) {
      a.bounds.push_back(abelian_spectrum_ineq(arr.spectrum, arr.genus()));
    }
    const EulerNumbers e = euler_numbers(arr);
    a.set("e_curve", e.curve);
    a.set("e_curve_minus_sing", e.curve_minus_sing);
    a.set("e_complement", e.complement);
    if (arr.all_elliptic()) {
      const BallQuotientReport bq = ball_quotient_check(arr);
      a.set("ball_quotient", bq.is_ball_quotient);
      a.set("log_ck_square", bq.log_ck_square);
      a.set("log_euler", bq.log_euler);
    }
  }
  if (generic_pipeline(arr) && arr.is_line_arrangement() && arr.num_components() >= 2) {
    const auto lines = line_bounds(static_cast<std::int64_t>(arr.num_components()), arr.spectrum);
    a.set("b2_ge_b1", lines.b2_ge_b1);
  }
  if (target.cn_parameter) {
    const CnHValue cn = cn_h_value(*target.cn_parameter);
    a.set("cn_c_bar_square", cn.c_bar_square);
    a.set("cn_s", cn.s);
    a.set("cn_h", cn.h);
    a.set("cn_gap", cn.h + 4);
  }
  if (!target.warnings.empty()) {
    std::string joined;
    for (const auto& w : target.warnings) joined += (joined.empty() ? "" : "; ") + w;
    a.set("warnings", joined);
  }
  return a;
}

const BoundResult* find_bound(const Analysis& a, const std::string& name) {
  for (const auto& b : a.bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::string render_analysis(const Analysis& a, const Arrangement& arr, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Human: {
      for (const auto& [name, cell] : a.fields) {
        if (std::holds_alternative<std::monostate>(cell)) continue;
        os << name << ": " << human_cell(cell) << "\n";
        if (name == "f2") os << "spectrum: " << spectrum_text(arr.spectrum) << "\n";
      }
      if (!a.bounds.empty()) {
        os << "bounds (lhs >= rhs):\n";
        for (const auto& b : a.bounds) {
          os << "  " << b.name << ": " << human_cell(b.lhs) << " >= " << human_cell(b.rhs) << "  "
             << (b.holds ? "holds" : "FAILS");
          if (!b.applicable) os << "  [hypotheses not met: " << b.applicability_note << "]";
          os << "\n";
        }
      }
      break;
    }
    case Format::Csv: {
      Table t;
      t.rows.emplace_back();
      for (const auto& [name, cell] : a.fields) {
        t.columns.push_back(name);
        t.rows.back().push_back(cell);
      }
      for (const auto& name : bound_order()) {
        const BoundResult* b = find_bound(a, name);
        for (const char* suffix : {"_lhs", "_rhs", "_holds", "_applicable"}) t.columns.push_back(name + suffix);
        if (b) {
          t.rows.back().insert(t.rows.back().end(), {b->lhs, b->rhs, b->holds, b->applicable});
        } else {
          t.rows.back().insert(t.rows.back().end(), 4, std::monostate{});
        }
      }
      os << render_table(t, Format::Csv);
      break;
    }
    case Format::Json: {
      ordered_json doc = ordered_json::object();
      for (const auto& [name, cell] : a.fields) doc[name] = json_cell(cell);
      doc["spectrum"] = ordered_json::object();
      for (const auto& [k, t] : arr.spectrum.counts()) doc["spectrum"][std::to_string(k)] = t;
      doc["bounds"] = ordered_json::array();
      for (const auto& b : a.bounds) {
        ordered_json item;
        item["name"] = b.name;
        item["lhs"] = b.lhs.str();
        item["rhs"] = b.rhs.str();
        item["holds"] = b.holds;
        item["applicable"] = b.applicable;
        item["note"] = b.applicability_note;
        doc["bounds"].push_back(std::move(item));
      }
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Checks

struct CheckRow {
  std::string status;  // PASS | FAIL | WARN | SKIP | INFO
  std::string name;
  std::string detail;
  std::string about;
};

std::string relation(const Rat& lhs, const char* op, const Rat& rhs) {
  return lhs.str() + " " + op + " " + rhs.str();
}

void add_bound_row(std::vector<CheckRow>& rows, const BoundResult& b, const std::string& about,
                   bool require_applicable) {
  const std::string detail = relation(b.lhs, ">=", b.rhs);
  if (require_applicable && !b.applicable) {
    rows.push_back({"SKIP", b.name, detail + " (" + b.applicability_note + ")", about});
    return;
  }
  rows.push_back({b.holds ? "PASS" : "FAIL", b.name, detail, about});
}

std::vector<CheckRow> run_checks(const Target& target) {
  const Arrangement& arr = target.entry.arrangement;
  std::vector<CheckRow> rows;
  for (const auto& w : target.warnings) rows.push_back({"WARN", "pair_count", w, "ordinary incidence identity"});

  const Moments m = f_moments(arr.spectrum);
  const bool has_points = m.f0 > 0;

  if (generic_pipeline(arr)) {
    const Rat sing = h_at_sing(arr);
    const HIndex index = h_index(arr);
    rows.push_back({index.value <= sing ? "PASS" : "FAIL", "h_index_le_h_sing",
                    relation(index.value, "<=", sing), "H-index is a minimum over subsets of Sing(C)"});
  }

  if (arr.ordinary && arr.surface == Surface::AbelianSurface) {
    const BigInt g = arr.genus();
    const EulerNumbers e = euler_numbers(arr);
    rows.push_back({e.curve + e.complement == 0 ? "PASS" : "FAIL", "euler_consistency",
                    "e(C) = " + e.curve.str() + ", e(A \\ C) = " + e.complement.str(),
                    "e(A \\ C) = -e(C)"});
    add_bound_row(rows, abelian_spectrum_ineq(arr.spectrum, g),
                  "spectrum inequality for curves on abelian surfaces", false);
    if (has_points) {
      add_bound_row(rows, elliptic_bound(arr.spectrum, g), "refined Miyaoka-Sakai bound on -f1/f0", false);
      if (g == 1) add_bound_row(rows, elliptic_chain_floor(arr.spectrum), "elliptic H-constant >= -4", false);
      add_bound_row(rows, genus_bound(arr), "H(C, Sing C) genus bound", false);
      if (arr.all_elliptic()) {
        const Rat expect = Rat(-m.f1, m.f0);
        const Rat got = h_index(arr).value;
        rows.push_back({got == expect ? "PASS" : "FAIL", "h_index_elliptic", relation(got, "=", expect),
                        "elliptic H-index equals -f1/f0"});
      }
    }
    if (arr.num_components() >= 2) {
      bool nonneg = true;
      bool identity = true;
      for (std::int64_t n = 2; n <= 10; ++n) {
        const CoverInvariants c = cover_invariants(arr, n);
        nonneg = nonneg && c.defect_norm >= 0;
        identity = identity && 3 * c.euler_norm - c.k2_norm == c.defect_norm;
      }
      rows.push_back({identity ? "PASS" : "FAIL", "defect_identity", "3 e - K^2 = defect for n = 2..10",
                      "Chern numbers of the (Z/nZ)^d cover"});
      rows.push_back({nonneg ? "PASS" : "FAIL", "miyaoka_yau", "defect >= 0 for n = 2..10",
                      "Miyaoka-Yau inequality on the cover"});
      for (const std::int64_t n : {2, 3}) {
        const RefinedDefect r = refined_defect_check(arr, n);
        rows.push_back({r.holds ? "PASS" : "FAIL", "refined_defect_n" + std::to_string(n),
                        relation(r.defect, ">=", r.refined_rhs),
                        "Miyaoka bound with special curves on X_" + std::to_string(n)});
      }
    }
    if (arr.all_elliptic() && has_points) {
      const BallQuotientReport bq = ball_quotient_check(arr);
      const std::string detail = "(K + C)^2 = " + bq.log_ck_square.str() + ", e(X \\ C) = " + bq.log_euler.str();
      if (!bq.is_ball_quotient) {
        rows.push_back({"INFO", "ball_quotient", detail + ": not a ball quotient", "(K + C)^2 = 3 e(X \\ C)"});
      } else {
        const bool ok = bq.defect_violations.empty() && bq.log_ck_square == 3 * bq.log_euler;
        rows.push_back({ok ? "PASS" : "FAIL", "ball_quotient",
                        detail + "; defect = f0 (n - 3)^2 for n = 2..10", "(K + C)^2 = 3 e(X \\ C)"});
      }
    }
  }

  if (generic_pipeline(arr) && arr.is_line_arrangement() && arr.num_components() >= 2) {
    const auto d = static_cast<std::int64_t>(arr.num_components());
    const LineBounds lines = line_bounds(d, arr.spectrum);
    const HirzebruchLineChecks hz = hirzebruch_line_checks(d, arr.spectrum);
    add_bound_row(rows, hz.zzbauer, "Hirzebruch inequality with (k - 4) weights", true);
    add_bound_row(rows, hz.hirz86, "Hirzebruch inequality with (2k - 9) weights", true);
    BoundResult b1 = lines.b1;
    b1.applicable = hz.zzbauer.applicable;
    b1.applicability_note = hz.zzbauer.applicability_note;
    BoundResult b2 = lines.b2;
    b2.applicable = hz.hirz86.applicable;
    b2.applicability_note = hz.hirz86.applicability_note;
    add_bound_row(rows, b1, "H-index lower bound B1", true);
    add_bound_row(rows, b2, "H-index lower bound B2", true);
    if (hz.hirz86.holds) {
      rows.push_back({lines.b2_ge_b1 ? "PASS" : "FAIL", "b2_ge_b1", relation(b2.rhs, ">=", b1.rhs),
                      "B2 is sharper than B1"});
    }
  }

  if (target.cn_parameter) {
    const std::int64_t n = *target.cn_parameter;
    const CnHValue cn = cn_h_value(n);
    PointMultiset points;
    for (const auto& [k, t] : arr.spectrum.counts()) points[k] += t;
    const Rat from_override = h_at_points(self_intersection(arr), points);
    rows.push_back({from_override == cn.h ? "PASS" : "FAIL", "cn_override",
                    relation(from_override, "=", cn.h), "C^2 override reproduces the strict-transform H"});
  }

  for (const auto& claim : target.entry.expected) {
    const auto value = evaluate_quantity(target, claim.quantity);
    if (!value) {
      rows.push_back({"FAIL", "claim:" + claim.quantity, "quantity not available", claim.anchor});
      continue;
    }
    rows.push_back({*value == claim.value ? "PASS" : "FAIL", "claim:" + claim.quantity,
                    "computed " + value->str() + ", expected " + claim.value.str(), claim.anchor});
  }
  return rows;
}

// ---------------------------------------------------------------------------

void require_multiple_of_three(std::int64_t v, const char* what) {
  if (v <= 0 || v % 3 != 0) {
    throw Error(ErrorKind::BadParameter,
                std::string(what) + " must be a positive multiple of 3, got " + std::to_string(v));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read arrangement file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "human") return Format::Human;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "'");
}

Target target_from_document(std::string_view text) {
  ParsedDocument parsed = parse_document(text);
  Target t;
  t.entry.name = parsed.arrangement.label;
  t.entry.arrangement = std::move(parsed.arrangement);
  t.warnings = std::move(parsed.warnings);
  return t;
}

Target resolve_target(std::string_view where) {
  constexpr std::string_view prefix = "catalog:";
  if (!where.starts_with(prefix)) return target_from_document(read_file(std::string(where)));
  const std::string_view name = where.substr(prefix.size());
  Target t;
  t.entry = catalog_entry(name);
  t.from_catalog = true;
  if (name.starts_with("cn-")) t.cn_parameter = std::stoll(std::string(name.substr(3)));
  t.warnings = validate(t.entry.arrangement).warnings;
  return t;
}

std::optional<Rat> evaluate_quantity(const Target& target, std::string_view quantity) {
  const Arrangement& arr = target.entry.arrangement;
  const Moments m = f_moments(arr.spectrum);
  if (quantity == "pair_count") {
    if (!arr.ordinary) return std::nullopt;
    return Rat((m.f2 - m.f1) / 2);
  }
  if (quantity == "cn_gap") {
    if (!target.cn_parameter) return std::nullopt;
    return cn_h_value(*target.cn_parameter).h + 4;
  }
  if (!generic_pipeline(arr)) return std::nullopt;
  if (quantity == "h_index") return h_index(arr).value;
  if (quantity == "h_sing") return h_at_sing(arr);
  if (quantity == "b1" || quantity == "b2") {
    if (!arr.is_line_arrangement() || arr.num_components() < 2) return std::nullopt;
    const auto lines = line_bounds(static_cast<std::int64_t>(arr.num_components()), arr.spectrum);
    return quantity == "b1" ? lines.b1.rhs : lines.b2.rhs;
  }
  if (arr.surface != Surface::AbelianSurface) return std::nullopt;
  if (quantity == "is_ball_quotient") {
    if (!arr.all_elliptic()) return std::nullopt;
    return Rat(ball_quotient_check(arr).is_ball_quotient ? 1 : 0);
  }
  if (quantity == "defect_n3") {
    if (arr.num_components() < 2) return std::nullopt;
    return my_defect(arr, 3);
  }
  return std::nullopt;
}

std::string analyze(const Target& target, Format format) {
  return render_analysis(build_analysis(target), target.entry.arrangement, format);
}

std::string sweep_cn(std::int64_t from, std::int64_t to, std::int64_t step, Format format) {
  require_multiple_of_three(from, "--from");
  require_multiple_of_three(to, "--to");
  require_multiple_of_three(step, "--step");
  if (from > to) throw Error(ErrorKind::BadParameter, "--from must not exceed --to");
  Table t;
  t.columns = {"n", "c_bar_square", "s", "h", "h_decimal", "gap", "gap_decimal"};
  t.decimal_columns = true;
  for (std::int64_t n = from; n <= to; n += step) {
    const CnHValue cn = cn_h_value(n);
    const Rat gap = cn.h + 4;
    t.rows.push_back({BigInt(n), cn.c_bar_square, cn.s, cn.h, cn.h.decimal(4), gap, gap.decimal(4)});
  }
  return render_table(t, format);
}

std::string cover_table(const Target& target, std::int64_t n_min, std::int64_t n_max, Format format) {
  if (n_min < 2 || n_max > 50 || n_min > n_max) {
    throw Error(ErrorKind::BadParameter, "cover table needs 2 <= n-min <= n-max <= 50");
  }
  const Arrangement& arr = target.entry.arrangement;
  const bool bq_spectrum = has_ball_quotient_spectrum(arr.spectrum);
  const BigInt f0 = f_moments(arr.spectrum).f0;
  Table t;
  t.columns = {"n", "euler_norm", "k2_norm", "defect_norm", "ball_defect"};
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const CoverInvariants c = cover_invariants(arr, n);
    Cell ball = std::monostate{};
    if (bq_spectrum) ball = BigInt(f0 * (n - 3) * (n - 3));
    t.rows.push_back({BigInt(n), c.euler_norm, c.k2_norm, c.defect_norm, ball});
  }
  return render_table(t, format);
}

CheckOutcome check(const Target& target, Format format) {
  const auto rows = run_checks(target);
  CheckOutcome outcome;
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (r.status == "PASS") ++passed;
    if (r.status == "FAIL") ++failed;
  }
  outcome.passed = failed == 0;

  if (format == Format::Human) {
    std::ostringstream os;
    os << "check " << target.entry.arrangement.label << "\n";
    for (const auto& r : rows) os << r.status << "  " << r.name << ": " << r.detail << "  [" << r.about << "]\n";
    os << passed << " passed, " << failed << " failed\n";
    outcome.output = os.str();
  } else {
    Table t;
    t.columns = {"status", "check", "detail", "about"};
    for (const auto& r : rows) t.rows.push_back({r.status, r.name, r.detail, r.about});
    outcome.output = render_table(t, format);
  }
  return outcome;
}

std::string list_catalog(Format format) {
  Table t;
  t.columns = {"name", "description"};
  for (const auto& e : catalog_listing()) t.rows.push_back({e.name, e.description});
  return render_table(t, format);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParameter:
    case ErrorKind::UnknownCatalogName:
      return 2;
    default:
      return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harbourne indices, cover invariants and negativity bounds of curve arrangements", "harbourne"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json"}));

  std::string target_arg;
  auto* analyze_cmd = app.add_subcommand("analyze", "H values, Euler numbers and bounds of one arrangement");
  analyze_cmd->add_option("target", target_arg, "Arrangement file or catalog:NAME")->required();

  app.add_subcommand("catalog", "List catalog entries");

  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 3;
  auto* sweep_cmd = app.add_subcommand("sweep-cn", "H(C_n) for n = from, from + step, ..., to");
  sweep_cmd->add_option("--from", from)->required();
  sweep_cmd->add_option("--to", to)->required();
  sweep_cmd->add_option("--step", step);

  std::int64_t n_min = 2;
  std::int64_t n_max = 10;
  auto* cover_cmd = app.add_subcommand("cover", "Normalized Chern invariants of the (Z/nZ)^d covers");
  cover_cmd->add_option("target", target_arg, "Arrangement file or catalog:NAME")->required();
  cover_cmd->add_option("--n-min", n_min);
  cover_cmd->add_option("--n-max", n_max);

  auto* check_cmd = app.add_subcommand("check", "Run every applicable invariant and catalog claim");
  check_cmd->add_option("target", target_arg, "Arrangement file or catalog:NAME")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (analyze_cmd->parsed()) {
      out << analyze(resolve_target(target_arg), format);
    } else if (app.got_subcommand("catalog")) {
      out << list_catalog(format);
    } else if (sweep_cmd->parsed()) {
      out << sweep_cn(from, to, step, format);
    } else if (cover_cmd->parsed()) {
      out << cover_table(resolve_target(target_arg), n_min, n_max, format);
    } else if (check_cmd->parsed()) {
      const CheckOutcome outcome = check(resolve_target(target_arg), format);
      out << outcome.output;
      return outcome.passed ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace harbourne
