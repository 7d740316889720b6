#include "ordlat/textio.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ordlat/errors.hpp"

namespace ordlat {

namespace {

std::string strip(const std::string& s) {
  std::size_t hash = s.find('#');
  std::string t = s.substr(0, hash);
  std::size_t b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_key(const std::string& line) {
  std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  std::size_t rest = line.find_first_not_of(" \t", sp);
  return {line.substr(0, sp), rest == std::string::npos ? "" : line.substr(rest)};
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size() || v < 1) throw ParseError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("'" + key + "' needs a positive integer, got '" + value + "'");
  }
}

}  // namespace

std::vector<Element> parse_row(const AlgebraSpec& alg, const std::string& line) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t b = line.find_first_not_of(" \t\r", pos);
    if (b == std::string::npos) break;
    if (line[b] != '[') throw ParseError("expected '[' in row: '" + line + "'");
    std::size_t e = line.find(']', b);
    if (e == std::string::npos) throw ParseError("unterminated element literal in row: '" + line + "'");
    out.push_back(parse_element(alg, std::string_view(line).substr(b, e - b + 1)));
    pos = e + 1;
  }
  return out;
}

std::string format_row(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

void write_lattice(std::ostream& out, const ModuleLattice& lat, const AlphaForm& form) {
  out << "ordlat-lattice 1\n";
  out << "algebra " << lat.algebra().name() << "\n";
  out << "form " << form.describe() << "\n";
  out << "alpha " << to_string(form.alpha()) << "\n";
  out << "d " << lat.rank() << "\n";
  out << "D " << lat.ambient() << "\n";
  for (const auto& b : lat.basis()) out << format_row(b) << "\n";
}

std::string format_lattice(const ModuleLattice& lat, const AlphaForm& form) {
  std::ostringstream s;
  write_lattice(s, lat, form);
  return s.str();
}

LatticeFile read_lattice(std::istream& in) {
  const AlgebraSpec* alg = nullptr;
  std::string form_name = "trace", alpha_text;
  std::size_t d = 0, D = 0;
  bool header = false;
  std::vector<Vector> rows;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line[0] == '[') {
      if (!alg) throw ParseError("basis row before 'algebra'");
      rows.push_back(parse_row(*alg, line));
      continue;
    }
    auto [key, value] = split_key(line);
    if (key == "ordlat-lattice") {
      if (value != "1") throw ParseError("unsupported lattice file version '" + value + "'");
      header = true;
    } else if (key == "algebra") {
      try {
        alg = &AlgebraSpec::by_name(value);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    } else if (key == "form") {
      if (value != "trace" && value != "plain") throw ParseError("form must be 'trace' or 'plain', got '" + value + "'");
      form_name = value;
    } else if (key == "alpha") {
      alpha_text = value;
    } else if (key == "d") {
      d = parse_count(key, value);
    } else if (key == "D") {
      D = parse_count(key, value);
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!header) throw ParseError("missing 'ordlat-lattice 1' header");
  if (!alg) throw ParseError("missing 'algebra'");
  if (d == 0 || D == 0) throw ParseError("missing 'd' or 'D'");
  if (rows.size() != d) throw ParseError("expected " + std::to_string(d) + " basis rows, found " + std::to_string(rows.size()));
  for (const auto& r : rows)
    if (r.size() != D) throw ParseError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(D));
  Element alpha = alpha_text.empty() ? alg->one() : parse_element(*alg, alpha_text);
  AlphaForm form = form_name == "plain" ? AlphaForm::plain(*alg) : AlphaForm::trace(alpha);
  if (form.is_plain() && alpha != alg->one()) throw ParseError("the plain form takes alpha = 1");
  return {ModuleLattice(*alg, std::move(rows)), form};
}

LatticeFile parse_lattice(const std::string& text) {
  std::istringstream s(text);
  return read_lattice(s);
}

void write_reduction_report(std::ostream& out, const ReductionReport& rep, const AlphaForm& form) {
  out << "ordlat-report reduce\n";
  out << "kind " << to_string(rep.kind) << "\n";
  if (rep.kind == ReductionKind::BKZ) out << "beta " << rep.beta << "\n";
  out << "verdict " << (rep.verdict ? "pass" : "FAIL") << "\n";
  out << "ratios";
  for (const auto& r : rep.ratios) out << ' ' << to_string(r);
  out << "\n";
  out << "input-begin\n";
  write_lattice(out, rep.input, form);
  out << "input-end\n";
  out << "output-begin\n";
  write_lattice(out, rep.basis, form);
  out << "output-end\n";
  out << "log-begin " << rep.log.size() << "\n";
  for (const auto& op : rep.log) out << op.to_string() << "\n";
  out << "log-end\n";
}

ParsedReduction read_reduction_report(std::istream& in) {
  std::string raw, section;
  std::ostringstream input, output;
  std::vector<std::string> log_lines;
  bool seen_log = false;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    auto key = split_key(line).first;
    if (key == "input-begin" || key == "output-begin" || key == "log-begin") {
      section = key;
      if (key == "log-begin") seen_log = true;
      continue;
    }
    if (key == "input-end" || key == "output-end" || key == "log-end") {
      section.clear();
      continue;
    }
    if (section == "input-begin") input << raw << "\n";
    else if (section == "output-begin") output << raw << "\n";
    else if (section == "log-begin" && !line.empty()) log_lines.push_back(line);
  }
  if (!seen_log) throw ParseError("report has no transform log");
  LatticeFile a = parse_lattice(input.str());
  LatticeFile b = parse_lattice(output.str());
  std::vector<ElementaryOp> log;
  for (const auto& l : log_lines) log.push_back(ElementaryOp::parse(a.lattice.algebra(), l));
  return {a, b, log};
}

void write_minima(std::ostream& out, const MinimaResult& m) {
  out << "lambda_sq";
  for (const auto& l : m.lambdas_sq) out << ' ' << to_string(l);
  out << "\n";
  for (std::size_t i = 0; i < m.witnesses.size(); ++i) {
    out << "witness " << i + 1 << " coeffs " << format_row(m.witnesses[i].coeffs) << "\n";
    out << "witness " << i + 1 << " vector " << format_row(m.witnesses[i].vec) << "\n";
  }
}

void write_bound_check(std::ostream& out, const BoundCheck& c) {
  out << "check " << c.quantity << " value " << c.value.to_string() << " bound "
      << (c.bound ? c.bound->to_string() : std::string("none")) << " verdict " << to_string(c.verdict);
  if (!c.note.empty()) out << " note " << c.note;
  out << "\n";
}

void write_bound_report(std::ostream& out, const BoundReport& r) {
  for (const auto& c : r.checks) write_bound_check(out, c);
  out << "summary pass " << r.count(Verdict::Pass) << " fail " << r.count(Verdict::Fail) << " skipped "
      << r.count(Verdict::Skipped) << " undecided " << r.count(Verdict::Undecided) << "\n";
}

void write_counterexample(std::ostream& out, const Counterexample& c) {
  out << "counterexample v " << to_string(c.v) << "\n";
  out << "counterexample x " << to_string(c.x) << "\n";
  out << "nrd_x " << to_string(c.nrd_x) << "\n";
  out << "unit " << to_string(c.unit) << "\n";
  out << "trace_v " << to_string(c.trace_v) << "\n";
  out << "trace_uvu " << to_string(c.trace_up) << "\n";
  out << "trace_u^-1vu^-1 " << to_string(c.trace_down) << "\n";
  out << "trace_xvx " << to_string(c.trace_x) << "\n";
  out << "best_unit_trace " << to_string(c.best_unit_trace) << "\n";
}

}  // namespace ordlat
