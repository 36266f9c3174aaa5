// mdzeta: evaluate multiple Dedekind zeta symbols, expand shuffle and
// stuffle products, derive and numerically verify double-shuffle relations.

#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdzeta/cache.hpp"
#include "mdzeta/identity.hpp"
#include "mdzeta/numeric.hpp"
#include "mdzeta/shuffle.hpp"
#include "mdzeta/stuffle.hpp"

using namespace mdzeta;
using nlohmann::ordered_json;

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError: return 2;
    case Errc::Divergent: return 4;
    case Errc::IoError: return 5;
    default: return 3;  // domain-level errors
  }
}

// generators read as x, w, x+w, x-y*w, y*w, ...
FieldElement parse_generator(const FieldSpec& field, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) fail(Errc::ParseError, "empty generator");

  size_t pos = 0;
  auto integer = [&](std::int64_t dflt) -> std::int64_t {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) {
      pos = start;
      return dflt;
    }
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    return std::stoll(s.substr(start, pos - start));
  };

  std::int64_t x = 0, y = 0;
  bool have_x = false;
  // leading term: integer, or [coeff*]w
  std::int64_t first = integer(INT64_MIN);
  if (pos < s.size() && s[pos] == '*') ++pos;
  if (pos < s.size() && s[pos] == 'w') {
    ++pos;
    y = first == INT64_MIN ? 1 : first;
  } else if (first != INT64_MIN) {
    x = first;
    have_x = true;
  } else {
    fail(Errc::ParseError, "bad generator: " + text);
  }
  // optional second term
  if (pos < s.size()) {
    if (!have_x || (s[pos] != '+' && s[pos] != '-'))
      fail(Errc::ParseError, "bad generator: " + text);
    std::int64_t sign = s[pos] == '-' ? -1 : 1;
    ++pos;
    std::int64_t coeff = integer(1);
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos >= s.size() || s[pos] != 'w') fail(Errc::ParseError, "bad generator: " + text);
    ++pos;
    y = sign * coeff;
  }
  if (pos != s.size()) fail(Errc::ParseError, "trailing input in generator: " + text);
  return make_element(field, x, y);
}

std::string generator_text(const FieldElement& e) {
  std::string s;
  if (e.x != 0 || e.y == 0) s += std::to_string(e.x);
  if (e.y != 0) {
    if (e.y > 0 && !s.empty()) s += "+";
    if (e.y == -1)
      s += "-";
    else if (e.y != 1)
      s += std::to_string(e.y) + "*";
    s += "w";
  }
  return s;
}

std::pair<int, int> parse_exponent_pair(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) fail(Errc::ParseError, "expected a;c, got: " + text);
  try {
    int a = std::stoi(text.substr(0, semi));
    int c = std::stoi(text.substr(semi + 1));
    if (a < 1 || c < 1) fail(Errc::ParseError, "exponents must be positive: " + text);
    return {a, c};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad exponent pair: " + text);
  }
}

MzvSymbol parse_mzv_exponents(const std::string& text) {
  MzvSymbol s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      s.exponents.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad exponent list: " + text);
    }
  }
  if (s.exponents.empty()) fail(Errc::ParseError, "empty exponent list");
  return s;
}

struct RunConfig {
  std::int64_t d = 0;
  std::string cone_text;
  bool cplus = false;
  std::int64_t shell = 0, radius = 0, cutoff = 0;
  std::string format = "text";
  bool no_cache = false;
  std::string cache_dir;
  double floor_tol = 1e-9;
  int precision = 15;

  std::filesystem::path resolved_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("MDZETA_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
      return std::filesystem::path(home) / ".cache" / "mdzeta";
    return ".mdzeta-cache";
  }

  void add_domain_flags(CLI::App* cmd) {
    cmd->add_option("--d", d, "field parameter d of Q(sqrt(d))");
    cmd->add_option("--cone", cone_text, "real cone generators, e.g. 2+w,2-w");
    cmd->add_flag("--cplus", cplus, "use the upper cone C+ (imaginary fields)");
    cmd->add_option("--shell", shell, "real-cone truncation: m+n <= S");
    cmd->add_option("--radius", radius, "C+ truncation: |alpha| <= R");
    cmd->add_option("--cutoff", cutoff, "mzv truncation: indices <= N");
    cmd->add_option("--precision", precision, "printed significant digits")
        ->check(CLI::Range(3, 17));
  }
  void add_output_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  }
  void add_cache_flags(CLI::App* cmd) {
    cmd->add_flag("--no-cache", no_cache, "skip the result cache");
    cmd->add_option("--cache-dir", cache_dir, "cache directory (or MDZETA_CACHE_DIR)");
  }
};

struct ResolvedDomain {
  EvalDomain domain{MzvDomain{}};
  Truncation trunc;
  std::string key_text;  // canonical domain + truncation text for caching
};

ResolvedDomain resolve_domain(RunConfig& cfg, CLI::App* cmd, bool for_mzv) {
  ResolvedDomain out;
  if (for_mzv) {
    std::int64_t n = cfg.cutoff > 0 ? cfg.cutoff : 1000;
    out.trunc = Truncation::cutoff(n);
    out.key_text = "mzv|cutoff=" + std::to_string(n);
    return out;
  }
  if (!cmd->count("--d")) fail(Errc::DomainMismatch, "--d is required for Dedekind symbols");
  FieldSpec field = make_field(cfg.d);
  if (field.signature == Signature::Real) {
    if (cfg.cone_text.empty())
      fail(Errc::DomainMismatch, "--cone g1,g2 is required for real fields");
    auto comma = cfg.cone_text.find(',');
    if (comma == std::string::npos)
      fail(Errc::ParseError, "expected two generators: " + cfg.cone_text);
    FieldElement mu = parse_generator(field, cfg.cone_text.substr(0, comma));
    FieldElement nu = parse_generator(field, cfg.cone_text.substr(comma + 1));
    RealCone cone = make_real_cone(field, mu, nu);
    std::int64_t S = cfg.shell > 0 ? cfg.shell : 40;
    if (S < 2) fail(Errc::DomainMismatch, "--shell must be at least 2");
    out.domain = EvalDomain(cone);
    out.trunc = Truncation::shell(S);
    out.key_text = "d=" + std::to_string(cfg.d) + ";cone=" + generator_text(mu) + "," +
                   generator_text(nu) + "|shell=" + std::to_string(S);
  } else {
    std::int64_t R = cfg.radius > 0 ? cfg.radius : 30;
    out.domain = EvalDomain(make_upper_cone(field));
    out.trunc = Truncation::radius(R);
    out.key_text = "d=" + std::to_string(cfg.d) + ";C+|radius=" + std::to_string(R);
  }
  return out;
}

std::string fmt_double(double v, int precision) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(precision);
  os << v;
  return os.str();
}

// ---- eval ---------------------------------------------------------------

int cmd_eval(RunConfig& cfg, CLI::App* cmd, const std::string& sym_text) {
  Symbol sym = parse_symbol(sym_text);
  bool is_mzv = std::holds_alternative<MzvSymbol>(sym);
  ResolvedDomain rd = resolve_domain(cfg, cmd, is_mzv);

  std::string key = CacheStore::canonical_key(rd.key_text, to_string(sym), "");
  std::optional<CacheRecord> hit;
  std::optional<CacheStore> store;
  if (!cfg.no_cache) {
    store.emplace(cfg.resolved_cache_dir());
    hit = store->read(key);
  }

  EvalResult result;
  if (hit) {
    result.value = {hit->value_re, hit->value_im};
    result.tail_estimate = hit->tail;
    result.term_count = hit->term_count;
    result.truncation = rd.trunc;
  } else {
    result = eval_symbol(rd.domain, sym, rd.trunc);
    if (store) {
      CacheRecord rec;
      rec.key = key;
      rec.value_re = result.value.real();
      rec.value_im = result.value.imag();
      rec.tail = result.tail_estimate;
      rec.term_count = result.term_count;
      store->write(rec);
    }
  }

  std::string domain_text = is_mzv ? domain_description(EvalDomain(MzvDomain{}))
                                   : domain_description(rd.domain);
  const char* trunc_kind = rd.trunc.kind == TruncKind::Shell    ? "shell"
                           : rd.trunc.kind == TruncKind::Radius ? "radius"
                                                                : "cutoff";
  if (cfg.format == "json") {
    ordered_json j{{"symbol", to_string(sym)},
                   {"domain", domain_text},
                   {"truncation", {{"kind", trunc_kind}, {"value", rd.trunc.value}}},
                   {"value_re", result.value.real()},
                   {"value_im", result.value.imag()},
                   {"tail", result.tail_estimate},
                   {"term_count", result.term_count},
                   {"warnings", result.warnings},
                   {"cached", hit.has_value()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "symbol      " << to_string(sym) << "\n"
              << "domain      " << domain_text << "\n"
              << "truncation  " << trunc_kind << " " << rd.trunc.value << "\n"
              << "value       " << fmt_double(result.value.real(), cfg.precision);
    if (result.value.imag() != 0.0)
      std::cout << " + " << fmt_double(result.value.imag(), cfg.precision) << "i";
    std::cout << "\n"
              << "tail        ~" << fmt_double(result.tail_estimate, 3) << "\n"
              << "terms       " << result.term_count << "\n";
    for (auto& w : result.warnings) std::cout << "warning     " << w << "\n";
    if (hit) std::cout << "cached      yes\n";
  }
  return 0;
}

// ---- shuffle / stuffle ---------------------------------------------------

ordered_json combo_json(const LinearCombo& combo) {
  ordered_json arr = ordered_json::array();
  for (auto& [sym, coeff] : combo.terms())
    arr.push_back({{"coeff", coeff.to_string()}, {"symbol", to_string(sym)}});
  return arr;
}

void print_combo(const RunConfig& cfg, const char* op, const LinearCombo& combo,
                 ordered_json extra = ordered_json::object()) {
  if (cfg.format == "json") {
    ordered_json j{{"op", op}, {"combo", combo_json(combo)}, {"combo_text", to_string(combo)}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(combo) << "\n";
  }
}

const char* slot_text(const Slot& s) {
  if (s.kind == SlotKind::Source) return s.factor == 0 ? "S(a)" : "S(b)";
  return s.factor == 0 ? "I(a)" : "I(b)";
}

void print_diagram_listing(const DiagramExpansion& expansion) {
  for (size_t i = 0; i < expansion.diagrams.size(); ++i) {
    const ShuffleDiagram& d = expansion.diagrams[i];
    std::cout << "  #" << i + 1 << "  axis1:";
    for (auto& s : d.axis1) std::cout << " " << slot_text(s);
    std::cout << "   axis2:";
    for (auto& s : d.axis2) std::cout << " " << slot_text(s);
    std::cout << "   ->  " << to_string(diagram_to_symbol(d)) << "\n";
  }
}

int cmd_shuffle(RunConfig& cfg, const std::vector<std::string>& args, bool mzv_mode,
                bool diagrams) {
  if (mzv_mode) {
    LinearCombo combo = mzv_shuffle(parse_mzv_exponents(args[0]), parse_mzv_exponents(args[1]));
    print_combo(cfg, "mzv_shuffle", combo);
    return 0;
  }
  auto e1 = parse_exponent_pair(args[0]);
  auto e2 = parse_exponent_pair(args[1]);
  DiagramExpansion expansion = integral_shuffle_diagrams(e1, e2);
  ordered_json extra{{"diagram_count", expansion.diagrams.size()}};
  if (diagrams && cfg.format == "json") {
    ordered_json list = ordered_json::array();
    for (const ShuffleDiagram& d : expansion.diagrams) {
      std::string a1, a2;
      for (auto& s : d.axis1) a1 += (a1.empty() ? "" : " ") + std::string(slot_text(s));
      for (auto& s : d.axis2) a2 += (a2.empty() ? "" : " ") + std::string(slot_text(s));
      list.push_back(
          {{"axis1", a1}, {"axis2", a2}, {"symbol", to_string(diagram_to_symbol(d))}});
    }
    extra["diagrams"] = list;
  }
  print_combo(cfg, "integral_shuffle", expansion.combo, extra);
  if (diagrams && cfg.format != "json") print_diagram_listing(expansion);
  return 0;
}

int cmd_stuffle(RunConfig& cfg, const std::vector<std::string>& args, bool real, bool imaginary,
                bool mzv_mode) {
  if (mzv_mode) {
    LinearCombo combo = mzv_stuffle(parse_mzv_exponents(args[0]), parse_mzv_exponents(args[1]));
    print_combo(cfg, "mzv_stuffle", combo);
    return 0;
  }
  if (real == imaginary) fail(Errc::DomainMismatch, "choose exactly one of --real / --imaginary");
  auto e1 = parse_exponent_pair(args[0]);
  auto e2 = parse_exponent_pair(args[1]);
  LinearCombo combo = real ? stuffle_real(e1, e2)
                           : stuffle_imaginary(MdzvSymbol::plain(e1.first, e1.second),
                                               MdzvSymbol::plain(e2.first, e2.second));
  print_combo(cfg, real ? "stuffle_real" : "stuffle_imaginary", combo);
  return 0;
}

// ---- derive / verify -----------------------------------------------------

ordered_json diff_json(const std::vector<CoeffDiff>& diffs) {
  ordered_json arr = ordered_json::array();
  for (auto& d : diffs)
    arr.push_back({{"symbol", to_string(d.symbol)},
                   {"engine", d.engine.to_string()},
                   {"printed", d.printed.to_string()}});
  return arr;
}

Relation make_relation(const std::vector<std::string>& args, bool real, bool imaginary,
                       bool mzv_mode) {
  if (mzv_mode)
    return derive_mzv_relation(parse_mzv_exponents(args[0]), parse_mzv_exponents(args[1]));
  if (real == imaginary) fail(Errc::DomainMismatch, "choose exactly one of --real / --imaginary");
  return derive_relation(real ? Signature::Real : Signature::Imaginary,
                         parse_exponent_pair(args[0]), parse_exponent_pair(args[1]));
}

int cmd_derive(RunConfig& cfg, const std::vector<std::string>& args, bool real, bool imaginary,
               bool mzv_mode) {
  Relation r = make_relation(args, real, imaginary, mzv_mode);
  std::vector<CoeffDiff> diffs;
  bool have_printed = has_printed_transcription(r);
  if (have_printed) diffs = compare_with_printed(r);

  if (cfg.format == "json") {
    ordered_json j{{"provenance", r.provenance},
                   {"combo", combo_json(r.combo)},
                   {"combo_text", to_string(r.combo)},
                   {"printed_transcription_available", have_printed}};
    if (have_printed) j["printed_diff"] = diff_json(diffs);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "relation: " << r.provenance << "\n";
  std::cout << "  " << to_string(r.combo) << " = 0\n";
  if (have_printed) {
    if (diffs.empty()) {
      std::cout << "printed transcription: exact match\n";
    } else {
      for (auto& d : diffs)
        std::cout << "printed transcription differs on " << to_string(d.symbol) << ": engine "
                  << d.engine.to_string() << ", printed " << d.printed.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_verify(RunConfig& cfg, CLI::App* cmd, const std::vector<std::string>& args, bool real,
               bool imaginary, bool mzv_mode) {
  Relation r = make_relation(args, real, imaginary, mzv_mode);

  ResolvedDomain rd;
  if (mzv_mode) {
    rd = resolve_domain(cfg, cmd, true);
  } else if (cmd->count("--d")) {
    rd = resolve_domain(cfg, cmd, false);
  } else if (real) {
    // default desk-scale domain: Q(sqrt 2), cone N{2+w, 2-w}
    FieldSpec q2 = make_field(2);
    rd.domain = EvalDomain(make_real_cone(q2, make_element(q2, 2, 1), make_element(q2, 2, -1)));
    rd.trunc = Truncation::shell(cfg.shell > 0 ? cfg.shell : 40);
  } else {
    // default desk-scale domain: Q(i) with C+
    rd.domain = EvalDomain(make_upper_cone(make_field(-1)));
    rd.trunc = Truncation::radius(cfg.radius > 0 ? cfg.radius : 30);
  }

  VerificationReport rep = verify_numeric(r, rd.domain, rd.trunc, cfg.floor_tol);
  if (cfg.format == "json") {
    std::cout << to_json(rep) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "symbol,coeff,value_re,value_im,tail\n";
    for (auto& line : rep.per_symbol)
      std::cout << to_string(line.symbol) << "," << line.coeff.to_string() << ","
                << line.value.real() << "," << line.value.imag() << "," << line.tail << "\n";
  } else {
    std::cout << to_text(rep);
  }
  return 0;  // the verdict is report content: exit codes flag errors only
}

// ---- diagrams -------------------------------------------------------------

struct DiagramCell {
  int table_i, table_j, row, col;
  std::string axis1_order, axis2_order, term, symbol;
};

std::string factor_name(int gens, int axis) {
  std::string sub = axis == 1 ? "_1" : "_2";
  switch (gens) {
    case 1: return "alpha" + sub;
    case 2: return "beta" + sub;
    default: return "(alpha" + sub + "+beta" + sub + ")";
  }
}

std::string power(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string term_text(const ShuffleDiagram& d) {
  auto f1 = axis_scan(d.axis1), f2 = axis_scan(d.axis2);
  if (f1[0].gens == f2[0].gens && f1[0].exponent == f2[0].exponent &&
      f1[1].exponent == f2[1].exponent) {
    std::string g = f1[0].gens == 1 ? "alpha" : "beta";
    return "1/(" + power("N(" + g + ")", f1[0].exponent) + "*" +
           power("N(alpha+beta)", f1[1].exponent) + ")";
  }
  return "1/(" + power(factor_name(f1[0].gens, 1), f1[0].exponent) + "*" +
         power(factor_name(3, 1), f1[1].exponent) + "*" +
         power(factor_name(f2[0].gens, 2), f2[0].exponent) + "*" +
         power(factor_name(3, 2), f2[1].exponent) + ")";
}

// variable names for the weight-2 x weight-2 table: factor 1 integrates
// t > u, factor 2 integrates v > w
std::string order_text(const AxisWord& axis, int sub) {
  std::string out;
  for (const Slot& s : axis) {
    if (!out.empty()) out += ">";
    out += (s.factor == 0 ? (s.kind == SlotKind::Source ? "t" : "u")
                          : (s.kind == SlotKind::Source ? "v" : "w")) +
           std::to_string(sub);
  }
  return out;
}

int cmd_diagrams(RunConfig& cfg) {
  DiagramExpansion expansion = integral_shuffle_diagrams({2, 2}, {2, 2});
  // diagrams enumerate as (axis1 pattern) x (axis2 pattern), patterns 0..5,
  // the first three starting with the factor-1 source
  std::vector<DiagramCell> cells;
  for (size_t idx = 0; idx < expansion.diagrams.size(); ++idx) {
    const ShuffleDiagram& d = expansion.diagrams[idx];
    int p1 = (int)(idx / 6), p2 = (int)(idx % 6);
    DiagramCell cell;
    cell.table_i = p2 < 3 ? 1 : 2;  // axis-2 group
    cell.table_j = p1 < 3 ? 1 : 2;  // axis-1 group
    cell.row = p2 % 3 + 1;
    cell.col = p1 % 3 + 1;
    cell.axis1_order = order_text(d.axis1, 1);
    cell.axis2_order = order_text(d.axis2, 2);
    cell.term = term_text(d);
    cell.symbol = to_string(diagram_to_symbol(d));
    cells.push_back(cell);
  }

  if (cfg.format == "csv") {
    std::cout << "table,row,col,axis1_order,axis2_order,term,symbol\n";
    for (int ti = 1; ti <= 2; ++ti)
      for (int tj = 1; tj <= 2; ++tj)
        for (int row = 1; row <= 3; ++row)
          for (int col = 1; col <= 3; ++col)
            for (auto& c : cells)
              if (c.table_i == ti && c.table_j == tj && c.row == row && c.col == col)
                std::cout << "(" << ti << ";" << tj << ")," << row << "," << col << ","
                          << c.axis1_order << "," << c.axis2_order << "," << c.term << ","
                          << c.symbol << "\n";
  } else {
    for (int ti = 1; ti <= 2; ++ti) {
      for (int tj = 1; tj <= 2; ++tj) {
        std::cout << "Table (" << ti << "," << tj << ")\n";
        for (int row = 1; row <= 3; ++row) {
          for (int col = 1; col <= 3; ++col) {
            for (auto& c : cells)
              if (c.table_i == ti && c.table_j == tj && c.row == row && c.col == col)
                std::cout << "  [" << row << "," << col << "] " << c.axis1_order << " | "
                          << c.axis2_order << "\n      " << c.term << "  ->  " << c.symbol
                          << "\n";
          }
        }
        std::cout << "\n";
      }
    }
    std::cout << "aggregate: " << to_string(expansion.combo) << "\n";
    std::cout << "diagrams:  " << expansion.diagrams.size() << "\n";
  }
  return 0;
}

// ---- cache ----------------------------------------------------------------

int cmd_cache(RunConfig& cfg, const std::string& action) {
  CacheStore store(cfg.resolved_cache_dir());
  if (action == "list") {
    for (auto& key : store.list()) std::cout << key << "\n";
    return 0;
  }
  if (action == "clear") {
    std::cout << "removed " << store.clear() << " records\n";
    return 0;
  }
  if (action == "path") {
    std::cout << store.dir().string() << "\n";
    return 0;
  }
  fail(Errc::ParseError, "unknown cache action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple Dedekind zeta values: shuffle, stuffle, and numeric verification"};
  app.require_subcommand(1);

  RunConfig cfg;

  std::string sym_text;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one symbol by truncated summation");
  eval->add_option("--sym", sym_text, "symbol text, e.g. z(2;2), z1(2,2;2,2), mzv(1,3)")
      ->required();
  cfg.add_domain_flags(eval);
  cfg.add_output_flags(eval);
  cfg.add_cache_flags(eval);

  std::vector<std::string> shuffle_args;
  bool shuffle_diagrams = false, shuffle_mzv = false;
  CLI::App* shuffle = app.add_subcommand("shuffle", "integral-shuffle expansion of a product");
  shuffle->add_option("exponents", shuffle_args, "two depth-1 exponent pairs a;c b;d")
      ->expected(2);
  shuffle->add_flag("--diagrams", shuffle_diagrams, "list every interleaving diagram");
  shuffle->add_flag("--mzv", shuffle_mzv, "treat arguments as mzv exponent lists");
  cfg.add_output_flags(shuffle);

  std::vector<std::string> stuffle_args;
  bool st_real = false, st_imag = false, st_mzv = false;
  CLI::App* stuffle = app.add_subcommand("stuffle", "infinite-sum shuffle expansion");
  stuffle->add_option("exponents", stuffle_args, "two exponent pairs a;c b;d")->expected(2);
  stuffle->add_flag("--real", st_real, "real-quadratic nine-region expansion");
  stuffle->add_flag("--imaginary", st_imag, "imaginary-quadratic C+ expansion");
  stuffle->add_flag("--mzv", st_mzv, "classical quasi-shuffle of mzv exponent lists");
  cfg.add_output_flags(stuffle);

  std::vector<std::string> derive_args;
  bool dv_real = false, dv_imag = false, dv_mzv = false;
  CLI::App* derive = app.add_subcommand("derive", "derive the double-shuffle relation");
  derive->add_option("exponents", derive_args, "two exponent pairs a;c b;d")->expected(2);
  derive->add_flag("--real", dv_real, "real-quadratic relation");
  derive->add_flag("--imaginary", dv_imag, "imaginary-quadratic relation");
  derive->add_flag("--mzv", dv_mzv, "classical mzv relation");
  cfg.add_output_flags(derive);

  std::vector<std::string> verify_args;
  bool vf_real = false, vf_imag = false, vf_mzv = false;
  CLI::App* verify = app.add_subcommand("verify", "derive and numerically verify a relation");
  verify->add_option("exponents", verify_args, "two exponent pairs a;c b;d")->expected(2);
  verify->add_flag("--real", vf_real, "real-quadratic relation");
  verify->add_flag("--imaginary", vf_imag, "imaginary-quadratic relation");
  verify->add_flag("--mzv", vf_mzv, "classical mzv relation");
  verify->add_option("--floor-tol", cfg.floor_tol, "round-off floor for the verdict");
  cfg.add_domain_flags(verify);
  cfg.add_output_flags(verify);

  CLI::App* diagrams =
      app.add_subcommand("diagrams", "the 36 diagrams of the (2;2)x(2;2) shuffle");
  cfg.add_output_flags(diagrams);

  std::string cache_action;
  CLI::App* cache = app.add_subcommand("cache", "inspect or clear the result cache");
  cache->add_option("action", cache_action, "list | clear | path")->required();
  cfg.add_cache_flags(cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, eval, sym_text);
    if (shuffle->parsed()) return cmd_shuffle(cfg, shuffle_args, shuffle_mzv, shuffle_diagrams);
    if (stuffle->parsed()) return cmd_stuffle(cfg, stuffle_args, st_real, st_imag, st_mzv);
    if (derive->parsed()) return cmd_derive(cfg, derive_args, dv_real, dv_imag, dv_mzv);
    if (verify->parsed()) return cmd_verify(cfg, verify, verify_args, vf_real, vf_imag, vf_mzv);
    if (diagrams->parsed()) return cmd_diagrams(cfg);
    if (cache->parsed()) return cmd_cache(cfg, cache_action);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
