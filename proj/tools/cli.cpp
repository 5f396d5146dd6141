#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "z4rds/bent4.hpp"
#include "z4rds/boolimage.hpp"
#include "z4rds/errors.hpp"
#include "z4rds/gf2n.hpp"
#include "z4rds/io.hpp"
#include "z4rds/planegeo.hpp"
#include "z4rds/rdscore.hpp"
#include "z4rds/reprs.hpp"
#include "z4rds/search.hpp"

namespace z4rds::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Global {
  unsigned n = 0;
  std::string modulus;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "text";
  std::uint64_t budget = 0;  // 0 selects the command's default
  std::string out;
};

Json hex_list(const std::vector<std::uint32_t>& words) {
  Json a = Json::array();
  for (std::uint32_t w : words) a.push_back(format_hex(w));
  return a;
}

Json hex_list(const std::vector<Fe>& elems) {
  Json a = Json::array();
  for (Fe x : elems) a.push_back(format_hex(x.word));
  return a;
}

Json field_json(const FieldCtx& ctx) {
  Json basis = Json::array();
  for (Fe b : ctx.basis()) basis.push_back(format_hex(b.word));
  return Json{{"n", ctx.n()}, {"modulus", format_hex(ctx.modulus())}, {"basis", basis}};
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out << prefix << ":";
      for (const Json& e : j) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
      out << '\n';
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "." + std::to_string(i), out);
    }
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

std::string first_content_line(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p != std::string::npos && line[p] != '#') return line.substr(p);
  }
  return {};
}

std::string elt_text(Z4Elt x) { return format_hex(x.a.word) + ":" + format_hex(x.b.word); }

Json bit_rows(const BinMat& m) {
  Json a = Json::array();
  for (std::uint32_t r : m.rows) {
    std::string s(m.n, '0');
    for (unsigned j = 0; j < m.n; ++j) s[j] = ((r >> j) & 1u) ? '1' : '0';
    a.push_back(s);
  }
  return a;
}

std::vector<std::uint32_t> parse_index_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) throw ParseError("bad index '" + item + "' in --lambda");
    out.push_back(v);
  }
  return out;
}

class Session {
 public:
  Session(const Global& g, std::ostream& out) : g_(g), out_(out) {}

  FieldCtx field() const {
    if (g_.n == 0) throw ParseError("--n is required");
    if (g_.n > kMaxFieldDegree) throw DomainError("--n must be at most 20");
    if (g_.modulus.empty()) return FieldCtx(g_.n);
    return FieldCtx(g_.n, parse_hex_word(g_.modulus));
  }

  std::uint64_t budget(std::uint64_t fallback) const { return g_.budget == 0 ? fallback : g_.budget; }
  unsigned threads() const { return std::max(g_.threads, 1u); }
  std::uint64_t seed() const { return g_.seed; }

  Json report(const std::string& command) const {
    return Json{{"schema", kSchema}, {"version", kVersion}, {"command", command}};
  }

  void emit(const Json& report) const {
    std::ostringstream s;
    if (g_.format == "json") {
      s << report.dump(2) << '\n';
    } else {
      print_text(report, "", s);
    }
    data(s.str());
  }

  void data(const std::string& text) const {
    if (g_.out.empty()) {
      out_ << text;
    } else {
      write_file(g_.out, text);
    }
  }

 private:
  const Global& g_;
  std::ostream& out_;
};

int verdict(bool holds) { return holds ? kOk : kFails; }

// ------------------------------------------------------------------ verify --

struct VerifyArgs {
  std::string kind;
  std::string in;
  std::string repr = "f";
};

Json semifield_json(const SemifieldReport& r, bool timings) {
  auto one = [&](const Criterion& c) {
    Json j{{"holds", c.holds}};
    if (timings) j["seconds"] = c.seconds;
    return j;
  };
  return Json{{"star_semifield", one(r.star_semifield)},
              {"star_presemifield", one(r.star_presemifield)},
              {"three_term", one(r.three_term)},
              {"quadratic", one(r.quadratic)},
              {"dembowski_ostrom", one(r.dembowski_ostrom)},
              {"unanimous", r.unanimous()}};
}

int cmd_verify(const Session& s, const VerifyArgs& a) {
  const std::string text = read_file(a.in);
  Json rep = s.report("verify");
  rep["property"] = a.kind;
  bool holds = false;
  if (a.kind == "planar") {
    const TableFile t = read_table(text);
    rep["field"] = field_json(t.ctx);
    rep["repr"] = a.repr;
    holds = a.repr == "h" ? is_planar_h(t.as_h(), s.threads()) : is_planar(t.ctx, t.as_f(), s.threads());
  } else if (a.kind == "rds") {
    const RdsFile r = read_rds(text);
    rep["field"] = field_json(r.ctx);
    const DifferenceCount c = count_differences(r.rds);
    rep["differences"] = c.differences;
    rep["outside_once"] = c.outside_once;
    rep["outside_missed"] = c.outside_missed;
    rep["outside_repeated"] = c.outside_repeated;
    rep["inside_hits"] = c.inside_hits;
    holds = c.valid();
  } else if (a.kind == "plane") {
    Incidence p;
    if (first_content_line(text).starts_with("points=")) {
      p = read_incidence(text);
    } else {
      const RdsFile r = read_rds(text);
      rep["field"] = field_json(r.ctx);
      p = build_plane(r.rds);
    }
    const PlaneCheck c = check_plane(p, s.threads());
    rep["points"] = p.num_points;
    rep["lines"] = p.num_lines;
    rep["order"] = c.order;
    rep["sizes"] = c.sizes;
    rep["points_axiom"] = c.points_axiom;
    rep["lines_axiom"] = c.lines_axiom;
    rep["quadrangle"] = c.quadrangle;
    holds = c.ok();
  } else {
    const RdsFile r = read_rds(text);
    rep["field"] = field_json(r.ctx);
    const bool valid = verify_rds(r.rds);
    rep["rds_valid"] = valid;
    if (valid) {
      const SemifieldReport sr = semifield_report(r.ctx, r.rds, std::nullopt, s.threads());
      rep["criteria"] = semifield_json(sr, false);
      holds = sr.plane();
    }
  }
  rep["holds"] = holds;
  s.emit(rep);
  return verdict(holds);
}

// ---------------------------------------------------------------- generate --

struct GenerateArgs {
  std::string kind;
  std::string repr = "f";
  std::vector<unsigned> chain;
  std::vector<std::string> zetas;
};

std::string render(const FieldCtx& ctx, const FeFun& f, const std::string& repr) {
  if (repr == "f") return write_table(ctx, f.table);
  if (repr == "h") return write_table(ctx, f_to_h(ctx, f).table);
  if (repr == "poly") return write_poly(ctx, interpolate(ctx, f));
  return write_rds(ctx, rds_from_h(f_to_h(ctx, f)));
}

int cmd_generate(const Session& s, const GenerateArgs& a) {
  const FieldCtx ctx = s.field();
  FeFun f;
  if (a.kind == "zero") {
    f = construct_zero(ctx);
  } else if (a.kind == "knuth") {
    f = construct_knuth(ctx);
  } else {
    std::vector<Fe> zetas;
    for (const std::string& z : a.zetas) zetas.push_back(Fe{parse_hex_word(z)});
    f = construct_kantor(ctx, a.chain, zetas);
  }
  s.data(render(ctx, f, a.repr));
  return kOk;
}

// ----------------------------------------------------------------- convert --

struct ConvertArgs {
  std::string direction;
  std::string in;
  std::string repr = "f";
};

int cmd_convert(const Session& s, const ConvertArgs& a) {
  const std::string text = read_file(a.in);
  const std::string& d = a.direction;
  if (d == "poly2tt") {
    const PolyFile p = read_poly(text);
    s.data(write_table(p.ctx, evaluate(p.ctx, p.poly).table));
    return kOk;
  }
  if (d == "rds2h") {
    const RdsFile r = read_rds(text);
    s.data(write_table(r.ctx, h_from_rds(r.rds).table));
    return kOk;
  }
  const TableFile t = read_table(text);
  if (d == "h2f") {
    s.data(write_table(t.ctx, h_to_f(t.ctx, t.as_h()).table));
  } else if (d == "f2h") {
    s.data(write_table(t.ctx, f_to_h(t.ctx, t.as_f()).table));
  } else if (d == "tt2poly") {
    s.data(write_poly(t.ctx, interpolate(t.ctx, t.as_f())));
  } else if (d == "h2rds") {
    s.data(write_rds(t.ctx, rds_from_h(t.as_h())));
  } else if (a.repr == "h") {
    s.data(write_table(t.ctx, normalize_h(t.as_h()).table));
  } else {
    s.data(write_table(t.ctx, evaluate(t.ctx, normalize_f(interpolate(t.ctx, t.as_f()))).table));
  }
  return kOk;
}

// ------------------------------------------------- planes and semifields --

struct PlaneArgs {
  std::string in;
  std::string layout = "lines";
};

int cmd_build_plane(const Session& s, const PlaneArgs& a) {
  const Incidence p = build_plane(read_rds(read_file(a.in)).rds);
  s.data(a.layout == "matrix" ? write_incidence_matrix(p) : write_incidence_lines(p));
  return kOk;
}

struct SemifieldArgs {
  std::string in;
  std::string h;
  std::string unit;
  bool timings = false;
};

int cmd_check_semifield(const Session& s, const SemifieldArgs& a) {
  if (a.in.empty() == a.h.empty()) throw ParseError("give exactly one of --in (RDS file) and --h-table");
  std::optional<BitVec> unit;
  if (!a.unit.empty()) unit = BitVec{parse_hex_word(a.unit)};
  Json rep = s.report("check-semifield");
  SemifieldReport r;
  if (!a.in.empty()) {
    const RdsFile f = read_rds(read_file(a.in));
    rep["field"] = field_json(f.ctx);
    if (!verify_rds(f.rds)) throw DomainError("check-semifield: the input is not a relative difference set");
    r = semifield_report(f.ctx, f.rds, unit, s.threads());
  } else {
    const TableFile t = read_table(read_file(a.h));
    rep["field"] = field_json(t.ctx);
    r = semifield_criteria(t.ctx, t.as_h(), unit, s.threads());
  }
  rep["criteria"] = semifield_json(r, a.timings);
  rep["holds"] = r.plane();
  s.emit(rep);
  return verdict(r.plane());
}

struct NucleiArgs {
  std::string in;
  std::string unit;
};

int cmd_nuclei(const Session& s, const NucleiArgs& a) {
  const RdsFile f = read_rds(read_file(a.in));
  std::optional<BitVec> unit;
  if (!a.unit.empty()) unit = BitVec{parse_hex_word(a.unit)};
  const Ptr p = coordinatize(f.rds, unit);
  const Nuclei nu = nuclei(p.mult, s.threads());
  Json rep = s.report("nuclei");
  rep["field"] = field_json(f.ctx);
  const auto id = table_identity(p.mult);
  rep["identity"] = id ? Json(format_hex(id->word)) : Json(nullptr);
  rep["left_size"] = nu.left.size();
  rep["middle_size"] = nu.middle.size();
  rep["right_size"] = nu.right.size();
  rep["left"] = hex_list(nu.left);
  rep["middle"] = hex_list(nu.middle);
  rep["right"] = hex_list(nu.right);
  s.emit(rep);
  return kOk;
}

// ------------------------------------------------------------- equivalence --

struct EquivalenceArgs {
  std::string in;
  std::string other;
  std::string witness;
  bool semifield = false;
};

int cmd_equivalence(const Session& s, const EquivalenceArgs& a) {
  const RdsFile d1 = read_rds(read_file(a.in));
  const RdsFile d2 = read_rds(read_file(a.other));
  SearchStats stats;
  std::optional<Equivalence> w;
  if (a.semifield) {
    if (const auto beta = are_equivalent_semifield(d1.rds, d2.rds, s.budget(kDefaultSearchBudget), &stats)) {
      w = Equivalence{*beta, Z4Elt{}};
    }
  } else {
    w = are_equivalent(d1.rds, d2.rds, s.budget(kDefaultSearchBudget), &stats);
  }
  Json rep = s.report("equivalence");
  rep["field"] = field_json(d1.ctx);
  rep["semifield"] = a.semifield;
  rep["nodes"] = stats.nodes;
  rep["equivalent"] = w.has_value();
  if (w) {
    rep["witness"] = Json{{"U", bit_rows(w->phi.u)}, {"V", bit_rows(w->phi.v)}, {"g", elt_text(w->g)}};
    if (!a.witness.empty()) write_file(a.witness, write_equivalence(d1.rds.n, *w));
  }
  s.emit(rep);
  return verdict(w.has_value());
}

// ----------------------------------------------------------- Boolean image --

struct Thm41Args {
  std::string xi = "1";
};

int cmd_thm41(const Session& s, const Thm41Args& a) {
  const FieldCtx ctx = s.field();
  const Thm41Report r = thm41_bruteforce(ctx, Fe{parse_hex_word(a.xi)}, s.threads());
  Json rep = s.report("thm41");
  rep["field"] = field_json(ctx);
  rep["xi"] = format_hex(r.xi.word);
  rep["candidates"] = r.candidates;
  rep["planar"] = r.planar;
  rep["additive"] = r.additive;
  rep["planar_surjective"] = r.planar_surjective;
  Json ce = Json::array();
  for (std::uint64_t m : r.counterexamples) ce.push_back(m);
  rep["counterexamples"] = ce;
  s.emit(rep);
  return verdict(r.counterexamples.empty());
}

int cmd_pn_span(const Session& s) {
  const FieldCtx ctx = s.field();
  const PnSpan p = pn_span(ctx);
  Json rep = s.report("pn-span");
  rep["field"] = field_json(ctx);
  rep["set_size"] = pn_set(ctx).size();
  rep["spans"] = p.spans;
  rep["basis"] = hex_list(p.basis);
  rep["annihilator"] = p.annihilator ? Json(format_hex(p.annihilator->word)) : Json(nullptr);
  s.emit(rep);
  return verdict(p.spans);
}

struct SeqArgs {
  std::string a;
  std::string xi;
  std::size_t count = 0;
};

int cmd_seq_sa(const Session& s, const SeqArgs& args) {
  const FieldCtx ctx = s.field();
  const std::size_t count = args.count == 0 ? 2 * std::size_t{ctx.size()} + 2 : args.count;
  const SeqSa q = sequence_sa(ctx, Fe{parse_hex_word(args.a)}, Fe{parse_hex_word(args.xi)}, count);
  Json rep = s.report("seq-sa");
  rep["field"] = field_json(ctx);
  rep["a"] = format_hex(q.a0.word);
  rep["xi"] = format_hex(q.xi.word);
  rep["terms"] = hex_list(q.terms);
  rep["closed_form"] = hex_list(q.closed_form);
  rep["period"] = q.period;
  rep["predicted_period"] = q.predicted_period;
  rep["zero_term"] = q.has_zero_term();
  rep["consistent"] = q.consistent();
  s.emit(rep);
  return verdict(q.consistent());
}

// ------------------------------------------------------------ shifted-bent --

struct BentArgs {
  std::string fn;
  std::string lambda;
};

int cmd_bent4_check(const Session& s, const BentArgs& a) {
  const BoolFun f = read_boolfun(read_file(a.fn));
  std::uint32_t mask = 0;
  Json idx = Json::array();
  for (std::uint32_t i : parse_index_list(a.lambda)) {
    if (i >= f.m) throw DomainError("--lambda index " + std::to_string(i) + " is not a variable of the function");
    mask |= 1u << i;
  }
  for (unsigned i = 0; i < f.m; ++i) {
    if ((mask >> i) & 1u) idx.push_back(i);
  }
  const bool holds = is_shifted_bent(f, mask);
  Json rep = s.report("bent4-check");
  rep["m"] = f.m;
  rep["lambda"] = idx;
  rep["degree"] = algebraic_degree(f);
  rep["weight"] = f.weight();
  rep["shifted_bent"] = holds;
  s.emit(rep);
  return verdict(holds);
}

// ------------------------------------------------------------------ search --

struct SearchArgs {
  std::string kind;
  unsigned m = 0;
};

constexpr std::uint64_t kExhaustiveBudget = 50'000'000;
constexpr std::uint64_t kRandomBudget = 10'000;

int cmd_search(const Session& s, const SearchArgs& a) {
  const FieldCtx ctx = s.field();
  const unsigned n = ctx.n();
  const std::uint64_t budget = s.budget(n <= kMaxExhaustiveSearch ? kExhaustiveBudget : kRandomBudget);
  const SearchReport r = a.kind == "nonDO-planar" ? search_nondo_planar(n, budget, s.seed())
                                                  : search_shifted_bent_system(n, a.m == 0 ? n : a.m, budget, s.seed());
  Json rep = s.report("search");
  rep["field"] = field_json(ctx);
  rep["kind"] = r.kind;
  rep["n"] = r.n;
  rep["m"] = r.m;
  rep["seed"] = s.seed();
  rep["budget"] = budget;
  rep["exhaustive"] = r.exhaustive;
  rep["complete"] = r.complete;
  rep["nodes"] = r.nodes;
  rep["solutions"] = r.solutions;
  rep["witnesses"] = r.witnesses;
  Json findings = Json::array();
  for (const MultiFun& f : r.findings) findings.push_back(hex_list(f.table));
  rep["findings"] = findings;
  s.emit(rep);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative difference sets in Z_4^n, planar functions, planes and shifted-bent functions", "z4rds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Global g;
  app.add_option("--n", g.n, "extension degree n");
  app.add_option("--modulus", g.modulus, "irreducible modulus as a hex bit mask");
  app.add_option("--seed", g.seed, "seed for randomized choices");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", g.budget, "search budget in nodes or samples");
  app.add_option("--out", g.out, "write the output here instead of stdout");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a property; exit 0 iff it holds");
  v->add_option("kind", verify.kind)->required()->check(CLI::IsMember({"planar", "rds", "plane", "semifield"}));
  v->add_option("--in", verify.in, "input file")->required();
  v->add_option("--repr", verify.repr, "for planar: f (field table) or h")->check(CLI::IsMember({"f", "h"}));

  GenerateArgs generate;
  auto* gen = app.add_subcommand("generate", "write a construction");
  gen->add_option("kind", generate.kind)->required()->check(CLI::IsMember({"zero", "knuth", "kantor"}));
  gen->add_option("--repr", generate.repr, "output: f, h, poly or rds")
      ->check(CLI::IsMember({"f", "h", "poly", "rds"}));
  gen->add_option("--chain", generate.chain, "kantor: n,m_1,...,m_k")->delimiter(',');
  gen->add_option("--zeta", generate.zetas, "kantor: nonzero hex elements, one per m_i")->delimiter(',');

  ConvertArgs convert;
  auto* conv = app.add_subcommand("convert", "convert between representations");
  conv->add_option("direction", convert.direction)
      ->required()
      ->check(CLI::IsMember({"h2f", "f2h", "tt2poly", "poly2tt", "normalize", "h2rds", "rds2h"}));
  conv->add_option("--in", convert.in, "input file")->required();
  conv->add_option("--repr", convert.repr, "for normalize: f or h")->check(CLI::IsMember({"f", "h"}));

  PlaneArgs plane;
  auto* bp = app.add_subcommand("build-plane", "write the projective plane of an RDS");
  bp->add_option("--in", plane.in, "RDS file")->required();
  bp->add_option("--layout", plane.layout, "lines or matrix")->check(CLI::IsMember({"lines", "matrix"}));

  SemifieldArgs semifield;
  auto* cs = app.add_subcommand("check-semifield", "evaluate the five semifield criteria");
  cs->add_option("--in", semifield.in, "RDS file");
  cs->add_option("--h-table", semifield.h, "truth table of h");
  cs->add_option("--unit", semifield.unit, "unit vector for coordinatization (hex)");
  cs->add_flag("--timings", semifield.timings, "report the time per criterion");

  NucleiArgs nuc;
  auto* nu = app.add_subcommand("nuclei", "nuclei of the coordinatized multiplication");
  nu->add_option("--in", nuc.in, "RDS file")->required();
  nu->add_option("--unit", nuc.unit, "unit vector for coordinatization (hex)");

  EquivalenceArgs equiv;
  auto* eq = app.add_subcommand("equivalence", "search an automorphism and translation between two RDSs");
  eq->add_option("--in", equiv.in, "first RDS file")->required();
  eq->add_option("--other", equiv.other, "second RDS file")->required();
  eq->add_option("--witness", equiv.witness, "write the witness file here");
  eq->add_flag("--semifield", equiv.semifield, "translation-free search for semifield RDSs containing 0");

  Thm41Args thm;
  auto* t41 = app.add_subcommand("thm41", "planar versus additive for maps with image in {0, xi}");
  t41->add_option("--xi", thm.xi, "nonzero hex element");

  auto* pn = app.add_subcommand("pn-span", "does P_n span the field");

  BentArgs bent;
  auto* b4 = app.add_subcommand("bent4-check", "shifted-bent test for a Boolean function");
  b4->add_option("--fn", bent.fn, "Boolean function file")->required();
  b4->add_option("--lambda", bent.lambda, "comma separated variable indices");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "search for a non-DO planar function or a shifted-bent system");
  se->add_option("kind", search.kind)->required()->check(CLI::IsMember({"nonDO-planar", "shifted-bent-system"}));
  se->add_option("--m", search.m, "number of functions in the system (default n)");

  SeqArgs seq;
  auto* sq = app.add_subcommand("seq-sa", "the sequence a_{i+1} = a_{i-1} + xi / a_i");
  sq->add_option("--a", seq.a, "start element (hex)")->required();
  sq->add_option("--xi", seq.xi, "nonzero hex element")->required();
  sq->add_option("--count", seq.count, "number of terms (default 2^{n+1} + 2)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Session s(g, out);
  try {
    if (v->parsed()) return cmd_verify(s, verify);
    if (gen->parsed()) return cmd_generate(s, generate);
    if (conv->parsed()) return cmd_convert(s, convert);
    if (bp->parsed()) return cmd_build_plane(s, plane);
    if (cs->parsed()) return cmd_check_semifield(s, semifield);
    if (nu->parsed()) return cmd_nuclei(s, nuc);
    if (eq->parsed()) return cmd_equivalence(s, equiv);
    if (t41->parsed()) return cmd_thm41(s, thm);
    if (pn->parsed()) return cmd_pn_span(s);
    if (b4->parsed()) return cmd_bent4_check(s, bent);
    if (se->parsed()) return cmd_search(s, search);
    if (sq->parsed()) return cmd_seq_sa(s, seq);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace z4rds::cli
