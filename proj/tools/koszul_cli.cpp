// Command-line front end: ring files in, deterministic text or JSON out.
// Exit codes: 0 computed, 1 negative verdict, 2 input error, 3 inconclusive.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "koszul/constructions.hpp"
#include "koszul/koszulness.hpp"
#include "koszul/ringfile.hpp"

using json = nlohmann::ordered_json;
using namespace koszul;

namespace {

struct Output {
  bool as_json = false;
  json j;
  std::ostringstream text;

  explicit Output(const std::string& command) {
    j["schema"] = 1;
    j["command"] = command;
  }
  void flush() {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

RingFile load_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str());
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(to_string(f));
  return out;
}

std::string mono_string(const Monomial& m, const RingPtr& ring) {
  return to_string(m, ring->var_names());
}

std::string zpoly_string(const ZPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    first = false;
    mpz_class a = abs(c);
    if (i == 0 || a != 1) out << a.get_str();
    if (i == 1) out << "z";
    if (i > 1) out << "z^" << i;
  }
  if (first) out << "0";
  return out.str();
}

// Macaulay-style diagram: columns are homological degrees, rows are j - i
std::string betti_diagram(const BettiTable& t) {
  if (t.entries.empty()) return "  (empty table)\n";
  int64_t imax = 0, smin = 0, smax = 0;
  for (const auto& [ij, b] : t.entries) {
    imax = std::max(imax, ij.first);
    smin = std::min(smin, ij.second - ij.first);
    smax = std::max(smax, ij.second - ij.first);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(imax) + 1, 1);
  for (const auto& [ij, b] : t.entries) {
    std::size_t w = std::to_string(b).size();
    width[static_cast<std::size_t>(ij.first)] =
        std::max(width[static_cast<std::size_t>(ij.first)], w);
  }
  std::ostringstream out;
  std::size_t label = std::to_string(smax).size() + (smin < 0 ? 1 : 0);
  out << std::string(label, ' ') << " |";
  for (int64_t i = 0; i <= imax; ++i) {
    std::string h = std::to_string(i);
    out << " " << std::string(width[static_cast<std::size_t>(i)] - std::min(width[static_cast<std::size_t>(i)], h.size()), ' ') << h;
  }
  out << "\n";
  for (int64_t s = smin; s <= smax; ++s) {
    std::string h = std::to_string(s);
    out << std::string(label - h.size(), ' ') << h << " |";
    for (int64_t i = 0; i <= imax; ++i) {
      int64_t b = t.beta(i, i + s);
      std::string cell = b == 0 ? "." : std::to_string(b);
      out << " " << std::string(width[static_cast<std::size_t>(i)] - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

json betti_json(const BettiTable& t) {
  json b;
  b["over"] = t.over;
  b["hom_bound"] = t.hom_bound;
  b["deg_bound"] = t.deg_bound;
  b["complete"] = t.complete;
  b["entries"] = json::array();
  for (const auto& [ij, v] : t.entries)
    b["entries"].push_back({ij.first, ij.second, v});
  b["totals"] = json::array();
  for (int64_t i = 0; i <= t.hom_bound; ++i) b["totals"].push_back(t.total_in_row(i));
  if (t.complete) {
    b["regularity"] = t.regularity();
    if (auto pd = t.projective_dimension()) b["projective_dimension"] = *pd;
  }
  return b;
}

void emit_ring_file(Output& out, const std::string& emit_path, const RingFile& rf) {
  std::string text = print_ring_file(rf);
  if (out.as_json) out.j["ring_file"] = text;
  if (emit_path.empty()) return;
  if (emit_path == "-") {
    if (!out.as_json) out.text.str(""), out.text << text;
    return;
  }
  std::ofstream f(emit_path);
  if (!f) throw std::runtime_error("cannot write '" + emit_path + "'");
  f << text;
  if (!out.as_json) out.text << "wrote " << emit_path << "\n";
}

json subalgebra_json(const SubalgebraPresentation& P) {
  json p;
  p["generators"] = poly_strings(P.generator_expressions);
  p["presentation_vars"] = P.presentation_ring->var_names();
  p["kernel"] = poly_strings(P.kernel.gens);
  return p;
}

void describe_presentation(Output& out, const SubalgebraPresentation& P,
                           const std::string& emit_path) {
  auto degs = minimal_generator_degrees(P.kernel);
  if (out.as_json) {
    out.j["presentation"] = subalgebra_json(P);
    out.j["kernel_mingen_degrees"] = degs;
  } else {
    out.text << "generators (" << P.generator_expressions.size() << "):";
    for (const auto& g : P.generator_expressions) out.text << " " << to_string(g);
    out.text << "\nkernel (" << P.kernel.gens.size() << " generators):\n";
    for (const auto& g : P.kernel.gens) out.text << "  " << to_string(g) << "\n";
    out.text << "kernel minimal generator degrees:";
    for (auto d : degs) out.text << " " << d;
    out.text << "\n";
  }
  emit_ring_file(out, emit_path, RingFile{P.presented(), std::nullopt});
}

std::vector<int64_t> parse_int_list(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-algebra diagnostics: bases, series, Betti tables, Koszulness"};
  app.require_subcommand(1);
  bool as_json = false, timings = false;
  uint64_t seed = 1;
  app.add_flag("--json", as_json, "JSON output (schema 1)");
  app.add_flag("--timings", timings, "print wall-clock time to stderr");
  app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();

  int rc = 0;
  Timer timer;

  // ---- gb ----
  struct {
    std::string file, order = "degrevlex", perm;
    int64_t truncate = -1;
  } gb_opt;
  auto* cmd_gb = app.add_subcommand("gb", "reduced Groebner basis of the defining ideal");
  cmd_gb->add_option("file", gb_opt.file, "ring file")->required();
  cmd_gb->add_option("--order", gb_opt.order, "lex | deglex | degrevlex")->capture_default_str();
  cmd_gb->add_option("--perm", gb_opt.perm, "variable precedence, comma-separated indices");
  cmd_gb->add_option("--truncate", gb_opt.truncate, "degree bound for the basis");
  cmd_gb->callback([&] {
    RingFile rf = load_ring(gb_opt.file);
    MonomialOrder ord = MonomialOrder::degrevlex();
    if (gb_opt.order == "lex") ord = MonomialOrder::lex();
    else if (gb_opt.order == "deglex") ord = MonomialOrder::deglex();
    else if (gb_opt.order != "degrevlex")
      throw std::invalid_argument("unknown order '" + gb_opt.order + "'");
    if (!gb_opt.perm.empty()) {
      for (int64_t v : parse_int_list(gb_opt.perm))
        ord.perm.push_back(static_cast<int>(v));
      if (ord.perm.size() != rf.ring.ambient()->nvars())
        throw std::invalid_argument("permutation must list every variable once");
    }
    RingPtr reordered = with_order(rf.ring.ambient(), ord);
    std::vector<Polynomial> gens;
    for (const auto& g : rf.ring.defining_ideal().gens)
      gens.push_back(g.converted(reordered));
    BuchbergerOptions opts;
    opts.degree_bound = gb_opt.truncate;
    GroebnerBasis G = reduced_groebner_basis(make_ideal(reordered, gens), opts);
    Output out("gb");
    out.as_json = as_json;
    out.j["order"] = gb_opt.order + (gb_opt.perm.empty() ? "" : " perm " + gb_opt.perm);
    out.j["basis"] = poly_strings(G.elems);
    json lms = json::array();
    for (const auto& m : G.leading_monomials())
      lms.push_back(mono_string(m, reordered));
    out.j["leading_monomials"] = lms;
    out.j["truncated"] = G.truncated;
    out.text << "reduced basis (" << G.elems.size() << " elements, " << gb_opt.order
             << (gb_opt.perm.empty() ? "" : ", perm " + gb_opt.perm) << "):\n";
    for (const auto& g : G.elems) out.text << "  " << to_string(g) << "\n";
    out.text << "leading monomials:";
    for (const auto& m : G.leading_monomials()) out.text << " " << mono_string(m, reordered);
    out.text << "\n";
    if (G.truncated) out.text << "(truncated at degree " << gb_opt.truncate << ")\n";
    out.flush();
  });

  // ---- hilbert ----
  struct {
    std::string file;
    int64_t truncation = 12;
  } hb_opt;
  auto* cmd_hb = app.add_subcommand("hilbert", "Hilbert series and obstruction data");
  cmd_hb->add_option("file", hb_opt.file, "ring file")->required();
  cmd_hb->add_option("--truncation", hb_opt.truncation, "dimensions listed through this degree")->capture_default_str();
  cmd_hb->callback([&] {
    RingFile rf = load_ring(hb_opt.file);
    HilbertSeries H = hilbert_series(rf.ring);
    Output out("hilbert");
    out.as_json = as_json;
    out.j["series"] = H.to_string();
    out.j["h_polynomial"] = zpoly_string(H.numerator);
    out.j["dimension"] = H.dimension();
    json dims = json::array();
    for (int64_t d = 0; d <= hb_opt.truncation; ++d)
      dims.push_back(H.coefficient(d).get_str());
    out.j["dimensions"] = dims;
    out.text << H.to_string() << "\n";
    out.text << "h-polynomial: " << zpoly_string(H.numerator) << "\n";
    out.text << "dimension: " << H.dimension() << "\n";
    out.text << "dim R_j, j = 0.." << hb_opt.truncation << ":";
    for (int64_t d = 0; d <= hb_opt.truncation; ++d)
      out.text << " " << H.coefficient(d).get_str();
    out.text << "\n";
    out.flush();
  });

  // ---- betti ----
  struct {
    std::string file, module = "R", over = "S";
    int64_t hom = 4, degree = 10;
  } bt_opt;
  auto* cmd_bt = app.add_subcommand("betti", "graded Betti table");
  cmd_bt->add_option("file", bt_opt.file, "ring file")->required();
  cmd_bt->add_option("--module", bt_opt.module, "R (the quotient) or K (the residue field)")->capture_default_str();
  cmd_bt->add_option("--over", bt_opt.over, "S (polynomial ring) or R (the quotient)")->capture_default_str();
  cmd_bt->add_option("--hom", bt_opt.hom, "homological bound")->capture_default_str();
  cmd_bt->add_option("--degree", bt_opt.degree, "internal degree bound")->capture_default_str();
  cmd_bt->callback([&] {
    RingFile rf = load_ring(bt_opt.file);
    BettiTable t;
    if (bt_opt.module == "R" && bt_opt.over == "S") {
      t = minimal_betti_table_S(rf.ring.defining_ideal(), bt_opt.hom, bt_opt.degree);
    } else if (bt_opt.module == "K" && bt_opt.over == "R") {
      t = betti_table_over_quotient(rf.ring, bt_opt.hom, bt_opt.degree);
    } else {
      throw std::invalid_argument("supported tables: --module R --over S, --module K --over R");
    }
    Output out("betti");
    out.as_json = as_json;
    out.j["module"] = bt_opt.module;
    out.j["table"] = betti_json(t);
    out.text << "betti(" << bt_opt.module << " over " << bt_opt.over << "), rows 0.."
             << t.hom_bound << ", degrees to " << t.deg_bound
             << (t.complete ? " (complete)" : " (window)") << "\n";
    out.text << betti_diagram(t);
    out.text << "totals:";
    for (int64_t i = 0; i <= t.hom_bound; ++i) out.text << " " << t.total_in_row(i);
    out.text << "\n";
    if (t.complete) {
      out.text << "regularity: " << t.regularity() << "\n";
      if (auto pd = t.projective_dimension())
        out.text << "projective dimension: " << *pd << "\n";
    }
    out.flush();
  });

  // ---- koszul-homology ----
  struct {
    std::string file;
    int64_t hom = 4, degree = 10;
  } kh_opt;
  auto* cmd_kh = app.add_subcommand("koszul-homology", "Koszul homology dimensions H_{i,j}");
  cmd_kh->add_option("file", kh_opt.file, "ring file")->required();
  cmd_kh->add_option("--hom", kh_opt.hom, "largest homological index")->capture_default_str();
  cmd_kh->add_option("--degree", kh_opt.degree, "internal degree bound")->capture_default_str();
  cmd_kh->callback([&] {
    RingFile rf = load_ring(kh_opt.file);
    KoszulHomology H = koszul_homology_dims(rf.ring, kh_opt.hom, kh_opt.degree);
    Output out("koszul-homology");
    out.as_json = as_json;
    out.j["i_max"] = H.i_max;
    out.j["deg_bound"] = H.deg_bound;
    json dims = json::array();
    for (int64_t i = 0; i <= H.i_max; ++i)
      for (const auto& [jdeg, dim] : H.dims[static_cast<std::size_t>(i)])
        dims.push_back({i, jdeg, dim});
    out.j["dims"] = dims;
    json ts = json::array();
    for (int64_t i = 0; i <= H.i_max; ++i) {
      auto ti = H.t(i);
      ts.push_back(ti ? json(*ti) : json(nullptr));
    }
    out.j["t"] = ts;
    out.j["row_certified"] = json::array();
    for (auto c : H.row_certified) out.j["row_certified"].push_back(static_cast<bool>(c));
    out.j["fully_certified"] = H.fully_certified();
    if (H.fully_certified()) out.j["regularity"] = H.regularity();
    for (int64_t i = 0; i <= H.i_max; ++i) {
      out.text << "H_" << i << ":";
      for (const auto& [jdeg, dim] : H.dims[static_cast<std::size_t>(i)])
        out.text << " (" << jdeg << ")" << dim;
      auto ti = H.t(i);
      if (ti) out.text << "   t_" << i << " = " << *ti;
      out.text << (H.row_certified[static_cast<std::size_t>(i)] ? "" : "   [window]") << "\n";
    }
    if (H.fully_certified()) out.text << "regularity: " << H.regularity() << "\n";
    out.flush();
  });

  // ---- koszul-report ----
  struct {
    std::string file;
    int64_t imax = 4, degree = 10, truncation = 12;
    bool g_search = false;
    int g_random = 0;
    int64_t lg_extra = -1;
  } kr_opt;
  auto* cmd_kr = app.add_subcommand("koszul-report", "full Koszulness diagnostic with verdict");
  cmd_kr->add_option("file", kr_opt.file, "ring file")->required();
  cmd_kr->add_option("--imax", kr_opt.imax, "homological window")->capture_default_str();
  cmd_kr->add_option("--degree", kr_opt.degree, "internal degree window")->capture_default_str();
  cmd_kr->add_option("--truncation", kr_opt.truncation, "series truncation")->capture_default_str();
  cmd_kr->add_flag("--g-search", kr_opt.g_search, "search for a quadratic initial ideal");
  cmd_kr->add_option("--g-random", kr_opt.g_random, "random coordinate changes to try");
  cmd_kr->add_option("--lg-extra", kr_opt.lg_extra, "run the monomial-quadric search with this many extra variables");
  cmd_kr->callback([&] {
    RingFile rf = load_ring(kr_opt.file);
    ReportOptions opt;
    opt.i_max = kr_opt.imax;
    opt.deg_bound = kr_opt.degree;
    opt.series_truncation = kr_opt.truncation;
    opt.search_g_quadratic = kr_opt.g_search;
    opt.g_random_changes = kr_opt.g_random;
    opt.seed = seed;
    if (kr_opt.lg_extra >= 0) opt.lg_max_extra_vars = kr_opt.lg_extra;
    if (rf.filtration) opt.filtration = &*rf.filtration;
    DiagnosticReport rep = full_report(rf.ring, opt);
    Output out("koszul-report");
    out.as_json = as_json;
    out.j["verdict"] = rep.verdict;
    out.j["reason"] = rep.reason;
    out.j["quadratic"] = rep.quadratic.quadratic;
    out.j["min_gen_degrees"] = rep.quadratic.min_gen_degrees;
    json num;
    json inv = json::array();
    for (const auto& c : rep.numeric.inverse_coeffs) inv.push_back(c.get_str());
    num["inverse_series_coeffs"] = inv;
    num["first_negative_inverse"] =
        rep.numeric.first_negative_inverse ? json(*rep.numeric.first_negative_inverse) : json(nullptr);
    json dev = json::array();
    for (std::size_t h = 1; h < rep.numeric.deviations.e.size(); ++h)
      dev.push_back(rep.numeric.deviations.e[h].get_str());
    num["deviations"] = dev;
    num["deviation_obstruction_index"] =
        rep.numeric.deviations.obstruction_index ? json(*rep.numeric.deviations.obstruction_index) : json(nullptr);
    out.j["numeric"] = num;
    json win;
    win["diagonal"] = rep.window.diagonal;
    if (rep.window.first_off_diagonal)
      win["first_off_diagonal"] = {rep.window.first_off_diagonal->first,
                                   rep.window.first_off_diagonal->second};
    if (rep.window.rate_estimate)
      win["rate_estimate"] = rep.window.rate_estimate->get_str();
    win["table"] = betti_json(rep.window.table);
    out.j["window"] = win;
    if (rep.g_search) {
      json g;
      g["found"] = rep.g_search->certificate.has_value();
      g["orders_tried"] = rep.g_search->orders_tried;
      g["changes_tried"] = rep.g_search->changes_tried;
      out.j["g_search"] = g;
    }
    if (rep.lg_search) {
      json lg;
      lg["obstructed"] = rep.lg_search->obstructed();
      lg["quadric_count"] = rep.lg_search->quadric_count;
      lg["max_extra_vars"] = rep.lg_search->max_extra_vars;
      json sizes = json::array();
      for (const auto& v : rep.lg_search->per_extra) sizes.push_back(v.size());
      lg["candidates_per_extra"] = sizes;
      out.j["lg_search"] = lg;
    }
    if (rep.filtration) {
      json f;
      f["verified"] = rep.filtration->verified;
      if (!rep.filtration->verified) f["failure"] = rep.filtration->failure;
      out.j["filtration"] = f;
    }
    out.text << "verdict: " << rep.verdict << "\n";
    out.text << "reason: " << rep.reason << "\n";
    out.text << "quadratic: " << (rep.quadratic.quadratic ? "yes" : "no") << " (minimal generator degrees:";
    for (auto d : rep.quadratic.min_gen_degrees) out.text << " " << d;
    out.text << ")\n";
    out.text << "1/H(-z) coefficients:";
    for (const auto& c : rep.numeric.inverse_coeffs) out.text << " " << c.get_str();
    out.text << "\n";
    if (rep.numeric.first_negative_inverse)
      out.text << "  first negative at z^" << *rep.numeric.first_negative_inverse << "\n";
    out.text << "deviations e_1..:";
    for (std::size_t h = 1; h < rep.numeric.deviations.e.size(); ++h)
      out.text << " " << rep.numeric.deviations.e[h].get_str();
    out.text << "\n";
    if (rep.numeric.deviations.obstruction_index)
      out.text << "  deviation obstruction at index " << *rep.numeric.deviations.obstruction_index << "\n";
    out.text << "residue-field table window:\n" << betti_diagram(rep.window.table);
    if (rep.window.rate_estimate)
      out.text << "rate within window: " << rep.window.rate_estimate->get_str() << "\n";
    if (rep.g_search)
      out.text << "initial-ideal search: " << (rep.g_search->certificate ? "certificate found" : "nothing found")
               << " (" << rep.g_search->orders_tried << " orders, "
               << rep.g_search->changes_tried << " coordinate changes)\n";
    if (rep.lg_search)
      out.text << "monomial-quadric h-polynomial search: "
               << (rep.lg_search->obstructed() ? "no candidate (obstructed)" : "candidates exist") << "\n";
    if (rep.filtration)
      out.text << "filtration: " << (rep.filtration->verified ? "verified" : "FAILED: " + rep.filtration->failure) << "\n";
    out.flush();
    if (rep.verdict == "not-koszul") rc = 1;
    if (rep.verdict == "inconclusive") rc = 3;
  });

  // ---- filtration-verify ----
  struct { std::string file; } fv_opt;
  auto* cmd_fv = app.add_subcommand("filtration-verify", "check every witness of the filtration in the file");
  cmd_fv->add_option("file", fv_opt.file, "ring file with a filtration block")->required();
  cmd_fv->callback([&] {
    RingFile rf = load_ring(fv_opt.file);
    if (!rf.filtration) throw std::invalid_argument("no filtration block in the file");
    FiltrationCheck fc = verify_koszul_filtration(rf.ring, *rf.filtration);
    Output out("filtration-verify");
    out.as_json = as_json;
    out.j["ideals"] = rf.filtration->ideals.size();
    out.j["witnesses"] = rf.filtration->witnesses.size();
    out.j["verified"] = fc.verified;
    if (!fc.verified) out.j["failure"] = fc.failure;
    out.text << "ideals: " << rf.filtration->ideals.size()
             << ", witnesses: " << rf.filtration->witnesses.size() << "\n";
    out.text << (fc.verified ? "verified: the ring is Koszul\n" : "FAILED: " + fc.failure + "\n");
    out.flush();
    if (!fc.verified) rc = 1;
  });

  // ---- strongly-koszul ----
  struct { std::string file, basis; } sk_opt;
  auto* cmd_sk = app.add_subcommand("strongly-koszul", "exhaustive colon check over a degree-1 basis");
  cmd_sk->add_option("file", sk_opt.file, "ring file")->required();
  cmd_sk->add_option("--basis", sk_opt.basis, "comma-separated linear forms (default: the variables)");
  cmd_sk->callback([&] {
    RingFile rf = load_ring(sk_opt.file);
    std::vector<Polynomial> X;
    if (sk_opt.basis.empty()) {
      for (std::size_t v = 0; v < rf.ring.nvars(); ++v)
        X.push_back(Polynomial::variable(rf.ring.ambient(), v));
    } else {
      std::stringstream in(sk_opt.basis);
      std::string item;
      while (std::getline(in, item, ','))
        X.push_back(parse_polynomial(rf.ring.ambient(), item));
    }
    StronglyKoszulResult r = strongly_koszul_check(rf.ring, X);
    Output out("strongly-koszul");
    out.as_json = as_json;
    out.j["basis"] = poly_strings(X);
    out.j["verified"] = r.verified;
    out.j["pairs_checked"] = r.pairs_checked;
    if (r.counterexample) {
      json ce;
      ce["subset"] = r.counterexample->first;
      ce["element"] = r.counterexample->second;
      out.j["counterexample"] = ce;
    }
    out.text << "pairs checked: " << r.pairs_checked << "\n";
    if (r.verified) {
      out.text << "strongly Koszul for this basis (hence Koszul)\n";
    } else {
      out.text << "counterexample: colon of { ";
      for (auto i : r.counterexample->first) out.text << to_string(X[i]) << " ";
      out.text << "} by " << to_string(X[r.counterexample->second])
               << " is not generated by basis elements\n";
    }
    out.flush();
    if (!r.verified) rc = 1;
  });

  // ---- lg-search ----
  struct {
    std::string h;
    int64_t extra = 3;
  } lg_opt;
  auto* cmd_lg = app.add_subcommand("lg-search", "quadratic monomial ideals with a prescribed h-polynomial");
  cmd_lg->set_help_flag("--help", "print this help message and exit");
  cmd_lg->add_option("--h", lg_opt.h, "h-polynomial coefficients, comma-separated")->required();
  cmd_lg->add_option("--max-extra-vars", lg_opt.extra, "extra variables beyond the codimension")->capture_default_str();
  cmd_lg->callback([&] {
    ZPoly h;
    for (int64_t c : parse_int_list(lg_opt.h)) h.push_back(c);
    LGObstructionResult r = lg_obstruction_search(h, lg_opt.extra);
    Output out("lg-search");
    out.as_json = as_json;
    out.j["h"] = zpoly_string(r.h);
    out.j["codim"] = r.codim;
    out.j["quadric_count"] = r.quadric_count;
    out.j["max_extra_vars"] = r.max_extra_vars;
    out.j["obstructed"] = r.obstructed();
    json cands = json::array();
    for (std::size_t k = 0; k < r.per_extra.size(); ++k)
      for (const auto& c : r.per_extra[k]) {
        json jc;
        jc["extra_vars"] = k;
        jc["nvars"] = c.nvars;
        std::vector<std::string> names;
        for (std::size_t v = 0; v < c.nvars; ++v)
          names.push_back(std::string(1, static_cast<char>('a' + v)));
        std::vector<std::string> gs;
        for (const auto& m : c.gens) gs.push_back(to_string(m, names));
        jc["gens"] = gs;
        cands.push_back(jc);
      }
    out.j["candidates"] = cands;
    out.text << "h = " << zpoly_string(r.h) << ", codimension " << r.codim
             << ", " << r.quadric_count << " quadrics required\n";
    if (r.obstructed()) {
      out.text << "no quadratic monomial ideal found (searched up to "
               << r.max_extra_vars << " extra variables)\n";
    } else {
      for (std::size_t k = 0; k < r.per_extra.size(); ++k)
        for (const auto& c : r.per_extra[k]) {
          std::vector<std::string> names;
          for (std::size_t v = 0; v < c.nvars; ++v)
            names.push_back(std::string(1, static_cast<char>('a' + v)));
          out.text << "  " << c.nvars << " variables:";
          for (const auto& m : c.gens) out.text << " " << to_string(m, names);
          out.text << "\n";
        }
    }
    out.flush();
  });

  // ---- veronese ----
  struct {
    std::string file, emit;
    int64_t c = 2, module = -1, bound = 6;
  } vr_opt;
  auto* cmd_vr = app.add_subcommand("veronese", "presentation of the c-th Veronese subalgebra");
  cmd_vr->add_option("file", vr_opt.file, "ring file")->required();
  cmd_vr->add_option("-c,--index", vr_opt.c, "Veronese index")->capture_default_str();
  cmd_vr->add_option("--module", vr_opt.module, "also present the degree-u slice as a module");
  cmd_vr->add_option("--bound", vr_opt.bound, "module relation degree bound")->capture_default_str();
  cmd_vr->add_option("--emit", vr_opt.emit, "write the presented quotient as a ring file (- for stdout)");
  cmd_vr->callback([&] {
    RingFile rf = load_ring(vr_opt.file);
    SubalgebraPresentation P = veronese_presentation(rf.ring, vr_opt.c);
    Output out("veronese");
    out.as_json = as_json;
    out.j["c"] = vr_opt.c;
    describe_presentation(out, P, vr_opt.emit);
    if (vr_opt.module >= 0) {
      VeroneseModule M = veronese_module_presentation(rf.ring, vr_opt.c, vr_opt.module, vr_opt.bound);
      json jm;
      jm["u"] = vr_opt.module;
      jm["generators"] = poly_strings(M.generator_expressions);
      jm["relation_degrees"] = M.relation_degrees;
      json rels = json::array();
      for (const auto& col : M.relations) rels.push_back(poly_strings(col));
      jm["relations"] = rels;
      jm["degree_bound"] = M.degree_bound;
      out.j["module"] = jm;
      out.text << "module slice u = " << vr_opt.module << ": generators";
      for (const auto& g : M.generator_expressions) out.text << " " << to_string(g);
      out.text << "\n  " << M.relations.size() << " minimal relations through degree "
               << M.degree_bound << ", degrees:";
      for (auto d : M.relation_degrees) out.text << " " << d;
      out.text << "\n";
    }
    out.flush();
  });

  // ---- pinched ----
  struct {
    std::string emit;
    int64_t n = 3, d = 3, s = 2, bound = 3;
  } pv_opt;
  auto* cmd_pv = app.add_subcommand("pinched", "pinched Veronese: degree-d monomials on at most s variables");
  cmd_pv->add_option("-n", pv_opt.n, "ambient variables")->required();
  cmd_pv->add_option("-d", pv_opt.d, "monomial degree")->required();
  cmd_pv->add_option("-s", pv_opt.s, "support bound")->required();
  cmd_pv->add_option("--bound", pv_opt.bound, "kernel generator degree bound")->capture_default_str();
  cmd_pv->add_option("--emit", pv_opt.emit, "write the presented quotient as a ring file (- for stdout)");
  cmd_pv->callback([&] {
    PinchedVeronese P = pinched_veronese(pv_opt.n, pv_opt.d, pv_opt.s, pv_opt.bound);
    Output out("pinched");
    out.as_json = as_json;
    out.j["n"] = pv_opt.n;
    out.j["d"] = pv_opt.d;
    out.j["s"] = pv_opt.s;
    out.j["generators"] = poly_strings(P.pres.generator_expressions);
    out.j["kernel_mingens_by_degree"] = P.kernel_mingens_by_degree;
    out.j["degree_bound"] = P.degree_bound;
    out.text << P.pres.generator_expressions.size() << " algebra generators:";
    for (const auto& g : P.pres.generator_expressions) out.text << " " << to_string(g);
    out.text << "\nkernel minimal generators by degree (through " << P.degree_bound << "):";
    for (std::size_t k = 2; k < P.kernel_mingens_by_degree.size(); ++k)
      out.text << " " << k << ":" << P.kernel_mingens_by_degree[k];
    out.text << "\n";
    emit_ring_file(out, pv_opt.emit, RingFile{P.pres.presented(), std::nullopt});
    out.flush();
  });

  // ---- diagonal ----
  struct {
    std::string file, emit;
    int64_t c1 = 1, c2 = 1;
  } dg_opt;
  auto* cmd_dg = app.add_subcommand("diagonal", "diagonal subalgebra of a Z^2-graded quotient");
  cmd_dg->add_option("file", dg_opt.file, "ring file with a 2-row grading")->required();
  cmd_dg->add_option("--c1", dg_opt.c1, "first diagonal step")->capture_default_str();
  cmd_dg->add_option("--c2", dg_opt.c2, "second diagonal step")->capture_default_str();
  cmd_dg->add_option("--emit", dg_opt.emit, "write the presented quotient as a ring file (- for stdout)");
  cmd_dg->callback([&] {
    RingFile rf = load_ring(dg_opt.file);
    SubalgebraPresentation P = diagonal_subalgebra(rf.ring, dg_opt.c1, dg_opt.c2);
    Output out("diagonal");
    out.as_json = as_json;
    out.j["c1"] = dg_opt.c1;
    out.j["c2"] = dg_opt.c2;
    describe_presentation(out, P, dg_opt.emit);
    out.flush();
  });

  // ---- rees-ci ----
  struct { std::string file, emit; } rc_opt;
  auto* cmd_rc = app.add_subcommand("rees-ci", "Rees algebra of the regular sequence in the ideal block");
  cmd_rc->add_option("file", rc_opt.file, "ring file whose ideal lists the sequence")->required();
  cmd_rc->add_option("--emit", rc_opt.emit, "write the bigraded Rees presentation as a ring file (- for stdout)");
  cmd_rc->callback([&] {
    RingFile rf = load_ring(rc_opt.file);
    QuotientRing rees = rees_ci_presentation(rf.ring.defining_ideal().gens);
    Output out("rees-ci");
    out.as_json = as_json;
    out.j["sequence"] = poly_strings(rf.ring.defining_ideal().gens);
    out.j["presentation_vars"] = rees.ambient()->var_names();
    out.j["minors"] = poly_strings(rees.defining_ideal().gens);
    out.text << "Rees presentation on";
    for (const auto& n : rees.ambient()->var_names()) out.text << " " << n;
    out.text << "\nminors (" << rees.defining_ideal().gens.size() << "):\n";
    for (const auto& g : rees.defining_ideal().gens) out.text << "  " << to_string(g) << "\n";
    emit_ring_file(out, rc_opt.emit, RingFile{rees, std::nullopt});
    out.flush();
  });

  // ---- ci-lift ----
  struct { std::string file, emit; } cl_opt;
  auto* cmd_cl = app.add_subcommand("ci-lift", "square-root lift of a complete intersection of quadrics");
  cmd_cl->add_option("file", cl_opt.file, "ring file defined by a CI of quadrics")->required();
  cmd_cl->add_option("--emit", cl_opt.emit, "write the lifted ring as a ring file (- for stdout)");
  cmd_cl->callback([&] {
    RingFile rf = load_ring(cl_opt.file);
    CiLift L = ci_lift(rf.ring);
    Output out("ci-lift");
    out.as_json = as_json;
    out.j["new_vars"] = L.new_vars;
    out.j["series"] = L.h_check.to_string();
    out.j["initial_ideal_order"] = "lex, new variables first";
    json sq = json::array();
    for (const auto& v : L.new_vars) sq.push_back(v + "^2");
    out.j["initial_ideal"] = sq;
    out.text << "lift adds";
    for (const auto& v : L.new_vars) out.text << " " << v;
    out.text << "\nlex initial ideal (new variables first):";
    for (const auto& v : L.new_vars) out.text << " " << v << "^2";
    out.text << "\nseries: " << L.h_check.to_string() << " (same h-polynomial)\n";
    emit_ring_file(out, cl_opt.emit, RingFile{L.lifted, std::nullopt});
    out.flush();
  });

  // ---- cs-check ----
  struct { int64_t m = 2, n = 2, box = 2; } cs_opt;
  auto* cmd_cs = app.add_subcommand("cs-check", "multigraded Hilbert function comparison for the generic 2-minor ideal");
  cmd_cs->add_option("-m", cs_opt.m, "matrix rows")->capture_default_str();
  cmd_cs->add_option("-n", cs_opt.n, "matrix columns")->capture_default_str();
  cmd_cs->add_option("--box", cs_opt.box, "check multidegrees up to this bound")->capture_default_str();
  cmd_cs->callback([&] {
    CartwrightSturmfelsCheck r = cartwright_sturmfels_check(cs_opt.m, cs_opt.n, cs_opt.box);
    Output out("cs-check");
    out.as_json = as_json;
    out.j["m"] = r.m;
    out.j["n"] = r.n;
    out.j["box"] = cs_opt.box;
    out.j["points_checked"] = r.points_checked;
    out.j["equal"] = r.equal;
    out.j["closed_formula"] = r.closed_formula;
    if (r.first_mismatch) out.j["first_mismatch"] = *r.first_mismatch;
    out.text << "checked " << r.points_checked << " multidegrees: "
             << (r.equal && r.closed_formula ? "all three counts agree"
                                             : "MISMATCH")
             << "\n";
    out.flush();
    if (!r.equal || !r.closed_formula) rc = 1;
  });

  // ---- identity-check ----
  struct {
    int64_t n = 2;
    std::string b = "1,1";
  } ic_opt;
  auto* cmd_ic = app.add_subcommand("identity-check", "binomial counting identity behind the multigraded comparison");
  cmd_ic->add_option("-n", ic_opt.n, "total degree")->capture_default_str();
  cmd_ic->add_option("--b", ic_opt.b, "block sizes, comma-separated")->capture_default_str();
  cmd_ic->callback([&] {
    CountIdentity r = count_identity_check(ic_opt.n, parse_int_list(ic_opt.b));
    Output out("identity-check");
    out.as_json = as_json;
    out.j["n"] = ic_opt.n;
    out.j["b"] = parse_int_list(ic_opt.b);
    out.j["lhs"] = r.lhs.get_str();
    out.j["rhs"] = r.rhs.get_str();
    out.j["holds"] = r.holds();
    out.text << "lhs = " << r.lhs.get_str() << ", rhs = " << r.rhs.get_str()
             << (r.holds() ? " (equal)" : " (NOT equal)") << "\n";
    out.flush();
    if (!r.holds()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const RingFileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (timings) std::cerr << "elapsed: " << timer.ms() << " ms\n";
  return rc;
}
