#include "singext/abgrp/group.hpp"
#include "singext/abgrp/smith.hpp"
#include "singext/catops/karoubi.hpp"
#include "singext/errors.hpp"
#include "singext/obstruct/k0.hpp"
#include "singext/obstruct/massey.hpp"
#include "singext/obstruct/verify.hpp"
#include "singext/parallel.hpp"
#include "singext/prescat/functor.hpp"
#include "singext/prescat/presented_category.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace singext;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFail = 1, kInput = 2, kBudget = 3;

struct Options {
  std::size_t rank_bound = 2;
  std::size_t lmax = 8;
  bool paranoid = false;
  std::string format = "text";
  std::string budget = "100000000";
  std::string output;
  std::size_t threads = 0;
  std::string control = "none";
};

/// Report under construction: text lines and a JSON mirror.
struct Report {
  std::string verb;
  std::vector<std::string> lines;
  json data = json::object();
  bool pass = true;

  void line(const std::string& s) { lines.push_back(s); }
};

abgrp::Int parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
    throw InvalidInput("not an integer: " + s);
  return abgrp::Int(s);
}

abgrp::IntMatrix parse_int_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw InvalidInput("matrix must be written as bracketed integer rows: " + text);
  }
  if (!j.is_array())
    throw InvalidInput("matrix must be a list of rows");
  std::vector<abgrp::IntVec> rows;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array())
      throw InvalidInput("matrix row is not a list");
    if (r == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw InvalidInput("ragged matrix");
    abgrp::IntVec v;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw InvalidInput("matrix entry is not an integer");
      v.push_back(abgrp::Int(e.get<long long>()));
    }
    rows.push_back(std::move(v));
  }
  return abgrp::IntMatrix::from_rows(rows, cols);
}

std::string ints(const std::vector<abgrp::Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + v[i].str();
  return s;
}

/// builtin:NAME or a path to a presentation document.
prescat::QuiverPresentation load_presentation(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0)
    return prescat::builtin(spec.substr(prefix.size()));
  std::ifstream in(spec);
  if (!in)
    throw InvalidInput("cannot read presentation file: " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return prescat::parse_presentation(ss.str());
}

/// Arrow objects of F(Z/4): a Z/4 matrix, or one of d, c, i, t.
Obj load_arrow(const std::string& s) {
  if (s == "d" || s == "c" || s == "i" || s == "t")
    return muro::muro_object(s);
  return muro::arrow_obj(muro::Z4Mat::parse(s));
}

void run_snf(const std::string& m, Report& rep) {
  const auto M = parse_int_matrix(m);
  const auto S = abgrp::smith_normal_form(M);
  const bool ok = S.U * M * S.V == S.D;
  rep.line("D = " + S.D.to_string());
  rep.line("U = " + S.U.to_string());
  rep.line("V = " + S.V.to_string());
  rep.line("invariant factors: " + ints(S.diagonal()));
  rep.line(std::string("U M V = D: ") + (ok ? "yes" : "no"));
  rep.data["D"] = S.D.to_string();
  rep.data["U"] = S.U.to_string();
  rep.data["V"] = S.V.to_string();
  rep.data["invariant_factors"] = ints(S.diagonal());
  rep.data["identity_holds"] = ok;
  rep.pass = ok;
}

void run_group(const std::string& m, Report& rep) {
  const auto R = parse_int_matrix(m);
  const auto G = abgrp::group_from_presentation(R).group;
  rep.line("group = " + G.describe());
  rep.data["group"] = G.describe();
  if (G.finite()) {
    rep.line("order = " + G.order().str());
    rep.data["order"] = G.order().str();
  }
}

void run_homtable(const std::string& spec, const Options& o, Report& rep) {
  const auto P = load_presentation(spec);
  const auto C = prescat::compute_category(P, o.lmax);
  rep.line("category " + C.name() + ", stabilized at L = " + std::to_string(C.truncation_used()));
  rep.data["category"] = C.name();
  rep.data["truncation"] = C.truncation_used();
  json table = json::array();
  for (const auto& x : P.objects)
    for (const auto& y : P.objects) {
      const std::string g = C.hom(C.object(x), C.object(y)).describe();
      rep.line("Hom(" + x + "," + y + ") = " + g);
      table.push_back({{"source", x}, {"target", y}, {"group", g}});
    }
  rep.data["hom"] = std::move(table);
}

void run_cone(const std::string& m, const Options& o, Report& rep) {
  const auto f = muro::Z4Mat::parse(m);
  const auto T = muro::cone(f);
  const bool acyclic = muro::is_acyclic(T, o.rank_bound);
  rep.line("f = " + T.f.to_string() + " : Z/4^" + std::to_string(T.a()) + " -> Z/4^" + std::to_string(T.b()));
  rep.line("cone = Z/4^" + std::to_string(T.c()));
  rep.line("u = " + T.u.to_string());
  rep.line("v = " + T.v.to_string());
  rep.line(std::string("acyclic on rank <= ") + std::to_string(o.rank_bound) + " test objects: " +
           (acyclic ? "yes" : "no"));
  rep.data["f"] = T.f.to_string();
  rep.data["cone_rank"] = T.c();
  rep.data["u"] = T.u.to_string();
  rep.data["v"] = T.v.to_string();
  rep.data["acyclic"] = acyclic;
  rep.pass = acyclic;
}

void run_bifunctor(const std::string& verb, const std::string& a, const std::string& b, Report& rep) {
  const obstruct::MuroSetup S;
  const Obj f = load_arrow(a), g = load_arrow(b);
  const std::string up = S.Y.value(f, g).describe(), th = S.Th.value(f, g).describe();
  const auto t = S.theta.component(f, g);
  if (verb == "upsilon") {
    rep.line("Upsilon(f,g) = " + up);
    rep.data["upsilon"] = up;
  } else {
    rep.line("Theta(f,g) = " + th);
    rep.line("Upsilon(f,g) = " + up);
    rep.line("theta(f,g) = " + t.matrix.to_string());
    rep.data["theta_group"] = th;
    rep.data["upsilon"] = up;
    rep.data["theta"] = t.matrix.to_string();
  }
  const bool iso = abgrp::is_isomorphism(t);
  rep.line(std::string("theta(f,g) is an isomorphism: ") + (iso ? "yes" : "no"));
  rep.data["theta_iso"] = iso;
}

void run_massey(const std::vector<std::string>& args, Report& rep) {
  std::vector<std::string> m = args;
  if (m.empty())
    m = {"[[2]]", "[[2]]", "[[2]]"};
  if (m.size() != 3)
    throw InvalidInput("massey takes three matrices h g f (or none for {2,2,2})");
  const obstruct::MuroSetup S;
  const auto h = muro::Z4Mat::parse(m[0]), g = muro::Z4Mat::parse(m[1]), f = muro::Z4Mat::parse(m[2]);
  const auto r = obstruct::massey(S.extension, S.theta, f, g, h);
  rep.data["readable"] = r.readable;
  if (!r.readable) {
    rep.line("Massey product not readable: the Toda read-out is not an isomorphism here");
    rep.pass = false;
    return;
  }
  std::string coset;
  json jc = json::array();
  for (const auto& c : r.coset) {
    coset += (coset.empty() ? "" : " ") + abgrp::to_string(c);
    jc.push_back(abgrp::to_string(c));
  }
  const Obj x1 = muro::Z4Free::object(f.cols());
  const bool has_id = f.cols() == h.rows() && r.contains(S.F.identity(x1));
  rep.line("ambient = " + r.ambient.describe());
  rep.line("{h,g,f} = " + coset);
  rep.line("lift pairs = " + std::to_string(r.lift_pairs) + (r.exhaustive ? " (exhaustive)" : " (generators)"));
  rep.line(std::string("independent of lifts: ") + (r.independent ? "yes" : "no"));
  rep.line(std::string("contains id: ") + (has_id ? "yes" : "no"));
  rep.data["ambient"] = r.ambient.describe();
  rep.data["coset"] = std::move(jc);
  rep.data["lift_pairs"] = r.lift_pairs;
  rep.data["exhaustive"] = r.exhaustive;
  rep.data["independent"] = r.independent;
  rep.data["contains_identity"] = has_id;
  rep.pass = r.independent;
}

void run_k0(const Options& o, Report& rep) {
  const muro::Triangles0 T;
  const auto r = obstruct::k0_muro(T, o.rank_bound, 64, 1, 256, 10'000'000, o.paranoid);
  rep.line("rank bound = " + std::to_string(r.rank_bound));
  rep.line("K0 = " + r.group.describe());
  rep.line("excising morphisms found = " + std::to_string(r.excising_found) + " of " +
           std::to_string(r.morphisms_tested) + " tested");
  for (const auto& rel : r.relations)
    rep.line("  " + rel);
  rep.data["rank_bound"] = r.rank_bound;
  rep.data["K0"] = r.group.describe();
  rep.data["generators"] = r.generators;
  rep.data["relations"] = r.relations;
  rep.data["excising_found"] = r.excising_found;
}

void run_karoubi(const Options& o, Report& rep) {
  const obstruct::MuroSetup S;
  const auto ext = obstruct::karoubized_extension(S, o.rank_bound);
  for (const auto& l : ext.lines)
    rep.line(l);
  const catops::KaroubiEnvelope K(S.F);
  const auto win = K.window(o.rank_bound);
  const auto base = S.F.window(o.rank_bound);
  std::size_t split = 0;
  for (const auto& x : win)
    split += catops::karoubi_iso_to_image(K, x, base).has_value();
  rep.line("idempotents of F(Z/4) split: " + std::to_string(split) + " of " + std::to_string(win.size()));
  rep.data["extension_checks"] = ext.checks;
  rep.data["extension_ok"] = ext.ok();
  rep.data["split_idempotents"] = split;
  rep.data["window"] = win.size();
  rep.pass = ext.ok() && split == win.size();
}

void run_section_search(const std::string& src, const std::string& dst, const Options& o, Report& rep) {
  const auto P = load_presentation(src), Q = load_presentation(dst);
  const auto A = prescat::compute_category(P, o.lmax), B = prescat::compute_category(Q, o.lmax);
  const auto r = prescat::section_search(prescat::quotient_functor(P, B), A, B, parse_int(o.budget));
  rep.line(std::string("section: ") + (r.found ? "FOUND" : "NONE"));
  rep.line("search space = " + r.space_size.str() + ", candidates checked = " + r.candidates_checked.str());
  std::string cs;
  for (const auto& c : r.coset_sizes)
    cs += (cs.empty() ? "" : " ") + c;
  rep.line("coset sizes: " + cs);
  rep.data["found"] = r.found;
  rep.data["space_size"] = r.space_size.str();
  rep.data["candidates_checked"] = r.candidates_checked.str();
  rep.data["coset_sizes"] = r.coset_sizes;
}

int emit(const Report& rep, const Options& o) {
  std::string out;
  if (o.format == "machine") {
    json doc;
    doc["verb"] = rep.verb;
    doc["verdict"] = rep.pass ? "PASS" : "FAIL";
    doc["result"] = rep.data;
    out = doc.dump(2) + "\n";
  } else {
    for (const auto& l : rep.lines)
      out += l + "\n";
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f)
      throw InvalidInput("cannot write " + o.output);
    f << out;
  } else {
    std::cout << out;
  }
  return rep.pass ? kOk : kFail;
}

int run_verify(const Options& o) {
  obstruct::VerifyOptions v;
  v.lmax = o.lmax;
  v.budget = parse_int(o.budget);
  if (o.control == "drop-r2-relation")
    v.control = obstruct::MuroControl::DropR2Relation;
  else if (o.control == "identity-theta")
    v.control = obstruct::MuroControl::IdentityTheta;
  else if (o.control != "none")
    throw InvalidInput("unknown control: " + o.control);
  const auto r = obstruct::verify_muro(v);
  const std::string out = o.format == "machine" ? r.machine() : r.text();
  if (o.format == "machine" && !o.output.empty()) {
    std::ofstream f(o.output);
    if (!f)
      throw InvalidInput("cannot write " + o.output);
    f << out;
    std::cout << "verify-muro: " << (r.pass() ? "PASS" : "FAIL") << ", report written to " << o.output << "\n";
  } else {
    std::cout << out;
  }
  return r.pass() ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"singext: exact computations for singular extensions of F(Z/4)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--rank-bound", o.rank_bound, "Rank bound of object windows")->capture_default_str();
  app.add_option("--lmax", o.lmax, "Maximal path-length truncation")->capture_default_str();
  app.add_flag("--paranoid", o.paranoid, "Quantified excision test instead of the c-isomorphism criterion");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  app.add_option("--budget", o.budget, "Search budget")->capture_default_str();
  app.add_option("--output,-o", o.output, "Write the report to a file");
  app.add_option("--threads", o.threads, "Worker threads (default: SINGEXT_THREADS or 1)");

  app.fallthrough();
  // Separate string positionals keep CLI11 from splitting bracketed matrices.
  std::array<std::string, 3> slot;
  const auto sub = [&](const std::string& name, const std::string& help, std::size_t min, std::size_t max) {
    auto* s = app.add_subcommand(name, help);
    for (std::size_t k = 0; k < max; ++k) {
      auto* opt = s->add_option("arg" + std::to_string(k + 1), slot[k]);
      if (k < min)
        opt->required();
    }
    return s;
  };
  sub("snf", "Smith normal form of an integer matrix", 1, 1);
  sub("group", "Abelian group presented by relation rows", 1, 1);
  sub("homtable", "Hom groups of a presented category", 1, 1);
  sub("cone", "Chosen triangle of a Z/4 matrix", 1, 1);
  sub("theta", "Theta(f,g), Upsilon(f,g) and theta(f,g)", 2, 2);
  sub("upsilon", "Toda bifunctor Upsilon(f,g)", 2, 2);
  sub("massey", "Massey product {h,g,f} in F(Z/4)", 0, 3);
  sub("k0", "K0 of F(Z/4) on a rank window", 0, 0);
  sub("karoubi", "Karoubized Triangles0 extension and idempotent splitting", 0, 0);
  auto* vm = sub("verify-muro", "Full verification that Triangles0 is not a pushforward along theta", 0, 0);
  vm->add_option("--control", o.control, "Control experiment")
      ->check(CLI::IsMember({"none", "drop-r2-relation", "identity-theta"}));
  sub("section-search", "Sections of the quotient functor SRC -> DST", 2, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  if (o.threads > 0)
    set_thread_count(o.threads);

  const std::string verb = app.get_subcommands().front()->get_name();
  std::vector<std::string> args;
  for (const auto& a : slot)
    if (!a.empty())
      args.push_back(a);
  try {
    if (verb == "verify-muro")
      return run_verify(o);
    Report rep;
    rep.verb = verb;
    if (verb == "snf")
      run_snf(args[0], rep);
    else if (verb == "group")
      run_group(args[0], rep);
    else if (verb == "homtable")
      run_homtable(args[0], o, rep);
    else if (verb == "cone")
      run_cone(args[0], o, rep);
    else if (verb == "theta" || verb == "upsilon")
      run_bifunctor(verb, args[0], args[1], rep);
    else if (verb == "massey")
      run_massey(args, rep);
    else if (verb == "k0")
      run_k0(o, rep);
    else if (verb == "karoubi")
      run_karoubi(o, rep);
    else
      run_section_search(args[0], args[1], o, rep);
    return emit(rep, o);
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const NoStabilization& e) {
    std::cerr << "no stabilization within --lmax: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
