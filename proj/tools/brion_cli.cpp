#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brion/brion.hpp"
#include "brion/parallel.hpp"
#include "brion/symfunc.hpp"
#include "brion/weak_order.hpp"

using namespace brion;
using nlohmann::json;

namespace {

struct Options {
  std::string space;
  int n = 0, p = -1, q = -1;
  std::string format = "tsv";
  int vars = 4;
  bool big = false;
  bool fail_fast = false;
  std::string theorem = "main";
  std::string z, w, flavor, stanley_type, schur, lambda, mu, level = "stanley", id;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SymSpace space_of(const Options& o) {
  if (o.space.empty()) throw UsageError("--space is required");
  Space t;
  try {
    t = parse_space_name(o.space);
  } catch (const std::exception&) {
    throw UsageError("unknown space " + o.space);
  }
  SymSpace sp;
  try {
    if (o.p >= 0 || o.q >= 0) {
      if (o.p < 0 || o.q < 0) throw UsageError("--p and --q go together");
      sp = make_space(t, o.p, o.q);
    } else {
      sp = make_space(t, o.n);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int cap = o.big ? 6 : 5;
  if (sp.n > cap) throw UsageError("rank " + std::to_string(sp.n) + " exceeds " + std::to_string(cap) + (o.big ? "" : "; pass --big"));
  return sp;
}

void need_format(const Options& o, std::initializer_list<const char*> ok) {
  for (auto f : ok)
    if (o.format == f) return;
  throw UsageError("format " + o.format + " is not available for this verb");
}

json poly_json(const IntPolynomial& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", c}});
  return {{"nvars", p.nvars()}, {"terms", terms}, {"text", p.str()}};
}

// ---------------------------------------------------------------- verbs

int cmd_clans(const Options& o) {
  need_format(o, {"tsv", "json"});
  auto sp = space_of(o);
  auto clans = enumerate_clans(sp, o.big);
  std::sort(clans.begin(), clans.end());
  if (o.format == "json") {
    json out = json::array();
    for (auto& g : clans)
      out.push_back({{"index", index_label(sp, g)}, {"psi", rs_map(sp, g).str()}, {"type", g.type()}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "index\tpsi\ttype\n";
  for (auto& g : clans) std::cout << index_label(sp, g) << "\t" << rs_map(sp, g).str() << "\t" << g.type() << "\n";
  return 0;
}

int cmd_graph(const Options& o) {
  auto sp = space_of(o);
  auto G = build_graph(sp, o.big);
  if (o.format == "dot") {
    std::cout << to_dot(G);
    return 0;
  }
  if (o.format == "json") {
    json vs = json::array(), es = json::array();
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      vs.push_back({{"id", v}, {"index", index_label(sp, G.vertices[v])}, {"psi", G.psi[v].str()}});
    for (auto& e : G.edges)
      es.push_back({{"src", e.src}, {"gen", gen_name(e.gen)}, {"dst", e.dst}, {"doubled", e.doubled}});
    json out = {{"space", sp.label()}, {"dense", G.dense}, {"vertices", vs}, {"edges", es}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "src\tgen\tdst\tdoubled\n";
  for (auto& e : G.edges)
    std::cout << index_label(sp, G.vertices[e.src]) << "\t" << gen_name(e.gen) << "\t"
              << index_label(sp, G.vertices[e.dst]) << "\t" << (e.doubled ? 1 : 0) << "\n";
  return 0;
}

int cmd_atoms(const Options& o) {
  need_format(o, {"tsv", "json"});
  auto sp = space_of(o);
  if (!o.z.empty()) {
    Elem z = parse_elem(o.z, sp.kind());
    if (!in_rs_image(sp, z)) throw UsageError(z.str() + " is not an orbit image of " + sp.label());
    auto atoms = extended_atoms(sp, z);
    if (o.format == "json") {
      json out = json::array();
      for (auto& w : atoms) out.push_back({{"atom", w.str()}, {"d", d_z(sp, z, w)}});
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "atom\td\n";
      for (auto& w : atoms) std::cout << w.str() << "\t" << d_z(sp, z, w) << "\n";
    }
    return 0;
  }
  auto G = build_graph(sp, o.big);
  auto At = atoms_bfs(G);
  std::vector<int> order(G.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return G.vertices[a] < G.vertices[b]; });
  if (o.format == "json") {
    json out = json::array();
    for (int v : order) {
      json as = json::array();
      for (auto& [w, d] : At.atoms[v]) as.push_back({{"atom", w.str()}, {"d", d}});
      out.push_back({{"index", index_label(sp, G.vertices[v])}, {"psi", G.psi[v].str()}, {"atoms", as}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "index\tpsi\tatom\td\n";
  for (int v : order)
    for (auto& [w, d] : At.atoms[v])
      std::cout << index_label(sp, G.vertices[v]) << "\t" << G.psi[v].str() << "\t" << w.str() << "\t" << d << "\n";
  return 0;
}

struct FiberReport {
  Elem z;
  json record;
  bool ok = true;
};

FiberReport verify_fiber(const SymSpace& sp, const OrbitGraph& G, const AtomMap& At, const std::vector<int>& fiber,
                         const Elem& z) {
  FiberReport r;
  r.z = z;
  auto D = decompose(sp, z);
  json ms = json::array(), cells = json::array();
  std::set<Elem> all;
  for (auto& [M, c] : D.cells) {
    ms.push_back(M.str());
    int lo = 1 << 20, hi = -(1 << 20);
    for (auto& w : c) {
      int rk = space_rank(sp, w.oneline());
      lo = std::min(lo, rk);
      hi = std::max(hi, rk);
      all.insert(w);
    }
    cells.push_back({{"matching", M.str()},
                     {"generator", generator_bot(sp, z, M).str()},
                     {"size", c.size()},
                     {"rank_span", c.empty() ? json::array() : json::array({lo, hi})}});
  }
  bool agree = true;
  std::set<Elem> from_bfs;
  for (int v : fiber) {
    auto C = atoms_closed(sp, G.vertices[v]);
    std::map<Elem, int> got;
    for (auto& [M, c] : C.cells)
      for (auto& w : c) got[w] = C.dz.at(w);
    agree = agree && got == At.atoms[v];
    for (auto& [w, d] : At.atoms[v]) from_bfs.insert(w);
  }
  agree = agree && from_bfs == all;
  auto ext = extended_atoms(sp, z);
  agree = agree && std::set<Elem>(ext.begin(), ext.end()) == all;
  r.ok = agree;
  r.record = {{"z", z.str()}, {"matchings", ms}, {"cells", cells}, {"bfs_agree", agree}};
  return r;
}

bool verify_main(const SymSpace& sp, const Options& o, json& out_spaces, std::ostream& tsv) {
  auto G = build_graph(sp, o.big);
  auto At = atoms_bfs(G);
  std::map<Elem, std::vector<int>> fibers;
  for (std::size_t v = 0; v < G.vertices.size(); ++v) fibers[G.psi[v]].push_back(static_cast<int>(v));
  std::vector<std::pair<Elem, std::vector<int>>> items(fibers.begin(), fibers.end());
  std::vector<FiberReport> reports(items.size());
  if (o.fail_fast) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      reports[i] = verify_fiber(sp, G, At, items[i].second, items[i].first);
      if (!reports[i].ok) {
        reports.resize(i + 1);
        break;
      }
    }
  } else {
    parallel_for(items.size(), [&](std::size_t i) { reports[i] = verify_fiber(sp, G, At, items[i].second, items[i].first); });
  }
  bool ok = At.d_consistent && At.reduced;
  json zs = json::array();
  for (auto& r : reports) {
    ok = ok && r.ok;
    zs.push_back(r.record);
    tsv << sp.label() << "\t" << r.z.str() << "\t" << r.record["matchings"].size() << "\t" << (r.ok ? "agree" : "DISAGREE")
        << "\n";
  }
  out_spaces.push_back({{"space", sp.label()}, {"ok", ok}, {"z", zs}});
  return ok;
}

int verify_w0(const Options& o) {
  const int top = o.n > 0 ? o.n : 4;
  bool ok = true;
  json out = json::array();
  if (o.format == "tsv") std::cout << "part\tn\tvars\tapplicable\tequal\tstatement\n";
  for (char part : {'a', 'b', 'c', 'd'})
    for (int n = 1; n <= (part == 'd' ? std::min(top, 3) : top); ++n) {
      auto r = theorem_w0(part, n, o.vars);
      if (r.applicable) ok = ok && r.equal;
      if (o.format == "json")
        out.push_back({{"part", std::string(1, part)}, {"n", n}, {"vars", o.vars}, {"applicable", r.applicable},
                       {"equal", r.equal}, {"statement", r.statement}, {"note", r.note}});
      else
        std::cout << part << "\t" << n << "\t" << o.vars << "\t" << r.applicable << "\t" << r.equal << "\t"
                  << r.statement << "\n";
      if (o.fail_fast && r.applicable && !r.equal) goto done;
    }
done:
  if (o.format == "json") std::cout << json{{"ok", ok}, {"checks", out}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  need_format(o, {"tsv", "json"});
  if (o.theorem == "w0") return verify_w0(o);
  if (o.theorem != "main") throw UsageError("--theorem must be main or w0");
  std::vector<SymSpace> spaces;
  if (o.space.empty()) {
    const int top = o.n > 0 ? o.n : 4;
    if (top > (o.big ? 6 : 4)) throw UsageError("verify-all ranks above 4 need --big");
    spaces = all_spaces(top);
  } else {
    spaces.push_back(space_of(o));
  }
  json out = json::array();
  std::ostringstream tsv;
  bool ok = true;
  for (auto& sp : spaces) {
    ok = verify_main(sp, o, out, tsv) && ok;
    if (!ok && o.fail_fast) break;
  }
  if (o.format == "json") {
    std::cout << json{{"ok", ok}, {"spaces", out}}.dump(2) << "\n";
  } else {
    std::cout << "space\tz\tmatchings\tstatus\n" << tsv.str();
  }
  return ok ? 0 : 1;
}

int cmd_classify(const Options& o) {
  need_format(o, {"tsv", "json"});
  auto sp = space_of(o);
  auto clans = enumerate_clans(sp, o.big);
  std::sort(clans.begin(), clans.end());
  json out = json::array();
  if (o.format == "tsv") std::cout << "index\tpsi\tmultiplicity_free\tuniform\talternating\n";
  for (auto& g : clans) {
    auto c = classify(sp, g);
    if (o.format == "json")
      out.push_back({{"index", index_label(sp, g)},
                     {"psi", rs_map(sp, g).str()},
                     {"multiplicity_free", c.multiplicity_free},
                     {"uniform", c.uniform},
                     {"alternating", c.alternating}});
    else
      std::cout << index_label(sp, g) << "\t" << rs_map(sp, g).str() << "\t" << c.multiplicity_free << "\t"
                << c.uniform << "\t" << c.alternating << "\n";
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

std::optional<StrictPartition> parse_partition(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return StrictPartition(parse_int_list(s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_symfunc(const Options& o) {
  need_format(o, {"tsv", "json"});
  IntPolynomial p;
  std::string what;
  try {
    if (!o.schur.empty()) {
      SchurKind k = o.schur == "Q" ? SchurKind::Q : o.schur == "P" ? SchurKind::P : SchurKind::S;
      if (o.schur != "Q" && o.schur != "P" && o.schur != "S") throw UsageError("--schur must be Q, P or S");
      auto lam = parse_partition(o.lambda);
      if (!lam) throw UsageError("--schur needs --lambda");
      p = schur_qps(k, *lam, parse_partition(o.mu), o.vars);
      what = o.schur + lam->str();
    } else if (!o.stanley_type.empty()) {
      static const std::map<std::string, std::pair<StanleyType, Kind>> types = {
          {"A", {StanleyType::A, Kind::A}},
          {"B", {StanleyType::B, Kind::BC}},
          {"C", {StanleyType::C, Kind::BC}},
          {"D", {StanleyType::D, Kind::D}}};
      auto it = types.find(o.stanley_type);
      if (it == types.end()) throw UsageError("--stanley must be A, B, C or D");
      if (o.w.empty()) throw UsageError("--stanley needs --w");
      Elem w = parse_elem(o.w, it->second.second);
      if (o.schur.empty() && o.level == "schubert") {
        if (it->second.first != StanleyType::A) throw UsageError("Schubert polynomials are type A only");
        p = schubert_A(w);
        what = "Schubert " + w.str();
      } else {
        p = stanley(it->second.first, w, o.vars);
        what = std::string("F") + stanley_name(it->second.first) + " " + w.str();
      }
    } else if (!o.flavor.empty()) {
      Flavor f = parse_flavor(o.flavor);
      if (o.z.empty()) throw UsageError("--flavor needs --z");
      Kind k = o.flavor[0] == 'A' ? Kind::A : o.flavor[0] == 'D' ? Kind::D : Kind::BC;
      Elem z = parse_elem(o.z, k);
      Level lv = o.level == "schubert" ? Level::Schubert : Level::Stanley;
      p = inv_schubert_stanley(f, z, o.vars, lv);
      what = o.flavor + " " + z.str();
    } else {
      throw UsageError("symfunc needs one of --schur, --stanley, --flavor");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    json out = poly_json(p);
    out["function"] = what;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << what << "\t" << p.str() << "\n";
  }
  return 0;
}

int cmd_conjectures(const Options& o) {
  need_format(o, {"tsv", "json"});
  std::vector<std::string> ids = conjecture_ids();
  if (!o.id.empty()) {
    if (std::find(ids.begin(), ids.end(), o.id) == ids.end()) throw UsageError("unknown conjecture " + o.id);
    ids = {o.id};
  }
  const int top = o.n > 0 ? o.n : 3;
  if (top > 6) throw UsageError("--n above 6 is not supported");
  json out = json::array();
  if (o.format == "tsv") std::cout << "id\tn\tvars\tapplicable\tequal\tcompanion\tstatement\tnote\n";
  for (auto& id : ids)
    for (int n = 1; n <= top; ++n) {
      auto r = conjecture_report(id, n, o.vars);
      std::string comp = r.companion ? (*r.companion ? "1" : "0") : "-";
      if (o.format == "json") {
        json rec = {{"id", id},           {"n", n},         {"vars", o.vars}, {"applicable", r.applicable},
                    {"equal", r.equal},   {"statement", r.statement}, {"note", r.note}};
        if (r.companion) rec["companion"] = *r.companion;
        if (r.applicable) {
          rec["lhs"] = r.lhs.str();
          rec["rhs"] = r.rhs.str();
        }
        out.push_back(rec);
      } else {
        std::cout << id << "\t" << n << "\t" << o.vars << "\t" << r.applicable << "\t" << r.equal << "\t" << comp << "\t"
                  << r.statement << "\t" << r.note << "\n";
      }
    }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clans, orbit graphs, Brion atoms and involution Stanley functions"};
  app.require_subcommand(1);
  Options o;
  auto add_space = [&](CLI::App* c) {
    c->add_option("--space", o.space, "AI AII AIII BI CI CII DI DII DIII DIV");
    c->add_option("--n", o.n, "rank");
    c->add_option("--p", o.p);
    c->add_option("--q", o.q);
    c->add_flag("--big", o.big, "allow rank 6");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json", "dot"}));
  };

  auto clans = app.add_subcommand("clans", "enumerate the orbit index set");
  add_space(clans);
  add_format(clans);
  auto graph = app.add_subcommand("graph", "weak order graph");
  add_space(graph);
  add_format(graph);
  auto atoms = app.add_subcommand("atoms", "atoms per orbit, or extended atoms of --z");
  add_space(atoms);
  add_format(atoms);
  atoms->add_option("--z", o.z, "twisted involution, one-line");
  auto verify = app.add_subcommand("verify", "compare closed forms with the graph");
  add_space(verify);
  add_format(verify);
  verify->add_option("--theorem", o.theorem)->check(CLI::IsMember({"main", "w0"}));
  verify->add_option("--vars", o.vars);
  verify->add_flag("--fail-fast", o.fail_fast);
  auto classify_cmd = app.add_subcommand("classify", "multiplicity-free, uniform and alternating orbits");
  add_space(classify_cmd);
  add_format(classify_cmd);
  auto sym = app.add_subcommand("symfunc", "Schur, Stanley, Schubert and involution functions");
  add_format(sym);
  sym->add_option("--vars", o.vars);
  sym->add_option("--schur", o.schur, "Q, P or S");
  sym->add_option("--lambda", o.lambda, "strict partition, e.g. 3,1");
  sym->add_option("--mu", o.mu, "inner shape for Q");
  sym->add_option("--stanley", o.stanley_type, "A, B, C or D");
  sym->add_option("--w", o.w, "group element");
  sym->add_option("--flavor", o.flavor, "AI ... DIII");
  sym->add_option("--z", o.z, "twisted involution");
  sym->add_option("--level", o.level)->check(CLI::IsMember({"schubert", "stanley"}));
  auto conj = app.add_subcommand("conjectures", "conjecture reports for n = 1..N");
  add_format(conj);
  conj->add_option("--id", o.id);
  conj->add_option("--n", o.n);
  conj->add_option("--vars", o.vars);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (o.vars < 0 || o.vars > kMaxVars) {
    std::cerr << "error: --vars must lie in [0," << kMaxVars << "]\n" << app.help();
    return 2;
  }
  if (o.format == "dot" && !graph->parsed()) {
    std::cerr << "error: dot output is for graph only\n";
    return 2;
  }
  try {
    if (clans->parsed()) return cmd_clans(o);
    if (graph->parsed()) return cmd_graph(o);
    if (atoms->parsed()) return cmd_atoms(o);
    if (verify->parsed()) return cmd_verify(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (sym->parsed()) return cmd_symfunc(o);
    if (conj->parsed()) return cmd_conjectures(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
