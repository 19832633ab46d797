// peel: build and query lattices of initial sections from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 resource cap.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "peeling/affine.hpp"
#include "peeling/flag.hpp"
#include "peeling/io.hpp"
#include "peeling/lattice.hpp"
#include "peeling/posets.hpp"
#include "peeling/quasisym.hpp"
#include "peeling/type_a.hpp"
#include "peeling/type_b.hpp"

using namespace peeling;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_cap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int n = 3;
  int r = 2;
  std::optional<int> depth;
  std::optional<std::size_t> max_rank;
  std::string file;
  bool covers = false;
  std::optional<std::size_t> random_size;
  std::uint64_t seed = 1;
  std::size_t cap = 5'000'000;
  bool json = false;
  bool dot = false;
  std::vector<std::string> perms;
  std::vector<std::string> elems;
  bool all = false;
  bool verify = false;
  std::optional<int> m;
  std::string method = "gamma";
  std::string columns;
};

const std::vector<std::string> family_names = {"type-a", "type-b", "affine-a", "flag",
                                               "downset", "upset", "raw"};

bool is_group_family(const std::string& kind) {
  return kind == "type-a" || kind == "type-b" || kind == "affine-a" || kind == "flag";
}

/// The valued digraph of a family plus what is needed to translate between
/// its vertex sets and group elements.
struct Family {
  std::string kind;
  int n = 0;
  int r = 0;
  std::optional<BoxDigraph> diagram;
  std::optional<FinitePoset> poset;
  ValuedDigraph plain;

  const ValuedDigraph& graph() const { return diagram ? diagram->graph() : plain; }
};

FinitePoset load_poset(const Options& o) {
  if (o.random_size)
    return random_poset(*o.random_size, 0.35, o.seed);
  if (o.file.empty())
    throw UsageError(o.family + " needs --file <poset> or --random <k>");
  return read_poset_file(o.file, o.covers);
}

Family make_family(Options& o) {
  Family f;
  f.kind = o.family;
  f.n = o.n;
  f.r = o.r;
  if (o.family == "type-a") {
    f.diagram = build_a(o.n);
  } else if (o.family == "type-b") {
    f.diagram = build_b(o.n);
  } else if (o.family == "affine-a") {
    if (!o.max_rank && o.perms.empty() && o.elems.empty())
      throw UsageError("affine-a is infinite; pass --max-rank");
    int depth = o.depth.value_or(2 * static_cast<int>(o.max_rank.value_or(0)) + 2);
    for (const auto& text : o.perms)
      depth = std::max(depth, sufficient_depth(inv_affine(parse_affine_permutation(text)), o.n));
    f.diagram = build_affine(o.n, depth);
  } else if (o.family == "flag") {
    f.diagram = build_flag(o.r, o.n);
  } else if (o.family == "downset" || o.family == "upset") {
    f.poset = load_poset(o);
    f.plain = o.family == "downset" ? build_downset(*f.poset) : build_upset(*f.poset);
  } else if (o.family == "raw") {
    if (o.file.empty())
      throw UsageError("raw needs --file <vdg>");
    f.plain = ValuedDigraph(read_vdg_file(o.file));
  } else {
    throw UsageError("unknown family " + o.family);
  }
  return f;
}

InitialSection from_perm(const Family& f, const std::string& text) {
  const BoxDigraph& d = *f.diagram;
  VertexSet s;
  if (f.kind == "type-a") {
    const Permutation p = parse_permutation(text);
    if (p.n() != f.n)
      throw UsageError("permutation size differs from --n");
    s = inversion_vertex_set(d, p);
  } else if (f.kind == "type-b") {
    const SignedPermutation w = parse_signed_permutation(text);
    if (w.n() != f.n)
      throw UsageError("signed permutation size differs from --n");
    s = d.to_set(inv_b_set(w));
  } else if (f.kind == "affine-a") {
    const AffinePermutation p = parse_affine_permutation(text);
    if (p.n() != f.n)
      throw UsageError("window size differs from --n");
    s = d.to_set(inv_affine(p));
  } else if (f.kind == "flag") {
    const ColoredPermutation p = parse_colored_permutation(text, f.r);
    if (p.n() != f.n)
      throw UsageError("colored permutation size differs from --n");
    s = psi_inverse(d, p);
  } else {
    throw UsageError("--perm needs a group family; use --elem with vertex labels");
  }
  return InitialSection::checked(d.graph(), s);
}

InitialSection from_labels(const Family& f, const std::string& text) {
  const ValuedDigraph& g = f.graph();
  VertexSet s = g.empty_set();
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (const auto v = g.find_label(tok)) {
      s.insert(*v);
      continue;
    }
    throw UsageError("no vertex labelled '" + tok + "'");
  }
  return InitialSection::checked(g, s);
}

std::vector<InitialSection> requested_elements(const Family& f, const Options& o) {
  std::vector<InitialSection> out;
  for (const auto& p : o.perms)
    out.push_back(from_perm(f, p));
  for (const auto& e : o.elems)
    out.push_back(from_labels(f, e));
  return out;
}

std::string describe(const Family& f, const InitialSection& a) {
  if (is_group_family(f.kind)) {
    const auto boxes = f.diagram->to_boxes(a.members());
    if (f.kind == "type-a")
      return format(permutation_from_inversions(f.n, boxes));
    if (f.kind == "type-b")
      return format(signed_perm_from_inversions(f.n, boxes));
    if (f.kind == "affine-a")
      return format(affine_perm_from_inversions(boxes, f.n));
    return format(psi(*f.diagram, f.r, a.members()));
  }
  return "{" + f.graph().format_set(a.members()) + "}";
}

std::string csv_field(const std::string& s) {
  return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
}

ISLattice make_lattice(const Family& f, const Options& o) {
  BuildOptions b;
  b.max_rank = o.max_rank;
  b.element_cap = o.cap;
  if (f.kind == "affine-a" && !b.max_rank)
    throw UsageError("affine-a is infinite; pass --max-rank");
  return build(f.graph(), b);
}

// --- subcommands ------------------------------------------------------------

int cmd_build(Options& o, bool force_dot) {
  const Family f = make_family(o);
  const ISLattice lat = make_lattice(f, o);
  if (force_dot || o.dot)
    std::cout << to_dot(lat);
  else
    std::cout << to_json(lat).dump(2) << '\n';
  return 0;
}

int cmd_moebius(Options& o) {
  const Family f = make_family(o);
  const auto& g = f.graph();
  std::vector<InitialSection> targets = requested_elements(f, o);
  if (o.all || targets.empty()) {
    const ISLattice lat = make_lattice(f, o);
    targets = lat.elements();
  }
  int status = 0;
  nlohmann::json rows = nlohmann::json::array();
  if (!o.json)
    std::cout << (o.verify ? "rank,element,mu,mu_oracle\n" : "rank,element,mu\n");
  for (const auto& a : targets) {
    const int mu = moebius(g, a);
    std::optional<int> oracle;
    if (o.verify) {
      oracle = moebius_oracle(g, a, o.cap);
      if (*oracle != mu)
        status = exit_mismatch;
    }
    const std::string name = describe(f, a);
    if (o.json) {
      nlohmann::json row{{"rank", a.size()}, {"element", name}, {"mu", mu}};
      if (oracle)
        row["mu_oracle"] = *oracle;
      rows.push_back(row);
    } else {
      std::cout << a.size() << ',' << csv_field(name) << ',' << mu;
      if (oracle)
        std::cout << ',' << *oracle;
      std::cout << '\n';
    }
  }
  if (o.json)
    std::cout << rows.dump(2) << '\n';
  if (status != 0)
    std::cerr << "peel: Moebius formula disagrees with the oracle\n";
  return status;
}

int cmd_meet_join(Options& o, bool is_meet) {
  const Family f = make_family(o);
  const auto targets = requested_elements(f, o);
  if (targets.size() < 2)
    throw UsageError("give at least two elements with --perm or --elem");
  InitialSection result = InitialSection::empty(f.graph());
  if (is_meet) {
    result = meet(f.graph(), targets);
  } else {
    const ISLattice lat = make_lattice(f, o);
    result = join(lat, targets);
  }
  const std::string name = describe(f, result);
  if (o.json)
    std::cout << nlohmann::json{{"element", name},
                                {"vertices", f.graph().format_set(result.members())},
                                {"rank", result.size()}}
                     .dump(2)
              << '\n';
  else
    std::cout << name << '\n';
  return 0;
}

int cmd_chains(Options& o) {
  const Family f = make_family(o);
  auto targets = requested_elements(f, o);
  if (targets.empty()) {
    if (f.kind == "affine-a")
      throw UsageError("affine-a has no top element; pass --perm");
    targets.push_back(InitialSection::full(f.graph()));
  }
  for (const auto& a : targets) {
    const BigInt count = maximal_chain_count(f.graph(), a, o.cap);
    if (o.json)
      std::cout << nlohmann::json{{"element", describe(f, a)}, {"chains", count.str()}}.dump()
                << '\n';
    else
      std::cout << describe(f, a) << ' ' << count << '\n';
  }
  return 0;
}

int cmd_symfun(Options& o) {
  if (o.method != "gamma" && o.method != "oracle" && o.method != "both")
    throw UsageError("--method must be gamma, oracle or both");
  if ((o.family == "type-a" || o.family == "affine-a") && o.perms.size() == 1)
    o.n = static_cast<int>(std::count(o.perms[0].begin(), o.perms[0].end(), ',')) + 1;
  const Family f = make_family(o);
  const auto targets = requested_elements(f, o);
  if (targets.size() != 1)
    throw UsageError("symfun takes exactly one element");
  const InitialSection& a = targets.front();
  const int m = o.m.value_or(std::max<int>(1, static_cast<int>(a.size())));
  if (m < 1)
    throw UsageError("--m must be positive");

  std::optional<TruncatedPolynomial> fast, reference;
  const bool want_fast = o.method != "oracle";
  const bool want_reference = o.method != "gamma";
  if (f.kind == "type-a") {
    if (want_fast)
      fast = gamma(f.graph(), a, columns_a(*f.diagram), m, o.cap);
    if (want_reference)
      reference = stanley(parse_permutation(o.perms.empty() ? describe(f, a) : o.perms[0]), m);
  } else if (f.kind == "affine-a") {
    if (want_fast)
      fast = gamma(f.graph(), a, columns_affine(*f.diagram), m, o.cap);
    if (want_reference)
      reference = affine_stanley(affine_perm_from_inversions(f.diagram->to_boxes(a.members()), f.n), m,
                                 o.cap);
  } else {
    if (o.columns.empty())
      throw UsageError(f.kind + " has no canonical column family; pass --columns <file>");
    const Columns u = read_columns_file(o.columns, f.graph());
    if (want_fast)
      fast = gamma(f.graph(), a, u, m, o.cap);
    if (want_reference)
      reference = gamma_oracle(f.graph(), a, u, m);
  }

  if (o.json) {
    nlohmann::json out{{"element", describe(f, a)}, {"m", m}};
    if (fast)
      out["gamma"] = fast->to_json();
    if (reference)
      out["oracle"] = reference->to_json();
    if (fast && reference)
      out["verdict"] = *fast == *reference ? "EQUAL" : "DIFFER";
    std::cout << out.dump(2) << '\n';
  } else if (fast && reference) {
    std::cout << "gamma:  " << *fast << '\n' << "oracle: " << *reference << '\n';
    std::cout << (*fast == *reference ? "EQUAL" : "DIFFER") << '\n';
  } else {
    std::cout << (fast ? *fast : *reference) << '\n';
  }
  return fast && reference && !(*fast == *reference) ? exit_mismatch : 0;
}

/// Lattice covers against the covers of an independently built reference.
template <typename Element, typename F>
std::string compare_covers(const ISLattice& lat, const CayleyBall<Element>& ball, F to_element) {
  std::map<Element, std::size_t> seen;
  std::vector<std::size_t> where(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto it = ball.index.find(to_element(lat.element(i)));
    if (it == ball.index.end())
      return "element " + std::to_string(i) + " has no group counterpart";
    where[i] = it->second;
  }
  if (lat.size() != ball.elements.size())
    return std::to_string(lat.size()) + " initial sections vs " +
           std::to_string(ball.elements.size()) + " group elements";
  std::set<std::pair<std::size_t, std::size_t>> mine;
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j : lat.up(i))
      mine.emplace(where[i], where[j]);
  const std::set<std::pair<std::size_t, std::size_t>> theirs(ball.covers.begin(), ball.covers.end());
  return mine == theirs ? "" : "cover relations differ";
}

int cmd_verify_iso(Options& o) {
  const Family f = make_family(o);
  const ISLattice lat = make_lattice(f, o);
  std::string problem;
  if (f.kind == "type-a") {
    problem = compare_covers(lat, weak_order_a(f.n), [&](const InitialSection& a) {
      const auto boxes = f.diagram->to_boxes(a.members());
      return permutation_from_inversions(f.n, boxes);
    });
  } else if (f.kind == "type-b") {
    problem = compare_covers(lat, weak_order_b(f.n), [&](const InitialSection& a) {
      const auto boxes = f.diagram->to_boxes(a.members());
      return signed_perm_from_inversions(f.n, boxes);
    });
  } else if (f.kind == "affine-a") {
    problem = compare_covers(lat, weak_order_affine(f.n, *o.max_rank), [&](const InitialSection& a) {
      const auto boxes = f.diagram->to_boxes(a.members());
      return affine_perm_from_inversions(boxes, f.n);
    });
  } else if (f.kind == "flag") {
    const auto group = all_colored_permutations(f.r, f.n);
    std::map<ColoredPermutation, std::size_t> where;
    for (std::size_t i = 0; i < lat.size(); ++i)
      where.emplace(psi(*f.diagram, f.r, lat.element(i).members()), i);
    std::set<std::pair<std::size_t, std::size_t>> mine, theirs;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j : lat.up(i))
        mine.emplace(i, j);
    for (const auto& p : group)
      for (const auto& gen : flag_generators(f.n))
        if (is_flag_cover(p, gen))
          theirs.emplace(where.at(p), where.at(apply(p, gen)));
    if (where.size() != group.size())
      problem = std::to_string(where.size()) + " distinct images vs " +
                std::to_string(group.size()) + " colored permutations";
    else if (mine != theirs)
      problem = "cover relations differ";
  } else if (f.kind == "downset" || f.kind == "upset") {
    std::set<VertexSet> expected;
    for (const auto& s : lower_sets(*f.poset))
      expected.insert(f.kind == "downset" ? s : f.graph().all_vertices() - s);
    std::set<VertexSet> mine;
    for (const auto& a : lat.elements())
      mine.insert(a.members());
    if (mine != expected)
      problem = "initial sections differ from the " +
                std::string(f.kind == "downset" ? "lower" : "upper") + " sets";
  } else {
    throw UsageError("raw digraphs have no reference order to compare with");
  }
  if (!problem.empty()) {
    std::cout << "MISMATCH " << problem << '\n';
    return exit_mismatch;
  }
  std::cout << "OK " << lat.size() << " elements, " << lat.num_covers() << " covers\n";
  return 0;
}

void add_family_options(CLI::App* sub, Options& o) {
  sub->add_option("family", o.family, "type-a, type-b, affine-a, flag, downset, upset or raw")
      ->required()
      ->check(CLI::IsMember(family_names));
  sub->add_option("--n", o.n, "size parameter")->check(CLI::Range(1, 64));
  sub->add_option("--r", o.r, "number of colors (flag)")->check(CLI::Range(2, 64));
  sub->add_option("--depth", o.depth, "window depth (affine-a)")->check(CLI::PositiveNumber);
  sub->add_option("--max-rank", o.max_rank, "stop building after this rank");
  sub->add_option("--file", o.file, "poset file (downset/upset) or .vdg file (raw)");
  sub->add_flag("--covers", o.covers, "poset file lists covers only");
  sub->add_option("--random", o.random_size, "random poset with this many elements");
  sub->add_option("--perm", o.perms, "group element (repeatable)");
  sub->add_option("--elem", o.elems, "initial section as space-separated vertex labels (repeatable)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of initial sections of valued digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--cap", o.cap, "element cap for enumerations");
  app.add_option("--seed", o.seed, "seed for --random posets");

  auto* build_cmd = app.add_subcommand("build", "lattice as JSON (or DOT with --dot)");
  add_family_options(build_cmd, o);
  build_cmd->add_flag("--dot", o.dot, "Graphviz output");
  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
  add_family_options(dot_cmd, o);
  auto* moebius_cmd = app.add_subcommand("moebius", "mu(empty, A) for chosen or all elements");
  add_family_options(moebius_cmd, o);
  moebius_cmd->add_flag("--all", o.all, "every element of the lattice");
  moebius_cmd->add_flag("--verify", o.verify, "compare with the recursive definition");
  auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound");
  add_family_options(meet_cmd, o);
  auto* join_cmd = app.add_subcommand("join", "least upper bound");
  add_family_options(join_cmd, o);
  auto* chains_cmd = app.add_subcommand("chains", "number of maximal chains below an element");
  add_family_options(chains_cmd, o);
  auto* symfun_cmd = app.add_subcommand("symfun", "quasi-symmetric series of an element");
  add_family_options(symfun_cmd, o);
  symfun_cmd->add_option("--m", o.m, "number of variables");
  symfun_cmd->add_option("--method", o.method, "gamma, oracle or both");
  symfun_cmd->add_option("--columns", o.columns, "column family file");
  auto* iso_cmd = app.add_subcommand("verify-iso", "compare the lattice with its reference order");
  add_family_options(iso_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (build_cmd->parsed())
      return cmd_build(o, false);
    if (dot_cmd->parsed())
      return cmd_build(o, true);
    if (moebius_cmd->parsed())
      return cmd_moebius(o);
    if (meet_cmd->parsed())
      return cmd_meet_join(o, true);
    if (join_cmd->parsed())
      return cmd_meet_join(o, false);
    if (chains_cmd->parsed())
      return cmd_chains(o);
    if (symfun_cmd->parsed())
      return cmd_symfun(o);
    if (iso_cmd->parsed())
      return cmd_verify_iso(o);
  } catch (const CapExceeded& e) {
    std::cerr << "peel: " << e.what() << '\n';
    return exit_cap;
  } catch (const std::exception& e) {
    std::cerr << "peel: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
