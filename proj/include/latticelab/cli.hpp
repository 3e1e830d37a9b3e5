#ifndef LATTICELAB_CLI_HPP
#define LATTICELAB_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "comaximal.hpp"
#include "constructors.hpp"
#include "enforcing.hpp"
#include "lattice.hpp"
#include "properties.hpp"

#ifndef LATTICELAB_BUNDLED_CATALOG
#define LATTICELAB_BUNDLED_CATALOG "data/paper_groups.cat"
#endif

namespace latticelab::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultMaxOrder = 360;

/// One instantiated entry of the small-Sub classification table.
struct Table1Item
{
  std::size_t sub;
  std::string family;
  std::string expr;
  /// The table lists this group under a count it does not have.
  bool flagged = false;
};

/// Rows for Sub = 1..11 at p = 2, q = 3, r = 5 (p odd where a family needs it).
inline std::vector<Table1Item> table1_items()
{
  return {
    {1, "Trivial group", "C1"},
    {2, "Z_p", "C2"},
    {3, "Z_{p^2}", "C4"},
    {4, "Z_{p^3}", "C8"},
    {4, "Z_{pq}", "C6"},
    {5, "Z_{p^4}", "C16"},
    {5, "Z_2 x Z_2", "C2 x C2"},
    {6, "Z_{p^5}", "C32"},
    {6, "Z_{p^2q}", "C12"},
    {6, "Z_2 x Z_2", "C2 x C2", true},
    {6, "S_3", "S3"},
    {6, "Q_8", "Dic8"},
    {7, "Z_{p^6}", "C64"},
    {8, "Z_{p^7}", "C128"},
    {8, "Z_{p^3q}", "C24"},
    {8, "Z_{pqr}", "C30"},
    {8, "Z_4 x Z_2", "C4 x C2"},
    {8, "Z_5 x Z_5", "C5 x C5"},
    {8, "Dic_12", "Dic12"},
    {8, "D_5", "D5"},
    {9, "Z_{p^8}", "C256"},
    {9, "Z_{p^2q^2}", "C36"},
    {10, "Z_{p^9}", "C512"},
    {10, "Z_{p^4q}", "C48"},
    {10, "Z_2 x Z_2 x Z_p", "C2 x C2 x C3"},
    {10, "Z_7 x Z_7", "C7 x C7"},
    {10, "Z_9 x Z_3", "C9 x C3"},
    {10, "Z_7 : Z_3", "sd(C7, C3, a->a^2)"},
    {10, "Z_3 : Z_8", "sd(C3, C8, a->a^-1)"},
    {10, "D_4", "D4"},
    {10, "D_7", "D7"},
    {10, "Dic_20", "Dic20"},
    {10, "A_4", "A4"},
    {11, "Z_{p^10}", "C1024"},
    {11, "Z_8 x Z_2", "C8 x C2"},
    {11, "Q_16", "Dic16"},
    {11, "M_16", "M16"},
  };
}

struct Table1Result
{
  Table1Item item;
  std::size_t computed = 0;
  bool pass = false;
};

inline std::vector<Table1Result> compute_table1(std::size_t cap = kDefaultCap)
{
  std::vector<Table1Result> out;
  std::vector<CatalogEntry> none;
  for (auto const &item : table1_items()) {
    Table1Result r{item, sub_count(resolve(item.expr, none, cap), cap), false};
    r.pass = item.flagged || r.computed == item.sub;
    out.push_back(r);
  }
  return out;
}

namespace detail {

inline std::string yes_no(bool b)
{
  return b ? "yes" : "no";
}

inline std::size_t max_order_setting(std::optional<std::size_t> flag)
{
  if (flag)
    return *flag;
  if (char const *env = std::getenv("LATTICELAB_MAX_ORDER")) {
    std::size_t value = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0)
      throw InvalidArgument("LATTICELAB_MAX_ORDER must be a positive integer, got '" +
                            std::string(s) + "'");
    return value;
  }
  return kDefaultMaxOrder;
}

inline std::string subgroup_generators(FiniteGroup const &G, Subgroup const &H)
{
  if (H.generators.empty())
    return "()";
  std::string out;
  for (std::size_t i = 0; i < H.generators.size(); ++i)
    out += (i ? " ; " : "") + to_cycles(G.element(H.generators[i]));
  return out;
}

inline Json subgroup_json(FiniteGroup const &G, SubgroupLattice const &L, std::size_t i)
{
  Json gens = Json::array();
  for (ElementIndex g : L[i].generators)
    gens.push_back(to_cycles(G.element(g)));
  return Json{{"index", i}, {"order", L[i].order}, {"normal", L.is_normal(i)}, {"generators", gens}};
}

inline void write_to(std::string const &path, std::string const &text, std::ostream &out)
{
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error("cannot write " + path);
  f << text;
}

} // namespace detail

/// Runs one command line; returns 0 on success, 1 on errors, 2 on a chart conflict.
inline int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Subgroup lattices, solvability predicates and enforcing numbers of small groups.\n"
               "Group expressions: C n | D n (order 2n) | Dic n (order n) | S n | A n | SL(2,p) |\n"
               "M16 | gid(order,id) | G x H | sd(N, H, a->a^k; ...) | ( expr )",
               "latticelab"};
  app.require_subcommand(1);

  bool json = false;
  std::size_t cap = kDefaultCap;
  std::string catalog_path = LATTICELAB_BUNDLED_CATALOG;
  app.add_flag("--json", json, "One JSON record per line");
  app.add_option("--cap", cap, "Largest group order to materialize")->check(CLI::PositiveNumber);
  app.add_option("--catalog", catalog_path, "Catalog file for gid() and scans");

  std::string expr;
  auto *sub_cmd = app.add_subcommand("subcount", "Print Sub(G)");
  sub_cmd->add_option("expr", expr, "Group expression")->required();

  auto *props_cmd = app.add_subcommand("props", "Solvability hierarchy and related predicates");
  props_cmd->add_option("expr", expr, "Group expression")->required();

  bool orders_only = false;
  auto *lattice_cmd = app.add_subcommand("lattice", "List every subgroup");
  lattice_cmd->add_option("expr", expr, "Group expression")->required();
  lattice_cmd->add_flag("--orders-only", orders_only, "Only count subgroups per order");

  std::size_t prime = 0;
  auto *sylow_cmd = app.add_subcommand("sylow", "Sylow p-subgroups");
  sylow_cmd->add_option("expr", expr, "Group expression")->required();
  sylow_cmd->add_option("-p", prime, "Prime")->required();

  std::vector<std::size_t> primes;
  auto *hall_cmd = app.add_subcommand("hall", "Hall subgroups for a set of primes");
  hall_cmd->add_option("expr", expr, "Group expression")->required();
  hall_cmd->add_option("--primes", primes, "Comma-separated primes")->required()->delimiter(',');

  std::string dot_path, csv_path;
  bool alpha = false;
  std::size_t alpha_cap = 30;
  auto *comax_cmd = app.add_subcommand("comaximal", "Comaximal subgroup graph");
  comax_cmd->add_option("expr", expr, "Group expression")->required();
  comax_cmd->add_option("--dot", dot_path, "Write DOT to a file ('-' for stdout)");
  comax_cmd->add_option("--csv", csv_path, "Write the 0-based edge list to a file ('-' for stdout)");
  comax_cmd->add_flag("--alpha", alpha, "Exact independence number");
  comax_cmd->add_option("--alpha-cap", alpha_cap, "Vertex limit for --alpha");

  std::optional<std::size_t> max_order, for_n;
  unsigned jobs = 1;
  auto *scan_cmd = app.add_subcommand("scan", "Enforcing records over a catalog");
  scan_cmd->add_option("--max-order", max_order, "Largest order scanned");
  scan_cmd->add_option("--for-n", for_n, "Only report this subgroup count");
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *table1_cmd = app.add_subcommand("table1", "Check the Sub(G) <= 11 classification table");

  auto *figure1_cmd = app.add_subcommand("figure1", "Compare a catalog scan with the enforcing chart");
  figure1_cmd->add_option("--max-order", max_order, "Largest order scanned");
  figure1_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *verify_cmd = app.add_subcommand("verify-23", "Check the groups with exactly 23 subgroups");
  verify_cmd->add_option("--max-order", max_order, "Largest order scanned for other matches");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::size_t k = 2;
  std::optional<std::size_t> prop_prime;
  auto *prop_cmd = app.add_subcommand("propagate", "Check Sub(W x C_{p^(k-1)}) = k Sub(W)");
  prop_cmd->add_option("expr", expr, "Group expression for W")->required();
  prop_cmd->add_option("-k", k, "Multiplier")->check(CLI::PositiveNumber);
  prop_cmd->add_option("-p", prop_prime, "Prime not dividing |W|");

  for (auto *cmd : app.get_subcommands({}))
    cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::optional<std::vector<CatalogEntry>> catalog_cache;
    auto catalog = [&]() -> std::vector<CatalogEntry> const & {
      if (!catalog_cache)
        catalog_cache = load_catalog(catalog_path, LoadOptions{false, false, cap});
      return *catalog_cache;
    };
    auto group = [&]() {
      auto e = parse_expr(expr);
      static std::vector<CatalogEntry> const none;
      bool needs_catalog = expr.find("gid(") != std::string::npos;
      return resolve(e, needs_catalog ? catalog() : none, cap);
    };

    if (sub_cmd->parsed()) {
      auto G = group();
      auto n = sub_count(G, cap);
      if (json)
        out << Json{{"group", G.label()}, {"order", G.order()}, {"sub", n}}.dump() << "\n";
      else
        out << "Sub = " << n << "\n";
      return 0;
    }

    if (props_cmd->parsed()) {
      auto G = group();
      auto r = report(G, cap);
      if (json) {
        Json j{{"group", G.label()},
               {"order", r.order},
               {"sub", r.sub_count},
               {"cyclic", r.is_cyclic},
               {"abelian", r.is_abelian},
               {"nilpotent", r.is_nilpotent},
               {"supersolvable", r.is_supersolvable},
               {"solvable", r.is_solvable},
               {"perfect", r.is_perfect},
               {"lagrangian", r.is_lagrangian}};
        j["derived_length"] = r.derived_length ? Json(*r.derived_length) : Json(nullptr);
        out << j.dump() << "\n";
      } else {
        using detail::yes_no;
        out << "group: " << G.label() << "\n"
            << "order: " << r.order << "\n"
            << "sub: " << r.sub_count << "\n"
            << "cyclic: " << yes_no(r.is_cyclic) << "\n"
            << "abelian: " << yes_no(r.is_abelian) << "\n"
            << "nilpotent: " << yes_no(r.is_nilpotent) << "\n"
            << "supersolvable: " << yes_no(r.is_supersolvable) << "\n"
            << "solvable: " << yes_no(r.is_solvable) << "\n"
            << "perfect: " << yes_no(r.is_perfect) << "\n"
            << "lagrangian: " << yes_no(r.is_lagrangian) << "\n"
            << "derived_length: "
            << (r.derived_length ? std::to_string(*r.derived_length) : std::string("-")) << "\n";
      }
      return 0;
    }

    if (lattice_cmd->parsed()) {
      auto G = group();
      auto L = all_subgroups(G, cap);
      if (orders_only) {
        std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts;
        for (std::size_t i = 0; i < L.count(); ++i) {
          ++counts[L[i].order].first;
          counts[L[i].order].second += L.is_normal(i);
        }
        for (auto const &[order, c] : counts) {
          if (json)
            out << Json{{"order", order}, {"count", c.first}, {"normal", c.second}}.dump() << "\n";
          else
            out << "order=" << order << " count=" << c.first << " normal=" << c.second << "\n";
        }
        return 0;
      }
      for (std::size_t i = 0; i < L.count(); ++i) {
        if (json)
          out << detail::subgroup_json(G, L, i).dump() << "\n";
        else
          out << i << " order=" << L[i].order << " normal=" << detail::yes_no(L.is_normal(i))
              << " gens=" << detail::subgroup_generators(G, L[i]) << "\n";
      }
      if (!json)
        out << "Sub = " << L.count() << "\n";
      return 0;
    }

    if (sylow_cmd->parsed() || hall_cmd->parsed()) {
      auto G = group();
      auto L = all_subgroups(G, cap);
      std::vector<Subgroup> found;
      if (sylow_cmd->parsed())
        found = sylow(G, L, prime);
      else
        found = hall(G, L, std::set<std::size_t>(primes.begin(), primes.end()));
      if (!json)
        out << "count = " << found.size() << "\n";
      for (auto const &H : found) {
        auto i = *L.find(H.members);
        if (json)
          out << detail::subgroup_json(G, L, i).dump() << "\n";
        else
          out << i << " order=" << H.order << " normal=" << detail::yes_no(L.is_normal(i))
              << " gens=" << detail::subgroup_generators(G, L[i]) << "\n";
      }
      return 0;
    }

    if (comax_cmd->parsed()) {
      auto G = group();
      auto graph = build_comaximal(G, all_subgroups(G, cap));
      auto s = graph_stats(graph);
      std::optional<std::size_t> a;
      if (alpha)
        a = independence_number(graph, alpha_cap);
      if (!dot_path.empty())
        detail::write_to(dot_path, to_dot(graph), out);
      if (!csv_path.empty())
        detail::write_to(csv_path, to_csv(graph), out);
      if (dot_path == "-" || csv_path == "-")
        return 0;
      if (json) {
        Json j{{"group", G.label()}, {"order", s.order}, {"size", s.size}, {"degrees", s.degrees}};
        if (a)
          j["alpha"] = *a;
        out << j.dump() << "\n";
      } else {
        out << "order=" << s.order << " size=" << s.size << " degrees=";
        for (std::size_t i = 0; i < s.degrees.size(); ++i)
          out << (i ? "," : "") << s.degrees[i];
        out << "\n";
        if (a)
          out << "alpha=" << *a << "\n";
      }
      return 0;
    }

    if (prop_cmd->parsed()) {
      auto W = group();
      auto r = multiple_propagation(W, k, prop_prime, cap);
      auto names = [](std::vector<Property> const &ps) {
        Json j = Json::array();
        for (auto p : ps)
          j.push_back(property_name(p));
        return j;
      };
      if (json) {
        out << Json{{"group", r.label},        {"order", r.order},
                    {"sub", r.sub},            {"expected", r.expected_sub},
                    {"failed", names(r.failed_after)}, {"holds", r.holds()}}
                   .dump()
            << "\n";
      } else {
        out << r.label << " order=" << r.order << " sub=" << r.sub
            << " expected=" << r.expected_sub << " failed=";
        for (std::size_t i = 0; i < r.failed_after.size(); ++i)
          out << (i ? "," : "") << property_name(r.failed_after[i]);
        out << " " << (r.holds() ? "PASS" : "FAIL") << "\n";
      }
      return r.holds() ? 0 : 1;
    }

    if (table1_cmd->parsed()) {
      bool ok = true;
      for (auto const &r : compute_table1(cap)) {
        std::string status = r.item.flagged ? "FLAG" : (r.pass ? "PASS" : "FAIL");
        ok = ok && r.pass;
        if (json)
          out << Json{{"row", r.item.sub},       {"family", r.item.family},
                      {"instance", r.item.expr}, {"sub", r.computed},
                      {"expected", r.item.sub},  {"status", status}}
                     .dump()
              << "\n";
        else
          out << "row=" << r.item.sub << " family=\"" << r.item.family << "\" instance=\""
              << r.item.expr << "\" sub=" << r.computed << " expected=" << r.item.sub << " "
              << status << "\n";
      }
      return ok ? 0 : 1;
    }

    std::size_t bound = detail::max_order_setting(max_order);

    if (scan_cmd->parsed()) {
      auto scanned = scan_catalog(catalog(), bound, jobs, cap);
      std::set<std::size_t> counts;
      if (for_n)
        counts.insert(*for_n);
      else
        for (auto const &g : scanned)
          counts.insert(g.sub);
      for (std::size_t n : counts) {
        auto rec = classify_n(n, scanned, bound);
        if (json) {
          Json w = Json::array();
          for (auto const &x : rec.witnesses)
            w.push_back(witness_text(x));
          out << Json{{"n", rec.n},
                      {"class", rec.observed ? class_name(*rec.observed) : "Vacuous"},
                      {"bound", rec.bound},
                      {"witnesses", w}}
                     .dump()
              << "\n";
        } else {
          out << format_record(rec) << "\n";
        }
      }
      return 0;
    }

    if (figure1_cmd->parsed()) {
      auto scanned = scan_catalog(catalog(), bound, jobs, cap);
      auto cmp = compare_figure1(classify_range(1, 76, scanned, bound));
      std::map<Verdict, std::size_t> tally;
      for (auto const &c : cmp) {
        ++tally[c.verdict];
        if (json)
          out << Json{{"n", c.n},
                      {"figure", class_name(c.figure.cls)},
                      {"conjectured", c.figure.conjectured},
                      {"observed", c.observed ? class_name(*c.observed) : "Vacuous"},
                      {"matches", c.matches},
                      {"verdict", verdict_name(c.verdict)}}
                     .dump()
              << "\n";
        else
          out << format_comparison(c) << "\n";
      }
      if (!json)
        out << "AGREE " << tally[Verdict::Agree] << " WEAKER " << tally[Verdict::Weaker]
            << " CONFLICT " << tally[Verdict::Conflict] << " bound=" << bound << "\n";
      return tally[Verdict::Conflict] ? 2 : 0;
    }

    if (verify_cmd->parsed()) {
      auto rep = verify_sub23_classification(catalog(), bound, jobs, cap);
      for (auto const &c : rep.checks) {
        if (json)
          out << Json{{"order", c.order}, {"id", c.id},         {"label", c.label},
                      {"sub", c.sub},     {"nilpotent", c.nilpotent},
                      {"prime_power", c.prime_power},           {"listed", c.listed},
                      {"ok", c.ok()}}
                     .dump()
              << "\n";
        else
          out << "gid(" << c.order << "," << c.id << ") " << c.label << " sub=" << c.sub
              << " nilpotent=" << detail::yes_no(c.nilpotent)
              << " prime_power=" << detail::yes_no(c.prime_power)
              << (c.listed ? "" : " UNLISTED") << " " << (c.ok() ? "PASS" : "CONFLICT") << "\n";
      }
      if (!json)
        out << (rep.ok() ? "verified" : "CONFLICT") << "\n";
      return rep.ok() ? 0 : 2;
    }
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace latticelab::cli

#endif // LATTICELAB_CLI_HPP
