#ifndef LATTICELAB_ENFORCING_HPP
#define LATTICELAB_ENFORCING_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "constructors.hpp"
#include "lattice.hpp"
#include "properties.hpp"

namespace latticelab {

/// The five hierarchy properties, strongest first.
enum class Property { Cyclic, Abelian, Nilpotent, Supersolvable, Solvable };

inline constexpr std::array<Property, 5> kProperties{Property::Cyclic, Property::Abelian,
                                                     Property::Nilpotent, Property::Supersolvable,
                                                     Property::Solvable};

inline std::string property_name(Property p)
{
  switch (p) {
  case Property::Cyclic:
    return "cyclic";
  case Property::Abelian:
    return "abelian";
  case Property::Nilpotent:
    return "nilpotent";
  case Property::Supersolvable:
    return "supersolvable";
  case Property::Solvable:
    return "solvable";
  }
  return {};
}

/// Strongest enforced property of an n; ordered from strongest to weakest.
enum class EnforcingClass { Cyclic, StrictAbelian, StrictNilpotent, StrictSupersolvable, StrictSolvable, NonSolvable };

inline std::string class_name(EnforcingClass c)
{
  switch (c) {
  case EnforcingClass::Cyclic:
    return "Cyclic";
  case EnforcingClass::StrictAbelian:
    return "StrictAbelian";
  case EnforcingClass::StrictNilpotent:
    return "StrictNilpotent";
  case EnforcingClass::StrictSupersolvable:
    return "StrictSupersolvable";
  case EnforcingClass::StrictSolvable:
    return "StrictSolvable";
  case EnforcingClass::NonSolvable:
    return "NonSolvable";
  }
  return {};
}

struct Figure1Entry
{
  EnforcingClass cls = EnforcingClass::StrictSolvable;
  bool conjectured = false;
};

/// The chart of enforcing numbers 1..76; index 0 is unused.
inline std::array<Figure1Entry, 77> const &figure1()
{
  static std::array<Figure1Entry, 77> const table = [] {
    std::array<Figure1Entry, 77> t{};
    using C = EnforcingClass;
    for (int n : {1, 2, 3, 4, 7, 9, 13})
      t[n] = {C::Cyclic, false};
    for (int n : {5, 11, 17, 23})
      t[n] = {C::StrictNilpotent, false};
    for (int n : {29, 33, 39, 47, 49, 61, 67})
      t[n] = {C::StrictNilpotent, true};
    for (int n : {6, 8, 12, 14, 16, 18, 19, 22, 24})
      t[n] = {C::StrictSupersolvable, false};
    for (int n : {28, 31, 32, 43, 46, 57, 62, 64, 65, 71})
      t[n] = {C::StrictSupersolvable, true};
    for (int n : {59, 76})
      t[n] = {C::NonSolvable, false};
    return t;
  }();
  return table;
}

/// Everything the scans need to know about one catalog group.
struct GroupSummary
{
  std::size_t position = 0; // index in the catalog
  std::size_t order = 0;
  std::size_t id = 0;
  std::string label;
  std::size_t sub = 0;
  PropertyReport report;

  bool has(Property p) const
  {
    switch (p) {
    case Property::Cyclic:
      return report.is_cyclic;
    case Property::Abelian:
      return report.is_abelian;
    case Property::Nilpotent:
      return report.is_nilpotent;
    case Property::Supersolvable:
      return report.is_supersolvable;
    case Property::Solvable:
      return report.is_solvable;
    }
    return false;
  }
};

inline GroupSummary summarize(CatalogEntry const &entry, std::size_t position,
                              std::size_t cap = kDefaultCap)
{
  FiniteGroup G = build_group(entry, std::max(cap, entry.order));
  auto lattice = all_subgroups(G, std::max(cap, entry.order));
  check_expected_sub(entry, lattice.count());
  GroupSummary s;
  s.position = position;
  s.order = entry.order;
  s.id = entry.id;
  s.label = entry.label();
  s.sub = lattice.count();
  s.report = report(G, lattice);
  return s;
}

/// Lattice and property report for every catalog group of order <= bound.
///
/// Work is spread over `jobs` threads; the result is sorted by (order, id,
/// catalog position) and does not depend on the thread count.
inline std::vector<GroupSummary> scan_catalog(std::vector<CatalogEntry> const &catalog,
                                              std::size_t bound, unsigned jobs = 1,
                                              std::size_t cap = kDefaultCap)
{
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].order <= bound)
      todo.push_back(i);
  }

  std::vector<std::optional<GroupSummary>> results(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      try {
        results[k] = summarize(catalog[todo[k]], todo[k], cap);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  for (auto const &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  std::vector<GroupSummary> out;
  out.reserve(results.size());
  for (auto &r : results)
    out.push_back(std::move(*r));
  std::sort(out.begin(), out.end(), [](GroupSummary const &a, GroupSummary const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    if (a.id != b.id)
      return a.id < b.id;
    return a.position < b.position;
  });
  return out;
}

struct Witness
{
  Property failed = Property::Solvable;
  std::string label;
  std::size_t order = 0;
  std::size_t position = 0;
};

struct EnforcingRecord
{
  std::size_t n = 0;
  /// Empty when no scanned group has exactly n subgroups.
  std::optional<EnforcingClass> observed;
  /// The least-order group failing each property some match fails.
  std::vector<Witness> witnesses;
  std::size_t bound = 0;
  std::size_t matches = 0;
};

/// Strongest class shared by every scanned group with Sub = n.
inline EnforcingRecord classify_n(std::size_t n, std::vector<GroupSummary> const &scanned,
                                  std::size_t bound)
{
  if (n == 0)
    throw InvalidArgument("n must be at least 1");
  EnforcingRecord rec;
  rec.n = n;
  rec.bound = bound;

  std::array<bool, 5> all_have{true, true, true, true, true};
  for (auto const &g : scanned) {
    if (g.sub != n || g.order > bound)
      continue;
    ++rec.matches;
    for (std::size_t k = 0; k < kProperties.size(); ++k) {
      if (g.has(kProperties[k]))
        continue;
      if (all_have[k])
        rec.witnesses.push_back({kProperties[k], g.label, g.order, g.position});
      all_have[k] = false;
    }
  }
  std::sort(rec.witnesses.begin(), rec.witnesses.end(),
            [](Witness const &a, Witness const &b) { return a.failed < b.failed; });

  if (rec.matches == 0)
    return rec;
  if (all_have[0])
    rec.observed = EnforcingClass::Cyclic;
  else if (all_have[1])
    rec.observed = EnforcingClass::StrictAbelian;
  else if (all_have[2])
    rec.observed = EnforcingClass::StrictNilpotent;
  else if (all_have[3])
    rec.observed = EnforcingClass::StrictSupersolvable;
  else if (all_have[4])
    rec.observed = EnforcingClass::StrictSolvable;
  else
    rec.observed = EnforcingClass::NonSolvable;
  return rec;
}

inline std::vector<EnforcingRecord> classify_range(std::size_t lo, std::size_t hi,
                                                   std::vector<GroupSummary> const &scanned,
                                                   std::size_t bound)
{
  std::vector<EnforcingRecord> out;
  for (std::size_t n = lo; n <= hi; ++n)
    out.push_back(classify_n(n, scanned, bound));
  return out;
}

/// Recomputes a witness from the catalog: Sub must equal n and the property must fail.
inline bool verify_witness(Witness const &w, std::size_t n,
                           std::vector<CatalogEntry> const &catalog, std::size_t cap = kDefaultCap)
{
  if (w.position >= catalog.size())
    return false;
  auto s = summarize(catalog[w.position], w.position, cap);
  return s.sub == n && !s.has(w.failed);
}

inline std::string witness_text(Witness const &w)
{
  return w.label + ":non-" + property_name(w.failed);
}

/// `n=<n> class=<class> bound=<order> witnesses=<label:property,...>`
inline std::string format_record(EnforcingRecord const &r)
{
  std::string out = "n=" + std::to_string(r.n) + " class=" +
                    (r.observed ? class_name(*r.observed) : std::string("Vacuous")) +
                    " bound=" + std::to_string(r.bound) + " witnesses=";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    out += (i ? "," : "") + witness_text(r.witnesses[i]);
  return out;
}

struct PropagationResult
{
  std::string label;
  std::size_t order = 0;
  std::size_t sub = 0;
  std::size_t expected_sub = 0;
  std::vector<Property> failed_before;
  std::vector<Property> failed_after;

  bool holds() const { return sub == expected_sub && failed_before == failed_after; }
};

namespace detail {

inline std::vector<Property> failed_properties(PropertyReport const &r)
{
  GroupSummary s;
  s.report = r;
  std::vector<Property> out;
  for (Property p : kProperties) {
    if (!s.has(p))
      out.push_back(p);
  }
  return out;
}

} // namespace detail

/// Builds W x C_{p^(k-1)} for a prime p not dividing |W| and checks that it has
/// k * Sub(W) subgroups and fails the same properties as W.
inline PropagationResult multiple_propagation(FiniteGroup const &W, std::size_t k,
                                              std::optional<std::size_t> prime = std::nullopt,
                                              std::size_t cap = kDefaultCap)
{
  if (k == 0)
    throw InvalidArgument("multiplier k must be at least 1");
  std::size_t p = 2;
  if (prime) {
    p = *prime;
    if (!is_prime(p) || W.order() % p == 0)
      throw InvalidArgument(std::to_string(p) + " must be a prime not dividing |W| = " +
                            std::to_string(W.order()));
  } else {
    while (W.order() % p == 0 || !is_prime(p))
      ++p;
  }

  std::size_t extra = 1;
  for (std::size_t i = 1; i < k; ++i) {
    extra *= p;
    if (extra > cap)
      throw ClosureExceedsCap(cap);
  }

  auto base = report(W, cap);
  FiniteGroup H = extra == 1 ? W : direct_product(W, cyclic(extra, cap), cap);
  auto after = report(H, cap);

  PropagationResult r;
  r.label = H.label();
  r.order = H.order();
  r.sub = after.sub_count;
  r.expected_sub = base.sub_count * k;
  r.failed_before = detail::failed_properties(base);
  r.failed_after = detail::failed_properties(after);
  return r;
}

enum class Verdict { Agree, Weaker, Conflict };

inline std::string verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Agree:
    return "AGREE";
  case Verdict::Weaker:
    return "WEAKER";
  case Verdict::Conflict:
    return "CONFLICT";
  }
  return {};
}

struct Figure1Comparison
{
  std::size_t n = 0;
  Figure1Entry figure;
  std::optional<EnforcingClass> observed;
  std::size_t matches = 0;
  Verdict verdict = Verdict::Weaker;
};

namespace detail {

/// StrictAbelian has no colour of its own in the chart; it counts as nilpotent.
inline int chart_rank(EnforcingClass c)
{
  return c == EnforcingClass::StrictAbelian ? static_cast<int>(EnforcingClass::StrictNilpotent)
                                            : static_cast<int>(c);
}

} // namespace detail

/// AGREE when the scan reaches the chart's class, WEAKER when it stays
/// stronger (no counterexample within the bound), CONFLICT when a scanned
/// group breaks a property the chart says is enforced.
inline Verdict compare_entry(Figure1Entry const &fig, std::optional<EnforcingClass> observed)
{
  if (!observed)
    return Verdict::Weaker;
  int seen = detail::chart_rank(*observed), expected = detail::chart_rank(fig.cls);
  if (seen > expected)
    return Verdict::Conflict;
  return seen == expected ? Verdict::Agree : Verdict::Weaker;
}

inline std::vector<Figure1Comparison> compare_figure1(std::vector<EnforcingRecord> const &records)
{
  std::vector<Figure1Comparison> out;
  for (auto const &r : records) {
    if (r.n < 1 || r.n > 76)
      continue;
    Figure1Comparison c;
    c.n = r.n;
    c.figure = figure1()[r.n];
    c.observed = r.observed;
    c.matches = r.matches;
    c.verdict = compare_entry(c.figure, r.observed);
    out.push_back(c);
  }
  return out;
}

inline std::string format_comparison(Figure1Comparison const &c)
{
  return "n=" + std::to_string(c.n) + " figure=" + class_name(c.figure.cls) +
         (c.figure.conjectured ? "(conjectured)" : "") +
         " observed=" + (c.observed ? class_name(*c.observed) : std::string("Vacuous")) +
         " matches=" + std::to_string(c.matches) + " verdict=" + verdict_name(c.verdict);
}

/// The seven groups with exactly 23 subgroups, as (order, id).
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 7> kSub23Groups{
  {{16, 3}, {16, 13}, {81, 2}, {81, 4}, {81, 10}, {256, 537}, {256, 538}}};

struct Sub23Check
{
  std::size_t order = 0;
  std::size_t id = 0;
  std::string label;
  std::size_t sub = 0;
  bool nilpotent = false;
  bool prime_power = false;
  bool listed = true; // false for a catalog group outside the seven

  bool ok() const { return listed && sub == 23 && nilpotent && prime_power; }
};

struct Sub23Report
{
  std::vector<Sub23Check> checks;

  bool ok() const
  {
    return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.ok(); });
  }
};

inline bool is_prime_power(std::size_t n)
{
  auto f = prime_factors(n);
  return f.size() == 1;
}

/// Checks the seven listed groups, then every other catalog group of order
/// <= bound with 23 subgroups, which must carry one of the seven ids.
inline Sub23Report verify_sub23_classification(std::vector<CatalogEntry> const &catalog,
                                               std::size_t bound, unsigned jobs = 1,
                                               std::size_t cap = kDefaultCap)
{
  Sub23Report out;
  for (auto [order, id] : kSub23Groups) {
    auto const *entry = find_gid(catalog, order, id);
    if (!entry)
      throw UnknownGid(order, id);
    auto s = summarize(*entry, static_cast<std::size_t>(entry - catalog.data()), cap);
    out.checks.push_back({order, id, s.label, s.sub, s.report.is_nilpotent,
                          is_prime_power(order), true});
  }

  for (auto const &s : scan_catalog(catalog, bound, jobs, cap)) {
    if (s.sub != 23)
      continue;
    bool listed = std::any_of(kSub23Groups.begin(), kSub23Groups.end(), [&](auto const &g) {
      return g.first == s.order && g.second == s.id;
    });
    if (!listed)
      out.checks.push_back({s.order, s.id, s.label, s.sub, s.report.is_nilpotent,
                            is_prime_power(s.order), false});
  }
  return out;
}

} // namespace latticelab

#endif // LATTICELAB_ENFORCING_HPP
