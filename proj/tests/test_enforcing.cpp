#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace latticelab;

namespace {

std::vector<GroupSummary> const &bundled_scan()
{
  static auto const scanned = scan_catalog(fixtures::bundled_catalog(), 1000, 4);
  return scanned;
}

bool has_witness(EnforcingRecord const &r, Property p, std::string const &label)
{
  for (auto const &w : r.witnesses)
    if (w.failed == p && w.label == label)
      return true;
  return false;
}

/// Every scanned group with Sub = n that fails p.
std::vector<std::string> failing(std::size_t n, Property p)
{
  std::vector<std::string> out;
  for (auto const &g : bundled_scan())
    if (g.sub == n && !g.has(p))
      out.push_back(g.label);
  return out;
}

CatalogEntry entry_for(FiniteGroup const &G, std::string name)
{
  CatalogEntry e;
  e.order = G.order();
  e.degree = G.degree();
  e.name = std::move(name);
  for (auto const &g : G.generator_permutations())
    e.generators.push_back(to_cycles(g));
  return e;
}

} // namespace

TEST(Figure1, BundledTable)
{
  auto const &t = figure1();
  EXPECT_EQ(t[59].cls, EnforcingClass::NonSolvable);
  EXPECT_EQ(t[76].cls, EnforcingClass::NonSolvable);
  EXPECT_EQ(t[23].cls, EnforcingClass::StrictNilpotent);
  EXPECT_EQ(t[22].cls, EnforcingClass::StrictSupersolvable);
  EXPECT_EQ(t[24].cls, EnforcingClass::StrictSupersolvable);
  for (int n : {1, 2, 3, 4, 7, 9, 13})
    EXPECT_EQ(t[n].cls, EnforcingClass::Cyclic) << n;
  std::vector<int> boxed;
  for (int n = 1; n <= 76; ++n)
    if (t[n].conjectured)
      boxed.push_back(n);
  EXPECT_EQ(boxed, (std::vector<int>{28, 29, 31, 32, 33, 39, 43, 46, 47, 49, 57, 61, 62, 64, 65,
                                     67, 71}));
  for (int n : {10, 15, 20, 21, 25, 30, 60, 75})
    EXPECT_EQ(t[n].cls, EnforcingClass::StrictSolvable) << n;
}

TEST(ClassifyN, Examples)
{
  auto const &s = bundled_scan();
  auto r10 = classify_n(10, s, 1000);
  EXPECT_EQ(r10.observed, EnforcingClass::StrictSolvable);
  EXPECT_TRUE(has_witness(r10, Property::Supersolvable, "A4"));

  auto r15 = classify_n(15, s, 1000);
  EXPECT_TRUE(has_witness(r15, Property::Supersolvable, "SL(2,3)"));
  EXPECT_EQ(failing(15, Property::Supersolvable),
            (std::vector<std::string>{"SL(2,3)", "(C2xC2):C9"}));

  auto r59 = classify_n(59, s, 1000);
  EXPECT_EQ(r59.observed, EnforcingClass::NonSolvable);
  EXPECT_TRUE(has_witness(r59, Property::Solvable, "A5"));
}

TEST(ClassifyN, BoundAndVacuousCases)
{
  auto const &s = bundled_scan();
  auto r = classify_n(59, s, 50);
  EXPECT_FALSE(r.observed.has_value());
  EXPECT_EQ(r.matches, 0u);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(format_record(r), "n=59 class=Vacuous bound=50 witnesses=");
  EXPECT_THROW(classify_n(0, s, 50), InvalidArgument);
}

TEST(ClassifyN, RecordFormat)
{
  auto r = classify_n(59, bundled_scan(), 360);
  EXPECT_EQ(format_record(r), "n=59 class=NonSolvable bound=360 witnesses=A5:non-cyclic,"
                              "A5:non-abelian,A5:non-nilpotent,A5:non-supersolvable,"
                              "A5:non-solvable");
}

TEST(ClassifyN, WitnessesReverify)
{
  auto const &cat = fixtures::bundled_catalog();
  for (auto const &r : classify_range(1, 80, bundled_scan(), 1000)) {
    for (auto const &w : r.witnesses)
      EXPECT_TRUE(verify_witness(w, r.n, cat)) << r.n << " " << witness_text(w);
    // failing property k rules out every class up to and including k
    for (auto const &w : r.witnesses)
      EXPECT_GE(static_cast<int>(*r.observed), static_cast<int>(w.failed) + 1);
  }
}

TEST(ClassifyN, PrimeCountsAreNilpotentPGroups)
{
  std::size_t populated = 0;
  for (std::size_t n : {5, 11, 17, 23}) {
    auto r = classify_n(n, bundled_scan(), 1000);
    if (!r.observed)
      continue; // no bundled group has 17 subgroups
    ++populated;
    EXPECT_LE(static_cast<int>(*r.observed), static_cast<int>(EnforcingClass::StrictNilpotent));
  }
  EXPECT_GE(populated, 3u);
  for (auto const &g : bundled_scan()) {
    if (g.sub == 23) {
      EXPECT_TRUE(is_prime_power(g.order)) << g.label;
    }
  }
}

TEST(Scan, IndependentOfThreadCount)
{
  auto const &cat = fixtures::bundled_catalog();
  auto one = scan_catalog(cat, 400, 1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    auto many = scan_catalog(cat, 400, jobs);
    ASSERT_EQ(many.size(), one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(many[i].position, one[i].position);
      EXPECT_EQ(many[i].sub, one[i].sub);
    }
    for (std::size_t n = 1; n <= 76; ++n)
      EXPECT_EQ(format_record(classify_n(n, many, 400)), format_record(classify_n(n, one, 400)));
  }
}

TEST(Scan, SortedByOrderThenId)
{
  auto const &s = bundled_scan();
  for (std::size_t i = 1; i < s.size(); ++i)
    EXPECT_TRUE(s[i - 1].order < s[i].order ||
                (s[i - 1].order == s[i].order && s[i - 1].id <= s[i].id));
}

TEST(Scan, SubMismatchSurfaces)
{
  auto e = entry_for(symmetric(3), "S3");
  e.expected_sub = 7;
  EXPECT_THROW(scan_catalog({e}, 100, 2), CatalogError);
}

TEST(Propagation, Examples)
{
  auto A4 = alternating(4);
  auto r = multiple_propagation(A4, 2, 5);
  EXPECT_EQ(r.sub, 20u);
  EXPECT_TRUE(r.holds());
  EXPECT_NE(std::find(r.failed_after.begin(), r.failed_after.end(), Property::Supersolvable),
            r.failed_after.end());

  auto r3 = multiple_propagation(A4, 3, 5);
  EXPECT_EQ(r3.order, 300u);
  EXPECT_EQ(r3.sub, 30u);
  EXPECT_TRUE(r3.holds());
  // against a direct count of the same group from the catalog
  EXPECT_EQ(sub_count(fixtures::group("A4 x C25")), 30u);

  auto same = multiple_propagation(A4, 1);
  EXPECT_EQ(same.order, 12u);
  EXPECT_EQ(same.sub, 10u);

  auto auto_prime = multiple_propagation(sl2(3), 2);
  EXPECT_EQ(auto_prime.order, 24u * 5u);
  EXPECT_TRUE(auto_prime.holds());

  EXPECT_THROW(multiple_propagation(A4, 2, 3), InvalidArgument);
  EXPECT_THROW(multiple_propagation(A4, 0), InvalidArgument);
  EXPECT_THROW(multiple_propagation(A4, 8, 7), ClosureExceedsCap);
}

TEST(CompareFigure1, Verdicts)
{
  Figure1Entry nil{EnforcingClass::StrictNilpotent, false};
  EXPECT_EQ(compare_entry(nil, EnforcingClass::StrictNilpotent), Verdict::Agree);
  EXPECT_EQ(compare_entry(nil, EnforcingClass::StrictAbelian), Verdict::Agree);
  EXPECT_EQ(compare_entry(nil, EnforcingClass::Cyclic), Verdict::Weaker);
  EXPECT_EQ(compare_entry(nil, EnforcingClass::StrictSupersolvable), Verdict::Conflict);
  EXPECT_EQ(compare_entry(nil, std::nullopt), Verdict::Weaker);
  Figure1Entry boxed{EnforcingClass::StrictSupersolvable, true};
  EXPECT_EQ(compare_entry(boxed, EnforcingClass::StrictNilpotent), Verdict::Weaker);
}

TEST(CompareFigure1, NoConflictOnBundledCatalog)
{
  auto cmp = compare_figure1(classify_range(1, 76, bundled_scan(), 1000));
  ASSERT_EQ(cmp.size(), 76u);
  for (auto const &c : cmp) {
    EXPECT_NE(c.verdict, Verdict::Conflict) << format_comparison(c);
  }
  EXPECT_EQ(cmp[22].verdict, Verdict::Agree); // n = 23
  EXPECT_EQ(cmp[58].verdict, Verdict::Agree); // n = 59
  EXPECT_EQ(cmp[75].verdict, Verdict::Agree); // n = 76
}

TEST(CompareFigure1, InsufficientCatalogIsWeaker)
{
  std::vector<CatalogEntry> only_a5{entry_for(alternating(5), "A5")};
  auto scanned = scan_catalog(only_a5, 360);
  auto cmp = compare_figure1({classify_n(76, scanned, 360), classify_n(59, scanned, 360)});
  EXPECT_EQ(cmp[0].verdict, Verdict::Weaker);
  EXPECT_EQ(cmp[1].verdict, Verdict::Agree);
}

TEST(Sub23, BundledClassification)
{
  auto rep = verify_sub23_classification(fixtures::bundled_catalog(), 1000, 2);
  EXPECT_TRUE(rep.ok());
  ASSERT_GE(rep.checks.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_TRUE(rep.checks[i].listed);
    EXPECT_EQ(rep.checks[i].sub, 23u);
  }
  EXPECT_EQ(sub_count(abelian({64, 2})), 20u);
}

TEST(Sub23, UnlistedGroupIsReported)
{
  auto cat = fixtures::bundled_catalog();
  // a duplicate of C9xC9 under an id outside the seven
  auto copy = *find_gid(cat, 81, 2);
  copy.id = 99;
  copy.name = "impostor";
  cat.push_back(copy);
  auto rep = verify_sub23_classification(cat, 100);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.checks.back().label, "impostor");
  EXPECT_FALSE(rep.checks.back().listed);

  std::vector<CatalogEntry> missing;
  EXPECT_THROW(verify_sub23_classification(missing, 100), UnknownGid);
}
