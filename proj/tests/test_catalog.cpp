#include <gtest/gtest.h>

#include "railstick/catalog.hpp"

using namespace railstick;

TEST(Catalog, Loads) {
  const Catalog& c = Catalog::shipped();
  EXPECT_EQ(c.version(), 1);
  for (const char* name : {"1_1", "2_1", "2_2", "2_3", "2_4", "2_5", "2_6", "3_2", "L2a1", "lattice 2_1", "lattice L2a1"})
    EXPECT_TRUE(c.contains(name)) << name;
  EXPECT_THROW(c.get("9_99"), InputError);
}

TEST(Catalog, GetTwoTwo) {
  const CatalogEntry& e = Catalog::shipped().get("2_2");
  EXPECT_EQ(e.sticks, 5);
  const auto& a = std::get<StickRailArc>(e.conformation);
  EXPECT_EQ(stick_count(a), 5);
  EXPECT_EQ(classify(to_combinatorial(project(a))).label, "2_2");
}

TEST(Catalog, Families) {
  const CatalogEntry w = family("W", -3);
  EXPECT_EQ(w.sticks, 8);
  EXPECT_EQ(rail_winding(project(std::get<StickRailArc>(w.conformation))), -3);
  const CatalogEntry m = family("multi", 2);
  EXPECT_EQ(m.sticks, 7);
  EXPECT_EQ(std::get<MultiStickRailArc>(m.conformation).knots.size(), 2u);
  EXPECT_EQ(m.components, (std::vector<std::string>{"0_1", "0_1"}));
  EXPECT_EQ(family("torus", 3).sticks, 14);
  EXPECT_THROW(family("W", 0), InputError);
  EXPECT_THROW(family("torus", 1), InputError);
  EXPECT_THROW(family("spiral", 2), InputError);
}

TEST(Catalog, EntryJsonRoundTrip) {
  for (const auto& name : Catalog::shipped().names()) {
    const CatalogEntry& e = Catalog::shipped().get(name);
    EXPECT_EQ(entry_json(parse_entry(entry_json(e))), entry_json(e)) << name;
  }
}

TEST(Catalog, VerifyAll) {
  const Report r = verify_all();
  for (const auto& c : r.claims) EXPECT_TRUE(c.pass) << c.entry << ": " << c.what << " (found " << c.found << ")";
  EXPECT_GT(r.claims.size(), 200u);
}

TEST(Catalog, VerifyCatchesWrongClaims) {
  CatalogEntry e = Catalog::shipped().get("2_2");
  e.sticks = 4;
  e.classification = "2_5";
  EXPECT_EQ(verify(e).failures(), 2);
}
