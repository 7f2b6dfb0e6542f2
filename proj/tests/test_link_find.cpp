#include <gtest/gtest.h>

#include <stdexcept>

#include "twinless/link_find.hpp"

using namespace twinless;

namespace {

// Path 0-1-2-3-4 (1-based 1..5), rooted at 0.
const std::vector<Vertex> kPath{kAbsent, 0, 1, 2, 3};

}  // namespace

TEST(LinkFind, FreshForestIsSingletons) {
  LinkFindForest f(kPath);
  for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(f.find(x), x);
}

TEST(LinkFind, TwoParentLinks) {
  LinkFindForest f(kPath);
  f.link(4);
  f.link(3);
  EXPECT_EQ(f.find(4), 2);
  EXPECT_EQ(f.find(3), 2);
  EXPECT_EQ(f.find(1), 1);
  EXPECT_EQ(f.links(), 2);
}

TEST(LinkFind, FullyLinked) {
  LinkFindForest f(kPath);
  for (Vertex x = 1; x < 5; ++x) f.link(x);
  for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(f.find(x), 0);
}

TEST(LinkFind, LinkOrderDoesNotMatter) {
  // Star plus a chain: 0 <- 1 <- 2, 0 <- 3, 3 <- 4, 3 <- 5.
  const std::vector<Vertex> parent{kAbsent, 0, 1, 0, 3, 3};
  LinkFindForest f(parent);
  f.link(2);
  f.link(5);
  f.link(3);
  EXPECT_EQ(f.find(2), 1);
  EXPECT_EQ(f.find(5), 0);
  EXPECT_EQ(f.find(4), 4);
  f.link(4);
  f.link(1);
  for (Vertex x = 0; x < 6; ++x) EXPECT_EQ(f.find(x), 0);
}

TEST(LinkFind, RootCannotBeLinked) {
  LinkFindForest f(kPath);
  EXPECT_THROW(f.link(0), std::invalid_argument);
}
