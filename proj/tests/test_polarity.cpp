#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace udpolar;

TEST(Polarity, FlipSwapsUpAndDown) {
  EXPECT_EQ(flip(Polarity::Up), Polarity::Down);
  EXPECT_EQ(flip(Polarity::Down), Polarity::Up);
  EXPECT_EQ(flip(Polarity::Flat), Polarity::Flat);
}

TEST(Polarity, FlipIsInvolution) {
  for (Polarity p : kAllPolarities) EXPECT_EQ(flip(flip(p)), p);
}

TEST(Polarity, ComposeTable) {
  EXPECT_EQ(compose(Polarity::Up, Polarity::Up), Polarity::Up);
  EXPECT_EQ(compose(Polarity::Up, Polarity::Down), Polarity::Down);
  EXPECT_EQ(compose(Polarity::Down, Polarity::Down), Polarity::Up);
  EXPECT_EQ(compose(Polarity::Down, Polarity::Up), Polarity::Down);
  for (Polarity p : kAllPolarities) {
    EXPECT_EQ(compose(Polarity::Flat, p), Polarity::Flat);
    EXPECT_EQ(compose(p, Polarity::Flat), Polarity::Flat);
    EXPECT_EQ(compose(Polarity::Up, p), p);
  }
}

TEST(Polarity, Renderings) {
  EXPECT_EQ(to_arrow(Polarity::Up), "↑");
  EXPECT_EQ(to_arrow(Polarity::Down), "↓");
  EXPECT_EQ(to_arrow(Polarity::Flat), "=");
  EXPECT_EQ(to_ascii(Polarity::Up), '^');
  EXPECT_EQ(to_ascii(Polarity::Down), 'v');
  EXPECT_EQ(to_ascii(Polarity::Flat), '=');
  EXPECT_EQ(to_name(Polarity::Down), "down");
}

TEST(Polarity, ParseRoundTripsEveryRendering) {
  for (Polarity p : kAllPolarities) {
    EXPECT_EQ(parse_polarity(to_arrow(p)), p);
    EXPECT_EQ(parse_polarity(std::string(1, to_ascii(p))), p);
    EXPECT_EQ(parse_polarity(to_name(p)), p);
  }
  EXPECT_FALSE(parse_polarity("x"));
  EXPECT_FALSE(parse_polarity(""));
}
