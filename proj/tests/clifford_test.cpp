#include "qloc/clifford.hpp"

#include <gtest/gtest.h>

namespace qloc {
namespace {

CliffordWord word(int mask) { return CliffordWord(static_cast<std::uint8_t>(mask)); }

// Independent oracle: expand both words into generator lists and bubble-sort
// with explicit anticommutation and contraction.
WordProduct naive_product(CliffordWord u, CliffordWord v) {
  std::vector<int> seq = u.indices();
  for (int mu : v.indices()) seq.push_back(mu);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k] == seq[k + 1]) {
        sign *= eta(seq[k]);
        seq.erase(seq.begin() + static_cast<long>(k), seq.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
      if (seq[k] > seq[k + 1]) {
        std::swap(seq[k], seq[k + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {sign, CliffordWord::from_indices(seq)};
}

TEST(Clifford, Examples) {
  auto a = wmul(word(1), word(1));
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.word, word(0));
  auto b = wmul(word(2), word(2));
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.word, word(0));
  auto c = wmul(word(2), word(1));
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.word, word(3));
}

TEST(Clifford, MatchesNaiveProduct) {
  for (int u = 0; u < 16; ++u) {
    for (int v = 0; v < 16; ++v) {
      auto fast = wmul(word(u), word(v));
      auto slow = naive_product(word(u), word(v));
      EXPECT_EQ(fast.sign, slow.sign) << u << " " << v;
      EXPECT_EQ(fast.word, slow.word);
    }
  }
}

TEST(Clifford, AssociativeExhaustive) {
  for (int u = 0; u < 16; ++u) {
    for (int v = 0; v < 16; ++v) {
      for (int t = 0; t < 16; ++t) {
        auto uv = wmul(word(u), word(v));
        auto left = wmul(uv.word, word(t));
        auto vt = wmul(word(v), word(t));
        auto right = wmul(word(u), vt.word);
        EXPECT_EQ(uv.sign * left.sign, vt.sign * right.sign);
        EXPECT_EQ(left.word, right.word);
      }
    }
  }
}

TEST(Clifford, GeneratorsAnticommute) {
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      auto a = wmul(CliffordWord::generator(mu), CliffordWord::generator(nu));
      auto b = wmul(CliffordWord::generator(nu), CliffordWord::generator(mu));
      EXPECT_EQ(a.word, b.word);
      if (mu == nu) {
        EXPECT_EQ(a.sign, eta(mu));
      } else {
        EXPECT_EQ(a.sign, -b.sign);
      }
    }
  }
}

TEST(Clifford, ReversalAndGradeSigns) {
  for (int u = 0; u < 16; ++u) {
    // Reversed word as a product of generators in decreasing order.
    auto idx = word(u).indices();
    int sign = 1;
    CliffordWord acc;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      auto p = wmul(acc, CliffordWord::generator(*it));
      sign *= p.sign;
      acc = p.word;
    }
    EXPECT_EQ(acc, word(u));
    EXPECT_EQ(sign, reversal_sign(word(u)));
    int k = static_cast<int>(idx.size());
    EXPECT_EQ(reversal_sign(word(u)), (k * (k - 1) / 2) % 2 ? -1 : 1);
    EXPECT_EQ(grade_sign(word(u)), k % 2 ? -1 : 1);
  }
}

TEST(Clifford, Gamma5) {
  CliffordElement g5 = gamma5();
  EXPECT_EQ(g5 * g5, CliffordElement(CliffordWord(), Scalar(1)));
  EXPECT_EQ(g5[CliffordWord(0xf)], Scalar::i());
  for (int mu = 0; mu < 4; ++mu) {
    CliffordElement g(CliffordWord::generator(mu), Scalar(1));
    EXPECT_TRUE((g5 * g + g * g5).is_zero());
  }
}

TEST(Clifford, Epsilon) {
  EXPECT_EQ(epsilon_lower(0, 1, 2, 3), 1);
  EXPECT_EQ(epsilon_upper(0, 1, 2, 3), -1);
  EXPECT_EQ(epsilon_lower(0, 0, 1, 2), 0);
  EXPECT_EQ(epsilon_lower(1, 0, 2, 3), -1);
  EXPECT_EQ(epsilon_lower(0, 1, 3, 2), -1);
  EXPECT_EQ(epsilon_lower(0, 2, 1, 3), -1);
  EXPECT_EQ(epsilon_lower(3, 2, 1, 0), 1);
}

TEST(Clifford, Rendering) {
  EXPECT_EQ(word(0).plain(), "1");
  EXPECT_EQ(word(3).plain(), "g0 g1");
  EXPECT_EQ(word(15).plain(), "g0 g1 g2 g3");
}

}  // namespace
}  // namespace qloc
