#include <gtest/gtest.h>

#include <set>

#include "symspace/rootsys.hpp"

using namespace symspace;

namespace {

struct TypeCase {
  RootLabel label;
  int rank;
};

std::vector<TypeCase> all_types_up_to_rank8() {
  std::vector<TypeCase> out;
  for (int n = 1; n <= 8; ++n) out.push_back({RootLabel::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({RootLabel::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({RootLabel::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({RootLabel::D, n});
  out.push_back({RootLabel::E6, 6});
  out.push_back({RootLabel::E7, 7});
  out.push_back({RootLabel::E8, 8});
  out.push_back({RootLabel::F4, 4});
  out.push_back({RootLabel::G2, 2});
  return out;
}

long long closed_form_positive_count(RootLabel l, int n) {
  switch (l) {
    case RootLabel::A: return n * (n + 1) / 2;
    case RootLabel::B:
    case RootLabel::C: return n * n;
    case RootLabel::D: return n * (n - 1);
    case RootLabel::E6: return 36;
    case RootLabel::E7: return 63;
    case RootLabel::E8: return 120;
    case RootLabel::F4: return 24;
    case RootLabel::G2: return 6;
  }
  return -1;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= std::uint64_t(i);
  return f;
}

std::uint64_t closed_form_weyl_order(RootLabel l, int n) {
  switch (l) {
    case RootLabel::A: return factorial(n + 1);
    case RootLabel::B:
    case RootLabel::C: return (std::uint64_t(1) << n) * factorial(n);
    case RootLabel::D: return (std::uint64_t(1) << (n - 1)) * factorial(n);
    case RootLabel::E6: return 51840;
    case RootLabel::E7: return 2903040;
    case RootLabel::E8: return 696729600;
    case RootLabel::F4: return 1152;
    case RootLabel::G2: return 12;
  }
  return 0;
}

// Closed-form characterization written without diagram data.
bool type4_reversing_expected(RootLabel l, int n) {
  switch (l) {
    case RootLabel::A: {
      int m = n + 1;  // su(m)
      return (m * m - 1) % 2 == 1 || m % 4 == 0 || m % 4 == 3;
    }
    case RootLabel::B:
    case RootLabel::C: return (n * (2 * n + 1)) % 2 == 1;
    case RootLabel::D: return (n * (2 * n - 1)) % 2 == 1 || n >= 4;
    case RootLabel::E7: return true;
    default: return false;
  }
}

}  // namespace

TEST(RootSystem, SmallExamples) {
  auto a2 = build_root_system(RootLabel::A, 2);
  EXPECT_EQ(a2.positive_roots.size(), 3u);
  EXPECT_EQ(a2.weyl_order, 6u);
  EXPECT_EQ(a2.invariant_degrees, (std::vector<int>{2, 3}));
  auto g2 = build_root_system(RootLabel::G2, 2);
  EXPECT_EQ(g2.positive_roots.size(), 6u);
  EXPECT_EQ(g2.weyl_order, 12u);
  EXPECT_EQ(g2.invariant_degrees, (std::vector<int>{2, 6}));
  auto a1 = build_root_system(RootLabel::A, 1);
  EXPECT_EQ(a1.positive_roots.size(), 1u);
  EXPECT_EQ(a1.weyl_order, 2u);
}

TEST(RootSystem, InvalidTypesRejected) {
  EXPECT_THROW(build_root_system(RootLabel::A, 0), InvalidType);
  EXPECT_THROW(build_root_system(RootLabel::B, 1), InvalidType);
  EXPECT_THROW(build_root_system(RootLabel::D, 2), InvalidType);
  EXPECT_THROW(build_root_system(RootLabel::E6, 7), InvalidType);
  EXPECT_THROW(build_root_system("Q", 3), InvalidType);
  EXPECT_NO_THROW(build_root_system(RootLabel::D, 3));
}

TEST(RootSystem, BourbakiCartanMatrices) {
  EXPECT_EQ(build_root_system(RootLabel::G2, 2).cartan_matrix, (IntMatrix{{2, -3}, {-1, 2}}));
  EXPECT_EQ(build_root_system(RootLabel::B, 3).cartan_matrix, (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(build_root_system(RootLabel::C, 3).cartan_matrix, (IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  EXPECT_EQ(build_root_system(RootLabel::F4, 4).cartan_matrix,
            (IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  // E6: node 2 attaches to node 4, chain 1-3-4-5-6.
  auto e6 = build_root_system(RootLabel::E6, 6).cartan_matrix;
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (e6[std::size_t(i)][std::size_t(j)] != 0) edges.insert({i + 1, j + 1});
    }
  }
  EXPECT_EQ(edges, (std::set<std::pair<int, int>>{{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}}));
}

TEST(RootSystem, CountsAndOrdersAgainstClosedForms) {
  for (const auto& tc : all_types_up_to_rank8()) {
    auto rs = build_root_system(tc.label, tc.rank);
    SCOPED_TRACE(rs.name());
    EXPECT_EQ((long long)rs.positive_roots.size(), closed_form_positive_count(tc.label, tc.rank));
    EXPECT_EQ(rs.weyl_order, closed_form_weyl_order(tc.label, tc.rank));
    std::uint64_t prod = 1;
    for (int d : rs.invariant_degrees) prod *= std::uint64_t(d);
    EXPECT_EQ(prod, rs.weyl_order);
    EXPECT_EQ((long long)rs.invariant_degrees.size(), tc.rank);
    // Σ (d_i - 1) = number of positive roots.
    int s = 0;
    for (int d : rs.invariant_degrees) s += d - 1;
    EXPECT_EQ(s, (int)rs.positive_roots.size());
    EXPECT_EQ((rs.dimension() - rs.rank) / 2, (int)rs.positive_roots.size());
    for (const auto& c : rs.positive_roots_simple) {
      for (auto v : c) EXPECT_GE(v, 0);
    }
  }
}

TEST(RootSystem, AmbientReflectionClosure) {
  // Reflect in ambient coordinates with the Euclidean formula; the images of
  // positive roots must be exactly ±positive roots.
  for (const auto& tc : all_types_up_to_rank8()) {
    auto rs = build_root_system(tc.label, tc.rank);
    SCOPED_TRACE(rs.name());
    std::set<IntVec> all;
    for (const auto& r : rs.positive_roots) {
      all.insert(r);
      IntVec neg = r;
      for (auto& v : neg) v = -v;
      all.insert(neg);
    }
    std::set<IntVec> images;
    for (const auto& a : rs.simple_roots) {
      long long aa = detail::dot(a, a);
      for (const auto& r : all) {
        long long num = 2 * detail::dot(r, a);
        ASSERT_EQ(num % aa, 0);
        IntVec img = r;
        for (std::size_t k = 0; k < img.size(); ++k) img[k] -= (num / aa) * a[k];
        images.insert(img);
      }
    }
    EXPECT_EQ(images, all);
  }
}

TEST(DiagramAutomorphisms, Examples) {
  auto a3 = diagram_automorphisms(build_root_system(RootLabel::A, 3));
  ASSERT_EQ(a3.size(), 2u);
  bool found_flip = false;
  for (const auto& a : a3) {
    if (a.cycles() == "(1 3)") {
      found_flip = true;
      EXPECT_EQ(a.sign, -1);
    }
  }
  EXPECT_TRUE(found_flip);
  auto d4 = diagram_automorphisms(build_root_system(RootLabel::D, 4));
  EXPECT_EQ(d4.size(), 6u);
  EXPECT_TRUE(std::any_of(d4.begin(), d4.end(), [](const DiagramAutomorphism& a) { return a.sign < 0; }));
  auto g2 = diagram_automorphisms(build_root_system(RootLabel::G2, 2));
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_EQ(g2[0].cycles(), "id");
}

TEST(DiagramAutomorphisms, FormAGroup) {
  for (const auto& tc : all_types_up_to_rank8()) {
    auto rs = build_root_system(tc.label, tc.rank);
    auto auts = diagram_automorphisms(rs);
    std::set<std::vector<int>> perms;
    for (const auto& a : auts) perms.insert(a.permutation);
    std::vector<int> id(std::size_t(rs.rank));
    for (int i = 0; i < rs.rank; ++i) id[std::size_t(i)] = i;
    EXPECT_TRUE(perms.count(id));
    for (const auto& p : perms) {
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[std::size_t(p[i])] = int(i);
      EXPECT_TRUE(perms.count(inv));
      for (const auto& q : perms) {
        std::vector<int> pq(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[std::size_t(q[i])];
        EXPECT_TRUE(perms.count(pq));
      }
    }
    for (const auto& a : auts) EXPECT_EQ(a.sign, permutation_sign(a.permutation));
  }
}

TEST(DiagramAutomorphisms, GroupOrders) {
  auto order = [](RootLabel l, int n) { return diagram_automorphisms(build_root_system(l, n)).size(); };
  EXPECT_EQ(order(RootLabel::A, 1), 1u);
  EXPECT_EQ(order(RootLabel::A, 5), 2u);
  EXPECT_EQ(order(RootLabel::B, 4), 1u);
  EXPECT_EQ(order(RootLabel::D, 5), 2u);
  EXPECT_EQ(order(RootLabel::E6, 6), 2u);
  EXPECT_EQ(order(RootLabel::E7, 7), 1u);
  EXPECT_EQ(order(RootLabel::F4, 4), 1u);
}

TEST(TypeIV, Examples) {
  auto su7 = classify_type4(RootLabel::A, 6);
  EXPECT_EQ(su7.verdict, Verdict::OR);
  EXPECT_EQ(su7.justification.kind, JustificationKind::DiagramParityOdd);
  EXPECT_EQ(classify_type4(RootLabel::A, 4).verdict, Verdict::OP);
  EXPECT_EQ(classify_type4(RootLabel::D, 4).verdict, Verdict::OR);
  EXPECT_EQ(classify_type4("E", 7).justification.kind, JustificationKind::OddDimension);
  EXPECT_EQ(classify_type4("E6", 6).verdict, Verdict::OP);
}

TEST(TypeIV, SweepMatchesCharacterization) {
  for (const auto& tc : all_types_up_to_rank8()) {
    auto c = classify_type4(tc.label, tc.rank);
    bool expect_or = type4_reversing_expected(tc.label, tc.rank);
    EXPECT_EQ(c.verdict == Verdict::OR, expect_or) << to_string(tc.label) << tc.rank;
    EXPECT_EQ(is_existence(c.justification.kind), c.verdict == Verdict::OR);
  }
}
