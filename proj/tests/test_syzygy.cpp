#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rees/module.hpp"
#include "rees/parser.hpp"

using namespace rees;

namespace {

std::vector<Polynomial> Ps(std::initializer_list<std::string> ss, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_polynomial(s, r));
  return out;
}

Polynomial combination(const std::vector<Polynomial>& s, const std::vector<Polynomial>& gens) {
  Polynomial acc(gens.front().ring());
  for (std::size_t j = 0; j < gens.size(); ++j) acc += s[j] * gens[j];
  return acc;
}

}  // namespace

TEST(Syzygies, Koszul) {
  auto r = make_ring({"x1", "x2"});
  auto s = syzygies(Ps({"x1", "x2"}, r), MonomialOrder::grevlex());
  ASSERT_EQ(s.gens.size(), 1u);
  auto v = s.gens[0];
  EXPECT_TRUE((v[0] == parse_polynomial("x2", r) && v[1] == parse_polynomial("-x1", r)) ||
              (v[0] == parse_polynomial("-x2", r) && v[1] == parse_polynomial("x1", r)));
}

TEST(Syzygies, SingleGenerator) {
  auto r = make_ring({"x1", "x2"});
  auto s = syzygies(Ps({"x1*x2 + x2^2"}, r), MonomialOrder::grevlex());
  EXPECT_TRUE(s.gens.empty());
}

TEST(Syzygies, CyclePathCubics) {
  auto r = make_ring({"x1", "x2", "x3", "x4", "x5"});
  auto gens = Ps({"x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x4*x5*x1", "x5*x1*x2"}, r);
  auto s = syzygies(gens, MonomialOrder::grevlex());
  EXPECT_EQ(s.gens.size(), 5u);
  for (const auto& v : s.gens) {
    EXPECT_TRUE(combination(v, gens).is_zero());
    for (const auto& e : v) EXPECT_TRUE(e.is_zero() || e.total_degree() == 1);
  }
  // each linear relation x_{i+3} m_i - x_i m_{i+1} lies in the computed module
  FreeModule A(r, {3, 3, 3, 3, 3});
  std::vector<ModVec> syz;
  for (const auto& v : s.gens) syz.push_back(A.from_columns(v));
  auto gb = module_groebner(A, syz, {false, false});
  for (int i = 0; i < 5; ++i) {
    std::vector<Polynomial> col(5, Polynomial(r));
    col[i] = Polynomial::variable(r, (i + 3) % 5);
    col[(i + 1) % 5] = -Polynomial::variable(r, i);
    ASSERT_TRUE(combination(col, gens).is_zero());
    EXPECT_TRUE(module_normal_form(A, gb.basis, A.from_columns(col)).empty());
  }
}

TEST(Syzygies, RandomAnnihilateAndSpan) {
  std::mt19937_64 rng(99);
  auto r = make_ring({"a", "b", "c"});
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> deg(1, 3), cnt(2, 4);
    std::vector<Polynomial> gens;
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) {
      auto f = oracle::random_form(r, deg(rng), rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.size() < 2) continue;
    auto s = syzygies(gens, MonomialOrder::grevlex());
    for (const auto& v : s.gens) EXPECT_TRUE(combination(v, gens).is_zero());
    // every Koszul pair relation lies in the module
    std::vector<int> w;
    for (const auto& g : gens) w.push_back(g.total_degree());
    FreeModule A(r, w);
    std::vector<ModVec> syz;
    for (const auto& v : s.gens) syz.push_back(A.from_columns(v));
    auto gb = module_groebner(A, syz, {false, false});
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        std::vector<Polynomial> col(gens.size(), Polynomial(r));
        col[i] = gens[j];
        col[j] = -gens[i];
        EXPECT_TRUE(module_normal_form(A, gb.basis, A.from_columns(col)).empty());
      }
  }
}

TEST(Syzygies, NonHomogeneousLex) {
  auto r = make_ring({"x", "y", "z"});
  auto gens = Ps({"y - x^2", "z - x^3", "x*y - z"}, r);
  auto s = syzygies(gens, MonomialOrder::lex());
  EXPECT_FALSE(s.gens.empty());
  for (const auto& v : s.gens) EXPECT_TRUE(combination(v, gens).is_zero());
}

TEST(ModuleGB, PruneFindsMinimalGenerators) {
  auto r = make_ring({"x", "y"});
  FreeModule R1(r, {0});
  std::vector<ModVec> in;
  for (auto s : {"x^2", "x*y", "x^2*y", "y^2", "x^2 + x*y"}) in.push_back(R1.from_columns({parse_polynomial(s, r)}));
  auto res = module_groebner(R1, in, {true, true});
  EXPECT_EQ(res.kept, (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_GE(res.syzygies.size(), 2u);
}
