#include <gtest/gtest.h>

#include <random>

#include "rees/parser.hpp"
#include "rees/sequences.hpp"

using namespace rees;

namespace {

RingDescriptor xring(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return RingDescriptor{make_ring(v), {}};
}

std::vector<Polynomial> Ps(std::initializer_list<std::string> ss, const RingDescriptor& d) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_polynomial(s, d.ring));
  return out;
}

IdealHandle I(std::initializer_list<std::string> ss, const RingDescriptor& d) { return IdealHandle(d, Ps(ss, d)); }

// failure witnesses must certify the verdict by plain membership tests
void check_witness(const Verdict& v, const std::vector<Polynomial>& seq, const RingDescriptor& d) {
  ASSERT_FALSE(v.result);
  ASSERT_TRUE(v.fail_index.has_value());
  std::size_t i = *v.fail_index;
  std::vector<Polynomial> prev(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i - 1));
  IdealHandle Iprev(d, prev), Iall(d, seq);
  ASSERT_TRUE(v.witnesses.colon && v.witnesses.intersection && v.witnesses.expected);
  EXPECT_TRUE(ideal_equal(*v.witnesses.expected, Iprev));
  for (const auto& g : v.witnesses.intersection->gens()) {
    EXPECT_TRUE(Iall.contains(g));
    EXPECT_TRUE(v.witnesses.colon->contains(g));
  }
  bool escapes = false;
  for (const auto& g : v.witnesses.intersection->gens()) escapes = escapes || !Iprev.contains(g);
  EXPECT_TRUE(escapes);
}

}  // namespace

TEST(Regular, Examples) {
  auto d = xring(3);
  EXPECT_TRUE(is_regular_sequence(Ps({"x1", "x2", "x3"}, d), d).result);
  auto q = parse_ring("ring QQ[x1] mod x1^2;");
  auto v = is_regular_sequence(Ps({"x1"}, q), q);
  EXPECT_FALSE(v.result);
  EXPECT_EQ(v.fail_index, 1u);
  auto w = is_regular_sequence(Ps({"x1*x2", "x2*x3"}, d), d);
  EXPECT_FALSE(w.result);
  EXPECT_EQ(w.fail_index, 2u);
  EXPECT_TRUE(ideal_equal(*w.witnesses.colon, I({"x1"}, d)));
  EXPECT_FALSE(is_regular_sequence(Ps({"x1", "1"}, d), d).result);
}

TEST(Sequences, EmptyIsVacuous) {
  auto d = xring(2);
  for (const auto& v : {is_regular_sequence({}, d), is_d_sequence({}, d), is_weak_rel_reg({}, d), is_c_sequence({}, d),
                        is_almost_regular({}, d), is_unconditioned_d({}, d), is_m_sequence({}), is_interval_type({})}) {
    EXPECT_TRUE(v.result);
    ASSERT_FALSE(v.notes.empty());
    EXPECT_NE(v.notes.back().find("vacuous"), std::string::npos);
  }
}

TEST(DSequence, Examples) {
  auto d = xring(3);
  auto v = is_d_sequence(Ps({"x1*x2", "x2*x3"}, d), d);
  EXPECT_TRUE(v.result);
  EXPECT_EQ(v.message, "It is a d-sequence");

  auto s2 = Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d);
  auto f = is_d_sequence(s2, d);
  EXPECT_FALSE(f.result);
  EXPECT_EQ(f.message, "Not a d-sequence");
  EXPECT_EQ(f.fail_index, 3u);
  EXPECT_TRUE(ideal_equal(*f.witnesses.intersection, I({"x2*x3", "x1*x3", "x1*x2"}, d)));
  ASSERT_FALSE(f.details.empty());
  EXPECT_EQ(f.details[0], "Fails at colon of {a1, a2} with a3");
  check_witness(f, s2, d);

  auto d4 = xring(4);
  auto s12 = Ps({"x2*x4", "x1*x4", "x1*x3"}, d4);
  auto g = is_d_sequence(s12, d4);
  EXPECT_FALSE(g.result);
  EXPECT_EQ(g.fail_index, 2u);
  EXPECT_TRUE(ideal_equal(*g.witnesses.intersection, I({"x2*x4", "x1*x2*x3"}, d4)));
  check_witness(g, s12, d4);
}

TEST(DSequence, ZeroDivisorFirstElement) {
  auto q = parse_ring("ring QQ[x1, x2] mod x1^2;");
  auto v = is_d_sequence(Ps({"x1", "x2"}, q), q);
  bool noted = false;
  for (const auto& n : v.notes) noted = noted || n.find("zero divisor") != std::string::npos;
  EXPECT_TRUE(noted);
  auto z = is_d_sequence(Ps({"x2", "x1^2"}, q), q);
  EXPECT_NE(std::find(z.notes.begin(), z.notes.end(), "element a2 is zero"), z.notes.end());
}

TEST(WeakRelReg, Examples) {
  auto d = xring(3);
  EXPECT_TRUE(is_weak_rel_reg(Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d), d).result);
  auto d2 = xring(2);
  auto s = Ps({"x1^2", "x2^2", "x1*x2"}, d2);
  auto v = is_weak_rel_reg(s, d2);
  EXPECT_FALSE(v.result);
  EXPECT_EQ(v.fail_index, 3u);
  EXPECT_TRUE(ideal_equal(*v.witnesses.intersection, IdealHandle(d2, s)));
  EXPECT_TRUE(is_weak_rel_reg(Ps({"x1", "x2", "x3"}, d), d).result);
}

TEST(CSequence, Examples) {
  auto d = xring(3);
  auto v = is_c_sequence(Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d), d);
  EXPECT_TRUE(v.result);
  EXPECT_EQ(v.message, "It is a c-seq");
  auto f = is_c_sequence(Ps({"x1*x2", "x2*x3", "x1*x3"}, d), d);
  EXPECT_FALSE(f.result);
  EXPECT_EQ(f.message, "Not a c-seq");
  EXPECT_EQ(f.fail_index, 2u);
  EXPECT_TRUE(ideal_equal(*f.witnesses.intersection, I({"x1*x2", "x1^2*x3"}, d)));
  EXPECT_TRUE(is_c_sequence(Ps({"x1", "x2", "x3"}, d), d).result);

  auto d2 = xring(2);
  auto n = is_c_sequence(Ps({"x1^2", "x2^2", "x1*x2"}, d2), d2);
  EXPECT_FALSE(n.result);
  EXPECT_NE(std::find(n.notes.begin(), n.notes.end(), "not linear type"), n.notes.end());
  auto q = parse_ring("ring QQ[x1] mod x1^2;");
  EXPECT_THROW(is_c_sequence(Ps({"x1"}, q), q), std::invalid_argument);
}

TEST(CSequence, DirectCheckAgrees) {
  auto d = xring(3);
  for (auto seq : {Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d), Ps({"x1*x2", "x2*x3", "x1*x3"}, d),
                   Ps({"x1*x2", "x2*x3"}, d), Ps({"x1", "x2^2", "x3"}, d)})
    EXPECT_EQ(is_c_sequence_direct(seq, d, 3).result, is_c_sequence(seq, d).result) << to_string(seq);
}

TEST(SeqLinearType, Examples) {
  auto d = xring(3);
  EXPECT_TRUE(is_seq_linear_type(Ps({"x1*x2", "x2*x3", "x1*x3"}, d), d).result);
  auto d2 = xring(2);
  auto v = is_seq_linear_type(Ps({"x1^2", "x2^2", "x1*x2"}, d2), d2);
  EXPECT_FALSE(v.result);
  EXPECT_EQ(v.fail_index, 3u);
  EXPECT_TRUE(is_seq_linear_type(Ps({"x1^3 + x2*x3"}, d), d).result);
}

TEST(AlmostRegular, Examples) {
  auto q = parse_ring("ring QQ[x1] mod x1^2;");
  EXPECT_TRUE(is_almost_regular(Ps({"x1"}, q), q).result);
  auto d = xring(3);
  auto v = is_almost_regular(Ps({"x1*x2", "x2*x3"}, d), d);
  EXPECT_FALSE(v.result);
  EXPECT_EQ(v.fail_index, 2u);
  EXPECT_TRUE(ideal_equal(*v.witnesses.colon, I({"x1"}, d)));
  EXPECT_TRUE(ideal_equal(*v.witnesses.expected, I({"x1*x2"}, d)));
  EXPECT_TRUE(is_almost_regular(Ps({"x1", "x2", "x3"}, d), d).result);
}

TEST(AlmostRegular, BlocksOnBigradedRing) {
  auto d = parse_ring("ring QQ[x1, y1] xdeg x* ydeg y*;");
  // (x1^2 : x1*y1) = <x1>: killed by a power of x1, not of y1
  auto s = Ps({"x1^2", "x1*y1"}, d);
  EXPECT_TRUE(is_almost_regular(s, d, SaturationBlock::x).result);
  EXPECT_FALSE(is_almost_regular(s, d, SaturationBlock::y).result);
  EXPECT_FALSE(is_almost_regular(s, d, SaturationBlock::all).result);
}

// Rees presentations as quotient rings: when the y images form a
// d-sequence they are almost regular with respect to the y-block.
TEST(AlmostRegular, YImagesInReesAlgebra) {
  auto d = xring(3);
  for (auto gens : {Ps({"x1*x2", "x2*x3"}, d), Ps({"x1", "x2"}, d), Ps({"x1^2", "x2^2", "x1*x2"}, xring(2)),
                    Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d)}) {
    auto P = rees_ideal(gens);
    RingDescriptor A{P.ring(), P.J.gens()};
    std::vector<Polynomial> ys;
    for (std::size_t j = 0; j < P.ny; ++j) ys.push_back(Polynomial::variable(P.ring(), P.nx + j));
    if (is_d_sequence(ys, A).result) EXPECT_TRUE(is_almost_regular(ys, A, SaturationBlock::y).result) << to_string(gens);
  }
}

TEST(SSequence, Examples) {
  auto d2 = xring(2);
  EXPECT_TRUE(is_s_sequence(Ps({"x1^2", "x2^2", "x1*x2"}, d2), d2, true).result);
  auto d9 = xring(9);
  auto v = is_s_sequence(Ps({"x1*x2*x3", "x4*x5*x6", "x2*x3*x7", "x7*x8*x9"}, d9), d9, true);
  EXPECT_FALSE(v.result);
  EXPECT_EQ(v.message, "Not a strong s-sequence");
  EXPECT_TRUE(is_s_sequence(Ps({"x1", "x2"}, d2), d2, false).result);
  EXPECT_TRUE(is_s_sequence(Ps({"x1", "x2"}, d2), d2, true).result);
}

// For (x1, x2): J = <x2*y1 - x1*y2>; with y1 < y2 the leading term is
// x1*y2, and L_2 = (x1 : x2) = <x1>, so in(J) = <L_2 y_2>.
TEST(SSequence, RegularPairInitialIdeal) {
  auto d2 = xring(2);
  auto P = sym_ideal(Ps({"x1", "x2"}, d2));
  auto tau = MonomialOrder::y_revlex(P.y_mask());
  auto lm = P.J.gb(tau).leading_monomials();
  ASSERT_EQ(lm.size(), 1u);
  Monomial x1y2(4);
  x1y2.set(0, 1);
  x1y2.set(3, 1);
  EXPECT_EQ(lm[0], x1y2);
}

TEST(MSequence, Examples) {
  auto d9 = xring(9);
  auto v = is_m_sequence(Ps({"x1*x2*x3", "x4*x5*x6", "x2*x3*x7", "x7*x8*x9"}, d9));
  EXPECT_TRUE(v.result);
  EXPECT_EQ(v.details.size(), 4u);
  auto d4 = xring(4);
  EXPECT_TRUE(is_m_sequence(Ps({"x2*x4", "x1*x4", "x1*x3"}, d4)).result);
  EXPECT_TRUE(is_m_sequence(Ps({"x1^2*x3"}, d4)).result);
  // x1*x2 then x1, x2 separately: neither order of {x1, x2} works
  auto f = is_m_sequence(Ps({"x1*x2", "x1*x3", "x2*x4"}, d4));
  EXPECT_FALSE(f.result);
  EXPECT_EQ(f.fail_index, 1u);
  EXPECT_THROW(is_m_sequence(Ps({"x1 + x2"}, d4)), std::invalid_argument);
}

TEST(IntervalType, Examples) {
  auto d4 = xring(4);
  EXPECT_TRUE(is_interval_type(Ps({"x2*x4", "x1*x4", "x1*x3"}, d4)).result);
  auto d5 = xring(5);
  EXPECT_FALSE(is_interval_type(Ps({"x1*x2", "x3*x4", "x1*x5"}, d5)).result);
  auto d9 = xring(9);
  EXPECT_FALSE(is_interval_type(Ps({"x1*x2*x3", "x4*x5*x6", "x2*x3*x7", "x7*x8*x9"}, d9)).result);
}

TEST(MCriterion, Examples) {
  auto d3 = xring(3);
  auto s = Ps({"x1*x2", "x2*x3"}, d3);
  EXPECT_TRUE(msequence_c_criterion(s).result);
  EXPECT_TRUE(is_c_sequence(s, d3).result);
  auto d4 = xring(4);
  auto t = Ps({"x2*x4", "x1*x4", "x1*x3"}, d4);
  EXPECT_EQ(msequence_c_criterion(t).result, is_c_sequence(t, d4).result);
  EXPECT_TRUE(msequence_c_criterion(Ps({"x1*x3"}, d4)).result);
  EXPECT_THROW(msequence_c_criterion(Ps({"x1*x2", "x1*x3", "x2*x4"}, d4)), std::domain_error);
}

TEST(Unconditioned, Examples) {
  auto d2 = xring(2);
  auto v = is_unconditioned_d(Ps({"x1", "x2"}, d2), d2);
  EXPECT_TRUE(v.result);
  auto d3 = xring(3);
  auto f = is_unconditioned_d(Ps({"x2*x3", "x1*x3 + x1*x2", "x1*x2"}, d3), d3);
  EXPECT_FALSE(f.result);
  EXPECT_EQ(f.message, "Not an unconditioned d-sequence");
  EXPECT_THROW(is_unconditioned_d(std::vector<Polynomial>(8, Polynomial::variable(d2.ring, 0)), d2), std::invalid_argument);
}

TEST(Sequences, CharacteristicNote) {
  auto d = parse_ring("ring GF(7)[x1..x3];");
  auto v = is_d_sequence(Ps({"x1*x2", "x2*x3"}, d), d);
  EXPECT_NE(std::find(v.notes.begin(), v.notes.end(), "valid in characteristic 7"), v.notes.end());
}

namespace {

std::vector<Polynomial> random_monomials(const RingDescriptor& d, std::mt19937_64& rng, int count, int maxexp) {
  std::uniform_int_distribution<int> e(0, maxexp);
  std::vector<Polynomial> out;
  auto one = FieldElem::one(d.ring->field());
  while (static_cast<int>(out.size()) < count) {
    Monomial m(d.ring->nvars());
    for (std::size_t k = 0; k < m.size(); ++k) m.set(k, e(rng));
    if (m.is_one()) continue;
    out.push_back(Polynomial::term(d.ring, one, m));
  }
  return out;
}

}  // namespace

// The implication chain between the deciders on random monomial sequences.
TEST(Sequences, ImplicationChainRandom) {
  std::mt19937_64 rng(31337);
  auto d = xring(4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto s = random_monomials(d, rng, std::uniform_int_distribution<int>(2, 3)(rng), 2);
    bool reg = is_regular_sequence(s, d).result;
    bool dseq = is_d_sequence(s, d).result;
    bool cseq = is_c_sequence(s, d).result;
    bool wrr = is_weak_rel_reg(s, d).result;
    bool lt = is_seq_linear_type(s, d).result;
    if (reg) {
      EXPECT_TRUE(dseq && is_almost_regular(s, d).result) << to_string(s);
    }
    if (dseq) {
      EXPECT_TRUE(cseq) << to_string(s);
    }
    if (cseq) {
      EXPECT_TRUE(lt && wrr) << to_string(s);
    }
    if (is_interval_type(s).result) {
      EXPECT_TRUE(is_m_sequence(s).result) << to_string(s);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

// The M-sequence criterion agrees with the c-sequence decider.
TEST(MCriterion, AgreesWithCSequenceRandom) {
  std::mt19937_64 rng(4242);
  auto d = xring(5);
  int msequences = 0;
  for (int trial = 0; trial < 400 && msequences < 40; ++trial) {
    auto s = random_monomials(d, rng, std::uniform_int_distribution<int>(2, 4)(rng), 1);
    if (!is_m_sequence(s).result) continue;
    ++msequences;
    EXPECT_EQ(msequence_c_criterion(s).result, is_c_sequence(s, d).result) << to_string(s);
  }
  EXPECT_GE(msequences, 20);
}
