#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace ivlab;

namespace {

Ring ring(const char* s) { return text::parseRing(s); }
Module ideal(const Ring& r, const std::string& s) { return text::parseModule(s, r); }

const ValuationRing& vring(const Ring& r) { return std::get<ValuationRing>(r); }

std::vector<ValuationPrime> levels(std::initializer_list<std::size_t> ks) {
  std::vector<ValuationPrime> out;
  for (auto k : ks) out.push_back({k});
  return out;
}

/// Intersection of I R_P over the members, computed member by member.
Module intersectMembers(const OpFamily& fam, const Module& e) {
  const Ring r = fam.ring;
  Module acc = fullField(r);
  for (const auto& p : fam.primes) acc = intersect(r, acc, localize(r, e, p));
  return acc;
}

}  // namespace

TEST(Analysis, FamilyClosureExamples) {
  const Ring r3 = ring("valuation{group=lexZ(3)}");
  const OpFamily fam = OpFamily::finite(vring(r3), levels({1, 2}));
  const Module e = ideal(r3, "principal(0,0,4)");
  EXPECT_TRUE(equals(r3, familyClosure(fam, e), localize(r3, e, ValuationPrime{2})));
  EXPECT_TRUE(equals(r3, familyClosure(fam, unitModule(r3)), localize(r3, unitModule(r3), ValuationPrime{2})));
}

TEST(Analysis, FamilyClosureIsIntersectionOfMembers) {
  for (const char* rs : {"valuation{group=lexZ(2)}", "valuation{group=lexZ(3)}", "valuation{group=lexZ(omega)}"}) {
    const Ring r = ring(rs);
    Sampler s(r, SampleConfig{30, 4, 3, 3, 3});
    const auto mods = s.modules();
    const std::vector<std::vector<ValuationPrime>> fams = {levels({1}), levels({0, 1}), levels({1, 2}),
                                                           levels({0, 2, 1})};
    for (const auto& ps : fams) {
      const OpFamily fam = OpFamily::finite(vring(r), ps);
      for (const auto& e : mods) EXPECT_TRUE(equals(r, familyClosure(fam, e), intersectMembers(fam, e))) << rs;
    }
  }
}

TEST(Analysis, IncreasingFamilyMatchesLimitOracle) {
  const Ring r = ring("valuation{group=lexZ(omega)}");
  const auto& vr = vring(r);
  const OpFamily fam = OpFamily::sequence(vr, {}, OpFamily::Tail::StrictlyIncreasing);
  Sampler s(r, SampleConfig{30, 8, 3, 3, 3});
  const auto xs = sampleElements(vr.group(), 4, 3, 50);
  for (const auto& e : s.modules()) {
    if (isFullField(e)) continue;
    const CutModule c = std::get<CutModule>(familyClosure(fam, e));
    for (const auto& x : xs) ASSERT_EQ(c.contains(x), oracle::inLimitLocalization(vr, std::get<CutModule>(e), x));
  }
  const CutModule lead = std::get<CutModule>(familyClosure(fam, ideal(r, "principal({1:1})")));
  EXPECT_TRUE(lead.contains(GroupElement::unitVector(vr.group(), 1)));
  EXPECT_FALSE(lead.contains(GroupElement::zero(vr.group())));
}

TEST(Analysis, FiniteTypeExamples) {
  const Ring r3 = ring("valuation{group=lexZ(3)}");
  const FiniteTypeReport a = isFiniteType(OpFamily::finite(vring(r3), levels({1, 3})));
  EXPECT_TRUE(a.verdict);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(std::get<ValuationPrime>(*a.witness).level, 3u);

  const FiniteTypeReport one = isFiniteType(OpFamily::finite(vring(r3), levels({2})));
  EXPECT_TRUE(one.verdict);
  EXPECT_EQ(std::get<ValuationPrime>(*one.witness).level, 2u);

  const Ring w = ring("valuation{group=lexZ(omega)}");
  const FiniteTypeReport inc = isFiniteType(OpFamily::sequence(vring(w), levels({1, 2}), OpFamily::Tail::StrictlyIncreasing));
  EXPECT_FALSE(inc.verdict);
  EXPECT_FALSE(inc.witness.has_value());
  bool obstruction = false;
  for (const auto& [k, v] : inc.diagnostics)
    if (k.rfind("M closes to R", 0) == 0) obstruction = v == "true";
  EXPECT_TRUE(obstruction);

  const FiniteTypeReport cst = isFiniteType(OpFamily::sequence(vring(w), levels({1, 4}), OpFamily::Tail::Constant));
  EXPECT_TRUE(cst.verdict);
  EXPECT_EQ(std::get<ValuationPrime>(*cst.witness).level, 4u);

  EXPECT_THROW(OpFamily::sequence(vring(r3), {}, OpFamily::Tail::StrictlyIncreasing), ValidationError);
}

TEST(Analysis, FiniteTypeThreeWayAgreement) {
  const Ring r = ring("valuation{group=lexZ(3)}");
  Sampler s(r, SampleConfig{40, 2, 3, 3, 3});
  const auto ideals = s.ideals();
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<ValuationPrime> ps;
    for (std::size_t k = 0; k < 4; ++k)
      if (mask & (1u << k)) ps.push_back({k});
    const OpFamily fam = OpFamily::finite(vring(r), ps);
    const FiniteTypeReport rep = isFiniteType(fam);
    // Some member alpha reproduces the family closure.
    bool memberWitness = false;
    for (const auto& p : ps) {
      bool all = true;
      for (const auto& i : ideals)
        if (!equals(r, familyClosure(fam, i), localize(r, i, p))) all = false;
      memberWitness = memberWitness || all;
    }
    // The intersection of the member systems has the prime-cut form at the witness.
    bool cutForm = rep.primeCut.has_value();
    if (cutForm) {
      const LocalizingSystem f = primeCut(r, *rep.primeCut);
      for (const auto& i : ideals) {
        bool inAll = true;
        for (const auto& p : ps)
          if (!equals(r, localize(r, i, p), localize(r, unitModule(r), p))) inAll = false;
        if (!isZero(i) && inAll != lsMembership(f, i)) cutForm = false;
      }
    }
    EXPECT_EQ(rep.verdict, memberWitness) << mask;
    EXPECT_EQ(rep.verdict, cutForm) << mask;
  }
}

TEST(Analysis, PrimeCutSystemsHavePrincipalMembers) {
  const Ring r = ring("valuation{group=lexZ(3)}");
  Sampler s(r, SampleConfig{40, 5, 3, 3, 3});
  for (std::size_t k = 0; k < 3; ++k) {
    const LocalizingSystem f = primeCut(r, ValuationPrime{k});
    for (const auto& i : s.ideals()) {
      if (!lsMembership(f, i)) continue;
      bool found = false;
      for (const auto& j : s.fgSubideals(i))
        if (lsMembership(f, j)) found = true;
      EXPECT_TRUE(found) << text::print(r, i);
    }
  }
  const Ring q = ring("valuation{group=Q}");
  const LocalizingSystem fv = principalFilter(q, ideal(q, "maxideal"));
  Sampler sq(q, SampleConfig{40, 5, 3, 3, 3});
  for (const auto& j : sq.fgSubideals(ideal(q, "maxideal"))) EXPECT_FALSE(lsMembership(fv, j));
}

TEST(Analysis, ChainEquivalenceExamples) {
  const Ring r2 = ring("valuation{group=lexZ(2)}");
  const auto a = chainEquivalences(text::parseChain("chain{prefix=[e, spectral{0,1}, d], tail=const}", r2));
  for (bool b : a.conditions) EXPECT_TRUE(b);
  EXPECT_TRUE(a.agree);
  ASSERT_TRUE(a.m.has_value());
  EXPECT_EQ(*a.m, 2u);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(std::get<ValuationPrime>(*a.witness).level, 2u);

  const Ring w = ring("valuation{group=lexZ(omega)}");
  const auto b = chainEquivalences(
      text::parseChain("chain{prefix=[e], tail=spectral(primeval{0:0, 1:1, tail:inc, max:inf})}", w));
  for (bool x : b.conditions) EXPECT_FALSE(x);
  EXPECT_TRUE(b.agree);
  EXPECT_FALSE(b.m.has_value());

  const Ring q = ring("valuation{group=Q}");
  for (const char* c : {"chain{prefix=[e], tail=const}", "chain{prefix=[e, d], tail=const}",
                        "chain{prefix=[e, e, e, d], tail=const}", "chain{prefix=[e], tail=level(primeval{0:0, max:3})}"}) {
    const auto rep = chainEquivalences(text::parseChain(c, q));
    for (bool x : rep.conditions) EXPECT_TRUE(x) << c;
  }
  EXPECT_THROW(chainEquivalences(text::parseChain("chain{prefix=[e, d], tail=const}", ring("dedekind{p}"))),
               UsageError);
}

TEST(Analysis, RangeBoundExamples) {
  const Ring r2 = ring("valuation{group=lexZ(2)}");
  Sampler s(r2, SampleConfig{80, 3, 3, 3, 3});
  const RangeReport a = rangeBound(text::parseValuation("primeval{0:0, 1:1, max:7}", r2), s);
  EXPECT_EQ(a.values, (std::vector<ExtNat>{0, 1, 7}));
  EXPECT_EQ(a.bound, 3u);
  EXPECT_TRUE(a.pass);
  ASSERT_EQ(a.primeChain.size(), 2u);
  EXPECT_EQ(std::get<ValuationPrime>(a.primeChain[0].second).level, 0u);
  EXPECT_EQ(std::get<ValuationPrime>(a.primeChain[1].second).level, 1u);

  const Ring q = ring("valuation{group=Q}");
  Sampler sq(q, SampleConfig{40, 3, 3, 3, 3});
  const RangeReport b = rangeBound(text::parseValuation("primeval{0:0, max:inf}", q), sq);
  EXPECT_LE(b.values.size(), 2u);
  EXPECT_TRUE(b.pass);

  const Ring r3 = ring("valuation{group=lexZ(3)}");
  Sampler s3(r3, SampleConfig{80, 3, 3, 3, 3});
  const RangeReport c = rangeBound(text::parseValuation("primeval{0:0, 1:0, 2:0, max:0}", r3), s3);
  EXPECT_EQ(c.values, (std::vector<ExtNat>{0}));

  const Ring w = ring("valuation{group=lexZ(omega)}");
  Sampler sw(w, SampleConfig{10, 3, 3, 3, 3});
  EXPECT_THROW(rangeBound(text::parseValuation("primeval{0:0, tail:const, max:1}", w), sw), UsageError);
}
