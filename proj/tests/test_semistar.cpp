#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/matrix.hpp"
#include "support/oracles.hpp"

using namespace ivlab;

namespace {

Ring ring(const char* s) { return text::parseRing(s); }
Module ideal(const Ring& r, const std::string& s) { return text::parseModule(s, r); }
IdealValuation val(const Ring& r, const std::string& s) { return text::parseValuation(s, r); }
SemistarOp op(const Ring& r, const std::string& s) { return text::parseOp(s, r); }

/// x in union over m of (I :_K q^m), searched up to `reach`.
bool inUnionOverPowers(const DedekindRing& d, const DedekindModule& i, const std::string& q,
                       const oracle::Divisor& x, std::int64_t reach) {
  for (std::int64_t m = 0; m <= reach; ++m) {
    oracle::Divisor y = x;
    y[q] += m;
    if (oracle::inDedekind(d, i, y)) return true;
  }
  return false;
}

/// x in union over principal J = yR with nu(J) >= n of (I :_K J).
bool inLevelUnion(const IdealValuation& nu, ExtNat n, const CutModule& i, const GroupElement& x) {
  const ValueGroup& g = x.group();
  if (i.isFullField()) return true;
  if (i.isZero()) return false;
  std::vector<GroupElement> anchors{GroupElement::zero(g), subtract(i.threshold(), x)};
  for (const auto& y : oracle::probes(anchors, oracle::depthOf(anchors) + 2)) {
    if (compare(y, GroupElement::zero(g)) < 0) continue;
    if (evaluate(nu, CutModule::principal(y)) >= n && i.contains(add(x, y))) return true;
  }
  return false;
}

}  // namespace

TEST(Semistar, LocalizingSystemMembership) {
  const Ring d = ring("dedekind{p,q}");
  EXPECT_TRUE(lsMembership(generatedByFG(d, {ideal(d, "q")}), ideal(d, "q^2")));
  EXPECT_FALSE(lsMembership(generatedByFG(d, {ideal(d, "q")}), ideal(d, "p*q")));
  const Ring v = ring("valuation{group=lexZ(2)}");
  EXPECT_FALSE(lsMembership(primeCut(v, ValuationPrime{1}), ideal(v, "prime(1)")));
  EXPECT_TRUE(lsMembership(primeCut(v, ValuationPrime{1}), ideal(v, "principal(0,3)")));
  const Ring m = ring("monomial{vars=[x,y,z]}");
  EXPECT_TRUE(lsMembership(valuationLevel(val(m, "pgrade"), 2), ideal(m, "(x, y)")));
  EXPECT_FALSE(lsMembership(valuationLevel(val(m, "pgrade"), 2), ideal(m, "(x*y, x*z)")));
}

TEST(Semistar, ClosureExamples) {
  const Ring d = ring("dedekind{p,q}");
  const IdealValuation nu = val(d, "primes{p=1,q=3}");
  const Module e = ideal(d, "p^2*q");
  EXPECT_TRUE(equals(d, closure(levelOp(nu, 2), e), ideal(d, "p^2*q^-inf")));
  EXPECT_TRUE(isFullField(closure(opE(d), e)));
  EXPECT_TRUE(equals(d, closure(opD(d), e), e));
  EXPECT_TRUE(isZero(closure(levelOp(nu, 2), zeroModule(d))));

  const Ring m = ring("monomial{vars=[x,y,z]}");
  EXPECT_EQ(text::print(m, closure(op(m, "level(pgrade, 3)"), ideal(m, "(x^2*z, z^2*y, y^2*x)"))),
            "(y*z^2, x*y*z, x^2*z, x*y^2)");
}

TEST(Semistar, DedekindLevelClosureIsUnionOverColons) {
  const Ring r = ring("dedekind{p,q}");
  const auto& d = std::get<DedekindRing>(r);
  const IdealValuation nu = val(r, "primes{p=1,q=3}");
  Sampler s(r, SampleConfig{20, 3, 3, 3, 3});
  const auto xs = oracle::divisorBox(d, 5);
  for (const auto& i : s.ideals()) {
    if (isZero(i)) continue;
    const DedekindModule c = std::get<DedekindModule>(closure(levelOp(nu, 2), i));
    for (const auto& x : xs)
      ASSERT_EQ(oracle::inDedekind(d, c, x), inUnionOverPowers(d, std::get<DedekindModule>(i), "q", x, 12));
  }
}

TEST(Semistar, ValuationLevelClosureIsUnionOverColons) {
  const std::pair<const char*, const char*> cases[] = {
      {"valuation{group=lexZ(2)}", "primeval{0:0, 1:1, max:3}"},
      {"valuation{group=lexZ(3)}", "primeval{0:0, 1:0, 2:2, max:inf}"},
      {"valuation{group=lexZ(3)}", "fromLS{primecut(1)}"},
  };
  for (const auto& [rs, vs] : cases) {
    const Ring r = ring(rs);
    const IdealValuation nu = val(r, vs);
    const ValueGroup& g = std::get<ValuationRing>(r).group();
    Sampler s(r, SampleConfig{16, 5, 3, 3, 3});
    const auto xs = sampleElements(g, 4, 9, 40);
    for (std::uint64_t n = 1; n <= 4; ++n)
      for (const auto& i : s.ideals()) {
        if (isZero(i)) continue;
        const CutModule c = std::get<CutModule>(closure(levelOp(nu, n), i));
        for (const auto& x : xs)
          ASSERT_EQ(c.contains(x), inLevelUnion(nu, n, std::get<CutModule>(i), x))
              << rs << " " << vs << " n=" << n << " I=" << text::print(r, i) << " x=" << x.str()
              << " closure=" << text::print(r, c);
      }
  }
}

TEST(Semistar, AxiomsOnOperations) {
  struct Case {
    const char* ring;
    const char* op;
  };
  const Case cases[] = {
      {"dedekind{p,q}", "d"},
      {"dedekind{p,q}", "e"},
      {"dedekind{p,q}", "v"},
      {"dedekind{p,q}", "spectral{0,p}"},
      {"dedekind{p,q}", "level(primes{p=1,q=3}, 2)"},
      {"dedekind{p,q}", "fromLS{gens[p*q]}"},
      {"valuation{group=lexZ(2)}", "spectral{0,1}"},
      {"valuation{group=lexZ(2)}", "level(primeval{0:0, 1:1, max:2}, 2)"},
      {"valuation{group=lexZ(2)}", "fromLS{primecut(1)}"},
      {"valuation{group=lexZ(omega)}", "spectral{0,3}"},
      {"valuation{group=Q}", "v"},
      {"monomial{vars=[x,y,z]}", "w"},
      {"monomial{vars=[x,y,z]}", "v"},
      {"monomial{vars=[x,y,z]}", "level(pgrade, 2)"},
      {"monomial{vars=[x,y,z]}", "level(pgrade, 3)"},
      {"monomial{vars=[x,y,z]}", "fromLS{gens[(x*y, z)]}"},
  };
  for (const auto& c : cases) {
    const Ring r = ring(c.ring);
    Sampler s(r, SampleConfig{40, 6, 3, 3, 3});
    const AxiomReport rep = checkSemistar(op(r, c.op), s);
    for (const auto& law : rep.laws) EXPECT_TRUE(law.pass) << c.ring << " " << c.op << ": " << law.law << " " << law.detail;
  }
}

TEST(Semistar, OpEquals) {
  const Ring d = ring("dedekind{p,q}");
  Sampler s(d, SampleConfig{20, 1, 3, 3, 3});
  const auto mods = s.modules();
  const auto diff = opDifference(opD(d), opE(d), mods);
  ASSERT_TRUE(diff.has_value());
  EXPECT_FALSE(equals(d, closure(opD(d), *diff), closure(opE(d), *diff)));
  EXPECT_TRUE(opEquals(op(d, "spectral{0,p,q}"), opD(d), mods));
  EXPECT_TRUE(opEquals(op(d, "spectral{0}"), opE(d), mods));

  const Ring m = ring("monomial{vars=[x,y,z]}");
  Sampler sm(m, SampleConfig{60, 2, 3, 3, 3});
  EXPECT_TRUE(opEquals(op(m, "level(pgrade, 2)"), opW(m), sm.modules()));
}

TEST(Semistar, PsiExamples) {
  const Ring d = ring("dedekind{p,q}");
  const IdealValuation nu = val(d, "primes{p=1,q=3}");
  const SemistarChain c = chainFromValuation(nu);
  const Module e = ideal(d, "p^2*q");
  EXPECT_TRUE(isTrivialOp(chainMember(c, 0)));
  EXPECT_TRUE(isFullField(closure(chainMember(c, 0), e)));
  EXPECT_TRUE(equals(d, closure(chainMember(c, 2), e), ideal(d, "p^2*q^-inf")));
  EXPECT_TRUE(equals(d, closure(chainMember(c, 4), e), e));

  const IdealValuation top = val(d, "primes{p=inf,q=inf}");
  for (std::uint64_t n = 0; n <= 5; ++n) EXPECT_TRUE(isFullField(closure(chainMember(chainFromValuation(top), n), e)));
}

TEST(Semistar, PsiInverseExamples) {
  const Ring d = ring("dedekind{p,q}");
  const SemistarChain c = text::parseChain("chain{prefix=[spectral{0}, spectral{0,p}, spectral{0,p,q}], tail=const}", d);
  const IdealValuation nu = valuationFromChain(c);
  EXPECT_EQ(evaluate(nu, ideal(d, "q^3")), ExtNat(1));
  EXPECT_EQ(evaluate(nu, ideal(d, "p")), ExtNat(0));
  EXPECT_EQ(evaluate(nu, zeroModule(d)), ExtNat(0));
  EXPECT_EQ(evaluate(nu, unitModule(d)), kInf);
  EXPECT_THROW(valuationFromChain(constantTailChain(d, {opD(d)})), ValidationError);
}

TEST(Semistar, PhiExamples) {
  const Ring d = ring("dedekind{p,q}");
  const PrimeValuation h = text::parsePrimeValuation("primeval{p:1, q:3}", d);
  const auto delta = spectralDelta(h, 1);
  ASSERT_EQ(delta.size(), 2u);
  EXPECT_TRUE(isZeroPrime(delta[0]));
  EXPECT_EQ(std::get<DedekindPrime>(delta[1]).label, "p");
  EXPECT_EQ(primeValuationFromSpectralChain(spectralChainFromPrimeValuation(h)), h);

  const Ring v = ring("valuation{group=lexZ(2)}");
  const PrimeValuation hv = text::parsePrimeValuation("primeval{0:0, 1:2, max:2}", v);
  const PrimeValuation back = primeValuationFromSpectralChain(spectralChainFromPrimeValuation(hv));
  EXPECT_EQ(back.value(ValuationPrime{1}), ExtNat(2));
  EXPECT_EQ(back, hv);
}

TEST(Semistar, ChainsDescend) {
  for (const auto& b : matrix::build()) {
    Sampler s(b.ring, SampleConfig{16, 3, 3, 3, 3});
    const LawResult res = checkDescending(chainFromValuation(b.nu), s.modules(), 6);
    EXPECT_TRUE(res.pass) << b.name << " " << res.detail;
  }
}

TEST(Semistar, ValuationRoundTripsPointwise) {
  for (const auto& b : matrix::build()) {
    const IdealValuation back = valuationFromChain(chainFromValuation(b.nu));
    Sampler s(b.ring, SampleConfig{40, 9, 3, 3, 3});
    for (const auto& i : s.ideals()) EXPECT_EQ(evaluate(back, i), evaluate(b.nu, i)) << b.name;
  }
}
