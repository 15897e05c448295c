#include <gtest/gtest.h>

#include "support/matrix.hpp"

using namespace ivlab;

namespace {

const char* const kRings[] = {"dedekind{p,q,r}",
                              "valuation{group=lexZ(1)}",
                              "valuation{group=lexZ(3)}",
                              "valuation{group=lexZ(omega)}",
                              "valuation{group=lexZ(omega), omegabound=9}",
                              "valuation{group=Q}",
                              "monomial{vars=[x,y,z]}"};

std::string errorAt(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Text, ParseExamples) {
  const Ring m = text::parseRing("monomial{x,y,z}");
  EXPECT_EQ(m, text::parseRing("monomial{vars=[x,y,z]}"));
  const Module ex = text::parseModule("(x^2*z, z^2*y, y^2*x)", m);
  EXPECT_EQ(std::get<MonomialModule>(ex), MonomialModule::generated({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}));

  const Ring d = text::parseRing("dedekind{p,q}");
  const auto& pq = std::get<DedekindModule>(text::parseModule("p^2*q", d));
  EXPECT_EQ(pq.exponent("p"), 2);
  EXPECT_EQ(pq.exponent("q"), 1);
  EXPECT_EQ(std::get<DedekindModule>(text::parseModule("p^2*q^-inf", d)).exponent("q"), kNegInf);

  const Ring v = text::parseRing("valuation{group=lexZ(2)}");
  const auto& c = std::get<CutModule>(text::parseModule("principal(0,5)", v));
  EXPECT_EQ(c, CutModule::principal(GroupElement::lex(ValueGroup::lexZ(2), {0, 5})));
  EXPECT_FALSE(c.strict());
}

TEST(Text, RingsAndElementsRoundTrip) {
  for (const char* s : kRings) {
    const Ring r = text::parseRing(s);
    EXPECT_EQ(text::parseRing(text::print(r)), r) << s;
    if (const auto* v = asValuation(r))
      for (const auto& x : sampleElements(v->group(), 5, 3, 30))
        EXPECT_EQ(text::parseElement(text::print(x), v->group()), x) << s;
  }
}

TEST(Text, ModulesRoundTrip) {
  for (const char* s : kRings) {
    const Ring r = text::parseRing(s);
    Sampler sm(r, SampleConfig{40, 3, 3, 3, 3});
    std::vector<Module> all = sm.modules();
    for (const auto& i : sm.ideals()) all.push_back(i);
    for (const auto& m : all) {
      const std::string p = text::print(r, m);
      EXPECT_TRUE(equals(r, text::parseModule(p, r), m)) << s << " " << p;
      EXPECT_EQ(text::print(r, text::parseModule(p, r)), p);
    }
  }
}

TEST(Text, ValuationsOpsAndChainsRoundTrip) {
  for (const auto& b : matrix::build()) {
    const std::string p = text::print(b.nu);
    const IdealValuation back = text::parseValuation(p, b.ring);
    EXPECT_EQ(text::print(back), p) << b.name;
    Sampler s(b.ring, SampleConfig{30, 2, 3, 3, 3});
    for (const auto& i : s.ideals()) EXPECT_EQ(evaluate(back, i), evaluate(b.nu, i)) << b.name;

    const SemistarChain c = chainFromValuation(b.nu);
    EXPECT_EQ(text::print(text::parseChain(text::print(c), b.ring)), text::print(c)) << b.name;
    const SemistarOp op = levelOp(b.nu, 2);
    EXPECT_EQ(text::print(text::parseOp(text::print(op), b.ring)), text::print(op)) << b.name;
    if (b.nu.prime) EXPECT_EQ(text::parsePrimeValuation(text::print(*b.nu.prime), b.ring), *b.nu.prime);
  }
  const Ring d = text::parseRing("dedekind{p,q}");
  for (const char* s : {"d", "e", "v", "w", "spectral{0,p}", "fromLS{gens[p*q]}", "fromLS{primecut(q)}"}) {
    const SemistarOp op = text::parseOp(s, d);
    EXPECT_EQ(text::print(text::parseOp(text::print(op), d)), text::print(op)) << s;
  }
  const Ring q = text::parseRing("valuation{group=Q}");
  const SemistarOp fv = text::parseOp("fromLS{filter(maxideal)}", q);
  EXPECT_EQ(text::print(text::parseOp(text::print(fv), q)), text::print(fv));
}

TEST(Text, ErrorPositions) {
  const Ring d = text::parseRing("dedekind{p,q}");
  EXPECT_EQ(errorAt([&] { text::parseModule("p^2*\n  s", d); }), "unknown prime 's' at 2:3");
  EXPECT_EQ(errorAt([&] { text::parseRing("dedekind{p,"); }), errorAt([&] { text::parseRing("dedekind{p,"); }));
  EXPECT_NE(errorAt([&] { text::parseRing("dedekind{p,"); }), "no error");
  EXPECT_NE(errorAt([&] { text::parseRing("polynomial{x}"); }), "no error");
  EXPECT_NE(errorAt([&] { text::parseModule("principal(1,2,3)", text::parseRing("valuation{group=lexZ(2)}")); }),
            "no error");
  EXPECT_NE(errorAt([&] { text::parseModule("(x^2*w)", text::parseRing("monomial{x,y}")); }), "no error");
  EXPECT_NE(errorAt([&] { text::parseValuation("primes{p=1}", d); }), "no error");
  EXPECT_NE(errorAt([&] { text::parseModule("p^2 q", d); }), "no error");
}
