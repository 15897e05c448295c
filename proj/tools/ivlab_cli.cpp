#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivlab/ivlab.hpp"

using json = nlohmann::ordered_json;
using namespace ivlab;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Args {
  std::string ring, ideal, valuation, op, chain, family, format = "text";
  std::optional<std::string> n;
  std::size_t samples = 40;
  std::uint64_t seed = 1;
};

json extJson(ExtNat v) { return v.isInfinite() ? json("inf") : json(v.value()); }

json exponentJson(std::int64_t e) { return e == kNegInf ? json("neg_inf") : json(e); }

json moduleJson(const Ring& r, const Module& m) {
  json j;
  j["text"] = text::print(r, m);
  if (isZero(m)) j["kind"] = "zero";
  else if (isFullField(m)) j["kind"] = "K";
  if (auto* d = asDedekind(r)) {
    j["model"] = "dedekind";
    if (!j.contains("kind")) {
      json e = json::object();
      for (const auto& p : d->primes()) e[p] = exponentJson(std::get<DedekindModule>(m).exponent(p));
      j["exponents"] = e;
    }
  } else if (asValuation(r)) {
    j["model"] = "valuation";
  } else {
    j["model"] = "monomial";
    if (!j.contains("kind")) j["generators"] = std::get<MonomialModule>(m).gens();
  }
  return j;
}

Ring needRing(const Args& a) {
  if (a.ring.empty()) throw UsageError("--ring is required");
  return text::parseRing(a.ring);
}

Module needIdeal(const Args& a, const Ring& r) {
  if (a.ideal.empty()) throw UsageError("--ideal is required");
  return text::parseModule(a.ideal, r);
}

IdealValuation needValuation(const Args& a, const Ring& r) {
  if (a.valuation.empty()) throw UsageError("--valuation is required");
  return text::parseValuation(a.valuation, r);
}

ExtNat levelArg(const Args& a) {
  text::Reader in(*a.n);
  const ExtNat n = in.extNat();
  in.end();
  return n;
}

OpFamily parseFamily(const std::string& s, const ValuationRing& r) {
  text::Reader in(s);
  in.expect("levels");
  in.expect("=");
  in.expect("[");
  std::vector<ValuationPrime> ps;
  if (!in.accept("]")) {
    do {
      const PrimeRef p = text::parsePrime(in, r);
      ps.push_back(std::get<ValuationPrime>(p));
    } while (in.accept(","));
    in.expect("]");
  }
  OpFamily::Tail tail = OpFamily::Tail::Finite;
  if (in.accept(";")) {
    in.expect("tail");
    in.expect("=");
    if (in.accept("increasing")) tail = OpFamily::Tail::StrictlyIncreasing;
    else if (in.accept("constant")) tail = OpFamily::Tail::Constant;
    else in.expect("finite");
  }
  in.end();
  return OpFamily::sequence(r, ps, tail);
}

json lawJson(const Ring& r, const LawResult& l) {
  json j{{"law", l.law}, {"status", l.pass ? "pass" : "fail"}};
  if (!l.pass) {
    json w = json::array();
    for (const auto& m : l.witness) w.push_back(text::print(r, m));
    j["witness"] = w;
    if (!l.detail.empty()) j["detail"] = l.detail;
  }
  return j;
}

struct Report {
  json result;
  json inputs = json::object();
  json diagnostics = json::array();
  std::vector<std::string> lines;
  int status = 0;
};

Report runValue(const Args& a, const Ring& r) {
  Report rep;
  const IdealValuation nu = needValuation(a, r);
  const Module i = needIdeal(a, r);
  rep.inputs = {{"valuation", text::print(nu)}, {"ideal", text::print(r, i)}};
  const ExtNat v = evaluate(nu, i);
  rep.result = extJson(v);
  rep.lines.push_back(v.str());
  return rep;
}

Report runClosure(const Args& a, const Ring& r) {
  Report rep;
  std::optional<SemistarOp> op;
  if (!a.op.empty()) {
    op = text::parseOp(a.op, r);
  } else if (a.n && !a.valuation.empty()) {
    op = levelOp(needValuation(a, r), levelArg(a));
  } else {
    throw UsageError("closure needs --op, or --valuation with --n");
  }
  const Module e = needIdeal(a, r);
  rep.inputs = {{"op", text::print(*op)}, {"ideal", text::print(r, e)}};
  if (a.n) rep.inputs["n"] = *a.n;
  const Module c = closure(*op, e);
  rep.result = moduleJson(r, c);
  rep.lines.push_back(text::print(r, c));
  return rep;
}

Report runChain(const Args& a, const Ring& r) {
  Report rep;
  const SemistarChain c = !a.chain.empty() ? text::parseChain(a.chain, r) : chainFromValuation(needValuation(a, r));
  const std::uint64_t levels = a.n ? levelArg(a).value() : 4;
  rep.inputs = {{"chain", text::print(c)}, {"levels", levels}};
  json members = json::array();
  for (std::uint64_t k = 0; k <= levels; ++k) {
    const std::string m = text::print(chainMember(c, k));
    members.push_back(m);
    rep.lines.push_back(std::to_string(k) + ": " + m);
  }
  rep.result = {{"members", members}};
  const auto stable = chainStableIndex(c);
  rep.result["stable_index"] = stable ? json(*stable) : json(nullptr);
  if (!a.ideal.empty()) {
    const Module i = needIdeal(a, r);
    rep.inputs["ideal"] = text::print(r, i);
    const ExtNat v = evaluateChain(c, i);
    rep.result["value"] = extJson(v);
    rep.lines.push_back("value: " + v.str());
  }
  return rep;
}

const MonomialRing& needMonomial(const Ring& r) {
  auto* m = asMonomial(r);
  if (!m) throw UsageError("this command needs a monomial ring");
  return *m;
}

Report runDecompose(const Args& a, const Ring& r) {
  Report rep;
  const MonomialRing& mr = needMonomial(r);
  const Module i = needIdeal(a, r);
  if (!isIntegral(r, i) || isZero(i)) throw UsageError("decompose needs a nonzero integral ideal");
  rep.inputs = {{"ideal", text::print(r, i)}};
  json comps = json::array();
  for (const auto& c : monomial::primaryDecomposition(mr.size(), std::get<MonomialModule>(i))) {
    const std::string ideal = text::print(r, Module(c.ideal));
    const std::string prime = primeName(r, MonomialPrime{c.prime});
    comps.push_back({{"component", ideal}, {"prime", prime}, {"grade", c.grade}});
    rep.lines.push_back(ideal + "  prime " + prime + "  grade " + std::to_string(c.grade));
  }
  rep.result = comps;
  return rep;
}

Report runMinPrimes(const Args& a, const Ring& r) {
  Report rep;
  const Module i = needIdeal(a, r);
  rep.inputs = {{"ideal", text::print(r, i)}};
  json ps = json::array();
  for (const auto& p : minimalPrimes(r, i)) {
    ps.push_back(primeName(r, p));
    rep.lines.push_back(primeName(r, p));
  }
  rep.result = ps;
  return rep;
}

void addLaws(Report& rep, const Ring& r, const AxiomReport& laws) {
  for (const auto& l : laws.laws) {
    rep.diagnostics.push_back(lawJson(r, l));
    rep.lines.push_back(l.law + ": " + (l.pass ? "pass" : "FAIL " + l.detail));
  }
  if (!laws.allPass()) rep.status = 1;
}

SampleConfig sampleConfig(const Args& a) {
  SampleConfig cfg;
  cfg.count = a.samples;
  cfg.seed = a.seed;
  cfg.degree = degreeBound(cfg.degree);
  return cfg;
}

Report runCheckAxioms(const Args& a, const Ring& r) {
  Report rep;
  Sampler s(r, sampleConfig(a));
  if (!a.op.empty()) {
    const SemistarOp op = text::parseOp(a.op, r);
    rep.inputs = {{"op", text::print(op)}};
    addLaws(rep, r, checkSemistar(op, s));
  } else {
    const IdealValuation nu = needValuation(a, r);
    rep.inputs = {{"valuation", text::print(nu)}};
    addLaws(rep, r, checkAxioms(nu, s));
  }
  rep.inputs["samples"] = a.samples;
  rep.inputs["seed"] = a.seed;
  rep.result = rep.status == 0 ? "pass" : "fail";
  return rep;
}

Report runRoundtrip(const Args& a, const Ring& r) {
  Report rep;
  const IdealValuation nu = needValuation(a, r);
  rep.inputs = {{"valuation", text::print(nu)}, {"samples", a.samples}, {"seed", a.seed}};
  Sampler s(r, sampleConfig(a));
  const IdealValuation back = valuationFromChain(chainFromValuation(nu));
  LawResult psi{"psi inverse after psi", true, {}, ""};
  for (const auto& i : s.ideals()) {
    const ExtNat x = evaluate(nu, i), y = evaluate(back, i);
    if (x != y) {
      psi = {psi.law, false, {i}, x.str() + " vs " + y.str()};
      break;
    }
  }
  AxiomReport laws{{psi}};
  if (nu.kind == IdealValuation::Kind::Induced) {
    const PrimeValuation h = *nu.prime;
    const PrimeValuation h2 = primeValuationFromSpectralChain(spectralChainFromPrimeValuation(h));
    laws.laws.push_back({"phi inverse after phi", h == h2, {}, h == h2 ? "" : text::print(h2)});
  }
  addLaws(rep, r, laws);
  rep.result = rep.status == 0 ? "pass" : "fail";
  return rep;
}

json finiteTypeJson(const Ring& r, const FiniteTypeReport& ft) {
  json j{{"verdict", ft.verdict}};
  j["witness"] = ft.witness ? json(primeName(r, *ft.witness)) : json(nullptr);
  j["prime_cut"] = ft.primeCut ? json(primeName(r, *ft.primeCut)) : json(nullptr);
  json d = json::array();
  for (const auto& [k, v] : ft.diagnostics) d.push_back({{"condition", k}, {"value", v}});
  j["conditions"] = d;
  return j;
}

Report runFiniteType(const Args& a, const Ring& r) {
  Report rep;
  auto* vr = asValuation(r);
  if (!vr) throw UsageError("finite-type needs a valuation ring");
  if (!a.chain.empty()) {
    const SemistarChain c = text::parseChain(a.chain, r);
    rep.inputs = {{"chain", text::print(c)}};
    const ChainEquivalenceReport ce = chainEquivalences(c);
    json conds = json::array();
    for (std::size_t k = 0; k < 4; ++k) {
      conds.push_back({{"condition", kChainConditionNames[k]}, {"value", ce.conditions[k]}});
      rep.lines.push_back(std::string(kChainConditionNames[k]) + ": " + (ce.conditions[k] ? "true" : "false"));
    }
    rep.result = {{"verdict", ce.conditions[0]}, {"agree", ce.agree}, {"conditions", conds}};
    rep.result["m"] = ce.m ? json(*ce.m) : json(nullptr);
    rep.result["witness"] = ce.witness ? json(primeName(r, *ce.witness)) : json(nullptr);
    rep.result["trace"] = ce.trace;
    if (ce.m) rep.lines.push_back("m = " + std::to_string(*ce.m));
    rep.lines.push_back(std::string("agree: ") + (ce.agree ? "true" : "false"));
    rep.diagnostics.push_back({{"law", "four-way agreement"}, {"status", ce.agree ? "pass" : "fail"}});
    if (!ce.agree) rep.status = 1;
    return rep;
  }
  if (a.family.empty()) throw UsageError("finite-type needs --family or --chain");
  const OpFamily fam = parseFamily(a.family, *vr);
  rep.inputs = {{"family", a.family}};
  const FiniteTypeReport ft = isFiniteType(fam);
  rep.result = finiteTypeJson(r, ft);
  rep.lines.push_back(std::string("finite type: ") + (ft.verdict ? "true" : "false"));
  if (ft.witness) rep.lines.push_back("witness: " + primeName(r, *ft.witness));
  for (const auto& [k, v] : ft.diagnostics) rep.lines.push_back(k + ": " + v);
  return rep;
}

Report runRangeBound(const Args& a, const Ring& r) {
  Report rep;
  const IdealValuation nu = needValuation(a, r);
  rep.inputs = {{"valuation", text::print(nu)}, {"samples", a.samples}, {"seed", a.seed}};
  Sampler s(r, sampleConfig(a));
  const RangeReport rb = rangeBound(nu, s);
  json vals = json::array();
  std::string shown;
  for (auto v : rb.values) {
    vals.push_back(extJson(v));
    shown += (shown.empty() ? "" : ", ") + v.str();
  }
  json chain = json::array();
  for (const auto& [v, p] : rb.primeChain) chain.push_back({{"value", extJson(v)}, {"prime", primeName(r, p)}});
  rep.result = {{"values", vals}, {"count", rb.values.size()}, {"bound", rb.bound}, {"prime_chain", chain}};
  rep.diagnostics.push_back({{"law", "range bound"}, {"status", rb.pass ? "pass" : "fail"}});
  rep.lines.push_back("values: {" + shown + "}");
  rep.lines.push_back("count " + std::to_string(rb.values.size()) + " <= " + std::to_string(rb.bound) + ": " +
                      (rb.pass ? "pass" : "FAIL"));
  if (!rb.pass) rep.status = 1;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal valuations and semistar operations on model domains"};
  app.require_subcommand(1);
  Args a;

  auto common = [&a](CLI::App* c) {
    c->add_option("--ring", a.ring, "ring specification");
    c->add_option("--ideal", a.ideal, "ideal or module expression");
    c->add_option("--valuation", a.valuation, "ideal valuation specification");
    c->add_option("--op", a.op, "semistar operation specification");
    c->add_option("--chain", a.chain, "chain specification");
    c->add_option("--family", a.family, "operation family, e.g. \"levels=[1,2]; tail=increasing\"");
    c->add_option("--n", a.n, "level (a natural number or inf)");
    c->add_option("--samples", a.samples, "sample count");
    c->add_option("--seed", a.seed, "sampler seed");
    c->add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  using Runner = Report (*)(const Args&, const Ring&);
  struct Command {
    std::string name;
    std::string help;
    Runner run;
  };
  const std::vector<Command> commands = {
      {"value", "evaluate a valuation on an ideal", runValue},
      {"closure", "close a module under an operation (--op, or --valuation with --n)", runClosure},
      {"chain", "list the level chain of a valuation up to --n", runChain},
      {"decompose", "primary decomposition of a monomial ideal", runDecompose},
      {"minprimes", "minimal primes of an ideal", runMinPrimes},
      {"check-axioms", "sample the valuation laws (--valuation) or semistar laws (--op)", runCheckAxioms},
      {"roundtrip", "check the valuation/chain and prime valuation/spectral chain round trips", runRoundtrip},
      {"finite-type", "decide finite type of an operation family or chain", runFiniteType},
      {"range-bound", "count realized values against dim + 1", runRangeBound}};
  for (const auto& c : commands) common(app.add_subcommand(c.name, c.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, help, run] : commands) {
    if (!app.got_subcommand(name)) continue;
    try {
      const Ring r = needRing(a);
      Report rep = run(a, r);
      if (a.format == "json") {
        json out{{"command", name},          {"ring", text::print(r)},         {"inputs", rep.inputs},
                 {"result", rep.result},     {"diagnostics", rep.diagnostics}, {"version", kVersion}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& l : rep.lines) std::cout << l << "\n";
      }
      return rep.status;
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
    } catch (const ValidationError& e) {
      std::cerr << "invalid input: " << e.what() << "\n";
    }
    return 2;
  }
  return 2;
}
