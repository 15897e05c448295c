#pragma once

#include <string>
#include <vector>

#include "ivlab/semistar.hpp"

namespace ivlab::text {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline std::string print(const ValueGroup& g) {
  switch (g.kind()) {
    case ValueGroup::Kind::LexZ: return "lexZ(" + std::to_string(g.rank()) + ")";
    case ValueGroup::Kind::LexZOmega: return "lexZ(omega)";
    case ValueGroup::Kind::Rationals: return "Q";
  }
  return "?";
}

inline std::string print(const Ring& r) {
  if (auto* d = asDedekind(r)) return "dedekind{" + join(d->primes(), ",") + "}";
  if (auto* v = asValuation(r)) {
    const std::string bound = v->omegaBound() == 6 ? "" : ", omegabound=" + std::to_string(v->omegaBound());
    return "valuation{group=" + print(v->group()) + bound + "}";
  }
  return "monomial{vars=[" + join(std::get<MonomialRing>(r).vars(), ",") + "]}";
}

inline std::string print(const GroupElement& x) { return x.str(); }

inline std::string exponentSuffix(std::int64_t e) {
  if (e == 1) return "";
  if (e == kNegInf) return "^-inf";
  return "^" + std::to_string(e);
}

inline std::string printMonomial(const MonomialRing& r, const Monomial& m) {
  std::vector<std::string> f;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) f.push_back(r.vars()[i] + exponentSuffix(m[i]));
  return f.empty() ? "1" : join(f, "*");
}

inline std::string printTuple(const std::vector<std::int64_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return "(" + join(s, ",") + ")";
}

inline std::string print(const Ring& r, const Module& m) {
  requireModel(r, m);
  if (isZero(m)) return "zero";
  if (isFullField(m)) return "K";
  if (isUnit(r, m)) return "unit";
  if (auto* d = asDedekind(r)) {
    const auto& dm = std::get<DedekindModule>(m);
    std::vector<std::string> f;
    for (const auto& p : d->primes())
      if (dm.exponent(p) != 0) f.push_back(p + exponentSuffix(dm.exponent(p)));
    return join(f, "*");
  }
  if (auto* v = asValuation(r)) {
    const ValueGroup& g = v->group();
    const auto& c = std::get<CutModule>(m);
    if (c.isTopLevel()) {
      if (c.strict() && c.threshold().isZero()) return "maxideal";
      if (!c.strict()) {
        if (g.kind() == ValueGroup::Kind::LexZ && c == valuation::primeIdeal(g, {g.fullLevel()})) return "maxideal";
        return "principal(" + print(c.threshold()) + ")";
      }
      return "cut(level=max, t=" + print(c.threshold()) + ", strict)";
    }
    if (c == valuation::primeIdeal(g, {c.level()})) return "prime(" + std::to_string(c.level()) + ")";
    return "cut(level=" + std::to_string(c.level()) + ", t=" + printTuple(c.threshold().prefix(c.level())) + ")";
  }
  const auto& mr = std::get<MonomialRing>(r);
  std::vector<std::string> g;
  for (const auto& x : std::get<MonomialModule>(m).gens()) g.push_back(printMonomial(mr, x));
  return "(" + join(g) + ")";
}

inline std::string print(const Ring& r, const PrimeRef& p) { return primeName(r, p); }

inline std::string print(const PrimeValuation& h) {
  const Ring& r = h.ring();
  std::vector<std::string> f;
  if (auto* d = asDedekind(r)) {
    for (const auto& p : d->primes()) f.push_back(p + ":" + h.value(DedekindPrime{p}).str());
  } else if (asValuation(r)) {
    for (std::size_t k = 0; k < h.finiteLevels().size(); ++k) f.push_back(std::to_string(k) + ":" + h.finiteLevels()[k].str());
    if (std::get<ValuationRing>(r).group().kind() == ValueGroup::Kind::LexZOmega)
      f.push_back(std::string("tail:") + (h.tail() == PrimeValuation::Tail::Increasing ? "inc" : "const"));
    f.push_back("max:" + h.maxValue().str());
  } else {
    for (const auto& p : primes(r)) f.push_back(primeName(r, p) + ":" + h.value(p).str());
  }
  return "primeval{" + join(f) + "}";
}

inline std::string print(const RingMap& m) {
  if (m.kind() == RingMap::Kind::DedekindLocalization)
    return "localization{" + join(std::get<DedekindRing>(m.target()).primes(), ",") + "}";
  const auto& g = std::get<ValuationRing>(m.source()).group();
  return "overring(" + (m.level() == g.fullLevel() ? std::string("max") : std::to_string(m.level())) + ")";
}

inline std::string print(const IdealValuation& nu);
inline std::string print(const SemistarChain& c);

inline std::string print(const LocalizingSystem& f) {
  switch (f.kind) {
    case LocalizingSystem::Kind::GeneratedByFG: {
      std::vector<std::string> g;
      for (const auto& m : f.gens) g.push_back(print(f.ring, m));
      return "gens[" + join(g) + "]";
    }
    case LocalizingSystem::Kind::PrimeCut: return "primecut(" + print(f.ring, *f.prime) + ")";
    case LocalizingSystem::Kind::ValuationLevel: return "levelset(" + print(*f.nu) + ", " + f.n.str() + ")";
    case LocalizingSystem::Kind::PrincipalFilter: return "filter(" + print(f.ring, *f.ideal) + ")";
  }
  return "?";
}

inline std::string print(const IdealValuation& nu) {
  switch (nu.kind) {
    case IdealValuation::Kind::PrimeTable: {
      std::vector<std::string> f;
      for (const auto& p : std::get<DedekindRing>(nu.ring).primes()) f.push_back(p + "=" + nu.table.at(p).str());
      return "primes{" + join(f, ",") + "}";
    }
    case IdealValuation::Kind::Induced: return print(*nu.prime);
    case IdealValuation::Kind::FromLS: return "fromLS{" + print(*nu.system) + "}";
    case IdealValuation::Kind::PGrade: return "pgrade";
    case IdealValuation::Kind::Height: return "height";
    case IdealValuation::Kind::Contracted: return "contract(" + print(*nu.map) + ", " + print(*nu.inner) + ")";
    case IdealValuation::Kind::Extended:
      return "extend(" + print(nu.map->source()) + ", " + print(*nu.map) + ", " + print(*nu.inner) + ")";
    case IdealValuation::Kind::FromChain: return "fromchain(" + print(*nu.chain) + ")";
  }
  return "?";
}

inline std::string print(const SemistarOp& op) {
  switch (op.kind) {
    case SemistarOp::Kind::IdentityD: return "d";
    case SemistarOp::Kind::TrivialE: return "e";
    case SemistarOp::Kind::DivisorialV: return "v";
    case SemistarOp::Kind::WOp: return "w";
    case SemistarOp::Kind::Spectral: {
      std::vector<std::string> s;
      for (const auto& p : op.delta) s.push_back(print(op.ring, p));
      return "spectral{" + join(s, ",") + "}";
    }
    case SemistarOp::Kind::FromLS: return "fromLS{" + print(*op.system) + "}";
    case SemistarOp::Kind::Level: return "level(" + print(*op.nu) + ", " + op.n.str() + ")";
  }
  return "?";
}

inline std::string print(const SemistarChain& c) {
  std::vector<std::string> p;
  for (const auto& op : c.prefix) p.push_back(print(op));
  std::string tail;
  switch (c.tail) {
    case SemistarChain::Tail::Constant: tail = "const"; break;
    case SemistarChain::Tail::LevelTail: tail = "level(" + print(*c.nu) + ")"; break;
    case SemistarChain::Tail::SpectralTail: tail = "spectral(" + print(*c.h) + ")"; break;
  }
  return "chain{prefix=[" + join(p) + "], tail=" + tail + "}";
}

}  // namespace ivlab::text
