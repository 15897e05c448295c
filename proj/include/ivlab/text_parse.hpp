#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ivlab/text_print.hpp"

namespace ivlab::text {

/// Recursive-descent reader over one specification string. Positions in errors
/// are 1-based line and column.
class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    // Keywords must not run into a longer identifier.
    if (std::isalpha(static_cast<unsigned char>(tok.back())) && pos_ + tok.size() < s_.size() &&
        isIdentChar(s_[pos_ + tok.size()]))
      return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  void end() {
    if (!done()) fail("unexpected trailing input");
  }

  static bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      while (pos_ < s_.size() && isIdentChar(s_[pos_])) ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  bool atInteger() {
    ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  ExtNat extNat() {
    if (accept("inf")) return kInf;
    const std::int64_t v = integer();
    if (v < 0) fail("expected a nonnegative value or inf");
    return ExtNat(static_cast<std::uint64_t>(v));
  }

  std::size_t mark() {
    ws();
    return pos_;
  }
  void reset(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline ValueGroup parseGroup(Reader& in) {
  if (in.accept("Q")) return ValueGroup::rationals();
  in.expect("lexZ");
  in.expect("(");
  if (in.accept("omega")) {
    in.expect(")");
    return ValueGroup::lexZOmega();
  }
  const std::int64_t n = in.integer();
  if (n < 1) in.fail("rank must be positive");
  in.expect(")");
  return ValueGroup::lexZ(static_cast<std::size_t>(n));
}

inline Ring parseRing(Reader& in) {
  const std::size_t at = in.mark();
  const std::string kind = in.ident();
  in.expect("{");
  try {
    if (kind == "dedekind") {
      std::vector<std::string> labels{in.ident()};
      while (in.accept(",")) labels.push_back(in.ident());
      in.expect("}");
      return DedekindRing(labels);
    }
    if (kind == "valuation") {
      in.expect("group");
      in.expect("=");
      const ValueGroup g = parseGroup(in);
      std::size_t bound = 6;
      if (in.accept(",")) {
        in.expect("omegabound");
        in.expect("=");
        bound = static_cast<std::size_t>(in.integer());
      }
      in.expect("}");
      return ValuationRing(g, bound);
    }
    if (kind == "monomial") {
      const bool named = in.accept("vars");
      if (named) {
        in.expect("=");
        in.expect("[");
      }
      std::vector<std::string> vars{in.ident()};
      while (in.accept(",")) vars.push_back(in.ident());
      if (named) in.expect("]");
      in.expect("}");
      return MonomialRing(vars);
    }
  } catch (const ValidationError& e) {
    in.reset(at);
    in.fail(e.what());
  }
  in.reset(at);
  in.fail("unknown ring kind '" + kind + "'");
}

inline GroupElement parseElement(Reader& in, const ValueGroup& g) {
  switch (g.kind()) {
    case ValueGroup::Kind::LexZ: {
      in.expect("(");
      std::vector<std::int64_t> c{in.integer()};
      while (in.accept(",")) c.push_back(in.integer());
      in.expect(")");
      if (c.size() != g.rank()) in.fail("expected " + std::to_string(g.rank()) + " coordinates");
      return GroupElement::lex(g, c);
    }
    case ValueGroup::Kind::LexZOmega: {
      if (in.peek() == '(') {
        in.expect("(");
        std::vector<std::int64_t> c{in.integer()};
        while (in.accept(",")) c.push_back(in.integer());
        in.expect(")");
        return GroupElement::withPrefix(g, c);
      }
      in.expect("{");
      std::vector<GroupElement::SparseEntry> e;
      if (!in.accept("}")) {
        do {
          const std::int64_t idx = in.integer();
          if (idx < 1) in.fail("indices start at 1");
          in.expect(":");
          e.emplace_back(static_cast<std::size_t>(idx), in.integer());
        } while (in.accept(","));
        in.expect("}");
      }
      return GroupElement::sparse(g, e);
    }
    case ValueGroup::Kind::Rationals: {
      const std::int64_t num = in.integer();
      std::int64_t den = 1;
      if (in.accept("/")) den = in.integer();
      if (den == 0) in.fail("zero denominator");
      return GroupElement::rational(g, Rational(num, den));
    }
  }
  in.fail("unsupported group");
}

inline std::int64_t parseExponent(Reader& in) {
  if (!in.accept("^")) return 1;
  if (in.accept("-inf")) return kNegInf;
  return in.integer();
}

inline Monomial parseMonomial(Reader& in, const MonomialRing& r) {
  Monomial m(r.size(), 0);
  if (in.atInteger()) {
    if (in.integer() != 1) in.fail("the only constant monomial is 1");
    return m;
  }
  do {
    const std::size_t at = in.mark();
    const std::string v = in.ident();
    auto it = std::find(r.vars().begin(), r.vars().end(), v);
    if (it == r.vars().end()) {
      in.reset(at);
      in.fail("unknown variable '" + v + "'");
    }
    const std::int64_t e = parseExponent(in);
    if (e == kNegInf) in.fail("monomial exponents must be finite");
    m[static_cast<std::size_t>(it - r.vars().begin())] += e;
  } while (in.accept("*"));
  return m;
}

inline PrimeRef parsePrime(Reader& in, const Ring& r) {
  const std::size_t at = in.mark();
  if (auto* d = asDedekind(r)) {
    if (in.atInteger()) {
      if (in.integer() != 0) in.fail("the only numeric Dedekind prime is 0");
      return DedekindPrime{};
    }
    const std::string p = in.ident();
    if (!d->hasPrime(p)) {
      in.reset(at);
      in.fail("unknown prime '" + p + "'");
    }
    return DedekindPrime{p};
  }
  if (auto* v = asValuation(r)) {
    const ValueGroup& g = v->group();
    if (in.accept("max")) return ValuationPrime{g.fullLevel()};
    if (in.accept("limit")) {
      if (g.kind() != ValueGroup::Kind::LexZOmega) in.fail("the limit level exists only in rank omega");
      return ValuationPrime{kLimitLevel};
    }
    const std::int64_t k = in.integer();
    if (k < 0 || (g.kind() != ValueGroup::Kind::LexZOmega && static_cast<std::size_t>(k) > g.fullLevel())) {
      in.reset(at);
      in.fail("prime level out of range");
    }
    return ValuationPrime{static_cast<std::size_t>(k)};
  }
  const auto& m = std::get<MonomialRing>(r);
  if (in.atInteger()) {
    if (in.integer() != 0) in.fail("the only numeric monomial prime is 0");
    return MonomialPrime{0};
  }
  in.expect("(");
  VarSet s = 0;
  do {
    const std::size_t vat = in.mark();
    const std::string v = in.ident();
    auto it = std::find(m.vars().begin(), m.vars().end(), v);
    if (it == m.vars().end()) {
      in.reset(vat);
      in.fail("unknown variable '" + v + "'");
    }
    s |= VarSet{1} << (it - m.vars().begin());
  } while (in.accept(","));
  in.expect(")");
  return MonomialPrime{s};
}

inline Module parseModule(Reader& in, const Ring& r) {
  if (in.accept("zero")) return zeroModule(r);
  if (in.accept("unit")) return unitModule(r);
  if (in.accept("K")) return fullField(r);
  if (auto* d = asDedekind(r)) {
    std::map<std::string, std::int64_t> e;
    if (in.atInteger()) {
      if (in.integer() != 1) in.fail("the only constant ideal is 1");
      return unitModule(r);
    }
    do {
      const std::size_t at = in.mark();
      const std::string p = in.ident();
      if (!d->hasPrime(p)) {
        in.reset(at);
        in.fail("unknown prime '" + p + "'");
      }
      const std::int64_t x = parseExponent(in);
      std::int64_t& slot = e[p];
      slot = (x == kNegInf || slot == kNegInf) ? kNegInf : slot + x;
    } while (in.accept("*"));
    return DedekindModule::exponents(*d, e);
  }
  if (auto* v = asValuation(r)) {
    const ValueGroup& g = v->group();
    if (in.accept("maxideal")) return valuation::primeIdeal(g, {g.fullLevel()});
    if (in.accept("prime")) {
      in.expect("(");
      const PrimeRef p = parsePrime(in, r);
      in.expect(")");
      return primeIdeal(r, p);
    }
    if (in.accept("principal")) {
      in.expect("(");
      GroupElement x = GroupElement::zero(g);
      if (g.kind() == ValueGroup::Kind::LexZ && in.peek() != '(') {
        std::vector<std::int64_t> c{in.integer()};
        while (in.accept(",")) c.push_back(in.integer());
        if (c.size() != g.rank()) in.fail("expected " + std::to_string(g.rank()) + " coordinates");
        x = GroupElement::lex(g, c);
      } else {
        x = parseElement(in, g);
      }
      in.expect(")");
      return CutModule::principal(x);
    }
    in.expect("cut");
    in.expect("(");
    in.expect("level");
    in.expect("=");
    std::size_t level = g.fullLevel();
    if (!in.accept("max")) {
      const std::int64_t k = in.integer();
      if (k < 1 || (g.kind() == ValueGroup::Kind::LexZ && static_cast<std::size_t>(k) > g.rank()))
        in.fail("cut level out of range");
      level = g.kind() == ValueGroup::Kind::Rationals ? 1 : static_cast<std::size_t>(k);
    }
    in.expect(",");
    in.expect("t");
    in.expect("=");
    GroupElement t = GroupElement::zero(g);
    if (g.kind() != ValueGroup::Kind::Rationals && level != g.fullLevel() && in.peek() == '(') {
      in.expect("(");
      std::vector<std::int64_t> c{in.integer()};
      while (in.accept(",")) c.push_back(in.integer());
      in.expect(")");
      if (c.size() > level) in.fail("threshold longer than the cut level");
      t = GroupElement::withPrefix(g, c);
    } else {
      t = parseElement(in, g);
    }
    const bool strict = in.accept(",") && (in.expect("strict"), true);
    in.expect(")");
    return CutModule::cut(level, t, strict);
  }
  const auto& m = std::get<MonomialRing>(r);
  std::vector<Monomial> gens;
  if (in.accept("(")) {
    gens.push_back(parseMonomial(in, m));
    while (in.accept(",")) gens.push_back(parseMonomial(in, m));
    in.expect(")");
  } else {
    gens.push_back(parseMonomial(in, m));
  }
  return MonomialModule::generated(gens);
}

inline PrimeValuation parsePrimeValuation(Reader& in, const Ring& r) {
  in.expect("primeval");
  in.expect("{");
  std::map<PrimeRef, ExtNat> values;
  PrimeValuation::Tail tail = PrimeValuation::Tail::Constant;
  if (!in.accept("}")) {
    do {
      if (in.accept("tail")) {
        in.expect(":");
        if (in.accept("inc")) tail = PrimeValuation::Tail::Increasing;
        else in.expect("const");
        continue;
      }
      const PrimeRef p = parsePrime(in, r);
      in.expect(":");
      values[p] = in.extNat();
    } while (in.accept(","));
    in.expect("}");
  }
  try {
    if (auto* d = asDedekind(r)) {
      std::map<std::string, ExtNat> m;
      for (const auto& [p, v] : values) {
        const auto& label = std::get<DedekindPrime>(p).label;
        if (label.empty()) {
          if (v != ExtNat(0)) in.fail("a prime valuation must vanish at the zero prime");
        } else {
          m[label] = v;
        }
      }
      return PrimeValuation::dedekindChecked(*d, m);
    }
    if (auto* v = asValuation(r)) {
      const ValueGroup& g = v->group();
      std::vector<ExtNat> finite;
      ExtNat top = 0;
      bool haveTop = false;
      for (const auto& [p, x] : values) {
        const std::size_t level = std::get<ValuationPrime>(p).level;
        if (level == g.fullLevel()) {
          top = x;
          haveTop = true;
        } else if (level == kLimitLevel) {
          in.fail("the limit level cannot carry a value");
        } else {
          if (level != finite.size()) in.fail("levels must be listed without gaps from 0");
          finite.push_back(x);
        }
      }
      if (!haveTop) in.fail("missing value for max");
      return PrimeValuation::levels(*v, finite, top, tail);
    }
    const auto& m = std::get<MonomialRing>(r);
    std::vector<ExtNat> table(static_cast<std::size_t>(m.allVars()) + 1);
    std::vector<bool> seen(table.size(), false);
    for (const auto& [p, x] : values) {
      const VarSet s = std::get<MonomialPrime>(p).vars;
      table[s] = x;
      seen[s] = true;
    }
    seen[0] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) in.fail("every variable subset needs a value");
    return PrimeValuation::monomial(m, table);
  } catch (const ValidationError& e) {
    in.fail(e.what());
  }
}

inline RingMap parseRingMap(Reader& in, const Ring& source) {
  if (in.accept("overring")) {
    auto* v = asValuation(source);
    if (!v) in.fail("overring maps need a valuation ring");
    in.expect("(");
    std::size_t level = v->group().fullLevel();
    if (!in.accept("max")) level = static_cast<std::size_t>(in.integer());
    in.expect(")");
    try {
      return RingMap::valuationOverring(*v, level);
    } catch (const UsageError& e) {
      in.fail(e.what());
    }
  }
  in.expect("localization");
  auto* d = asDedekind(source);
  if (!d) in.fail("localization maps need a Dedekind ring");
  in.expect("{");
  std::set<std::string> keep{in.ident()};
  while (in.accept(",")) keep.insert(in.ident());
  in.expect("}");
  try {
    return RingMap::dedekindLocalization(*d, keep);
  } catch (const UsageError& e) {
    in.fail(e.what());
  }
}

inline IdealValuation parseValuation(Reader& in, const Ring& r);
inline SemistarChain parseChain(Reader& in, const Ring& r);

inline LocalizingSystem parseSystem(Reader& in, const Ring& r) {
  try {
    if (in.accept("gens")) {
      in.expect("[");
      std::vector<Module> g{parseModule(in, r)};
      while (in.accept(",")) g.push_back(parseModule(in, r));
      in.expect("]");
      return generatedByFG(r, g);
    }
    if (in.accept("primecut")) {
      in.expect("(");
      const PrimeRef p = parsePrime(in, r);
      in.expect(")");
      return primeCut(r, p);
    }
    if (in.accept("levelset")) {
      in.expect("(");
      const IdealValuation nu = parseValuation(in, r);
      in.expect(",");
      const ExtNat n = in.extNat();
      in.expect(")");
      return valuationLevel(nu, n);
    }
    in.expect("filter");
    in.expect("(");
    const Module i = parseModule(in, r);
    in.expect(")");
    return principalFilter(r, i);
  } catch (const ValidationError& e) {
    in.fail(e.what());
  } catch (const UsageError& e) {
    in.fail(e.what());
  }
}

inline IdealValuation parseValuation(Reader& in, const Ring& r) {
  const std::size_t at = in.mark();
  try {
    if (in.accept("pgrade") || in.accept("height")) {
      in.reset(at);
      const bool pg = in.accept("pgrade") || (in.expect("height"), false);
      auto* m = asMonomial(r);
      if (!m) in.fail("pgrade and height live on monomial rings");
      return pg ? pgradeValuation(*m) : heightValuation(*m);
    }
    if (in.accept("primes")) {
      auto* d = asDedekind(r);
      if (!d) in.fail("prime tables live on Dedekind rings");
      in.expect("{");
      std::map<std::string, ExtNat> t;
      do {
        const std::string p = in.ident();
        in.expect("=");
        t[p] = in.extNat();
      } while (in.accept(","));
      in.expect("}");
      return primeTable(*d, t);
    }
    if (in.peek() == 'p') return inducedFromPrimeValuation(parsePrimeValuation(in, r));
    if (in.accept("fromLS")) {
      in.expect("{");
      const LocalizingSystem f = parseSystem(in, r);
      in.expect("}");
      return fromLocalizingSystem(f);
    }
    if (in.accept("contract")) {
      in.expect("(");
      const RingMap map = parseRingMap(in, r);
      in.expect(",");
      const IdealValuation inner = parseValuation(in, map.target());
      in.expect(")");
      return contract(inner, map);
    }
    if (in.accept("extend")) {
      in.expect("(");
      const Ring source = parseRing(in);
      in.expect(",");
      const RingMap map = parseRingMap(in, source);
      if (!(map.target() == r)) in.fail("extend: the map's target is not the current ring");
      in.expect(",");
      const IdealValuation inner = parseValuation(in, source);
      in.expect(")");
      return extend(inner, map);
    }
    in.expect("fromchain");
    in.expect("(");
    const SemistarChain c = parseChain(in, r);
    in.expect(")");
    return valuationFromChain(c);
  } catch (const ValidationError& e) {
    in.reset(at);
    in.fail(e.what());
  } catch (const UsageError& e) {
    in.reset(at);
    in.fail(e.what());
  }
}

inline SemistarOp parseOp(Reader& in, const Ring& r) {
  if (in.accept("d")) return opD(r);
  if (in.accept("e")) return opE(r);
  if (in.accept("v")) return opV(r);
  if (in.accept("w")) return opW(r);
  if (in.accept("spectral")) {
    in.expect("{");
    std::vector<PrimeRef> delta{parsePrime(in, r)};
    while (in.accept(",")) delta.push_back(parsePrime(in, r));
    in.expect("}");
    return spectral(r, delta);
  }
  if (in.accept("fromLS")) {
    in.expect("{");
    const LocalizingSystem f = parseSystem(in, r);
    in.expect("}");
    return fromLS(f);
  }
  in.expect("level");
  in.expect("(");
  const IdealValuation nu = parseValuation(in, r);
  in.expect(",");
  const ExtNat n = in.extNat();
  in.expect(")");
  return levelOp(nu, n);
}

inline SemistarChain parseChain(Reader& in, const Ring& r) {
  in.expect("chain");
  in.expect("{");
  in.expect("prefix");
  in.expect("=");
  in.expect("[");
  std::vector<SemistarOp> prefix;
  if (!in.accept("]")) {
    prefix.push_back(parseOp(in, r));
    while (in.accept(",")) prefix.push_back(parseOp(in, r));
    in.expect("]");
  }
  in.expect(",");
  in.expect("tail");
  in.expect("=");
  SemistarChain c(r);
  c.prefix = prefix;
  if (in.accept("const")) {
    if (prefix.empty()) in.fail("a constant tail needs a nonempty prefix");
    c.tail = SemistarChain::Tail::Constant;
  } else if (in.accept("level")) {
    in.expect("(");
    c.tail = SemistarChain::Tail::LevelTail;
    c.nu = share(parseValuation(in, r));
    in.expect(")");
  } else {
    in.expect("spectral");
    in.expect("(");
    c.tail = SemistarChain::Tail::SpectralTail;
    c.h = parsePrimeValuation(in, r);
    in.expect(")");
  }
  in.expect("}");
  return c;
}

/// Whole-string entry points.
template <typename F>
auto parseAll(std::string_view s, F f) {
  Reader in(s);
  auto v = f(in);
  in.end();
  return v;
}

inline Ring parseRing(std::string_view s) {
  return parseAll(s, [](Reader& in) { return parseRing(in); });
}
inline Module parseModule(std::string_view s, const Ring& r) {
  return parseAll(s, [&r](Reader& in) { return parseModule(in, r); });
}
inline IdealValuation parseValuation(std::string_view s, const Ring& r) {
  return parseAll(s, [&r](Reader& in) { return parseValuation(in, r); });
}
inline SemistarOp parseOp(std::string_view s, const Ring& r) {
  return parseAll(s, [&r](Reader& in) { return parseOp(in, r); });
}
inline SemistarChain parseChain(std::string_view s, const Ring& r) {
  return parseAll(s, [&r](Reader& in) { return parseChain(in, r); });
}
inline PrimeValuation parsePrimeValuation(std::string_view s, const Ring& r) {
  return parseAll(s, [&r](Reader& in) { return parsePrimeValuation(in, r); });
}
inline GroupElement parseElement(std::string_view s, const ValueGroup& g) {
  return parseAll(s, [&g](Reader& in) { return parseElement(in, g); });
}

}  // namespace ivlab::text
