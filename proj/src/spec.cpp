#include "qell/spec.hpp"

#include <cctype>

#include "qell/errors.hpp"

namespace qell {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  std::size_t pos() const { return i_; }
  bool done() { skip(); return i_ >= s_.size(); }
  char peek() { skip(); return i_ < s_.size() ? s_[i_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept(const std::string& word) {
    skip();
    if (s_.compare(i_, word.size(), word) != 0) return false;
    i_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(s_.substr(start, i_ - start));
    } catch (const std::out_of_range&) {
      i_ = start;
      fail("integer out of range");
    }
  }
  bool at_digit() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  const std::string& s_;
  std::size_t i_ = 0;
};

// One or more "(a b ...)" groups; points are 1-based.
std::vector<std::vector<int>> parse_cycles(Cursor& c) {
  std::vector<std::vector<int>> cycles;
  if (c.peek() != '(') c.fail("expected '('");
  while (c.accept('(')) {
    std::vector<int> cyc;
    while (!c.accept(')')) {
      if (c.done()) c.fail("unterminated cycle");
      const std::size_t at = c.pos();
      const long v = c.integer();
      if (v < 1 || v > 65535) throw ParseError("point out of range", at);
      for (int x : cyc)
        if (x == v) throw ParseError("repeated point in a cycle", at);
      cyc.push_back(static_cast<int>(v));
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::size_t max_point(const std::vector<std::vector<int>>& cycles) {
  int m = 0;
  for (const auto& cyc : cycles)
    for (int x : cyc) m = std::max(m, x);
  return static_cast<std::size_t>(m);
}

std::size_t positive(Cursor& c, const char* what) {
  const std::size_t at = c.pos();
  const long n = c.integer();
  if (n < 1) throw ParseError(std::string(what) + " needs a positive size", at);
  return static_cast<std::size_t>(n);
}

GroupFactor parse_factor(Cursor& c) {
  GroupFactor f;
  const std::size_t at = c.pos();
  if (c.accept("perm:")) {
    f.kind = GroupFactor::Kind::Generated;
    std::vector<std::vector<std::vector<int>>> gens;
    do gens.push_back(parse_cycles(c));
    while (c.accept(','));
    f.n = 1;
    for (const auto& g : gens) f.n = std::max(f.n, max_point(g));
    for (const auto& g : gens) f.gens.push_back(Perm::from_cycles(f.n, g));
  } else if (c.accept('S')) {
    f.kind = GroupFactor::Kind::Symmetric;
    f.n = positive(c, "S");
  } else if (c.accept('C')) {
    f.kind = GroupFactor::Kind::Cyclic;
    f.n = positive(c, "C");
  } else if (c.accept('D')) {
    f.kind = GroupFactor::Kind::Dihedral;
    f.n = positive(c, "D");
    if (f.n < 3) throw ParseError("D<n> needs n >= 3", at);
  } else if (c.accept('1')) {
    f.kind = GroupFactor::Kind::Trivial;
  } else {
    c.fail("expected S<n>, C<n>, D<n>, 1 or perm:");
  }
  return f;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Cursor c(text);
  GroupSpec spec;
  do spec.factors.push_back(parse_factor(c));
  while (c.accept('x'));
  if (!c.done()) c.fail("unexpected trailing input");
  return spec;
}

std::string GroupSpec::str() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    switch (f.kind) {
      case GroupFactor::Kind::Symmetric: out += "S" + std::to_string(f.n); break;
      case GroupFactor::Kind::Cyclic: out += "C" + std::to_string(f.n); break;
      case GroupFactor::Kind::Dihedral: out += "D" + std::to_string(f.n); break;
      case GroupFactor::Kind::Trivial: out += "1"; break;
      case GroupFactor::Kind::Generated: {
        out += "perm:";
        for (std::size_t k = 0; k < f.gens.size(); ++k) out += (k ? "," : "") + f.gens[k].str();
        break;
      }
    }
  }
  return out;
}

GroupPtr GroupSpec::build(std::size_t cap) const {
  GroupPtr g;
  for (const auto& f : factors) {
    GroupPtr h;
    switch (f.kind) {
      case GroupFactor::Kind::Symmetric: h = symmetric_group(f.n); break;
      case GroupFactor::Kind::Cyclic: h = cyclic_group(f.n); break;
      case GroupFactor::Kind::Dihedral: h = dihedral_group(f.n); break;
      case GroupFactor::Kind::Trivial: h = trivial_group(); break;
      case GroupFactor::Kind::Generated: h = Group::generate(f.gens, f.n, cap); break;
    }
    g = g ? direct_product(g, h) : h;
  }
  if (g->order() > cap) throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds the cap");
  return g;
}

// ------------------------------------------------------------ elements

namespace {

std::size_t parse_class(Cursor& c, const GroupPtr& g) {
  const std::size_t at = c.pos();
  if (c.peek() == '(') {
    const auto cycles = parse_cycles(c);
    if (max_point(cycles) > g->degree()) throw ParseError("point exceeds the group degree", at);
    const auto idx = g->find(Perm::from_cycles(g->degree(), cycles));
    if (!idx) throw ParseError("permutation is not in the group", at);
    return g->class_of(*idx);
  }
  const long k = c.integer();
  if (k < 0 || static_cast<std::size_t>(k) >= g->class_count()) throw ParseError("class index out of range", at);
  return static_cast<std::size_t>(k);
}

QEllElem parse_sum(Cursor& c, const GroupPtr& g, bool nested);

QEllElem parse_factor(Cursor& c, const GroupPtr& g) {
  const std::size_t at = c.pos();
  if (c.accept('(')) {
    QEllElem r = parse_sum(c, g, true);
    c.expect(')');
    return r;
  }
  if (c.accept("unit")) return QEllElem::unit(g);
  if (c.accept('q')) {
    long k = 1;
    if (c.accept('^')) k = c.integer();
    return QEllElem::unit(g).scaled(LaurentPoly::monomial(k));
  }
  if (c.accept("b[")) {
    const std::size_t cls = parse_class(c, g);
    c.expect(']');
    c.expect('[');
    const std::size_t iat = c.pos();
    const long k = c.integer();
    c.expect(']');
    QEllElem r(g);
    const auto& ctx = r.component(cls).ctx();
    if (k < 0 || static_cast<std::size_t>(k) >= ctx->rank()) throw ParseError("basis index out of range", iat);
    r.set_component(cls, LambdaElem::basis(ctx, static_cast<std::size_t>(k)));
    return r;
  }
  if (c.at_digit()) return QEllElem::unit(g).scaled(LaurentPoly(c.integer()));
  throw ParseError("expected an integer, q, unit or b[rep][index]", at);
}

QEllElem parse_term(Cursor& c, const GroupPtr& g) {
  QEllElem r = parse_factor(c, g);
  while (c.accept('*')) r = r * parse_factor(c, g);
  return r;
}

QEllElem parse_sum(Cursor& c, const GroupPtr& g, bool nested) {
  QEllElem r(g);
  bool first = true;
  while (first || !(c.done() || (nested && c.peek() == ')'))) {
    long sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    const QEllElem t = parse_term(c, g);
    r = sign > 0 ? r + t : r - t;
    first = false;
  }
  return r;
}

}  // namespace

std::size_t parse_class_rep(const GroupPtr& g, const std::string& text) {
  Cursor c(text);
  const std::size_t cls = parse_class(c, g);
  if (!c.done()) c.fail("unexpected trailing input");
  return cls;
}

QEllElem parse_element(const GroupPtr& g, const std::string& text) {
  Cursor c(text);
  return parse_sum(c, g, false);
}

std::string element_str(const QEllElem& a) {
  const auto& g = a.group();
  std::string out;
  for (std::size_t cls = 0; cls < g->class_count(); ++cls) {
    const auto& comp = a.component(cls);
    const std::string rep = g->element(g->conjugacy().reps[cls]).str();
    for (std::size_t k = 0; k < comp.coeffs().size(); ++k) {
      const auto& p = comp.coeff(k);
      if (p.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + p.str() + ")*b[" + rep + "][" + std::to_string(k) + "]";
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qell
