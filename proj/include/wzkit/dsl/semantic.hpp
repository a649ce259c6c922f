#pragma once

// Turns a parsed document into toolkit objects: hypergeometric terms,
// certificates, WZ problems, identity cases and check requests.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wzkit/dsl/parser.hpp"
#include "wzkit/identities.hpp"
#include "wzkit/wzengine.hpp"

namespace wzkit::dsl {

struct TermEntry {
  std::string name;
  std::vector<Var> params;
  HyperTerm term;
};

struct CertEntry {
  std::string name;
  std::vector<Var> params;
  RationalFunction value;
};

struct CheckCase {
  std::string id;
  CheckDef::Kind kind = CheckDef::Kind::certify;
  std::string recurrence;
  WZProblem problem;
  std::optional<BaseCase> base;
  std::map<Var, std::pair<std::int64_t, std::int64_t>> ranges;
  std::string literal_of;
  std::string erratum;
};

struct SpecDocument {
  std::vector<std::string> names;  // definition order
  std::map<std::string, TermEntry> terms;
  std::map<std::string, CertEntry> certs;
  std::map<std::string, WZProblem> recurrences;
  std::vector<IdentityCase> sums;
  std::vector<CheckCase> checks;

  const IdentityCase* find_sum(std::string_view id) const {
    for (const auto& s : sums) {
      if (s.id == id) return &s;
    }
    return nullptr;
  }
  const CheckCase* find_check(std::string_view id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

class Analyzer {
 public:
  SpecDocument run(const Document& doc) {
    for (const auto& st : doc.statements) std::visit([this](const auto& s) { add(s); }, st);
    return std::move(out_);
  }

 private:
  using Kind = ParseError::Kind;

  [[noreturn]] static void error(Kind kind, Position p, const std::string& msg) {
    throw ParseError(kind, static_cast<std::size_t>(p.line), static_cast<std::size_t>(p.column), msg);
  }

  void declare(const std::string& name, Position p) {
    if (std::find(out_.names.begin(), out_.names.end(), name) != out_.names.end()) {
      error(Kind::resolution, p, "duplicate definition of '" + name + "'");
    }
    out_.names.push_back(name);
  }

  static Var variable(const std::string& name, Position p) {
    if (auto v = parse_var(name)) return *v;
    error(Kind::semantic, p, "'" + name + "' is not a variable; variables are n, k, m, l");
  }

  std::vector<Var> param_list(const std::vector<std::string>& names, Position p) {
    std::vector<Var> out;
    for (const auto& s : names) {
      const Var v = variable(s, p);
      if (std::find(out.begin(), out.end(), v) != out.end()) {
        error(Kind::semantic, p, "parameter '" + s + "' appears twice");
      }
      out.push_back(v);
    }
    return out;
  }

  static Var in_scope(const Expr& e, VarSet scope) {
    const auto v = parse_var(e.name);
    if (!v || !scope.test(index(*v))) error(Kind::resolution, e.pos, "unknown variable '" + e.name + "'");
    return *v;
  }

  static std::int64_t small_int(const Expr& e) {
    if (!e.value.fits_slong_p()) error(Kind::semantic, e.pos, "integer " + e.value.get_str() + " is too large");
    return e.value.get_si();
  }

  static LinearForm linear(const Expr& e, VarSet scope) {
    switch (e.kind) {
      case Expr::Kind::number: return LinearForm(small_int(e));
      case Expr::Kind::name: return LinearForm(in_scope(e, scope));
      case Expr::Kind::neg: return -linear(e.args[0], scope);
      case Expr::Kind::add: return linear(e.args[0], scope) + linear(e.args[1], scope);
      case Expr::Kind::sub: return linear(e.args[0], scope) - linear(e.args[1], scope);
      case Expr::Kind::mul: {
        const LinearForm a = linear(e.args[0], scope);
        const LinearForm b = linear(e.args[1], scope);
        if (a.is_constant()) return b * a.constant();
        if (b.is_constant()) return a * b.constant();
        error(Kind::semantic, e.pos, "product of variables is not an affine expression");
      }
      default: error(Kind::semantic, e.pos, "expected an integer affine expression");
    }
  }

  static RationalFunction rational(const Expr& e, VarSet scope) {
    switch (e.kind) {
      case Expr::Kind::number: return RationalFunction(BigRational(e.value));
      case Expr::Kind::name: return RationalFunction(MultiPoly::var(in_scope(e, scope)));
      case Expr::Kind::neg: return -rational(e.args[0], scope);
      case Expr::Kind::add: return rational(e.args[0], scope) + rational(e.args[1], scope);
      case Expr::Kind::sub: return rational(e.args[0], scope) - rational(e.args[1], scope);
      case Expr::Kind::mul: return rational(e.args[0], scope) * rational(e.args[1], scope);
      case Expr::Kind::div: {
        const RationalFunction d = rational(e.args[1], scope);
        if (d.is_zero()) error(Kind::semantic, e.args[1].pos, "division by zero");
        return rational(e.args[0], scope) / d;
      }
      case Expr::Kind::power: {
        if (e.args[1].kind != Expr::Kind::number) {
          error(Kind::semantic, e.args[1].pos, "exponent must be a nonnegative integer");
        }
        const std::int64_t x = small_int(e.args[1]);
        const RationalFunction b = rational(e.args[0], scope);
        RationalFunction r(1);
        for (std::int64_t i = 0; i < x; ++i) r *= b;
        return r;
      }
      case Expr::Kind::call:
        error(Kind::semantic, e.pos, "'" + e.name + "(...)' is not allowed in a rational expression");
    }
    error(Kind::semantic, e.pos, "unsupported expression");
  }

  static bool is_special_call(const Expr& e) {
    return e.kind == Expr::Kind::call && (e.name == "binom" || e.name == "pow" || e.name == "sign");
  }

  static void expect_args(const Expr& e, std::size_t count) {
    if (e.args.size() != count) {
      error(Kind::arity, e.pos,
            e.name + " expects " + std::to_string(count) + " arguments, got " + std::to_string(e.args.size()));
    }
  }

  static void term_factor(const Expr& e, bool inverted, VarSet scope, HyperTerm& t) {
    switch (e.kind) {
      case Expr::Kind::mul:
        term_factor(e.args[0], inverted, scope, t);
        term_factor(e.args[1], inverted, scope, t);
        return;
      case Expr::Kind::div:
        term_factor(e.args[0], inverted, scope, t);
        term_factor(e.args[1], !inverted, scope, t);
        return;
      case Expr::Kind::neg:
        t.times_prefactor(Factored(-1));
        term_factor(e.args[0], inverted, scope, t);
        return;
      case Expr::Kind::call:
        if (e.name == "binom") {
          expect_args(e, 2);
          if (inverted) error(Kind::semantic, e.pos, "binom(...) cannot appear in a denominator");
          t.times_binomial(linear(e.args[0], scope), linear(e.args[1], scope));
          return;
        }
        if (e.name == "pow") {
          expect_args(e, 2);
          if (e.args[0].kind != Expr::Kind::number) {
            error(Kind::semantic, e.args[0].pos, "pow base must be an integer literal");
          }
          const std::int64_t base = small_int(e.args[0]);
          if (base < 2) error(Kind::semantic, e.args[0].pos, "pow base must be at least 2");
          const LinearForm x = linear(e.args[1], scope);
          t.times_power(base, inverted ? -x : x);
          return;
        }
        if (e.name == "sign") {
          expect_args(e, 1);
          t.times_sign(linear(e.args[0], scope));
          return;
        }
        error(Kind::resolution, e.pos, "unknown function '" + e.name + "'");
      default: {
        const RationalFunction r = rational(e, scope);
        if (r.is_zero() && inverted) error(Kind::semantic, e.pos, "division by zero");
        const Factored f = Factored::from_rational_function(r);
        t.times_prefactor(inverted ? f.inverse() : f);
      }
    }
  }

  static ClosedForm closed(const Expr& e, Var param) {
    VarSet scope;
    scope.set(index(param));
    switch (e.kind) {
      case Expr::Kind::number: return ClosedForm(MultiPoly(BigRational(e.value)));
      case Expr::Kind::name: return ClosedForm(MultiPoly::var(in_scope(e, scope)));
      case Expr::Kind::neg: return closed(e.args[0], param).scaled(BigRational(-1));
      case Expr::Kind::add: return closed(e.args[0], param) + closed(e.args[1], param);
      case Expr::Kind::sub: return closed(e.args[0], param) - closed(e.args[1], param);
      case Expr::Kind::mul: return closed(e.args[0], param) * closed(e.args[1], param);
      case Expr::Kind::div: {
        const ClosedForm d = closed(e.args[1], param);
        const auto& en = d.entries();
        if (en.size() != 1 || en.begin()->first != ClosedForm::Key{1, 0} || !en.begin()->second.is_constant()) {
          error(Kind::semantic, e.args[1].pos, "closed forms may only be divided by nonzero constants");
        }
        return closed(e.args[0], param).scaled(BigRational(1) / en.begin()->second.constant_term());
      }
      case Expr::Kind::power: {
        if (e.args[1].kind != Expr::Kind::number) {
          error(Kind::semantic, e.args[1].pos, "exponent must be a nonnegative integer");
        }
        const ClosedForm b = closed(e.args[0], param);
        ClosedForm r(MultiPoly(1));
        for (std::int64_t i = 0, x = small_int(e.args[1]); i < x; ++i) r = r * b;
        return r;
      }
      case Expr::Kind::call: {
        if (e.name == "pow" || e.name == "sign") {
          const bool is_pow = e.name == "pow";
          expect_args(e, is_pow ? 2 : 1);
          std::int64_t base = -1;
          if (is_pow) {
            if (e.args[0].kind != Expr::Kind::number) {
              error(Kind::semantic, e.args[0].pos, "pow base must be an integer literal");
            }
            base = small_int(e.args[0]);
            if (base < 1) error(Kind::semantic, e.args[0].pos, "pow base must be positive");
          }
          const LinearForm x = linear(e.args[is_pow ? 1 : 0], scope);
          const std::int64_t c = x.coeff(param);
          if (c < 0) error(Kind::semantic, e.pos, "exponent must be nondecreasing in " + std::string(var_name(param)));
          const BigRational scale = pow(BigRational(static_cast<long long>(base)), x.constant());
          if (!is_pow) return ClosedForm::exponential(1, static_cast<int>(c & 1)).scaled(scale);
          const BigInt grown = pow_int(base, c);
          if (!grown.fits_slong_p()) error(Kind::semantic, e.pos, "exponential base is too large");
          return ClosedForm::exponential(grown.get_si(), 0).scaled(scale);
        }
        error(Kind::semantic, e.pos, "'" + e.name + "(...)' is not allowed in a closed form");
      }
    }
    error(Kind::semantic, e.pos, "unsupported expression");
  }

  static SumBound bound(const Expr& e, VarSet scope) {
    if (e.kind == Expr::Kind::call && e.name == "floor2") {
      expect_args(e, 1);
      return SumBound::floor_half(linear(e.args[0], scope));
    }
    return SumBound::affine(linear(e, scope));
  }

  static VarSet scope_of(const std::vector<Var>& vars) {
    VarSet s;
    for (Var v : vars) s.set(index(v));
    return s;
  }

  void add(const TermDef& d) {
    declare(d.name, d.pos);
    TermEntry t{d.name, param_list(d.params, d.pos), HyperTerm()};
    for (Var v : t.params) t.term.declare(v);
    term_factor(d.body, false, scope_of(t.params), t.term);
    out_.terms.emplace(d.name, std::move(t));
  }

  void add(const CertDef& d) {
    declare(d.name, d.pos);
    CertEntry c{d.name, param_list(d.params, d.pos), RationalFunction()};
    c.value = rational(d.body, scope_of(c.params));
    out_.certs.emplace(d.name, std::move(c));
  }

  static void flatten(const Expr& e, int sign, std::vector<std::pair<int, const Expr*>>& out) {
    if (e.kind == Expr::Kind::add || e.kind == Expr::Kind::sub) {
      flatten(e.args[0], sign, out);
      flatten(e.args[1], e.kind == Expr::Kind::add ? sign : -sign, out);
    } else if (e.kind == Expr::Kind::neg) {
      flatten(e.args[0], -sign, out);
    } else {
      out.emplace_back(sign, &e);
    }
  }

  static void product_leaves(const Expr& e, bool inverted, std::vector<std::pair<bool, const Expr*>>& out,
                             int& sign) {
    if (e.kind == Expr::Kind::mul || e.kind == Expr::Kind::div) {
      product_leaves(e.args[0], inverted, out, sign);
      product_leaves(e.args[1], e.kind == Expr::Kind::div ? !inverted : inverted, out, sign);
    } else if (e.kind == Expr::Kind::neg) {
      sign = -sign;
      product_leaves(e.args[0], inverted, out, sign);
    } else {
      out.emplace_back(inverted, &e);
    }
  }

  void add(const RecurrenceDef& d) {
    declare(d.name, d.pos);
    const auto ps = param_list(d.params, d.pos);
    if (ps.size() != 2) {
      error(Kind::arity, d.pos, "recurrence " + d.name + " takes (shift variable, summation variable)");
    }
    const Var shift = ps[0];
    const Var sum = ps[1];
    VarSet shift_scope;
    shift_scope.set(index(shift));

    std::vector<std::pair<int, const Expr*>> parts;
    flatten(d.lhs, 1, parts);
    const TermEntry* term = nullptr;
    std::vector<RationalFunction> coeffs;
    for (const auto& [sign0, part] : parts) {
      int sign = sign0;
      std::vector<std::pair<bool, const Expr*>> leaves;
      product_leaves(*part, false, leaves, sign);
      RationalFunction coef(sign);
      std::optional<std::int64_t> shift_by;
      for (const auto& [inv, leaf] : leaves) {
        const bool is_term_call = leaf->kind == Expr::Kind::call && out_.terms.count(leaf->name) != 0;
        if (!is_term_call) {
          if (leaf->kind == Expr::Kind::call && !is_special_call(*leaf)) {
            error(Kind::resolution, leaf->pos, "undefined term '" + leaf->name + "'");
          }
          const RationalFunction r = rational(*leaf, shift_scope);
          if (inv && r.is_zero()) error(Kind::semantic, leaf->pos, "division by zero");
          coef = inv ? coef / r : coef * r;
          continue;
        }
        const TermEntry& t = out_.terms.at(leaf->name);
        if (inv || shift_by) error(Kind::semantic, leaf->pos, "each summand must contain exactly one term call");
        if (term && term != &t) {
          error(Kind::semantic, leaf->pos, "all summands must use the same term, found '" + t.name + "' and '" +
                                              term->name + "'");
        }
        term = &t;
        if (leaf->args.size() != t.params.size()) {
          error(Kind::arity, leaf->pos,
                t.name + " expects " + std::to_string(t.params.size()) + " arguments, got " +
                    std::to_string(leaf->args.size()));
        }
        if (std::find(t.params.begin(), t.params.end(), shift) == t.params.end() ||
            std::find(t.params.begin(), t.params.end(), sum) == t.params.end()) {
          error(Kind::semantic, leaf->pos, "term " + t.name + " must take both recurrence variables");
        }
        shift_by = 0;
        for (std::size_t i = 0; i < t.params.size(); ++i) {
          const LinearForm a = linear(leaf->args[i], scope_of(t.params));
          const LinearForm off = a - LinearForm(t.params[i]);
          if (!off.is_constant() || (off.constant() != 0 && (t.params[i] != shift || off.constant() < 0))) {
            error(Kind::semantic, leaf->args[i].pos,
                  "argument " + std::to_string(i + 1) + " of " + t.name + " must be " +
                      std::string(var_name(t.params[i])) +
                      (t.params[i] == shift ? " plus a nonnegative integer" : ""));
          }
          if (t.params[i] == shift) shift_by = off.constant();
        }
      }
      if (!shift_by) error(Kind::semantic, part->pos, "summand without a term call");
      const auto j = static_cast<std::size_t>(*shift_by);
      if (coeffs.size() <= j) coeffs.resize(j + 1, RationalFunction(0));
      coeffs[j] += coef;
    }
    auto cert = out_.certs.find(d.cert);
    if (cert == out_.certs.end()) error(Kind::resolution, d.pos, "undefined certificate '" + d.cert + "'");
    out_.recurrences.emplace(d.name, WZProblem{d.name, term->term, shift, sum, coeffs, cert->second.value, ""});
  }

  void add(const SumDef& d) {
    declare(d.name, d.pos);
    IdentityCase c;
    c.id = d.name;
    c.param = variable(d.param, d.pos);
    VarSet bound_vars;
    bound_vars.set(index(c.param));
    const SumExpr* s = &d.sum;
    for (;;) {
      const Var v = variable(s->var, s->pos);
      if (bound_vars.test(index(v))) error(Kind::semantic, s->pos, "variable '" + s->var + "' is already bound");
      c.loops.push_back({v, bound(s->lower, bound_vars), bound(s->upper, bound_vars)});
      bound_vars.set(index(v));
      if (s->inner.empty()) break;
      s = &s->inner.front();
    }
    for (const auto& w : d.where) {
      const Var v = variable(w.var, w.value.pos);
      if (bound_vars.test(index(v))) {
        error(Kind::semantic, w.value.pos, "variable '" + w.var + "' is already bound");
      }
      c.bindings.push_back({v, bound(w.value, bound_vars)});
      bound_vars.set(index(v));
    }
    auto term = out_.terms.find(s->term);
    if (term == out_.terms.end()) error(Kind::resolution, s->pos, "undefined term '" + s->term + "'");
    for (Var v : term->second.params) {
      if (!bound_vars.test(index(v))) {
        error(Kind::semantic, s->pos,
              "parameter " + std::string(var_name(v)) + " of " + s->term + " is not bound by the sum");
      }
    }
    c.summand = term->second.term;
    c.rhs = closed(d.rhs, c.param);
    c.valid_from = d.valid_from.value_or(0);
    if (d.literal) {
      if (!out_.find_sum(d.literal->of)) {
        error(Kind::resolution, d.pos, "literal of undefined sum '" + d.literal->of + "'");
      }
      c.literal_of = d.literal->of;
      c.erratum = d.literal->text;
    }
    out_.sums.push_back(std::move(c));
  }

  void add(const CheckDef& d) {
    declare(d.name, d.pos);
    CheckCase c;
    c.id = d.name;
    c.kind = d.kind;
    c.recurrence = d.recurrence;
    auto rec = out_.recurrences.find(d.recurrence);
    if (rec == out_.recurrences.end()) {
      error(Kind::resolution, d.pos, "undefined recurrence '" + d.recurrence + "'");
    }
    c.problem = rec->second;
    c.problem.id = d.name;
    if (d.kind == CheckDef::Kind::prove) {
      const RationalFunction v = rational(d.base_value, VarSet{});
      c.base = BaseCase{Point{{c.problem.shift_var, d.base_point}}, v.num().constant_term() / v.den().constant_term()};
    }
    for (const auto& r : d.ranges) {
      const Var v = variable(r.var, d.pos);
      if (r.hi < r.lo) error(Kind::semantic, d.pos, "empty range for " + r.var);
      if (!c.ranges.emplace(v, std::make_pair(r.lo, r.hi)).second) {
        error(Kind::semantic, d.pos, "range for " + r.var + " given twice");
      }
    }
    if (d.literal) {
      if (!out_.find_check(d.literal->of)) {
        error(Kind::resolution, d.pos, "literal of undefined check '" + d.literal->of + "'");
      }
      c.literal_of = d.literal->of;
      c.erratum = d.literal->text;
      c.problem.erratum = d.literal->text;
    }
    out_.checks.push_back(std::move(c));
  }

  SpecDocument out_;
};

inline SpecDocument analyze(const Document& doc) { return Analyzer().run(doc); }
inline SpecDocument parse_spec(std::string_view text) { return analyze(parse_document(text)); }

}  // namespace wzkit::dsl
