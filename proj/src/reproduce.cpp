#include "cartan/reproduce.hpp"

#include "cartan/cyclic.hpp"
#include "cartan/der_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace cartan {

namespace {

std::string vec_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rational_string(v[i]);
  return s + ")";
}

Combination<Monomial> as_combination(const Element& x) { return {x.terms().begin(), x.terms().end()}; }

/// Cohomology of L cached per degree.
class LoopClasses {
 public:
  explicit LoopClasses(const LoopModel& model) : model_(model), cx_(model.complex()) {}

  const DegreeCohomology<Monomial>& at(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, degree_cohomology(cx_, n)).first;
    return it->second;
  }

  /// Coordinates of [z]; nullopt when z is not a cocycle.
  std::optional<std::vector<Rational>> class_of(const Element& z, int degree) {
    if (!model_.d(z).is_zero()) return std::nullopt;
    return at(degree).class_of(as_combination(z));
  }

  bool equal(const Element& a, const Element& b, int degree, std::string& detail) {
    const auto ca = class_of(a, degree);
    const auto cb = class_of(b, degree);
    if (!ca || !cb) {
      detail = !ca ? "left side is not a cocycle: d = " + model_.d(a).to_string()
                   : "right side is not a cocycle: d = " + model_.d(b).to_string();
      return false;
    }
    if (*ca == *cb) return true;
    detail = "classes differ in H^" + std::to_string(degree) + ": lhs " + vec_string(*ca) + ", rhs " + vec_string(*cb);
    return false;
  }

 private:
  const LoopModel& model_;
  BasisComplex<Monomial> cx_;
  std::map<int, DegreeCohomology<Monomial>> cache_;
};

int degree_or(const Element& a, const Element& b) {
  if (!a.is_zero()) return *a.degree();
  if (!b.is_zero()) return *b.degree();
  return 0;
}

void class_claim(ReportSection& sec, LoopClasses& classes, const std::string& name, const Element& lhs,
                 const Element& rhs) {
  std::string detail;
  const bool ok = classes.equal(lhs, rhs, degree_or(lhs, rhs), detail);
  if (!ok) detail += "; lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
  sec.checks.push_back({name, ok, ok ? "" : detail});
}

void check(ReportSection& sec, const std::string& name, bool ok, const std::string& detail = "") {
  sec.checks.push_back({name, ok, ok ? "" : detail});
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::vector<std::size_t> base_dimensions(const LoopModel& model, int max_degree) {
  std::vector<std::size_t> out;
  for (const auto& h : cohomology_range(model.base_complex(), 0, max_degree)) out.push_back(h.dimension());
  return out;
}

/// H(Der) in every homological degree, with the given derivations checked to be a basis.
void der_claim(ReportSection& sec, const PresentationPtr& p, const std::vector<const Derivation*>& expected,
               const std::string& name) {
  std::map<int, std::vector<const Derivation*>> by_degree;
  for (const Derivation* t : expected) by_degree[-t->degree()].push_back(t);
  std::string detail;
  bool ok = true;
  for (const DerHomology& h : der_homology_all(p)) {
    auto want = by_degree[h.n];
    if (h.cohomology.dimension() != want.size()) {
      ok = false;
      detail += "H_" + std::to_string(h.n) + " has dim " + std::to_string(h.cohomology.dimension()) + "; ";
      continue;
    }
    if (want.empty()) continue;
    std::vector<std::vector<Rational>> cols;
    for (const Derivation* t : want) {
      try {
        cols.push_back(der_class(h, *t));
      } catch (const NotACocycle&) {
        ok = false;
        detail += t->to_string() + " is not a cocycle; ";
      }
    }
    if (cols.size() != want.size()) continue;
    SparseMatrix m(h.cohomology.dimension(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.columns[j] = from_dense(cols[j]);
    if (rank(m) != want.size()) {
      ok = false;
      detail += "classes in H_" + std::to_string(h.n) + " are dependent; ";
    }
  }
  check(sec, name, ok, detail);
}

void pairing_checks(ReportSection& sec, const LoopModel& model, const FundamentalClass& fc, int lo, int hi) {
  for (int k = 0; k <= 1; ++k) {
    std::size_t tested = 0;
    bool ok = true;
    std::string detail;
    for (int n = lo; n <= hi; ++n) {
      const PairingMatrix pm = pairing_matrix(model, fc, k, n);
      if (pm.rows == 0 && pm.cols == 0) continue;
      ++tested;
      sec.lines.push_back("pairing k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + std::to_string(pm.rows) +
                          "x" + std::to_string(pm.cols) + " rank " + std::to_string(pm.rank));
      if (!pm.nondegenerate()) {
        ok = false;
        detail += "n=" + std::to_string(n) + " is " + std::to_string(pm.rows) + "x" + std::to_string(pm.cols) +
                  " of rank " + std::to_string(pm.rank) + "; ";
      }
    }
    check(sec,
          "pairing H^-n(Hom(L_(" + std::to_string(k) + "), AV)) x H^(m+n)(L_(" + std::to_string(k) +
              ")) is perfect for n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
          ok && tested > 0, tested == 0 ? "no nonzero pairing tested" : detail);
  }
}

void hit_checks(ReportSection& sec, const LoopModel& model, const FundamentalClass& fc,
                const std::vector<Derivation>& basis) {
  for (const Derivation& t : basis) {
    const auto alpha = hit_fundamental_class(model, fc, t);
    if (alpha) sec.lines.push_back("e_" + t.to_string() + "(" + alpha->to_string() + ") = [fundamental class]");
    check(sec, "e_" + t.to_string() + " hits the fundamental class", alpha.has_value(), "no witness in L_(1)");
  }
}

std::vector<Derivation> der_basis(const PresentationPtr& p) {
  std::vector<Derivation> out;
  for (const DerHomology& h : der_homology_all(p))
    for (const Derivation& t : h.representatives) out.push_back(t);
  return out;
}

void suite_section(Report& r, const PresentationPtr& p, const ReproduceOptions& o, const std::vector<Derivation>& extra) {
  ReportSection& sec = r.section("identity suite");
  const SuiteResult res = run_identity_suite(p, o.suite, extra);
  const std::pair<const char*, const IdentityReport*> parts[] = {{"loop model calculus", &res.loop},
                                                                 {"Hochschild calculus", &res.hochschild},
                                                                 {"comparison maps", &res.comparison},
                                                                 {"cyclic homotopy", &res.cyclic}};
  for (const auto& [title, rep] : parts) {
    for (const auto& [name, count] : rep->checks) {
      std::string detail;
      for (const auto& f : rep->failures)
        if (f.identity == name) {
          detail = f.witness;
          break;
        }
      check(sec, std::string(title) + ": " + name + " (" + std::to_string(count) + " evaluations)", detail.empty(),
            detail);
    }
  }
  sec.data["evaluations"] = res.evaluations();
  sec.data["trials"] = o.suite.trials;
  sec.data["max_degree"] = o.suite.max_degree;
}

Report reproduce_cp2(const SourceDocument& doc, const ReproduceOptions& o) {
  Report r;
  const int maxdeg = o.max_degree < 0 ? 26 : o.max_degree;
  const LoopModel model = LoopModel::build(doc.algebra);
  const PresentationPtr& ext = model.extended();
  LoopClasses classes(model);
  const auto el = [&](const std::string& s) { return parse_polynomial(ext, s); };
  const Derivation& t1 = *doc.derivation("t1");
  const Derivation& t2 = *doc.derivation("t2");

  ReportSection& coh = r.section("cohomology");
  std::vector<std::size_t> want(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (int n = 0; n <= std::min(4, maxdeg); n += 2) want[static_cast<std::size_t>(n)] = 1;
  const auto got = base_dimensions(model, maxdeg);
  check(coh, "H(AV) = Q[x]/(x^3) up to degree " + std::to_string(maxdeg), got == want, "dims " + dims_string(got));
  std::vector<std::size_t> loop_dims;
  for (int n = 0; n <= maxdeg; ++n) loop_dims.push_back(classes.at(n).dimension());
  check(coh, "dim H^n(L) = 1 for 0 <= n <= " + std::to_string(maxdeg), std::all_of(loop_dims.begin(), loop_dims.end(), [](std::size_t d) { return d == 1; }),
        "dims " + dims_string(loop_dims));
  der_claim(coh, doc.algebra, {&t1, &t2}, "H(Der) = Q{(y,1), (y,x)} in degrees 5 and 3");

  ReportSection& ops = r.section("operators");
  const Derivation e1 = op_e(model, t1), e2 = op_e(model, t2), L1 = op_L(model, t1), L2 = op_L(model, t2);
  const std::size_t y = 1, ybar = model.bar(1);
  const auto on_gens = [&](int degree, std::map<std::size_t, Element> values) {
    return Derivation::from_values(ext, ext, degree, values);
  };
  const auto formula = [&](const std::string& name, const Derivation& got, const Derivation& want) {
    check(ops, name, got == want, "computed " + got.to_string());
  };
  formula("e1 = -(y_bar,1)", e1, on_gens(-4, {{ybar, el("-1")}}));
  formula("e2 = (y_bar,x)", e2, on_gens(-2, {{ybar, el("x")}}));
  formula("L1 = (y,1)", L1, on_gens(-5, {{y, el("1")}}));
  formula("L2 = (y,x) + (y_bar,x_bar)", L2, on_gens(-3, {{y, el("x")}, {ybar, el("x_bar")}}));
  const int top_n = std::min(4, (maxdeg - 2) / 4);
  const auto alpha = [&](int n) { return el("x_bar*y_bar^" + std::to_string(n)); };
  const auto beta_printed = [&](int n) {
    return el("x*y_bar^" + std::to_string(n) + " + " + std::to_string(3 * n) + " x_bar*y*y_bar^" + std::to_string(n - 1));
  };
  const auto beta = [&](int n) {
    return el("x*y_bar^" + std::to_string(n) + " - " + std::to_string(3 * n) + " x_bar*y*y_bar^" + std::to_string(n - 1));
  };
  const Element x = el("x");
  for (int n = 1; n <= top_n; ++n) {
    const Element d = model.d(beta_printed(n));
    check(ops, "beta_" + std::to_string(n) + " = x y_bar^n + 3n x_bar y y_bar^(n-1) is a cocycle", d.is_zero(),
          "d = " + d.to_string());
  }
  ops.lines.push_back("beta_n below is the cocycle x y_bar^n - 3n x_bar y y_bar^(n-1)");
  for (int n = 1; n <= top_n; ++n) {
    const std::string ns = std::to_string(n);
    const Rational N(n);
    class_claim(ops, classes, "e1(alpha_" + ns + ") = " + ns + " alpha_" + std::to_string(n - 1), e1.apply(alpha(n)),
                N * alpha(n - 1));
    class_claim(ops, classes, "e2(alpha_" + ns + ") = " + ns + " x alpha_" + std::to_string(n - 1), e2.apply(alpha(n)),
                N * (x * alpha(n - 1)));
    if (n == 1) {
      class_claim(ops, classes, "e1(beta_1) = -x", e1.apply(beta(1)), -x);
      class_claim(ops, classes, "e2(beta_1) = x^2", e2.apply(beta(1)), x * x);
    } else {
      class_claim(ops, classes, "e1(beta_" + ns + ") = -" + ns + " beta_" + std::to_string(n - 1), e1.apply(beta(n)),
                  -N * beta(n - 1));
      class_claim(ops, classes, "e2(beta_" + ns + ") = " + ns + " x beta_" + std::to_string(n - 1), e2.apply(beta(n)),
                  N * (x * beta(n - 1)));
    }
    class_claim(ops, classes, "L1(alpha_" + ns + ") = 0", L1.apply(alpha(n)), Element(ext));
    class_claim(ops, classes, "L2(alpha_" + ns + ") = 0", L2.apply(alpha(n)), Element(ext));
    class_claim(ops, classes, "L1(beta_" + ns + ") = -" + std::to_string(3 * n) + " alpha_" + std::to_string(n - 1),
                L1.apply(beta(n)), Rational(-3 * n) * alpha(n - 1));
    class_claim(ops, classes, "L2(beta_" + ns + ") = -" + std::to_string(2 * n) + " x alpha_" + std::to_string(n - 1),
                L2.apply(beta(n)), Rational(-2 * n) * (x * alpha(n - 1)));
  }

  ReportSection& dual = r.section("duality");
  const FundamentalClass fc = fundamental_class(model);
  check(dual, "formal dimension 4 with fundamental class [x^2]",
        fc.dimension == 4 && !is_zero(fundamental_coordinate(fc, el("x^2"))), "m = " + std::to_string(fc.dimension));
  pairing_checks(dual, model, fc, -fc.dimension, 6);
  hit_checks(dual, model, fc, {t1, t2});
  suite_section(r, doc.algebra, o, {t1, t2});
  return r;
}

Report reproduce_m11(const SourceDocument& doc, const ReproduceOptions& o) {
  Report r;
  const int maxdeg = o.max_degree < 0 ? 22 : o.max_degree;
  const LoopModel model = LoopModel::build(doc.algebra);
  const PresentationPtr& ext = model.extended();
  LoopClasses classes(model);
  const Derivation& t = *doc.derivation("t");
  const auto elem = [&](const char* name) {
    const NamedElement* e = doc.element(name);
    return e->in_loop ? e->value : model.embed(e->value);
  };

  ReportSection& coh = r.section("cohomology");
  der_claim(coh, doc.algebra, {&t}, "H(Der) = Q{(z,1)}");
  // the stated algebra: Lambda(x,y) (x) Q[w,u] / (xy, xw, yu, xu + yw, w^2, wu, u^2), |w| = |u| = 8
  const PresentationPtr q = Presentation::create({{"x", 3}, {"y", 3}, {"w", 8}, {"u", 8}});
  std::vector<Element> rel;
  for (const char* s : {"x*y", "x*w", "y*u", "x*u + y*w", "w^2", "w*u", "u^2"}) rel.push_back(parse_polynomial(q, s));
  const auto want = quotient_dimensions(q, rel, maxdeg);
  const auto got = base_dimensions(model, maxdeg);
  check(coh, "dim H^n(AV) matches the stated presentation for n <= " + std::to_string(maxdeg), want == got,
        "H(AV) dims " + dims_string(got) + ", stated algebra " + dims_string(want));

  ReportSection& ops = r.section("operators");
  const FundamentalClass fc = fundamental_class(model);
  check(ops, "[xyz] spans the top class (m = 11)",
        fc.dimension == 11 && !is_zero(fundamental_coordinate(fc, elem("top"))),
        "m = " + std::to_string(fc.dimension));
  class_claim(ops, classes, "e_(z,1)([xyz z_bar]) = [xyz]", op_e(model, t).apply(elem("xyzzb")), elem("top"));
  class_claim(ops, classes, "L_(z,1)([xyz z_bar]) = [xy z_bar]", op_L(model, t).apply(elem("xyzzb")), elem("lie"));
  (void)ext;
  hit_checks(ops, model, fc, {t});
  suite_section(r, doc.algebra, o, {t});
  return r;
}

Report reproduce_m14(const SourceDocument& doc, const ReproduceOptions& o) {
  Report r;
  const LoopModel model = LoopModel::build(doc.algebra);
  const PresentationPtr& ext = model.extended();
  LoopClasses classes(model);
  const Derivation& t1 = *doc.derivation("t1");
  const Derivation& ta = *doc.derivation("ta");
  const auto elem = [&](const char* name) {
    const NamedElement* e = doc.element(name);
    return e->in_loop ? e->value : model.embed(e->value);
  };

  ReportSection& coh = r.section("cohomology");
  der_claim(coh, doc.algebra, {&t1, &ta}, "H(Der) = Q{(w,1), (w,a)}");
  const FundamentalClass fc = fundamental_class(model);
  std::vector<Element> gens;
  for (const char* s : {"a", "x", "x*b", "a*v - y*b", "a^2*w - a*b*v + x*y*v", "3*a*x*w + b^3"})
    gens.push_back(parse_polynomial(doc.algebra, s));
  std::string detail;
  bool generates = true;
  for (const Element& g : gens)
    if (!model.d(model.embed(g)).is_zero()) {
      generates = false;
      detail += g.to_string() + " is not a cocycle; ";
    }
  if (generates)
    for (int n = 0; n <= fc.dimension; ++n) {
      const std::size_t dim = degree_cohomology(model.base_complex(), n).dimension();
      const std::size_t rk = generated_rank(model, gens, n);
      if (rk != dim) {
        generates = false;
        detail += "degree " + std::to_string(n) + ": rank " + std::to_string(rk) + " of " + std::to_string(dim) + "; ";
      }
    }
  check(coh, "{a, x, xb, av-yb, a^2w-abv+xyv, 3axw+b^3} generates H(AV)", generates, detail);

  ReportSection& ops = r.section("operators");
  check(ops, "formal dimension 14 with fundamental class [a^2xw - xbva]",
        fc.dimension == 14 && !is_zero(fundamental_coordinate(fc, elem("top"))),
        "m = " + std::to_string(fc.dimension));
  for (const char* name : {"lie1", "liea"}) {
    const Element z = elem(name);
    check(ops, std::string("input ") + z.to_string() + " is a cocycle", model.d(z).is_zero(),
          "d = " + model.d(z).to_string());
  }
  for (const char* name : {"lie1_value", "liea_value"}) {
    const Element z = elem(name);
    const auto c = classes.class_of(z, *z.degree());
    const bool ok = c && std::any_of(c->begin(), c->end(), [](const Rational& q) { return !is_zero(q); });
    check(ops, z.to_string() + " is a nonzero class", ok, c ? "zero class" : "not a cocycle");
  }
  // nearest cocycle to the listed inputs: x b v w_bar - a x w w_bar + 2 x v w b_bar
  const Element fixed = -elem("ea");
  ops.lines.push_back("cocycle input used below: " + fixed.to_string());
  class_claim(ops, classes, "L_(w,1)(" + fixed.to_string() + ") = 2xv b_bar + ax w_bar", op_L(model, t1).apply(fixed),
              elem("lie1_value"));
  class_claim(ops, classes, "L_(w,a)(" + fixed.to_string() + ") = 3(1/2 a^2x w_bar + axv b_bar) + (axb v_bar + axw a_bar + xyb b_bar)",
              op_L(model, ta).apply(fixed), elem("liea_value"));
  class_claim(ops, classes, "e_(w,1)(a^2xw w_bar - axbv w_bar - 2axvw b_bar) = a^2xw - xbva", op_e(model, t1).apply(elem("e1")),
              elem("top"));
  class_claim(ops, classes, "e_(w,a)(axw w_bar - xbv w_bar - 2xvw b_bar) = a^2xw - xbva", op_e(model, ta).apply(elem("ea")),
              elem("top"));
  (void)ext;

  ReportSection& dual = r.section("duality");
  pairing_checks(dual, model, fc, -fc.dimension, 8);
  hit_checks(dual, model, fc, {t1, ta});
  suite_section(r, doc.algebra, o, {t1, ta});
  return r;
}

Report reproduce_sphere3(const SourceDocument& doc, const ReproduceOptions& o) {
  Report r;
  const int maxdeg = o.max_degree < 0 ? 12 : o.max_degree;
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("BV operator");
  const GradedMapSlice delta = bv_on_cohomology(model, 3);
  const Element x = Element::generator(model.extended(), 0);
  const bool ok = delta.matrix.rows == 1 && delta.matrix.cols == 1 && !delta.matrix.is_zero() && nonzero_class(model, x) &&
                  cohomologous(model, model.s(x), Element::generator(model.extended(), model.bar(0)));
  check(sec, "Delta[x] = [x_bar]", ok, "matrix " + std::to_string(delta.matrix.rows) + "x" + std::to_string(delta.matrix.cols));
  bool square = true;
  std::string detail;
  for (int n = 2; n <= maxdeg; ++n) {
    const SparseMatrix comp = bv_on_cohomology(model, n - 1).matrix.compose(bv_on_cohomology(model, n).matrix);
    if (!comp.is_zero()) {
      square = false;
      detail += "H^" + std::to_string(n) + "; ";
    }
  }
  check(sec, "Delta^2 = 0 on H^n(L), n <= " + std::to_string(maxdeg), square, detail);
  suite_section(r, doc.algebra, o, der_basis(doc.algebra));
  return r;
}

Report reproduce_oddproj(const SourceDocument& doc, int n, const ReproduceOptions& o) {
  Report r;
  const int maxdeg = o.max_degree < 0 ? 20 : o.max_degree;
  const LoopModel model = LoopModel::build(doc.algebra);
  const PresentationPtr& ext = model.extended();
  const BasisComplex<CyclicKey> cx = cyclic_complex(model);

  ReportSection& der = r.section("derivations");
  std::vector<Derivation> expected;
  for (int i = 0; i < n; ++i)
    expected.push_back(Derivation::single(doc.algebra, 1, power(Element::generator(doc.algebra, 0), i)));
  std::vector<const Derivation*> ptrs;
  for (const auto& t : expected) ptrs.push_back(&t);
  der_claim(der, doc.algebra, ptrs, "H(Der) = Q{(y, x^i) : 0 <= i < " + std::to_string(n) + "}");

  ReportSection& sec = r.section("cyclic complex");
  const auto alpha = [&](int j, int k) {
    return lift(parse_polynomial(ext, "x^" + std::to_string(j - 1) + "*x_bar*y_bar^" + std::to_string(k)), 0);
  };
  bool square = true, dims_ok = true, span_ok = true, cocycles = true, zero_L = true;
  std::string sq_detail, dim_detail, span_detail, coc_detail, L_detail;
  std::vector<std::size_t> dims;
  for (int d = 0; d <= maxdeg; ++d) {
    for (const CyclicKey& key : cx.basis(d)) {
      const CyclicElement z{{key, Rational(1)}};
      if (!d_u(model, d_u(model, z)).empty()) {
        square = false;
        sq_detail = format_cyclic(model, z);
      }
    }
    const DegreeCohomology<CyclicKey> h = degree_cohomology(cx, d);
    dims.push_back(h.dimension());
    std::vector<CyclicElement> classes;
    for (int j = 1; j <= n; ++j)
      for (int k = 0; 2 * j - 1 + 2 * n * k <= d; ++k)
        if (2 * j - 1 + 2 * n * k == d) classes.push_back(alpha(j, k));
    if (d % 2 == 0) classes.push_back(CyclicElement{{CyclicKey{d / 2, ext->unit()}, Rational(1)}});
    if (h.dimension() != classes.size()) {
      dims_ok = false;
      dim_detail += "H^" + std::to_string(d) + " dim " + std::to_string(h.dimension()) + " vs " +
                    std::to_string(classes.size()) + "; ";
    }
    SparseMatrix m(h.dimension(), classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!d_u(model, classes[c]).empty()) {
        cocycles = false;
        coc_detail += format_cyclic(model, classes[c]) + "; ";
        continue;
      }
      m.columns[c] = from_dense(h.class_of(classes[c]));
    }
    if (cocycles && rank(m) != std::min(h.dimension(), classes.size())) {
      span_ok = false;
      span_detail += "H^" + std::to_string(d) + "; ";
    }
    for (const Derivation& t : expected) {
      const auto L = cyclic_L(model, t);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const CyclicElement image = L.apply(classes[c]);
        if (image.empty()) continue;
        const int target = d + t.degree();
        if (target < 0) continue;
        const DegreeCohomology<CyclicKey> ht = degree_cohomology(cx, target);
        if (!ht.is_coboundary(image)) {
          zero_L = false;
          L_detail += t.to_string() + " on " + format_cyclic(model, classes[c]) + "; ";
        }
      }
    }
  }
  check(sec, "d_u^2 = 0 on every basis element of degree <= " + std::to_string(maxdeg), square, sq_detail);
  check(sec, "alpha(j,k) = x^(j-1) x_bar y_bar^k are d_u-cocycles", cocycles, coc_detail);
  check(sec, "dim H^d(E) = #{alpha(j,k) of degree d} + [d even] for d <= " + std::to_string(maxdeg), dims_ok,
        dim_detail + "dims " + dims_string(dims));
  check(sec, "the alpha(j,k) and u^k are independent in H(E)", span_ok, span_detail);
  check(sec, "induced Lbar_(y,x^i) vanishes on every alpha(j,k) and u^k", zero_L, L_detail);
  suite_section(r, doc.algebra, o, expected);
  return r;
}

Report reproduce_elliptic(const SourceDocument& doc, const ReproduceOptions& o) {
  Report r;
  ReportSection& sec = r.section("scope");
  if (!o.heavy) {
    sec.lines.push_back("skipped: pass --heavy (and optionally --max-degree, default 40)");
    return r;
  }
  ReproduceOptions capped = o;
  capped.suite.max_degree = o.max_degree < 0 ? 40 : o.max_degree;
  capped.suite.cyclic_degree = std::min(capped.suite.cyclic_degree, capped.suite.max_degree);
  sec.lines.push_back("internal consistency only, degree cap " + std::to_string(capped.suite.max_degree));
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& coh = r.section("cohomology");
  const auto dims = base_dimensions(model, capped.suite.max_degree);
  coh.lines.push_back("dim H^n(AV), n <= " + std::to_string(capped.suite.max_degree) + ": " + dims_string(dims));
  check(coh, "H^0(AV) = Q", !dims.empty() && dims[0] == 1);
  suite_section(r, doc.algebra, capped, {});
  return r;
}

}  // namespace

bool cohomologous(const LoopModel& model, const Element& a, const Element& b) {
  LoopClasses classes(model);
  std::string detail;
  return classes.equal(a, b, degree_or(a, b), detail);
}

bool nonzero_class(const LoopModel& model, const Element& z) {
  if (z.is_zero() || !model.d(z).is_zero()) return false;
  const auto h = degree_cohomology(model.complex(), *z.degree());
  return !h.is_coboundary(as_combination(z));
}

std::vector<std::size_t> quotient_dimensions(const PresentationPtr& free_algebra, const std::vector<Element>& relations,
                                             int max_degree) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= max_degree; ++n) {
    const auto& basis = free_algebra->basis(n);
    std::vector<Element> ideal;
    for (const Element& r : relations) {
      if (r.is_zero()) continue;
      const int rd = *r.degree();
      if (rd > n) continue;
      for (const Monomial& m : free_algebra->basis(n - rd)) ideal.push_back(Element(free_algebra, m) * r);
    }
    SparseMatrix mat(basis.size(), ideal.size());
    for (std::size_t j = 0; j < ideal.size(); ++j) mat.columns[j] = coordinates(basis, as_combination(ideal[j]));
    out.push_back(basis.size() - rank(mat));
  }
  return out;
}

std::size_t generated_rank(const LoopModel& model, const std::vector<Element>& generators, int n) {
  const DegreeCohomology<Monomial> h = degree_cohomology(model.base_complex(), n);
  if (h.dimension() == 0) return 0;
  std::vector<Element> products;
  std::function<void(std::size_t, Element, int)> walk = [&](std::size_t i, Element acc, int deg) {
    if (deg == n) {
      if (!acc.is_zero()) products.push_back(acc);
      return;
    }
    if (i == generators.size() || deg > n) return;
    walk(i + 1, acc, deg);
    const int gd = *generators[i].degree();
    if (gd == 0) return;
    Element cur = acc;
    for (int e = 1; deg + e * gd <= n; ++e) {
      cur = cur * generators[i];
      if (cur.is_zero()) break;
      walk(i + 1, cur, deg + e * gd);
    }
  };
  walk(0, Element::scalar(model.base(), 1), 0);
  SparseMatrix m(h.dimension(), products.size());
  for (std::size_t j = 0; j < products.size(); ++j) m.columns[j] = from_dense(h.class_of(as_combination(model.embed(products[j]))));
  return rank(m);
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("CARTAN_FIXTURES"); env && *env) return env;
  return CARTAN_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
  return {"cp2", "m11", "m14", "sphere3", "oddproj-1", "oddproj-2", "oddproj-3", "elliptic228"};
}

std::string fixture_path(const std::string& name, const std::string& dir) { return dir + "/" + name + ".cdga"; }

Report reproduce(const std::string& name, const ReproduceOptions& options) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw Error("unknown fixture '" + name + "'");
  const SourceDocument doc = parse_file(fixture_path(name, options.fixture_dir));
  Report r;
  if (name == "cp2") r = reproduce_cp2(doc, options);
  else if (name == "m11") r = reproduce_m11(doc, options);
  else if (name == "m14") r = reproduce_m14(doc, options);
  else if (name == "sphere3") r = reproduce_sphere3(doc, options);
  else if (name.rfind("oddproj-", 0) == 0) r = reproduce_oddproj(doc, std::stoi(name.substr(8)), options);
  else r = reproduce_elliptic(doc, options);
  r.request = {{"command", "reproduce"}, {"fixture", name}, {"max_degree", options.max_degree}, {"heavy", options.heavy},
               {"trials", options.suite.trials}};
  r.presentation_hash = presentation_hash(*doc.algebra);
  r.seed = options.suite.seed;
  return r;
}

}  // namespace cartan
