#include "cartan/loop_model.hpp"

#include <algorithm>
#include <memory>

namespace cartan {

namespace {

Rational sign_of(int parity) { return (parity & 1) ? Rational(-1) : Rational(1); }

Derivation bar_map(PresentationPtr ext, std::size_t rank) {
  std::map<std::size_t, Element> values;
  for (std::size_t i = 0; i < rank; ++i) values.emplace(i, Element::generator(ext, rank + i));
  return Derivation::from_values(ext, ext, -1, values);
}

}  // namespace

LoopModel LoopModel::build(PresentationPtr base) {
  for (const Generator& g : base->generators())
    if (g.degree < 2)
      throw SimplyConnectedError("loop model needs every generator in degree >= 2; '" + g.name + "' has degree " +
                                 std::to_string(g.degree));
  const std::size_t n = base->size();
  std::vector<Generator> gens = base->generators();
  for (std::size_t i = 0; i < n; ++i) gens.push_back({base->generator(i).name + "_bar", base->generator(i).degree - 1});

  PresentationPtr skeleton = Presentation::create(gens);
  const Derivation s0 = bar_map(skeleton, n);
  std::vector<Terms> diff(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, c] : base->differential(i)) add_term(diff[i], base->embed(m, *skeleton), c);
    // [d, s] = 0 and s(v_bar) = 0 force d(v_bar) = -s(dv)
    for (const auto& [m, c] : diff[i]) add_terms(diff[n + i], s0.apply(m), -c);
  }

  LoopModel model;
  model.base_ = base;
  model.ext_ = Presentation::create(std::move(gens), std::move(diff));
  model.s_ = bar_map(model.ext_, n);
  model.d_ = Derivation::differential(model.ext_);
  if (!der_differential(model.s_).is_zero()) throw InvalidPresentation("loop model: ds + sd != 0");
  if (!lie_bracket(model.s_, model.s_).is_zero()) throw InvalidPresentation("loop model: s^2 != 0");
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : model.ext_->differential(n + i))
      if (model.word_length(m) != 1)
        throw InvalidPresentation("loop model: d(" + gens[n + i].name + ") leaves word length 1");
  return model;
}

int LoopModel::word_length(const Monomial& m) const {
  int k = 0;
  for (std::size_t i = rank(); i < m.size(); ++i) k += m[i];
  return k;
}

std::pair<Monomial, Monomial> LoopModel::split(const Monomial& m) const {
  std::vector<int> a(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(rank()));
  std::vector<int> w = m.exponents();
  std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rank()), 0);
  return {Monomial(std::move(a)), Monomial(std::move(w))};
}

Element LoopModel::embed(const Element& base_element) const {
  Terms out;
  for (const auto& [m, c] : base_element.terms()) add_term(out, embed(m), c);
  return Element(ext_, std::move(out));
}

Element LoopModel::restrict_to_base(const Element& a) const {
  Terms out;
  for (const auto& [m, c] : a.terms()) {
    if (word_length(m) != 0) throw DegreeError("element " + a.to_string() + " has barred factors");
    add_term(out, split(m).first, c);
  }
  return Element(base_, std::move(out));
}

std::vector<Monomial> LoopModel::bar_words(int k) const {
  std::vector<Monomial> out;
  const std::size_t n = rank();
  std::vector<int> exps(2 * n, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.emplace_back(exps);
      return;
    }
    const int cap = ext_->odd(n + i) ? std::min(1, remaining) : remaining;
    for (int e = 0; e <= cap; ++e) {
      exps[n + i] = e;
      self(self, i + 1, remaining - e);
    }
    exps[n + i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

std::vector<Monomial> LoopModel::hodge_basis(int n, int k) const {
  if (n < 0) return {};
  std::vector<Monomial> out;
  for (const Monomial& w : bar_words(k)) {
    const int rest = n - ext_->degree(w);
    if (rest < 0) continue;
    for (const Monomial& a : base_->basis(rest)) {
      std::vector<int> exps = w.exponents();
      std::copy(a.exponents().begin(), a.exponents().end(), exps.begin());
      out.emplace_back(std::move(exps));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisComplex<Monomial> LoopModel::complex() const {
  BasisComplex<Monomial> cx;
  PresentationPtr ext = ext_;
  cx.basis = [ext](int n) { return n < 0 ? std::vector<Monomial>{} : ext->basis(n); };
  cx.differential = [ext](const Monomial& m) { return ext->differential(m); };
  cx.label = [ext](const Monomial& m) { return ext->format(m); };
  return cx;
}

BasisComplex<Monomial> LoopModel::hodge_complex(int k) const {
  BasisComplex<Monomial> cx = complex();
  LoopModel self = *this;
  cx.basis = [self, k](int n) { return n < 0 ? std::vector<Monomial>{} : self.hodge_basis(n, k); };
  return cx;
}

BasisComplex<Monomial> LoopModel::base_complex() const { return hodge_complex(0); }

Derivation op_L(const LoopModel& model, const Derivation& theta) {
  if (!theta.domain()->same_generators(*model.base()) || !theta.is_endomorphism())
    throw PresentationMismatch("op_L needs a derivation of the base algebra");
  const Rational sign = sign_of(theta.degree());
  std::map<std::size_t, Element> values;
  for (std::size_t i = 0; i < model.rank(); ++i) {
    const Element tv = model.embed(theta.value(i));
    if (tv.is_zero()) continue;
    values.emplace(i, tv);
    Element stv = sign * model.s(tv);
    if (!stv.is_zero()) values.emplace(model.bar(i), std::move(stv));
  }
  return Derivation::from_values(model.extended(), model.extended(), theta.degree(), values);
}

Derivation op_e(const LoopModel& model, const Derivation& theta) {
  if (!theta.domain()->same_generators(*model.base()) || !theta.is_endomorphism())
    throw PresentationMismatch("op_e needs a derivation of the base algebra");
  const Rational sign = sign_of(theta.degree());
  std::map<std::size_t, Element> values;
  for (std::size_t i = 0; i < model.rank(); ++i) {
    Element tv = sign * model.embed(theta.value(i));
    if (!tv.is_zero()) values.emplace(model.bar(i), std::move(tv));
  }
  return Derivation::from_values(model.extended(), model.extended(), theta.degree() + 1, values);
}

DegreeCohomology<Monomial> loop_cohomology(const LoopModel& model, int n) {
  return degree_cohomology(model.complex(), n);
}

DegreeCohomology<Monomial> hodge_cohomology(const LoopModel& model, int n, int k) {
  return degree_cohomology(model.hodge_complex(k), n);
}

GradedMapSlice bv_on_cohomology(const LoopModel& model, int n) {
  const auto src = loop_cohomology(model, n);
  const auto tgt = loop_cohomology(model, n - 1);
  GradedMapSlice slice;
  slice.source_degree = n;
  const Presentation& ext = *model.extended();
  for (std::size_t i = 0; i < src.dimension(); ++i) slice.source_labels.push_back(format_terms(ext, src.representative(i)));
  for (std::size_t i = 0; i < tgt.dimension(); ++i) slice.target_labels.push_back(format_terms(ext, tgt.representative(i)));
  slice.matrix = SparseMatrix(tgt.dimension(), src.dimension());
  for (std::size_t i = 0; i < src.dimension(); ++i) {
    const Element image = model.s(Element(model.extended(), src.representative(i)));
    slice.matrix.columns[i] = from_dense(tgt.class_of(image.terms()));
  }
  return slice;
}

FundamentalClass fundamental_class(const LoopModel& model) {
  const Presentation& base = *model.base();
  int m = 0;
  for (const Generator& g : base.generators()) m += g.odd() ? g.degree : -(g.degree - 1);
  if (m < 0) throw NoPoincareDuality("negative formal dimension " + std::to_string(m));
  const int beyond = m + base.max_generator_degree();
  const auto h = cohomology_range(model.base_complex(), 0, beyond);
  if (h[static_cast<std::size_t>(m)].dimension() != 1)
    throw NoPoincareDuality("H^" + std::to_string(m) + " has dimension " +
                            std::to_string(h[static_cast<std::size_t>(m)].dimension()) + ", expected 1");
  for (int j = m + 1; j <= beyond; ++j)
    if (h[static_cast<std::size_t>(j)].dimension() != 0)
      throw NoPoincareDuality("H^" + std::to_string(j) + " is nonzero above the formal dimension " + std::to_string(m));

  FundamentalClass fc;
  fc.dimension = m;
  fc.top = h[static_cast<std::size_t>(m)];
  fc.representative = Element(model.extended(), fc.top.representative(0));

  for (int j = 0; j <= m; ++j) {
    const auto& lo = h[static_cast<std::size_t>(j)];
    const auto& hi = h[static_cast<std::size_t>(m - j)];
    if (lo.dimension() != hi.dimension())
      throw NoPoincareDuality("dim H^" + std::to_string(j) + " != dim H^" + std::to_string(m - j));
    SparseMatrix pairing(lo.dimension(), hi.dimension());
    for (std::size_t b = 0; b < hi.dimension(); ++b) {
      std::vector<Rational> col(lo.dimension());
      for (std::size_t a = 0; a < lo.dimension(); ++a) {
        const Element prod = Element(model.extended(), lo.representative(a)) * Element(model.extended(), hi.representative(b));
        col[a] = fundamental_coordinate(fc, prod);
      }
      pairing.columns[b] = from_dense(col);
    }
    if (rank(pairing) != lo.dimension())
      throw NoPoincareDuality("product pairing H^" + std::to_string(j) + " x H^" + std::to_string(m - j) +
                              " is degenerate");
  }
  return fc;
}

Rational fundamental_coordinate(const FundamentalClass& fc, const Element& top_cocycle) {
  return fc.top.class_of(top_cocycle.terms()).at(0);
}

BasisComplex<HomKey> hom_complex(const LoopModel& model, int k) {
  struct Data {
    LoopModel model;
    std::vector<Monomial> words;
    std::vector<Terms> word_differentials;
  };
  auto data = std::make_shared<Data>();
  data->model = model;
  data->words = model.bar_words(k);
  for (const Monomial& w : data->words) data->word_differentials.push_back(model.extended()->differential(w));

  BasisComplex<HomKey> cx;
  cx.basis = [data](int q) {
    std::vector<HomKey> out;
    const Presentation& ext = *data->model.extended();
    for (const Monomial& w : data->words) {
      const int target = ext.degree(w) + q;
      if (target < 0) continue;
      for (const Monomial& m : data->model.base()->basis(target)) out.push_back({w, data->model.embed(m)});
    }
    return out;
  };
  cx.differential = [data](const HomKey& key) {
    const Presentation& ext = *data->model.extended();
    const int q = ext.degree(key.value) - ext.degree(key.word);
    std::map<HomKey, Rational> out;
    for (const auto& [m, c] : ext.differential(key.value)) out[{key.word, m}] += c;
    for (std::size_t i = 0; i < data->words.size(); ++i) {
      for (const auto& [term, c] : data->word_differentials[i]) {
        auto [a, w] = data->model.split(term);
        if (w != key.word) continue;
        const Monomial a_ext = data->model.embed(a);
        auto [sign, prod] = ext.multiply(a_ext, key.value);
        if (sign == 0) continue;
        // -(-1)^q f(a w) with f(a w) = (-1)^{q|a|} a f(w)
        const int parity = q + q * ext.degree(a_ext) + (sign < 0 ? 1 : 0) + 1;
        out[{data->words[i], prod}] += sign_of(parity) * c;
      }
    }
    std::map<HomKey, Rational> clean;
    for (auto& [k2, c] : out)
      if (!is_zero(c)) clean.emplace(k2, std::move(c));
    return clean;
  };
  cx.label = [data](const HomKey& key) {
    const Presentation& ext = *data->model.extended();
    return "(" + ext.format(key.word) + " -> " + ext.format(key.value) + ")";
  };
  return cx;
}

Element evaluate_hom(const LoopModel& model, const Combination<HomKey>& f, const Element& alpha) {
  const Presentation& ext = *model.extended();
  Terms out;
  for (const auto& [term, c] : alpha.terms()) {
    auto [a, w] = model.split(term);
    const Monomial a_ext = model.embed(a);
    for (const auto& [key, fc] : f) {
      if (key.word != w) continue;
      const int q = ext.degree(key.value) - ext.degree(key.word);
      auto [sign, prod] = ext.multiply(a_ext, key.value);
      if (sign == 0) continue;
      const int parity = q * ext.degree(a_ext) + (sign < 0 ? 1 : 0);
      add_term(out, prod, sign_of(parity) * c * fc);
    }
  }
  return Element(model.extended(), std::move(out));
}

Combination<HomKey> lambda_hom(const LoopModel& model, const Derivation& theta) {
  const BarHom f = lambda_iso(theta);
  Combination<HomKey> out;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Monomial word = model.extended()->generator_monomial(model.bar(i));
    for (const auto& [m, c] : f.values[i].terms()) out.emplace(HomKey{word, model.embed(m)}, c);
  }
  return out;
}

PairingMatrix pairing_matrix(const LoopModel& model, int k, int n) {
  return pairing_matrix(model, fundamental_class(model), k, n);
}

PairingMatrix pairing_matrix(const LoopModel& model, const FundamentalClass& fc, int k, int n) {
  PairingMatrix out;
  out.k = k;
  out.n = n;
  out.m = fc.dimension;
  const auto hom = degree_cohomology(hom_complex(model, k), -n);
  const auto loop = hodge_cohomology(model, fc.dimension + n, k);
  out.rows = hom.dimension();
  out.cols = loop.dimension();
  out.entries.assign(out.rows, std::vector<Rational>(out.cols));
  SparseMatrix mat(out.rows, out.cols);
  for (std::size_t j = 0; j < out.cols; ++j) {
    const Element alpha(model.extended(), loop.representative(j));
    std::vector<Rational> col(out.rows);
    for (std::size_t i = 0; i < out.rows; ++i) {
      col[i] = fundamental_coordinate(fc, evaluate_hom(model, hom.representative(i), alpha));
      out.entries[i][j] = col[i];
    }
    mat.columns[j] = from_dense(col);
  }
  out.rank = rank(mat);
  return out;
}

std::optional<Element> hit_fundamental_class(const LoopModel& model, const FundamentalClass& fc,
                                             const Derivation& theta) {
  if (!der_differential(theta).is_zero()) throw NotACocycle("derivation " + theta.to_string() + " is not a cocycle");
  const Derivation e = op_e(model, theta);
  const int degree = fc.dimension - e.degree();
  const auto h = hodge_cohomology(model, degree, 1);
  for (std::size_t i = 0; i < h.dimension(); ++i) {
    const Element alpha(model.extended(), h.representative(i));
    const Rational c = fundamental_coordinate(fc, e.apply(alpha));
    if (!is_zero(c)) return (1 / c) * alpha;
  }
  return std::nullopt;
}

}  // namespace cartan
