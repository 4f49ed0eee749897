#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "periods/filtered_map.hpp"
#include "periods/rng.hpp"

using namespace periods;

namespace {

const ScalarDomain Q = ScalarDomain::rational();

Vec vq(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar::from_int(x, Q));
  return v;
}

Subspace spanq(size_t n, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(vq(row));
  return Subspace::span(n, r, Q);
}

// dim 2, W_{-1} = <e1>, W_0 = V, F^0 = <e1+e2>, F^1 = 0
BifilteredSpace running_example() {
  std::map<long, Subspace> w{{-1, spanq(2, {{1, 0}})},
                             {0, Subspace::full(2, Q)}};
  std::map<long, Subspace> f{{0, spanq(2, {{1, 1}})}, {1, Subspace::zero(2, Q)}};
  return BifilteredSpace::make(2, Q, w, f);
}

// Random bifiltered space: random flags for W and F.
BifilteredSpace random_space(Rng& rng, size_t dim, bool with_f) {
  std::vector<Vec> vecs;
  for (size_t i = 0; i < dim; ++i) {
    Vec v;
    for (size_t j = 0; j < dim; ++j)
      v.push_back(Scalar::from_int(rng.range(-4, 4), Q));
    vecs.push_back(v);
  }
  // ensure a basis by mixing in a dominant diagonal
  for (size_t i = 0; i < dim; ++i)
    vecs[i][i] = vecs[i][i].add(Scalar::from_int(5, Q));
  std::map<long, Subspace> w;
  size_t steps = 1 + rng.below(3);
  std::vector<size_t> cuts;
  for (size_t s = 0; s + 1 < steps; ++s) cuts.push_back(1 + rng.below(dim - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(dim);
  long wt = -static_cast<long>(rng.below(3));
  size_t used = 0;
  for (size_t c : cuts) {
    if (c <= used) continue;
    std::vector<Vec> rows(vecs.begin(), vecs.begin() + static_cast<long>(c));
    w[wt] = Subspace::span(dim, rows, Q);
    used = c;
    wt += 1 + static_cast<long>(rng.below(2));
  }
  w[wt] = Subspace::full(dim, Q);
  std::map<long, Subspace> f;
  if (with_f) {
    std::vector<Vec> fv;
    for (size_t i = 0; i < dim; ++i) {
      Vec v;
      for (size_t j = 0; j < dim; ++j)
        v.push_back(Scalar::from_int(rng.range(-4, 4), Q));
      fv.push_back(v);
    }
    for (size_t i = 0; i < dim; ++i)
      fv[i][i] = fv[i][i].add(Scalar::from_int(7, Q));
    size_t k1 = dim > 1 ? 1 + rng.below(dim - 1) : 1;
    std::vector<Vec> rows(fv.begin(), fv.begin() + static_cast<long>(k1));
    f[0] = Subspace::span(dim, rows, Q);
    size_t k2 = rng.below(k1 + 1);
    if (k2 > 0 && k2 < k1) {
      std::vector<Vec> rows2(fv.begin(), fv.begin() + static_cast<long>(k2));
      f[1] = Subspace::span(dim, rows2, Q);
    }
  }
  return BifilteredSpace::make(dim, Q, w, f);
}

}  // namespace

TEST_CASE("gr_W of a single-step filtration inherits F verbatim") {
  std::map<long, Subspace> w{{0, Subspace::full(2, Q)}};
  std::map<long, Subspace> f{{0, spanq(2, {{1, 1}})}};
  auto v = BifilteredSpace::make(2, Q, w, f);
  auto g = associated_graded(v);
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0].weight == 0);
  CHECK(g.components[0].dim == 2);
  CHECK(g.components[0].f.at(0).dim() == 1);
}

TEST_CASE("gr_W of the running example, hand computed") {
  auto v = running_example();
  auto g = associated_graded(v);
  REQUIRE(g.components.size() == 2);
  // gr_{-1}: F^0 = image(F^0 cap W_{-1}) = image(<e1+e2> cap <e1>) = 0
  CHECK(g.components[0].weight == -1);
  CHECK(g.components[0].dim == 1);
  CHECK(g.components[0].f.at(0).dim() == 0);
  // gr_0: F^0 = image(<e1+e2>) = everything
  CHECK(g.components[1].weight == 0);
  CHECK(g.components[1].dim == 1);
  CHECK(g.components[1].f.at(0).dim() == 1);
}

TEST_CASE("fil_of_graded basics") {
  GradedSpace g;
  g.domain = Q;
  GradedComponent a;
  a.weight = -2;
  a.dim = 1;
  GradedComponent b;
  b.weight = 0;
  b.dim = 1;
  g.components = {a, b};
  auto v = fil_of_graded(g);
  CHECK(v.dim() == 2);
  CHECK(v.w_at(-2).dim() == 1);
  CHECK(v.w_at(-1).dim() == 1);
  CHECK(v.w_at(0).dim() == 2);
  CHECK(v.has_grading());
}

TEST_CASE("gr_W o fil_of_graded is the identity on random graded spaces") {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    GradedSpace g;
    g.domain = Q;
    long wt = -3;
    size_t n = 1 + rng.below(3);
    for (size_t i = 0; i < n; ++i) {
      GradedComponent c;
      c.weight = wt;
      c.dim = 1 + rng.below(3);
      size_t fk = rng.below(c.dim + 1);
      if (fk > 0) {
        std::vector<Vec> rows;
        for (size_t r = 0; r < fk; ++r) {
          Vec v(c.dim, Scalar::zero(Q));
          v[r] = Scalar::one(Q);
          for (size_t j = fk; j < c.dim; ++j)
            v[j] = Scalar::from_int(rng.range(-3, 3), Q);
          rows.push_back(v);
        }
        c.f[0] = Subspace::span(c.dim, rows, Q);
      }
      g.components.push_back(c);
      wt += 1 + static_cast<long>(rng.below(2));
    }
    auto v = fil_of_graded(g);
    auto back = associated_graded(v);
    REQUIRE(back.components.size() == g.components.size());
    for (size_t i = 0; i < g.components.size(); ++i) {
      CHECK(back.components[i].weight == g.components[i].weight);
      CHECK(back.components[i].dim == g.components[i].dim);
      if (!g.components[i].f.empty()) {
        CHECK(back.components[i].f.at(0).dim() ==
              g.components[i].f.at(0).dim());
      }
    }
  }
}

TEST_CASE("identity map is strict; shifted identity is not") {
  std::map<long, Subspace> w0{{0, Subspace::full(2, Q)}};
  std::map<long, Subspace> w1{{0, Subspace::zero(2, Q)},
                              {1, Subspace::full(2, Q)}};
  auto src = BifilteredSpace::make(2, Q, w0);
  auto tgt = BifilteredSpace::make(2, Q, w1);
  FilteredMap ident{Mat::identity(2, Q), &src, &src};
  CHECK(is_strict(ident, FiltrationKind::weight));
  FilteredMap shift{Mat::identity(2, Q), &src, &tgt};
  CHECK(!is_strict(shift, FiltrationKind::weight));
}

TEST_CASE("zero map between disjoint pure weights is strict") {
  std::map<long, Subspace> wa{{-1, Subspace::full(2, Q)}};
  std::map<long, Subspace> wb{{3, Subspace::full(2, Q)}};
  auto a = BifilteredSpace::make(2, Q, wa);
  auto b = BifilteredSpace::make(2, Q, wb);
  FilteredMap z{Mat(2, 2, Q), &a, &b};
  CHECK(is_strict(z, FiltrationKind::weight));
}

TEST_CASE("weight-support disjointness forces compatible strict maps to vanish") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    long a = rng.range(-3, 3);
    long b = rng.range(-3, 3);
    if (a == b) continue;
    std::map<long, Subspace> wa{{a, Subspace::full(2, Q)}};
    std::map<long, Subspace> wb{{b, Subspace::full(2, Q)}};
    auto va = BifilteredSpace::make(2, Q, wa);
    auto vb = BifilteredSpace::make(2, Q, wb);
    Mat m(2, 2, Q);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        m.at(i, j) = Scalar::from_int(rng.range(-3, 3), Q);
    FilteredMap f{m, &va, &vb};
    if (f.w_compatible() && is_strict(f, FiltrationKind::weight))
      CHECK(m.is_zero());
  }
}

TEST_CASE("exactness equivalences on a trivial exact sequence") {
  std::map<long, Subspace> w{{-1, spanq(2, {{1, 0}})},
                             {0, Subspace::full(2, Q)}};
  auto v = BifilteredSpace::make(2, Q, w);
  auto zero_space = BifilteredSpace::make(
      1, Q, std::map<long, Subspace>{{0, Subspace::full(1, Q)}});
  FilteredMap f{Mat(2, 1, Q), &zero_space, &v};
  FilteredMap g{Mat::identity(2, Q), &v, &v};
  auto rep = check_exactness_equivalences(f, g, FiltrationKind::weight);
  CHECK(rep.exact_with_strictness);
  CHECK(rep.levelwise_exact);
  CHECK(rep.graded_exact);
}

TEST_CASE("shifted identity as f with g = 0 fails (1) and (3)") {
  std::map<long, Subspace> w0{{0, Subspace::full(2, Q)}};
  std::map<long, Subspace> w1{{0, Subspace::zero(2, Q)},
                              {1, Subspace::full(2, Q)}};
  auto src = BifilteredSpace::make(2, Q, w0);
  auto tgt = BifilteredSpace::make(2, Q, w1);
  FilteredMap f{Mat::identity(2, Q), &src, &tgt};
  FilteredMap g{Mat(2, 2, Q), &tgt, &tgt};
  auto rep = check_exactness_equivalences(f, g, FiltrationKind::weight);
  CHECK(!rep.exact_with_strictness);
  CHECK(!rep.graded_exact);
}

TEST_CASE("composition must vanish") {
  std::map<long, Subspace> w{{0, Subspace::full(2, Q)}};
  auto v = BifilteredSpace::make(2, Q, w);
  FilteredMap f{Mat::identity(2, Q), &v, &v};
  CHECK_THROWS_AS(check_exactness_equivalences(f, f, FiltrationKind::weight),
                  engine_error);
}

TEST_CASE("constructed strict short exact sequences report all-true") {
  Rng rng(17);
  int ran = 0;
  for (int t = 0; t < 120 && ran < 60; ++t) {
    auto m = random_space(rng, 2 + rng.below(3), false);
    size_t dim = m.dim();
    std::vector<Vec> rows;
    size_t sd = 1 + rng.below(dim - 1);
    for (size_t i = 0; i < sd; ++i) {
      Vec v;
      for (size_t j = 0; j < dim; ++j)
        v.push_back(Scalar::from_int(rng.range(-3, 3), Q));
      rows.push_back(v);
    }
    Subspace l = Subspace::span(dim, rows, Q);
    if (l.dim() == 0 || l.dim() == dim) continue;
    ++ran;
    std::map<long, Subspace> wl;
    for (long n : m.w_weights()) {
      Subspace cap = m.w_at(n).intersect(l);
      std::vector<Vec> lrows;
      for (const auto& bvec : cap.basis()) lrows.push_back(l.coordinates(bvec));
      wl[n] = lrows.empty() ? Subspace::zero(l.dim(), Q)
                            : Subspace::span(l.dim(), lrows, Q);
    }
    auto lsp = BifilteredSpace::make(l.dim(), Q, wl);
    Mat incl(dim, l.dim(), Q);
    for (size_t j = 0; j < l.dim(); ++j)
      for (size_t i = 0; i < dim; ++i) incl.at(i, j) = l.basis()[j][i];
    QuotientSpace q = quotient(Subspace::full(dim, Q), l);
    Mat proj(q.dim, dim, Q);
    for (size_t j = 0; j < dim; ++j) {
      Vec e(dim, Scalar::zero(Q));
      e[j] = Scalar::one(Q);
      Vec c = q.coords(e);
      for (size_t i = 0; i < q.dim; ++i) proj.at(i, j) = c[i];
    }
    std::map<long, Subspace> wn;
    for (long n : m.w_weights()) wn[n] = m.w_at(n).image(proj);
    auto nsp = BifilteredSpace::make(q.dim, Q, wn);
    FilteredMap f{incl, &lsp, &m};
    FilteredMap g{proj, &m, &nsp};
    auto rep = check_exactness_equivalences(f, g, FiltrationKind::weight);
    CHECK(rep.exact_with_strictness);
    CHECK(rep.levelwise_exact);
    CHECK(rep.graded_exact);
  }
  CHECK(ran >= 40);
}

TEST_CASE("grading/filtration compatibility conditions") {
  GradedSpace g;
  g.domain = Q;
  GradedComponent a;
  a.weight = -1;
  a.dim = 1;
  a.f[0] = Subspace::full(1, Q);
  GradedComponent b;
  b.weight = 0;
  b.dim = 1;
  b.f[0] = Subspace::zero(1, Q);
  g.components = {a, b};
  auto v = fil_of_graded(g);
  CHECK(v.grading_compatible_with_f());

  std::vector<GradingComponent> gr;
  GradingComponent c1;
  c1.weight = -1;
  c1.space = spanq(2, {{1, 0}});
  GradingComponent c2;
  c2.weight = 0;
  c2.space = spanq(2, {{0, 1}});
  gr = {c1, c2};
  std::map<long, Subspace> f{{0, spanq(2, {{1, 1}})}};
  auto v2 = BifilteredSpace::from_grading(2, Q, gr, f);
  CHECK(!v2.grading_compatible_with_f());

  std::map<long, Subspace> ftriv{{0, Subspace::full(2, Q)},
                                 {1, Subspace::zero(2, Q)}};
  auto v3 = BifilteredSpace::from_grading(2, Q, gr, ftriv);
  CHECK(v3.grading_compatible_with_f());
}

TEST_CASE("tensor and dual on pure lines") {
  GradedSpace ga;
  ga.domain = Q;
  GradedComponent ca;
  ca.weight = -2;
  ca.dim = 1;
  ga.components = {ca};
  GradedSpace gb;
  gb.domain = Q;
  GradedComponent cb;
  cb.weight = 3;
  cb.dim = 1;
  gb.components = {cb};
  auto a = fil_of_graded(ga), b = fil_of_graded(gb);
  auto t = tensor(a, b);
  CHECK(t.dim() == 1);
  CHECK(t.w_at(0).dim() == 0);
  CHECK(t.w_at(1).dim() == 1);
  auto d = dual(a);
  CHECK(d.w_at(1).dim() == 0);
  CHECK(d.w_at(2).dim() == 1);
}

TEST_CASE("gr of a tensor matches tensor of gr, dimension-wise") {
  Rng rng(23);
  for (int t = 0; t < 15; ++t) {
    auto a = random_space(rng, 2 + rng.below(2), false);
    auto b = random_space(rng, 2 + rng.below(2), false);
    auto ab = tensor(a, b);
    auto ga = associated_graded(a), gb = associated_graded(b),
         gab = associated_graded(ab);
    std::map<long, size_t> expect;
    for (const auto&ca : ga.components)
      for (const auto& cb : gb.components)
        expect[ca.weight + cb.weight] += ca.dim * cb.dim;
    std::map<long, size_t> got;
    for (const auto& c : gab.components) got[c.weight] = c.dim;
    CHECK(expect == got);
  }
}

TEST_CASE("dim F^i V equals sum of dim F^i gr_n V") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    auto v = random_space(rng, 2 + rng.below(4), true);
    auto g = associated_graded(v);
    for (long i : v.f_levels()) {
      size_t total = 0;
      for (const auto& c : g.components) {
        auto it = c.f.find(i);
        size_t d = it != c.f.end() ? it->second.dim() : c.dim;
        total += d;
      }
      CHECK(total == v.f_at(i).dim());
    }
  }
}

TEST_CASE("end space has hom filtration dimensions") {
  GradedSpace g;
  g.domain = Q;
  GradedComponent a;
  a.weight = -2;
  a.dim = 1;
  GradedComponent b;
  b.weight = 0;
  b.dim = 1;
  g.components = {a, b};
  auto v = fil_of_graded(g);
  auto e = end_space(v);
  CHECK(e.dim() == 4);
  CHECK(e.w_at(-2).dim() == 1);
  CHECK(e.w_at(-1).dim() == 1);
  CHECK(e.w_at(0).dim() == 3);
  CHECK(e.w_at(2).dim() == 4);
  Mat m(2, 2, Q);
  m.at(0, 1) = Scalar::one(Q);  // sends weight-0 e2 to weight-(-2) e1
  CHECK(e.w_at(-2).contains(end_vectorize(m)));
  Mat diag = Mat::identity(2, Q);
  CHECK(e.w_at(0).contains(end_vectorize(diag)));
  CHECK(!e.w_at(-2).contains(end_vectorize(diag)));
}
