#include "periods/bifiltered.hpp"

#include <sstream>

namespace periods {

std::string mw_to_string(const Multiweight& m) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ")";
  return os.str();
}

Multiweight mw_add(const Multiweight& a, const Multiweight& b) {
  require(a.size() == b.size(), errc::internal, "multiweight rank mismatch");
  Multiweight r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Multiweight mw_neg(const Multiweight& a) {
  Multiweight r = a;
  for (auto& x : r) x = -x;
  return r;
}

BifilteredSpace BifilteredSpace::make(
    size_t dim, const ScalarDomain& d, const std::map<long, Subspace>& w_jumps,
    const std::map<long, Subspace>& f_jumps,
    const std::vector<GradingComponent>& grading) {
  BifilteredSpace v;
  v.dim_ = dim;
  v.domain_ = d;
  v.w_ = w_jumps;
  v.f_ = f_jumps;
  v.grading_ = grading;
  for (auto& g : v.grading_)
    if (g.multiweight.empty()) g.multiweight = {g.weight};
  v.validate();
  return v;
}

BifilteredSpace BifilteredSpace::from_grading(
    size_t dim, const ScalarDomain& d,
    const std::vector<GradingComponent>& grading,
    const std::map<long, Subspace>& f_jumps) {
  std::map<long, Subspace> w;
  Subspace acc = Subspace::zero(dim, d);
  std::map<long, std::vector<const GradingComponent*>> by_weight;
  for (const auto& g : grading) by_weight[g.weight].push_back(&g);
  for (const auto& [wt, comps] : by_weight) {
    for (const auto* g : comps) acc = acc.sum(g->space);
    w[wt] = acc;
  }
  return make(dim, d, w, f_jumps, grading);
}

void BifilteredSpace::validate() const {
  require(!w_.empty(), errc::validation_failed, "weight filtration is empty");
  const Subspace* prev = nullptr;
  for (const auto& [n, s] : w_) {
    require(s.ambient() == dim_, errc::validation_failed,
            "W subspace ambient mismatch");
    if (prev)
      require(s.contains(*prev), errc::validation_failed,
              "weight filtration is not nested at " + std::to_string(n));
    prev = &s;
  }
  require(w_.rbegin()->second.dim() == dim_, errc::validation_failed,
          "weight filtration is not exhaustive");
  prev = nullptr;
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) {
    require(it->second.ambient() == dim_, errc::validation_failed,
            "F subspace ambient mismatch");
    if (prev)
      require(it->second.contains(*prev), errc::validation_failed,
              "Hodge filtration is not nested");
    prev = &it->second;
  }
  if (!grading_.empty()) {
    size_t total = 0;
    for (const auto& g : grading_) {
      require(g.space.ambient() == dim_, errc::validation_failed,
              "grading component ambient mismatch");
      total += g.space.dim();
    }
    Subspace sum = Subspace::zero(dim_, domain_);
    for (const auto& g : grading_) sum = sum.sum(g.space);
    require(total == dim_ && sum.dim() == dim_, errc::validation_failed,
            "grading components do not decompose the space");
  }
}

Subspace BifilteredSpace::w_at(long n) const {
  const Subspace* best = nullptr;
  for (const auto& [m, s] : w_) {
    if (m <= n) best = &s;
    else break;
  }
  return best ? *best : Subspace::zero(dim_, domain_);
}

Subspace BifilteredSpace::f_at(long i) const {
  // Declared levels are the jumps; below the lowest jump the filtration is
  // still the whole space, above the highest it is zero.
  if (f_.empty()) return Subspace::full(dim_, domain_);
  if (i < f_.begin()->first) return Subspace::full(dim_, domain_);
  for (const auto& [l, s] : f_)
    if (l >= i) return s;  // maps use ascending keys; first level >= i
  return Subspace::zero(dim_, domain_);
}

std::vector<long> BifilteredSpace::w_weights() const {
  std::vector<long> r;
  for (const auto& [n, s] : w_) r.push_back(n);
  return r;
}

std::vector<long> BifilteredSpace::f_levels() const {
  std::vector<long> r;
  for (const auto& [l, s] : f_) r.push_back(l);
  return r;
}

bool BifilteredSpace::grading_compatible_with_f() const {
  require(has_grading() && has_f(), errc::validation_failed,
          "compatibility test needs both a grading and F");
  for (long i : f_levels()) {
    Subspace fi = f_at(i);
    Subspace spanned = Subspace::zero(dim_, domain_);
    for (const auto& g : grading_)
      spanned = spanned.sum(g.space.intersect(fi));
    if (spanned.dim() != fi.dim()) return false;
  }
  return true;
}

std::string BifilteredSpace::to_string() const {
  std::ostringstream os;
  os << "space dim " << dim_ << " over " << domain_.describe() << ", W jumps";
  for (long n : w_weights()) os << " " << n << ":" << w_at(n).dim();
  if (has_f()) {
    os << ", F levels";
    for (long l : f_levels()) os << " " << l << ":" << f_at(l).dim();
  }
  return os.str();
}

size_t GradedSpace::total_dim() const {
  size_t n = 0;
  for (const auto& c : components) n += c.dim;
  return n;
}

const GradedComponent* GradedSpace::component(long weight) const {
  for (const auto& c : components)
    if (c.weight == weight) return &c;
  return nullptr;
}

std::string GradedSpace::to_string() const {
  std::ostringstream os;
  os << "graded space:";
  for (const auto& c : components)
    os << " [w=" << c.weight << " dim=" << c.dim << "]";
  return os.str();
}

GradedSpace associated_graded(const BifilteredSpace& v) {
  GradedSpace g;
  g.domain = v.domain();
  for (long n : v.w_weights()) {
    Subspace wn = v.w_at(n);
    Subspace wn1 = v.w_at(n - 1);
    if (wn.dim() == wn1.dim()) continue;
    GradedComponent c;
    c.weight = n;
    c.multiweight = {n};
    c.lifts = quotient(wn, wn1);
    c.dim = c.lifts.dim;
    if (v.has_f()) {
      // F^i(gr_n) = image of F^i cap W_n under the projection
      for (long i : v.f_levels()) {
        Subspace cap = v.f_at(i).intersect(wn);
        std::vector<Vec> rows;
        for (const auto& b : cap.basis()) rows.push_back(c.lifts.coords(b));
        Subspace img = rows.empty()
                           ? Subspace::zero(c.dim, g.domain)
                           : Subspace::span(c.dim, rows, g.domain);
        c.f[i] = img;
      }
    }
    g.components.push_back(c);
  }
  return g;
}

BifilteredSpace fil_of_graded(const GradedSpace& g) {
  size_t dim = g.total_dim();
  ScalarDomain d = g.domain;
  std::vector<GradingComponent> grading;
  std::map<long, Subspace> f;
  size_t offset = 0;
  bool any_f = false;
  for (const auto& c : g.components)
    if (!c.f.empty()) any_f = true;
  // collect all levels so each component contributes consistently
  std::vector<long> levels;
  if (any_f) {
    std::map<long, bool> seen;
    for (const auto& c : g.components)
      for (const auto& [l, s] : c.f) seen[l] = true;
    for (const auto& [l, b] : seen) levels.push_back(l);
  }
  std::map<long, std::vector<Vec>> f_rows;
  for (const auto& c : g.components) {
    std::vector<Vec> rows;
    for (size_t k = 0; k < c.dim; ++k) {
      Vec e(dim, Scalar::zero(d));
      e[offset + k] = Scalar::one(d);
      rows.push_back(e);
    }
    GradingComponent gc;
    gc.weight = c.weight;
    gc.multiweight = c.multiweight.empty() ? Multiweight{c.weight} : c.multiweight;
    gc.space = Subspace::span(dim, rows, d);
    grading.push_back(gc);
    if (any_f) {
      for (long l : levels) {
        // component-level F at l: declared jump, else nearest above
        Subspace comp_f = [&]() {
          if (c.f.empty() || l < c.f.begin()->first)
            return Subspace::full(c.dim, d);
          for (const auto& [lev, s] : c.f)
            if (lev >= l) return s;
          return Subspace::zero(c.dim, d);
        }();
        for (const auto& b : comp_f.basis()) {
          Vec e(dim, Scalar::zero(d));
          for (size_t k = 0; k < c.dim; ++k) e[offset + k] = b[k];
          f_rows[l].push_back(e);
        }
      }
    }
    offset += c.dim;
  }
  for (long l : levels) {
    auto it = f_rows.find(l);
    f[l] = (it == f_rows.end() || it->second.empty())
               ? Subspace::zero(dim, d)
               : Subspace::span(dim, it->second, d);
  }
  return BifilteredSpace::from_grading(dim, d, grading, f);
}

BifilteredSpace tensor(const BifilteredSpace& a, const BifilteredSpace& b) {
  require(a.domain() == b.domain(), errc::domain_mismatch,
          "tensor over different scalar domains");
  size_t n = a.dim() * b.dim();
  ScalarDomain d = a.domain();
  auto emb = [&](const Vec& x, const Vec& y) {
    Vec r(n, Scalar::zero(d));
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < y.size(); ++j)
        r[i * b.dim() + j] = x[i].mul(y[j]);
    }
    return r;
  };
  auto span_product = [&](const Subspace& s, const Subspace& t) {
    std::vector<Vec> rows;
    for (const auto& x : s.basis())
      for (const auto& y : t.basis()) rows.push_back(emb(x, y));
    if (rows.empty()) return Subspace::zero(n, d);
    return Subspace::span(n, rows, d);
  };
  // W by the sum-over-splittings formula on jumps
  std::map<long, Subspace> w;
  {
    std::vector<long> wa = a.w_weights(), wb = b.w_weights();
    std::vector<long> total;
    for (long x : wa)
      for (long y : wb) total.push_back(x + y);
    std::sort(total.begin(), total.end());
    total.erase(std::unique(total.begin(), total.end()), total.end());
    for (long t : total) {
      Subspace acc = Subspace::zero(n, d);
      for (long x : wa) acc = acc.sum(span_product(a.w_at(x), b.w_at(t - x)));
      w[t] = acc;
    }
  }
  std::map<long, Subspace> f;
  if (a.has_f() || b.has_f()) {
    std::vector<long> fa = a.has_f() ? a.f_levels() : std::vector<long>{0};
    std::vector<long> fb = b.has_f() ? b.f_levels() : std::vector<long>{0};
    std::vector<long> total;
    for (long x : fa)
      for (long y : fb) total.push_back(x + y);
    std::sort(total.begin(), total.end());
    total.erase(std::unique(total.begin(), total.end()), total.end());
    for (long t : total) {
      Subspace acc = Subspace::zero(n, d);
      for (long x : fa) acc = acc.sum(span_product(a.f_at(x), b.f_at(t - x)));
      f[t] = acc;
    }
  }
  std::vector<GradingComponent> grading;
  if (a.has_grading() && b.has_grading()) {
    for (const auto& ga : a.grading())
      for (const auto& gb : b.grading()) {
        GradingComponent gc;
        gc.weight = ga.weight + gb.weight;
        gc.multiweight = mw_add(ga.multiweight, gb.multiweight);
        gc.space = span_product(ga.space, gb.space);
        grading.push_back(gc);
      }
    // merge equal multiweights
    std::vector<GradingComponent> merged;
    for (auto& gc : grading) {
      bool found = false;
      for (auto& m : merged)
        if (m.multiweight == gc.multiweight && m.weight == gc.weight) {
          m.space = m.space.sum(gc.space);
          found = true;
          break;
        }
      if (!found) merged.push_back(gc);
    }
    grading = merged;
  }
  return BifilteredSpace::make(n, d, w, f, grading);
}

BifilteredSpace dual(const BifilteredSpace& v) {
  size_t n = v.dim();
  ScalarDomain d = v.domain();
  // W_n(V*) = annihilator of W_{-n-1}(V)
  std::map<long, Subspace> w;
  std::vector<long> wts = v.w_weights();
  {
    std::vector<long> dual_jumps;
    dual_jumps.push_back(-wts.front());  // top: annihilator of W_{min-1}=0
    for (long m : wts) dual_jumps.push_back(-m - 1);
    std::sort(dual_jumps.begin(), dual_jumps.end());
    dual_jumps.erase(std::unique(dual_jumps.begin(), dual_jumps.end()),
                     dual_jumps.end());
    for (long t : dual_jumps) w[t] = v.w_at(-t - 1).annihilator();
    // drop redundant non-jumps below the top
  }
  std::map<long, Subspace> f;
  if (v.has_f()) {
    // F^i(V*) = annihilator of F^{1-i}(V)
    std::vector<long> lv = v.f_levels();
    std::vector<long> dual_levels;
    for (long l : lv) dual_levels.push_back(1 - l);
    dual_levels.push_back(1 - (lv.front() - 1));
    std::sort(dual_levels.begin(), dual_levels.end());
    dual_levels.erase(std::unique(dual_levels.begin(), dual_levels.end()),
                      dual_levels.end());
    for (long t : dual_levels) f[t] = v.f_at(1 - t).annihilator();
  }
  std::vector<GradingComponent> grading;
  if (v.has_grading()) {
    // dual basis of a graded decomposition: annihilator of the complement
    for (const auto& g : v.grading()) {
      GradingComponent gc;
      gc.weight = -g.weight;
      gc.multiweight = mw_neg(g.multiweight);
      Subspace rest = Subspace::zero(n, d);
      for (const auto& h : v.grading())
        if (&h != &g) rest = rest.sum(h.space);
      gc.space = rest.annihilator();
      grading.push_back(gc);
    }
  }
  return BifilteredSpace::make(n, d, w, f, grading);
}

BifilteredSpace end_space(const BifilteredSpace& v) {
  return tensor(v, dual(v));
}

Vec end_vectorize(const Mat& m) {
  Vec r;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

Mat end_matrixize(const Vec& v, size_t n) {
  require(v.size() == n * n, errc::internal, "end_matrixize size");
  Mat m(n, n, v.empty() ? ScalarDomain::rational() : v[0].domain_of());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

}  // namespace periods
