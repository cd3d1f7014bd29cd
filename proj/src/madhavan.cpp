#include "gis/madhavan.hpp"

#include <algorithm>
#include <functional>

#include "gis/classify.hpp"

namespace gis {

bool PartialFunction::operator<(const PartialFunction& o) const {
  // domain bitset first, then the images in argument order
  for (size_t i = 0; i < image.size(); ++i) {
    bool a = image[i] >= 0, b = o.image[i] >= 0;
    if (a != b) return b;
  }
  return image < o.image;
}

std::string PartialFunction::to_string() const {
  std::string out = "[";
  bool first = true;
  for (size_t x = 0; x < image.size(); ++x) {
    if (image[x] < 0) continue;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(x) + ">" + std::to_string(image[x]);
  }
  return out + "]";
}

PartialFunction compose(const PartialFunction& a, const PartialFunction& b) {
  PartialFunction c;
  c.image.assign(a.image.size(), -1);
  for (size_t x = 0; x < a.image.size(); ++x)
    if (a.image[x] >= 0 && b.image[a.image[x]] >= 0)
      c.image[x] = b.image[a.image[x]];
  return c;
}

int MadhavanSemigroup::index_of(const PartialFunction& f) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), f);
  if (it == elems.end() || !(*it == f))
    throw Error("NotClosed", "partial function outside M_rho(X)");
  return static_cast<int>(it - elems.begin());
}

namespace {

bool qualifies(const PartialFunction& f, const Partition& rho) {
  const int n = rho.carrier_size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (rho.same(x, y) && f.defined(x) && !f.defined(y)) return false;
      if (rho.same(x, y) && f.defined(x) && f.defined(y) &&
          f.image[x] != f.image[y])
        return false;
      if (f.defined(x) && f.defined(y) && rho.same(f.image[x], f.image[y]) &&
          !rho.same(x, y))
        return false;
    }
  return true;
}

}  // namespace

MadhavanSemigroup build_m_rho(int x_size, const Partition& rho, int max_x) {
  if (x_size > max_x)
    throw Error("SizeBoundExceeded",
                "|X| = " + std::to_string(x_size) + " exceeds the bound " +
                    std::to_string(max_x));
  if (rho.carrier_size != x_size)
    throw Error("BaseMismatch", "rho must partition X");
  MadhavanSemigroup m;
  m.x_size = x_size;
  m.rho = rho;
  // a qualifying function is a map from a set of rho classes to X that is
  // constant per class and sends distinct classes into distinct classes
  auto classes = rho.classes();
  const int nc = static_cast<int>(classes.size());
  std::vector<int> choice(nc, -1);  // image of class i, or -1 (outside domain)
  std::function<void(int)> rec = [&](int i) {
    if (i == nc) {
      PartialFunction f;
      f.image.assign(x_size, -1);
      for (int c = 0; c < nc; ++c)
        if (choice[c] >= 0)
          for (int x : classes[c]) f.image[x] = choice[c];
      m.elems.push_back(std::move(f));
      return;
    }
    choice[i] = -1;
    rec(i + 1);
    for (int v = 0; v < x_size; ++v) {
      bool clash = false;
      for (int j = 0; j < i && !clash; ++j)
        clash = choice[j] >= 0 && rho.same(choice[j], v);
      if (clash) continue;
      choice[i] = v;
      rec(i + 1);
    }
    choice[i] = -1;
  };
  rec(0);
  std::sort(m.elems.begin(), m.elems.end());
  for (const auto& f : m.elems)
    if (!qualifies(f, rho))
      throw Error("InternalTheoremViolation",
                  "enumerated function violates the three conditions");
  const int n = static_cast<int>(m.elems.size());
  m.sg.order = n;
  m.sg.table.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      PartialFunction c = compose(m.elems[static_cast<size_t>(a)],
                                  m.elems[static_cast<size_t>(b)]);
      if (!qualifies(c, rho))
        throw Error("InternalTheoremViolation",
                    "composition left the qualifying set");
      m.sg.at(a, b) = m.index_of(c);
    }
  std::vector<std::string> labels(m.elems.size());
  for (size_t i = 0; i < m.elems.size(); ++i)
    labels[i] = m.elems[i].to_string();
  m.sg = validate(m.sg.rows(), std::move(labels));
  if (!classify(m.sg).right_generalized_inverse)
    throw Error("InternalTheoremViolation",
                "M_rho(X) is not right generalized inverse");
  return m;
}

bool idempotent_characterization_check(const MadhavanSemigroup& m) {
  for (int i = 0; i < m.sg.order; ++i) {
    const auto& f = m.elems[static_cast<size_t>(i)];
    bool fixes_classes = true;
    for (int x = 0; x < m.x_size && fixes_classes; ++x)
      if (f.defined(x) && !m.rho.same(x, f.image[x])) fixes_classes = false;
    if (fixes_classes != is_idempotent(m.sg, i)) return false;
  }
  return true;
}

std::optional<std::vector<int>> embedding_search(const FiniteSemigroup& s,
                                                const MadhavanSemigroup& m,
                                                int max_target) {
  if (m.sg.order > max_target)
    throw Error("SizeBoundExceeded",
                "M_rho(X) has " + std::to_string(m.sg.order) +
                    " elements, over the search bound");
  auto found = find_embedding(s, m.sg);
  if (found) {
    std::vector<int> seen;
    for (int v : *found) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end())
        throw Error("InternalTheoremViolation", "embedding is not injective");
      seen.push_back(v);
    }
    if (!is_homomorphism(s, m.sg, *found))
      throw Error("InternalTheoremViolation",
                  "embedding is not a homomorphism");
  }
  return found;
}

}  // namespace gis
