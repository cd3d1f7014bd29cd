#include "gis/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gis {

std::vector<std::vector<int>> FiniteSemigroup::rows() const {
  std::vector<std::vector<int>> out(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) out[a][b] = at(a, b);
  return out;
}

Partition Partition::equality(int n) {
  Partition p;
  p.carrier_size = n;
  p.num_classes = n;
  p.class_of.resize(n);
  std::iota(p.class_of.begin(), p.class_of.end(), 0);
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.carrier_size = n;
  p.num_classes = n > 0 ? 1 : 0;
  p.class_of.assign(n, 0);
  return p;
}

Partition Partition::from_class_of(const std::vector<int>& raw) {
  Partition p;
  p.carrier_size = static_cast<int>(raw.size());
  p.class_of.assign(raw.size(), -1);
  std::vector<int> relabel;
  for (int i = 0; i < p.carrier_size; ++i) {
    int found = -1;
    for (size_t k = 0; k < relabel.size(); ++k)
      if (raw[static_cast<size_t>(relabel[k])] == raw[static_cast<size_t>(i)])
        found = static_cast<int>(k);
    if (found < 0) {
      found = static_cast<int>(relabel.size());
      relabel.push_back(i);
    }
    p.class_of[i] = found;
  }
  p.num_classes = static_cast<int>(relabel.size());
  return p;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int i = 0; i < carrier_size; ++i) out[class_of[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  for (int a = 0; a < carrier_size; ++a)
    for (int b = a + 1; b < carrier_size; ++b)
      if (same(a, b) && !coarser.same(a, b)) return false;
  return true;
}

Partition Partition::meet(const Partition& a, const Partition& b) {
  std::vector<int> raw(a.carrier_size);
  for (int i = 0; i < a.carrier_size; ++i)
    raw[i] = a.class_of[i] * b.carrier_size + b.class_of[i];
  return from_class_of(raw);
}

Partition Partition::join(const Partition& a, const Partition& b) {
  // union-find over the union of both relations
  std::vector<int> parent(a.carrier_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int i = 0; i < a.carrier_size; ++i)
    for (int j = i + 1; j < a.carrier_size; ++j)
      if (a.same(i, j) || b.same(i, j)) unite(i, j);
  std::vector<int> raw(a.carrier_size);
  for (int i = 0; i < a.carrier_size; ++i) raw[i] = find(i);
  return from_class_of(raw);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  auto cls = classes();
  for (size_t k = 0; k < cls.size(); ++k) {
    if (k) out << " | ";
    for (size_t i = 0; i < cls[k].size(); ++i) {
      if (i) out << ' ';
      out << cls[k][i];
    }
  }
  return out.str();
}

FiniteSemigroup validate(const std::vector<std::vector<int>>& rows,
                         std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error("NotClosed", "empty table");
  FiniteSemigroup s;
  s.order = n;
  s.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw Error("NotClosed", "table is not square at row " +
                                   std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n)
        throw Error("NotClosed", "entry (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") = " +
                                     std::to_string(v) + " out of range");
      s.at(a, b) = v;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c)))
          throw Error("NotAssociative",
                      "(a b) c != a (b c) at a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " c=" +
                          std::to_string(c));
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw Error("NotClosed", "label count does not match order");
    s.labels = std::move(labels);
  }
  return s;
}

bool is_idempotent(const FiniteSemigroup& s, int e) { return s.at(e, e) == e; }

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.order; ++e)
    if (is_idempotent(s, e)) out.push_back(e);
  return out;
}

std::vector<int> inverses_of(const FiniteSemigroup& s, int a) {
  std::vector<int> out;
  for (int t = 0; t < s.order; ++t)
    if (s.at(s.at(a, t), a) == a && s.at(s.at(t, a), t) == t)
      out.push_back(t);
  return out;
}

FiniteSemigroup opposite(const FiniteSemigroup& s) {
  FiniteSemigroup o = s;
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b) o.at(a, b) = s.at(b, a);
  return o;
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  FiniteSemigroup p;
  p.order = a.order * b.order;
  p.table.resize(static_cast<size_t>(p.order) * p.order);
  auto id = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          p.at(id(x1, y1), id(x2, y2)) = id(a.at(x1, x2), b.at(y1, y2));
  return p;
}

std::pair<FiniteSemigroup, std::vector<int>> subsemigroup(
    const FiniteSemigroup& s, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<int> pos(s.order, -1);
  for (size_t i = 0; i < carrier.size(); ++i)
    pos[static_cast<size_t>(carrier[i])] = static_cast<int>(i);
  const int n = static_cast<int>(carrier.size());
  FiniteSemigroup sub;
  sub.order = n;
  sub.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = s.at(carrier[i], carrier[j]);
      if (pos[v] < 0)
        throw Error("NotClosed", "subset not closed under multiplication");
      sub.at(i, j) = pos[v];
    }
  return {sub, carrier};
}

bool is_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.order) return false;
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y)
      if (b.at(map[x], map[y]) != map[a.at(x, y)]) return false;
  return true;
}

namespace {

// Per-element invariant used to restrict candidate images.
struct ElemProfile {
  bool idem;
  int num_inverses;
};

std::vector<ElemProfile> profiles(const FiniteSemigroup& s) {
  std::vector<ElemProfile> out(s.order);
  for (int x = 0; x < s.order; ++x) {
    out[x].idem = is_idempotent(s, x);
    out[x].num_inverses = static_cast<int>(inverses_of(s, x).size());
  }
  return out;
}

// Full check of a completed injection.
bool full_check(const FiniteSemigroup& a, const FiniteSemigroup& b,
                const std::vector<int>& img) {
  return is_homomorphism(a, b, img);
}

std::optional<std::vector<int>> search_injective(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& b,
                                                 bool bijective) {
  if (bijective && a.order != b.order) return std::nullopt;
  if (a.order > b.order) return std::nullopt;
  auto pa = profiles(a);
  auto pb = profiles(b);
  if (bijective) {
    // cheap invariant screen
    int ia = 0, ib = 0;
    for (auto& p : pa) ia += p.idem;
    for (auto& p : pb) ib += p.idem;
    if (ia != ib) return std::nullopt;
  }
  // Backtracking over images in element order; partial products whose result
  // index exceeds the frontier are rechecked at the end.
  std::vector<int> img(a.order, -1);
  std::vector<char> used(b.order, 0);
  std::function<bool(int)> rec = [&](int next) -> bool {
    if (next == a.order) return full_check(a, b, img);
    for (int v = 0; v < b.order; ++v) {
      if (used[v]) continue;
      if (pa[static_cast<size_t>(next)].idem !=
          pb[static_cast<size_t>(v)].idem)
        continue;
      if (bijective && pa[static_cast<size_t>(next)].num_inverses !=
                           pb[static_cast<size_t>(v)].num_inverses)
        continue;
      img[next] = v;
      bool ok = true;
      for (int x = 0; x <= next && ok; ++x) {
        int xy = a.at(x, next), yx = a.at(next, x);
        if (xy <= next && b.at(img[x], v) != img[xy]) ok = false;
        if (ok && yx <= next && b.at(v, img[x]) != img[yx]) ok = false;
      }
      if (!ok) {
        img[next] = -1;
        continue;
      }
      used[v] = 1;
      if (rec(next + 1)) return true;
      used[v] = 0;
      img[next] = -1;
    }
    return false;
  };
  if (rec(0)) return img;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_embedding(const FiniteSemigroup& a,
                                               const FiniteSemigroup& b) {
  return search_injective(a, b, false);
}

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& b) {
  return search_injective(a, b, true);
}

// --- file formats ---------------------------------------------------------

namespace {
std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}
}  // namespace

FiniteSemigroup parse_sgp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> meaningful;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    auto first = body.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (body.compare(first, 7, "labels:") == 0) {
      std::istringstream ls(body.substr(first + 7));
      std::string w;
      while (ls >> w) labels.push_back(w);
      continue;
    }
    meaningful.push_back(body);
  }
  if (meaningful.empty()) throw Error("ParseError", "empty .sgp input");
  int n = 0;
  {
    std::istringstream hs(meaningful[0]);
    if (!(hs >> n) || n <= 0)
      throw Error("ParseError", "bad order line in .sgp input");
  }
  if (static_cast<int>(meaningful.size()) < n + 1)
    throw Error("ParseError", "expected " + std::to_string(n) +
                                  " table rows");
  std::vector<std::vector<int>> rows(n);
  for (int a = 0; a < n; ++a) {
    std::istringstream rs(meaningful[static_cast<size_t>(a) + 1]);
    int v;
    while (rs >> v) rows[a].push_back(v);
    if (static_cast<int>(rows[a].size()) != n)
      throw Error("ParseError",
                  "row " + std::to_string(a) + " has wrong length");
  }
  return validate(rows, std::move(labels));
}

std::string write_sgp(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.order << '\n';
  for (int a = 0; a < s.order; ++a) {
    for (int b = 0; b < s.order; ++b) {
      if (b) out << ' ';
      out << s.at(a, b);
    }
    out << '\n';
  }
  if (!s.labels.empty()) {
    out << "labels:";
    for (auto& l : s.labels) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

FiniteSemigroup parse_semigroup_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what());
  }
  if (!j.contains("table")) throw Error("ParseError", "missing \"table\"");
  std::vector<std::vector<int>> rows =
      j["table"].get<std::vector<std::vector<int>>>();
  if (j.contains("order") &&
      j["order"].get<int>() != static_cast<int>(rows.size()))
    throw Error("ParseError", "\"order\" disagrees with table size");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  return validate(rows, std::move(labels));
}

FiniteSemigroup parse_semigroup_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_semigroup_json(text);
    break;
  }
  return parse_sgp(text);
}

FiniteSemigroup load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semigroup_auto(buf.str());
}

}  // namespace gis
