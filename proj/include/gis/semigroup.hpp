#ifndef GIS_SEMIGROUP_HPP_
#define GIS_SEMIGROUP_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gis {

// Domain error with a stable machine-readable name (e.g. "NotAssociative").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// A finite semigroup given by its Cayley table. Elements are dense 0-based
// identifiers; labels are presentation-only.
struct FiniteSemigroup {
  int order = 0;
  std::vector<int> table;  // row-major, table[a*order+b] = a*b
  std::vector<std::string> labels;

  int at(int a, int b) const { return table[a * order + b]; }
  int& at(int a, int b) { return table[a * order + b]; }
  std::vector<std::vector<int>> rows() const;
};

// An equivalence relation on {0,..,carrier_size-1}. Class identifiers are
// contiguous and ordered by least member.
struct Partition {
  int carrier_size = 0;
  int num_classes = 0;
  std::vector<int> class_of;

  static Partition equality(int n);
  static Partition full(int n);
  // Normalizes arbitrary class labels to the canonical numbering.
  static Partition from_class_of(const std::vector<int>& raw);

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  bool is_equality() const { return num_classes == carrier_size; }
  bool is_full() const { return num_classes <= 1; }
  std::vector<std::vector<int>> classes() const;
  // true iff every class of *this is contained in a class of coarser
  bool refines(const Partition& coarser) const;
  static Partition meet(const Partition& a, const Partition& b);
  static Partition join(const Partition& a, const Partition& b);
  bool operator==(const Partition& o) const {
    return class_of == o.class_of;
  }
  std::string to_string() const;  // "0 2 | 1 | 3 4"
};

// Validates closure and associativity; throws NotClosed / NotAssociative.
FiniteSemigroup validate(const std::vector<std::vector<int>>& rows,
                         std::vector<std::string> labels = {});

bool is_idempotent(const FiniteSemigroup& s, int e);
std::vector<int> idempotents(const FiniteSemigroup& s);
// V(a) = { t : ata = a and tat = t }
std::vector<int> inverses_of(const FiniteSemigroup& s, int a);

FiniteSemigroup opposite(const FiniteSemigroup& s);
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

// Induced table on a subset closed under multiplication; throws NotClosed if
// the subset is not closed. Returns the subsemigroup and the carrier list.
std::pair<FiniteSemigroup, std::vector<int>> subsemigroup(
    const FiniteSemigroup& s, std::vector<int> carrier);

bool is_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                     const std::vector<int>& map);

// Injective homomorphism search A -> B (backtracking with idempotent and
// inverse-count pruning). Returns std::nullopt when none exists.
std::optional<std::vector<int>> find_embedding(const FiniteSemigroup& a,
                                               const FiniteSemigroup& b);
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& b);

// --- file formats ---------------------------------------------------------

// Cayley table text format (".sgp"): line 1 = n; then n rows of n entries;
// '#' starts a comment; optional trailing "labels:" line.
FiniteSemigroup parse_sgp(const std::string& text);
std::string write_sgp(const FiniteSemigroup& s);
// JSON document {"order": n, "table": [[...]], "labels": [...]}.
FiniteSemigroup parse_semigroup_json(const std::string& text);
// Dispatches on leading '{' after whitespace/comments.
FiniteSemigroup parse_semigroup_auto(const std::string& text);
FiniteSemigroup load_semigroup_file(const std::string& path);

}  // namespace gis

#endif  // GIS_SEMIGROUP_HPP_
