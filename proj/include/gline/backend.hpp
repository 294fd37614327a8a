#ifndef GLINE_BACKEND_HPP_
#define GLINE_BACKEND_HPP_

#include <string>
#include <variant>
#include <vector>

#include "gline/freegroup.hpp"
#include "gline/heisenberg.hpp"

namespace gline {

// n x n integer matrix, row-major.
struct MatN {
  int n = 0;
  std::vector<long long> a;

  static MatN identity(int n);
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend MatN operator*(const MatN& x, const MatN& y);
  friend bool operator==(const MatN&, const MatN&) = default;
};

MatN matn_inverse(const MatN& m);  // exact; requires det = +-1
long long matn_det(const MatN& m);

using AbelVec = std::vector<long long>;
using GroupElement = std::variant<ReducedWord, AbelVec, HeisElement, MatN>;

// Word-problem oracle over one of four concrete groups. The identity test is
// exact (normal-form or matrix equality), never probabilistic.
class GroupBackend {
 public:
  enum class Kind { FreeGroup, FreeAbelian, Heisenberg, IntMatrixGroup };

  static GroupBackend free_group(int rank);
  static GroupBackend free_abelian(int dim);
  static GroupBackend heisenberg();
  static GroupBackend int_matrix_group(int n, std::vector<MatN> generators);

  Kind kind() const { return kind_; }
  GroupElement identity() const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement invert(const GroupElement& x) const;
  bool is_identity(const GroupElement& x) const;
  bool equal(const GroupElement& x, const GroupElement& y) const;

  // canonical encoding, usable as a hash key and as a deterministic sort key
  std::string key(const GroupElement& x) const;
  std::string describe(const GroupElement& x) const;

  // default generating set (inverses not included)
  std::vector<GroupElement> generators() const;

  // all products of <= radius generators/inverses, BFS order, deduplicated
  std::vector<GroupElement> ball(const std::vector<GroupElement>& gens,
                                 int radius, std::size_t max_size = 1000000) const;

 private:
  Kind kind_ = Kind::FreeGroup;
  int param_ = 2;  // rank / dim / n
  std::vector<MatN> mat_gens_;
};

}  // namespace gline

#endif  // GLINE_BACKEND_HPP_
