#include "gline/backend.hpp"

#include <stdexcept>
#include <unordered_set>

namespace gline {

MatN MatN::identity(int n) {
  MatN r;
  r.n = n;
  r.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

MatN operator*(const MatN& x, const MatN& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  MatN r;
  r.n = x.n;
  r.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

long long matn_det(const MatN& m) {
  // cofactor expansion; fine at the 2x2/3x3 scale this backend hosts
  if (m.n == 1) return m.at(0, 0);
  long long det = 0;
  for (int j = 0; j < m.n; ++j) {
    MatN minor;
    minor.n = m.n - 1;
    for (int r = 1; r < m.n; ++r)
      for (int c = 0; c < m.n; ++c)
        if (c != j) minor.a.push_back(m.at(r, c));
    long long cof = m.at(0, j) * matn_det(minor);
    det += (j % 2 == 0) ? cof : -cof;
  }
  return det;
}

MatN matn_inverse(const MatN& m) {
  long long det = matn_det(m);
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not invertible over the integers");
  MatN r;
  r.n = m.n;
  r.a.assign(m.a.size(), 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      MatN minor;
      minor.n = m.n - 1;
      for (int rr = 0; rr < m.n; ++rr)
        for (int cc = 0; cc < m.n; ++cc)
          if (rr != j && cc != i) minor.a.push_back(m.at(rr, cc));
      long long cof = (m.n == 1) ? 1 : matn_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      r.at(i, j) = cof * det;  // det = +-1, so this is division by det
    }
  return r;
}

GroupBackend GroupBackend::free_group(int rank) {
  GroupBackend b;
  b.kind_ = Kind::FreeGroup;
  b.param_ = rank;
  return b;
}

GroupBackend GroupBackend::free_abelian(int dim) {
  GroupBackend b;
  b.kind_ = Kind::FreeAbelian;
  b.param_ = dim;
  return b;
}

GroupBackend GroupBackend::heisenberg() {
  GroupBackend b;
  b.kind_ = Kind::Heisenberg;
  b.param_ = 0;
  return b;
}

GroupBackend GroupBackend::int_matrix_group(int n, std::vector<MatN> generators) {
  GroupBackend b;
  b.kind_ = Kind::IntMatrixGroup;
  b.param_ = n;
  b.mat_gens_ = std::move(generators);
  for (const MatN& g : b.mat_gens_) {
    if (g.n != n) throw std::invalid_argument("generator size mismatch");
    long long det = matn_det(g);
    if (det != 1 && det != -1)
      throw std::invalid_argument("generators must have determinant +-1");
  }
  return b;
}

GroupElement GroupBackend::identity() const {
  switch (kind_) {
    case Kind::FreeGroup: return ReducedWord(param_);
    case Kind::FreeAbelian: return AbelVec(param_, 0);
    case Kind::Heisenberg: return HeisElement{};
    case Kind::IntMatrixGroup: return MatN::identity(param_);
  }
  throw std::logic_error("unreachable");
}

GroupElement GroupBackend::multiply(const GroupElement& x, const GroupElement& y) const {
  switch (kind_) {
    case Kind::FreeGroup:
      return gline::multiply(std::get<ReducedWord>(x), std::get<ReducedWord>(y));
    case Kind::FreeAbelian: {
      const auto& u = std::get<AbelVec>(x);
      const auto& v = std::get<AbelVec>(y);
      AbelVec r(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
      return r;
    }
    case Kind::Heisenberg:
      return mul(std::get<HeisElement>(x), std::get<HeisElement>(y));
    case Kind::IntMatrixGroup:
      return std::get<MatN>(x) * std::get<MatN>(y);
  }
  throw std::logic_error("unreachable");
}

GroupElement GroupBackend::invert(const GroupElement& x) const {
  switch (kind_) {
    case Kind::FreeGroup: return gline::invert(std::get<ReducedWord>(x));
    case Kind::FreeAbelian: {
      AbelVec r = std::get<AbelVec>(x);
      for (long long& v : r) v = -v;
      return r;
    }
    case Kind::Heisenberg: return inv(std::get<HeisElement>(x));
    case Kind::IntMatrixGroup: return matn_inverse(std::get<MatN>(x));
  }
  throw std::logic_error("unreachable");
}

bool GroupBackend::is_identity(const GroupElement& x) const {
  return equal(x, identity());
}

bool GroupBackend::equal(const GroupElement& x, const GroupElement& y) const {
  return x == y;
}

std::string GroupBackend::key(const GroupElement& x) const {
  std::string out;
  switch (kind_) {
    case Kind::FreeGroup: {
      const auto& w = std::get<ReducedWord>(x);
      for (const Syllable& s : w.syllables())
        out += std::to_string(s.gen) + "^" + std::to_string(s.exp) + ".";
      return out;
    }
    case Kind::FreeAbelian: {
      for (long long v : std::get<AbelVec>(x)) out += std::to_string(v) + ",";
      return out;
    }
    case Kind::Heisenberg: {
      const auto& h = std::get<HeisElement>(x);
      return std::to_string(h.a) + "," + std::to_string(h.b) + "," +
             std::to_string(h.c);
    }
    case Kind::IntMatrixGroup: {
      for (long long v : std::get<MatN>(x).a) out += std::to_string(v) + ",";
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::string GroupBackend::describe(const GroupElement& x) const {
  switch (kind_) {
    case Kind::FreeGroup: return word_to_string(std::get<ReducedWord>(x));
    case Kind::FreeAbelian: {
      std::string out = "(";
      const auto& v = std::get<AbelVec>(x);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
      }
      return out + ")";
    }
    case Kind::Heisenberg: return heis_to_string(std::get<HeisElement>(x));
    case Kind::IntMatrixGroup: {
      const auto& m = std::get<MatN>(x);
      std::string out = "[";
      for (int i = 0; i < m.n; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < m.n; ++j) {
          if (j) out += ",";
          out += std::to_string(m.at(i, j));
        }
        out += "]";
      }
      return out + "]";
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<GroupElement> GroupBackend::generators() const {
  std::vector<GroupElement> out;
  switch (kind_) {
    case Kind::FreeGroup:
      for (int g = 0; g < param_; ++g)
        out.push_back(ReducedWord::from_syllables(param_, {{g, 1}}));
      return out;
    case Kind::FreeAbelian:
      for (int i = 0; i < param_; ++i) {
        AbelVec v(param_, 0);
        v[i] = 1;
        out.push_back(v);
      }
      return out;
    case Kind::Heisenberg:
      return {heis_x(), heis_y(), heis_z()};
    case Kind::IntMatrixGroup:
      for (const MatN& g : mat_gens_) out.push_back(g);
      return out;
  }
  throw std::logic_error("unreachable");
}

std::vector<GroupElement> GroupBackend::ball(const std::vector<GroupElement>& gens,
                                             int radius, std::size_t max_size) const {
  std::vector<GroupElement> step;
  for (const GroupElement& g : gens) {
    step.push_back(g);
    GroupElement gi = invert(g);
    if (!equal(gi, g)) step.push_back(gi);
  }
  std::vector<GroupElement> out = {identity()};
  std::unordered_set<std::string> seen = {key(out[0])};
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const GroupElement& s : step) {
        GroupElement next = multiply(out[i], s);
        std::string k = key(next);
        if (seen.insert(k).second) {
          if (out.size() + 1 > max_size)
            throw std::length_error("ball enumeration cap exceeded");
          out.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace gline
