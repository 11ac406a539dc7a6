#include "fsig/newton.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fsig::newton {
namespace {

void check_dimension(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (n > kMaxDimension) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxDimension));
  }
}

// Rank of a rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// One-dimensional kernel of an (n-1) x n system, or empty if the kernel is larger.
std::vector<Rational> kernel_line(std::vector<std::vector<Rational>> m, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = 0; k < n; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != n) return {};
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> w(n, Rational(0));
  w[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) w[pivot_col[i]] = -m[i][free_col];
  return w;
}

// Primitive integer vector on the ray of w; w must be nonnegative.
std::vector<BigInt> primitive(const std::vector<Rational>& w) {
  BigInt l = 1;
  for (const auto& x : w) {
    BigInt den = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : w) {
    Rational y = x * l;
    out.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

Rational dot(const std::vector<BigInt>& w, const LatticePoint& u) {
  BigInt s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u[i];
  return Rational(s);
}

Rational dot(const std::vector<Rational>& w, const Point& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u[i];
  return s;
}

std::vector<LatticePoint> minimal_points(const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> uniq = pts;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<LatticePoint> out;
  for (const auto& a : uniq) {
    bool dominated = false;
    for (const auto& b : uniq) {
      if (a == b) continue;
      bool ge = true;
      for (std::size_t i = 0; i < a.size() && ge; ++i) ge = a[i] >= b[i];
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

// Calls f on every k-subset of {0..m-1}.
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t affine_dimension(const std::vector<Point>& vertices, const std::vector<std::size_t>& ids) {
  if (ids.size() <= 1) return 0;
  std::vector<std::vector<Rational>> diffs;
  const Point& base = vertices[ids[0]];
  for (std::size_t k = 1; k < ids.size(); ++k) {
    std::vector<Rational> d(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) d[i] = vertices[ids[k]][i] - base[i];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

Point centroid(const std::vector<Point>& vertices, const std::vector<std::size_t>& ids) {
  Point c(vertices[ids[0]].size(), Rational(0));
  for (auto id : ids) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += vertices[id][i];
  }
  for (auto& x : c) x /= static_cast<long>(ids.size());
  return c;
}

}  // namespace

LatticePoint lattice_point(std::initializer_list<long> coords) {
  LatticePoint out;
  for (long c : coords) out.emplace_back(c);
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

NewtonPolyhedron newton_polyhedron(const std::vector<LatticePoint>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("Newton polyhedron of an empty generator list");
  const std::size_t n = exponents[0].size();
  check_dimension(n);
  for (const auto& u : exponents) {
    if (u.size() != n) throw std::invalid_argument("exponent vectors of mixed dimension");
    for (const auto& x : u) {
      if (x < 0) throw std::invalid_argument("negative exponent in Newton polyhedron");
    }
  }
  NewtonPolyhedron poly;
  poly.n = n;
  poly.generators = minimal_points(exponents);
  const auto& pts = poly.generators;
  std::set<std::pair<std::vector<BigInt>, BigInt>> seen;
  // A facet is spanned by k generators and n - k coordinate directions.
  for (std::size_t k = 1; k <= n; ++k) {
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& chosen) {
      for_each_subset(n, n - k, [&](const std::vector<std::size_t>& dirs) {
        std::vector<std::vector<Rational>> eqs;
        for (auto d : dirs) {
          std::vector<Rational> row(n, Rational(0));
          row[d] = 1;
          eqs.push_back(std::move(row));
        }
        for (std::size_t j = 1; j < chosen.size(); ++j) {
          std::vector<Rational> row(n);
          for (std::size_t i = 0; i < n; ++i) row[i] = Rational(pts[chosen[j]][i] - pts[chosen[0]][i]);
          eqs.push_back(std::move(row));
        }
        std::vector<Rational> w = kernel_line(std::move(eqs), n);
        if (w.empty()) return;
        const bool nonpos = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x <= 0; });
        if (nonpos) {
          for (auto& x : w) x = -x;
        }
        if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x < 0; })) return;
        const std::vector<BigInt> normal = primitive(w);
        const Rational offset = dot(normal, pts[chosen[0]]);
        if (offset <= 0) return;
        for (const auto& u : pts) {
          if (dot(normal, u) < offset) return;
        }
        if (seen.insert({normal, offset.get_num()}).second) poly.facets.push_back({normal, offset});
      });
    });
  }
  std::sort(poly.facets.begin(), poly.facets.end(), [](const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  return poly;
}

ClippedPolytope clip(const NewtonPolyhedron& poly, const Rational& dilation) {
  const Rational t = canonical(dilation);
  if (t < 0) throw std::invalid_argument("dilation t must be nonnegative");
  const std::size_t n = poly.n;
  check_dimension(n);
  ClippedPolytope out;
  out.n = n;
  for (const auto& f : poly.facets) {
    out.halfspaces.push_back({f.normal, Rational(t * f.offset)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> lo(n, BigInt(0)), hi(n, BigInt(0));
    lo[i] = 1;
    hi[i] = -1;
    out.halfspaces.push_back({lo, Rational(0)});
    out.halfspaces.push_back({hi, Rational(-1)});
  }
  for (const auto& h : out.halfspaces) {
    std::vector<Rational> row;
    for (const auto& x : h.normal) row.emplace_back(x);
    out.normals.push_back(std::move(row));
    out.offsets.push_back(h.offset);
  }
  const std::size_t hcount = out.halfspaces.size();

  // Vertices: feasible solutions of n tight halfspaces.
  std::set<Point> found;
  for_each_subset(hcount, n, [&](const std::vector<std::size_t>& tight) {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (auto h : tight) {
      m.push_back(out.normals[h]);
      rhs.push_back(out.offsets[h]);
    }
    // Cramer-free elimination on the augmented system.
    std::vector<std::vector<Rational>> aug = m;
    for (std::size_t i = 0; i < n; ++i) aug[i].push_back(rhs[i]);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && aug[piv][c] == 0) ++piv;
      if (piv == n) return;
      std::swap(aug[piv], aug[c]);
      const Rational inv = 1 / aug[c][c];
      for (std::size_t k = c; k <= n; ++k) aug[c][k] *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || aug[i][c] == 0) continue;
        const Rational f = aug[i][c];
        for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[c][k];
      }
    }
    Point v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = aug[i][n];
    for (std::size_t h = 0; h < hcount; ++h) {
      if (dot(out.normals[h], v) < out.offsets[h]) return;
    }
    found.insert(std::move(v));
  });
  out.vertices.assign(found.begin(), found.end());
  const auto& verts = out.vertices;
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (verts.size() < n + 1 || affine_dimension(verts, all) < n) {
    out.volume = 0;
    return out;
  }

  std::vector<std::vector<std::size_t>> tight_sets(hcount);
  for (std::size_t h = 0; h < hcount; ++h) {
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (dot(out.normals[h], verts[v]) == out.offsets[h]) tight_sets[h].push_back(v);
    }
  }

  // Flags of faces: each simplex is (centroid of P, centroid of a facet, ...,
  // a vertex).
  std::vector<Point> chain;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> descend =
      [&](const std::vector<std::size_t>& face, std::size_t dim) {
        if (dim == 0) {
          chain.push_back(verts[face[0]]);
          out.simplices.push_back(chain);
          chain.pop_back();
          return;
        }
        chain.push_back(centroid(verts, face));
        std::set<std::vector<std::size_t>> subfaces;
        for (std::size_t h = 0; h < hcount; ++h) {
          std::vector<std::size_t> sub;
          std::set_intersection(face.begin(), face.end(), tight_sets[h].begin(), tight_sets[h].end(),
                                std::back_inserter(sub));
          if (sub.empty() || sub.size() == face.size()) continue;
          if (subfaces.count(sub)) continue;
          if (affine_dimension(verts, sub) + 1 != dim) continue;
          subfaces.insert(sub);
          descend(sub, dim - 1);
        }
        chain.pop_back();
      };
  descend(all, n);

  Rational total = 0;
  BigInt fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  for (const auto& s : out.simplices) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Rational> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = s[k][i] - s[0][i];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  out.volume = total / Rational(fact);
  out.volume.canonicalize();
  return out;
}

Rational clip_and_volume(const NewtonPolyhedron& poly, const Rational& t) { return clip(poly, t).volume; }

BigInt lattice_count(const NewtonPolyhedron& poly, const Rational& dilation, std::uint64_t q) {
  const Rational t = canonical(dilation);
  if (q == 0) throw std::invalid_argument("lattice_count needs q >= 1");
  if (t < 0) throw std::invalid_argument("dilation t must be nonnegative");
  const std::size_t n = poly.n;
  const BigInt qq(static_cast<unsigned long>(q));
  // <w, u> >= ceil(t q b) for each facet
  std::vector<BigInt> need;
  for (const auto& f : poly.facets) need.push_back(ceil(Rational(t * Rational(qq) * f.offset)));
  // max contribution of coordinates i.. when set to q
  std::vector<std::vector<BigInt>> tail(poly.facets.size(), std::vector<BigInt>(n + 1, BigInt(0)));
  for (std::size_t f = 0; f < poly.facets.size(); ++f) {
    for (std::size_t i = n; i-- > 0;) tail[f][i] = tail[f][i + 1] + poly.facets[f].normal[i] * qq;
  }
  std::vector<BigInt> free_count(n + 1);
  free_count[n] = 1;
  for (std::size_t i = n; i-- > 0;) free_count[i] = free_count[i + 1] * (qq + 1);

  std::vector<BigInt> partial(poly.facets.size(), BigInt(0));
  BigInt count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    bool all_met = true;
    for (std::size_t f = 0; f < partial.size(); ++f) {
      if (partial[f] + tail[f][i] < need[f]) return;
      if (partial[f] < need[f]) all_met = false;
    }
    if (all_met) {
      count += free_count[i];
      return;
    }
    for (std::uint64_t v = 0; v <= q; ++v) {
      for (std::size_t f = 0; f < partial.size(); ++f) partial[f] += poly.facets[f].normal[i] * v;
      rec(i + 1);
      for (std::size_t f = 0; f < partial.size(); ++f) partial[f] -= poly.facets[f].normal[i] * v;
    }
  };
  rec(0);
  return count;
}

Rational monomial_signature(const std::vector<LatticePoint>& exponents, const Rational& t) {
  return clip_and_volume(newton_polyhedron(exponents), t);
}

bool closure_membership(const LatticePoint& u, const std::vector<LatticePoint>& exponents,
                        const Rational& scale) {
  const Rational lambda = canonical(scale);
  for (const auto& x : u) {
    if (x < 0) throw std::invalid_argument("closure membership needs a nonnegative exponent");
  }
  const NewtonPolyhedron poly = newton_polyhedron(exponents);
  if (u.size() != poly.n) throw std::invalid_argument("dimension mismatch");
  for (const auto& f : poly.facets) {
    if (dot(f.normal, u) < lambda * f.offset) return false;
  }
  return true;
}

}  // namespace fsig::newton
