#include "gsp4/involutions.hpp"

#include <stdexcept>

#include "gsp4/linalg.hpp"
#include "gsp4/sampling.hpp"

namespace gsp4 {

SimilitudeElement make_similitude(const Matrix& gram, const Matrix& g) {
  if (!gram.square() || gram.rows() % 2 != 0 || gram != gram.transpose())
    throw std::invalid_argument("gram must be symmetric of even size");
  if (determinant(gram) == 0) throw std::invalid_argument("degenerate gram matrix");
  if (g.rows() != gram.rows() || !g.square()) throw std::invalid_argument("size mismatch");
  const std::size_t n = gram.rows() / 2;
  Matrix t = g.transpose() * gram * g;
  // nu from any nonzero entry of gram
  Rational nu;
  for (std::size_t i = 0; i < gram.rows() && nu == 0; ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != 0) {
        nu = t(i, j) / gram(i, j);
        break;
      }
  if (nu == 0 || t != gram * nu) throw std::invalid_argument("g is not a similitude of gram");
  Rational nun = 1;
  for (std::size_t k = 0; k < n; ++k) nun *= nu;
  if (determinant(g) != nun) throw std::invalid_argument("det g != nu^n: g is not in GSO");
  return {gram, g, nu};
}

bool verify(const SimilitudeElement& e, const InvolutionPair& p) {
  const std::size_t dim = e.gram.rows();
  if (p.x.rows() != dim || p.y.rows() != dim || !p.x.square() || !p.y.square()) return false;
  const Matrix one = Matrix::identity(dim);
  if (p.x * p.x != one) return false;
  if (p.x.transpose() * e.gram * p.x != e.gram) return false;
  if (determinant(p.x) != ((dim / 2) % 2 ? -1 : 1)) return false;
  if (p.y * p.y != one * e.nu) return false;
  if (p.y.transpose() * e.gram * p.y != e.gram * e.nu) return false;
  return p.x * p.y == e.g;
}

Matrix unipotent_log(const Matrix& u) {
  const std::size_t n = u.rows();
  Matrix m = u - Matrix::identity(n);
  Matrix out(n, n), pw = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational c(k % 2 ? 1 : -1, static_cast<long>(k));
    c.canonicalize();
    out += pw * c;
    pw = pw * m;
  }
  if (!pw.is_zero()) throw std::invalid_argument("u - 1 is not nilpotent");
  return out;
}

namespace {

Matrix apply_power(const Matrix& nil, std::size_t k) { return power(nil, static_cast<long>(k)); }

std::vector<UnipotentBlock> decompose_nilpotent(const Matrix& nil, const Matrix& gram, std::vector<Vector> space) {
  std::vector<UnipotentBlock> out;
  while (!space.empty()) {
    // nilpotency index on the current space
    std::size_t d = 1;
    for (;; ++d) {
      Matrix p = apply_power(nil, d);
      bool zero = true;
      for (const auto& v : space)
        if (p * v != Vector(v.size())) zero = false;
      if (zero) break;
    }
    const Matrix nd1 = apply_power(nil, d - 1);
    // top space: complement of ker N^{d-1} inside the current space
    std::vector<Vector> images;
    for (const auto& v : space) images.push_back(nd1 * v);
    std::vector<Vector> top;
    {
      std::vector<Vector> chosen_images;
      for (std::size_t i = 0; i < space.size(); ++i) {
        auto trial = chosen_images;
        trial.push_back(images[i]);
        if (rank(Matrix::from_columns(trial)) == trial.size()) {
          chosen_images = trial;
          top.push_back(space[i]);
        }
      }
    }
    const std::size_t m = top.size();
    auto pairing_k = [&](std::size_t k) {
      Matrix nk = apply_power(nil, k), c(m, m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) c(a, b) = bilinear(gram, top[a], nk * top[b]);
      return c;
    };
    const Matrix c = pairing_k(d - 1);
    const Matrix cinv = inverse(c);
    // p <- p + N^s T p kills B(p, N^{d-1-s} q), leaving the higher pairings alone
    for (std::size_t s = 1; s < d; ++s) {
      Matrix r = pairing_k(d - 1 - s);
      if (r.is_zero()) continue;
      Matrix t = (r * cinv).transpose() * Rational(s % 2 ? 1 : -1, 2);
      const Matrix ns = apply_power(nil, s);
      std::vector<Vector> next = top;
      for (std::size_t a = 0; a < m; ++a) {
        Vector shift(top[a].size());
        for (std::size_t cidx = 0; cidx < m; ++cidx)
          if (t(cidx, a) != 0) shift = shift + top[cidx] * t(cidx, a);
        next[a] = top[a] + ns * shift;
      }
      top = next;
    }
    UnipotentBlock blk;
    blk.d = static_cast<int>(d);
    blk.top = top;
    blk.pairing = pairing_k(d - 1);
    blk.alternating = d % 2 == 0;
    std::vector<Vector> string;
    for (std::size_t i = 0; i < d; ++i) {
      Matrix ni = apply_power(nil, i);
      for (const auto& p : top) string.push_back(ni * p);
    }
    out.push_back(blk);
    // orthogonal complement of the string inside the current space
    std::vector<Vector> rest;
    Matrix rf(string.size(), space.size());
    for (std::size_t a = 0; a < string.size(); ++a)
      for (std::size_t b = 0; b < space.size(); ++b) rf(a, b) = bilinear(gram, string[a], space[b]);
    for (const auto& coeffs : kernel(rf)) {
      Vector v(space[0].size());
      for (std::size_t b = 0; b < space.size(); ++b)
        if (coeffs[b] != 0) v = v + space[b] * coeffs[b];
      rest.push_back(v);
    }
    space = rest;
  }
  return out;
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n);
    v[i] = 1;
    out.push_back(v);
  }
  return out;
}

// x on span(N^i p) for one normalised block: N^i p -> (-1)^i N^i eta(p).
void place_block(const Matrix& nil, const UnipotentBlock& b, const Matrix& eta, std::vector<Vector>& from,
                 std::vector<Vector>& to) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(b.d); ++i) {
    Matrix ni = power(nil, static_cast<long>(i));
    for (std::size_t j = 0; j < b.top.size(); ++j) {
      Vector ep(b.top[j].size());
      for (std::size_t k = 0; k < b.top.size(); ++k)
        if (eta(k, j) != 0) ep = ep + b.top[k] * eta(k, j);
      from.push_back(ni * b.top[j]);
      to.push_back(ni * ep * Rational(i % 2 ? -1 : 1));
    }
  }
}

// eta on the top space: orthogonal (d odd) or of similitude -1 (d even) for C, involutive.
// `reflect` turns the odd case into a reflection, flipping det x.
Matrix eta_for(const UnipotentBlock& b, bool reflect) {
  const std::size_t m = b.top.size();
  if (b.alternating) {
    auto pairs = symplectic_basis(b.pairing);
    std::vector<Vector> cols, imgs;
    for (const auto& [e, f] : pairs) {
      cols.push_back(e);
      imgs.push_back(e);
      cols.push_back(f);
      imgs.push_back(f * Rational(-1));
    }
    return Matrix::from_columns(imgs) * inverse(Matrix::from_columns(cols));
  }
  if (!reflect) return Matrix::identity(m);
  auto ob = orthogonal_basis(b.pairing);
  return reflection(b.pairing, ob.front());
}

// Basis of {v in span(space) : B(v, sub) = 0}.
std::vector<Vector> complement_within(const Matrix& form, const std::vector<Vector>& sub,
                                      const std::vector<Vector>& space) {
  if (space.empty()) return {};
  if (sub.empty()) return space;
  Matrix rf(sub.size(), space.size());
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = 0; b < space.size(); ++b) rf(a, b) = bilinear(form, sub[a], space[b]);
  std::vector<Vector> out;
  for (const auto& coeffs : kernel(rf)) {
    Vector v(space[0].size());
    for (std::size_t b = 0; b < space.size(); ++b)
      if (coeffs[b] != 0) v = v + space[b] * coeffs[b];
    out.push_back(v);
  }
  return out;
}

// ker (g - mu)^k for k large enough that it stabilises.
std::vector<Vector> generalised_eigenspace(const Matrix& g, const Rational& mu) {
  const Matrix a = g - Matrix::identity(g.rows()) * mu;
  Matrix pw = a;
  auto space = kernel(pw);
  while (!space.empty()) {
    pw = pw * a;
    auto next = kernel(pw);
    if (next.size() == space.size()) break;
    space = next;
  }
  return space;
}

// Generalised eigenspace of +-sqrt(nu), carried in its own coordinates.
struct UnipotentJob {
  Matrix embed;  // columns: basis of the eigenspace
  Matrix nil;    // log(g / mu) there
  std::vector<UnipotentBlock> blocks;
};

// Candidate vectors for cyclic splitting, fixed so the output is reproducible.
Vector candidate(const std::vector<Vector>& space, std::size_t t) {
  Vector v(space[0].size());
  if (t < space.size()) return space[t];
  for (std::size_t i = 0; i < space.size(); ++i) {
    long c = static_cast<long>((i + 1) * (t + 3) * 7 % 11) - 5;
    if (c != 0) v = v + space[i] * Rational(c);
  }
  return v;
}

}  // namespace

std::vector<UnipotentBlock> unipotent_sl2_decompose(const Matrix& u, const Matrix& gram) {
  if (!u.square() || u.rows() != gram.rows()) throw std::invalid_argument("size mismatch");
  if (u.transpose() * gram * u != gram) throw std::invalid_argument("u does not preserve the form");
  return decompose_nilpotent(unipotent_log(u), gram, standard_basis(u.rows()));
}

InvolutionPair factor(const SimilitudeElement& e) {
  const Matrix& g = e.g;
  const Matrix& b = e.gram;
  const std::size_t n = g.rows();
  if (n < 2 || n > 8 || n % 2) throw std::domain_error("supported dimensions are 2, 4, 6, 8");
  const Matrix one = Matrix::identity(n);
  const Matrix ginv = inverse(g);

  std::vector<UnipotentJob> jobs;
  std::vector<Vector> rest = standard_basis(n);
  if (auto lam = rational_sqrt(e.nu)) {
    std::vector<Vector> eigen;
    for (int sign : {1, -1}) {
      const Rational mu = *lam * sign;
      auto space = generalised_eigenspace(g, mu);
      if (space.empty()) continue;
      UnipotentJob job;
      job.embed = Matrix::from_columns(space);
      job.nil = unipotent_log(restrict_to(g * (1 / mu), space));
      job.blocks = decompose_nilpotent(job.nil, restricted_form(b, space), standard_basis(space.size()));
      jobs.push_back(std::move(job));
      eigen.insert(eigen.end(), space.begin(), space.end());
    }
    // the +-sqrt(nu) parts are nondegenerate, and orthogonal to everything else
    rest = complement_within(b, eigen, rest);
  }

  // the rest splits into nondegenerate g-cyclic pieces; x: P(g) v -> P(nu g^-1) v there
  std::vector<Vector> from, to;
  for (std::size_t guard = 0; !rest.empty(); ++guard) {
    if (guard > 64) throw std::domain_error("no nondegenerate cyclic splitting found");
    bool found = false;
    for (std::size_t t = 0; t < 40 && !found; ++t) {
      Vector v = candidate(rest, t);
      if (v == Vector(n)) continue;
      std::vector<Vector> krylov{v};
      while (krylov.size() < rest.size()) {
        auto next = krylov;
        next.push_back(g * krylov.back());
        if (rank(Matrix::from_columns(next)) < next.size()) break;
        krylov = next;
      }
      if (determinant(restricted_form(b, krylov)) == 0) continue;
      Vector w = v;
      Rational nui = 1;
      for (std::size_t i = 0; i < krylov.size(); ++i) {
        from.push_back(krylov[i]);
        to.push_back(w * nui);
        w = ginv * w;
        nui *= e.nu;
      }
      rest = complement_within(b, krylov, rest);
      found = true;
    }
    if (!found) throw std::domain_error("no nondegenerate cyclic splitting found");
  }

  auto assemble = [&](std::size_t job_flip, std::size_t block_flip) {
    auto f = from, t = to;
    for (std::size_t j = 0; j < jobs.size(); ++j)
      for (std::size_t k = 0; k < jobs[j].blocks.size(); ++k) {
        const auto& blk = jobs[j].blocks[k];
        std::vector<Vector> bf, bt;
        place_block(jobs[j].nil, blk, eta_for(blk, j == job_flip && k == block_flip), bf, bt);
        for (auto& v : bf) f.push_back(jobs[j].embed * v);
        for (auto& v : bt) t.push_back(jobs[j].embed * v);
      }
    return Matrix::from_columns(t) * inverse(Matrix::from_columns(f));
  };

  const Rational target = (n / 2) % 2 ? -1 : 1;
  Matrix x = assemble(jobs.size(), 0);
  if (determinant(x) != target) {
    // a reflection on one odd-d multiplicity space flips det x
    bool repaired = false;
    for (std::size_t j = 0; j < jobs.size() && !repaired; ++j)
      for (std::size_t k = 0; k < jobs[j].blocks.size() && !repaired; ++k)
        if (!jobs[j].blocks[k].alternating) {
          x = assemble(j, k);
          repaired = true;
        }
    if (!repaired) throw std::domain_error("det x = (-1)^(n+1) and no odd string to adjust");
  }
  InvolutionPair p{x, x * g};
  if (!verify(e, p)) throw std::logic_error("factorisation failed verification");
  return p;
}

}  // namespace gsp4
