#include "gsp4/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gsp4/dualgroups.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/sampling.hpp"

namespace gsp4 {

Matrix sym_power(const Matrix& m, int k) {
  if (m.rows() != 2 || m.cols() != 2 || k < 0) throw std::invalid_argument("sym_power needs a 2x2 matrix");
  const auto n = static_cast<std::size_t>(k + 1);
  // x -> a x + c y, y -> b x + d y; polynomials stored by power of y
  const Vector px{m(0, 0), m(1, 0)}, py{m(0, 1), m(1, 1)};
  auto mul = [](const Vector& p, const Vector& q) {
    Vector r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector p{1};
    for (std::size_t a = 0; a < n - 1 - i; ++a) p = mul(p, px);
    for (std::size_t b = 0; b < i; ++b) p = mul(p, py);
    for (std::size_t r = 0; r < n; ++r) out(r, i) = p[r];
  }
  return out;
}

std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t n = gens[0].rows();
  std::vector<Vector> rows;
  for (const auto& a : gens) {
    // each entry of A^T Q A - Q is linear in vec(Q)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector eq(n * n);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) eq[k * n + l] += a(k, i) * a(l, j);
        eq[i * n + j] -= 1;
        rows.push_back(eq);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(Matrix::from_rows(rows))) out.push_back(unvec(v, n, n));
  return out;
}

std::optional<Mask> ComponentGroup::signs(const Matrix& x) const {
  Mask m = 0;
  for (std::size_t j = 0; j < idempotents.size(); ++j) {
    Matrix xe = x * idempotents[j];
    if (xe == idempotents[j]) continue;
    if (xe == -idempotents[j]) {
      m |= Mask{1} << j;
      continue;
    }
    return std::nullopt;
  }
  return m;
}

std::optional<Mask> ComponentGroup::element(const Matrix& x) const {
  auto s = signs(x);
  if (!s) return std::nullopt;
  Mask c = 0;
  if (!f2_coordinates(basis, *s, c)) return std::nullopt;
  return c;
}

CommutantIdempotents commutant_idempotents(const std::vector<Matrix>& gens, const Matrix& form) {
  const std::size_t n = form.rows();
  auto comm = commutant_basis(gens, LinearConstraints::all(n));
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j)
      if (comm[i] * comm[j] != comm[j] * comm[i])
        throw std::domain_error("degenerate image: commutant is not commutative");

  // idempotents from a generic element; coefficients fixed so output is reproducible
  static constexpr long kCoeffs[] = {3, -7, 11, 2, -5, 13, 17, -19, 23, 29, -31, 37, 41, -43, 47, 53};
  std::vector<std::vector<Vector>> spaces;
  for (int attempt = 0; attempt < 4 && spaces.size() != comm.size(); ++attempt) {
    Matrix z(n, n);
    for (std::size_t k = 0; k < comm.size(); ++k)
      z += comm[k] * Rational(kCoeffs[(k + 5 * attempt) % 16] + attempt);
    EigenSplit es = rational_eigensplit(z);
    spaces.clear();
    if (!es.irrational.empty()) continue;
    for (auto& b : es.rational) spaces.push_back(b.basis);
  }
  if (spaces.size() != comm.size()) throw std::domain_error("degenerate image: commutant is not split over Q");

  std::vector<Vector> cols;
  for (const auto& sp : spaces) cols.insert(cols.end(), sp.begin(), sp.end());
  Matrix p = Matrix::from_columns(cols), pinv = inverse(p);
  std::vector<Matrix> all;
  std::size_t off = 0;
  for (const auto& sp : spaces) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < sp.size(); ++k) d(off + k, off + k) = 1;
    off += sp.size();
    all.push_back(p * d * pinv);
  }

  CommutantIdempotents out;
  out.paired = Matrix(n, n);
  Matrix binv = inverse(form);
  std::vector<bool> used(all.size(), false);
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (used[j]) continue;
    Matrix adj = binv * all[j].transpose() * form;
    used[j] = true;
    if (adj == all[j]) {
      out.self_dual.push_back(all[j]);
      continue;
    }
    bool found = false;
    for (std::size_t k = j + 1; k < all.size(); ++k)
      if (!used[k] && adj == all[k]) {
        used[k] = found = true;
        out.paired += all[j] + all[k];
        ++out.swapped_pairs;
        break;
      }
    if (!found) throw std::domain_error("adjoint does not permute the commutant idempotents");
  }
  return out;
}

ComponentGroup assemble_components(const CommutantIdempotents& ci, const Matrix& form, bool special,
                                   const std::vector<std::string>& labels) {
  const std::size_t n = form.rows();
  const std::size_t k = ci.self_dual.size();
  if (k > 12) throw std::domain_error("too many idempotents");
  if (!labels.empty() && labels.size() != k) throw std::invalid_argument("label count does not match idempotents");
  ComponentGroup out;
  out.form = form;
  out.idempotents = ci.self_dual;
  out.swapped_pairs = ci.swapped_pairs;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < k; ++j) names.push_back(labels.empty() ? "e" + std::to_string(j + 1) : labels[j]);

  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    Matrix x = ci.paired;
    for (std::size_t j = 0; j < k; ++j) x += (m >> j & 1) ? -ci.self_dual[j] : ci.self_dual[j];
    if (x.transpose() * form * x != form) continue;
    if (special && determinant(x) != 1) continue;
    out.accepted.push_back(m);
  }

  std::vector<std::string> basis_labels;
  const Mask full = (Mask{1} << k) - 1;
  if (out.accepted.size() == (std::size_t{1} << k)) {
    for (std::size_t j = 0; j < k; ++j) {
      out.basis.push_back(Mask{1} << j);
      basis_labels.push_back(names[j]);
    }
  } else {
    out.basis = f2_echelon(out.accepted);
    std::reverse(out.basis.begin(), out.basis.end());
    for (Mask b : out.basis) {
      std::string s;
      for (std::size_t j = 0; j < k; ++j)
        if (b >> j & 1) s += (s.empty() ? "" : "+") + names[j];
      basis_labels.push_back(s);
    }
  }

  // centre: scalar -1, when it lies in the group
  std::vector<Mask> relations;
  const bool minus_one = !special || n % 2 == 0;
  Mask c = 0;
  if (minus_one && k > 0 && f2_coordinates(out.basis, full, c)) relations.push_back(c);
  out.group = TwoGroup(basis_labels, relations);
  return out;
}

ComponentGroup commutant_components(const std::vector<Matrix>& gens, const Matrix& form, bool special,
                                    const std::vector<std::string>& labels) {
  return assemble_components(commutant_idempotents(gens, form), form, special, labels);
}

namespace {

Matrix standard_alternating(std::size_t n) {
  Matrix b(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    b(i, i + 1) = 1;
    b(i + 1, i) = -1;
  }
  return b;
}

struct HandleBlock {
  Matrix form;
  std::vector<Matrix> gens;
};

// Dimension of the unital algebra generated by gens, by closing span{1} under
// multiplication.
std::size_t generated_algebra_dim(const std::vector<Matrix>& gens, std::size_t n) {
  std::vector<Matrix> basis = {Matrix::identity(n)};
  std::vector<Vector> flat = {vec(basis[0])};
  for (std::size_t i = 0; i < basis.size() && basis.size() < n * n; ++i) {
    for (const auto& g : gens) {
      Matrix w = g * basis[i];
      flat.push_back(vec(w));
      if (rank(Matrix::from_rows(flat)) == flat.size()) {
        basis.push_back(w);
      } else {
        flat.pop_back();
      }
    }
  }
  return basis.size();
}

HandleBlock draw_handle_block(const CuspidalHandle& h, Sampler& rng);

// Redraws until the block acts absolutely irreducibly, so the commutant is the scalars.
HandleBlock handle_block(const CuspidalHandle& h, Sampler& rng) {
  const auto n = static_cast<std::size_t>(h.N);
  for (;;) {
    HandleBlock b = draw_handle_block(h, rng);
    if (n == 1 || generated_algebra_dim(b.gens, n) == n * n) return b;
  }
}

HandleBlock draw_handle_block(const CuspidalHandle& h, Sampler& rng) {
  const auto n = static_cast<std::size_t>(h.N);
  HandleBlock b;
  if (n == 1) {
    b.form = Matrix{{1}};
    return b;  // sign generators are added globally
  }
  if (h.sign == -1) {
    if (n % 2) throw std::invalid_argument("symplectic handle of odd size");
    b.form = standard_alternating(n);
    for (int k = 0; k < 3 + static_cast<int>(n); ++k) {
      Vector v = rng.vector(n, 2);
      if (v == Vector(n)) v[0] = 1;
      b.gens.push_back(transvection(b.form, v, rng.nonzero_integer(2)));
    }
    return b;
  }
  b.form = Matrix::antidiagonal(n);
  if (n == 2) {
    Rational t = rng.integer(2, 5);
    b.gens.push_back(Matrix::diagonal({t, 1 / t}));
    b.gens.push_back(Matrix::antidiagonal(2));
    return b;
  }
  for (int k = 0; k < 2 + static_cast<int>(n); ++k) b.gens.push_back(random_reflections(rng, b.form, 1));
  return b;
}

// Change of basis P with P^T B P = J for a 4-dim alternating B.
Matrix to_j_coordinates(const Matrix& b) {
  auto sb = symplectic_basis(b);
  if (sb.size() != 2) throw std::invalid_argument("expected a 4-dim symplectic space");
  return Matrix::from_columns({sb[0].second, sb[1].first, sb[1].second, sb[0].first});
}

}  // namespace

OracleResult component_group_oracle(const FormalParameter& psi, const GroupTag& target, std::uint64_t seed) {
  const bool odd = target.kind == GroupKind::GSpinOdd;
  if (!(odd && target.n == 2) && target.kind != GroupKind::GSpinEven)
    throw std::invalid_argument("component_group_oracle supports GSpin5 and even GSpin targets");
  if (psi.size() != target.dual_dim()) throw std::invalid_argument("parameter size does not match the target");

  Sampler rng(seed);
  const Matrix u{{1, 1}, {0, 1}}, l{{1, 0}, {1, 1}}, minus{{-1, 0}, {0, -1}};
  std::map<std::string, HandleBlock> blocks;
  std::vector<std::string> eta_ids;
  for (const auto& s : psi.summands)
    if (!blocks.count(s.pi.id)) {
      blocks[s.pi.id] = handle_block(s.pi, rng);
      if (s.pi.N == 1) eta_ids.push_back(s.pi.id);
    }

  const std::size_t n = static_cast<std::size_t>(psi.size());
  std::vector<std::size_t> offsets;
  std::vector<Matrix> forms, sl_u, sl_l, sl_minus;
  std::size_t off = 0;
  for (const auto& s : psi.summands) {
    const auto& hb = blocks.at(s.pi.id);
    const auto N = static_cast<std::size_t>(s.pi.N);
    offsets.push_back(off);
    off += N * static_cast<std::size_t>(s.d);
    Matrix su = sym_power(u, s.d - 1), sl = sym_power(l, s.d - 1);
    auto q = invariant_bilinear_forms({su, sl});
    if (q.size() != 1) throw std::logic_error("Sym form is not unique");
    forms.push_back(kronecker(hb.form, q[0]));
    sl_u.push_back(kronecker(Matrix::identity(N), su));
    sl_l.push_back(kronecker(Matrix::identity(N), sl));
    sl_minus.push_back(kronecker(Matrix::identity(N), sym_power(minus, s.d - 1)));
  }
  Matrix form = direct_sum(forms);
  std::vector<Matrix> gens{direct_sum(sl_u), direct_sum(sl_l)};
  for (const auto& [id, hb] : blocks)
    for (const auto& g : hb.gens) {
      std::vector<Matrix> parts;
      for (const auto& s : psi.summands) {
        const auto N = static_cast<std::size_t>(s.pi.N), d = static_cast<std::size_t>(s.d);
        parts.push_back(s.pi.id == id ? kronecker(g, Matrix::identity(d)) : Matrix::identity(N * d));
      }
      gens.push_back(direct_sum(parts));
    }
  for (const auto& id : eta_ids) {
    std::vector<Matrix> parts;
    for (const auto& s : psi.summands) {
      const auto N = static_cast<std::size_t>(s.pi.N), d = static_cast<std::size_t>(s.d);
      parts.push_back(Matrix::scalar(N * d, s.pi.id == id ? -1 : 1));
    }
    gens.push_back(direct_sum(parts));
  }
  Matrix s_elem = direct_sum(sl_minus);

  Matrix p = Matrix::identity(n), pinv = p;
  if (odd) {
    p = to_j_coordinates(form);
    pinv = inverse(p);
    form = j_matrix(4);
    for (auto& g : gens) {
      g = pinv * g * p;
      if (!fixed_point_check({g, 1})) throw std::logic_error("generator left GSp4");
    }
    s_elem = pinv * s_elem * p;
  }

  OracleResult res;
  res.generators = gens;
  CommutantIdempotents ci = commutant_idempotents(gens, form);

  // name idempotents by the summand block they cut out, in summand order
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (summand, idempotent)
  for (std::size_t j = 0; j < ci.self_dual.size(); ++j) {
    Matrix e = p * ci.self_dual[j] * pinv;
    std::size_t hit = psi.summands.size() + j;
    for (std::size_t i = 0; i < psi.summands.size(); ++i) {
      const auto sz = static_cast<std::size_t>(psi.summands[i].pi.N * psi.summands[i].d);
      Matrix want(n, n);
      want.set_block(offsets[i], offsets[i], Matrix::identity(sz));
      if (e == want) hit = i;
    }
    order.emplace_back(hit, j);
  }
  std::sort(order.begin(), order.end());
  CommutantIdempotents sorted = ci;
  sorted.self_dual.clear();
  std::vector<std::string> labels;
  for (const auto& [i, j] : order) {
    sorted.self_dual.push_back(ci.self_dual[j]);
    labels.push_back(i < psi.summands.size() ? psi.summands[i].key() : "e" + std::to_string(j + 1));
  }
  res.raw = assemble_components(sorted, form, !odd, labels);
  res.group = res.raw.group;
  auto sp = res.raw.element(s_elem);
  if (!sp) throw std::logic_error("image of -1 is not a sign element");
  res.s_psi = *sp;
  return res;
}

OracleAgreement compare_with_table(const OracleResult& o, const TwoGroup& table, Mask table_s_psi) {
  OracleAgreement a;
  a.group_ok = isomorphic_as_labelled(o.group, table);
  a.s_psi_ok = a.group_ok && table.same(o.s_psi, table_s_psi);
  a.detail = "oracle order " + std::to_string(o.group.order()) + ", s_psi " + o.group.describe(o.s_psi) +
             "; table order " + std::to_string(table.order()) + ", s_psi " + table.describe(table_s_psi);
  return a;
}

}  // namespace gsp4
