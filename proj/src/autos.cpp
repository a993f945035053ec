#include "chevalley/autos.hpp"

#include <stdexcept>

#include "chevalley/errors.hpp"
#include "chevalley/linalg.hpp"

namespace chevalley {

AlgebraAutomorphism::AlgebraAutomorphism(int n, Matrix op) : n_(n), op_(std::move(op)) {
  if (op_.dim() != lie_dimension(n))
    throw DimensionMismatch("operator size does not match dim sl(n+1)");
}

AlgebraAutomorphism AlgebraAutomorphism::identity(int n) {
  return AlgebraAutomorphism(n, Matrix::identity(lie_dimension(n)));
}

LieElement AlgebraAutomorphism::operator()(const LieElement& x) const {
  if (x.rank() != n_)
    throw DimensionMismatch("rank mismatch");
  const std::size_t d = op_.dim();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (!is_zero(op_(r, c)) && !is_zero(x.coords()[c]))
        out[r] += op_(r, c) * x.coords()[c];
  return LieElement(n_, std::move(out));
}

AlgebraAutomorphism AlgebraAutomorphism::inverse() const { return {n_, invert(op_)}; }

AlgebraAutomorphism operator*(const AlgebraAutomorphism& a, const AlgebraAutomorphism& b) {
  if (a.n_ != b.n_)
    throw DimensionMismatch("rank mismatch");
  return {a.n_, a.op_ * b.op_};
}

AlgebraAutomorphism tau_generator(int n, int i) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  const Matrix ad_e = ad_matrix(generator(n, Chevalley::E, i));
  const Matrix ad_minus_f = ad_matrix(-generator(n, Chevalley::F, i));
  const Matrix exp_e = exp_nilpotent(ad_e);
  return {n, exp_e * exp_nilpotent(ad_minus_f) * exp_e};
}

AlgebraAutomorphism conjugation_automorphism(const GroupElement& g, int n) {
  if (g.rank() != n)
    throw DimensionMismatch("group element size does not match rank");
  const Matrix& gm = g.matrix();
  const Matrix gi = invert(gm);
  const std::size_t d = lie_dimension(n);
  Matrix op(d);
  for (std::size_t col = 0; col < d; ++col) {
    const Matrix b = LieElement::basis_element(n, basis_at(n, col)).to_matrix();
    const auto image = LieElement::from_matrix(gm * b * gi);
    for (std::size_t row = 0; row < d; ++row)
      op(row, col) = image.coords()[row];
  }
  return {n, std::move(op)};
}

bool preserves_bracket(const AlgebraAutomorphism& op) {
  const int n = op.rank();
  const auto basis = lie_basis(n);
  std::vector<LieElement> elems, images;
  for (const auto& b : basis) {
    elems.push_back(LieElement::basis_element(n, b));
    images.push_back(op(elems.back()));
  }
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (op(bracket(elems[a], elems[b])) != bracket(images[a], images[b]))
        return false;
  return true;
}

std::pair<LieBasisIndex, Rational> root_space_image(const AlgebraAutomorphism& op, int k, int l) {
  const int n = op.rank();
  const std::size_t col = basis_slot(n, LieBasisIndex::off_diagonal(k, l));
  std::optional<std::size_t> hit;
  for (std::size_t r = 0; r < op.matrix().dim(); ++r)
    if (!is_zero(op.matrix()(r, col))) {
      if (hit)
        throw std::logic_error("root vector image spans several basis slots");
      hit = r;
    }
  if (!hit)
    throw std::logic_error("root vector maps to zero");
  const auto dest = basis_at(n, *hit);
  if (dest.is_cartan())
    throw std::logic_error("root vector maps into the Cartan subalgebra");
  return {dest, op.matrix()(*hit, col)};
}

StandardAutomorphisms::StandardAutomorphisms(int n) : n_(n) {
  require_rank(n);
  for (int i = 1; i <= n; ++i) {
    auto t = tau_generator(n, i);
    const AlgebraAutomorphism t2 = t * t;
    auto cube = t2 * t;
    if (!(cube * t == AlgebraAutomorphism::identity(n)))
      throw std::logic_error("tau_" + std::to_string(i) + " does not have order dividing 4");
    if (!(cube == t.inverse()))
      throw std::logic_error("tau_" + std::to_string(i) + "^3 differs from its exact inverse");
    taus_.push_back(std::move(t));
    inverses_.push_back(std::move(cube));
  }
}

AlgebraAutomorphism StandardAutomorphisms::evaluate(const BraidWord& w) const {
  if (w.rank() != n_)
    throw DimensionMismatch("word rank does not match");
  auto result = AlgebraAutomorphism::identity(n_);
  for (const auto& l : w.letters())
    result = result * (l.exponent > 0 ? tau(l.index) : tau_inverse(l.index));
  return result;
}

Report verify_theorem1(int n, Execution exec) { return verify_theorem1(StandardAutomorphisms(n), exec); }

Report verify_theorem1(const StandardAutomorphisms& taus, Execution exec) {
  const auto instances = relation_instances(taus.rank());
  Report report{taus.rank(), std::vector<RelationResult>(instances.size())};
  const long count = static_cast<long>(instances.size());
  // Each instance is independent; the product kernel runs serially inside.
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (long k = 0; k < count; ++k) {
    const auto& inst = instances[static_cast<std::size_t>(k)];
    const auto left = taus.evaluate(inst.left);
    const auto right = taus.evaluate(inst.right);
    auto& r = report.relations[static_cast<std::size_t>(k)];
    r.tag = adjoint_tag(inst.family);
    r.i = inst.i;
    r.j = inst.j;
    r.pass = left == right;
    if (!r.pass) {
      r.left = left.matrix();
      r.right = right.matrix();
    }
  }
  return report;
}

std::vector<RelationResult> cross_check_levels(const Report& group, const Report& adjoint) {
  if (group.n != adjoint.n || group.relations.size() != adjoint.relations.size())
    throw DimensionMismatch("reports cover different relation sets");
  std::vector<RelationResult> mismatches;
  for (std::size_t k = 0; k < group.relations.size(); ++k) {
    const auto& g = group.relations[k];
    const auto& a = adjoint.relations[k];
    if (family_from_tag(g.tag) != family_from_tag(a.tag) || g.i != a.i || g.j != a.j)
      throw std::logic_error("reports are not aligned instance by instance");
    if (g.pass != a.pass)
      mismatches.push_back(g);
  }
  return mismatches;
}

} // namespace chevalley
