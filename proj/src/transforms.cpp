#include "ideal2d/transforms.hpp"

namespace ideal2d {

namespace {

void require_m_primary_or_unit(const MonomialIdeal& a, const char* what) {
  if (!a.is_m_primary()) throw DomainError(what);
}

Int closure_colength(const MonomialIdeal& a) {
  return integral_closure(a).colength();
}

struct Guard {
  Int root_budget;
  std::int64_t depth = 0;
};

PointBasisNode build_tree(const MonomialIdeal& a, std::string path,
                          const Int& parent_metric, Guard& guard) {
  check_internal(Int(guard.depth) <= guard.root_budget,
                 "point basis recursion exceeded the colength budget");
  PointBasisNode node;
  node.path = std::move(path);
  node.ideal = a;
  node.order = a.order();
  for (Chart chart : {Chart::X, Chart::Y}) {
    MonomialIdeal t = transform(a, chart);
    if (t.is_unit()) continue;
    Int metric = closure_colength(t);
    check_internal(metric < parent_metric,
                   "transform did not decrease the closure colength");
    ++guard.depth;
    node.children.push_back(
        build_tree(t, node.path + (chart == Chart::X ? "X" : "Y"), metric,
                   guard));
    --guard.depth;
  }
  return node;
}

template <typename Fold>
void fold_orders(const PointBasisNode& node, Fold&& fold) {
  fold(node.order);
  for (const PointBasisNode& child : node.children) fold_orders(child, fold);
}

void require_complete(const MonomialIdeal& a) {
  if (!is_complete(a)) throw DomainError("HD requires a complete ideal");
}

JointPointBasisNode build_joint_tree(const MonomialIdeal& a,
                                     const MonomialIdeal& b, std::string path,
                                     const Int& parent_metric) {
  JointPointBasisNode node;
  node.path = std::move(path);
  node.left = a;
  node.right = b;
  node.order_left = a.is_unit() ? 0 : a.order();
  node.order_right = b.is_unit() ? 0 : b.order();
  if (node.order_left == 0 && node.order_right == 0) return node;
  for (Chart chart : {Chart::X, Chart::Y}) {
    MonomialIdeal ta = transform(a, chart);
    MonomialIdeal tb = transform(b, chart);
    if (ta.is_unit() && tb.is_unit()) continue;
    Int metric = closure_colength(ta) + closure_colength(tb);
    check_internal(metric < parent_metric,
                   "joint transform did not decrease the closure colength");
    node.children.push_back(build_joint_tree(
        ta, tb, node.path + (chart == Chart::X ? "X" : "Y"), metric));
  }
  return node;
}

template <typename Fold>
void fold_joint(const JointPointBasisNode& node, Fold&& fold) {
  fold(node.order_left, node.order_right);
  for (const JointPointBasisNode& child : node.children) {
    fold_joint(child, fold);
  }
}

}  // namespace

MonomialIdeal transform(const MonomialIdeal& a, Chart chart) {
  require_m_primary_or_unit(a, "transform requires an m-primary ideal");
  std::int64_t o = a.order();
  std::vector<Exponent> gens;
  gens.reserve(a.num_min_gens());
  for (const Exponent& g : a.generators()) {
    if (chart == Chart::X) {
      gens.push_back({g.i + g.j - o, g.j});
    } else {
      gens.push_back({g.i, g.i + g.j - o});
    }
  }
  MonomialIdeal t(std::move(gens));
  check_internal(t.is_m_primary(), "transform produced a non-m-primary ideal");
  return t;
}

PointBasisNode point_basis(const MonomialIdeal& a) {
  require_m_primary_or_unit(a, "point basis requires an m-primary ideal");
  Guard guard{closure_colength(a)};
  return build_tree(a, "", guard.root_budget, guard);
}

std::vector<std::int64_t> point_basis_orders(const MonomialIdeal& a) {
  std::vector<std::int64_t> orders;
  fold_orders(point_basis(a),
              [&](std::int64_t r) { orders.push_back(r); });
  return orders;
}

Int pb_colength(const MonomialIdeal& a) {
  require_complete(a);
  Int total = 0;
  fold_orders(point_basis(a),
              [&](std::int64_t r) { total += choose2(Int(r) + 1); });
  return total;
}

Int pb_multiplicity(const MonomialIdeal& a) {
  require_complete(a);
  Int total = 0;
  fold_orders(point_basis(a),
              [&](std::int64_t r) { total += Int(r) * Int(r); });
  return total;
}

Int pb_e1(const MonomialIdeal& a) {
  require_complete(a);
  Int total = 0;
  fold_orders(point_basis(a),
              [&](std::int64_t r) { total += choose2(Int(r)); });
  return total;
}

JointPointBasisNode joint_point_basis(const MonomialIdeal& a,
                                      const MonomialIdeal& b) {
  require_m_primary_or_unit(a, "point basis requires an m-primary ideal");
  require_m_primary_or_unit(b, "point basis requires an m-primary ideal");
  Int metric = closure_colength(a) + closure_colength(b);
  return build_joint_tree(a, b, "", metric);
}

Int pb_mixed_e1(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_complete(a);
  require_complete(b);
  Int total = 0;
  fold_joint(joint_point_basis(a, b), [&](std::int64_t ra, std::int64_t rb) {
    total += Int(ra) * Int(rb);
  });
  return total;
}

std::pair<Int, Int> hilbert_coefficients(const MonomialIdeal& a) {
  require_complete(a);
  Int l1 = a.colength();
  Int l2 = power(a, 2).colength();
  Int l3 = power(a, 3).colength();
  Int e = l2 - 2 * l1;
  Int e1 = e - l1;
  check_internal(l3 == e * choose2(Int(4)) - e1 * 3,
                 "Hilbert polynomial mismatch at n = 3");
  check_internal(e == pb_multiplicity(a),
                 "Hilbert multiplicity disagrees with the point-basis sum");
  check_internal(e1 == pb_e1(a),
                 "Hilbert e_1 disagrees with the point-basis sum");
  return {e, e1};
}

}  // namespace ideal2d
