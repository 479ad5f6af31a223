#include "afnorm/cocycle_min.hpp"

#include "afnorm/simplex.hpp"

namespace afnorm {

namespace {

Integer cocycle_value(const Cocycle& k, const std::string& edge) {
  auto it = k.find(edge);
  return it == k.end() ? Integer(0) : it->second;
}

}  // namespace

MinimizeResult minimize_norm(const Complex2& c, const ComplexInfo& info, const Cocycle& k0) {
  if (!is_cocycle(c, info, k0))
    throw CwError("the input cochain is not a cocycle vanishing on the boundary");

  // Variables: t_e per non-boundary edge, then c+_v, c-_v per non-boundary
  // vertex (potential = c+ - c-), then two surplus variables per edge row.
  std::vector<int> lp_edge(c.edges.size(), -1);
  int num_t = 0;
  for (size_t i = 0; i < c.edges.size(); ++i)
    if (!info.edge_on_boundary[i]) lp_edge[i] = num_t++;
  std::vector<int> lp_vertex(c.vertices.size(), -1);
  int num_v = 0;
  for (size_t i = 0; i < c.vertices.size(); ++i)
    if (!info.vertex_on_boundary[i]) lp_vertex[i] = num_v++;

  const int base_pot = num_t;
  const int base_surplus = num_t + 2 * num_v;
  LpProblem lp;
  lp.num_vars = num_t + 2 * num_v + 2 * num_t;
  lp.objective.assign(lp.num_vars, Rational(0));

  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (lp_edge[i] < 0) continue;
    const int te = lp_edge[i];
    lp.objective[te] = info.weight[i];
    const int tail = lp_vertex[info.vertex_index.at(c.edges[i].tail)];
    const int head = lp_vertex[info.vertex_index.at(c.edges[i].head)];
    const Rational k = Rational(cocycle_value(k0, c.edges[i].id));

    // t_e - (c(head) - c(tail)) >= k0(e)   and   t_e + (c(head) - c(tail)) >= -k0(e)
    for (int sign : {+1, -1}) {
      std::vector<Rational> r(lp.num_vars, Rational(0));
      r[te] = 1;
      if (head >= 0) {
        r[base_pot + 2 * head] += -sign;      // c+(head)
        r[base_pot + 2 * head + 1] += sign;   // c-(head)
      }
      if (tail >= 0) {
        r[base_pot + 2 * tail] += sign;
        r[base_pot + 2 * tail + 1] += -sign;
      }
      r[base_surplus + 2 * te + (sign > 0 ? 0 : 1)] = -1;
      lp.add_row(std::move(r), sign > 0 ? k : Rational(-k));
    }
  }

  LpSolution sol = lp_solve_min(lp);
  if (!sol.feasible || !sol.bounded)
    throw std::logic_error("cocycle minimization LP must be feasible and bounded");

  MinimizeResult out;
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    Rational value(0);
    if (lp_vertex[i] >= 0)
      value = sol.x[base_pot + 2 * lp_vertex[i]] - sol.x[base_pot + 2 * lp_vertex[i] + 1];
    if (denominator(value) != 1)
      throw std::logic_error("optimizer produced a fractional potential");
    if (value != 0) out.potential[c.vertices[i]] = numerator(value);
  }
  for (size_t i = 0; i < c.edges.size(); ++i) {
    Integer tail_pot(0), head_pot(0);
    auto tp = out.potential.find(c.edges[i].tail);
    if (tp != out.potential.end()) tail_pot = tp->second;
    auto hp = out.potential.find(c.edges[i].head);
    if (hp != out.potential.end()) head_pot = hp->second;
    Integer value = cocycle_value(k0, c.edges[i].id) + head_pot - tail_pot;
    if (value != 0) out.minimizer[c.edges[i].id] = value;
  }
  out.value = cocycle_norm(c, info, out.minimizer);
  return out;
}

Rational brute_force_min(const Complex2& c, const ComplexInfo& info, const Cocycle& k0,
                         const Integer& box) {
  if (!is_cocycle(c, info, k0))
    throw CwError("the input cochain is not a cocycle vanishing on the boundary");

  std::vector<int> free_vertices;
  for (size_t i = 0; i < c.vertices.size(); ++i)
    if (!info.vertex_on_boundary[i]) free_vertices.push_back(static_cast<int>(i));

  Integer width = 2 * box + 1;
  Integer points(1);
  for (size_t i = 0; i < free_vertices.size(); ++i) {
    points *= width;
    if (points > 10000000)
      throw ResourceError("brute-force search space exceeds 10^7 potentials");
  }

  std::vector<Integer> pot(free_vertices.size(), -box);
  std::vector<Integer> vertex_pot(c.vertices.size(), Integer(0));
  bool first = true;
  Rational best(0);
  for (;;) {
    for (size_t i = 0; i < free_vertices.size(); ++i) vertex_pot[free_vertices[i]] = pot[i];
    Rational total(0);
    for (size_t i = 0; i < c.edges.size(); ++i) {
      if (info.edge_on_boundary[i]) continue;
      Integer value = cocycle_value(k0, c.edges[i].id) +
                      vertex_pot[info.vertex_index.at(c.edges[i].head)] -
                      vertex_pot[info.vertex_index.at(c.edges[i].tail)];
      total += info.weight[i] * Rational(abs_int(value));
    }
    if (first || total < best) {
      best = total;
      first = false;
    }
    size_t k = pot.size();
    while (k-- > 0) {
      if (++pot[k] <= box) break;
      pot[k] = -box;
      if (k == 0) return best;
    }
    if (pot.empty()) return best;
  }
}

}  // namespace afnorm
