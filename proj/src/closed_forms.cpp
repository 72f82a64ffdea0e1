#include "topoidx/closed_forms.hpp"

#include <stdexcept>

namespace topoidx {

namespace {

void require_nonempty_first(const GraphParams& p1) {
  if (p1.order < 1) {
    throw std::invalid_argument(
        "corona join closed forms require a nonempty first factor");
  }
}

IndexValue cube(const IndexValue& x) { return x * x * x; }

}  // namespace

IndexValue forgotten_corona_join(const GraphParams& p1, const GraphParams& p2) {
  require_nonempty_first(p1);
  const IndexValue n1 = p1.order, m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  return p1.f + n1 * p2.f + 3 * n1 * n2 * p1.m1 + 3 * n1 * n1 * p2.m1 +
         6 * m1 * n1 * n1 * n2 * n2 + 6 * m2 * cube(n1) +
         n1 * n1 * n1 * n1 * n2 * (n2 * n2 + 1);
}

IndexValue forgotten_subdivision_vertex_join(const GraphParams& p1,
                                             const GraphParams& p2) {
  const IndexValue m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  return p1.f + p2.f + 3 * m1 * p2.m1 + m1 * cube(2 + n2) + 6 * m2 * m1 * m1 +
         cube(m1) * n2;
}

IndexValue first_hyper_zagreb_corona_join(const GraphParams& p1,
                                          const GraphParams& p2) {
  require_nonempty_first(p1);
  const IndexValue n1 = p1.order, m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  return p1.hm1 + n1 * p2.hm1 + 5 * n1 * (n2 * p1.m1 + n1 * p2.m1) +
         4 * n1 * (m1 * n1 * n2 * n2 + m2 * n1 * n1 + 2 * m1 * m2) +
         n1 * n1 * (n2 + 1) *
             (4 * m1 * n2 + 4 * m2 * n1 + n1 * n1 * n2 * (n2 + 1));
}

IndexValue first_hyper_zagreb_subdivision_vertex_join(const GraphParams& p1,
                                                      const GraphParams& p2) {
  const IndexValue m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  const IndexValue s_size = 2 * m1;  // m1' = |E(S(G1))|
  const IndexValue mixed = m1 + n2 + 2;
  // trailing sum over E(S(G1)) of d(u)^2 + (4 + 2*n2) d(u), closed as
  // F(G1) + (4 + 2*n2) M1(G1)
  return m1 * (5 * p2.m1 + 4 * m1 * m2) + p2.hm1 +
         s_size * (2 + n2) * (2 + n2) + m1 * mixed * (n2 * mixed + 4 * m2) +
         p1.f + (4 + 2 * n2) * p1.m1;
}

IndexValue reduced_second_zagreb_corona_join(const GraphParams& p1,
                                             const GraphParams& p2) {
  require_nonempty_first(p1);
  const IndexValue n1 = p1.order, m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  return p1.rm2 + n1 * p2.rm2 + n1 * (n2 * p1.m1 + n1 * p2.m1) +
         m1 * n1 * n2 * (n1 * n2 - 2) + m2 * n1 * n1 * (n1 - 2) +
         2 * n1 *
             (2 * m1 * m2 + m1 * n2 * (n1 - 1) + m2 * n1 * (n1 * n2 - 1)) +
         n1 * n1 * n2 * (n1 * n1 * n2 - n1 * n2 - n1 + 1);
}

IndexValue reduced_second_zagreb_subdivision_vertex_join(
    const GraphParams& p1, const GraphParams& p2) {
  const IndexValue m1 = p1.size;
  const IndexValue n2 = p2.order, m2 = p2.size;
  const IndexValue s_size = 2 * m1;
  // trailing sum over E(S(G1)) of (n2 + 1) d(u), closed as (n2 + 1) M1(G1)
  return p2.rm2 + m1 * (p2.m1 + m1 * m2 - 2 * m2) - s_size * (n2 + 1) +
         m1 * (n2 + 1) * (2 * m2 + m1 * n2 - n2) + (n2 + 1) * p1.m1;
}

IndexValue closed_form(IndexKind kind, ProductKind product,
                       const GraphParams& p1, const GraphParams& p2) {
  if (product == ProductKind::CoronaJoin) {
    switch (kind) {
      case IndexKind::F:
        return forgotten_corona_join(p1, p2);
      case IndexKind::HM1:
        return first_hyper_zagreb_corona_join(p1, p2);
      case IndexKind::RM2:
        return reduced_second_zagreb_corona_join(p1, p2);
      default:
        break;
    }
  } else if (product == ProductKind::SubdivisionVertexJoin) {
    switch (kind) {
      case IndexKind::F:
        return forgotten_subdivision_vertex_join(p1, p2);
      case IndexKind::HM1:
        return first_hyper_zagreb_subdivision_vertex_join(p1, p2);
      case IndexKind::RM2:
        return reduced_second_zagreb_subdivision_vertex_join(p1, p2);
      default:
        break;
    }
  }
  throw std::invalid_argument("no closed form for this (index, product) pair");
}

IndexValue path_cycle_closed_form(IndexKind kind, ProductKind product, int l_,
                                  int m_) {
  if (l_ < 3 || m_ < 3) {
    throw std::domain_error(
        "path/cycle expressions require l >= 3 and m >= 3");
  }
  const IndexValue l = l_, m = m_;
  if (product == ProductKind::CoronaJoin) {
    switch (kind) {
      case IndexKind::F:
        return 8 * l - 14 + 8 * l * m + 3 * l * m * (4 * l - 6) +
               12 * m * l * l + 6 * l * l * m * m * (l - 1) + 6 * m * cube(l) +
               l * l * l * l * m * (m * m + 1);
      case IndexKind::HM1:
        return 16 * l - 30 + 16 * l * m +
               5 * l * (m * (4 * l - 6) + 4 * l * m) +
               4 * l * (l * m * m * (l - 1) + m * l * l + 2 * m * (l - 1)) +
               l * l * (m + 1) *
                   (4 * m * (l - 1) + 4 * m * l + l * l * m * (m + 1));
      case IndexKind::RM2:
        return (l - 3) + l * m + l * (m * (4 * l - 6) + 4 * l * m) +
               l * m * (l - 1) * (l * m - 2) + m * l * l * (l - 2) +
               2 * l *
                   (2 * m * (l - 1) + m * (l - 1) * (l - 1) +
                    m * l * (l * m - 1)) +
               l * l * m * (l * l * m - l * m - l + 1);
      default:
        break;
    }
  } else if (product == ProductKind::SubdivisionVertexJoin) {
    switch (kind) {
      case IndexKind::F:
        return 8 * l - 14 + 8 * m + 12 * m * (l - 1) +
               (l - 1) * cube(2 + m) + 6 * m * (l - 1) * (l - 1) +
               m * cube(l - 1);
      case IndexKind::HM1:
        // trailing sum over E(S(P_l)) of d(u)^2 + (4 + 2m) d(u), closed as
        // F(P_l) + (4 + 2m) M1(P_l) = (8l - 14) + (4 + 2m)(4l - 6)
        return (l - 1) * (20 * m + 4 * m * (l - 1)) + 16 * m +
               2 * (l - 1) * (2 + m) * (2 + m) +
               (l - 1) * ((l - 1) + m + 2) * (m * ((l - 1) + m + 2) + 4 * m) +
               (8 * l - 14) + (4 + 2 * m) * (4 * l - 6);
      case IndexKind::RM2:
        // trailing sum over E(S(P_l)) of d(u), closed as M1(P_l) = 4l - 6
        return m + (l - 1) * (4 * m + m * (l - 1) - 2 * m) -
               2 * (l - 1) * (m + 1) +
               (l - 1) * (m + 1) * (2 * m + m * (l - 1) - m) +
               (m + 1) * (4 * l - 6);
      default:
        break;
    }
  }
  throw std::invalid_argument(
      "path/cycle expressions exist for F, HM1 and RM2 of the corona join "
      "and subdivision-vertex join only");
}

}  // namespace topoidx
