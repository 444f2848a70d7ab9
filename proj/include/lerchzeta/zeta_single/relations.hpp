#pragma once

#include <string>
#include <vector>

#include "lerchzeta/types.hpp"

namespace lerchzeta {

enum class BridgeDirection {
  HurwitzFromPolylog,  // zeta(s, r/q) = q^(s-1) sum_n e^(-2 pi i r n/q) Li_s(e^(2 pi i n/q))
  PolylogFromHurwitz,  // Li_s(e^(2 pi i r/q)) = q^(-s) sum_n e^(2 pi i r n/q) zeta(s, n/q)
};

/// One side computed by a primitive evaluator, the other by the combination.
struct RelationCheck {
  int relation = 0;  // 1..6, see check_relations
  std::string label;
  cplx lhs;
  cplx rhs;
  double residual = 0.0;  // |lhs - rhs|
  double error = 0.0;     // combined error estimates of both sides
};

/// Both directions need 1 <= r <= q and q >= 2. The Hurwitz direction uses
/// Li_s(1), so Re(s) > 1. The polylog direction needs Re(s) > 0 for r < q and
/// Re(s) > 1 for r = q.
RelationCheck polylog_hurwitz_bridge(cplx s, int r, int q, BridgeDirection direction,
                                     const EvalConfig& cfg = {});

/// Evaluates every relation between L, Hurwitz zeta and polylogarithms at
/// modulus q (2 <= q <= 12) over all residues and characters, skipping
/// instances whose evaluators are outside their domain at s:
///   1  L(s,chi) = q^(-s) sum_r chi(r) zeta(s, r/q)
///   2  zeta(s, r/q) = q^s/phi(q) sum_chi conj(chi(r)) L(s,chi)
///   3  the Hurwitz-from-polylog bridge
///   4  the polylog-from-Hurwitz bridge
///   5  L(s,chi) = G(conj chi)^(-1) sum_r conj(chi(r)) Li_s(e^(2 pi i r/q)), chi primitive
///   6  Li_s(e^(2 pi i r/q)) = phi(q)^(-1) sum_chi G_r(conj chi) L(s,chi)
///                            + q^(-s) sum_{gcd(n,q)>1} e^(2 pi i r n/q) zeta(s, n/q)
std::vector<RelationCheck> check_relations(int q, cplx s, const EvalConfig& cfg = {});

}  // namespace lerchzeta
