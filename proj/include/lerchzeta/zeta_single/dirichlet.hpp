#pragma once

#include <span>
#include <vector>

#include "lerchzeta/types.hpp"

namespace lerchzeta {

/// A Dirichlet character modulo q, tabulated on residues 0..q-1.
struct DirichletCharacter {
  int modulus = 1;
  int index = 0;               // position within all_characters(modulus); 0 is principal
  std::vector<int> exponents;  // label against the generator table
  std::vector<cplx> values;    // values[n mod q]
  int conductor = 1;
  bool is_primitive = true;

  cplx operator()(long n) const;
  bool is_principal() const { return index == 0; }
  bool is_real() const;
};

int euler_phi(int q);

/// Every character mod q for 1 <= q <= 12, built from a fixed table of
/// generators of (Z/qZ)^*. The principal character comes first.
std::vector<DirichletCharacter> all_characters(int q);

/// G = sum_{n=1}^{q} conj(chi(n)) e^(2 pi i r n / q), 1 <= r <= q.
cplx gauss_sum(const DirichletCharacter& chi, int r);

/// L(s,chi) = sum chi(n) n^(-s) for Re(s) > 1: plain truncation when the
/// tail bound allows it with modest length, else a partial sum over whole
/// periods plus the integral form of the tail.
Estimate dirichlet_l_direct(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

/// q^(-s) sum_r chi(r) zeta(s, r/q) with the Euler-Maclaurin Hurwitz
/// evaluator (Re(s) > 0). For non-principal chi the pole parts cancel
/// exactly, so s = 1 is allowed; for the principal character it is a pole.
Estimate dirichlet_l_via_hurwitz(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

/// (1/G(conj chi)) sum_r conj(chi(r)) Li_s(e^(2 pi i r/q)) for primitive chi,
/// Re(s) > 0 (Re(s) > 1 when q = 1).
Estimate dirichlet_l_via_polylog(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

/// Direct series for Re(s) > 1, the Hurwitz combination otherwise.
Estimate dirichlet_l(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

/// zeta(s, r/q) = (q^s / phi(q)) sum_chi conj(chi(r)) L(s, chi), with L from
/// the direct series. Requires gcd(r, q) = 1 and Re(s) > 1.
Estimate hurwitz_via_l(cplx s, int r, int q, std::span<const DirichletCharacter> characters,
                       const EvalConfig& cfg = {});

}  // namespace lerchzeta
