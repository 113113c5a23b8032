#pragma once

namespace d4rep {

// Central tolerance policy. Every numeric gate in the library reads its
// threshold from this record, so verification reports are reproducible and
// the defaults are visible in one place.
struct TolerancePolicy {
  // linalg
  double hermitian_input = 1e-12;  // eigen_h2 input gate, relative to max(1, |m|)
  double unitary_input = 1e-12;    // conjugate() input gate on |u u* - I|
  double degenerate_gap = 1e-14;   // eigenvalue gap below which u = I

  // character
  double character_sum = 1e-12;    // |sum(alpha) - 2|
  double gamma_degenerate = 1e-12; // gamma3 below this -> equal branch

  // constructor
  double radicand_clamp = 1e-13;   // r1/r2 radicands clamped to 0 above -this
  double relation_residual = 1e-9; // projectors_from_xyz input gate
  double quadruple = 1e-11;        // projector invariant gate (herm/idem/trace/sum)

  // graph representation
  double rank_one = 1e-11;         // |tr P - 1| and |P^2 - P| for range extraction
  double graph = 1e-11;            // from_graph_rep input gate
  double scalarity_pass = 1e-10;   // verify_locally_scalar pass threshold

  // oracle
  double bloch_unit = 1e-12;       // | |n| - 1 |
  double bloch_closure = 1e-11;    // |sum alpha_i n_i|

  // analysis
  double canon_input = 1e-8;       // canonicalize input validity gate
  double phase_zero = 1e-12;       // off-diagonal magnitude treated as zero phase anchor
  double lambda_zero = 1e-12;      // equal branch: lambda below this uses the X = 0 path
  double commutant_sv = 1e-9;      // singular value threshold for the commutant rank
  double rebuild = 1e-9;           // canonical form rebuild contract

  // file I/O
  double residual_match = 1e-12;   // stored vs recomputed residuals on read
};

inline constexpr TolerancePolicy kTol{};

}  // namespace d4rep
