#pragma once

#include <cstdint>

#include "plg/certificate.hpp"
#include "plg/mat2.hpp"
#include "plg/projective_line.hpp"

namespace plg {

/// Image of an arc under z -> (a z + b)/(c z + d). The orientation of the
/// image is decided by following an interior point.
ProjArc mobius_arc_image(const Mat2& m, const ProjArc& arc);

struct PingPongData {
  ProjArc r_a, l_a, r_b, l_b;
};

/// Checks the eight trap inclusions A(X_B) in R_A, A(R_A) in R_A,
/// A^-1(X_B) in L_A, A^-1(L_A) in L_A and the same with A and B exchanged,
/// where X_A = L_A u R_A. Returns FreeCert with the inclusion log, or
/// Inconclusive naming the first failing inclusion ("failed_inclusion").
/// Throws PreconditionError unless det A, det B > 0, the four arcs have
/// pairwise disjoint interiors and X_A, X_B are disjoint.
Certificate pingpong_check(const Mat2& a, const Mat2& b, const PingPongData& data);

struct RelationSearchOptions {
  int max_len = 12;
  bool projective = true;
  int jobs = 1;
};

/// Shortest (then first in enumeration order) nonempty reduced word w with
/// w(A, B) = I, or a scalar matrix when projective. RelationCert or
/// Inconclusive. Requires invertible matrices.
Certificate matrix_relation_search(const Mat2& a, const Mat2& b, const RelationSearchOptions& opt);

/// Replays a RelationCert or FreeCert for the pair.
VerifyReport verify_linear_certificate(const nlohmann::json& cert, const Mat2& a, const Mat2& b);

}  // namespace plg
