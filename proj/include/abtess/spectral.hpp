#pragma once

#include <vector>

#include "abtess/tmat.hpp"

namespace abtess {

struct EigenDecomp {
  std::vector<GTessarine> lambdas;
  GTMat U;
  GTMat U_aux;  // U^-1 from eig, U^H from eig_hermitian
  bool hermitian = false;
  // pairing[n][i]: which eigenpair of channel n forms tessarine pair i (canonical: identity)
  std::vector<std::vector<int>> pairing;

  // Plain tessarine eigenvalues; throws DomainError if an eps part exceeds 1e-10.
  std::vector<Tessarine> tess_lambdas() const;
  Tessarine dominant() const;
};

struct SvdDecomp {
  TMat U, V;
  std::vector<Tessarine> sigmas;
  std::vector<std::vector<int>> perms;
};

struct PowerResult {
  Tessarine lambda;
  TVec x;
  int iterations = 0;
  bool converged = false;
  // Two leading eigenvalues of some channel within 1e-8 relative.
  bool near_degenerate = false;
  // Rayleigh value after each iteration.
  std::vector<Tessarine> history;
};

EigenDecomp eig(const TMat& x);
EigenDecomp eig_hermitian(const TMat& x);
bool is_positive_definite(const TMat& x);
TMat pd_sqrt(const TMat& x);

// x scaled by the inverse of its modulus.
TVec normalize_vec(const TVec& x);
PowerResult power_method(const TMat& x, const TVec& x0, int max_iter = 1000, double tol = 1e-10);

// perms: empty or one permutation of 0..min(p,q)-1 per channel.
SvdDecomp svd(const TMat& x, const std::vector<std::vector<int>>& perms = {});
std::vector<Tessarine> singular_values(const TMat& x);
int rank(const TMat& x);
// Rank from singular values: largest per-channel count above 1e-10 times the top channel value.
int rank_of(const Params& p, const std::vector<Tessarine>& sigmas);
// U_k diag(sigma_1..sigma_k) V_k^H; k in [1, rank].
TMat svd_truncate(const SvdDecomp& s, int k);
TMat rank_k_approx(const TMat& x, int k, const std::vector<std::vector<int>>& perms = {});
TMat pseudoinverse(const TMat& x);

// Channel matrices of a generalized matrix: x1 channel + imag * x2 channel (alpha > 0).
std::vector<Eigen::MatrixXcd> g_channel_matrices(const GTMat& x);

}  // namespace abtess
