#pragma once

#include <cstddef>
#include <vector>

#include "leonard/densemat.hpp"
#include "leonard/parray.hpp"

namespace leonard {

/// Sum over n of (theta_i - theta_0)..(theta_i - theta_{n-1})
/// (theta*_j - theta*_0)..(theta*_j - theta*_{n-1}) / (varphi_1..varphi_n).
/// Terms past n = min(i, j) vanish and are skipped.
Scalar script_p(const ParameterArray& p, std::size_t i, std::size_t j);
/// Same sum evaluated over the full range n = 0..d.
Scalar script_p_full(const ParameterArray& p, std::size_t i, std::size_t j);

/// Row-major (d+1)x(d+1) table of script_p; the parallel and serial
/// variants must agree entrywise.
Matrix script_p_table(const ParameterArray& p);
Matrix script_p_table_serial(const ParameterArray& p);

struct Weights {
    std::vector<Scalar> k;
    std::vector<Scalar> k_star;
    Scalar nu;
};

Weights weights(const ParameterArray& p);

struct TransitionData {
    Matrix p_mat;
    Matrix p_star_mat;
    std::vector<Scalar> k;
    std::vector<Scalar> k_star;
    Scalar nu;
    ParameterArray source;
};

/// P_ij = k_j script_p(i, j), P*_ij = k*_j script_p(j, i).
/// Errc::InvalidInput unless p validates.
TransitionData transition_matrices(const ParameterArray& p);

/// diag(theta) P = P p^T and (p*)^T P = P diag(theta*), together with the
/// mirrored pair p^T P* = P* diag(theta) and diag(theta*) P* = P* (p*)^T.
bool intertwine_check(const ParameterArray& p);

struct KrawtchoukParams {
    std::size_t d = 0;
    FieldSpec field;
};

/// 2F1(-i, -j; -d | 2) summed term by term with rising factorials.
Scalar hyper_2f1(const KrawtchoukParams& params, std::size_t i, std::size_t j);
/// 4phi3(q^-i, s q^(i+1), q^-j, s* q^(j+1); r1 q, r2 q, q^-d | q, q) summed
/// term by term with iterated q-Pochhammer symbols.
Scalar hyper_4phi3(const QRacahParams& params, std::size_t i, std::size_t j);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
Scalar pochhammer(const Scalar& a, std::size_t n);
/// (a; q)_n = (1 - a)(1 - a q) ... (1 - a q^(n-1)).
Scalar q_pochhammer(const Scalar& a, const Scalar& q, std::size_t n);

/// k_j = k*_j = binomial(d, j), nu = 2^d.
Weights krawtchouk_weights(const KrawtchoukParams& params);
/// The q-Racah closed forms for k_j, k*_j and nu.
Weights qracah_weights(const QRacahParams& params);

}  // namespace leonard
