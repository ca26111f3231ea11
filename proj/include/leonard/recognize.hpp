#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "leonard/densemat.hpp"
#include "leonard/parray.hpp"

namespace leonard {

enum class RejectReason {
    BadShape,
    RepeatedDualEigenvalue,
    QuadraticNoRootsInField,
    QuadraticDoubleRoot,
    RecursionInconsistent,
    ValidationFailed,
    EntryMismatch,
    ZeroOffdiagonal,
};

std::string_view reject_reason_name(RejectReason r) noexcept;

struct RecognitionReport {
    /// accepted <=> !arrays.empty()
    bool accepted = false;
    std::vector<ParameterArray> arrays;
    std::optional<RejectReason> reject_reason;
    std::string detail;
};

/// Lower bidiagonal a, upper bidiagonal a_star. On acceptance `arrays` holds
/// the single designated parameter array.
RecognitionReport recognize_lbub(const Matrix& a, const Matrix& a_star);

/// Intermediate scalars of the tridiagonal procedure.
struct RecognitionWork {
    Scalar epsilon;
    Scalar alpha;
    /// vartheta_0 .. vartheta_d
    std::vector<Scalar> vartheta;
};

/// epsilon and alpha for the quadratic whose roots are theta_0, theta_d.
/// Requires d >= 1 (Errc::InvalidInput) and distinct theta_star
/// (Errc::RepeatedDualEigenvalue).
RecognitionWork compute_eps_alpha(const Matrix& a, const std::vector<Scalar>& theta_star);

/// Coefficients (1, b, c) of lambda^2 + b lambda + c =
/// (lambda - A00)(lambda - alpha/eps) - A10 A01 / eps.
struct EndpointQuadratic {
    Scalar linear;
    Scalar constant;
};
EndpointQuadratic endpoint_quadratic(const Matrix& a, const RecognitionWork& work);

/// Assembles the parameter array from the endpoint eigenvalues (theta_0,
/// theta_d) for a tridiagonal a and theta* read off a diagonal a_star, and
/// checks it against the matrix. Requires d >= 1.
RecognitionReport assemble_from_endpoints(const Matrix& a, const std::vector<Scalar>& theta_star,
                                          const RecognitionWork& work, const Scalar& theta_0, const Scalar& theta_d);

/// Tridiagonal a, diagonal a_star. On acceptance `arrays` holds p and
/// ddown(p) for d >= 1 (both root orderings), or the single array for d = 0.
/// No constant row sum is required of a.
RecognitionReport recognize_tdd(const Matrix& a, const Matrix& a_star);

/// Independent check through primitive idempotents: E_i A* E_j (and E*_i A E*_j)
/// vanish for |i-j| > 1 and are nonzero for |i-j| = 1 in the given orderings.
/// Errc::NotMultiplicityFree if theta / theta_star are not the exact spectra.
bool verify_leonard_oracle(const Matrix& a, const Matrix& a_star, const std::vector<Scalar>& theta,
                           const std::vector<Scalar>& theta_star);

}  // namespace leonard
