#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leonard/exactfield.hpp"

namespace leonard {

/// (theta_i, theta*_i, i=0..d; varphi_j, phi_j, j=1..d) over one field.
///
/// Construction only checks lengths and fields; whether the sequence is a
/// genuine parameter array is decided by validate().
class ParameterArray {
public:
    ParameterArray(FieldSpec field, std::vector<Scalar> theta, std::vector<Scalar> theta_star,
                   std::vector<Scalar> varphi, std::vector<Scalar> phi);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t d() const noexcept { return theta_.size() - 1; }

    const std::vector<Scalar>& theta() const noexcept { return theta_; }
    const std::vector<Scalar>& theta_star() const noexcept { return theta_star_; }
    /// Stored 0-based: varphi()[j-1] is varphi_j.
    const std::vector<Scalar>& varphi() const noexcept { return varphi_; }
    const std::vector<Scalar>& phi() const noexcept { return phi_; }

    const Scalar& theta(std::size_t i) const { return theta_.at(i); }
    const Scalar& theta_star(std::size_t i) const { return theta_star_.at(i); }
    /// 1-based and total: varphi_0 = varphi_{d+1} = 0.
    Scalar varphi(std::size_t j) const;
    /// 1-based and total: phi_0 = phi_{d+1} = 0.
    Scalar phi(std::size_t j) const;

    friend bool operator==(const ParameterArray&, const ParameterArray&);

private:
    FieldSpec field_;
    std::vector<Scalar> theta_;
    std::vector<Scalar> theta_star_;
    std::vector<Scalar> varphi_;
    std::vector<Scalar> phi_;
};

enum class Condition { I, II, III, IV, V };

std::string_view condition_name(Condition c) noexcept;

struct Violation {
    Condition condition;
    std::optional<std::size_t> index;
    std::string detail;
    /// The condition could not be evaluated because an earlier one failed.
    bool unevaluated = false;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks the five classification conditions and reports every failure.
ValidationReport validate(const ParameterArray& p);

/// The three D4 generators acting on parameter arrays.
enum class D4Gen { Star, Down, DDown };

/// Applies a single generator without validating first.
ParameterArray apply_generator(const ParameterArray& p, D4Gen g);

/// Applies a word of generators left to right: d4_act(p, {a, b}) applies a
/// then b. Errc::InvalidInput if p is not a valid parameter array.
ParameterArray d4_act(const ParameterArray& p, const std::vector<D4Gen>& word);

/// The eight members of the D4 orbit: p, down, ddown, down.ddown, and the duals of those.
std::vector<ParameterArray> d4_orbit(const ParameterArray& p);

/// A defining relation lhs = rhs between generator words.
struct D4Relation {
    std::string name;
    std::vector<D4Gen> lhs;
    std::vector<D4Gen> rhs;
};

/// The three involutions, the three exchange relations, and the two order
/// relations (down ddown)^2 = 1 and (star down)^4 = 1.
const std::vector<D4Relation>& d4_relations();

/// True iff every relation of d4_relations() holds on p (exact array equality).
/// Errc::InvalidInput if p is not a valid parameter array.
bool d4_relations_hold(const ParameterArray& p);

/// The (up to) four parameter arrays sharing the Leonard pair of p:
/// p, down(p), ddown(p), down(ddown(p)). Duplicates are removed, so d = 0
/// yields one array.
std::vector<ParameterArray> pair_arrays(const ParameterArray& p);

/// (alpha theta_i + beta, alpha* theta*_i + beta*; alpha alpha* varphi_j,
/// alpha alpha* phi_j). Errc::ZeroScale if alpha or alpha* is zero.
ParameterArray affine(const ParameterArray& p, const Scalar& alpha, const Scalar& beta, const Scalar& alpha_star,
                      const Scalar& beta_star);

/// The ratio symmetry between theta and theta* and the alternative
/// expansions of varphi_i / phi_i through phi_d / varphi_d. Requires a valid
/// array with d >= 1 (Errc::InvalidInput otherwise).
bool derived_identities(const ParameterArray& p);

/// The identities driving the tridiagonal recognition procedure: theta_i
/// recovered from theta_0 and from theta_d, and the varphi recursion linking
/// them. Requires a valid array with d >= 1.
bool recursion_identities(const ParameterArray& p);

/// vartheta_i = sum_{h<i} (theta*_h - theta*_{d-h}) / (theta*_0 - theta*_d), i = 0..d.
std::vector<Scalar> vartheta(const std::vector<Scalar>& theta_star);

/// theta_i = d - 2i, theta*_i = d - 2i, varphi_i = -2i(d-i+1), phi_i = 2i(d-i+1).
/// Errc::BadCharacteristic unless the characteristic is 0 or an odd prime > d.
ParameterArray krawtchouk_array(std::size_t d, const FieldSpec& field);

struct QRacahParams {
    std::size_t d = 0;
    Scalar q;
    Scalar s;
    Scalar s_star;
    Scalar r1;
    Scalar r2;
};

/// Checks every side condition of the q-Racah family; Errc::ConstraintViolated
/// names the first clause that fails.
void check_qracah_constraints(const QRacahParams& params);

/// The q-Racah parameter array with theta_i = q^-i + s q^(i+1).
ParameterArray qracah_array(const QRacahParams& params);

}  // namespace leonard
