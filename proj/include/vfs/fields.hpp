// Linear vector fields on spheres: constructions, lifts and certificates.
//
// A field is an exact rational matrix A acting on real coordinates,
// v(x) = A x. Complex and quaternionic fields are stored through their
// realification (r_C or r_H), so every family is a list of N x N matrices
// plus the field it claims to be over.
//
// Certificates come in two strengths:
//   * hurwitz_radon_check is a proof: skew orthogonal matrices with
//     A_l^T A_m + A_m^T A_l = 0 give orthonormal tangent vectors at every
//     point of the sphere.
//   * sampled_independence only tests finitely many exact sphere points and
//     is therefore a necessary condition.

#ifndef VFS_FIELDS_HPP
#define VFS_FIELDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfs/algebra.hpp"
#include "vfs/james.hpp"

namespace vfs {

using RealMatrix = MatrixX<Rational>;
using RealVector = VectorX<Rational>;

struct LinearField {
  std::string name;
  RealMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

struct FieldFamily {
  Eigen::Index dim = 0;
  FieldTag claimed_field = FieldTag::R;
  std::vector<LinearField> members;

  /// Throws DomainError unless every member is dim x dim.
  void validate() const;
};

/// Point of S(R^N) with exact coordinates.
class SpherePoint {
public:
  /// Throws DomainError unless the squared norm is exactly 1.
  explicit SpherePoint(RealVector coords);

  const RealVector& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }

private:
  RealVector coords_;
};

/// (2a, 1 - |a|^2) / (1 + |a|^2) for a in Q^{N-1}.
SpherePoint stereographic_point(const std::vector<Rational>& a);

/// `count` seeded stereographic points with small rational parameters.
std::vector<SpherePoint> random_sphere_points(Eigen::Index dim, std::size_t count, std::uint64_t seed);

/// The 2(N-1) points +-e_m (m < N) followed by `random_count` seeded points.
std::vector<SpherePoint> default_sample_points(Eigen::Index dim, std::size_t random_count = 48,
                                               std::uint64_t seed = 1);

enum class Unit { I, J, K };
enum class StructureModel { ComplexOnR2n, QuaternionOnR4n };

std::string_view to_string(Unit u);

/// Real matrix of right multiplication by the unit, conjugated by r_C
/// (complex model, unit must be I) or r_H (quaternionic model).
LinearField structure_matrix(Unit unit, StructureModel model, Eigen::Index dim);

/// The complex field v(z)_{2m-1} = -conj(z_{2m}), v(z)_{2m} = conj(z_{2m-1})
/// on C^n in real coordinates (M1), and its composite with alpha_i (M2).
/// n must be even and >= 2.
FieldFamily example4(Eigen::Index n);

/// The single complex field M1 from example4, claimed over C.
FieldFamily example4_complex(Eigen::Index n);

enum class LiftDirection { CToR, HToC, HToR };

std::string_view to_string(LiftDirection d);
std::optional<LiftDirection> parse_lift_direction(std::string_view s);

/// Expands each member into its composites with the structure matrices:
///   CToR: {A, J A}                      claimed C -> R
///   HToC: {A, J_H A}                    claimed H -> C (c_H o alpha_j o c_H^-1)
///   HToR: {A, I_H A, J_H A, K_H A}      claimed H -> R
/// For HToR, `only` restricts the composites to a single unit ({A, T A}).
FieldFamily lift(const FieldFamily& family, LiftDirection direction, std::optional<Unit> only = std::nullopt);

/// The family over R that carries the same independence question: C and H
/// claims are lifted to real coordinates; R families are returned as is.
FieldFamily real_expansion(const FieldFamily& family);

struct VectorFieldCertificate {
  bool skew = false;
  bool nonsingular = false;
  Eigen::Index rank = 0;
  std::optional<std::pair<Eigen::Index, Eigen::Index>> skew_violation;

  bool passed() const { return skew && nonsingular; }
  std::string describe() const;
};

/// Exact test that x -> A x is tangent (A skew) and nowhere zero on the
/// sphere (A nonsingular).
VectorFieldCertificate is_vector_field(const LinearField& field);

struct HurwitzRadonCertificate {
  bool skew = false;
  bool orthogonal = false;
  bool anticommuting = false;
  /// First offending member (or pair of members) when a condition fails.
  std::optional<std::size_t> failed_member;
  std::optional<std::pair<std::size_t, std::size_t>> failed_pair;

  /// Orthogonality and the pairwise relations, without tangency.
  bool relations_hold() const { return orthogonal && anticommuting; }
  bool passed() const { return skew && relations_hold(); }
  std::string describe() const;
};

HurwitzRadonCertificate hurwitz_radon_check(const FieldFamily& family);

struct IndependenceResult {
  bool independent = true;
  std::size_t points_checked = 0;
  /// Index into the point list and the Gram determinant there.
  std::optional<std::size_t> witness;
  Rational witness_determinant;
};

/// det <A_l x | A_m x>_R > 0 at every given point. C and H families are
/// first replaced by their real_expansion. Stops at the lowest failing index.
IndependenceResult sampled_independence(const FieldFamily& family, const std::vector<SpherePoint>& points);

enum class Theorem10Target { None, C, HViaC, HViaR };

std::string_view to_string(Theorem10Target t);
std::optional<Theorem10Target> parse_theorem10_target(std::string_view s);

enum class CertificateLevel { Sufficient, SampledOnly, Fail };

std::string_view to_string(CertificateLevel l);

struct Theorem10Report {
  Theorem10Target target = Theorem10Target::None;
  CertificateLevel level = CertificateLevel::Fail;
  /// Input plus composites, over the field the target is about.
  FieldFamily augmented;
  /// The augmented family in real coordinates; all certificates run here.
  FieldFamily expanded;
  std::vector<VectorFieldCertificate> member_certificates;
  HurwitzRadonCertificate hurwitz_radon;
  IndependenceResult independence;
  std::string summary;

  bool passed() const { return level != CertificateLevel::Fail; }
};

/// Adjoins the structure-matrix composites the target requires, then
/// certifies every member as a field, tries the Hurwitz-Radon proof and
/// falls back to sampled independence.
///   None:  the family as given
///   C:     {A_l} u {J A_l}, input real on R^2n
///   HViaC: {A_l} u {J_H A_l}, input complex (realified) on R^4n
///   HViaR: {A_l} u {T A_l : T in I_H, J_H, K_H}, input real on R^4n
Theorem10Report theorem10_check(const FieldFamily& family, Theorem10Target target,
                                const std::vector<SpherePoint>& points);

struct GramSchmidtResult {
  std::vector<FVectorQ> orthogonal;
  std::vector<Rational> squared_norms;
  /// input_l = orthogonal_l + sum_{k<l} orthogonal_k * coefficients[l][k].
  std::vector<std::vector<QuatScalar>> coefficients;

  /// Orthonormal vectors in floating point, real parts of each component
  /// grouped as (a, b, c, d) per entry; only this step is inexact.
  std::vector<std::vector<std::array<double, 4>>> normalized() const;
};

/// Orthogonalization in F^n with the conjugate-linear-first inner product:
/// w_l = v_l - sum_k w_k <w_k|v_l> / <w_k|w_k>. Throws DomainError on
/// dependent input (zero squared norm).
GramSchmidtResult gram_schmidt(const std::vector<FVectorQ>& vectors, FieldTag field);

}  // namespace vfs

#endif  // VFS_FIELDS_HPP
