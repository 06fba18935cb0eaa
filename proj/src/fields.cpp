#include "vfs/fields.hpp"

#include <cmath>
#include <sstream>

#include "vfs/linalg.hpp"

namespace vfs {

void FieldFamily::validate() const {
  if (dim < 1) throw DomainError("family dimension must be positive");
  for (const auto& f : members) {
    if (f.matrix.rows() != dim || f.matrix.cols() != dim) {
      throw DomainError("member " + f.name + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
  }
}

SpherePoint::SpherePoint(RealVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1 || coords_.squaredNorm() != Rational(1)) {
    throw DomainError("SpherePoint: coordinates do not have unit norm");
  }
}

SpherePoint stereographic_point(const std::vector<Rational>& a) {
  const auto n = static_cast<Eigen::Index>(a.size()) + 1;
  Rational norm2(0);
  for (const auto& x : a) norm2 += x * x;
  const Rational scale = Rational(1) / (Rational(1) + norm2);
  RealVector coords(n);
  for (Eigen::Index m = 0; m + 1 < n; ++m) coords(m) = Rational(2) * a[static_cast<std::size_t>(m)] * scale;
  coords(n - 1) = (Rational(1) - norm2) * scale;
  return SpherePoint(std::move(coords));
}

std::vector<SpherePoint> random_sphere_points(Eigen::Index dim, std::size_t count, std::uint64_t seed) {
  if (dim < 1) throw DomainError("random_sphere_points: dimension must be positive");
  RationalSampler sampler(seed);
  std::vector<SpherePoint> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> a(static_cast<std::size_t>(dim - 1));
    for (auto& x : a) x = sampler.rational();
    points.push_back(stereographic_point(a));
  }
  return points;
}

std::vector<SpherePoint> default_sample_points(Eigen::Index dim, std::size_t random_count, std::uint64_t seed) {
  if (dim < 1) throw DomainError("default_sample_points: dimension must be positive");
  std::vector<SpherePoint> points;
  for (Eigen::Index m = 0; m + 1 < dim; ++m) {
    for (int sign : {1, -1}) {
      RealVector e = RealVector::Zero(dim);
      e(m) = Rational(sign);
      points.emplace_back(std::move(e));
    }
  }
  for (auto& p : random_sphere_points(dim, random_count, seed)) points.push_back(std::move(p));
  return points;
}

std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::I: return "i";
    case Unit::J: return "j";
    case Unit::K: return "k";
  }
  return "?";
}

namespace {

QuatScalar unit_scalar(Unit u) {
  switch (u) {
    case Unit::I: return QuatScalar::i();
    case Unit::J: return QuatScalar::j();
    case Unit::K: return QuatScalar::k();
  }
  return QuatScalar();
}

RealMatrix compose(const LinearField& outer, const RealMatrix& inner_matrix) { return outer.matrix * inner_matrix; }

}  // namespace

LinearField structure_matrix(Unit unit, StructureModel model, Eigen::Index dim) {
  const bool complex_model = model == StructureModel::ComplexOnR2n;
  if (complex_model && unit != Unit::I) throw DomainError("structure_matrix: complex model only has i");
  if (dim < 1 || dim % (complex_model ? 2 : 4) != 0) {
    throw DomainError("structure_matrix: dimension " + std::to_string(dim) + " not divisible by " +
                      (complex_model ? "2" : "4"));
  }
  const CoordinateMap to = complex_model ? CoordinateMap::RC : CoordinateMap::RH;
  const CoordinateMap from = complex_model ? CoordinateMap::RCInv : CoordinateMap::RHInv;
  const QuatScalar t = unit_scalar(unit);

  RealMatrix m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto e = FVectorQ::unit(FieldTag::R, static_cast<std::size_t>(dim), static_cast<std::size_t>(col));
    m.col(col) = to_eigen(apply_map(to, alpha(apply_map(from, e), t)));
  }
  const std::string prefix = complex_model ? "r_C_" : "r_H_";
  return LinearField{prefix + std::string(to_string(unit)), std::move(m)};
}

FieldFamily example4(Eigen::Index n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("example4: n must be even and >= 2 (the construction pairs complex coordinates), got " +
                      std::to_string(n));
  }
  const Eigen::Index dim = 2 * n;
  RealMatrix m1 = RealMatrix::Zero(dim, dim);
  RealMatrix m2 = RealMatrix::Zero(dim, dim);
  // Each block of four real coordinates (x1, x2, x3, x4):
  //   M1 x = (-x3,  x4, x1, -x2)
  //   M2 x = (-x4, -x3, x2,  x1)
  for (Eigen::Index b = 0; b < dim; b += 4) {
    m1(b, b + 2) = -1;
    m1(b + 1, b + 3) = 1;
    m1(b + 2, b) = 1;
    m1(b + 3, b + 1) = -1;

    m2(b, b + 3) = -1;
    m2(b + 1, b + 2) = -1;
    m2(b + 2, b + 1) = 1;
    m2(b + 3, b) = 1;
  }
  return FieldFamily{dim, FieldTag::R, {{"M1", std::move(m1)}, {"M2", std::move(m2)}}};
}

FieldFamily example4_complex(Eigen::Index n) {
  FieldFamily pair = example4(n);
  pair.members.resize(1);
  pair.claimed_field = FieldTag::C;
  return pair;
}

std::string_view to_string(LiftDirection d) {
  switch (d) {
    case LiftDirection::CToR: return "C_to_R";
    case LiftDirection::HToC: return "H_to_C";
    case LiftDirection::HToR: return "H_to_R";
  }
  return "?";
}

std::optional<LiftDirection> parse_lift_direction(std::string_view s) {
  if (s == "C_to_R") return LiftDirection::CToR;
  if (s == "H_to_C") return LiftDirection::HToC;
  if (s == "H_to_R") return LiftDirection::HToR;
  return std::nullopt;
}

FieldFamily lift(const FieldFamily& family, LiftDirection direction, std::optional<Unit> only) {
  family.validate();
  const FieldTag expected = direction == LiftDirection::CToR ? FieldTag::C : FieldTag::H;
  if (family.claimed_field != expected) {
    throw DomainError("lift " + std::string(to_string(direction)) + ": family claims " +
                      std::string(to_string(family.claimed_field)) + ", expected " + std::string(to_string(expected)));
  }
  if (only && direction != LiftDirection::HToR) throw DomainError("lift: unit restriction only applies to H_to_R");

  std::vector<LinearField> composites;
  FieldTag result_field = FieldTag::R;
  switch (direction) {
    case LiftDirection::CToR:
      composites.push_back(structure_matrix(Unit::I, StructureModel::ComplexOnR2n, family.dim));
      break;
    case LiftDirection::HToC:
      composites.push_back(structure_matrix(Unit::J, StructureModel::QuaternionOnR4n, family.dim));
      result_field = FieldTag::C;
      break;
    case LiftDirection::HToR:
      for (Unit u : {Unit::I, Unit::J, Unit::K}) {
        if (!only || *only == u) composites.push_back(structure_matrix(u, StructureModel::QuaternionOnR4n, family.dim));
      }
      break;
  }

  FieldFamily out{family.dim, result_field, {}};
  out.members.reserve(family.members.size() * (composites.size() + 1));
  for (const auto& member : family.members) {
    out.members.push_back(member);
    for (const auto& t : composites) {
      out.members.push_back(LinearField{t.name + "*" + member.name, compose(t, member.matrix)});
    }
  }
  return out;
}

FieldFamily real_expansion(const FieldFamily& family) {
  switch (family.claimed_field) {
    case FieldTag::R: return family;
    case FieldTag::C: return lift(family, LiftDirection::CToR);
    case FieldTag::H: return lift(family, LiftDirection::HToR);
  }
  return family;
}

std::string VectorFieldCertificate::describe() const {
  std::ostringstream os;
  if (passed()) {
    os << "vector field (skew, nonsingular)";
  } else if (!skew) {
    os << "not tangent: matrix not skew-symmetric";
    if (skew_violation && skew_violation->first >= 0) {
      os << " at (" << skew_violation->first << ", " << skew_violation->second << ")";
    }
  } else {
    os << "vanishes somewhere: rank " << rank;
  }
  return os.str();
}

VectorFieldCertificate is_vector_field(const LinearField& field) {
  VectorFieldCertificate cert;
  cert.skew_violation = skew_violation(field.matrix);
  cert.skew = !cert.skew_violation;
  cert.rank = exact_rank(field.matrix);
  cert.nonsingular = field.matrix.rows() == field.matrix.cols() && cert.rank == field.matrix.rows();
  return cert;
}

std::string HurwitzRadonCertificate::describe() const {
  std::ostringstream os;
  if (passed()) return "Hurwitz-Radon family (orthonormal at every point)";
  if (!orthogonal) {
    os << "member " << failed_member.value_or(0) << " is not orthogonal";
  } else if (!anticommuting) {
    os << "members " << failed_pair->first << " and " << failed_pair->second << " violate A^T B + B^T A = 0";
  } else {
    os << "relations hold but member " << failed_member.value_or(0) << " is not skew";
  }
  return os.str();
}

HurwitzRadonCertificate hurwitz_radon_check(const FieldFamily& family) {
  family.validate();
  HurwitzRadonCertificate cert;
  cert.skew = true;
  cert.orthogonal = true;
  cert.anticommuting = true;
  const auto& ms = family.members;
  for (std::size_t l = 0; l < ms.size() && cert.orthogonal; ++l) {
    if (!is_exact_identity(RealMatrix(ms[l].matrix.transpose() * ms[l].matrix))) {
      cert.orthogonal = false;
      cert.failed_member = l;
    }
  }
  for (std::size_t l = 0; l < ms.size() && cert.anticommuting; ++l) {
    for (std::size_t m = l + 1; m < ms.size(); ++m) {
      const RealMatrix cross = ms[l].matrix.transpose() * ms[m].matrix + ms[m].matrix.transpose() * ms[l].matrix;
      if (!is_exact_zero(cross)) {
        cert.anticommuting = false;
        cert.failed_pair = std::make_pair(l, m);
        break;
      }
    }
  }
  for (std::size_t l = 0; l < ms.size(); ++l) {
    if (!is_skew_symmetric(ms[l].matrix)) {
      cert.skew = false;
      if (cert.relations_hold()) cert.failed_member = l;
      break;
    }
  }
  return cert;
}

IndependenceResult sampled_independence(const FieldFamily& input, const std::vector<SpherePoint>& points) {
  const FieldFamily family = real_expansion(input);
  family.validate();
  IndependenceResult result;
  const auto m = static_cast<Eigen::Index>(family.members.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const RealVector& x = points[k].coords();
    if (x.size() != family.dim) throw DomainError("sampled_independence: point dimension mismatch");
    RealMatrix values(family.dim, m);
    for (Eigen::Index l = 0; l < m; ++l) values.col(l) = family.members[static_cast<std::size_t>(l)].matrix * x;
    const RealMatrix gram = values.transpose() * values;
    const Rational det = exact_determinant(gram);
    ++result.points_checked;
    if (det <= 0) {
      result.independent = false;
      result.witness = k;
      result.witness_determinant = det;
      break;
    }
  }
  return result;
}

std::string_view to_string(Theorem10Target t) {
  switch (t) {
    case Theorem10Target::None: return "none";
    case Theorem10Target::C: return "C";
    case Theorem10Target::HViaC: return "H_via_c";
    case Theorem10Target::HViaR: return "H_via_r";
  }
  return "?";
}

std::optional<Theorem10Target> parse_theorem10_target(std::string_view s) {
  if (s == "none" || s == "R") return Theorem10Target::None;
  if (s == "C") return Theorem10Target::C;
  if (s == "H_via_c") return Theorem10Target::HViaC;
  if (s == "H_via_r") return Theorem10Target::HViaR;
  return std::nullopt;
}

std::string_view to_string(CertificateLevel l) {
  switch (l) {
    case CertificateLevel::Sufficient: return "sufficient";
    case CertificateLevel::SampledOnly: return "sampled-only";
    case CertificateLevel::Fail: return "fail";
  }
  return "?";
}

Theorem10Report theorem10_check(const FieldFamily& family, Theorem10Target target,
                                const std::vector<SpherePoint>& points) {
  family.validate();
  Theorem10Report report;
  report.target = target;

  auto require_claim = [&](FieldTag f) {
    if (family.claimed_field != f) {
      throw DomainError("theorem10_check: target " + std::string(to_string(target)) + " expects a family over " +
                        std::string(to_string(f)));
    }
  };
  auto adjoin = [&](FieldTag result_field, const std::vector<LinearField>& structures) {
    FieldFamily out{family.dim, result_field, family.members};
    for (const auto& t : structures) {
      for (const auto& member : family.members) {
        out.members.push_back(LinearField{t.name + "*" + member.name, compose(t, member.matrix)});
      }
    }
    return out;
  };

  switch (target) {
    case Theorem10Target::None:
      report.augmented = family;
      break;
    case Theorem10Target::C:
      require_claim(FieldTag::R);
      report.augmented = adjoin(FieldTag::R, {structure_matrix(Unit::I, StructureModel::ComplexOnR2n, family.dim)});
      break;
    case Theorem10Target::HViaC:
      require_claim(FieldTag::C);
      report.augmented = adjoin(FieldTag::C, {structure_matrix(Unit::J, StructureModel::QuaternionOnR4n, family.dim)});
      break;
    case Theorem10Target::HViaR:
      require_claim(FieldTag::R);
      report.augmented = adjoin(FieldTag::R, {structure_matrix(Unit::I, StructureModel::QuaternionOnR4n, family.dim),
                                              structure_matrix(Unit::J, StructureModel::QuaternionOnR4n, family.dim),
                                              structure_matrix(Unit::K, StructureModel::QuaternionOnR4n, family.dim)});
      break;
  }
  report.expanded = real_expansion(report.augmented);

  std::ostringstream summary;
  std::optional<std::size_t> not_a_field;
  for (std::size_t l = 0; l < report.expanded.members.size(); ++l) {
    report.member_certificates.push_back(is_vector_field(report.expanded.members[l]));
    if (!not_a_field && !report.member_certificates.back().passed()) not_a_field = l;
  }
  report.hurwitz_radon = hurwitz_radon_check(report.expanded);
  report.independence = sampled_independence(report.expanded, points);

  if (not_a_field) {
    report.level = CertificateLevel::Fail;
    summary << "member " << report.expanded.members[*not_a_field].name << ": "
            << report.member_certificates[*not_a_field].describe();
  } else if (report.hurwitz_radon.passed()) {
    report.level = CertificateLevel::Sufficient;
    summary << report.expanded.members.size() << " real fields form a Hurwitz-Radon family";
  } else if (report.independence.independent) {
    report.level = CertificateLevel::SampledOnly;
    summary << "independent at " << report.independence.points_checked << " sampled points ("
            << report.hurwitz_radon.describe() << ")";
  } else {
    report.level = CertificateLevel::Fail;
    summary << "dependent at sample point " << *report.independence.witness << " (Gram determinant "
            << format_rational(report.independence.witness_determinant) << ")";
  }
  report.summary = summary.str();
  return report;
}

std::vector<std::vector<std::array<double, 4>>> GramSchmidtResult::normalized() const {
  std::vector<std::vector<std::array<double, 4>>> out;
  out.reserve(orthogonal.size());
  for (std::size_t l = 0; l < orthogonal.size(); ++l) {
    const double scale = 1.0 / std::sqrt(squared_norms[l].convert_to<double>());
    std::vector<std::array<double, 4>> v;
    for (const auto& q : orthogonal[l].components()) {
      v.push_back({q.a.convert_to<double>() * scale, q.b.convert_to<double>() * scale,
                   q.c.convert_to<double>() * scale, q.d.convert_to<double>() * scale});
    }
    out.push_back(std::move(v));
  }
  return out;
}

GramSchmidtResult gram_schmidt(const std::vector<FVectorQ>& vectors, FieldTag field) {
  GramSchmidtResult result;
  for (std::size_t l = 0; l < vectors.size(); ++l) {
    const FVectorQ& v = vectors[l];
    if (v.field() != field) throw DomainError("gram_schmidt: vector over the wrong field");
    FVectorQ w = v;
    std::vector<QuatScalar> coeffs;
    for (std::size_t k = 0; k < l; ++k) {
      const Rational inv_norm = Rational(1) / result.squared_norms[k];
      const QuatScalar c = inner(result.orthogonal[k], v) * inv_norm;
      w = w - alpha(result.orthogonal[k], c);
      coeffs.push_back(c);
    }
    const Rational norm2 = inner(w, w).a;
    if (norm2 == 0) {
      throw DomainError("gram_schmidt: input " + std::to_string(l) + " depends on the previous vectors");
    }
    result.orthogonal.push_back(std::move(w));
    result.squared_norms.push_back(norm2);
    result.coefficients.push_back(std::move(coeffs));
  }
  return result;
}

}  // namespace vfs
