#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobord/partition.hpp"
#include "cobord/ring.hpp"

namespace cobord {

/// Sum of line bundles over CP^base_l; degree d stands for the d-fold tensor
/// power of the dual Hopf bundle, degree 0 for a trivial summand.
struct LineBundleSum {
  int base_l = 1;
  std::vector<long> degrees;
};

enum class TangentKind { ComplexStableRoots, ExplicitPontryagin };

/// Stable tangent data. Roots are degree-2 Chern roots of a stable complex
/// structure (possibly more roots than the complex dimension; the extra ones are
/// stably trivial). Explicit data stores p_1..p_{dim/4}.
struct TangentData {
  TangentKind kind = TangentKind::ComplexStableRoots;
  std::vector<GradedElement> roots;
  std::vector<GradedElement> pontryagin;
};

struct ManifoldMetadata {
  bool spin = false;
  std::optional<std::string> curvature_certificate;
};

/// Closed oriented manifold described through its rational cohomology ring,
/// stable tangent data and fundamental class.
class ManifoldModel {
 public:
  ManifoldModel(std::string name, int real_dimension, RingPtr ring, TangentData tangent,
                Exponents pairing_monomial, ManifoldMetadata metadata);

  const std::string& name() const { return name_; }
  int real_dimension() const { return real_dimension_; }
  const RingPtr& ring() const { return ring_; }
  const TangentData& tangent() const { return tangent_; }
  const Exponents& pairing_monomial() const { return pairing_monomial_; }
  const ManifoldMetadata& metadata() const { return metadata_; }

  /// Number of stably trivial roots beyond the complex dimension (kind-1 only).
  int trivial_root_count() const;

 private:
  std::string name_;
  int real_dimension_;
  RingPtr ring_;
  TangentData tangent_;
  Exponents pairing_monomial_;
  ManifoldMetadata metadata_;
};

/// The 0-dimensional model (unit for products).
ManifoldModel build_point();
ManifoldModel build_cp(int n);
ManifoldModel build_hp(int n);
ManifoldModel build_proj_bundle(const LineBundleSum& bundle, std::string name = {});
ManifoldModel product(const ManifoldModel& m1, const ManifoldModel& m2);

/// Total Chern class of the bundle over its base ring, prod (1 + d_i b).
GradedElement bundle_chern_class(const LineBundleSum& bundle, const RingPtr& base_ring);

// The families of projectivized bundles E = sum of line bundles over CP^l.
ManifoldModel build_x12(long c);  // (c) + 3 trivial over CP^3
ManifoldModel build_y16(long c);  // (c) + (2c) + (-3c) + 1 trivial over CP^5
ManifoldModel build_z20(long c);  // (c) + 3 trivial over CP^7

/// 1 + p_1 + p_2 + ..., normalized in the manifold's ring.
GradedElement total_pontryagin(const ManifoldModel& m);

/// p_1..p_{dim/4} (index 0 holds p_1).
std::vector<GradedElement> pontryagin_classes(const ManifoldModel& m);

/// Evaluation on the fundamental class.
Rational pair(const ManifoldModel& m, const GradedElement& x);

/// Pontryagin number p_I[m] for a partition I of dim/4.
Rational pontryagin_number(const ManifoldModel& m, const Partition& index);

/// Sum of the stable Chern roots, i.e. c_1 of the stable complex structure.
GradedElement first_chern_class(const ManifoldModel& m);

bool is_spin(const ManifoldModel& m);

}  // namespace cobord
