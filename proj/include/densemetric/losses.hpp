#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "densemetric/errors.hpp"
#include "densemetric/vec.hpp"

namespace densemetric {

enum class MetricKind { squared_euclidean };

struct MetricConfig {
  MetricKind kind = MetricKind::squared_euclidean;
};

enum class LossVariant {
  triplet_vanilla,
  triplet_center,
  datl,
  daql,
  quadruplet_vanilla,
};

inline const char* to_string(LossVariant v) {
  switch (v) {
    case LossVariant::triplet_vanilla: return "triplet_vanilla";
    case LossVariant::triplet_center: return "triplet_center";
    case LossVariant::datl: return "datl";
    case LossVariant::daql: return "daql";
    case LossVariant::quadruplet_vanilla: return "quadruplet_vanilla";
  }
  return "?";
}

inline LossVariant loss_variant_from_string(std::string_view s) {
  if (s == "triplet_vanilla") return LossVariant::triplet_vanilla;
  if (s == "triplet_center") return LossVariant::triplet_center;
  if (s == "datl") return LossVariant::datl;
  if (s == "daql") return LossVariant::daql;
  if (s == "quadruplet_vanilla") return LossVariant::quadruplet_vanilla;
  throw InvalidInput("unknown loss variant '" + std::string(s) +
                     "' (valid: triplet_vanilla, triplet_center, datl, daql, quadruplet_vanilla)");
}

inline bool is_center_based(LossVariant v) {
  return v == LossVariant::triplet_center || v == LossVariant::datl || v == LossVariant::daql;
}

inline bool is_quadruplet(LossVariant v) {
  return v == LossVariant::daql || v == LossVariant::quadruplet_vanilla;
}

struct LossConfig {
  LossVariant variant = LossVariant::datl;
  double margin_alpha = 0.2;    // alpha for the single-hinge variants
  double margin_alpha1 = 0.2;   // first hinge of the quadruplet variants
  double margin_alpha2 = 0.1;   // second hinge, weaker by default
};

// Loss value plus gradients w.r.t. each embedding that participates.
// Gradients are exactly zero whenever the corresponding hinge is clamped.
struct LossResult {
  double value = 0.0;
  Vec grad_wrt_positive;
  Vec grad_wrt_negative;
  std::optional<Vec> grad_wrt_second_negative;
  std::optional<Vec> grad_wrt_anchor;
  bool active = false;
};

/// Squared Euclidean distance (no square root).
inline double distance(const Vec& x, const Vec& y) {
  check_same_dim(x, y, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

/// Anchor-based triplet hinge: [D(a,p) - D(a,n) + alpha]_+
inline LossResult triplet_loss(const Vec& anchor, const Vec& positive, const Vec& negative,
                               double alpha) {
  check_same_dim(anchor, positive, "triplet_loss");
  check_same_dim(anchor, negative, "triplet_loss");
  LossResult r;
  const double raw = distance(anchor, positive) - distance(anchor, negative) + alpha;
  const std::size_t dim = anchor.size();
  r.grad_wrt_positive.assign(dim, 0.0);
  r.grad_wrt_negative.assign(dim, 0.0);
  r.grad_wrt_anchor = Vec(dim, 0.0);
  if (raw > 0.0) {
    r.value = raw;
    r.active = true;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] = 2.0 * (positive[i] - anchor[i]);
      r.grad_wrt_negative[i] = -2.0 * (negative[i] - anchor[i]);
      (*r.grad_wrt_anchor)[i] = 2.0 * (negative[i] - positive[i]);
    }
  }
  return r;
}

/// Center-anchored hinge: [D(C,p) - D(C,n) + alpha]_+ with the center held
/// constant (no gradient flows into it).
inline LossResult datl_loss(const Vec& center, const Vec& positive, const Vec& negative,
                            double alpha) {
  check_same_dim(center, positive, "datl_loss");
  check_same_dim(center, negative, "datl_loss");
  LossResult r;
  const double raw = distance(center, positive) - distance(center, negative) + alpha;
  const std::size_t dim = center.size();
  r.grad_wrt_positive.assign(dim, 0.0);
  r.grad_wrt_negative.assign(dim, 0.0);
  if (raw > 0.0) {
    r.value = raw;
    r.active = true;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] = 2.0 * (positive[i] - center[i]);
      r.grad_wrt_negative[i] = -2.0 * (negative[i] - center[i]);
    }
  }
  return r;
}

/// Same hinge as datl_loss but fed the unshifted centroid; the baseline
/// "center triplet" formulation.
inline LossResult center_triplet_loss(const Vec& centroid, const Vec& positive,
                                      const Vec& negative, double alpha) {
  return datl_loss(centroid, positive, negative, alpha);
}

/// Two center-anchored hinges sharing the positive:
/// [D(C,p)-D(C,n1)+a1]_+ + [D(C,p)-D(C,n2)+a2]_+
inline LossResult daql_loss(const Vec& center, const Vec& positive, const Vec& negative,
                            const Vec& second_negative, double alpha1, double alpha2) {
  check_same_dim(center, positive, "daql_loss");
  check_same_dim(center, negative, "daql_loss");
  check_same_dim(center, second_negative, "daql_loss");
  LossResult r;
  const std::size_t dim = center.size();
  r.grad_wrt_positive.assign(dim, 0.0);
  r.grad_wrt_negative.assign(dim, 0.0);
  r.grad_wrt_second_negative = Vec(dim, 0.0);

  const double d_cp = distance(center, positive);
  const double term1 = d_cp - distance(center, negative) + alpha1;
  const double term2 = d_cp - distance(center, second_negative) + alpha2;

  if (term1 > 0.0) {
    r.value += term1;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] += 2.0 * (positive[i] - center[i]);
      r.grad_wrt_negative[i] = -2.0 * (negative[i] - center[i]);
    }
  }
  if (term2 > 0.0) {
    r.value += term2;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] += 2.0 * (positive[i] - center[i]);
      (*r.grad_wrt_second_negative)[i] = -2.0 * (second_negative[i] - center[i]);
    }
  }
  r.active = r.value > 0.0;
  return r;
}

/// Anchor-based quadruplet: the daql form with the sample anchor in place
/// of the class center. Baseline for the quadruplet comparisons.
inline LossResult quadruplet_loss(const Vec& anchor, const Vec& positive, const Vec& negative,
                                  const Vec& second_negative, double alpha1, double alpha2) {
  check_same_dim(anchor, positive, "quadruplet_loss");
  check_same_dim(anchor, negative, "quadruplet_loss");
  check_same_dim(anchor, second_negative, "quadruplet_loss");
  LossResult r;
  const std::size_t dim = anchor.size();
  r.grad_wrt_positive.assign(dim, 0.0);
  r.grad_wrt_negative.assign(dim, 0.0);
  r.grad_wrt_second_negative = Vec(dim, 0.0);
  r.grad_wrt_anchor = Vec(dim, 0.0);

  const double d_ap = distance(anchor, positive);
  const double term1 = d_ap - distance(anchor, negative) + alpha1;
  const double term2 = d_ap - distance(anchor, second_negative) + alpha2;

  if (term1 > 0.0) {
    r.value += term1;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] += 2.0 * (positive[i] - anchor[i]);
      r.grad_wrt_negative[i] = -2.0 * (negative[i] - anchor[i]);
      (*r.grad_wrt_anchor)[i] += 2.0 * (negative[i] - positive[i]);
    }
  }
  if (term2 > 0.0) {
    r.value += term2;
    for (std::size_t i = 0; i < dim; ++i) {
      r.grad_wrt_positive[i] += 2.0 * (positive[i] - anchor[i]);
      (*r.grad_wrt_second_negative)[i] = -2.0 * (second_negative[i] - anchor[i]);
      (*r.grad_wrt_anchor)[i] += 2.0 * (second_negative[i] - positive[i]);
    }
  }
  r.active = r.value > 0.0;
  return r;
}

}  // namespace densemetric
