#ifndef EVGAM_LINKS_HPP
#define EVGAM_LINKS_HPP

#include <cmath>
#include <string>

#include "evgam/errors.hpp"

namespace evgam {

enum class LinkKind { Logit, Log, Sqrt, Identity };

// Link g maps a dependence parameter theta (natural scale) to the additive
// predictor eta = g(theta). inv/dinv/d2inv are the pieces the chain rule
// needs: theta(eta), dtheta/deta, d2theta/deta2.
struct Link {
  LinkKind kind = LinkKind::Identity;

  double eta(double theta) const {
    switch (kind) {
      case LinkKind::Logit: return std::log(theta / (1.0 - theta));
      case LinkKind::Log: return std::log(theta);
      case LinkKind::Sqrt: return std::sqrt(theta);
      case LinkKind::Identity: return theta;
    }
    return theta;
  }
  double inv(double e) const {
    switch (kind) {
      case LinkKind::Logit: return 1.0 / (1.0 + std::exp(-e));
      case LinkKind::Log: return std::exp(e);
      case LinkKind::Sqrt: return e * e;
      case LinkKind::Identity: return e;
    }
    return e;
  }
  double dinv(double e) const {
    switch (kind) {
      case LinkKind::Logit: {
        double t = inv(e);
        return t * (1.0 - t);
      }
      case LinkKind::Log: return std::exp(e);
      case LinkKind::Sqrt: return 2.0 * e;
      case LinkKind::Identity: return 1.0;
    }
    return 1.0;
  }
  double d2inv(double e) const {
    switch (kind) {
      case LinkKind::Logit: {
        double t = inv(e);
        return t * (1.0 - t) * (1.0 - 2.0 * t);
      }
      case LinkKind::Log: return std::exp(e);
      case LinkKind::Sqrt: return 2.0;
      case LinkKind::Identity: return 0.0;
    }
    return 0.0;
  }
};

inline std::string to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Logit: return "logit";
    case LinkKind::Log: return "log";
    case LinkKind::Sqrt: return "sqrt";
    case LinkKind::Identity: return "identity";
  }
  return "identity";
}

inline LinkKind link_from_string(const std::string& s) {
  if (s == "logit") return LinkKind::Logit;
  if (s == "log") return LinkKind::Log;
  if (s == "sqrt") return LinkKind::Sqrt;
  if (s == "identity") return LinkKind::Identity;
  throw ArgumentError("unknown link function '" + s + "'");
}

}  // namespace evgam

#endif
