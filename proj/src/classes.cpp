#include "logcoeff/classes.hpp"

#include <cmath>
#include <sstream>

namespace logcoeff {

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::janowski: return "janowski";
    case ClassKind::spiral: return "spiral";
    case ClassKind::strongly_starlike: return "strongly_starlike";
    case ClassKind::F: return "F";
    case ClassKind::G: return "G";
  }
  return "?";
}

namespace {
Rational canon(Rational q) {
  q.canonicalize();
  return q;
}
}  // namespace

ClassSpec ClassSpec::janowski_spec(Rational a_re, Rational b, Rational a_im, int twist) {
  ClassSpec s;
  s.kind = ClassKind::janowski;
  s.A_re = canon(std::move(a_re));
  s.A_im = canon(std::move(a_im));
  s.B = canon(std::move(b));
  s.twist = twist;
  s.validate();
  return s;
}

ClassSpec ClassSpec::spiral_spec(double alpha, double beta, int twist) {
  ClassSpec s;
  s.kind = ClassKind::spiral;
  s.alpha = alpha;
  s.beta = beta;
  s.twist = twist;
  s.validate();
  return s;
}

ClassSpec ClassSpec::strongly_starlike_spec(Rational alpha, int twist) {
  ClassSpec s;
  s.kind = ClassKind::strongly_starlike;
  s.ss_alpha = canon(std::move(alpha));
  s.twist = twist;
  s.validate();
  return s;
}

ClassSpec ClassSpec::F_spec(Rational c, int twist) {
  ClassSpec s;
  s.kind = ClassKind::F;
  s.c = canon(std::move(c));
  s.twist = twist;
  s.validate();
  return s;
}

ClassSpec ClassSpec::G_spec(Rational c, int twist) {
  ClassSpec s;
  s.kind = ClassKind::G;
  s.c = canon(std::move(c));
  s.twist = twist;
  s.validate();
  return s;
}

void ClassSpec::validate() const {
  if (twist < 1) throw std::invalid_argument("twist must be a positive integer");
  switch (kind) {
    case ClassKind::janowski:
      if (B < -1 || B > 0) throw std::invalid_argument("janowski: -1 <= B <= 0 required");
      if (A_re == B && A_im == 0) throw std::invalid_argument("janowski: A != B required");
      return;
    case ClassKind::spiral:
      if (!(std::abs(alpha) < M_PI / 2)) throw std::invalid_argument("spiral: |alpha| < pi/2 required");
      if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("spiral: 0 <= beta < 1 required");
      return;
    case ClassKind::strongly_starlike:
      if (!(ss_alpha > 0 && ss_alpha <= 1))
        throw std::invalid_argument("strongly_starlike: 0 < alpha <= 1 required");
      return;
    case ClassKind::F:
      if (!(c > 0 && c <= 3)) throw std::invalid_argument("F: 0 < c <= 3 required");
      return;
    case ClassKind::G:
      if (!(c > 0 && c <= 1)) throw std::invalid_argument("G: 0 < c <= 1 required");
      return;
  }
  throw std::invalid_argument("unknown class kind");
}

bool ClassSpec::exact_capable() const {
  if (rotation != 0.0) return false;
  switch (kind) {
    case ClassKind::janowski: return A_im == 0;
    case ClassKind::spiral: return false;
    default: return true;
  }
}

std::string ClassSpec::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  switch (kind) {
    case ClassKind::janowski:
      os << "(A=" << to_string(A_re);
      if (A_im != 0) os << (A_im > 0 ? "+" : "") << to_string(A_im) << "i";
      os << ", B=" << to_string(B) << ")";
      break;
    case ClassKind::spiral:
      os << "(alpha=" << alpha << ", beta=" << beta << ")";
      break;
    case ClassKind::strongly_starlike:
      os << "(alpha=" << to_string(ss_alpha) << ")";
      break;
    case ClassKind::F:
    case ClassKind::G:
      os << "(c=" << to_string(c) << ")";
      break;
  }
  if (twist != 1) os << " twist=" << twist;
  if (rotation != 0.0) os << " rotation=" << rotation;
  return os.str();
}

}  // namespace logcoeff
